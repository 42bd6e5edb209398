#pragma once

/// @file modules.hpp
/// Left modules and module algebras over a family {A_p}.

#include "mhgc/derived.hpp"

#include <vector>

namespace mhgc {

/// R = {R_p} with μ_p : A_p⊗R_p → R_p.
///
/// action[p] has r_p rows and d_p·r_p columns; column a·r_p + x holds μ_p(e_a⊗x_x).
struct AModule {
    std::vector<std::size_t> dims;
    std::vector<Matrix> action;

    std::size_t order() const noexcept { return dims.size(); }
    /// Matrix of x ↦ a·x on R_p.
    Matrix action_of(std::size_t p, const Vector& a) const;
    Vector act(std::size_t p, const Vector& a, const Vector& x) const;

    friend bool operator==(const AModule&, const AModule&) = default;
};

/// Throws Error(DimensionMismatch) if the shapes do not fit `pc`.
void check_shape(const PiCoalgebra& pc, const AModule& r);

/// A module whose total carrier ⊕R_p carries a product with R_p·R_q ⊆ R_{pq}.
///
/// The carrier basis is the concatenation of the R_p bases in group order and
/// labels[i] is the group element of basis vector i.
struct AModuleAlgebra {
    AModule module;
    ComponentAlgebra algebra;
    std::vector<std::size_t> labels;

    friend bool operator==(const AModuleAlgebra&, const AModuleAlgebra&) = default;
};

/// Validates labels and the graded product. Throws Error(NotGraded) naming the
/// first offending basis pair.
AModuleAlgebra make_module_algebra(const FiniteGroup& g, AModule module, ComponentAlgebra algebra,
                                   std::vector<std::size_t> labels);

/// Associativity, unitality by rank, and 1_p·x = x where A_p has a unit.
Report verify_module(const PiCoalgebra& pc, const AModule& r);

/// Graded product and a(xx′) = Σ(a_(1,p)x)(a_(2,q)x′) on all basis triples.
Report verify_module_algebra(const PiCoalgebra& pc, const AModuleAlgebra& r);

/// Δ_{p,q}(a)(x⊗y) for a ∈ A_{pq}, x ∈ R_p, y ∈ T_q, evaluated by writing x and
/// y as sums of A·R terms. Result indexed i·t_q + j. Throws Error(NotUnital).
Vector damped_pair_action(const PiCoalgebra& pc, const AModule& r, const AModule& t, std::size_t p, std::size_t q,
                          const Vector& a, const Vector& x, const Vector& y);

/// (R⊗T)_s = ⊕_p R_p⊗T_{p⁻¹s}, blocks in group order, with a(x⊗y) = Δ_{p,p⁻¹s}(a)(x⊗y).
/// Throws Error(NotUnital) unless both factors are unital.
AModule tensor_module(const PiCoalgebra& pc, const AModule& r, const AModule& t);

/// Δ_{p,q}(A_{pq})(A_p⊗A_q) = A_p⊗A_q on every cell.
Report check_delta_span(const PiCoalgebra& pc);

/// (ax)x′ = Σ a_(1,pq)(x(S_{q⁻¹}(a_(2,q⁻¹))x′)) for a ∈ A_p, and
/// x(ax′) = Σ a_(2,pq)((S_{p⁻¹}(a_(1,p⁻¹))x)x′) for a ∈ A_q.
/// Needs element-valued S and the opposite maps.
Report check_action_antipode_identities(const PiCoalgebra& pc, const OppositeMaps& op, const AModuleAlgebra& r,
                                        const AntipodeFamily& s);

/// R_p = A_p acting by multiplication.
AModule regular_module(const PiCoalgebra& pc);

/// R_p = 0 for all p.
AModule zero_module(const PiCoalgebra& pc);

/// R_e = scalars with a·1 = ε(a), R_p = 0 otherwise.
AModuleAlgebra trivial_module_algebra(const PiCoalgebra& pc, const Counit& eps);

/// R_e = the group algebra of G with δ_x·u_s = [x = weight[s]]u_s and R_p = 0
/// otherwise. Expects A_e to be the function algebra with basis δ_x. The
/// module-algebra law holds exactly when `weight` is a homomorphism.
AModuleAlgebra grading_module_algebra(const PiCoalgebra& pc, const std::vector<std::size_t>& weight);

/// μ′_p(a⊗x) = μ_p(a⊗Jx) on the given p, where J reverses the basis of R_p.
AModule reversed_action_mutant(const AModule& r, std::size_t p);

}  // namespace mhgc
