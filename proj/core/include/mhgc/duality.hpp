#pragma once

/// @file duality.hpp
/// Dual algebra, invariant functionals, modular data and the hat dual.

#include "mhgc/cograded.hpp"
#include "mhgc/derived.hpp"

#include <vector>

namespace mhgc {

/// A* = ⊕ A_p* with (fg)(a) = (f⊗g)(Δ_{p,q}(a)), coordinates in dual bases.
struct DualAlgebra {
    FiniteGroup group;
    std::vector<std::size_t> dims;
    /// product[p·n + q] : A_p*⊗A_q* → A_{pq}*, size dim(pq) × dim(p)dim(q).
    std::vector<Matrix> product;

    const Matrix& prod(std::size_t p, std::size_t q) const { return product[p * group.order() + q]; }
    Vector multiply(std::size_t p, std::size_t q, const Vector& f, const Vector& g) const;
};

/// Builds the convolution product through the damped decomposition
/// g = Σ_k g_k(·e_k). Throws Error(NotNondegenerate) if some dual is not
/// spanned by damped functionals.
DualAlgebra dual_algebra(const PiCoalgebra& pc);

/// Associativity on all basis triples and ε as two-sided identity.
Report verify_dual_algebra(const DualAlgebra& dual, const Counit& eps);

/// S*: A_α* → A_{α⁻¹}*, (S*f)(a) = f(S_{α⁻¹}(a)). Entry p is dim(p⁻¹) × dim(p).
std::vector<Matrix> dual_antipode(const PiCoalgebra& pc, const AntipodeFamily& s);

/// S*(fg) = S*(g)S*(f) on all dual basis pairs.
Report verify_dual_antipode(const DualAlgebra& dual, const std::vector<Matrix>& sstar);

enum class Side { Left, Right };

/// φ_p per group element, coefficients on the basis of A_p.
struct InvariantFamily {
    Side side = Side::Left;
    std::vector<Vector> values;

    bool is_zero() const;
    InvariantFamily scaled(const Scalar& c) const;
};

/// Kernel basis of the invariance system:
///  left:  (I⊗φ_q)((b⊗1)Δ_{p,q}(a)) = φ_{pq}(a)b
///  right: (ψ_p⊗I)(Δ_{p,q}(a)(1⊗b)) = ψ_{pq}(a)b
std::vector<InvariantFamily> solve_invariant(const PiCoalgebra& pc, Side side);

/// True if `fam` satisfies its invariance system exactly.
bool is_invariant(const PiCoalgebra& pc, const InvariantFamily& fam);

/// (φ∘S)_p = φ_{p⁻¹}∘S_p, returned as a right-side family.
InvariantFamily compose_with_antipode(const PiCoalgebra& pc, const InvariantFamily& phi, const AntipodeFamily& s);

/// Gram matrix G[a][b] = φ_p(e_a e_b).
Matrix gram_matrix(const ComponentAlgebra& alg, const Vector& phi);

/// One-dimensional solution space, nonvanishing and faithful members.
Report check_uniqueness_faithfulness(const PiCoalgebra& pc, const std::vector<InvariantFamily>& fams);

/// φ∘S is right invariant and span{φ(a·)} = span{φ(·a)} = span{ψ(a·)} = span{ψ(·a)}.
Report check_invariant_spans(const PiCoalgebra& pc, const InvariantFamily& phi, const InvariantFamily& psi,
                             const AntipodeFamily& s);

/// D_q from (φ_p⊗I)(Δ_{p,q}(a)(1⊗b)) = φ_{pq}(a)D_q b.
/// Throws Error(Inconsistent) if no single multiplier fits.
std::vector<Multiplier> modular_element(const PiCoalgebra& pc, const InvariantFamily& phi);

/// Δ(D_{pq}) = D_p⊗D_q, ε(D_1) = 1, S_p(D_p) = D_{p⁻¹}⁻¹, φ_{p⁻¹}∘S_p = φ_p(·D_p).
Report verify_modular_element(const PiCoalgebra& pc, const InvariantFamily& phi, const std::vector<Multiplier>& d,
                              const Counit& eps, const AntipodeFamily& s);

struct ModularData {
    std::vector<Multiplier> d;
    std::vector<Matrix> sigma_mod;
    std::vector<Matrix> sigma_mod_prime;
    Scalar tau;
};

/// σ_p with φ_p(ab) = φ_p(bσ_p(a)), σ′_p likewise for ψ, and τ with
/// φ_p∘S_{p⁻¹}∘S_p = τφ_p. Throws Error(NotFaithful) or Error(TauInconsistent).
ModularData modular_automorphisms(const PiCoalgebra& pc, const InvariantFamily& phi, const InvariantFamily& psi,
                                  const AntipodeFamily& s, std::vector<Multiplier> d);

Report verify_modular_data(const PiCoalgebra& pc, const InvariantFamily& phi, const InvariantFamily& psi,
                           const AntipodeFamily& s, const ModularData& md);

/// Â = ⊕ A_p* as a family over the trivial group, with its invariant functionals.
struct HatDual {
    PiCoalgebra coalgebra;
    /// Group label of every basis functional of Â.
    std::vector<std::size_t> labels;
    InvariantFamily phi_hat;
    InvariantFamily psi_hat;
};

/// Throws Error(NotFaithful) when φ or ψ has a singular Gram matrix.
HatDual hat_dual(const PiCoalgebra& pc, const InvariantFamily& phi, const InvariantFamily& psi, const Counit& eps);

/// Axioms of Â and invariance of its functionals.
Report verify_hat_dual(const HatDual& hat);

/// Â̂ compared with A_G under the evaluation map, then split back and compared with pc.
Report bidual_isomorphism(const PiCoalgebra& pc);

}  // namespace mhgc
