#pragma once

/// @file derived.hpp
/// Counit and antipode obtained from the inverses of the canonical maps.

#include "mhgc/pi_coalgebra.hpp"

#include <optional>
#include <vector>

namespace mhgc {

/// ε as a coefficient vector on the basis of A_1.
struct Counit {
    Vector eps;
};

/// E_p(a)b = m_p (T¹_{1,p})⁻¹(a⊗b) must be a scalar multiple of the identity,
/// with the same scalar for every nonzero component.
/// Throws Error(EmptyUnitComponent), Error(NotScalar) or Error(Inconsistent).
Counit derive_counit(const PiCoalgebra& pc, const CanonicalInverses& inv);
Counit derive_counit(const PiCoalgebra& pc);

/// Multiplicativity on A_1 and both counit identities
/// (I⊗ε)((a⊗1)Δ_{p,1}(b)) = ab and (ε⊗I)(Δ_{1,p}(a)(1⊗b)) = ab.
Report check_counit(const PiCoalgebra& pc, const Counit& eps);

/// Solves the two counit identities as a linear system in ε.
/// Returns the particular solution and the dimension of the solution space's
/// homogeneous part, or nullopt if inconsistent.
std::optional<std::pair<Vector, std::size_t>> solve_counit_identities(const PiCoalgebra& pc);

/// S_p : A_p → M(A_{p⁻¹}).
struct AntipodeFamily {
    /// values[p][i] = S_p(e_i), a multiplier of A_{p⁻¹}.
    std::vector<std::vector<Multiplier>> values;
    /// elements[p] : A_p → A_{p⁻¹} (dim(p⁻¹) × dim(p)) when every value is an element.
    std::vector<std::optional<Matrix>> elements;

    bool element_valued() const;
    const Matrix& element(std::size_t p) const;
};

/// S_p(a)b = (ε⊗I)(T¹_{p,p⁻¹})⁻¹(a⊗b) and bS_p(a) = (I⊗ε)(T²_{p⁻¹,p})⁻¹(b⊗a).
/// Throws Error(MultiplierMismatch) if the two maps do not form a multiplier.
AntipodeFamily derive_antipode(const PiCoalgebra& pc, const CanonicalInverses& inv, const Counit& eps);

/// Antihomomorphism law and both antipode identities over all basis triples.
Report check_antipode(const PiCoalgebra& pc, const Counit& eps, const AntipodeFamily& s);

/// Antipode of the opposite comultiplication, checked to invert S.
/// Throws Error(NotElement) or Error(NotInvertible).
AntipodeFamily derive_antipode_inverse(const PiCoalgebra& pc, const OppositeMaps& op, const Counit& eps,
                                       const AntipodeFamily& s);

/// (1⊗S_α(b))Δ_{β⁻¹,α⁻¹}(S_{αβ}(a)) = (S_β⊗S_α)(Δ′_{α,β}(a)(1⊗b)).
Report check_antipode_coproduct_identity(const PiCoalgebra& pc, const OppositeMaps& op, const AntipodeFamily& s);

/// Unit detection per component and, when all components are unital, the
/// closed forms of the inverse canonical maps.
Report check_hopf_unital(const PiCoalgebra& pc, const CanonicalInverses& inv, const AntipodeFamily& s);

}  // namespace mhgc
