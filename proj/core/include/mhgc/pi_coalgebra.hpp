#pragma once

/// @file pi_coalgebra.hpp
/// Families {A_p} with a comultiplication stored through its canonical maps.

#include "mhgc/algebra.hpp"
#include "mhgc/report.hpp"

#include <optional>
#include <vector>

namespace mhgc {

/// Data of a multiplier Hopf group coalgebra candidate.
///
/// t1(p,q) : A_{pq} ⊗ A_q → A_p ⊗ A_q,  a⊗b ↦ Δ_{p,q}(a)(1⊗b)
/// t2(p,q) : A_p ⊗ A_{pq} → A_p ⊗ A_q,  a⊗b ↦ (a⊗1)Δ_{p,q}(b)
///
/// Tensor index of (i, j) in V⊗W is i·dim(W) + j.
class PiCoalgebra {
public:
    PiCoalgebra() = default;
    /// t1 and t2 are indexed by p·|G| + q. Throws Error(DimensionMismatch) naming the cell.
    PiCoalgebra(FiniteGroup group, std::vector<ComponentAlgebra> components, std::vector<Matrix> t1,
                std::vector<Matrix> t2);

    const FiniteGroup& group() const noexcept { return group_; }
    std::size_t order() const noexcept { return group_.order(); }
    const ComponentAlgebra& component(std::size_t p) const { return components_[p]; }
    const std::vector<ComponentAlgebra>& components() const noexcept { return components_; }
    std::size_t dim(std::size_t p) const { return components_[p].dim(); }
    std::size_t cell(std::size_t p, std::size_t q) const { return p * order() + q; }

    const Matrix& t1(std::size_t p, std::size_t q) const { return t1_[cell(p, q)]; }
    const Matrix& t2(std::size_t p, std::size_t q) const { return t2_[cell(p, q)]; }
    const std::vector<Matrix>& t1_all() const noexcept { return t1_; }
    const std::vector<Matrix>& t2_all() const noexcept { return t2_; }

    friend bool operator==(const PiCoalgebra& a, const PiCoalgebra& b) {
        return a.group_ == b.group_ && a.components_ == b.components_ && a.t1_ == b.t1_ && a.t2_ == b.t2_;
    }

private:
    FiniteGroup group_;
    std::vector<ComponentAlgebra> components_;
    std::vector<Matrix> t1_;
    std::vector<Matrix> t2_;
};

/// Δ_{p,q}(a)·x for a ∈ A_{pq}, x ∈ A_p⊗A_q.
Vector delta_left_action(const PiCoalgebra& pc, std::size_t p, std::size_t q, const Vector& a, const Vector& x);
/// x·Δ_{p,q}(a).
Vector delta_right_action(const PiCoalgebra& pc, std::size_t p, std::size_t q, const Vector& a, const Vector& x);
/// Matrices of x ↦ Δ(e_k)x, one per basis vector of A_{pq}.
std::vector<Matrix> left_action_matrices(const PiCoalgebra& pc, std::size_t p, std::size_t q);
/// Matrices of x ↦ xΔ(e_k).
std::vector<Matrix> right_action_matrices(const PiCoalgebra& pc, std::size_t p, std::size_t q);
/// Δ_{p,q}(a) as a multiplier of A_p⊗A_q.
Multiplier delta_multiplier(const PiCoalgebra& pc, std::size_t p, std::size_t q, const Vector& a);

/// Associativity and nondegeneracy of every component.
Report verify_nondegeneracy(const PiCoalgebra& pc);

/// Homomorphism, multiplier coherence and damped coassociativity, over all basis tuples.
Report verify_comultiplication(const PiCoalgebra& pc);

/// Inverses of the canonical maps, per cell.
struct CanonicalInverses {
    std::vector<Matrix> t1_inv;
    std::vector<Matrix> t2_inv;
    std::size_t order = 0;

    const Matrix& t1(std::size_t p, std::size_t q) const { return t1_inv[p * order + q]; }
    const Matrix& t2(std::size_t p, std::size_t q) const { return t2_inv[p * order + q]; }
};

/// Per-cell bijectivity verdicts. When every map is invertible and `out` is
/// non-null, the inverses are stored there.
Report verify_bijectivity(const PiCoalgebra& pc, CanonicalInverses* out = nullptr);
/// Throws Error(SingularMatrix) naming the first non-bijective cell.
CanonicalInverses invert_canonical_maps(const PiCoalgebra& pc);

/// The flipped comultiplication Δ′ = flip∘Δ packaged as a family over the
/// opposite group: Δ′_{α,β} takes values in A_β⊗A_α, so its canonical maps
/// sit in cell (β,α) of `coalgebra`.
class OppositeMaps {
public:
    explicit OppositeMaps(PiCoalgebra coalgebra) : coalgebra_(std::move(coalgebra)) {}

    const PiCoalgebra& coalgebra() const noexcept { return coalgebra_; }
    /// T′¹_{α,β} : A_{αβ}⊗A_α → A_β⊗A_α, a⊗b ↦ Δ′(a)(1⊗b).
    const Matrix& t1p(std::size_t alpha, std::size_t beta) const { return coalgebra_.t1(beta, alpha); }
    /// T′²_{α,β} : A_β⊗A_{αβ} → A_β⊗A_α, a⊗b ↦ (a⊗1)Δ′(b).
    const Matrix& t2p(std::size_t alpha, std::size_t beta) const { return coalgebra_.t2(beta, alpha); }

private:
    PiCoalgebra coalgebra_;
};

/// Computes Δ′ from Δ. Throws Error(RangeFailure) if some Δ(a)(b⊗1) or
/// (1⊗a)Δ(b) is not an element of the tensor product.
OppositeMaps build_opposite(const PiCoalgebra& pc);
/// Range conditions, then the comultiplication and bijectivity suites for Δ′.
Report verify_regularity(const PiCoalgebra& pc);

/// {p : A_p ≠ 0}, sorted. Throws Error(NotASubgroup) if it is not closed.
std::vector<std::size_t> support_subgroup(const PiCoalgebra& pc);

}  // namespace mhgc
