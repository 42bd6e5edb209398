#pragma once

/// @file cograded.hpp
/// The direct-sum algebra A_G = ⊕A_p with its comultiplication and the
/// grading map γ: K(G) → M(A_G).

#include "mhgc/derived.hpp"

#include <vector>

namespace mhgc {

/// Group-cograded multiplier Hopf algebra over a finite group.
///
/// Basis: the component bases concatenated in group-index order. t1g and t2g
/// are the canonical maps of Δ_G on A_G⊗A_G (index i·N + j, N = dim A_G).
struct CogradedMHA {
    FiniteGroup group;
    ComponentAlgebra algebra;
    /// Group label of every basis vector.
    std::vector<std::size_t> labels;
    SparseMatrix t1g;
    SparseMatrix t2g;
    /// gamma[p] = γ(δ_p).
    std::vector<Multiplier> gamma;

    std::size_t dim() const noexcept { return algebra.dim(); }
    /// γ(f) for f given by its values on the group.
    Multiplier gamma_of(const Vector& f) const;

    friend bool operator==(const CogradedMHA& a, const CogradedMHA& b) {
        return a.group == b.group && a.algebra == b.algebra && a.labels == b.labels && a.t1g == b.t1g &&
               a.t2g == b.t2g && a.gamma == b.gamma;
    }
};

/// Offset of the block of p inside A_G.
std::vector<std::size_t> block_offsets(const PiCoalgebra& pc);

CogradedMHA to_cograded(const PiCoalgebra& pc);

/// Homomorphism, nondegeneracy, centrality and compatibility with Δ_G.
Report verify_gamma(const CogradedMHA& cm);

/// Components A_p = A_G γ(δ_p) with canonical maps cut out of t1g and t2g.
/// Throws Error(BlockLeak) if t1g or t2g does not respect the decomposition.
PiCoalgebra from_cograded(const CogradedMHA& cm);

/// Counit and antipode derived on A_G, compared with the componentwise ones.
Report componentwise_structure(const CogradedMHA& cm, const PiCoalgebra& pc, const Counit& eps,
                               const AntipodeFamily& s);

/// Regularity of A_G computed on the direct sum, compared with verify_regularity(pc).
Report verify_regularity_transfer(const PiCoalgebra& pc, const CogradedMHA& cm);

/// A_G as a family over the trivial group with dense canonical maps.
PiCoalgebra to_trivial_group(const CogradedMHA& cm);

}  // namespace mhgc
