#pragma once

/// @file examples.hpp
/// Deterministic generators for worked examples and negative fixtures.

#include "mhgc/pi_coalgebra.hpp"

#include <string>
#include <vector>

namespace mhgc {

/// Functions on G in every degree, with Δ_{p,q}(f)(s,t) = f(q⁻¹ s q t).
/// Basis of each component: indicator functions δ_x in group-index order.
PiCoalgebra function_algebra_example(const FiniteGroup& g);

/// A single unital algebra with a coproduct Δ: A → A⊗A given as a
/// (dim² × dim) matrix.
struct HopfAlgebraData {
    ComponentAlgebra algebra;
    Matrix coproduct;
};

/// Group algebra with Δ(g) = g⊗g.
HopfAlgebraData group_algebra_hopf(const FiniteGroup& g);
/// Functions on G with Δ(f)(s,t) = f(st).
HopfAlgebraData function_algebra_hopf(const FiniteGroup& g);

/// Sweedler's four-dimensional Hopf algebra over ℚ: basis 1, g, x, gx with
/// g² = 1, x² = 0, xg = −gx, Δ(g) = g⊗g, Δ(x) = x⊗1 + g⊗x.
HopfAlgebraData sweedler_hopf();

/// The family over the one-element group with A_1 = data.algebra and
/// T¹(a⊗b) = Δ(a)(1⊗b), T²(a⊗b) = (a⊗1)Δ(b).
PiCoalgebra trivial_group_example(const HopfAlgebraData& data);

/// Keeps the components indexed by `keep` and zeroes the rest, slicing the
/// canonical maps accordingly.
PiCoalgebra restrict_support(const PiCoalgebra& pc, const std::vector<std::size_t>& keep);

/// Function-algebra family over `g` supported on the elements `h`. Throws
/// Error(NotASubgroup) unless `h` is a subgroup.
PiCoalgebra subgroup_supported_example(const FiniteGroup& g, const std::vector<std::size_t>& h);

enum class MutantKind { SwapT1Legs, ZeroRow, NonSubgroupSupport, DegenerateProduct };

MutantKind mutant_kind_from_string(const std::string& name);
std::string to_string(MutantKind kind);

/// Deliberately broken copies of a valid family.
///  - SwapT1Legs: t1 at (e,e) precomposed with the leg flip.
///  - ZeroRow: in every cell, rows of t1 and t2 whose first leg is not the
///    first basis vector are zeroed, i.e. Δ′(a) = (δ_e⊗1)Δ(a) on function algebras.
///  - NonSubgroupSupport: the identity component removed and Δ set to zero.
///  - DegenerateProduct: identity component given the zero product.
PiCoalgebra mutant_example(const PiCoalgebra& base, MutantKind kind);

}  // namespace mhgc
