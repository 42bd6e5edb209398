#include "mhgc/examples.hpp"

#include "mhgc/error.hpp"

#include <algorithm>

namespace mhgc {

PiCoalgebra function_algebra_example(const FiniteGroup& g) {
    const std::size_t n = g.order();
    std::vector<ComponentAlgebra> comps(n, ComponentAlgebra::functions_on_points(n));
    std::vector<Matrix> t1(n * n), t2(n * n);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            const std::size_t qi = g.inv(q);
            // Δ(f)(s,t) = f(q⁻¹ s q t), evaluated on every point (s,t).
            auto delta_at = [&](std::size_t x, std::size_t s, std::size_t t) {
                return g.mul(g.mul(g.mul(qi, s), q), t) == x;
            };
            Matrix m1(n * n, n * n), m2(n * n, n * n);
            for (std::size_t s = 0; s < n; ++s)
                for (std::size_t t = 0; t < n; ++t)
                    for (std::size_t x = 0; x < n; ++x) {
                        if (!delta_at(x, s, t)) continue;
                        // Δ(δ_x)(1⊗δ_t) and (δ_s⊗1)Δ(δ_x) both keep the point (s,t).
                        m1(s * n + t, x * n + t) = 1;
                        m2(s * n + t, s * n + x) = 1;
                    }
            t1[p * n + q] = std::move(m1);
            t2[p * n + q] = std::move(m2);
        }
    return PiCoalgebra(g, std::move(comps), std::move(t1), std::move(t2));
}

HopfAlgebraData group_algebra_hopf(const FiniteGroup& g) {
    const std::size_t n = g.order();
    Matrix delta(n * n, n);
    for (std::size_t x = 0; x < n; ++x) delta(x * n + x, x) = 1;
    return {ComponentAlgebra::group_algebra(g), std::move(delta)};
}

HopfAlgebraData function_algebra_hopf(const FiniteGroup& g) {
    const std::size_t n = g.order();
    Matrix delta(n * n, n);
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t) delta(s * n + t, g.mul(s, t)) = 1;
    return {ComponentAlgebra::functions_on_points(n), std::move(delta)};
}

HopfAlgebraData sweedler_hopf() {
    // Basis order: 1, g, x, gx. Each word g^a x^b is (a, b).
    const std::size_t d = 4;
    auto word = [](std::size_t i) { return std::pair<int, int>(static_cast<int>(i & 1), static_cast<int>(i >> 1)); };
    auto index = [](int a, int b) { return static_cast<std::size_t>(a + 2 * b); };
    std::vector<Scalar> st(d * d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            auto [a1, b1] = word(i);
            auto [a2, b2] = word(j);
            if (b1 + b2 > 1) continue;
            // x g^a = (−1)^a g^a x
            const int sign = (b1 == 1 && a2 == 1) ? -1 : 1;
            st[(i * d + j) * d + index((a1 + a2) % 2, b1 + b2)] = sign;
        }
    Matrix delta(d * d, d);
    delta(0 * d + 0, 0) = 1;
    delta(1 * d + 1, 1) = 1;
    delta(2 * d + 0, 2) = 1;  // x⊗1
    delta(1 * d + 2, 2) = 1;  // g⊗x
    delta(3 * d + 1, 3) = 1;  // gx⊗g
    delta(0 * d + 3, 3) = 1;  // 1⊗gx
    return {ComponentAlgebra(d, std::move(st)), std::move(delta)};
}

PiCoalgebra trivial_group_example(const HopfAlgebraData& data) {
    const auto& a = data.algebra;
    const std::size_t d = a.dim();
    if (data.coproduct.rows() != d * d || data.coproduct.cols() != d)
        throw Error(ErrorCode::DimensionMismatch, "coproduct must be dim^2 x dim");
    Matrix t1(d * d, d * d), t2(d * d, d * d);
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y) {
            t1.set_column(x * d + y, apply_on_leg(a.right_mul(y), data.coproduct.column(x), d, 1));
            t2.set_column(x * d + y, apply_on_leg(a.left_mul(x), data.coproduct.column(y), 1, d));
        }
    return PiCoalgebra(FiniteGroup::trivial(), {a}, {std::move(t1)}, {std::move(t2)});
}

PiCoalgebra restrict_support(const PiCoalgebra& pc, const std::vector<std::size_t>& keep) {
    const auto& g = pc.group();
    const std::size_t n = g.order();
    std::vector<bool> kept(n, false);
    for (auto p : keep) {
        if (p >= n) throw Error(ErrorCode::InvalidArgument, "support element out of range");
        kept[p] = true;
    }
    std::vector<ComponentAlgebra> comps;
    for (std::size_t p = 0; p < n; ++p) comps.push_back(kept[p] ? pc.component(p) : ComponentAlgebra());
    auto dim = [&](std::size_t p) { return comps[p].dim(); };
    std::vector<Matrix> t1(n * n), t2(n * n);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            const std::size_t r = g.mul(p, q), c = p * n + q;
            const bool out = kept[p] && kept[q];
            const bool in1 = kept[r] && kept[q];
            const bool in2 = kept[p] && kept[r];
            t1[c] = out && in1 ? pc.t1(p, q) : Matrix(dim(p) * dim(q), dim(r) * dim(q));
            t2[c] = out && in2 ? pc.t2(p, q) : Matrix(dim(p) * dim(q), dim(p) * dim(r));
        }
    return PiCoalgebra(g, std::move(comps), std::move(t1), std::move(t2));
}

PiCoalgebra subgroup_supported_example(const FiniteGroup& g, const std::vector<std::size_t>& h) {
    auto pc = restrict_support(function_algebra_example(g), h);
    support_subgroup(pc);
    return pc;
}

MutantKind mutant_kind_from_string(const std::string& name) {
    if (name == "swap-t1-legs") return MutantKind::SwapT1Legs;
    if (name == "zero-row") return MutantKind::ZeroRow;
    if (name == "non-subgroup-support") return MutantKind::NonSubgroupSupport;
    if (name == "degenerate-product") return MutantKind::DegenerateProduct;
    throw Error(ErrorCode::InvalidArgument, "unknown mutant kind '" + name + "'");
}

std::string to_string(MutantKind kind) {
    switch (kind) {
        case MutantKind::SwapT1Legs: return "swap-t1-legs";
        case MutantKind::ZeroRow: return "zero-row";
        case MutantKind::NonSubgroupSupport: return "non-subgroup-support";
        case MutantKind::DegenerateProduct: return "degenerate-product";
    }
    return "unknown";
}

PiCoalgebra mutant_example(const PiCoalgebra& base, MutantKind kind) {
    const auto& g = base.group();
    const std::size_t n = g.order(), e = g.identity();
    std::vector<ComponentAlgebra> comps = base.components();
    std::vector<Matrix> t1 = base.t1_all(), t2 = base.t2_all();
    const std::size_t d = base.dim(e);
    switch (kind) {
        case MutantKind::SwapT1Legs:
            if (d == 0) throw Error(ErrorCode::InvalidArgument, "identity component is empty");
            t1[e * n + e] = t1[e * n + e] * flip_matrix(d, d);
            break;
        case MutantKind::ZeroRow: {
            // Δ′(a) = (e_0⊗1)Δ(a): still a coassociative homomorphism on
            // idempotent bases, but the canonical maps lose every row whose
            // first leg is not e_0.
            bool changed = false;
            for (std::size_t p = 0; p < n; ++p)
                for (std::size_t q = 0; q < n; ++q) {
                    const std::size_t dq = base.dim(q);
                    for (Matrix* m : {&t1[p * n + q], &t2[p * n + q]})
                        for (std::size_t r = dq; r < m->rows(); ++r)
                            for (std::size_t j = 0; j < m->cols(); ++j) {
                                changed = changed || !is_zero((*m)(r, j));
                                (*m)(r, j) = 0;
                            }
                }
            if (!changed) throw Error(ErrorCode::InvalidArgument, "no component of dimension two or more");
            break;
        }
        case MutantKind::NonSubgroupSupport: {
            // Without A_e no nonzero comultiplication is coassociative, so Δ is
            // dropped too; only the support closure is left to fail.
            if (n < 2) throw Error(ErrorCode::InvalidArgument, "needs a nontrivial group");
            std::vector<std::size_t> keep;
            for (std::size_t p = 0; p < n; ++p)
                if (p != e && base.dim(p) > 0) keep.push_back(p);
            const PiCoalgebra cut = restrict_support(base, keep);
            std::vector<Matrix> z1 = cut.t1_all(), z2 = cut.t2_all();
            for (auto* all : {&z1, &z2})
                for (auto& m : *all) m = Matrix(m.rows(), m.cols());
            return PiCoalgebra(g, cut.components(), std::move(z1), std::move(z2));
        }
        case MutantKind::DegenerateProduct:
            comps[e] = ComponentAlgebra::zero_product(d);
            break;
    }
    return PiCoalgebra(g, std::move(comps), std::move(t1), std::move(t2));
}

}  // namespace mhgc
