#include "mhgc/modules.hpp"

#include "mhgc/error.hpp"
#include "mhgc/parallel.hpp"

#include "detail.hpp"

#include <algorithm>
#include <string>

namespace mhgc {

using detail::cell_name;
using detail::e;

Matrix AModule::action_of(std::size_t p, const Vector& a) const {
    const std::size_t r = dims[p];
    Matrix out(r, r);
    const Matrix& mu = action[p];
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (is_zero(a[k])) continue;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t x = 0; x < r; ++x) {
                const Scalar& m = mu(i, k * r + x);
                if (!is_zero(m)) out(i, x) += a[k] * m;
            }
    }
    return out;
}

Vector AModule::act(std::size_t p, const Vector& a, const Vector& x) const { return action_of(p, a) * x; }

void check_shape(const PiCoalgebra& pc, const AModule& r) {
    if (r.dims.size() != pc.order() || r.action.size() != pc.order())
        throw Error(ErrorCode::DimensionMismatch, "module has " + std::to_string(r.dims.size()) +
                                                      " components, group has order " +
                                                      std::to_string(pc.order()));
    for (std::size_t p = 0; p < pc.order(); ++p) {
        const Matrix& mu = r.action[p];
        if (mu.rows() != r.dims[p] || mu.cols() != pc.dim(p) * r.dims[p])
            throw Error(ErrorCode::DimensionMismatch, "action at " + pc.group().label(p) + " is " +
                                                          std::to_string(mu.rows()) + "x" +
                                                          std::to_string(mu.cols()));
    }
}

namespace {

std::vector<std::size_t> carrier_offsets(const AModule& r) {
    std::vector<std::size_t> off(r.order() + 1, 0);
    for (std::size_t p = 0; p < r.order(); ++p) off[p + 1] = off[p] + r.dims[p];
    return off;
}

// Right inverse W of μ_p, so that x = μ_p(W x) writes x as Σ e_c·w_c.
std::vector<std::optional<Matrix>> right_inverses(const AModule& r) {
    std::vector<std::optional<Matrix>> out(r.order());
    parallel_for(r.order(), [&](std::size_t p) { out[p] = solve(r.action[p], Matrix::identity(r.dims[p])); });
    return out;
}

const Matrix& require(const std::optional<Matrix>& w, const FiniteGroup& g, std::size_t p) {
    if (!w) throw Error(ErrorCode::NotUnital, "A_p R_p != R_p at p = " + g.label(p));
    return *w;
}

// Product of x ∈ R_p and y ∈ R_q in the carrier algebra, read on block pq.
class CarrierProduct {
public:
    CarrierProduct(const FiniteGroup& g, const AModuleAlgebra& r)
        : g_(g), alg_(r.algebra), off_(carrier_offsets(r.module)) {}

    Vector operator()(std::size_t p, const Vector& x, std::size_t q, const Vector& y) const {
        const std::size_t pq = g_.mul(p, q);
        Vector out(off_[pq + 1] - off_[pq]);
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (is_zero(x[i])) continue;
            for (std::size_t j = 0; j < y.size(); ++j) {
                if (is_zero(y[j])) continue;
                const Scalar c = x[i] * y[j];
                for (std::size_t k = 0; k < out.size(); ++k) {
                    const Scalar& s = alg_.c(off_[p] + i, off_[q] + j, off_[pq] + k);
                    if (!is_zero(s)) out[k] += c * s;
                }
            }
        }
        return out;
    }

private:
    const FiniteGroup& g_;
    const ComponentAlgebra& alg_;
    std::vector<std::size_t> off_;
};

// Δ_{p,q}(a)(x⊗y) given the matrix `la` of z ↦ Δ(a)z on A_p⊗A_q and the
// right inverses of both actions.
Vector pair_action(std::size_t dp, std::size_t dq, const Matrix& la, const Matrix& mup, const Matrix& wp,
                   const Matrix& muq, const Matrix& wq, const Vector& x, const Vector& y) {
    const std::size_t rp = mup.rows(), tq = muq.rows();
    const Vector xs = wp * x, ys = wq * y;
    // U[(u,v),(i,j)] = Σ_{c,d} Δ(a)(e_c⊗e_d)[(u,v)] xs[(c,i)] ys[(d,j)]
    const std::size_t legs = dp * dq, inner = rp * tq;
    std::vector<Scalar> u(legs * inner);
    for (std::size_t c = 0; c < dp; ++c)
        for (std::size_t d = 0; d < dq; ++d) {
            const Vector img = la.column(c * dq + d);
            for (std::size_t i = 0; i < rp; ++i) {
                const Scalar& xv = xs[c * rp + i];
                if (is_zero(xv)) continue;
                for (std::size_t j = 0; j < tq; ++j) {
                    const Scalar& yv = ys[d * tq + j];
                    if (is_zero(yv)) continue;
                    const Scalar w = xv * yv;
                    for (std::size_t uv = 0; uv < legs; ++uv)
                        if (!is_zero(img[uv])) u[uv * inner + i * tq + j] += w * img[uv];
                }
            }
        }
    Vector out(inner);
    for (std::size_t uu = 0; uu < dp; ++uu)
        for (std::size_t v = 0; v < dq; ++v)
            for (std::size_t i = 0; i < rp; ++i)
                for (std::size_t j = 0; j < tq; ++j) {
                    const Scalar& z = u[(uu * dq + v) * inner + i * tq + j];
                    if (is_zero(z)) continue;
                    for (std::size_t k = 0; k < rp; ++k) {
                        const Scalar& m1 = mup(k, uu * rp + i);
                        if (is_zero(m1)) continue;
                        for (std::size_t l = 0; l < tq; ++l) {
                            const Scalar& m2 = muq(l, v * tq + j);
                            if (!is_zero(m2)) out[k * tq + l] += z * m1 * m2;
                        }
                    }
                }
    return out;
}

Matrix delta_action(const std::vector<Matrix>& mats, std::size_t dd, const Vector& a) {
    Matrix out(dd, dd);
    for (std::size_t k = 0; k < a.size(); ++k)
        if (!is_zero(a[k])) out = out + scaled(mats[k], a[k]);
    return out;
}

// Σ_l Σ_{u,v} coef_l(u, v) μ(e_u ⊗ (W y(v))_l): a damped leg acting on a
// vector that depends linearly on the other leg. coef(l, u, v) returns the
// coefficient of e_u⊗(other leg e_v) in the damped tensor for e_l.
template <class Coef, class Inner>
Vector damped_leg_action(std::size_t d, std::size_t other, const Matrix& mu, const Matrix& w, Coef&& coef,
                         Inner&& inner) {
    const std::size_t r = mu.rows();
    std::vector<Vector> wy(other);
    for (std::size_t v = 0; v < other; ++v) wy[v] = w * inner(v);
    Vector out(r);
    for (std::size_t l = 0; l < d; ++l)
        for (std::size_t u = 0; u < d; ++u)
            for (std::size_t v = 0; v < other; ++v) {
                const Scalar c = coef(l, u, v);
                if (is_zero(c)) continue;
                for (std::size_t i = 0; i < r; ++i) {
                    const Scalar& z = wy[v][l * r + i];
                    if (is_zero(z)) continue;
                    for (std::size_t k = 0; k < r; ++k) {
                        const Scalar& m = mu(k, u * r + i);
                        if (!is_zero(m)) out[k] += c * z * m;
                    }
                }
            }
    return out;
}

}  // namespace

AModuleAlgebra make_module_algebra(const FiniteGroup& g, AModule module, ComponentAlgebra algebra,
                                   std::vector<std::size_t> labels) {
    if (module.order() != g.order())
        throw Error(ErrorCode::DimensionMismatch, "module has " + std::to_string(module.order()) + " components");
    const auto off = carrier_offsets(module);
    if (algebra.dim() != off.back() || labels.size() != off.back())
        throw Error(ErrorCode::NotGraded, "carrier of dimension " + std::to_string(off.back()) +
                                              " with algebra of dimension " + std::to_string(algebra.dim()) +
                                              " and " + std::to_string(labels.size()) + " labels");
    for (std::size_t p = 0; p < g.order(); ++p)
        for (std::size_t i = off[p]; i < off[p + 1]; ++i)
            if (labels[i] != p)
                throw Error(ErrorCode::NotGraded, "basis vector " + std::to_string(i) + " labelled " +
                                                      std::to_string(labels[i]) + " inside block " + g.label(p));
    const std::size_t n = algebra.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t pq = g.mul(labels[i], labels[j]);
            for (std::size_t k = 0; k < n; ++k)
                if (labels[k] != pq && !is_zero(algebra.c(i, j, k)))
                    throw Error(ErrorCode::NotGraded, "product of basis vectors " + std::to_string(i) + " and " +
                                                          std::to_string(j) + " leaves block " + g.label(pq));
        }
    return {std::move(module), std::move(algebra), std::move(labels)};
}

Report verify_module(const PiCoalgebra& pc, const AModule& r) {
    check_shape(pc, r);
    const auto& g = pc.group();
    const std::size_t n = g.order();
    Report rep;
    rep.title = "module";
    std::vector<std::string> assoc(n), unital(n), unit(n);
    std::vector<char> has_unit(n, 1), is_unital(n, 1);
    parallel_for(n, [&](std::size_t p) {
        const std::size_t d = pc.dim(p), rp = r.dims[p];
        const auto& ap = pc.component(p);
        std::vector<Matrix> m(d);
        for (std::size_t a = 0; a < d; ++a) m[a] = r.action_of(p, unit_vector(d, a));
        for (std::size_t a = 0; a < d && assoc[p].empty(); ++a)
            for (std::size_t b = 0; b < d && assoc[p].empty(); ++b) {
                const Matrix lhs = r.action_of(p, ap.basis_product(a, b));
                const Matrix rhs = m[a] * m[b];
                if (lhs == rhs)
                    continue;
                for (std::size_t x = 0; x < rp; ++x)
                    if (lhs.column(x) != rhs.column(x)) {
                        assoc[p] = g.label(p) + ": a=" + e(a) + " a'=" + e(b) + " x=" + e(x);
                        break;
                    }
            }
        if (rank(r.action[p]) != rp) {
            is_unital[p] = 0;
            unital[p] = g.label(p) + ": rank " + std::to_string(rank(r.action[p])) + " < " + std::to_string(rp);
        }
        const auto u = ap.unit();
        if (!u) {
            has_unit[p] = 0;
            return;
        }
        const Matrix one = r.action_of(p, *u);
        if (!one.is_identity())
            for (std::size_t x = 0; x < rp; ++x)
                if (one.column(x) != unit_vector(rp, x)) {
                    unit[p] = g.label(p) + ": 1x != x at x=" + e(x);
                    break;
                }
    });
    auto& as = rep.add("associativity");
    auto& un = rep.add("unital");
    as.cells = un.cells = n;
    for (std::size_t p = 0; p < n; ++p) {
        if (!assoc[p].empty()) as.fail(assoc[p]);
        if (!unital[p].empty()) un.fail(unital[p]);
    }
    const bool all_units = std::all_of(has_unit.begin(), has_unit.end(), [](char c) { return c != 0; });
    const bool all_unital = std::all_of(is_unital.begin(), is_unital.end(), [](char c) { return c != 0; });
    if (!all_units) {
        rep.skip("unit-acts-trivially", "some component has no unit");
    } else if (!all_unital) {
        rep.skip("unit-acts-trivially", "module not unital");
    } else {
        auto& ua = rep.add("unit-acts-trivially");
        ua.cells = n;
        for (std::size_t p = 0; p < n; ++p)
            if (!unit[p].empty()) ua.fail(unit[p]);
    }
    return rep;
}

Report verify_module_algebra(const PiCoalgebra& pc, const AModuleAlgebra& r) {
    check_shape(pc, r.module);
    const auto& g = pc.group();
    const std::size_t n = g.order();
    const AModule& m = r.module;
    const auto off = carrier_offsets(m);
    Report rep;
    rep.title = "module-algebra";

    auto& graded = rep.add("graded-product");
    graded.cells = n * n;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            const std::size_t pq = g.mul(p, q);
            bool ok = true;
            for (std::size_t i = off[p]; i < off[p + 1] && ok; ++i)
                for (std::size_t j = off[q]; j < off[q + 1] && ok; ++j)
                    for (std::size_t k = 0; k < r.algebra.dim(); ++k)
                        if ((k < off[pq] || k >= off[pq + 1]) && !is_zero(r.algebra.c(i, j, k))) {
                            graded.fail(cell_name(g, p, q) + ": x=" + e(i - off[p]) + " x'=" + e(j - off[q]));
                            ok = false;
                            break;
                        }
        }
    if (!graded.passed) {
        rep.skip("module-algebra-law", "product is not graded");
        return rep;
    }

    const auto w = right_inverses(m);
    if (std::any_of(w.begin(), w.end(), [](const auto& x) { return !x.has_value(); })) {
        rep.skip("module-algebra-law", "module not unital");
        return rep;
    }
    const CarrierProduct product(g, r);
    std::vector<std::string> wit(n * n);
    parallel_for(n * n, [&](std::size_t cell) {
        const std::size_t p = cell / n, q = cell % n, pq = g.mul(p, q);
        const std::size_t rp = m.dims[p], rq = m.dims[q], dpq = pc.dim(pq);
        if (rp == 0 || rq == 0) return;
        const auto mats = left_action_matrices(pc, p, q);
        for (std::size_t a = 0; a < dpq; ++a) {
            const Vector ea = unit_vector(dpq, a);
            const Matrix act = m.action_of(pq, ea);
            for (std::size_t x = 0; x < rp; ++x)
                for (std::size_t y = 0; y < rq; ++y) {
                    const Vector ex = unit_vector(rp, x), ey = unit_vector(rq, y);
                    const Vector lhs = act * product(p, ex, q, ey);
                    const Vector z = pair_action(pc.dim(p), pc.dim(q), mats[a], m.action[p], *w[p], m.action[q],
                                                 *w[q], ex, ey);
                    Vector rhs(m.dims[pq]);
                    for (std::size_t i = 0; i < rp; ++i)
                        for (std::size_t j = 0; j < rq; ++j)
                            if (!is_zero(z[i * rq + j]))
                                axpy(rhs, z[i * rq + j], product(p, unit_vector(rp, i), q, unit_vector(rq, j)));
                    if (lhs != rhs) {
                        wit[cell] = cell_name(g, p, q) + ": a=" + e(a) + " x=" + e(x) + " x'=" + e(y);
                        return;
                    }
                }
        }
    });
    auto& law = rep.add("module-algebra-law");
    law.cells = n * n;
    for (const auto& s : wit)
        if (!s.empty()) law.fail(s);
    return rep;
}

Vector damped_pair_action(const PiCoalgebra& pc, const AModule& r, const AModule& t, std::size_t p, std::size_t q,
                          const Vector& a, const Vector& x, const Vector& y) {
    check_shape(pc, r);
    check_shape(pc, t);
    const auto& g = pc.group();
    const auto wp = solve(r.action[p], Matrix::identity(r.dims[p]));
    const auto wq = solve(t.action[q], Matrix::identity(t.dims[q]));
    const std::size_t dp = pc.dim(p), dq = pc.dim(q);
    const Matrix la = delta_action(left_action_matrices(pc, p, q), dp * dq, a);
    return pair_action(dp, dq, la, r.action[p], require(wp, g, p), t.action[q], require(wq, g, q), x, y);
}

AModule tensor_module(const PiCoalgebra& pc, const AModule& r, const AModule& t) {
    check_shape(pc, r);
    check_shape(pc, t);
    const auto& g = pc.group();
    const std::size_t n = g.order();
    const auto wr = right_inverses(r), wt = right_inverses(t);
    for (std::size_t p = 0; p < n; ++p) {
        require(wr[p], g, p);
        require(wt[p], g, p);
    }
    AModule out;
    out.dims.assign(n, 0);
    out.action.resize(n);
    parallel_for(n, [&](std::size_t s) {
        std::vector<std::size_t> off(n + 1, 0);
        for (std::size_t p = 0; p < n; ++p) off[p + 1] = off[p] + r.dims[p] * t.dims[g.mul(g.inv(p), s)];
        const std::size_t dim = off[n], ds = pc.dim(s);
        Matrix mu(dim, ds * dim);
        for (std::size_t p = 0; p < n; ++p) {
            const std::size_t q = g.mul(g.inv(p), s), rp = r.dims[p], tq = t.dims[q];
            if (rp == 0 || tq == 0) continue;
            const auto mats = left_action_matrices(pc, p, q);
            for (std::size_t a = 0; a < ds; ++a) {
                for (std::size_t x = 0; x < rp; ++x)
                    for (std::size_t y = 0; y < tq; ++y) {
                        const Vector img = pair_action(pc.dim(p), pc.dim(q), mats[a], r.action[p], *wr[p],
                                                       t.action[q], *wt[q], unit_vector(rp, x), unit_vector(tq, y));
                        const std::size_t col = a * dim + off[p] + x * tq + y;
                        for (std::size_t k = 0; k < img.size(); ++k) mu(off[p] + k, col) = img[k];
                    }
            }
        }
        out.dims[s] = dim;
        out.action[s] = std::move(mu);
    });
    return out;
}

Report check_delta_span(const PiCoalgebra& pc) {
    const auto& g = pc.group();
    const std::size_t n = g.order();
    Report rep;
    rep.title = "delta-span";
    std::vector<std::string> wit(n * n);
    parallel_for(n * n, [&](std::size_t cell) {
        const std::size_t p = cell / n, q = cell % n, dd = pc.dim(p) * pc.dim(q);
        const auto mats = left_action_matrices(pc, p, q);
        const std::size_t rk = mats.empty() ? 0 : rank(hstack(mats, dd));
        if (rk != dd) wit[cell] = cell_name(g, p, q) + ": rank " + std::to_string(rk) + " < " + std::to_string(dd);
    });
    auto& c = rep.add("delta-span");
    c.cells = n * n;
    for (const auto& s : wit)
        if (!s.empty()) c.fail(s);
    return rep;
}

Report check_action_antipode_identities(const PiCoalgebra& pc, const OppositeMaps& op, const AModuleAlgebra& r,
                                        const AntipodeFamily& s) {
    check_shape(pc, r.module);
    const auto& g = pc.group();
    const std::size_t n = g.order();
    const AModule& m = r.module;
    Report rep;
    rep.title = "action-antipode";
    const auto w = right_inverses(m);
    const bool unital = std::all_of(w.begin(), w.end(), [](const auto& x) { return x.has_value(); });
    if (!unital || !s.element_valued()) {
        const std::string why = unital ? "antipode is not element-valued" : "module not unital";
        rep.skip("left-action-identity", why);
        rep.skip("right-action-identity", why);
        return rep;
    }
    const CarrierProduct product(g, r);
    std::vector<std::string> first(n * n), second(n * n);
    parallel_for(n * n, [&](std::size_t cell) {
        const std::size_t p = cell / n, q = cell % n, pq = g.mul(p, q);
        const std::size_t qi = g.inv(q), pi = g.inv(p);
        const std::size_t rp = m.dims[p], rq = m.dims[q], dpq = pc.dim(pq);
        const Matrix& mupq = m.action[pq];
        const Matrix& wpq = *w[pq];
        if (rp == 0 || rq == 0) return;

        // (ax)x′ with a ∈ A_p; the damped tensors are Δ_{pq,q⁻¹}(a)(e_l⊗1).
        {
            const std::size_t dp = pc.dim(p), dqi = pc.dim(qi);
            const Matrix& tp = op.t1p(pq, qi);  // A_p⊗A_{pq} → A_{q⁻¹}⊗A_{pq}
            const Matrix& sq = s.element(qi);   // A_{q⁻¹} → A_q
            for (std::size_t a = 0; a < dp && first[cell].empty(); ++a) {
                std::vector<Vector> cols(dpq);
                for (std::size_t l = 0; l < dpq; ++l) cols[l] = tp.column(a * dpq + l);
                const Matrix act = m.action_of(p, unit_vector(dp, a));
                for (std::size_t x = 0; x < rp && first[cell].empty(); ++x)
                    for (std::size_t y = 0; y < rq; ++y) {
                        const Vector ex = unit_vector(rp, x), ey = unit_vector(rq, y);
                        const Vector lhs = product(p, act.column(x), q, ey);
                        const Vector rhs = damped_leg_action(
                            dpq, dqi, mupq, wpq,
                            [&](std::size_t l, std::size_t u, std::size_t v) { return cols[l][v * dpq + u]; },
                            [&](std::size_t v) { return product(p, ex, q, m.act(q, sq.column(v), ey)); });
                        if (lhs != rhs) {
                            first[cell] = cell_name(g, p, q) + ": a=" + e(a) + " x=" + e(x) + " x'=" + e(y);
                            break;
                        }
                    }
            }
        }
        // x(ax′) with a ∈ A_q; the damped tensors are Δ_{p⁻¹,pq}(a)(1⊗e_l).
        {
            const std::size_t dq = pc.dim(q), dpi = pc.dim(pi);
            const Matrix& t1 = pc.t1(pi, pq);  // A_q⊗A_{pq} → A_{p⁻¹}⊗A_{pq}
            const Matrix& sp = s.element(pi);  // A_{p⁻¹} → A_p
            for (std::size_t a = 0; a < dq && second[cell].empty(); ++a) {
                std::vector<Vector> cols(dpq);
                for (std::size_t l = 0; l < dpq; ++l) cols[l] = t1.column(a * dpq + l);
                const Matrix act = m.action_of(q, unit_vector(dq, a));
                for (std::size_t x = 0; x < rp && second[cell].empty(); ++x)
                    for (std::size_t y = 0; y < rq; ++y) {
                        const Vector ex = unit_vector(rp, x), ey = unit_vector(rq, y);
                        const Vector lhs = product(p, ex, q, act.column(y));
                        const Vector rhs = damped_leg_action(
                            dpq, dpi, mupq, wpq,
                            [&](std::size_t l, std::size_t v, std::size_t u) { return cols[l][u * dpq + v]; },
                            [&](std::size_t u) { return product(p, m.act(p, sp.column(u), ex), q, ey); });
                        if (lhs != rhs) {
                            second[cell] = cell_name(g, p, q) + ": a=" + e(a) + " x=" + e(x) + " x'=" + e(y);
                            break;
                        }
                    }
            }
        }
    });
    auto& c1 = rep.add("left-action-identity");
    auto& c2 = rep.add("right-action-identity");
    c1.cells = c2.cells = n * n;
    for (std::size_t i = 0; i < n * n; ++i) {
        if (!first[i].empty()) c1.fail(first[i]);
        if (!second[i].empty()) c2.fail(second[i]);
    }
    return rep;
}

AModule regular_module(const PiCoalgebra& pc) {
    AModule out;
    for (std::size_t p = 0; p < pc.order(); ++p) {
        const auto& ap = pc.component(p);
        const std::size_t d = ap.dim();
        Matrix mu(d, d * d);
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t x = 0; x < d; ++x)
                for (std::size_t k = 0; k < d; ++k) mu(k, a * d + x) = ap.c(a, x, k);
        out.dims.push_back(d);
        out.action.push_back(std::move(mu));
    }
    return out;
}

AModule zero_module(const PiCoalgebra& pc) {
    AModule out;
    out.dims.assign(pc.order(), 0);
    for (std::size_t p = 0; p < pc.order(); ++p) out.action.emplace_back(0, 0);
    return out;
}

AModuleAlgebra trivial_module_algebra(const PiCoalgebra& pc, const Counit& eps) {
    AModule m = zero_module(pc);
    const std::size_t one = pc.group().identity(), d = pc.dim(one);
    if (eps.eps.size() != d)
        throw Error(ErrorCode::DimensionMismatch, "counit has " + std::to_string(eps.eps.size()) + " entries");
    m.dims[one] = 1;
    Matrix mu(1, d);
    for (std::size_t a = 0; a < d; ++a) mu(0, a) = eps.eps[a];
    m.action[one] = std::move(mu);
    return make_module_algebra(pc.group(), std::move(m), ComponentAlgebra(1, {Scalar(1)}), {one});
}

AModuleAlgebra grading_module_algebra(const PiCoalgebra& pc, const std::vector<std::size_t>& weight) {
    const auto& g = pc.group();
    const std::size_t n = g.order(), one = g.identity();
    if (pc.dim(one) != n || weight.size() != n)
        throw Error(ErrorCode::InvalidArgument, "grading module algebra needs dim A_e = |G| and one weight per element");
    AModule m = zero_module(pc);
    m.dims[one] = n;
    Matrix mu(n, n * n);
    for (std::size_t s = 0; s < n; ++s) mu(s, weight.at(s) * n + s) = 1;
    m.action[one] = std::move(mu);
    std::vector<Scalar> st(n * n * n);
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t) st[(s * n + t) * n + g.mul(s, t)] = 1;
    return make_module_algebra(g, std::move(m), ComponentAlgebra(n, std::move(st)),
                               std::vector<std::size_t>(n, one));
}

AModule reversed_action_mutant(const AModule& r, std::size_t p) {
    AModule out = r;
    const std::size_t rp = r.dims.at(p);
    if (rp == 0) return out;
    const std::size_t d = r.action[p].cols() / rp;
    Matrix& mu = out.action[p];
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t x = 0; x < rp; ++x)
            for (std::size_t k = 0; k < rp; ++k) mu(k, a * rp + x) = r.action[p](k, a * rp + (rp - 1 - x));
    return out;
}

}  // namespace mhgc
