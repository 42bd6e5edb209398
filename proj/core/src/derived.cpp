#include "mhgc/derived.hpp"

#include "mhgc/error.hpp"
#include "mhgc/parallel.hpp"

#include "detail.hpp"

#include <functional>
#include <string>

namespace mhgc {

using detail::cell_name;
using detail::e;

namespace {

// Σ x[(u,v)] e_u e_v for x ∈ A⊗A.
Vector multiply_out(const ComponentAlgebra& a, const Vector& x) {
    const std::size_t d = a.dim();
    Vector out(d);
    for (std::size_t u = 0; u < d; ++u)
        for (std::size_t v = 0; v < d; ++v) {
            const Scalar& c = x[u * d + v];
            if (is_zero(c)) continue;
            for (std::size_t k = 0; k < d; ++k)
                if (!is_zero(a.c(u, v, k))) out[k] += c * a.c(u, v, k);
        }
    return out;
}

// (ε⊗I)x for x ∈ A_1⊗V.
Vector eps_first(const Vector& eps, const Vector& x, std::size_t dv) {
    Vector out(dv);
    for (std::size_t u = 0; u < eps.size(); ++u) {
        if (is_zero(eps[u])) continue;
        for (std::size_t v = 0; v < dv; ++v) out[v] += eps[u] * x[u * dv + v];
    }
    return out;
}

// (I⊗ε)x for x ∈ V⊗A_1.
Vector eps_second(const Vector& eps, const Vector& x, std::size_t du) {
    const std::size_t d1 = eps.size();
    Vector out(du);
    for (std::size_t u = 0; u < du; ++u)
        for (std::size_t v = 0; v < d1; ++v)
            if (!is_zero(eps[v])) out[u] += eps[v] * x[u * d1 + v];
    return out;
}

bool all_zero_dims(const PiCoalgebra& pc) {
    for (std::size_t p = 0; p < pc.order(); ++p)
        if (pc.dim(p) != 0) return false;
    return true;
}

using InverseAt = std::function<const Matrix&(std::size_t)>;

// S_p from the inverses of t1(p,p⁻¹) and t2(p⁻¹,p).
AntipodeFamily antipode_from(const PiCoalgebra& pc, const InverseAt& t1_inv, const InverseAt& t2_inv,
                             const Counit& eps) {
    const auto& g = pc.group();
    const std::size_t n = g.order();
    AntipodeFamily s;
    s.values.resize(n);
    s.elements.resize(n);
    std::vector<std::string> mismatch(n);
    parallel_for(n, [&](std::size_t p) {
        const std::size_t pi = g.inv(p);
        const std::size_t dp = pc.dim(p), dq = pc.dim(pi);
        const auto& target = pc.component(pi);
        auto& vals = s.values[p];
        vals.assign(dp, zero_multiplier(dq));
        if (dp == 0 || dq == 0) {
            s.elements[p] = Matrix(dq, dp);
            return;
        }
        const Matrix& i1 = t1_inv(p);  // A_p⊗A_{p⁻¹} → A_1⊗A_{p⁻¹}
        const Matrix& i2 = t2_inv(p);  // A_{p⁻¹}⊗A_p → A_{p⁻¹}⊗A_1
        Matrix elt(dq, dp);
        bool element_valued = true;
        for (std::size_t a = 0; a < dp; ++a) {
            Multiplier m{Matrix(dq, dq), Matrix(dq, dq)};
            for (std::size_t b = 0; b < dq; ++b) {
                m.left.set_column(b, eps_first(eps.eps, i1.column(a * dq + b), dq));
                m.right.set_column(b, eps_second(eps.eps, i2.column(b * dp + a), dq));
            }
            if (auto d = multiplier_defect(target, m)) {
                if (mismatch[p].empty()) mismatch[p] = "S_" + g.label(p) + "(" + e(a) + "): " + *d;
                return;
            }
            if (element_valued) {
                if (auto x = element_from_multiplier(target, m))
                    elt.set_column(a, *x);
                else
                    element_valued = false;
            }
            vals[a] = std::move(m);
        }
        if (element_valued) s.elements[p] = std::move(elt);
    });
    for (const auto& m : mismatch)
        if (!m.empty()) throw Error(ErrorCode::MultiplierMismatch, m);
    return s;
}

}  // namespace

// ---------------------------------------------------------------------- counit

Counit derive_counit(const PiCoalgebra& pc, const CanonicalInverses& inv) {
    const auto& g = pc.group();
    const std::size_t n = g.order(), one = g.identity(), d1 = pc.dim(one);
    Counit out;
    if (all_zero_dims(pc)) return out;
    if (d1 == 0) throw Error(ErrorCode::EmptyUnitComponent, "A_" + g.label(one) + " is zero but the family is not");

    std::vector<std::optional<Vector>> per(n);
    std::vector<std::string> not_scalar(n);
    parallel_for(n, [&](std::size_t p) {
        const std::size_t dp = pc.dim(p);
        if (dp == 0) return;
        const Matrix& im = inv.t1(one, p);  // A_1⊗A_p → A_p⊗A_p
        Vector lam(d1);
        for (std::size_t a = 0; a < d1; ++a) {
            Matrix ea(dp, dp);
            for (std::size_t b = 0; b < dp; ++b) ea.set_column(b, multiply_out(pc.component(p), im.column(a * dp + b)));
            const Scalar l = ea(0, 0);
            if (ea != scaled(Matrix::identity(dp), l)) {
                not_scalar[p] = "E_" + g.label(p) + "(" + e(a) + ") is not a scalar matrix";
                return;
            }
            lam[a] = l;
        }
        per[p] = std::move(lam);
    });
    for (const auto& w : not_scalar)
        if (!w.empty()) throw Error(ErrorCode::NotScalar, w);
    for (std::size_t p = 0; p < n; ++p) {
        if (!per[p]) continue;
        if (!per[one]) per[one] = per[p];
        if (*per[p] != *per[one])
            throw Error(ErrorCode::Inconsistent, "counit scalars differ between " + g.label(one) + " and " + g.label(p));
    }
    out.eps = *per[one];
    return out;
}

Counit derive_counit(const PiCoalgebra& pc) { return derive_counit(pc, invert_canonical_maps(pc)); }

Report check_counit(const PiCoalgebra& pc, const Counit& eps) {
    const auto& g = pc.group();
    const std::size_t n = g.order(), one = g.identity(), d1 = pc.dim(one);
    Report rep;
    rep.title = "counit";
    auto& mult = rep.add("multiplicative");
    mult.cells = 1;
    const auto& a1 = pc.component(one);
    for (std::size_t a = 0; a < d1 && mult.passed; ++a)
        for (std::size_t b = 0; b < d1; ++b)
            if (dot(eps.eps, a1.basis_product(a, b)) != eps.eps[a] * eps.eps[b]) {
                mult.fail("eps(" + e(a) + e(b) + ") != eps(" + e(a) + ")eps(" + e(b) + ")");
                break;
            }

    std::vector<std::string> right(n), left(n);
    parallel_for(n, [&](std::size_t p) {
        const std::size_t dp = pc.dim(p);
        const auto& ap = pc.component(p);
        const Matrix& t2 = pc.t2(p, one);  // A_p⊗A_p → A_p⊗A_1
        const Matrix& t1 = pc.t1(one, p);  // A_p⊗A_p → A_1⊗A_p
        for (std::size_t a = 0; a < dp; ++a)
            for (std::size_t b = 0; b < dp; ++b) {
                const Vector ab = ap.basis_product(a, b);
                if (right[p].empty() && eps_second(eps.eps, t2.column(a * dp + b), dp) != ab)
                    right[p] = g.label(p) + ": a=" + e(a) + " b=" + e(b);
                if (left[p].empty() && eps_first(eps.eps, t1.column(a * dp + b), dp) != ab)
                    left[p] = g.label(p) + ": a=" + e(a) + " b=" + e(b);
            }
    });
    auto& r = rep.add("right-counit-identity");
    auto& l = rep.add("left-counit-identity");
    r.cells = l.cells = n;
    for (std::size_t p = 0; p < n; ++p) {
        if (!right[p].empty()) r.fail(right[p]);
        if (!left[p].empty()) l.fail(left[p]);
    }
    return rep;
}

std::optional<std::pair<Vector, std::size_t>> solve_counit_identities(const PiCoalgebra& pc) {
    const auto& g = pc.group();
    const std::size_t one = g.identity(), d1 = pc.dim(one);
    std::vector<Vector> rows;
    Vector rhs;
    for (std::size_t p = 0; p < g.order(); ++p) {
        const std::size_t dp = pc.dim(p);
        const Matrix& t2 = pc.t2(p, one);
        const Matrix& t1 = pc.t1(one, p);
        for (std::size_t a = 0; a < dp; ++a)
            for (std::size_t b = 0; b < dp; ++b) {
                const Vector ab = pc.component(p).basis_product(a, b);
                const Vector x2 = t2.column(a * dp + b);
                const Vector x1 = t1.column(a * dp + b);
                for (std::size_t u = 0; u < dp; ++u) {
                    Vector row(d1);
                    for (std::size_t v = 0; v < d1; ++v) row[v] = x2[u * d1 + v];
                    rows.push_back(std::move(row));
                    rhs.push_back(ab[u]);
                    Vector row1(d1);
                    for (std::size_t v = 0; v < d1; ++v) row1[v] = x1[v * dp + u];
                    rows.push_back(std::move(row1));
                    rhs.push_back(ab[u]);
                }
            }
    }
    if (rows.empty()) return std::make_pair(Vector(d1), d1);
    const Matrix m = Matrix::from_rows(rows);
    auto x = solve(m, rhs);
    if (!x) return std::nullopt;
    return std::make_pair(std::move(*x), d1 - rank(m));
}

// -------------------------------------------------------------------- antipode

bool AntipodeFamily::element_valued() const {
    for (const auto& m : elements)
        if (!m) return false;
    return true;
}

const Matrix& AntipodeFamily::element(std::size_t p) const {
    if (!elements.at(p)) throw Error(ErrorCode::NotElement, "S at index " + std::to_string(p) + " is not element-valued");
    return *elements[p];
}

AntipodeFamily derive_antipode(const PiCoalgebra& pc, const CanonicalInverses& inv, const Counit& eps) {
    const auto& g = pc.group();
    return antipode_from(
        pc, [&](std::size_t p) -> const Matrix& { return inv.t1(p, g.inv(p)); },
        [&](std::size_t p) -> const Matrix& { return inv.t2(g.inv(p), p); }, eps);
}

Report check_antipode(const PiCoalgebra& pc, const Counit& eps, const AntipodeFamily& s) {
    const auto& g = pc.group();
    const std::size_t n = g.order(), one = g.identity(), d1 = pc.dim(one);
    Report rep;
    rep.title = "antipode";

    std::vector<std::string> anti(n), th_a(n), th_b(n);
    parallel_for(n, [&](std::size_t p) {
        const std::size_t dp = pc.dim(p);
        const auto& ap = pc.component(p);
        // S_p(e_i e_j) = S_p(e_j) S_p(e_i)
        const auto& vp = s.values[p];
        for (std::size_t i = 0; i < dp && anti[p].empty(); ++i)
            for (std::size_t j = 0; j < dp; ++j) {
                const Vector ij = ap.basis_product(i, j);
                Multiplier lhs = zero_multiplier(pc.dim(g.inv(p)));
                for (std::size_t k = 0; k < dp; ++k)
                    if (!is_zero(ij[k])) lhs = lhs + scaled(vp[k], ij[k]);
                if (lhs != compose_multipliers(vp[j], vp[i])) {
                    anti[p] = g.label(p) + ": a=" + e(i) + " b=" + e(j);
                    break;
                }
            }

        // α = p; a ∈ A_1, b, c ∈ A_α.
        const std::size_t pi = g.inv(p), dq = pc.dim(pi);
        const auto& sq = s.values[pi];  // S_{α⁻¹}(e_v), multipliers of A_α
        const Matrix& t2 = pc.t2(p, pi);  // A_α⊗A_1 → A_α⊗A_{α⁻¹}
        const Matrix& t1 = pc.t1(pi, p);  // A_1⊗A_α → A_{α⁻¹}⊗A_α
        for (std::size_t a = 0; a < d1; ++a)
            for (std::size_t b = 0; b < dp; ++b)
                for (std::size_t c = 0; c < dp; ++c) {
                    const Vector expect = scaled(ap.basis_product(c, b), eps.eps[a]);
                    if (th_a[p].empty()) {
                        const Vector x = t2.column(c * d1 + a);
                        Vector got(dp);
                        for (std::size_t u = 0; u < dp; ++u)
                            for (std::size_t v = 0; v < dq; ++v) {
                                const Scalar& xv = x[u * dq + v];
                                if (is_zero(xv)) continue;
                                axpy(got, xv, ap.left_mul(u) * sq[v].left.column(b));
                            }
                        if (got != expect) th_a[p] = g.label(p) + ": a=" + e(a) + " b=" + e(b) + " c=" + e(c);
                    }
                    if (th_b[p].empty()) {
                        const Vector x = t1.column(a * dp + b);
                        Vector got(dp);
                        for (std::size_t u = 0; u < dq; ++u)
                            for (std::size_t v = 0; v < dp; ++v) {
                                const Scalar& xv = x[u * dp + v];
                                if (is_zero(xv)) continue;
                                axpy(got, xv, ap.right_mul(v) * sq[u].right.column(c));
                            }
                        if (got != expect) th_b[p] = g.label(p) + ": a=" + e(a) + " b=" + e(b) + " c=" + e(c);
                    }
                }
    });
    auto& ah = rep.add("antihomomorphism");
    auto& ta = rep.add("right-antipode-identity");
    auto& tb = rep.add("left-antipode-identity");
    ah.cells = ta.cells = tb.cells = n;
    for (std::size_t p = 0; p < n; ++p) {
        if (!anti[p].empty()) ah.fail(anti[p]);
        if (!th_a[p].empty()) ta.fail(th_a[p]);
        if (!th_b[p].empty()) tb.fail(th_b[p]);
    }
    return rep;
}

AntipodeFamily derive_antipode_inverse(const PiCoalgebra& pc, const OppositeMaps& op, const Counit& eps,
                                       const AntipodeFamily& s) {
    const auto& g = pc.group();
    const std::size_t n = g.order();
    const PiCoalgebra& opc = op.coalgebra();
    std::vector<Matrix> i1(n), i2(n);
    for (std::size_t p = 0; p < n; ++p) {
        const std::size_t pi = g.inv(p);
        try {
            i1[p] = invert(opc.t1(p, pi));
            i2[p] = invert(opc.t2(pi, p));
        } catch (const Error&) {
            throw Error(ErrorCode::NotInvertible, "opposite canonical map at " + cell_name(g, p, pi) + " is singular");
        }
    }
    AntipodeFamily sp = antipode_from(
        opc, [&](std::size_t p) -> const Matrix& { return i1[p]; },
        [&](std::size_t p) -> const Matrix& { return i2[p]; }, eps);
    for (std::size_t p = 0; p < n; ++p) {
        if (!s.elements[p]) throw Error(ErrorCode::NotElement, "S_" + g.label(p) + " has a non-element value");
        if (!sp.elements[p]) throw Error(ErrorCode::NotElement, "S'_" + g.label(p) + " has a non-element value");
    }
    for (std::size_t p = 0; p < n; ++p) {
        const std::size_t pi = g.inv(p);
        const Matrix& sm = *s.elements[p];     // A_p → A_{p⁻¹}
        const Matrix& spm = *sp.elements[pi];  // A_{p⁻¹} → A_p
        if (!(spm * sm).is_identity() && pc.dim(p) > 0)
            throw Error(ErrorCode::NotInvertible, "S'_" + g.label(pi) + " S_" + g.label(p) + " is not the identity");
        if (!(sm * spm).is_identity() && pc.dim(pi) > 0)
            throw Error(ErrorCode::NotInvertible, "S_" + g.label(p) + " S'_" + g.label(pi) + " is not the identity");
    }
    return sp;
}

Report check_antipode_coproduct_identity(const PiCoalgebra& pc, const OppositeMaps& op, const AntipodeFamily& s) {
    const auto& g = pc.group();
    const std::size_t n = g.order();
    Report rep;
    rep.title = "antipode-coproduct";
    if (!s.element_valued()) {
        rep.skip("antipode-coproduct-identity", "antipode is not element-valued");
        return rep;
    }
    const PiCoalgebra& opc = op.coalgebra();
    std::vector<std::string> fail(n * n);
    parallel_for(n * n, [&](std::size_t cell) {
        const std::size_t al = cell / n, be = cell % n, ab = g.mul(al, be);
        const std::size_t ai = g.inv(al), bi = g.inv(be);
        const std::size_t da = pc.dim(al), dab = pc.dim(ab), dai = pc.dim(ai), dbi = pc.dim(bi);
        const Matrix& lhs_map = opc.t2(ai, bi);  // A_{α⁻¹}⊗A_{β⁻¹α⁻¹} → A_{α⁻¹}⊗A_{β⁻¹}
        const Matrix& rhs_map = opc.t1(be, al);  // A_{αβ}⊗A_α → A_β⊗A_α
        const Matrix sbs = kron(s.element(be), s.element(al));
        for (std::size_t a = 0; a < dab; ++a)
            for (std::size_t b = 0; b < da; ++b) {
                const Vector x = kron(s.element(al).column(b), s.element(ab).column(a));
                const Vector lhs = flip(lhs_map * x, dai, dbi);
                const Vector rhs = sbs * rhs_map.column(a * da + b);
                if (lhs != rhs) {
                    fail[cell] = cell_name(g, al, be) + ": a=" + e(a) + " b=" + e(b);
                    return;
                }
            }
    });
    auto& c = rep.add("antipode-coproduct-identity");
    c.cells = n * n;
    for (const auto& f : fail)
        if (!f.empty()) c.fail(f);
    return rep;
}

Report check_hopf_unital(const PiCoalgebra& pc, const CanonicalInverses& inv, const AntipodeFamily& s) {
    const auto& g = pc.group();
    const std::size_t n = g.order();
    Report rep;
    rep.title = "hopf-unital";
    auto& u = rep.add("unital-components");
    u.cells = n;
    std::vector<Vector> units(n);
    std::string missing;
    for (std::size_t p = 0; p < n; ++p) {
        auto one = pc.component(p).unit();
        if (!one) {
            if (missing.empty()) missing = g.label(p);
            continue;
        }
        units[p] = std::move(*one);
    }
    if (!missing.empty()) {
        u.note = "not unital: component " + missing + " has no identity";
        rep.skip("r1-closed-form", "family is not unital");
        rep.skip("r2-closed-form", "family is not unital");
        return rep;
    }
    u.note = all_zero_dims(pc) ? "unital (all components zero)" : "unital";

    std::vector<std::string> f1(n * n), f2(n * n);
    parallel_for(n * n, [&](std::size_t cell) {
        const std::size_t al = cell / n, be = cell % n, ab = g.mul(al, be);
        const std::size_t ai = g.inv(al), bi = g.inv(be);
        const std::size_t da = pc.dim(al), db = pc.dim(be), dab = pc.dim(ab);

        // R¹(a⊗b) = ((I⊗S_{β⁻¹})Δ_{αβ,β⁻¹}(a))(1⊗b), a ∈ A_α, b ∈ A_β.
        Matrix r1(dab * db, da * db);
        const Matrix& t1a = pc.t1(ab, bi);  // A_α⊗A_{β⁻¹} → A_{αβ}⊗A_{β⁻¹}
        const std::size_t dbi = pc.dim(bi);
        for (std::size_t a = 0; a < da; ++a) {
            const Vector x = t1a * kron(unit_vector(da, a), units[bi]);
            for (std::size_t b = 0; b < db; ++b) {
                Vector col(dab * db);
                for (std::size_t w = 0; w < dab; ++w)
                    for (std::size_t v = 0; v < dbi; ++v) {
                        const Scalar& xv = x[w * dbi + v];
                        if (is_zero(xv)) continue;
                        const Vector sb = s.values[bi][v].left.column(b);
                        for (std::size_t k = 0; k < db; ++k)
                            if (!is_zero(sb[k])) col[w * db + k] += xv * sb[k];
                    }
                r1.set_column(a * db + b, col);
            }
        }
        if (r1 != inv.t1(al, be)) f1[cell] = cell_name(g, al, be);

        // R²(a⊗b) = (a⊗1)((S_{α⁻¹}⊗I)Δ_{α⁻¹,αβ}(b)), a ∈ A_α, b ∈ A_β.
        Matrix r2(da * dab, da * db);
        const Matrix& t1b = pc.t1(ai, ab);  // A_β⊗A_{αβ} → A_{α⁻¹}⊗A_{αβ}
        const std::size_t dai = pc.dim(ai);
        for (std::size_t b = 0; b < db; ++b) {
            const Vector x = t1b * kron(unit_vector(db, b), units[ab]);
            for (std::size_t a = 0; a < da; ++a) {
                Vector col(da * dab);
                for (std::size_t w = 0; w < dai; ++w) {
                    const Vector as = s.values[ai][w].right.column(a);
                    for (std::size_t v = 0; v < dab; ++v) {
                        const Scalar& xv = x[w * dab + v];
                        if (is_zero(xv)) continue;
                        for (std::size_t k = 0; k < da; ++k)
                            if (!is_zero(as[k])) col[k * dab + v] += xv * as[k];
                    }
                }
                r2.set_column(a * db + b, col);
            }
        }
        if (r2 != inv.t2(al, be)) f2[cell] = cell_name(g, al, be);
    });
    auto& c1 = rep.add("r1-closed-form");
    auto& c2 = rep.add("r2-closed-form");
    c1.cells = c2.cells = n * n;
    for (std::size_t c = 0; c < n * n; ++c) {
        if (!f1[c].empty()) c1.fail(f1[c]);
        if (!f2[c].empty()) c2.fail(f2[c]);
    }
    return rep;
}

}  // namespace mhgc
