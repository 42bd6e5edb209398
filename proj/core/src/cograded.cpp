#include "mhgc/cograded.hpp"

#include "mhgc/error.hpp"
#include "mhgc/parallel.hpp"

#include "detail.hpp"

#include <map>
#include <string>

namespace mhgc {

using detail::e;

namespace {

using Entries = std::vector<SparseMatrix::Entry>;
using Accum = std::map<std::size_t, Scalar>;

Entries to_entries(const Accum& acc) {
    Entries out;
    for (const auto& [i, v] : acc)
        if (!is_zero(v)) out.emplace_back(i, v);
    return out;
}

Entries sparse_of(const Vector& v) {
    Entries out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!is_zero(v[i])) out.emplace_back(i, v[i]);
    return out;
}

// Σ x_i y_j · t(:, i·N + j) for sparse x, y.
Entries apply_to_pure(const SparseMatrix& t, const Entries& x, const Entries& y, std::size_t n) {
    Accum acc;
    for (const auto& [i, xi] : x)
        for (const auto& [j, yj] : y)
            for (const auto& [r, v] : t.column(i * n + j)) acc[r] += xi * yj * v;
    return to_entries(acc);
}

// (L ⊗ M) applied to a sparse tensor.
Entries apply_pair(const SparseMatrix& l, const SparseMatrix& m, const Entries& x, std::size_t n) {
    Accum acc;
    for (const auto& [idx, v] : x) {
        const std::size_t u = idx / n, w = idx % n;
        for (const auto& [u2, lv] : l.column(u))
            for (const auto& [w2, mv] : m.column(w)) acc[u2 * n + w2] += v * lv * mv;
    }
    return to_entries(acc);
}

// Σ x[(u,v)] e_u e_v in a.
Vector multiply_out(const ComponentAlgebra& a, const Entries& x) {
    const std::size_t n = a.dim();
    Vector out(n);
    for (const auto& [idx, v] : x) {
        const std::size_t u = idx / n, w = idx % n;
        for (std::size_t k = 0; k < n; ++k)
            if (!is_zero(a.c(u, w, k))) out[k] += v * a.c(u, w, k);
    }
    return out;
}

std::string label_of(const CogradedMHA& cm, std::size_t i) {
    return e(i) + "@" + cm.group.label(cm.labels[i]);
}

std::vector<std::vector<std::size_t>> indices_by_label(const CogradedMHA& cm) {
    std::vector<std::vector<std::size_t>> out(cm.group.order());
    for (std::size_t i = 0; i < cm.labels.size(); ++i) out[cm.labels[i]].push_back(i);
    return out;
}

}  // namespace

Multiplier CogradedMHA::gamma_of(const Vector& f) const {
    if (f.size() != group.order()) throw Error(ErrorCode::DimensionMismatch, "function length differs from group order");
    Multiplier m = zero_multiplier(dim());
    for (std::size_t p = 0; p < f.size(); ++p)
        if (!is_zero(f[p])) m = m + scaled(gamma[p], f[p]);
    return m;
}

std::vector<std::size_t> block_offsets(const PiCoalgebra& pc) {
    std::vector<std::size_t> off(pc.order() + 1);
    for (std::size_t p = 0; p < pc.order(); ++p) off[p + 1] = off[p] + pc.dim(p);
    return off;
}

CogradedMHA to_cograded(const PiCoalgebra& pc) {
    const auto& g = pc.group();
    const std::size_t n = g.order();
    const auto off = block_offsets(pc);
    const std::size_t dim = off[n];
    CogradedMHA cm;
    cm.group = g;
    cm.algebra = direct_sum(pc.components());
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t i = 0; i < pc.dim(p); ++i) cm.labels.push_back(p);
    cm.t1g = SparseMatrix(dim * dim, dim * dim);
    cm.t2g = SparseMatrix(dim * dim, dim * dim);

    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) {
            const std::size_t dr = pc.dim(r), ds = pc.dim(s);
            // T₁(a⊗b)(p,q) = T¹_{p,q}(a(pq)⊗b(q)): input block (r,s) lands in (r s⁻¹, s).
            {
                const std::size_t p = g.mul(r, g.inv(s)), q = s, dq = pc.dim(q);
                const Matrix& t = pc.t1(p, q);
                for (std::size_t x = 0; x < dr; ++x)
                    for (std::size_t y = 0; y < ds; ++y) {
                        Entries col;
                        for (std::size_t row = 0; row < t.rows(); ++row) {
                            const Scalar& v = t(row, x * ds + y);
                            if (!is_zero(v)) col.emplace_back((off[p] + row / dq) * dim + off[q] + row % dq, v);
                        }
                        cm.t1g.set_column((off[r] + x) * dim + off[s] + y, std::move(col));
                    }
            }
            // T₂(a⊗b)(p,q) = T²_{p,q}(a(p)⊗b(pq)): input block (r,s) lands in (r, r⁻¹s).
            {
                const std::size_t p = r, q = g.mul(g.inv(r), s), dq = pc.dim(q);
                const Matrix& t = pc.t2(p, q);
                for (std::size_t x = 0; x < dr; ++x)
                    for (std::size_t y = 0; y < ds; ++y) {
                        Entries col;
                        for (std::size_t row = 0; row < t.rows(); ++row) {
                            const Scalar& v = t(row, x * ds + y);
                            if (!is_zero(v)) col.emplace_back((off[p] + row / dq) * dim + off[q] + row % dq, v);
                        }
                        cm.t2g.set_column((off[r] + x) * dim + off[s] + y, std::move(col));
                    }
            }
        }

    for (std::size_t p = 0; p < n; ++p) {
        Matrix proj(dim, dim);
        for (std::size_t i = off[p]; i < off[p + 1]; ++i) proj(i, i) = 1;
        cm.gamma.push_back({proj, proj});
    }
    return cm;
}

Report verify_gamma(const CogradedMHA& cm) {
    const auto& g = cm.group;
    const std::size_t n = g.order(), dim = cm.dim();
    Report rep;
    rep.title = "gamma";

    auto& hom = rep.add("homomorphism");
    hom.cells = n * n;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            const Multiplier prod = compose_multipliers(cm.gamma[p], cm.gamma[q]);
            const Multiplier expect = p == q ? cm.gamma[p] : zero_multiplier(dim);
            if (prod != expect) hom.fail("gamma(d_" + g.label(p) + ")gamma(d_" + g.label(q) + ")");
        }
    auto& unit = rep.add("unit-preserving");
    unit.cells = 1;
    if (cm.gamma_of(Vector(n, Scalar(1))) != identity_multiplier(dim)) unit.fail("gamma(1) is not the identity");

    auto& nondeg = rep.add("nondegenerate");
    nondeg.cells = 1;
    if (dim > 0) {
        std::vector<Matrix> ls, rs;
        for (const auto& m : cm.gamma) {
            ls.push_back(m.left);
            rs.push_back(m.right);
        }
        if (rank(hstack(ls, dim)) != dim) nondeg.fail("gamma(K(G))A_G is a proper subspace");
        else if (rank(hstack(rs, dim)) != dim) nondeg.fail("A_G gamma(K(G)) is a proper subspace");
    }

    auto& central = rep.add("central");
    central.cells = n;
    for (std::size_t p = 0; p < n; ++p) {
        if (cm.gamma[p].left != cm.gamma[p].right) {
            central.fail("gamma(d_" + g.label(p) + ") a != a gamma(d_" + g.label(p) + ")");
            continue;
        }
        if (auto d = multiplier_defect(cm.algebra, cm.gamma[p])) central.fail("gamma(d_" + g.label(p) + "): " + *d);
    }

    // T₁(γ(δ_s)a⊗b) = Σ_{pq=s}(γ(δ_p)⊗γ(δ_q))T₁(a⊗b) and the mirror statement for T₂.
    std::vector<SparseMatrix> gl(n), gr(n);
    for (std::size_t p = 0; p < n; ++p) {
        gl[p] = SparseMatrix::from_dense(cm.gamma[p].left);
        gr[p] = SparseMatrix::from_dense(cm.gamma[p].right);
    }
    std::vector<std::string> fail(n);
    parallel_for(n, [&](std::size_t s) {
        for (std::size_t a = 0; a < dim; ++a) {
            const Entries ga = gl[s].column(a);
            const Entries gb = gr[s].column(a);
            for (std::size_t b = 0; b < dim; ++b) {
                const Entries eb{{b, Scalar(1)}};
                const Entries base1 = cm.t1g.column(a * dim + b);
                const Entries base2 = cm.t2g.column(b * dim + a);
                Accum r1, r2;
                for (std::size_t p = 0; p < n; ++p) {
                    const std::size_t q = g.mul(g.inv(p), s);
                    for (const auto& [i, v] : apply_pair(gl[p], gl[q], base1, dim)) r1[i] += v;
                    for (const auto& [i, v] : apply_pair(gr[p], gr[q], base2, dim)) r2[i] += v;
                }
                if (apply_to_pure(cm.t1g, ga, eb, dim) != to_entries(r1)) {
                    fail[s] = "t1, s=" + g.label(s) + " a=" + e(a) + " b=" + e(b);
                    return;
                }
                if (apply_to_pure(cm.t2g, eb, gb, dim) != to_entries(r2)) {
                    fail[s] = "t2, s=" + g.label(s) + " a=" + e(b) + " b=" + e(a);
                    return;
                }
            }
        }
    });
    auto& compat = rep.add("coproduct-compatible");
    compat.cells = n;
    for (const auto& f : fail)
        if (!f.empty()) compat.fail(f);
    return rep;
}

namespace {

// Basis of one summand with a left inverse on selected rows.
struct Summand {
    std::vector<Entries> basis;
    std::vector<std::size_t> rows;  // coordinates are read from these rows
    Matrix core_inverse;            // inverse of the basis restricted to `rows`

    std::size_t dim() const { return basis.size(); }
};

Summand summand_of(const Matrix& proj) {
    Summand s;
    if (proj.rows() == 0) return s;
    const LinearSolver cols(proj);
    Matrix v(proj.rows(), cols.pivot_columns().size());
    for (std::size_t k = 0; k < cols.pivot_columns().size(); ++k) {
        const Vector c = proj.column(cols.pivot_columns()[k]);
        v.set_column(k, c);
        s.basis.push_back(sparse_of(c));
    }
    if (s.basis.empty()) return s;
    const LinearSolver rows(transpose(v));
    s.rows = rows.pivot_columns();
    Matrix core(s.rows.size(), s.rows.size());
    for (std::size_t i = 0; i < s.rows.size(); ++i)
        for (std::size_t k = 0; k < s.basis.size(); ++k) core(i, k) = v(s.rows[i], k);
    s.core_inverse = invert(core);
    return s;
}

// Coordinates of a sparse vector in the summand, or nullopt if it leaves it.
std::optional<Vector> coords(const Summand& s, const Entries& x, std::size_t n) {
    Vector dense(n);
    for (const auto& [i, v] : x) dense[i] = v;
    Vector picked(s.rows.size());
    for (std::size_t i = 0; i < s.rows.size(); ++i) picked[i] = dense[s.rows[i]];
    Vector c = s.core_inverse * picked;
    Accum back;
    for (std::size_t k = 0; k < c.size(); ++k)
        if (!is_zero(c[k]))
            for (const auto& [i, v] : s.basis[k]) back[i] += c[k] * v;
    if (to_entries(back) != x) return std::nullopt;
    return c;
}

// Coordinates of a sparse tensor in S_p ⊗ S_q.
std::optional<Vector> coords2(const Summand& sp, const Summand& sq, const Entries& x, std::size_t n) {
    const std::size_t kp = sp.dim(), kq = sq.dim();
    // Restrict to the selected rows of both legs, then apply both core inverses.
    Matrix picked(sp.rows.size(), sq.rows.size());
    std::vector<std::size_t> where_p(n, SIZE_MAX), where_q(n, SIZE_MAX);
    for (std::size_t i = 0; i < sp.rows.size(); ++i) where_p[sp.rows[i]] = i;
    for (std::size_t i = 0; i < sq.rows.size(); ++i) where_q[sq.rows[i]] = i;
    for (const auto& [idx, v] : x) {
        const std::size_t u = where_p[idx / n], w = where_q[idx % n];
        if (u != SIZE_MAX && w != SIZE_MAX) picked(u, w) = v;
    }
    const Matrix c = kp && kq ? sp.core_inverse * picked * transpose(sq.core_inverse) : Matrix(kp, kq);
    Accum back;
    for (std::size_t a = 0; a < kp; ++a)
        for (std::size_t b = 0; b < kq; ++b) {
            if (is_zero(c(a, b))) continue;
            for (const auto& [i, vi] : sp.basis[a])
                for (const auto& [j, vj] : sq.basis[b]) back[i * n + j] += c(a, b) * vi * vj;
        }
    if (to_entries(back) != x) return std::nullopt;
    Vector out(kp * kq);
    for (std::size_t a = 0; a < kp; ++a)
        for (std::size_t b = 0; b < kq; ++b) out[a * kq + b] = c(a, b);
    return out;
}

}  // namespace

PiCoalgebra from_cograded(const CogradedMHA& cm) {
    const auto& g = cm.group;
    const std::size_t n = g.order(), dim = cm.dim();
    std::vector<Summand> parts(n);
    for (std::size_t p = 0; p < n; ++p) parts[p] = summand_of(cm.gamma[p].right);

    std::vector<ComponentAlgebra> comps;
    for (std::size_t p = 0; p < n; ++p) {
        const auto& s = parts[p];
        const std::size_t d = s.dim();
        std::vector<Scalar> st(d * d * d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                Vector prod(dim);
                for (const auto& [u, x] : s.basis[i])
                    for (const auto& [w, y] : s.basis[j]) axpy(prod, x * y, cm.algebra.basis_product(u, w));
                auto c = coords(s, sparse_of(prod), dim);
                if (!c)
                    throw Error(ErrorCode::BlockLeak,
                                "product of two basis vectors of A_" + g.label(p) + " leaves the summand");
                for (std::size_t k = 0; k < d; ++k) st[(i * d + j) * d + k] = (*c)[k];
            }
        comps.emplace_back(d, std::move(st));
    }

    std::vector<Matrix> t1(n * n), t2(n * n);
    std::vector<std::string> leak(n * n);
    parallel_for(n * n, [&](std::size_t cell) {
        const std::size_t p = cell / n, q = cell % n, r = g.mul(p, q);
        const auto &sp = parts[p], &sq = parts[q], &sr = parts[r];
        Matrix m1(sp.dim() * sq.dim(), sr.dim() * sq.dim());
        for (std::size_t x = 0; x < sr.dim(); ++x)
            for (std::size_t y = 0; y < sq.dim(); ++y) {
                auto c = coords2(sp, sq, apply_to_pure(cm.t1g, sr.basis[x], sq.basis[y], dim), dim);
                if (!c) {
                    if (leak[cell].empty())
                        leak[cell] = "t1g image of " + g.label(r) + "⊗" + g.label(q) + " leaves block " +
                                     detail::cell_name(g, p, q);
                    return;
                }
                m1.set_column(x * sq.dim() + y, *c);
            }
        Matrix m2(sp.dim() * sq.dim(), sp.dim() * sr.dim());
        for (std::size_t x = 0; x < sp.dim(); ++x)
            for (std::size_t y = 0; y < sr.dim(); ++y) {
                auto c = coords2(sp, sq, apply_to_pure(cm.t2g, sp.basis[x], sr.basis[y], dim), dim);
                if (!c) {
                    if (leak[cell].empty())
                        leak[cell] = "t2g image of " + g.label(p) + "⊗" + g.label(r) + " leaves block " +
                                     detail::cell_name(g, p, q);
                    return;
                }
                m2.set_column(x * sr.dim() + y, *c);
            }
        t1[cell] = std::move(m1);
        t2[cell] = std::move(m2);
    });
    for (const auto& l : leak)
        if (!l.empty()) throw Error(ErrorCode::BlockLeak, l);
    return PiCoalgebra(g, std::move(comps), std::move(t1), std::move(t2));
}

Report componentwise_structure(const CogradedMHA& cm, const PiCoalgebra& pc, const Counit& eps,
                               const AntipodeFamily& s) {
    const auto& g = cm.group;
    const std::size_t n = g.order(), dim = cm.dim();
    const auto off = block_offsets(pc);
    Report rep;
    rep.title = "componentwise";

    SparseMatrix i1, i2;
    try {
        i1 = invert_blockwise(cm.t1g);
        i2 = invert_blockwise(cm.t2g);
    } catch (const Error& err) {
        rep.add("direct-sum-bijective").fail(err.what());
        for (auto name : {"counit-scalar", "counit-blocks", "antipode-blocks", "antipode-identities"})
            rep.skip(name, "canonical maps of A_G are not invertible");
        return rep;
    }
    rep.add("direct-sum-bijective").cells = 1;

    // E_G(a)b = m(T₁⁻¹(a⊗b)) must be ε_G(a)·b.
    Vector eps_g(dim);
    auto& scalar = rep.add("counit-scalar");
    scalar.cells = dim;
    std::vector<std::string> not_scalar(dim);
    parallel_for(dim, [&](std::size_t a) {
        Scalar lambda;
        for (std::size_t b = 0; b < dim; ++b) {
            Vector col = multiply_out(cm.algebra, i1.column(a * dim + b));
            if (b == 0) lambda = col[0];
            if (col != scaled(unit_vector(dim, b), lambda)) {
                not_scalar[a] = "E_G(" + label_of(cm, a) + ") is not scalar";
                return;
            }
        }
        eps_g[a] = lambda;
    });
    for (const auto& w : not_scalar)
        if (!w.empty()) scalar.fail(w);

    auto& blocks = rep.add("counit-blocks");
    blocks.cells = dim;
    for (std::size_t a = 0; a < dim; ++a) {
        const std::size_t p = cm.labels[a];
        const Scalar expect = p == g.identity() ? eps.eps[a - off[p]] : Scalar(0);
        if (eps_g[a] != expect) blocks.fail("eps_G(" + label_of(cm, a) + ") = " + format_scalar(eps_g[a]));
    }

    // S_G(e_a)e_b = (ε_G⊗I)T₁⁻¹(e_a⊗e_b) and e_b S_G(e_a) = (I⊗ε_G)T₂⁻¹(e_b⊗e_a).
    std::vector<Multiplier> sg(dim, zero_multiplier(dim));
    parallel_for(dim, [&](std::size_t a) {
        for (std::size_t b = 0; b < dim; ++b) {
            Vector l(dim), r(dim);
            for (const auto& [idx, v] : i1.column(a * dim + b))
                if (!is_zero(eps_g[idx / dim])) l[idx % dim] += eps_g[idx / dim] * v;
            for (const auto& [idx, v] : i2.column(b * dim + a))
                if (!is_zero(eps_g[idx % dim])) r[idx / dim] += eps_g[idx % dim] * v;
            sg[a].left.set_column(b, l);
            sg[a].right.set_column(b, r);
        }
    });
    auto& anti = rep.add("antipode-blocks");
    anti.cells = dim;
    for (std::size_t a = 0; a < dim && anti.passed; ++a) {
        const std::size_t q = cm.labels[a], qi = g.inv(q), x = a - off[q];
        Multiplier expect = zero_multiplier(dim);
        const Multiplier& sq = s.values[q][x];
        for (std::size_t i = 0; i < pc.dim(qi); ++i)
            for (std::size_t j = 0; j < pc.dim(qi); ++j) {
                expect.left(off[qi] + i, off[qi] + j) = sq.left(i, j);
                expect.right(off[qi] + i, off[qi] + j) = sq.right(i, j);
            }
        if (sg[a] != expect) anti.fail("S_G(" + label_of(cm, a) + ") differs from S_" + g.label(q));
    }

    // a in the identity block, b and c in block p.
    std::vector<std::string> ident(n);
    const std::size_t one = g.identity();
    parallel_for(n, [&](std::size_t p) {
        for (std::size_t a = off[one]; a < off[one + 1]; ++a)
            for (std::size_t b = off[p]; b < off[p + 1]; ++b)
                for (std::size_t c = off[p]; c < off[p + 1]; ++c) {
                    const Vector expect = scaled(cm.algebra.basis_product(c, b), eps_g[a]);
                    Vector lhs(dim), rhs(dim);
                    for (const auto& [idx, v] : cm.t2g.column(c * dim + a))
                        axpy(lhs, v, cm.algebra.left_mul(idx / dim) * sg[idx % dim].left.column(b));
                    for (const auto& [idx, v] : cm.t1g.column(a * dim + b))
                        axpy(rhs, v, cm.algebra.right_mul(idx % dim) * sg[idx / dim].right.column(c));
                    if (lhs != expect || rhs != expect) {
                        ident[p] = "block " + g.label(p) + ": a=" + e(a) + " b=" + e(b) + " c=" + e(c);
                        return;
                    }
                }
    });
    auto& ids = rep.add("antipode-identities");
    ids.cells = n;
    for (const auto& w : ident)
        if (!w.empty()) ids.fail(w);
    return rep;
}

Report verify_regularity_transfer(const PiCoalgebra& pc, const CogradedMHA& cm) {
    const auto& g = cm.group;
    const std::size_t n = g.order(), dim = cm.dim();
    const auto by_label = indices_by_label(cm);
    Report rep;
    rep.title = "regularity-transfer";

    // Stacked multiplication maps of each block, restricted to that block.
    std::vector<std::optional<LinearSolver>> by_right(n), by_left(n);
    for (std::size_t q = 0; q < n; ++q) {
        const auto& idx = by_label[q];
        const std::size_t d = idx.size();
        if (d == 0) continue;
        Matrix rs(d * d, d), ls(d * d, d);
        for (std::size_t c = 0; c < d; ++c)
            for (std::size_t k = 0; k < d; ++k)
                for (std::size_t j = 0; j < d; ++j) {
                    rs(c * d + k, j) = cm.algebra.c(idx[j], idx[c], idx[k]);
                    ls(c * d + k, j) = cm.algebra.c(idx[c], idx[j], idx[k]);
                }
        by_right[q].emplace(rs);
        by_left[q].emplace(ls);
    }

    SparseMatrix op1(dim * dim, dim * dim), op2(dim * dim, dim * dim);
    std::vector<std::string> range(dim);
    parallel_for(dim, [&](std::size_t a) {
        const std::size_t r = cm.labels[a];
        for (std::size_t b = 0; b < dim; ++b) {
            // Δ(a)(b⊗1) lies in block (p, p⁻¹r) for b in block p.
            {
                const std::size_t p = cm.labels[b], q = g.mul(g.inv(p), r);
                const auto& qi = by_label[q];
                const std::size_t d = qi.size();
                Accum z;
                if (d > 0) {
                    // target[i][(c,k)] = coefficient of e_i⊗e_k in Δ(a)(b⊗c)
                    std::map<std::size_t, Vector> target;
                    std::vector<std::size_t> pos(dim, SIZE_MAX);
                    for (std::size_t k = 0; k < d; ++k) pos[qi[k]] = k;
                    for (std::size_t c = 0; c < d; ++c)
                        for (const auto& [idx, v] : cm.t1g.column(a * dim + qi[c])) {
                            const std::size_t u = idx / dim, w = idx % dim;
                            if (pos[w] == SIZE_MAX) continue;
                            for (std::size_t i = 0; i < dim; ++i) {
                                const Scalar& cf = cm.algebra.c(u, b, i);
                                if (is_zero(cf)) continue;
                                auto& t = target[i];
                                if (t.empty()) t.assign(d * d, Scalar(0));
                                t[c * d + pos[w]] += v * cf;
                            }
                        }
                    for (const auto& [i, t] : target) {
                        auto zi = by_right[q]->solve(t);
                        if (!zi) {
                            if (range[a].empty()) range[a] = "Delta(" + label_of(cm, a) + ")(" + label_of(cm, b) + "⊗1)";
                            return;
                        }
                        for (std::size_t j = 0; j < d; ++j)
                            if (!is_zero((*zi)[j])) z[qi[j] * dim + i] += (*zi)[j];
                    }
                }
                op1.set_column(a * dim + b, to_entries(z));
            }
            // (1⊗b)Δ(a) lies in block (r q⁻¹, q) for b in block q; stored as T′²(b⊗a).
            {
                const std::size_t q = cm.labels[b], p = g.mul(r, g.inv(q));
                const auto& pi = by_label[p];
                const std::size_t d = pi.size();
                Accum w;
                if (d > 0) {
                    std::map<std::size_t, Vector> target;
                    std::vector<std::size_t> pos(dim, SIZE_MAX);
                    for (std::size_t k = 0; k < d; ++k) pos[pi[k]] = k;
                    for (std::size_t c = 0; c < d; ++c)
                        for (const auto& [idx, v] : cm.t2g.column(pi[c] * dim + a)) {
                            const std::size_t u = idx / dim, x = idx % dim;
                            if (pos[u] == SIZE_MAX) continue;
                            for (std::size_t j = 0; j < dim; ++j) {
                                const Scalar& cf = cm.algebra.c(b, x, j);
                                if (is_zero(cf)) continue;
                                auto& t = target[j];
                                if (t.empty()) t.assign(d * d, Scalar(0));
                                t[c * d + pos[u]] += v * cf;
                            }
                        }
                    for (const auto& [j, t] : target) {
                        auto wj = by_left[p]->solve(t);
                        if (!wj) {
                            if (range[a].empty()) range[a] = "(1⊗" + label_of(cm, b) + ")Delta(" + label_of(cm, a) + ")";
                            return;
                        }
                        for (std::size_t i = 0; i < d; ++i)
                            if (!is_zero((*wj)[i])) w[j * dim + pi[i]] += (*wj)[i];
                    }
                }
                op2.set_column(b * dim + a, to_entries(w));
            }
        }
    });

    Report ds;
    auto& rg = ds.add("opposite-range");
    rg.cells = dim;
    for (const auto& f : range)
        if (!f.empty()) rg.fail(f);
    if (!rg.passed) {
        ds.skip("opposite-bijective", "opposite maps undefined");
        ds.skip("opposite-coassociativity", "opposite maps undefined");
    } else {
        auto& bij = ds.add("opposite-bijective");
        bij.cells = 2;
        for (const auto* m : {&op1, &op2}) {
            try {
                (void)invert_blockwise(*m);
            } catch (const Error& err) {
                bij.fail(std::string(m == &op1 ? "t1'" : "t2'") + ": " + err.what());
            }
        }
        // (T′²⊗I)(a⊗T′¹(b⊗c)) = (I⊗T′¹)(T′²(a⊗b)⊗c)
        std::vector<std::string> co(dim);
        parallel_for(dim, [&](std::size_t a) {
            for (std::size_t b = 0; b < dim; ++b)
                for (std::size_t c = 0; c < dim; ++c) {
                    Accum lhs, rhs;
                    for (const auto& [idx, v] : op1.column(b * dim + c)) {
                        const std::size_t u = idx / dim, w = idx % dim;
                        for (const auto& [r2, v2] : op2.column(a * dim + u)) lhs[r2 * dim + w] += v * v2;
                    }
                    for (const auto& [idx, v] : op2.column(a * dim + b)) {
                        const std::size_t s = idx / dim, t = idx % dim;
                        for (const auto& [r2, v2] : op1.column(t * dim + c)) rhs[s * dim * dim + r2] += v * v2;
                    }
                    if (to_entries(lhs) != to_entries(rhs)) {
                        co[a] = "a=" + label_of(cm, a) + " b=" + label_of(cm, b) + " c=" + label_of(cm, c);
                        return;
                    }
                }
        });
        auto& coa = ds.add("opposite-coassociativity");
        coa.cells = dim;
        for (const auto& f : co)
            if (!f.empty()) coa.fail(f);
    }
    const bool direct = ds.passed();
    const Report comp = verify_regularity(pc);
    const bool componentwise = comp.passed();
    for (auto& c : ds.checks) {
        // Failures here describe the input, not the transfer; keep them as notes.
        if (!c.passed) {
            c.passed = true;
            c.note = "irregular: " + c.failures.front();
            c.failures.clear();
        }
    }
    rep.merge(ds, "direct-sum");
    auto& agree = rep.add("verdicts-agree");
    agree.cells = 1;
    agree.note = std::string("componentwise ") + (componentwise ? "regular" : "irregular") + ", direct sum " +
                 (direct ? "regular" : "irregular");
    if (direct != componentwise) agree.fail(agree.note);
    return rep;
}

PiCoalgebra to_trivial_group(const CogradedMHA& cm) {
    return PiCoalgebra(FiniteGroup::trivial(), {cm.algebra}, {cm.t1g.to_dense()}, {cm.t2g.to_dense()});
}

}  // namespace mhgc
