#include "mhgc/pi_coalgebra.hpp"

#include "mhgc/error.hpp"
#include "mhgc/parallel.hpp"

#include "detail.hpp"

#include <string>

namespace mhgc {

using detail::cell_name;

PiCoalgebra::PiCoalgebra(FiniteGroup group, std::vector<ComponentAlgebra> components, std::vector<Matrix> t1,
                         std::vector<Matrix> t2)
    : group_(std::move(group)), components_(std::move(components)), t1_(std::move(t1)), t2_(std::move(t2)) {
    const std::size_t n = group_.order();
    if (components_.size() != n) throw Error(ErrorCode::DimensionMismatch, "one component per group element required");
    if (t1_.size() != n * n || t2_.size() != n * n)
        throw Error(ErrorCode::DimensionMismatch, "one t1/t2 block per pair of group elements required");
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            const std::size_t pq = group_.mul(p, q);
            const Matrix& a = t1_[cell(p, q)];
            const Matrix& b = t2_[cell(p, q)];
            if (a.rows() != dim(p) * dim(q) || a.cols() != dim(pq) * dim(q))
                throw Error(ErrorCode::DimensionMismatch, "t1 block " + cell_name(group_, p, q) + " is " +
                                                              std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
            if (b.rows() != dim(p) * dim(q) || b.cols() != dim(p) * dim(pq))
                throw Error(ErrorCode::DimensionMismatch, "t2 block " + cell_name(group_, p, q) + " is " +
                                                              std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
        }
}

// ------------------------------------------------------------------- actions

std::vector<Matrix> left_action_matrices(const PiCoalgebra& pc, std::size_t p, std::size_t q) {
    const std::size_t r = pc.group().mul(p, q);
    const std::size_t dp = pc.dim(p), dq = pc.dim(q), dr = pc.dim(r), d = dp * dq;
    const auto& ap = pc.component(p);
    const SparseMatrix t1 = SparseMatrix::from_dense(pc.t1(p, q));
    std::vector<Matrix> out(dr, Matrix(d, d));
    // Δ(e_k)(e_i⊗e_j) = T¹(e_k⊗e_j)(e_i⊗1)
    for (std::size_t k = 0; k < dr; ++k)
        for (std::size_t j = 0; j < dq; ++j)
            for (const auto& [row, val] : t1.column(k * dq + j)) {
                const std::size_t u = row / dq, v = row % dq;
                for (std::size_t i = 0; i < dp; ++i)
                    for (std::size_t m = 0; m < dp; ++m) {
                        const Scalar& c = ap.c(u, i, m);
                        if (!is_zero(c)) out[k](m * dq + v, i * dq + j) += val * c;
                    }
            }
    return out;
}

std::vector<Matrix> right_action_matrices(const PiCoalgebra& pc, std::size_t p, std::size_t q) {
    const std::size_t r = pc.group().mul(p, q);
    const std::size_t dp = pc.dim(p), dq = pc.dim(q), dr = pc.dim(r), d = dp * dq;
    const auto& aq = pc.component(q);
    const SparseMatrix t2 = SparseMatrix::from_dense(pc.t2(p, q));
    std::vector<Matrix> out(dr, Matrix(d, d));
    // (e_i⊗e_j)Δ(e_k) = (1⊗e_j)T²(e_i⊗e_k)
    for (std::size_t k = 0; k < dr; ++k)
        for (std::size_t i = 0; i < dp; ++i)
            for (const auto& [row, val] : t2.column(i * dr + k)) {
                const std::size_t u = row / dq, v = row % dq;
                for (std::size_t j = 0; j < dq; ++j)
                    for (std::size_t m = 0; m < dq; ++m) {
                        const Scalar& c = aq.c(j, v, m);
                        if (!is_zero(c)) out[k](u * dq + m, i * dq + j) += val * c;
                    }
            }
    return out;
}

namespace {

Matrix combine(const std::vector<Matrix>& mats, const Vector& a, std::size_t d) {
    if (a.size() != mats.size()) throw Error(ErrorCode::DimensionMismatch, "element length");
    Matrix m(d, d);
    for (std::size_t k = 0; k < mats.size(); ++k)
        if (!is_zero(a[k])) m = m + scaled(mats[k], a[k]);
    return m;
}

}  // namespace

Vector delta_left_action(const PiCoalgebra& pc, std::size_t p, std::size_t q, const Vector& a, const Vector& x) {
    const std::size_t d = pc.dim(p) * pc.dim(q);
    return combine(left_action_matrices(pc, p, q), a, d) * x;
}

Vector delta_right_action(const PiCoalgebra& pc, std::size_t p, std::size_t q, const Vector& a, const Vector& x) {
    const std::size_t d = pc.dim(p) * pc.dim(q);
    return combine(right_action_matrices(pc, p, q), a, d) * x;
}

Multiplier delta_multiplier(const PiCoalgebra& pc, std::size_t p, std::size_t q, const Vector& a) {
    const std::size_t d = pc.dim(p) * pc.dim(q);
    return {combine(left_action_matrices(pc, p, q), a, d), combine(right_action_matrices(pc, p, q), a, d)};
}

// -------------------------------------------------------------- verification

Report verify_nondegeneracy(const PiCoalgebra& pc) {
    Report rep;
    rep.title = "nondegeneracy";
    auto& assoc = rep.add("associativity");
    auto& nondeg = rep.add("nondegenerate-product");
    for (std::size_t p = 0; p < pc.order(); ++p) {
        ++assoc.cells;
        ++nondeg.cells;
        const auto& a = pc.component(p);
        if (auto w = a.associativity_witness()) {
            assoc.fail("component " + pc.group().label(p) + ": (e" + std::to_string((*w)[0]) + " e" +
                       std::to_string((*w)[1]) + ") e" + std::to_string((*w)[2]));
        }
        if (!check_nondegenerate(a)) nondeg.fail("component " + pc.group().label(p) + ": product is degenerate");
    }
    return rep;
}

Report verify_comultiplication(const PiCoalgebra& pc) {
    const auto& g = pc.group();
    const std::size_t n = g.order();
    Report rep;
    rep.title = "comultiplication";

    std::vector<std::string> hom(n * n), coh(n * n);
    parallel_for(n * n, [&](std::size_t c) {
        const std::size_t p = c / n, q = c % n, r = g.mul(p, q);
        const std::size_t dp = pc.dim(p), dq = pc.dim(q), dr = pc.dim(r), d = dp * dq;
        const auto& ar = pc.component(r);
        const auto la = left_action_matrices(pc, p, q);
        const auto ra = right_action_matrices(pc, p, q);
        // Left actions compose as Δ(e_i)Δ(e_j); right actions compose in reverse order.
        for (std::size_t i = 0; i < dr && hom[c].empty(); ++i)
            for (std::size_t j = 0; j < dr; ++j) {
                const Vector ij = ar.basis_product(i, j);
                if (combine(la, ij, d) != la[i] * la[j]) {
                    hom[c] = cell_name(g, p, q) + ": left action of e" + std::to_string(i) + "*e" + std::to_string(j);
                    break;
                }
                if (combine(ra, ij, d) != ra[j] * ra[i]) {
                    hom[c] = cell_name(g, p, q) + ": right action of e" + std::to_string(i) + "*e" + std::to_string(j);
                    break;
                }
            }
        // (e_i⊗1)Δ(e_k)(1⊗e_l) computed from both canonical maps.
        const auto& ap = pc.component(p);
        const auto& aq = pc.component(q);
        const Matrix& t1 = pc.t1(p, q);
        const Matrix& t2 = pc.t2(p, q);
        for (std::size_t k = 0; k < dr && coh[c].empty(); ++k)
            for (std::size_t i = 0; i < dp && coh[c].empty(); ++i)
                for (std::size_t l = 0; l < dq; ++l) {
                    const Vector lhs = apply_on_leg(aq.right_mul(l), t2.column(i * dr + k), dp, 1);
                    const Vector rhs = apply_on_leg(ap.left_mul(i), t1.column(k * dq + l), 1, dq);
                    if (lhs != rhs) {
                        coh[c] = cell_name(g, p, q) + ": a=e" + std::to_string(k) + " x=e" + std::to_string(i) +
                                 " y=e" + std::to_string(l);
                        break;
                    }
                }
    });
    auto& h = rep.add("homomorphism");
    auto& m = rep.add("multiplier-coherence");
    h.cells = m.cells = n * n;
    for (std::size_t c = 0; c < n * n; ++c) {
        if (!hom[c].empty()) h.fail(hom[c]);
        if (!coh[c].empty()) m.fail(coh[c]);
    }

    // (a⊗1⊗1)(Δ_{α,β}⊗I)(Δ_{αβ,γ}(b)(1⊗c)) = (I⊗Δ_{β,γ})((a⊗1)Δ_{α,βγ}(b))(1⊗1⊗c)
    std::vector<SparseMatrix> t1s(n * n), t2s(n * n);
    for (std::size_t c = 0; c < n * n; ++c) {
        t1s[c] = SparseMatrix::from_dense(pc.t1_all()[c]);
        t2s[c] = SparseMatrix::from_dense(pc.t2_all()[c]);
    }
    std::vector<std::string> coassoc(n * n * n);
    parallel_for(n * n * n, [&](std::size_t cell) {
        const std::size_t al = cell / (n * n), be = (cell / n) % n, ga = cell % n;
        const std::size_t ab = g.mul(al, be), bc = g.mul(be, ga), abc = g.mul(ab, ga);
        const std::size_t da = pc.dim(al), db = pc.dim(be), dc = pc.dim(ga);
        const std::size_t dab = pc.dim(ab), dbc = pc.dim(bc), dabc = pc.dim(abc);
        const SparseMatrix& t1_abc = t1s[pc.cell(ab, ga)];
        const SparseMatrix& t2_ab = t2s[pc.cell(al, be)];
        const SparseMatrix& t2_abc = t2s[pc.cell(al, bc)];
        const SparseMatrix& t1_bc = t1s[pc.cell(be, ga)];
        for (std::size_t x = 0; x < dabc; ++x)
            for (std::size_t z = 0; z < dc; ++z)
                for (std::size_t a = 0; a < da; ++a) {
                    Vector lhs(da * db * dc), rhs(da * db * dc);
                    for (const auto& [row, v] : t1_abc.column(x * dc + z)) {
                        const std::size_t u = row / dc, w = row % dc;
                        for (const auto& [r2, v2] : t2_ab.column(a * dab + u)) lhs[r2 * dc + w] += v * v2;
                    }
                    for (const auto& [row, v] : t2_abc.column(a * dabc + x)) {
                        const std::size_t s = row / dbc, t = row % dbc;
                        for (const auto& [r2, v2] : t1_bc.column(t * dc + z)) rhs[s * db * dc + r2] += v * v2;
                    }
                    if (lhs != rhs) {
                        coassoc[cell] = "cell (" + g.label(al) + "," + g.label(be) + "," + g.label(ga) + "): a=e" +
                                        std::to_string(a) + " b=e" + std::to_string(x) + " c=e" + std::to_string(z);
                        return;
                    }
                }
    });
    auto& co = rep.add("coassociativity");
    co.cells = n * n * n;
    for (const auto& w : coassoc)
        if (!w.empty()) co.fail(w);
    return rep;
}

Report verify_bijectivity(const PiCoalgebra& pc, CanonicalInverses* out) {
    const auto& g = pc.group();
    const std::size_t n = g.order();
    Report rep;
    rep.title = "bijectivity";
    CanonicalInverses inv;
    inv.order = n;
    inv.t1_inv.resize(n * n);
    inv.t2_inv.resize(n * n);
    std::vector<std::string> f1(n * n), f2(n * n);
    parallel_for(n * n, [&](std::size_t c) {
        const std::size_t p = c / n, q = c % n;
        auto attempt = [&](const Matrix& m, Matrix& slot, std::string& fail) {
            if (!m.square()) {
                fail = cell_name(g, p, q) + ": " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                       " is not square";
                return;
            }
            try {
                slot = invert(m);
            } catch (const Error& e) {
                fail = cell_name(g, p, q) + ": " + e.what() + ", rank " + std::to_string(rank(m));
            }
        };
        attempt(pc.t1(p, q), inv.t1_inv[c], f1[c]);
        attempt(pc.t2(p, q), inv.t2_inv[c], f2[c]);
    });
    auto& b1 = rep.add("t1-bijective");
    auto& b2 = rep.add("t2-bijective");
    b1.cells = b2.cells = n * n;
    for (std::size_t c = 0; c < n * n; ++c) {
        if (!f1[c].empty()) b1.fail(f1[c]);
        if (!f2[c].empty()) b2.fail(f2[c]);
    }
    if (out && rep.passed()) *out = std::move(inv);
    return rep;
}

CanonicalInverses invert_canonical_maps(const PiCoalgebra& pc) {
    CanonicalInverses inv;
    const Report rep = verify_bijectivity(pc, &inv);
    if (!rep.passed()) throw Error(ErrorCode::SingularMatrix, *rep.first_failure());
    return inv;
}

// -------------------------------------------------------------------- opposite

namespace {

// Builds the canonical maps of Δ′; records the first range failure per cell.
PiCoalgebra opposite_impl(const PiCoalgebra& pc, std::vector<std::string>& failures) {
    const auto& g = pc.group();
    const std::size_t n = g.order();
    const FiniteGroup gop = g.opposite();
    std::vector<Matrix> t1(n * n), t2(n * n);
    failures.assign(n * n, std::string());

    // Stacked multiplication maps, shared across cells.
    std::vector<std::optional<LinearSolver>> by_right(n), by_left(n);
    for (std::size_t p = 0; p < n; ++p) {
        const std::size_t d = pc.dim(p);
        if (d == 0) continue;
        std::vector<Matrix> rs, ls;
        for (std::size_t c = 0; c < d; ++c) {
            rs.push_back(pc.component(p).right_mul(c));
            ls.push_back(pc.component(p).left_mul(c));
        }
        by_right[p].emplace(vstack(rs, d));
        by_left[p].emplace(vstack(ls, d));
    }

    parallel_for(n * n, [&](std::size_t cell) {
        const std::size_t al = cell / n, be = cell % n, r = g.mul(al, be);
        const std::size_t da = pc.dim(al), db = pc.dim(be), dr = pc.dim(r);
        Matrix m1(db * da, dr * da), m2(db * da, db * dr);
        std::string& fail = failures[cell];
        if (da > 0 && db > 0 && dr > 0) {
            const auto la = left_action_matrices(pc, al, be);
            const auto ra = right_action_matrices(pc, al, be);
            // Δ(a)(b⊗1) = z with z(1⊗c) = Δ(a)(b⊗c) for every c.
            for (std::size_t a = 0; a < dr; ++a)
                for (std::size_t b = 0; b < da; ++b) {
                    Vector z(da * db);
                    for (std::size_t i = 0; i < da; ++i) {
                        Vector rhs;
                        rhs.reserve(db * db);
                        for (std::size_t c = 0; c < db; ++c)
                            for (std::size_t j = 0; j < db; ++j) rhs.push_back(la[a](i * db + j, b * db + c));
                        auto zi = by_right[be]->solve(rhs);
                        if (!zi) {
                            if (fail.empty())
                                fail = cell_name(g, al, be) + ": Delta(e" + std::to_string(a) + ")(e" +
                                       std::to_string(b) + "⊗1) is not in the tensor product";
                            return;
                        }
                        for (std::size_t j = 0; j < db; ++j) z[i * db + j] = (*zi)[j];
                    }
                    m1.set_column(a * da + b, flip(z, da, db));
                }
            // (1⊗a)Δ(b) = w with (c⊗1)w = (c⊗a)Δ(b) for every c.
            for (std::size_t a = 0; a < db; ++a)
                for (std::size_t b = 0; b < dr; ++b) {
                    Vector w(da * db);
                    for (std::size_t j = 0; j < db; ++j) {
                        Vector rhs;
                        rhs.reserve(da * da);
                        for (std::size_t c = 0; c < da; ++c)
                            for (std::size_t i = 0; i < da; ++i) rhs.push_back(ra[b](i * db + j, c * db + a));
                        auto wj = by_left[al]->solve(rhs);
                        if (!wj) {
                            if (fail.empty())
                                fail = cell_name(g, al, be) + ": (1⊗e" + std::to_string(a) + ")Delta(e" +
                                       std::to_string(b) + ") is not in the tensor product";
                            return;
                        }
                        for (std::size_t i = 0; i < da; ++i) w[i * db + j] = (*wj)[i];
                    }
                    m2.set_column(a * dr + b, flip(w, da, db));
                }
        }
        t1[be * n + al] = std::move(m1);
        t2[be * n + al] = std::move(m2);
    });
    for (const auto& f : failures)
        if (!f.empty()) return PiCoalgebra();
    return PiCoalgebra(gop, pc.components(), std::move(t1), std::move(t2));
}

}  // namespace

OppositeMaps build_opposite(const PiCoalgebra& pc) {
    std::vector<std::string> failures;
    PiCoalgebra op = opposite_impl(pc, failures);
    for (const auto& f : failures)
        if (!f.empty()) throw Error(ErrorCode::RangeFailure, f);
    return OppositeMaps(std::move(op));
}

Report verify_regularity(const PiCoalgebra& pc) {
    Report rep;
    rep.title = "regularity";
    std::vector<std::string> failures;
    PiCoalgebra op = opposite_impl(pc, failures);
    auto& range = rep.add("opposite-range");
    range.cells = failures.size();
    for (const auto& f : failures)
        if (!f.empty()) range.fail(f);
    if (!range.passed) {
        rep.skip("opposite.comultiplication", "opposite maps undefined");
        rep.skip("opposite.bijectivity", "opposite maps undefined");
        return rep;
    }
    rep.merge(verify_comultiplication(op), "opposite");
    rep.merge(verify_bijectivity(op), "opposite");
    return rep;
}

std::vector<std::size_t> support_subgroup(const PiCoalgebra& pc) {
    const auto& g = pc.group();
    std::vector<std::size_t> h;
    std::vector<bool> in(g.order(), false);
    for (std::size_t p = 0; p < g.order(); ++p)
        if (pc.dim(p) > 0) {
            h.push_back(p);
            in[p] = true;
        }
    if (h.empty()) return h;
    if (!in[g.identity()]) throw Error(ErrorCode::NotASubgroup, "support misses the identity");
    for (auto p : h) {
        if (!in[g.inv(p)]) throw Error(ErrorCode::NotASubgroup, "support lacks the inverse of " + g.label(p));
        for (auto q : h)
            if (!in[g.mul(p, q)])
                throw Error(ErrorCode::NotASubgroup, "support not closed: " + g.label(p) + "*" + g.label(q));
    }
    return h;
}

}  // namespace mhgc
