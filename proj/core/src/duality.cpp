#include "mhgc/duality.hpp"

#include "mhgc/error.hpp"
#include "mhgc/parallel.hpp"

#include "detail.hpp"

#include <set>
#include <string>

namespace mhgc {

using detail::cell_name;
using detail::e;

namespace {

// W with e^j = Σ_{k,m} W[(k,m),j] e^m(· e_k).
Matrix damping_weights(const ComponentAlgebra& a, const std::string& where) {
    const std::size_t d = a.dim();
    Matrix m(d * d, d);
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t mm = 0; mm < d; ++mm)
            for (std::size_t i = 0; i < d; ++i) m(k * d + mm, i) = a.right_mul(k)(mm, i);
    if (rank(m) != d)
        throw Error(ErrorCode::NotNondegenerate, "damped functionals do not span the dual of A_" + where);
    auto w = solve(transpose(m), Matrix::identity(d));
    if (!w) throw Error(ErrorCode::NotNondegenerate, "no damped decomposition on A_" + where);
    return *w;
}

// (φ_p⊗I)x for x ∈ A_p⊗A_q.
Vector contract_first(const Vector& phi, const Vector& x, std::size_t dq) {
    Vector out(dq);
    for (std::size_t i = 0; i < phi.size(); ++i) {
        if (is_zero(phi[i])) continue;
        for (std::size_t j = 0; j < dq; ++j) out[j] += phi[i] * x[i * dq + j];
    }
    return out;
}

std::vector<std::size_t> offsets(const PiCoalgebra& pc) { return block_offsets(pc); }

Vector flatten(const InvariantFamily& f) {
    Vector out;
    for (const auto& v : f.values) out.insert(out.end(), v.begin(), v.end());
    return out;
}

// Rows of the invariance system over the concatenated functional, deduplicated.
Matrix invariance_system(const PiCoalgebra& pc, Side side) {
    const auto& g = pc.group();
    const std::size_t n = g.order();
    const auto off = offsets(pc);
    const std::size_t total = off[n];
    std::set<Vector> seen;
    std::vector<Vector> rows;
    auto push = [&](Vector row) {
        if (is_zero(row)) return;
        if (seen.insert(row).second) rows.push_back(std::move(row));
    };
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            const std::size_t r = g.mul(p, q), dp = pc.dim(p), dq = pc.dim(q), dr = pc.dim(r);
            if (side == Side::Left) {
                // Σ_j T²[(i,j),(b,a)] φ_q[j] − δ_{ib} φ_r[a] = 0
                const Matrix& t2 = pc.t2(p, q);
                for (std::size_t a = 0; a < dr; ++a)
                    for (std::size_t b = 0; b < dp; ++b)
                        for (std::size_t i = 0; i < dp; ++i) {
                            Vector row(total);
                            for (std::size_t j = 0; j < dq; ++j) row[off[q] + j] += t2(i * dq + j, b * dr + a);
                            if (i == b) row[off[r] + a] -= 1;
                            push(std::move(row));
                        }
            } else {
                // Σ_i T¹[(i,j),(a,b)] ψ_p[i] − δ_{jb} ψ_r[a] = 0
                const Matrix& t1 = pc.t1(p, q);
                for (std::size_t a = 0; a < dr; ++a)
                    for (std::size_t b = 0; b < dq; ++b)
                        for (std::size_t j = 0; j < dq; ++j) {
                            Vector row(total);
                            for (std::size_t i = 0; i < dp; ++i) row[off[p] + i] += t1(i * dq + j, a * dq + b);
                            if (j == b) row[off[r] + a] -= 1;
                            push(std::move(row));
                        }
            }
        }
    if (rows.empty()) return Matrix(0, total);
    return Matrix::from_rows(rows);
}

InvariantFamily unflatten(const PiCoalgebra& pc, const Vector& v, Side side) {
    InvariantFamily f;
    f.side = side;
    std::size_t at = 0;
    for (std::size_t p = 0; p < pc.order(); ++p) {
        f.values.emplace_back(v.begin() + static_cast<std::ptrdiff_t>(at),
                              v.begin() + static_cast<std::ptrdiff_t>(at + pc.dim(p)));
        at += pc.dim(p);
    }
    return f;
}

Matrix s_squared(const AntipodeFamily& s, const FiniteGroup& g, std::size_t p) {
    return s.element(g.inv(p)) * s.element(p);
}

std::size_t span_rank(const std::vector<Matrix>& blocks, std::size_t cols) { return rank(vstack(blocks, cols)); }

}  // namespace

// ------------------------------------------------------------------ dual algebra

Vector DualAlgebra::multiply(std::size_t p, std::size_t q, const Vector& f, const Vector& g) const {
    return prod(p, q) * kron(f, g);
}

DualAlgebra dual_algebra(const PiCoalgebra& pc) {
    const auto& g = pc.group();
    const std::size_t n = g.order();
    DualAlgebra dual;
    dual.group = g;
    for (std::size_t p = 0; p < n; ++p) dual.dims.push_back(pc.dim(p));
    std::vector<Matrix> w(n);
    for (std::size_t q = 0; q < n; ++q)
        if (pc.dim(q) > 0) w[q] = damping_weights(pc.component(q), g.label(q));
    dual.product.resize(n * n);
    parallel_for(n * n, [&](std::size_t cell) {
        const std::size_t p = cell / n, q = cell % n, r = g.mul(p, q);
        const std::size_t dp = pc.dim(p), dq = pc.dim(q), dr = pc.dim(r);
        Matrix m(dr, dp * dq);
        const Matrix& t1 = pc.t1(p, q);
        // (e^i⊗e^j)(Δ(e_a)) = Σ_{k,m} W[(k,m),j] T¹[(i,m),(a,k)]
        for (std::size_t a = 0; a < dr; ++a)
            for (std::size_t k = 0; k < dq; ++k)
                for (std::size_t i = 0; i < dp; ++i)
                    for (std::size_t mm = 0; mm < dq; ++mm) {
                        const Scalar& v = t1(i * dq + mm, a * dq + k);
                        if (is_zero(v)) continue;
                        for (std::size_t j = 0; j < dq; ++j) {
                            const Scalar& wv = w[q](k * dq + mm, j);
                            if (!is_zero(wv)) m(a, i * dq + j) += v * wv;
                        }
                    }
        dual.product[cell] = std::move(m);
    });
    return dual;
}

Report verify_dual_algebra(const DualAlgebra& dual, const Counit& eps) {
    const auto& g = dual.group;
    const std::size_t n = g.order();
    Report rep;
    rep.title = "dual-algebra";
    std::vector<std::string> assoc(n * n * n);
    parallel_for(n * n * n, [&](std::size_t cell) {
        const std::size_t p = cell / (n * n), q = (cell / n) % n, r = cell % n;
        const std::size_t pq = g.mul(p, q), qr = g.mul(q, r);
        const Matrix lhs = dual.prod(pq, r) * kron(dual.prod(p, q), Matrix::identity(dual.dims[r]));
        const Matrix rhs = dual.prod(p, qr) * kron(Matrix::identity(dual.dims[p]), dual.prod(q, r));
        if (lhs != rhs) assoc[cell] = "(" + g.label(p) + "," + g.label(q) + "," + g.label(r) + ")";
    });
    auto& a = rep.add("associativity");
    a.cells = n * n * n;
    for (const auto& f : assoc)
        if (!f.empty()) a.fail(f);

    auto& u = rep.add("counit-identity");
    u.cells = n;
    const std::size_t one = g.identity();
    Matrix ecol(dual.dims[one], 1);
    for (std::size_t i = 0; i < dual.dims[one]; ++i) ecol(i, 0) = eps.eps[i];
    for (std::size_t p = 0; p < n; ++p) {
        const Matrix id = Matrix::identity(dual.dims[p]);
        if (dual.prod(one, p) * kron(ecol, id) != id) u.fail("eps*f != f on " + g.label(p));
        else if (dual.prod(p, one) * kron(id, ecol) != id) u.fail("f*eps != f on " + g.label(p));
    }
    return rep;
}

std::vector<Matrix> dual_antipode(const PiCoalgebra& pc, const AntipodeFamily& s) {
    std::vector<Matrix> out;
    for (std::size_t p = 0; p < pc.order(); ++p) out.push_back(transpose(s.element(pc.group().inv(p))));
    return out;
}

Report verify_dual_antipode(const DualAlgebra& dual, const std::vector<Matrix>& sstar) {
    const auto& g = dual.group;
    const std::size_t n = g.order();
    Report rep;
    rep.title = "dual-antipode";
    auto& c = rep.add("antihomomorphism");
    c.cells = n * n;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            const Matrix lhs = sstar[g.mul(p, q)] * dual.prod(p, q);
            const Matrix rhs = dual.prod(g.inv(q), g.inv(p)) * kron(sstar[q], sstar[p]) *
                               flip_matrix(dual.dims[p], dual.dims[q]);
            if (lhs != rhs) c.fail(cell_name(g, p, q));
        }
    return rep;
}

// -------------------------------------------------------------------- invariants

bool InvariantFamily::is_zero() const {
    for (const auto& v : values)
        if (!mhgc::is_zero(v)) return false;
    return true;
}

InvariantFamily InvariantFamily::scaled(const Scalar& c) const {
    InvariantFamily f = *this;
    for (auto& v : f.values) v = mhgc::scaled(v, c);
    return f;
}

std::vector<InvariantFamily> solve_invariant(const PiCoalgebra& pc, Side side) {
    const Matrix sys = invariance_system(pc, side);
    std::vector<InvariantFamily> out;
    if (sys.cols() == 0) return out;
    for (const auto& v : kernel_basis(sys)) out.push_back(unflatten(pc, v, side));
    return out;
}

bool is_invariant(const PiCoalgebra& pc, const InvariantFamily& fam) {
    const Matrix sys = invariance_system(pc, fam.side);
    return mhgc::is_zero(sys * flatten(fam));
}

InvariantFamily compose_with_antipode(const PiCoalgebra& pc, const InvariantFamily& phi, const AntipodeFamily& s) {
    InvariantFamily out;
    out.side = Side::Right;
    for (std::size_t p = 0; p < pc.order(); ++p)
        out.values.push_back(transpose(s.element(p)) * phi.values[pc.group().inv(p)]);
    return out;
}

Matrix gram_matrix(const ComponentAlgebra& alg, const Vector& phi) {
    const std::size_t d = alg.dim();
    Matrix g(d, d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) g(a, b) = dot(phi, alg.basis_product(a, b));
    return g;
}

Report check_uniqueness_faithfulness(const PiCoalgebra& pc, const std::vector<InvariantFamily>& fams) {
    const auto& g = pc.group();
    Report rep;
    rep.title = "integrals";
    bool empty = true;
    for (std::size_t p = 0; p < pc.order(); ++p) empty = empty && pc.dim(p) == 0;
    if (empty) {
        for (auto name : {"dimension-one", "nonvanishing", "faithful"}) rep.skip(name, "all components are zero");
        return rep;
    }
    auto& dim = rep.add("dimension-one");
    dim.cells = 1;
    dim.note = "solution space dimension " + std::to_string(fams.size());
    if (fams.size() != 1) dim.fail(dim.note);
    if (fams.empty()) {
        rep.skip("nonvanishing", "no invariant family");
        rep.skip("faithful", "no invariant family");
        return rep;
    }
    const auto& phi = fams.front();
    auto& nz = rep.add("nonvanishing");
    auto& fa = rep.add("faithful");
    nz.cells = fa.cells = pc.order();
    for (std::size_t p = 0; p < pc.order(); ++p) {
        if (pc.dim(p) == 0) continue;
        if (mhgc::is_zero(phi.values[p])) nz.fail("phi vanishes on " + g.label(p));
        const Matrix gm = gram_matrix(pc.component(p), phi.values[p]);
        const std::size_t r = rank(gm);
        if (r != pc.dim(p)) fa.fail(g.label(p) + ": Gram rank " + std::to_string(r) + " of " + std::to_string(pc.dim(p)));
    }
    return rep;
}

Report check_invariant_spans(const PiCoalgebra& pc, const InvariantFamily& phi, const InvariantFamily& psi,
                             const AntipodeFamily& s) {
    const auto& g = pc.group();
    Report rep;
    rep.title = "invariant-spans";
    auto& ps = rep.add("phi-s-right-invariant");
    ps.cells = 1;
    if (!s.element_valued()) {
        ps.skipped = true;
        ps.note = "antipode is not element-valued";
    } else if (!is_invariant(pc, compose_with_antipode(pc, phi, s))) {
        ps.fail("phi o S does not solve the right invariance system");
    }
    auto& sp = rep.add("four-spans");
    sp.cells = pc.order();
    for (std::size_t p = 0; p < pc.order(); ++p) {
        const std::size_t d = pc.dim(p);
        if (d == 0) continue;
        const Matrix gp = gram_matrix(pc.component(p), phi.values[p]);
        const Matrix gs = gram_matrix(pc.component(p), psi.values[p]);
        // Row a of G is x ↦ φ(e_a x); row a of Gᵀ is x ↦ φ(x e_a).
        const std::vector<Matrix> sets{gp, transpose(gp), gs, transpose(gs)};
        const std::size_t joint = span_rank(sets, d);
        for (const auto& m : sets)
            if (rank(m) != joint) {
                sp.fail(g.label(p) + ": spans differ");
                break;
            }
    }
    return rep;
}

// ---------------------------------------------------------------- modular data

std::vector<Multiplier> modular_element(const PiCoalgebra& pc, const InvariantFamily& phi) {
    const auto& g = pc.group();
    const std::size_t n = g.order();
    std::vector<Multiplier> d(n);
    for (std::size_t q = 0; q < n; ++q) {
        const std::size_t dq = pc.dim(q);
        if (dq == 0) {
            d[q] = zero_multiplier(0);
            continue;
        }
        std::optional<Matrix> left;
        for (std::size_t p = 0; p < n && !left; ++p) {
            const std::size_t r = g.mul(p, q);
            for (std::size_t a = 0; a < pc.dim(r) && !left; ++a) {
                const Scalar& pa = phi.values[r][a];
                if (is_zero(pa)) continue;
                Matrix m(dq, dq);
                for (std::size_t b = 0; b < dq; ++b)
                    m.set_column(b, scaled(contract_first(phi.values[p], pc.t1(p, q).column(a * dq + b), dq), 1 / pa));
                left = std::move(m);
            }
        }
        for (std::size_t p = 0; p < n && left; ++p) {
            const std::size_t r = g.mul(p, q);
            const Matrix& t1 = pc.t1(p, q);
            for (std::size_t a = 0; a < pc.dim(r); ++a)
                for (std::size_t b = 0; b < dq; ++b)
                    if (contract_first(phi.values[p], t1.column(a * dq + b), dq) !=
                        scaled(left->column(b), phi.values[r][a]))
                        throw Error(ErrorCode::Inconsistent, "D_" + g.label(q) + " is not determined consistently at " +
                                                                 cell_name(g, p, q) + ", a=" + e(a) + " b=" + e(b));
        }
        if (!left) throw Error(ErrorCode::Inconsistent, "phi vanishes on every A_pq with q = " + g.label(q));
        auto right = complete_multiplier(pc.component(q), *left);
        if (!right) throw Error(ErrorCode::Inconsistent, "D_" + g.label(q) + " admits no right action");
        d[q] = {std::move(*left), std::move(*right)};
    }
    return d;
}

Report verify_modular_element(const PiCoalgebra& pc, const InvariantFamily& phi, const std::vector<Multiplier>& d,
                              const Counit& eps, const AntipodeFamily& s) {
    const auto& g = pc.group();
    const std::size_t n = g.order();
    Report rep;
    rep.title = "modular-element";
    auto& cp = rep.add("grouplike");
    cp.cells = n * n;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            const Matrix& t1 = pc.t1(p, q);
            const std::size_t r = g.mul(p, q);
            if (t1 * kron(d[r].left, Matrix::identity(pc.dim(q))) != kron(d[p].left, d[q].left) * t1)
                cp.fail(cell_name(g, p, q));
        }
    auto& ce = rep.add("counit");
    ce.cells = 1;
    const std::size_t one = g.identity();
    if (pc.dim(one) > 0 && transpose(d[one].left) * eps.eps != eps.eps) ce.fail("eps(D a) != eps(a)");

    if (!s.element_valued()) {
        rep.skip("antipode-inverse", "antipode is not element-valued");
        rep.skip("phi-antipode", "antipode is not element-valued");
        return rep;
    }
    auto& ai = rep.add("antipode-inverse");
    auto& pa = rep.add("phi-antipode");
    ai.cells = pa.cells = n;
    for (std::size_t p = 0; p < n; ++p) {
        const std::size_t pi = g.inv(p);
        if (pc.dim(p) == 0) continue;
        // L_{S(D_p)} = S_p R_{D_p} S_p⁻¹
        Matrix sinv;
        try {
            sinv = invert(s.element(p));
        } catch (const Error&) {
            ai.fail("S_" + g.label(p) + " is singular");
            continue;
        }
        const Matrix lsd = s.element(p) * d[p].right * sinv;
        const Matrix id = Matrix::identity(pc.dim(pi));
        if (lsd * d[pi].left != id || d[pi].left * lsd != id)
            ai.fail("S_" + g.label(p) + "(D_" + g.label(p) + ") is not the inverse of D_" + g.label(pi));
        if (transpose(s.element(p)) * phi.values[pi] != transpose(d[p].right) * phi.values[p])
            pa.fail(g.label(p));
    }
    return rep;
}

ModularData modular_automorphisms(const PiCoalgebra& pc, const InvariantFamily& phi, const InvariantFamily& psi,
                                  const AntipodeFamily& s, std::vector<Multiplier> d) {
    const auto& g = pc.group();
    const std::size_t n = g.order();
    ModularData md;
    md.d = std::move(d);
    auto sigma_of = [&](const Vector& f, std::size_t p, const char* name) {
        const Matrix gm = gram_matrix(pc.component(p), f);
        try {
            // φ(ab) = φ(bσ(a))  <=>  Gᵀ = Gσ
            return Matrix(invert(gm) * transpose(gm));
        } catch (const Error&) {
            throw Error(ErrorCode::NotFaithful, std::string(name) + "_" + g.label(p) + " has a singular Gram matrix");
        }
    };
    std::optional<Scalar> tau;
    for (std::size_t p = 0; p < n; ++p) {
        const std::size_t dp = pc.dim(p);
        if (dp == 0) {
            md.sigma_mod.emplace_back(0, 0);
            md.sigma_mod_prime.emplace_back(0, 0);
            continue;
        }
        md.sigma_mod.push_back(sigma_of(phi.values[p], p, "phi"));
        md.sigma_mod_prime.push_back(sigma_of(psi.values[p], p, "psi"));
        const Vector& f = phi.values[p];
        const Vector v = transpose(s_squared(s, g, p)) * f;
        std::size_t i = 0;
        while (i < dp && is_zero(f[i])) ++i;
        const Scalar t = v[i] / f[i];
        if (v != scaled(f, t))
            throw Error(ErrorCode::TauInconsistent, "phi o S^2 is not a multiple of phi on " + g.label(p));
        if (tau && *tau != t)
            throw Error(ErrorCode::TauInconsistent, "tau differs on " + g.label(p) + ": " + format_scalar(t) + " vs " +
                                                        format_scalar(*tau));
        tau = t;
    }
    md.tau = tau.value_or(Scalar(1));
    return md;
}

Report verify_modular_data(const PiCoalgebra& pc, const InvariantFamily& phi, const InvariantFamily& psi,
                           const AntipodeFamily& s, const ModularData& md) {
    const auto& g = pc.group();
    const std::size_t n = g.order();
    Report rep;
    rep.title = "modular";
    auto& au = rep.add("automorphisms");
    auto& kms = rep.add("modular-property");
    auto& inv = rep.add("functional-invariant");
    auto& sd = rep.add("modular-element-scaling");
    auto& ds = rep.add("d-sigma");
    au.cells = kms.cells = inv.cells = sd.cells = ds.cells = n;
    sd.note = "tau = " + format_scalar(md.tau);
    for (std::size_t p = 0; p < n; ++p) {
        const std::size_t dp = pc.dim(p);
        if (dp == 0) continue;
        const auto& alg = pc.component(p);
        for (const auto* pair : {&md.sigma_mod, &md.sigma_mod_prime}) {
            const Matrix& sg = (*pair)[p];
            const bool prime = pair == &md.sigma_mod_prime;
            const Vector& f = prime ? psi.values[p] : phi.values[p];
            const std::string nm = std::string(prime ? "sigma'_" : "sigma_") + g.label(p);
            bool hom = rank(sg) == dp;
            for (std::size_t a = 0; a < dp && hom; ++a)
                for (std::size_t b = 0; b < dp && hom; ++b)
                    hom = sg * alg.basis_product(a, b) == alg.multiply(sg.column(a), sg.column(b));
            if (!hom) au.fail(nm);
            const Matrix gm = gram_matrix(alg, f);
            if (transpose(gm) != gm * sg) kms.fail(nm);
            if (transpose(sg) * f != f) inv.fail(nm);
            // L_{σ(D)} = σ L_D σ⁻¹ must equal L_D / τ.
            const Matrix conj = sg * md.d[p].left * invert(sg);
            if (conj != scaled(md.d[p].left, 1 / md.tau)) sd.fail(nm + "(D_" + g.label(p) + ")");
        }
        // σ′ = D σ(·) D⁻¹
        try {
            const Matrix rdinv = invert(md.d[p].right);
            if (md.d[p].left * rdinv * md.sigma_mod[p] != md.sigma_mod_prime[p]) ds.fail(g.label(p));
        } catch (const Error&) {
            ds.fail("D_" + g.label(p) + " is not invertible");
        }
    }

    if (!s.element_valued()) {
        rep.skip("antipode-sigma", "antipode is not element-valued");
        rep.skip("coproduct-sigma", "antipode is not element-valued");
        rep.skip("coproduct-sigma-prime", "antipode is not element-valued");
        return rep;
    }
    auto& as = rep.add("antipode-sigma");
    as.cells = n;
    for (std::size_t p = 0; p < n; ++p) {
        const std::size_t pi = g.inv(p);
        if (pc.dim(p) == 0) continue;
        // S_p∘σ′_p = σ_{p⁻¹}⁻¹∘S_p
        if (s.element(p) * md.sigma_mod_prime[p] != invert(md.sigma_mod[pi]) * s.element(p)) as.fail(g.label(p));
    }
    auto& cs = rep.add("coproduct-sigma");
    auto& csp = rep.add("coproduct-sigma-prime");
    cs.cells = csp.cells = n * n;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            const std::size_t r = g.mul(p, q);
            if (pc.dim(p) == 0 || pc.dim(q) == 0 || pc.dim(r) == 0) continue;
            const Matrix& t1 = pc.t1(p, q);
            const Matrix& t2 = pc.t2(p, q);
            if (t1 * kron(md.sigma_mod[r], md.sigma_mod[q]) != kron(s_squared(s, g, p), md.sigma_mod[q]) * t1)
                cs.fail(cell_name(g, p, q));
            const Matrix s2q_inv = invert(s_squared(s, g, q));
            if (t2 * kron(md.sigma_mod_prime[p], md.sigma_mod_prime[r]) != kron(md.sigma_mod_prime[p], s2q_inv) * t2)
                csp.fail(cell_name(g, p, q));
        }
    return rep;
}

// ---------------------------------------------------------------------- hat dual

HatDual hat_dual(const PiCoalgebra& pc, const InvariantFamily& phi, const InvariantFamily& psi, const Counit& eps) {
    const auto& g = pc.group();
    const std::size_t n = g.order();
    const auto off = offsets(pc);
    const std::size_t dim = off[n];
    const DualAlgebra dual = dual_algebra(pc);

    std::vector<Scalar> st(dim * dim * dim);
    Matrix t1(dim * dim, dim * dim), t2(dim * dim, dim * dim);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            const std::size_t r = g.mul(p, q), dp = pc.dim(p), dq = pc.dim(q), dr = pc.dim(r);
            const Matrix& m = dual.prod(p, q);
            for (std::size_t i = 0; i < dp; ++i)
                for (std::size_t j = 0; j < dq; ++j)
                    for (std::size_t k = 0; k < dr; ++k)
                        st[((off[p] + i) * dim + off[q] + j) * dim + off[r] + k] = m(k, i * dq + j);
            // T̂¹: (p,q) → (p,pq) by (T²_{p,q})ᵀ;  T̂²: (p,q) → (pq,q) by (T¹_{p,q})ᵀ.
            const Matrix& a2 = pc.t2(p, q);
            const Matrix& a1 = pc.t1(p, q);
            for (std::size_t i = 0; i < dp; ++i)
                for (std::size_t j = 0; j < dq; ++j) {
                    const std::size_t col = (off[p] + i) * dim + off[q] + j;
                    for (std::size_t u = 0; u < dp; ++u)
                        for (std::size_t v = 0; v < dr; ++v)
                            t1((off[p] + u) * dim + off[r] + v, col) = a2(i * dq + j, u * dr + v);
                    for (std::size_t u = 0; u < dr; ++u)
                        for (std::size_t v = 0; v < dq; ++v)
                            t2((off[r] + u) * dim + off[q] + v, col) = a1(i * dq + j, u * dq + v);
                }
        }

    HatDual hat{PiCoalgebra(FiniteGroup::trivial(), {ComponentAlgebra(dim, std::move(st))}, {std::move(t1)},
                            {std::move(t2)}),
                {},
                {Side::Left, {Vector(dim)}},
                {Side::Right, {Vector(dim)}}};
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t i = 0; i < pc.dim(p); ++i) hat.labels.push_back(p);

    const std::size_t one = g.identity(), d1 = pc.dim(one);
    if (d1 == 0) return hat;
    Matrix gphi, gpsi;
    try {
        gpsi = invert(gram_matrix(pc.component(one), psi.values[one]));
        gphi = invert(gram_matrix(pc.component(one), phi.values[one]));
    } catch (const Error&) {
        throw Error(ErrorCode::NotFaithful, "invariant functional on A_" + g.label(one) + " is not faithful");
    }
    // φ̂(ψ(a·)) = ε(a) and ψ̂(φ(·a)) = ε(a).
    const Vector ph = gpsi * eps.eps;
    const Vector ps = transpose(gphi) * eps.eps;
    for (std::size_t i = 0; i < d1; ++i) {
        hat.phi_hat.values[0][off[one] + i] = ph[i];
        hat.psi_hat.values[0][off[one] + i] = ps[i];
    }
    return hat;
}

Report verify_hat_dual(const HatDual& hat) {
    Report rep;
    rep.title = "hat-dual";
    const auto& c = hat.coalgebra;
    rep.merge(verify_nondegeneracy(c), "hat");
    rep.merge(verify_bijectivity(c), "hat");
    rep.merge(verify_comultiplication(c), "hat");
    rep.merge(verify_regularity(c), "hat");
    auto& l = rep.add("hat.phi-left-invariant");
    auto& r = rep.add("hat.psi-right-invariant");
    l.cells = r.cells = 1;
    if (c.dim(0) > 0 && hat.phi_hat.is_zero()) l.fail("phi-hat is zero");
    else if (!is_invariant(c, hat.phi_hat)) l.fail("phi-hat is not left invariant");
    if (c.dim(0) > 0 && hat.psi_hat.is_zero()) r.fail("psi-hat is zero");
    else if (!is_invariant(c, hat.psi_hat)) r.fail("psi-hat is not right invariant");
    return rep;
}

Report bidual_isomorphism(const PiCoalgebra& pc) {
    Report rep;
    rep.title = "bidual";
    const auto& g = pc.group();
    bool empty = true;
    for (std::size_t p = 0; p < pc.order(); ++p) empty = empty && pc.dim(p) == 0;
    if (empty) {
        rep.add("evaluation-isomorphism").note = "all components are zero";
        return rep;
    }
    const Counit eps = derive_counit(pc);
    const auto phis = solve_invariant(pc, Side::Left);
    const auto psis = solve_invariant(pc, Side::Right);
    if (phis.empty() || psis.empty()) {
        rep.add("evaluation-isomorphism").fail("no invariant functionals");
        return rep;
    }
    const HatDual h1 = hat_dual(pc, phis.front(), psis.front(), eps);
    const Counit eps1 = derive_counit(h1.coalgebra);
    const HatDual h2 = hat_dual(h1.coalgebra, h1.phi_hat, h1.psi_hat, eps1);

    // In dual-of-dual bases the evaluation map a ↦ (f ↦ f(a)) is the identity matrix.
    const CogradedMHA cm = to_cograded(pc);
    const auto& b = h2.coalgebra;
    auto& ev = rep.add("evaluation-isomorphism");
    ev.cells = 1;
    if (b.dim(0) != cm.dim()) ev.fail("dimension " + std::to_string(b.dim(0)) + " vs " + std::to_string(cm.dim()));
    auto& pr = rep.add("products");
    auto& c1 = rep.add("t1");
    auto& c2 = rep.add("t2");
    pr.cells = c1.cells = c2.cells = 1;
    if (!ev.passed) return rep;
    if (b.component(0) != cm.algebra) pr.fail("structure constants differ");
    if (SparseMatrix::from_dense(b.t1(0, 0)) != cm.t1g) c1.fail("t1 differs from the direct sum");
    if (SparseMatrix::from_dense(b.t2(0, 0)) != cm.t2g) c2.fail("t2 differs from the direct sum");

    auto& sp = rep.add("split-equals-original");
    sp.cells = 1;
    CogradedMHA back;
    back.group = g;
    back.algebra = b.component(0);
    back.labels = h1.labels;
    back.t1g = SparseMatrix::from_dense(b.t1(0, 0));
    back.t2g = SparseMatrix::from_dense(b.t2(0, 0));
    for (std::size_t p = 0; p < g.order(); ++p) {
        Matrix proj(cm.dim(), cm.dim());
        for (std::size_t i = 0; i < cm.dim(); ++i)
            if (back.labels[i] == p) proj(i, i) = 1;
        back.gamma.push_back({proj, proj});
    }
    try {
        if (from_cograded(back) != pc) sp.fail("split family differs");
    } catch (const Error& err) {
        sp.fail(err.what());
    }
    return rep;
}

}  // namespace mhgc
