#pragma once

// Closed forms for the function-algebra family, computed pointwise from the
// group table alone. Nothing here calls into the engine's constructions.

#include "mhgc/algebra.hpp"

#include <cstddef>
#include <vector>

namespace oracle {

using mhgc::FiniteGroup;
using mhgc::Matrix;
using mhgc::Vector;

inline std::size_t mul3(const FiniteGroup& g, std::size_t a, std::size_t b, std::size_t c) {
    return g.mul(g.mul(a, b), c);
}

/// Δ_{p,q}(δ_x)(s,t) = [q⁻¹ s q t = x].
inline bool delta_support(const FiniteGroup& g, std::size_t q, std::size_t x, std::size_t s, std::size_t t) {
    return g.mul(mul3(g, g.inv(q), s, q), t) == x;
}

/// T¹(δ_x⊗δ_y) = Σ_s [q⁻¹sqy = x] δ_s⊗δ_y, by summing over all points.
inline Matrix t1(const FiniteGroup& g, std::size_t q) {
    const std::size_t n = g.order();
    Matrix m(n * n, n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t s = 0; s < n; ++s)
                for (std::size_t t = 0; t < n; ++t)
                    if (t == y && delta_support(g, q, x, s, t)) m(s * n + t, x * n + y) += 1;
    return m;
}

/// T²(δ_x⊗δ_y) = Σ_t [q⁻¹xqt = y] δ_x⊗δ_t.
inline Matrix t2(const FiniteGroup& g, std::size_t q) {
    const std::size_t n = g.order();
    Matrix m(n * n, n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t s = 0; s < n; ++s)
                for (std::size_t t = 0; t < n; ++t)
                    if (s == x && delta_support(g, q, y, s, t)) m(s * n + t, x * n + y) += 1;
    return m;
}

/// Matrix of f ↦ F with F(s,t) = f(u(s,t), v(s,t)) on functions of two variables.
template <class U, class V>
Matrix substitution(const FiniteGroup& g, U u, V v) {
    const std::size_t n = g.order();
    Matrix m(n * n, n * n);
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t) m(s * n + t, u(s, t) * n + v(s, t)) = 1;
    return m;
}

/// R¹_{α,β}(f)(s,t) = f(βst⁻¹β⁻¹, t).
inline Matrix r1(const FiniteGroup& g, std::size_t beta) {
    return substitution(
        g, [&](std::size_t s, std::size_t t) { return g.mul(mul3(g, beta, s, g.inv(t)), g.inv(beta)); },
        [](std::size_t, std::size_t t) { return t; });
}

/// R²_{α,β}(f)(s,t) = f(s, βs⁻¹tβ⁻¹), the published closed form.
inline Matrix r2_published(const FiniteGroup& g, std::size_t beta) {
    return substitution(
        g, [](std::size_t s, std::size_t) { return s; },
        [&](std::size_t s, std::size_t t) { return g.mul(mul3(g, beta, g.inv(s), t), g.inv(beta)); });
}

/// The two-sided inverse of T²: f ↦ f(s, β⁻¹s⁻¹βt).
inline Matrix r2_inverse(const FiniteGroup& g, std::size_t beta) {
    return substitution(
        g, [](std::size_t s, std::size_t) { return s; },
        [&](std::size_t s, std::size_t t) { return g.mul(mul3(g, g.inv(beta), g.inv(s), beta), t); });
}

/// Canonical rational n/d.
inline mpq_class q(long n, long d = 1) {
    mpq_class v(n, d);
    v.canonicalize();
    return v;
}

/// ε(δ_x) = [x = e].
inline Vector counit(const FiniteGroup& g) {
    Vector v(g.order());
    v[g.identity()] = 1;
    return v;
}

/// S_p(f)(t) = f(p⁻¹t⁻¹p): column x has its 1 in row p x⁻¹ p⁻¹.
inline Matrix antipode(const FiniteGroup& g, std::size_t p) {
    const std::size_t n = g.order();
    Matrix m(n, n);
    for (std::size_t t = 0; t < n; ++t) m(t, mul3(g, g.inv(p), g.inv(t), p)) = 1;
    return m;
}

/// Counting functional on n points.
inline Vector counting(std::size_t n) { return Vector(n, mpq_class(1)); }

/// Dual product δ*_s · δ*_t in A_p*⊗A_q* → A_{pq}*: evaluates Δ(δ_x) at (s,t).
inline Matrix dual_product(const FiniteGroup& g, std::size_t q) {
    const std::size_t n = g.order();
    Matrix m(n, n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t s = 0; s < n; ++s)
            for (std::size_t t = 0; t < n; ++t)
                if (delta_support(g, q, x, s, t)) m(x, s * n + t) += 1;
    return m;
}

/// Pointwise product of indicator functions on n points: δ_i δ_j = [i = j] δ_i.
inline Vector pointwise(const Vector& f, const Vector& h) {
    Vector out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i] * h[i];
    return out;
}

inline bool is_permutation_matrix(const Matrix& m) {
    if (!m.square()) return false;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        int row = 0, col = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j) != 0 && m(i, j) != 1) return false;
            row += m(i, j) == 1;
            col += m(j, i) == 1;
        }
        if (row != 1 || col != 1) return false;
    }
    return true;
}

}  // namespace oracle
