#include "mhgc/algebra.hpp"

#include "mhgc/error.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace mhgc {

namespace {

std::string triple(std::size_t a, std::size_t b, std::size_t c) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

Vector vec(const Matrix& m) { return m.data(); }

}  // namespace

// ---------------------------------------------------------------- FiniteGroup

FiniteGroup::FiniteGroup() : FiniteGroup({{0}}, 0, {"e"}) {}

FiniteGroup::FiniteGroup(std::vector<std::vector<std::size_t>> table, std::size_t identity,
                         std::vector<std::string> labels)
    : table_(std::move(table)), identity_(identity), labels_(std::move(labels)) {
    const std::size_t n = table_.size();
    if (n == 0) throw Error(ErrorCode::InvalidGroup, "empty multiplication table");
    for (const auto& row : table_) {
        if (row.size() != n) throw Error(ErrorCode::InvalidGroup, "table is not square");
        for (auto x : row)
            if (x >= n) throw Error(ErrorCode::InvalidGroup, "table entry out of range");
    }
    if (identity_ >= n) throw Error(ErrorCode::InvalidGroup, "identity index out of range");
    for (std::size_t a = 0; a < n; ++a) {
        if (table_[identity_][a] != a || table_[a][identity_] != a)
            throw Error(ErrorCode::InvalidGroup, "identity law fails at " + std::to_string(a));
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                    throw Error(ErrorCode::InvalidGroup, "associativity fails at " + triple(a, b, c));
    inverse_.assign(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (table_[a][b] == identity_ && table_[b][a] == identity_) inverse_[a] = b;
    for (std::size_t a = 0; a < n; ++a)
        if (inverse_[a] == n) throw Error(ErrorCode::InvalidGroup, "no inverse for " + std::to_string(a));
    if (labels_.empty()) {
        for (std::size_t a = 0; a < n; ++a) labels_.push_back(a == identity_ ? "e" : "g" + std::to_string(a));
    }
    if (labels_.size() != n) throw Error(ErrorCode::InvalidGroup, "label count differs from order");
}

FiniteGroup FiniteGroup::trivial() { return FiniteGroup(); }

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
    if (n == 0) throw Error(ErrorCode::InvalidGroup, "cyclic group of order 0");
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
        labels.push_back(a == 0 ? "e" : (a == 1 ? "g" : "g^" + std::to_string(a)));
    }
    return FiniteGroup(std::move(t), 0, std::move(labels));
}

FiniteGroup FiniteGroup::symmetric3() {
    using Perm = std::array<int, 3>;  // images of 1,2,3 (zero-based)
    const std::vector<Perm> elems = {Perm{0, 1, 2}, Perm{1, 0, 2}, Perm{2, 1, 0},
                                     Perm{0, 2, 1}, Perm{1, 2, 0}, Perm{2, 0, 1}};
    const std::vector<std::string> labels = {"e", "(12)", "(13)", "(23)", "(123)", "(132)"};
    std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = 0; b < 6; ++b) {
            Perm c{};
            for (int x = 0; x < 3; ++x) c[x] = elems[a][elems[b][x]];
            t[a][b] = static_cast<std::size_t>(std::find(elems.begin(), elems.end(), c) - elems.begin());
        }
    return FiniteGroup(std::move(t), 0, labels);
}

FiniteGroup FiniteGroup::by_name(const std::string& name) {
    if (name == "trivial") return trivial();
    if (name == "S3") return symmetric3();
    std::string digits;
    if (name.rfind("Z/", 0) == 0) digits = name.substr(2);
    else if (name.rfind("Z", 0) == 0) digits = name.substr(1);
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) &&
        digits.size() < 4) {
        const auto n = static_cast<std::size_t>(std::stoul(digits));
        if (n >= 1) return cyclic(n);
    }
    throw Error(ErrorCode::InvalidArgument, "unknown group name '" + name + "'");
}

std::size_t FiniteGroup::index_of(const std::string& label) const {
    const auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw Error(ErrorCode::InvalidArgument, "no element labelled '" + label + "'");
    return static_cast<std::size_t>(it - labels_.begin());
}

FiniteGroup FiniteGroup::opposite() const {
    const std::size_t n = order();
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) t[a][b] = table_[b][a];
    return FiniteGroup(std::move(t), identity_, labels_);
}

// ----------------------------------------------------------- ComponentAlgebra

ComponentAlgebra::ComponentAlgebra(std::size_t dim, std::vector<Scalar> structure)
    : dim_(dim), structure_(std::move(structure)) {
    if (structure_.size() != dim_ * dim_ * dim_)
        throw Error(ErrorCode::DimensionMismatch, "structure tensor needs dim^3 entries");
    left_.assign(dim_, Matrix(dim_, dim_));
    right_.assign(dim_, Matrix(dim_, dim_));
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            for (std::size_t k = 0; k < dim_; ++k) {
                const Scalar& v = c(i, j, k);
                if (is_zero(v)) continue;
                left_[i](k, j) = v;
                right_[j](k, i) = v;
            }
}

ComponentAlgebra ComponentAlgebra::functions_on_points(std::size_t n) {
    std::vector<Scalar> s(n * n * n);
    for (std::size_t i = 0; i < n; ++i) s[(i * n + i) * n + i] = 1;
    return ComponentAlgebra(n, std::move(s));
}

ComponentAlgebra ComponentAlgebra::zero_product(std::size_t n) { return ComponentAlgebra(n, std::vector<Scalar>(n * n * n)); }

ComponentAlgebra ComponentAlgebra::group_algebra(const FiniteGroup& g) {
    const std::size_t n = g.order();
    std::vector<Scalar> s(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s[(i * n + j) * n + g.mul(i, j)] = 1;
    return ComponentAlgebra(n, std::move(s));
}

Vector ComponentAlgebra::basis_product(std::size_t i, std::size_t j) const {
    return Vector(structure_.begin() + static_cast<std::ptrdiff_t>((i * dim_ + j) * dim_),
                  structure_.begin() + static_cast<std::ptrdiff_t>((i * dim_ + j + 1) * dim_));
}

Vector ComponentAlgebra::multiply(const Vector& x, const Vector& y) const {
    if (x.size() != dim_ || y.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "algebra product");
    Vector z(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (is_zero(x[i])) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (is_zero(y[j])) continue;
            const Scalar xy = x[i] * y[j];
            for (std::size_t k = 0; k < dim_; ++k) {
                const Scalar& v = c(i, j, k);
                if (!is_zero(v)) z[k] += xy * v;
            }
        }
    }
    return z;
}

Matrix ComponentAlgebra::left_mul_of(const Vector& x) const {
    Matrix m(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        if (!is_zero(x[i])) m = m + scaled(left_[i], x[i]);
    return m;
}

Matrix ComponentAlgebra::right_mul_of(const Vector& x) const {
    Matrix m(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        if (!is_zero(x[i])) m = m + scaled(right_[i], x[i]);
    return m;
}

std::optional<std::array<std::size_t, 3>> ComponentAlgebra::associativity_witness() const {
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) {
            const Vector ij = basis_product(i, j);
            for (std::size_t k = 0; k < dim_; ++k) {
                if (right_[k] * ij != left_[i] * basis_product(j, k)) return std::array<std::size_t, 3>{i, j, k};
            }
        }
    return std::nullopt;
}

std::optional<Vector> ComponentAlgebra::unit() const {
    // u e_i = e_i and e_i u = e_i: stack the maps u ↦ u e_i and u ↦ e_i u.
    std::vector<Matrix> blocks;
    Vector rhs;
    for (std::size_t i = 0; i < dim_; ++i) {
        blocks.push_back(right_[i]);
        blocks.push_back(left_[i]);
        const Vector ei = unit_vector(dim_, i);
        rhs.insert(rhs.end(), ei.begin(), ei.end());
        rhs.insert(rhs.end(), ei.begin(), ei.end());
    }
    if (dim_ == 0) return Vector{};
    return solve(vstack(blocks, dim_), rhs);
}

ComponentAlgebra tensor_product(const ComponentAlgebra& a, const ComponentAlgebra& b) {
    const std::size_t da = a.dim(), db = b.dim(), d = da * db;
    std::vector<Scalar> s(d * d * d);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t k = 0; k < da; ++k)
            for (std::size_t m = 0; m < da; ++m) {
                const Scalar& x = a.c(i, k, m);
                if (is_zero(x)) continue;
                for (std::size_t j = 0; j < db; ++j)
                    for (std::size_t l = 0; l < db; ++l)
                        for (std::size_t n = 0; n < db; ++n) {
                            const Scalar& y = b.c(j, l, n);
                            if (!is_zero(y)) s[((i * db + j) * d + (k * db + l)) * d + (m * db + n)] = x * y;
                        }
            }
    return ComponentAlgebra(d, std::move(s));
}

ComponentAlgebra direct_sum(const std::vector<ComponentAlgebra>& parts) {
    std::size_t d = 0;
    for (const auto& p : parts) d += p.dim();
    std::vector<Scalar> s(d * d * d);
    std::size_t off = 0;
    for (const auto& p : parts) {
        for (std::size_t i = 0; i < p.dim(); ++i)
            for (std::size_t j = 0; j < p.dim(); ++j)
                for (std::size_t k = 0; k < p.dim(); ++k)
                    s[((off + i) * d + off + j) * d + off + k] = p.c(i, j, k);
        off += p.dim();
    }
    return ComponentAlgebra(d, std::move(s));
}

bool check_nondegenerate(const ComponentAlgebra& alg) {
    const std::size_t d = alg.dim();
    if (d == 0) return true;
    std::vector<Matrix> lefts, rights;
    for (std::size_t i = 0; i < d; ++i) {
        lefts.push_back(alg.left_mul(i));
        rights.push_back(alg.right_mul(i));
    }
    // ab = 0 for all a forces b = 0  <=>  b ↦ (e_i b)_i injective, and symmetrically.
    return rank(vstack(lefts, d)) == d && rank(vstack(rights, d)) == d;
}

// ------------------------------------------------------------------ Multiplier

Multiplier identity_multiplier(std::size_t dim) { return {Matrix::identity(dim), Matrix::identity(dim)}; }

Multiplier zero_multiplier(std::size_t dim) { return {Matrix(dim, dim), Matrix(dim, dim)}; }

Multiplier multiplier_from_element(const ComponentAlgebra& alg, const Vector& a) {
    return {alg.left_mul_of(a), alg.right_mul_of(a)};
}

std::optional<Vector> element_from_multiplier(const ComponentAlgebra& alg, const Multiplier& m) {
    const std::size_t d = alg.dim();
    if (m.left.rows() != d || m.left.cols() != d || m.right.rows() != d || m.right.cols() != d)
        throw Error(ErrorCode::DimensionMismatch, "multiplier size differs from algebra");
    if (d == 0) return Vector{};
    Matrix system(2 * d * d, d);
    for (std::size_t i = 0; i < d; ++i) {
        const auto& l = alg.left_mul(i).data();
        const auto& r = alg.right_mul(i).data();
        for (std::size_t t = 0; t < d * d; ++t) {
            system(t, i) = l[t];
            system(d * d + t, i) = r[t];
        }
    }
    Vector rhs = vec(m.left);
    const Vector r = vec(m.right);
    rhs.insert(rhs.end(), r.begin(), r.end());
    return solve(system, rhs);
}

Multiplier compose_multipliers(const Multiplier& m1, const Multiplier& m2) {
    return {m1.left * m2.left, m2.right * m1.right};
}

Multiplier scaled(const Multiplier& m, const Scalar& c) { return {scaled(m.left, c), scaled(m.right, c)}; }

Multiplier operator+(const Multiplier& a, const Multiplier& b) { return {a.left + b.left, a.right + b.right}; }

std::optional<std::string> multiplier_defect(const ComponentAlgebra& alg, const Multiplier& m) {
    const std::size_t d = alg.dim();
    if (m.left.rows() != d || m.left.cols() != d || m.right.rows() != d || m.right.cols() != d)
        return std::string("size mismatch");
    for (std::size_t a = 0; a < d; ++a) {
        const Vector ra = m.right.column(a);
        for (std::size_t b = 0; b < d; ++b) {
            if (alg.right_mul(b) * ra != alg.left_mul(a) * m.left.column(b))
                return "R(e" + std::to_string(a) + ")e" + std::to_string(b) + " != e" + std::to_string(a) + "L(e" +
                       std::to_string(b) + ")";
            const Vector ab = alg.basis_product(a, b);
            if (m.left * ab != alg.right_mul(b) * m.left.column(a))
                return "L(e" + std::to_string(a) + "e" + std::to_string(b) + ") != L(e" + std::to_string(a) + ")e" +
                       std::to_string(b);
            if (m.right * ab != alg.left_mul(a) * m.right.column(b))
                return "R(e" + std::to_string(a) + "e" + std::to_string(b) + ") != e" + std::to_string(a) + "R(e" +
                       std::to_string(b) + ")";
        }
    }
    return std::nullopt;
}

std::optional<Matrix> complete_multiplier(const ComponentAlgebra& alg, const Matrix& left) {
    const std::size_t d = alg.dim();
    if (d == 0) return Matrix();
    std::vector<Matrix> blocks;
    for (std::size_t b = 0; b < d; ++b) blocks.push_back(alg.right_mul(b));
    const LinearSolver solver(vstack(blocks, d));
    Matrix right(d, d);
    for (std::size_t a = 0; a < d; ++a) {
        Vector rhs;
        for (std::size_t b = 0; b < d; ++b) {
            const Vector v = alg.left_mul(a) * left.column(b);
            rhs.insert(rhs.end(), v.begin(), v.end());
        }
        auto col = solver.solve(rhs);
        if (!col) return std::nullopt;
        right.set_column(a, *col);
    }
    return right;
}

Multiplier extend_nondegenerate_hom(const ComponentAlgebra& a, const ComponentAlgebra& b,
                                    const std::vector<Multiplier>& phi, const Multiplier& m) {
    const std::size_t da = a.dim(), db = b.dim();
    if (phi.size() != da) throw Error(ErrorCode::DimensionMismatch, "phi needs one value per basis vector");
    if (db == 0) return zero_multiplier(0);
    auto phi_of = [&](const Vector& x) {
        Multiplier out = zero_multiplier(db);
        for (std::size_t i = 0; i < da; ++i)
            if (!is_zero(x[i])) out = out + scaled(phi[i], x[i]);
        return out;
    };
    // Left map: Lbar(φ(a)b) = φ(ma)b; right map: Rbar(bφ(a)) = bφ(am).
    std::vector<Vector> src_l, dst_l, src_r, dst_r;
    for (std::size_t i = 0; i < da; ++i) {
        const Multiplier ma = phi_of(m.left.column(i));
        const Multiplier am = phi_of(m.right.column(i));
        for (std::size_t j = 0; j < db; ++j) {
            src_l.push_back(phi[i].left.column(j));
            dst_l.push_back(ma.left.column(j));
            src_r.push_back(phi[i].right.column(j));
            dst_r.push_back(am.right.column(j));
        }
    }
    const Matrix xl = Matrix::from_columns(db, src_l), yl = Matrix::from_columns(db, dst_l);
    const Matrix xr = Matrix::from_columns(db, src_r), yr = Matrix::from_columns(db, dst_r);
    if (rank(xl) != db || rank(xr) != db) throw Error(ErrorCode::NotNondegenerate, "φ(A)B or Bφ(A) does not span B");
    auto lt = solve(transpose(xl), transpose(yl));
    auto rt = solve(transpose(xr), transpose(yr));
    if (!lt || !rt) throw Error(ErrorCode::Inconsistent, "no extension value fits the spanning set");
    return {transpose(*lt), transpose(*rt)};
}

}  // namespace mhgc
