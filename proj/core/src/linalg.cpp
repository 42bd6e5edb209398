#include "mhgc/linalg.hpp"

#include "mhgc/error.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace mhgc {

namespace {

bool valid_integer(std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && is_zero(m(p, c))) ++p;
        if (p == m.rows()) continue;
        if (p != r) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        }
        const Scalar inv = 1 / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) {
            if (!is_zero(m(r, j))) m(r, j) *= inv;
        }
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || is_zero(m(i, c))) continue;
            const Scalar f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) {
                if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
    if (!valid_integer(num, true) || (slash != std::string_view::npos && !valid_integer(den, false))) {
        throw Error(ErrorCode::BadRational, "malformed rational '" + std::string(text) + "'");
    }
    mpz_class n(std::string(num[0] == '+' ? num.substr(1) : num), 10);
    mpz_class d(1);
    if (slash != std::string_view::npos) d = mpz_class(std::string(den), 10);
    if (d == 0) throw Error(ErrorCode::BadRational, "zero denominator in '" + std::string(text) + "'");
    Scalar q(n, d);
    q.canonicalize();
    return q;
}

std::string format_scalar(const Scalar& value) { return value.get_str(10); }

bool is_zero(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return is_zero(x); });
}

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
    Vector v(n);
    v[i] = 1;
    return v;
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols) throw Error(ErrorCode::DimensionMismatch, "matrix data length");
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
    const std::size_t c = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != c) throw Error(ErrorCode::DimensionMismatch, "ragged rows");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vector>& cols) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
    return m;
}

Vector Matrix::row(std::size_t i) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::column(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

void Matrix::set_column(std::size_t j, const Vector& v) {
    if (v.size() != rows_) throw Error(ErrorCode::DimensionMismatch, "column length");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

bool Matrix::is_zero() const { return mhgc::is_zero(data_); }

bool Matrix::is_identity() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix transpose(const Matrix& m) {
    Matrix t(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
    return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "matrix product");
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Scalar& aik = a(i, k);
            if (is_zero(aik)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const Scalar& bkj = b(k, j);
                if (!is_zero(bkj)) c(i, j) += aik * bkj;
            }
        }
    }
    return c;
}

Vector operator*(const Matrix& a, const Vector& x) {
    if (a.cols() != x.size()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector product");
    Vector y(a.rows());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        if (is_zero(x[j])) continue;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (!is_zero(a(i, j))) y[i] += a(i, j) * x[j];
        }
    }
    return y;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorCode::DimensionMismatch, "matrix sum");
    std::vector<Scalar> d(a.data());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] += b.data()[i];
    return Matrix(a.rows(), a.cols(), std::move(d));
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorCode::DimensionMismatch, "matrix difference");
    std::vector<Scalar> d(a.data());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] -= b.data()[i];
    return Matrix(a.rows(), a.cols(), std::move(d));
}

Matrix scaled(const Matrix& m, const Scalar& c) {
    std::vector<Scalar> d(m.data());
    for (auto& x : d) x *= c;
    return Matrix(m.rows(), m.cols(), std::move(d));
}

Vector operator+(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector sum");
    Vector c(a);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
    return c;
}

Vector operator-(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector difference");
    Vector c(a);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b[i];
    return c;
}

Vector scaled(const Vector& v, const Scalar& c) {
    Vector w(v);
    for (auto& x : w) x *= c;
    return w;
}

void axpy(Vector& y, const Scalar& c, const Vector& x) {
    if (y.size() != x.size()) throw Error(ErrorCode::DimensionMismatch, "axpy");
    if (is_zero(c)) return;
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (!is_zero(x[i])) y[i] += c * x[i];
    }
}

Scalar dot(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "dot");
    Scalar s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!is_zero(a[i]) && !is_zero(b[i])) s += a[i] * b[i];
    }
    return s;
}

Matrix hstack(const std::vector<Matrix>& blocks, std::size_t rows) {
    std::size_t cols = 0;
    for (const auto& b : blocks) {
        if (b.rows() != rows) throw Error(ErrorCode::DimensionMismatch, "hstack");
        cols += b.cols();
    }
    Matrix m(rows, cols);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) m(i, off + j) = b(i, j);
        off += b.cols();
    }
    return m;
}

Matrix vstack(const std::vector<Matrix>& blocks, std::size_t cols) {
    std::size_t rows = 0;
    for (const auto& b : blocks) {
        if (b.cols() != cols) throw Error(ErrorCode::DimensionMismatch, "vstack");
        rows += b.rows();
    }
    Matrix m(rows, cols);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < cols; ++j) m(off + i, j) = b(i, j);
        off += b.rows();
    }
    return m;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (is_zero(a(i, j))) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    if (!is_zero(b(k, l))) m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
                }
        }
    return m;
}

Vector kron(const Vector& a, const Vector& b) {
    Vector v(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (!is_zero(b[j])) v[i * b.size() + j] = a[i] * b[j];
        }
    }
    return v;
}

Vector apply_on_leg(const Matrix& m, const Vector& x, std::size_t outer, std::size_t inner) {
    if (x.size() != outer * m.cols() * inner) throw Error(ErrorCode::DimensionMismatch, "apply_on_leg");
    Vector y(outer * m.rows() * inner);
    for (std::size_t o = 0; o < outer; ++o)
        for (std::size_t j = 0; j < m.cols(); ++j)
            for (std::size_t t = 0; t < inner; ++t) {
                const Scalar& v = x[(o * m.cols() + j) * inner + t];
                if (is_zero(v)) continue;
                for (std::size_t i = 0; i < m.rows(); ++i) {
                    if (!is_zero(m(i, j))) y[(o * m.rows() + i) * inner + t] += m(i, j) * v;
                }
            }
    return y;
}

Vector flip(const Vector& x, std::size_t n1, std::size_t n2) {
    if (x.size() != n1 * n2) throw Error(ErrorCode::DimensionMismatch, "flip");
    Vector y(x.size());
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n2; ++j) y[j * n1 + i] = x[i * n2 + j];
    return y;
}

Matrix flip_matrix(std::size_t n1, std::size_t n2) {
    Matrix m(n1 * n2, n1 * n2);
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n2; ++j) m(j * n1 + i, i * n2 + j) = 1;
    return m;
}

std::size_t rank(const Matrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<mpz_class> a(rows * cols);
    for (std::size_t i = 0; i < rows; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < cols; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < cols; ++j) a[i * cols + j] = m(i, j).get_num() * (l / m(i, j).get_den());
    }
    auto at = [&](std::size_t i, std::size_t j) -> mpz_class& { return a[i * cols + j]; };
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && at(p, c) == 0) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(at(p, j), at(r, j));
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                at(i, j) = (at(r, c) * at(i, j) - at(i, c) * at(r, j));
                mpz_divexact(at(i, j).get_mpz_t(), at(i, j).get_mpz_t(), prev.get_mpz_t());
            }
            at(i, c) = 0;
        }
        prev = at(r, c);
        ++r;
    }
    return r;
}

std::vector<Vector> kernel_basis(const Matrix& m) {
    Matrix r = m;
    const auto pivots = rref(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector v(m.cols());
        v[f] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

Matrix invert(const Matrix& m) {
    if (!m.square()) throw Error(ErrorCode::SingularMatrix, "non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    const auto pivots = rref(aug);
    if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) {
        throw Error(ErrorCode::SingularMatrix, "rank deficient " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
    }
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) { return LinearSolver(m).solve(b); }

std::optional<Matrix> solve(const Matrix& m, const Matrix& b) {
    LinearSolver solver(m);
    Matrix x(m.cols(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        auto col = solver.solve(b.column(j));
        if (!col) return std::nullopt;
        x.set_column(j, *col);
    }
    return x;
}

LinearSolver::LinearSolver(const Matrix& m) : m_(m) {
    // Forward elimination tracking the original index of every row.
    Matrix w = m;
    std::vector<std::size_t> origin(m.rows());
    for (std::size_t i = 0; i < origin.size(); ++i) origin[i] = i;
    std::size_t r = 0;
    for (std::size_t c = 0; c < w.cols() && r < w.rows(); ++c) {
        std::size_t p = r;
        while (p < w.rows() && is_zero(w(p, c))) ++p;
        if (p == w.rows()) continue;
        if (p != r) {
            for (std::size_t j = 0; j < w.cols(); ++j) std::swap(w(p, j), w(r, j));
            std::swap(origin[p], origin[r]);
        }
        for (std::size_t i = r + 1; i < w.rows(); ++i) {
            if (is_zero(w(i, c))) continue;
            const Scalar f = w(i, c) / w(r, c);
            for (std::size_t j = c; j < w.cols(); ++j) {
                if (!is_zero(w(r, j))) w(i, j) -= f * w(r, j);
            }
        }
        pivots_.push_back(c);
        pivot_rows_.push_back(origin[r]);
        ++r;
    }
    Matrix core(pivots_.size(), pivots_.size());
    for (std::size_t i = 0; i < pivots_.size(); ++i)
        for (std::size_t j = 0; j < pivots_.size(); ++j) core(i, j) = m(pivot_rows_[i], pivots_[j]);
    core_inverse_ = invert(core);
}

std::optional<Vector> LinearSolver::solve(const Vector& b) const {
    if (b.size() != m_.rows()) throw Error(ErrorCode::DimensionMismatch, "right-hand side length");
    Vector rhs(pivots_.size());
    for (std::size_t i = 0; i < pivots_.size(); ++i) rhs[i] = b[pivot_rows_[i]];
    const Vector core_x = core_inverse_ * rhs;
    Vector x(m_.cols());
    for (std::size_t i = 0; i < pivots_.size(); ++i) x[pivots_[i]] = core_x[i];
    if (m_ * x != b) return std::nullopt;
    return x;
}

}  // namespace mhgc

namespace mhgc {

SparseMatrix SparseMatrix::from_dense(const Matrix& m) {
    SparseMatrix s(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!is_zero(m(i, j))) s.columns_[j].emplace_back(i, m(i, j));
    return s;
}

Matrix SparseMatrix::to_dense() const {
    Matrix m(rows_, cols_);
    for (std::size_t j = 0; j < cols_; ++j)
        for (const auto& [i, v] : columns_[j]) m(i, j) = v;
    return m;
}

std::size_t SparseMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : columns_) n += c.size();
    return n;
}

void SparseMatrix::set_column(std::size_t j, std::vector<Entry> entries) {
    std::erase_if(entries, [](const Entry& e) { return is_zero(e.second); });
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
    for (const auto& e : entries)
        if (e.first >= rows_) throw Error(ErrorCode::DimensionMismatch, "sparse row index out of range");
    columns_[j] = std::move(entries);
}

void SparseMatrix::set_column(std::size_t j, const Vector& dense) {
    if (dense.size() != rows_) throw Error(ErrorCode::DimensionMismatch, "sparse column length");
    std::vector<Entry> entries;
    for (std::size_t i = 0; i < dense.size(); ++i)
        if (!is_zero(dense[i])) entries.emplace_back(i, dense[i]);
    columns_[j] = std::move(entries);
}

Vector SparseMatrix::dense_column(std::size_t j) const {
    Vector v(rows_);
    for (const auto& [i, x] : columns_[j]) v[i] = x;
    return v;
}

Vector SparseMatrix::apply(const Vector& x) const {
    if (x.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "sparse apply");
    Vector y(rows_);
    for (std::size_t j = 0; j < cols_; ++j) {
        if (is_zero(x[j])) continue;
        for (const auto& [i, v] : columns_[j]) y[i] += v * x[j];
    }
    return y;
}

SparseMatrix SparseMatrix::transposed() const {
    SparseMatrix t(cols_, rows_);
    for (std::size_t j = 0; j < cols_; ++j)
        for (const auto& [i, v] : columns_[j]) t.columns_[i].emplace_back(j, v);
    return t;
}

}  // namespace mhgc

namespace mhgc {

SparseMatrix invert_blockwise(const SparseMatrix& m) {
    if (m.rows() != m.cols()) throw Error(ErrorCode::SingularMatrix, "matrix is not square");
    const std::size_t n = m.rows();
    // Nodes 0..n-1 are rows, n..2n-1 columns.
    std::vector<std::size_t> parent(2 * n);
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t j = 0; j < n; ++j)
        for (const auto& [i, v] : m.column(j)) parent[find(i)] = find(n + j);

    std::vector<std::vector<std::size_t>> rows_of(2 * n), cols_of(2 * n);
    for (std::size_t i = 0; i < n; ++i) rows_of[find(i)].push_back(i);
    for (std::size_t j = 0; j < n; ++j) cols_of[find(n + j)].push_back(j);

    SparseMatrix inv(n, n);
    std::vector<std::vector<SparseMatrix::Entry>> out(n);
    std::vector<std::size_t> local(n);
    for (std::size_t root = 0; root < 2 * n; ++root) {
        const auto& rs = rows_of[root];
        const auto& cs = cols_of[root];
        if (rs.empty() && cs.empty()) continue;
        if (rs.size() != cs.size())
            throw Error(ErrorCode::SingularMatrix, "component with " + std::to_string(rs.size()) + " rows and " +
                                                       std::to_string(cs.size()) + " columns");
        for (std::size_t k = 0; k < rs.size(); ++k) local[rs[k]] = k;
        Matrix block(rs.size(), cs.size());
        for (std::size_t k = 0; k < cs.size(); ++k)
            for (const auto& [i, v] : m.column(cs[k])) block(local[i], k) = v;
        Matrix bi;
        try {
            bi = invert(block);
        } catch (const Error&) {
            throw Error(ErrorCode::SingularMatrix, "component of size " + std::to_string(rs.size()) + " has rank " +
                                                       std::to_string(rank(block)));
        }
        // bi maps row coordinates to column coordinates.
        for (std::size_t a = 0; a < rs.size(); ++a)
            for (std::size_t b = 0; b < cs.size(); ++b)
                if (!is_zero(bi(b, a))) out[rs[a]].emplace_back(cs[b], bi(b, a));
    }
    for (std::size_t j = 0; j < n; ++j) inv.set_column(j, std::move(out[j]));
    return inv;
}

}  // namespace mhgc
