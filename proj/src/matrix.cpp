#include "egroups/matrix.hpp"

#include "egroups/errors.hpp"

namespace egroups {

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols) {}

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols, const std::vector<std::int64_t>& ints)
    : Matrix(std::move(field), rows, cols) {
    if (ints.size() != rows * cols) throw Error(ErrorKind::DimensionMismatch, "entry count does not match shape");
    for (std::size_t i = 0; i < ints.size(); ++i) a_[i] = field_->from_int(ints[i]);
}

Matrix Matrix::identity(FieldPtr field, std::size_t n) { return scalar(std::move(field), n, Fq{1}); }

Matrix Matrix::scalar(FieldPtr field, std::size_t n, Fq c) {
    Matrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
    return m;
}

Matrix Matrix::diagonal(FieldPtr field, const Vec& d) {
    Matrix m(std::move(field), d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

Matrix Matrix::column(FieldPtr field, const Vec& v) {
    Matrix m(std::move(field), v.size(), 1);
    m.a_ = v;
    return m;
}

Matrix Matrix::from_columns(FieldPtr field, std::size_t rows, const std::vector<Vec>& cols) {
    Matrix m(std::move(field), rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw Error(ErrorKind::DimensionMismatch, "column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

Vec Matrix::row(std::size_t i) const { return Vec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_); }

Vec Matrix::col(std::size_t j) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix m(field_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
    return m;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
    for (std::size_t i = 0; i < m.rows_; ++i)
        for (std::size_t j = 0; j < m.cols_; ++j) (*this)(r0 + i, c0 + j) = m(i, j);
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::scaled(Fq c) const {
    Matrix m = *this;
    for (auto& x : m.a_) x = field_->mul(x, c);
    return m;
}

Matrix Matrix::frobenius(unsigned k) const {
    Matrix m = *this;
    for (auto& x : m.a_) x = field_->frobenius(x, k);
    return m;
}

bool Matrix::is_zero() const {
    for (auto x : a_)
        if (x.v) return false;
    return true;
}

bool Matrix::is_identity() const { return square() && *this == identity(field_, rows_); }

bool Matrix::is_scalar() const { return square() && (rows_ == 0 || *this == scalar(field_, rows_, (*this)(0, 0))); }

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix sum shape");
    Matrix m = a;
    for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] = a.field_->add(a.a_[i], b.a_[i]);
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix difference shape");
    Matrix m = a;
    for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] = a.field_->sub(a.a_[i], b.a_[i]);
    return m;
}

Matrix Matrix::operator-() const {
    Matrix m = *this;
    for (auto& x : m.a_) x = field_->neg(x);
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product shape");
    const Field& f = *a.field_;
    Matrix m(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            Fq x = a(i, k);
            if (!x.v) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) = f.add(m(i, j), f.mul(x, b(k, j)));
        }
    return m;
}

Vec Matrix::apply(const Vec& v) const {
    if (v.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "matrix-vector shape");
    Vec out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Fq acc{};
        for (std::size_t j = 0; j < cols_; ++j) acc = field_->add(acc, field_->mul((*this)(i, j), v[j]));
        out[i] = acc;
    }
    return out;
}

RrefResult rref(const Matrix& m) {
    RrefResult res{m, 0, {}};
    Matrix& a = res.matrix;
    const Field& f = *m.field();
    const std::size_t R = a.rows(), C = a.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t piv = R;
        for (std::size_t i = r; i < R; ++i)
            if (a(i, c).v) {
                piv = i;
                break;
            }
        if (piv == R) continue;
        if (piv != r)
            for (std::size_t j = c; j < C; ++j) std::swap(a(piv, j), a(r, j));
        Fq inv = f.inv(a(r, c));
        for (std::size_t j = c; j < C; ++j) a(r, j) = f.mul(a(r, j), inv);
        for (std::size_t i = 0; i < R; ++i) {
            if (i == r) continue;
            Fq factor = a(i, c);
            if (!factor.v) continue;
            for (std::size_t j = c; j < C; ++j) a(i, j) = f.sub(a(i, j), f.mul(factor, a(r, j)));
        }
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    return res;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::vector<Vec> kernel_basis(const Matrix& m) {
    auto rr = rref(m);
    const Field& f = *m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : rr.pivots) is_pivot[c] = true;
    std::vector<Vec> out;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec v(m.cols());
        v[free] = f.one();
        for (std::size_t i = 0; i < rr.rank; ++i) v[rr.pivots[i]] = f.neg(rr.matrix(i, free));
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    if (b.size() != m.rows()) throw Error(ErrorKind::DimensionMismatch, "right-hand side length");
    Matrix aug(m.field(), m.rows(), m.cols() + 1);
    aug.set_block(0, 0, m);
    for (std::size_t i = 0; i < b.size(); ++i) aug(i, m.cols()) = b[i];
    auto rr = rref(aug);
    if (rr.rank > 0 && rr.pivots.back() == m.cols()) return std::nullopt;
    Vec x(m.cols());
    for (std::size_t i = 0; i < rr.rank; ++i) x[rr.pivots[i]] = rr.matrix(i, m.cols());
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (!m.square()) throw Error(ErrorKind::DimensionMismatch, "inverse of non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(m.field(), n, 2 * n);
    aug.set_block(0, 0, m);
    aug.set_block(0, n, Matrix::identity(m.field(), n));
    auto rr = rref(aug);
    if (rr.rank < n || rr.pivots[n - 1] >= n) return std::nullopt;
    return rr.matrix.block(0, n, n, n);
}

Matrix inverse_or_throw(const Matrix& m) {
    auto inv = inverse(m);
    if (!inv) throw Error(ErrorKind::SingularTransform, "matrix is singular");
    return *inv;
}

Fq det(const Matrix& m) {
    if (!m.square()) throw Error(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
    const Field& f = *m.field();
    Matrix a = m;
    const std::size_t n = a.rows();
    Fq d = f.one();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = n;
        for (std::size_t i = c; i < n; ++i)
            if (a(i, c).v) {
                piv = i;
                break;
            }
        if (piv == n) return f.zero();
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(c, j));
            d = f.neg(d);
        }
        d = f.mul(d, a(c, c));
        Fq inv = f.inv(a(c, c));
        for (std::size_t i = c + 1; i < n; ++i) {
            Fq factor = f.mul(a(i, c), inv);
            if (!factor.v) continue;
            for (std::size_t j = c; j < n; ++j) a(i, j) = f.sub(a(i, j), f.mul(factor, a(c, j)));
        }
    }
    return d;
}

Matrix block_diag(const std::vector<Matrix>& blocks) {
    if (blocks.empty()) throw Error(ErrorKind::BadInput, "no blocks");
    std::size_t r = 0, c = 0;
    for (const auto& b : blocks) {
        r += b.rows();
        c += b.cols();
    }
    Matrix m(blocks.front().field(), r, c);
    r = c = 0;
    for (const auto& b : blocks) {
        m.set_block(r, c, b);
        r += b.rows();
        c += b.cols();
    }
    return m;
}

Matrix kron_identity(std::size_t n, const Matrix& m) { return block_diag(std::vector<Matrix>(n, m)); }

Matrix random_matrix(const FieldPtr& field, std::size_t rows, std::size_t cols, Rng& rng) {
    Matrix m(field, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = field->element(rng.below(field->q()));
    return m;
}

Matrix random_invertible(const FieldPtr& field, std::size_t n, Rng& rng) {
    for (;;) {
        Matrix m = random_matrix(field, n, n, rng);
        if (det(m).v) return m;
    }
}

UniPoly minimal_polynomial(const Matrix& m) {
    if (!m.square()) throw Error(ErrorKind::DimensionMismatch, "minimal polynomial of non-square matrix");
    const FieldPtr& F = m.field();
    const std::size_t n = m.rows();
    std::vector<Vec> powers;
    Matrix p = Matrix::identity(F, n);
    powers.push_back(p.data());
    for (std::size_t k = 1; k <= n; ++k) {
        p = p * m;
        Matrix sys = Matrix::from_columns(F, n * n, powers);
        if (auto c = solve(sys, p.data())) {
            Vec coeffs(k + 1);
            for (std::size_t i = 0; i < k; ++i) coeffs[i] = F->neg((*c)[i]);
            coeffs[k] = F->one();
            return UniPoly(F, std::move(coeffs));
        }
        powers.push_back(p.data());
    }
    throw Error(ErrorKind::Internal, "minimal polynomial degree exceeds n");
}

Matrix eval_poly(const UniPoly& f, const Matrix& m) {
    const std::size_t n = m.rows();
    Matrix acc(m.field(), n, n);
    for (std::size_t i = f.coeffs().size(); i-- > 0;)
        acc = acc * m + Matrix::scalar(m.field(), n, f.coeff(i));
    return acc;
}

Matrix normalize_projective(const Matrix& m) {
    for (auto x : m.data())
        if (x.v) return m.scaled(m.field()->inv(x));
    return m;
}

}  // namespace egroups
