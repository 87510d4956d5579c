#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "egroups/field.hpp"
#include "egroups/poly.hpp"
#include "egroups/rng.hpp"

namespace egroups {

using Vec = std::vector<Fq>;

/// Dense row-major matrix over a finite field.
class Matrix {
public:
    Matrix() = default;
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols, const std::vector<std::int64_t>& ints);

    static Matrix identity(FieldPtr field, std::size_t n);
    static Matrix scalar(FieldPtr field, std::size_t n, Fq c);
    static Matrix diagonal(FieldPtr field, const Vec& d);
    static Matrix column(FieldPtr field, const Vec& v);
    /// Columns given as vectors of equal length.
    static Matrix from_columns(FieldPtr field, std::size_t rows, const std::vector<Vec>& cols);

    const FieldPtr& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Fq operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    Fq& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const std::vector<Fq>& data() const { return a_; }

    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& m);

    Matrix transpose() const;
    Matrix scaled(Fq c) const;
    /// Entrywise x -> x^(p^k).
    Matrix frobenius(unsigned k) const;
    bool is_zero() const;
    bool is_identity() const;
    /// Scalar multiple of the identity.
    bool is_scalar() const;
    bool operator==(const Matrix& other) const { return rows_ == other.rows_ && cols_ == other.cols_ && a_ == other.a_; }

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    Matrix operator-() const;
    Vec apply(const Vec& v) const;

private:
    FieldPtr field_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Fq> a_;
};

struct RrefResult {
    Matrix matrix;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form; pivot = first nonzero entry in column order.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Basis of the right null space, one vector per free column (free entry = 1).
std::vector<Vec> kernel_basis(const Matrix& m);
std::optional<Vec> solve(const Matrix& m, const Vec& b);
std::optional<Matrix> inverse(const Matrix& m);
/// Throws SingularTransform.
Matrix inverse_or_throw(const Matrix& m);
Fq det(const Matrix& m);

Matrix block_diag(const std::vector<Matrix>& blocks);
/// I_n (x) m.
Matrix kron_identity(std::size_t n, const Matrix& m);

Matrix random_matrix(const FieldPtr& field, std::size_t rows, std::size_t cols, Rng& rng);
/// Rejection sampling.
Matrix random_invertible(const FieldPtr& field, std::size_t n, Rng& rng);

/// Minimal polynomial of a square matrix (monic).
UniPoly minimal_polynomial(const Matrix& m);
/// Evaluates a polynomial at a square matrix.
Matrix eval_poly(const UniPoly& f, const Matrix& m);

/// Scales so the first nonzero entry (row-major) is one; zero stays zero.
Matrix normalize_projective(const Matrix& m);

}  // namespace egroups
