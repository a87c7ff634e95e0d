#pragma once

// Exact dense linear algebra over a prime field F_p.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ntt {

class PrimeField {
 public:
  /// Throws std::invalid_argument unless p is a prime below 2^16.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const { return p_; }

  std::uint32_t reduce(std::int64_t x) const {
    std::int64_t r = x % static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % p_; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return (a + p_ - b) % p_; }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  /// Inverse of a nonzero residue.
  std::uint32_t inv(std::uint32_t a) const;

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint32_t n);

/// Dense row-major matrix with entries in [0, p). Zero-row and zero-column
/// shapes are legal.
class Matrix {
 public:
  Matrix(PrimeField field, std::size_t rows, std::size_t cols);
  Matrix(PrimeField field, std::size_t rows, std::size_t cols, std::vector<std::uint32_t> entries);

  static Matrix identity(PrimeField field, std::size_t n);
  static Matrix from_rows(PrimeField field, const std::vector<std::vector<std::int64_t>>& rows);
  static Matrix from_columns(PrimeField field, std::size_t rows,
                             const std::vector<std::vector<std::uint32_t>>& columns);

  const PrimeField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  std::uint32_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::uint32_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::int64_t value) { data_[r * cols_ + c] = field_.reduce(value); }

  const std::vector<std::uint32_t>& data() const { return data_; }
  const std::uint32_t* row(std::size_t r) const { return data_.data() + r * cols_; }
  std::uint32_t* row(std::size_t r) { return data_.data() + r * cols_; }

  bool is_zero() const;
  Matrix transpose() const;
  Matrix scaled(std::int64_t c) const;
  Matrix column(std::size_t c) const;
  Matrix select_columns(const std::vector<std::size_t>& idx) const;
  Matrix select_rows(const std::vector<std::size_t>& idx) const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& m);

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator-() const;
  Matrix& operator+=(const Matrix& o);

  bool operator==(const Matrix& o) const;

  std::string to_string() const;

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint32_t> data_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix block_diag(const Matrix& a, const Matrix& b);

struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // strictly increasing column indices
};

/// Gauss-Jordan elimination, first nonzero entry in column order as pivot.
RowEchelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Columns form a basis of ker(m); count = cols - rank.
Matrix kernel_basis(const Matrix& m);
/// The pivot columns of m; count = rank.
Matrix image_basis(const Matrix& m);

struct Solution {
  Matrix particular;  // m * particular == rhs
  Matrix kernel;      // kernel_basis(m)
};

/// Returns absence when m * X = rhs is inconsistent. Throws
/// std::invalid_argument if row counts differ.
std::optional<Solution> solve(const Matrix& m, const Matrix& rhs);

struct Quotient {
  Matrix projection;  // (ambient - k) x ambient, kernel = span(subspace)
  Matrix section;     // ambient x (ambient - k), projection * section = I
};

/// Throws std::invalid_argument when the subspace columns are dependent.
Quotient quotient(PrimeField field, std::size_t ambient_dim, const Matrix& subspace_basis);

/// L with L * basis = I for a matrix of independent columns.
Matrix left_inverse(const Matrix& basis);

}  // namespace ntt
