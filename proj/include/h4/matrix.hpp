#ifndef H4_MATRIX_HPP
#define H4_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "h4/scalar.hpp"

namespace h4 {

using Vector = std::vector<Rational>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(std::span<const Rational> v);
Vector add(std::span<const Rational> a, std::span<const Rational> b);
Vector subtract(std::span<const Rational> a, std::span<const Rational> b);
Vector scale(const Rational& s, std::span<const Rational> v);
/// y += s * x
void axpy(const Rational& s, std::span<const Rational> x, std::span<Rational> y);

/// Dense row-major matrix over Q. Vectors act as columns: (M * x)_i = sum_j M(i,j) x_j.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const Rational> entries);
  /// Stacks `rows` (each of length `cols`) as the rows of a matrix.
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  /// Uses `columns` (each of length `rows`) as the columns of a matrix.
  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_zero() const;

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vector row_vector(std::size_t r) const;
  Vector column(std::size_t c) const;
  /// Entries in row-major order; used as coordinates of a matrix in M_{r x c}.
  const std::vector<Rational>& entries() const noexcept { return data_; }
  static Matrix from_entries(std::size_t rows, std::size_t cols, std::span<const Rational> entries);

  Matrix transpose() const;
  Rational trace() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& src);

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(const Rational& s);

  friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
  friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
  friend Matrix operator*(const Rational& s, Matrix m) { return m *= s; }
  friend Matrix operator-(Matrix m) { return m *= Rational(-1); }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, std::span<const Rational> x);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

inline Vector operator*(const Matrix& a, const Vector& x) { return a * std::span<const Rational>(x); }

Matrix commutator(const Matrix& a, const Matrix& b);
/// Direct sum diag(a, b).
Matrix block_diagonal(const Matrix& a, const Matrix& b);
/// Square matrix [[0, upper], [lower, 0]].
Matrix block_antidiagonal(const Matrix& upper, const Matrix& lower);

std::ostream& operator<<(std::ostream& os, const Matrix& m);

}  // namespace h4

#endif  // H4_MATRIX_HPP
