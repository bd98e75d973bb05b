#ifndef H4_LINALG_HPP
#define H4_LINALG_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "h4/matrix.hpp"
#include "h4/polynomial.hpp"
#include "h4/scalar.hpp"

namespace h4 {

/// Exact rank over Q by fraction-free elimination on integer rows.
std::size_t rank(const Matrix& m);
/// Rank of the reduction of `m` modulo the field's prime.
std::size_t rank_mod_p(const Matrix& m, const PrimeField& field);

/// Reduced row echelon form. Pivots are the first nonzero column of each
/// row, scanned left to right.
Matrix rref(const Matrix& m, std::vector<std::size_t>* pivots = nullptr);

/// Rows form a basis of {x : m x = 0}.
Matrix kernel(const Matrix& m);

Rational determinant(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

/// A linear subspace of Q^n stored by its reduced echelon basis, so equal
/// subspaces have identical representations.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient);  // the zero subspace
  static Subspace span(const std::vector<Vector>& vectors, std::size_t ambient);
  static Subspace row_space(const Matrix& m);
  static Subspace whole(std::size_t ambient);

  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  bool is_zero() const noexcept { return dim() == 0; }
  bool is_whole() const noexcept { return dim() == ambient_; }
  /// Reduced echelon basis, one vector per row.
  const Matrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  std::vector<Vector> basis_vectors() const;

  bool contains(std::span<const Rational> v) const;
  bool contains(const Subspace& other) const;
  /// Coefficients of `v` in terms of the echelon basis; nullopt if v is not in the subspace.
  std::optional<Vector> coordinates(std::span<const Rational> v) const;

  Subspace operator+(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  /// Image under a linear map acting on column vectors.
  Subspace image(const Matrix& map) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Result of solve_linear. `consistent == false` marks an inconsistent system.
struct LinearSolution {
  bool consistent = false;
  Vector particular;
  Subspace homogeneous;
};

/// Solves system * x = rhs. An empty rhs means the zero vector.
LinearSolution solve_linear(const Matrix& system, std::span<const Rational> rhs = {});

/// Incrementally maintained row space over Q. Rows are kept as primitive
/// integer vectors and new vectors are reduced fraction-free against them.
class SpanBuilder {
 public:
  explicit SpanBuilder(std::size_t ambient);

  /// Returns true iff `v` increased the dimension.
  bool insert(std::span<const Rational> v);
  bool insert_integral(std::vector<Integer> v);

  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return rows_.size(); }
  Subspace subspace() const;

 private:
  std::size_t ambient_;
  std::vector<std::vector<Integer>> rows_;
  std::vector<std::size_t> pivots_;
};

/// SpanBuilder over Z/pZ; rows are normalized with pivot entry 1.
class ModularSpanBuilder {
 public:
  ModularSpanBuilder(std::size_t ambient, PrimeField field);

  bool insert(std::span<const std::uint64_t> v);
  bool insert(std::vector<std::uint64_t>&& v);

  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return rows_.size(); }
  const PrimeField& field() const noexcept { return field_; }

 private:
  std::size_t ambient_;
  PrimeField field_;
  std::vector<std::vector<std::uint64_t>> rows_;
  std::vector<std::size_t> pivots_;
};

/// Monic invariant factors of a square matrix (the non-unit diagonal of the
/// Smith form of xI - m), in divisibility order.
std::vector<UPoly> invariant_factors(const Matrix& m);

/// True iff a and b are conjugate over Q, decided by invariant factors.
bool similar(const Matrix& a, const Matrix& b);

enum class InvertibleStatus { Found, None, Unknown };

struct InvertibleSearch {
  InvertibleStatus status = InvertibleStatus::Unknown;
  Matrix witness;        // set when status == Found
  bool certain = false;  // false only for Unknown
  std::string method;
};

struct InvertibleSearchOptions {
  std::uint64_t seed = 1;
  std::size_t random_samples = 16;
  /// Subspaces up to this dimension are settled by an exhaustive grid of side n+1.
  std::size_t grid_dim_limit = 4;
  /// Beyond the grid limit, matrices up to this size are settled by
  /// expanding the determinant symbolically.
  std::size_t symbolic_size_limit = 6;
};

/// Searches the span of `spanning` (n x n matrices) for an invertible element.
InvertibleSearch contains_invertible(const std::vector<Matrix>& spanning, const InvertibleSearchOptions& options = {});

/// Basis of {x : f(x) = 0} for a linear map f: Q^unknowns -> Q^k given as a callable.
template <class F>
Subspace solution_space(std::size_t unknowns, F&& f) {
  std::vector<Vector> columns;
  columns.reserve(unknowns);
  std::size_t out = 0;
  for (std::size_t i = 0; i < unknowns; ++i) {
    columns.push_back(f(unit_vector(unknowns, i)));
    out = columns.back().size();
  }
  const Matrix system = Matrix::from_columns(columns, out);
  return Subspace::row_space(kernel(system));
}

}  // namespace h4

#endif  // H4_LINALG_HPP
