#ifndef H4_ALGEBRA_HPP
#define H4_ALGEBRA_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "h4/hopf.hpp"
#include "h4/linalg.hpp"
#include "h4/matrix.hpp"

namespace h4 {

/// A finite-dimensional associative algebra with an H4-action.
///
/// The algebra is given on a fixed basis e_0..e_{d-1}: `structure(i, j)` holds
/// the coordinates of e_i e_j. The action is given by the generator matrices
/// C (action of c) and V (action of v), acting on coordinate columns; the
/// operators of 1 and cv are derived as I and C V.
class HAlgebra {
 public:
  HAlgebra() = default;
  /// `structure` has d*d entries, entry i*d + j being e_i e_j. Shapes are
  /// validated; the module-algebra laws are not (see verify_module_algebra).
  HAlgebra(std::size_t dim, std::vector<Vector> structure, std::optional<Vector> unit, Matrix c, Matrix v,
           std::string label = {});

  std::size_t dim() const noexcept { return dim_; }
  const Vector& structure(std::size_t i, std::size_t j) const { return structure_[i * dim_ + j]; }
  const std::vector<Vector>& structure() const noexcept { return structure_; }
  const std::optional<Vector>& unit() const noexcept { return unit_; }
  const Matrix& c_action() const noexcept { return operators_[1]; }
  const Matrix& v_action() const noexcept { return operators_[2]; }
  const Matrix& basis_operator(H4Basis b) const { return operators_[static_cast<std::size_t>(b)]; }
  const std::string& label() const noexcept { return label_; }

  Vector multiply(std::span<const Rational> x, std::span<const Rational> y) const;
  /// Matrix of y -> x y.
  Matrix left_multiplication(std::span<const Rational> x) const;
  /// Matrix of y -> y x.
  Matrix right_multiplication(std::span<const Rational> x) const;
  Matrix left_multiplication(std::size_t i) const;
  Matrix right_multiplication(std::size_t i) const;

  HAlgebra with_label(std::string label) const;

  /// The same algebra written in the basis f_i = g e_i (columns of g).
  HAlgebra change_basis(const Matrix& g) const;

 private:
  std::size_t dim_ = 0;
  std::vector<Vector> structure_;
  std::optional<Vector> unit_;
  std::array<Matrix, 4> operators_;
  std::string label_;
};

struct LawCheck {
  std::string name;
  bool passed = true;
  std::string detail;  // first counterexample when failed
};

struct VerificationReport {
  std::vector<LawCheck> laws;
  bool all_pass() const;
  const LawCheck* find(const std::string& name) const;
};

/// Exhaustively checks associativity, the unit, C^2 = I, V^2 = 0, CV = -VC,
/// c(ab) = (ca)(cb) and v(ab) = (ca)(vb) + (va)b on all basis tuples.
VerificationReport verify_module_algebra(const HAlgebra& a);

Vector apply(const HAlgebra& a, const H4Element& h, std::span<const Rational> x);
Vector product(const HAlgebra& a, std::span<const Rational> x, std::span<const Rational> y);

/// Eigenspace decomposition for c.
struct GradedSplit {
  Subspace even;  // c x = x
  Subspace odd;   // c x = -x
};

/// Throws Error("c is not an involution") unless C^2 = I.
GradedSplit graded_split(const HAlgebra& a);

/// The subalgebra spanned by `basis` (rows), written in that basis. C and V
/// must leave the span invariant; throws otherwise.
HAlgebra restrict_to(const HAlgebra& a, const std::vector<Vector>& basis, std::string label = {});

/// Rank of the span of all products e_i e_j (zero iff A^2 = 0).
std::size_t square_dimension(const HAlgebra& a);

}  // namespace h4

#endif  // H4_ALGEBRA_HPP
