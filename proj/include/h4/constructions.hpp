#ifndef H4_CONSTRUCTIONS_HPP
#define H4_CONSTRUCTIONS_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <variant>

#include "h4/algebra.hpp"
#include "h4/matrix.hpp"

namespace h4 {

/// M_{k,m} with v a = (c a) Q - Q a, Q = [[0, Q1], [Q2, 0]].
struct MatrixCaseParams {
  std::size_t k = 1;
  std::size_t m = 1;
  Matrix q1;  // k x m
  Matrix q2;  // m x k
  Rational alpha;
};

/// M_k (+) M_k with c (a, b) = (b, a) and v (a, b) = (P a - b P, a P - P b).
struct DoubleCaseParams {
  std::size_t k = 1;
  Matrix p;  // k x k, P^2 = alpha E_k
  Rational alpha;
};

struct TrivialMatrixParams {
  std::size_t n = 1;
};

struct CanonicalDescriptor;

/// B (+) phi(B) built from the v = 0 algebra described by `base`.
struct NonSemisimpleParams {
  std::shared_ptr<const CanonicalDescriptor> base;
};

struct CanonicalDescriptor {
  std::variant<TrivialMatrixParams, MatrixCaseParams, DoubleCaseParams, NonSemisimpleParams> value;

  static CanonicalDescriptor trivial_matrix(std::size_t n) { return {TrivialMatrixParams{n}}; }
  static CanonicalDescriptor matrix_case(MatrixCaseParams p) { return {std::move(p)}; }
  static CanonicalDescriptor double_case(DoubleCaseParams p) { return {std::move(p)}; }
  static CanonicalDescriptor nonsemisimple(CanonicalDescriptor base) {
    return {NonSemisimpleParams{std::make_shared<const CanonicalDescriptor>(std::move(base))}};
  }
};

/// Short human-readable form, used as the label of realized algebras.
std::string describe(const CanonicalDescriptor& d);

/// Checks shapes, Q1 Q2 = alpha E_k and Q2 Q1 = alpha E_m, and returns the
/// parameters with k >= m (swapping k <-> m and Q1 <-> Q2 when needed; the
/// swap is recorded in `note` if given). Throws ValidationError naming the
/// failed identity.
MatrixCaseParams normalize_matrix_case(MatrixCaseParams p, std::string* note = nullptr);
/// alpha from Q1 Q2 (k >= 1); throws when Q1 Q2 is not scalar.
Rational infer_matrix_case_alpha(const Matrix& q1, const Matrix& q2);
void validate_double(const DoubleCaseParams& p);
/// alpha with P^2 = alpha E_k; throws when P^2 is not scalar.
Rational infer_double_alpha(const Matrix& p);

/// The matrix algebra M_n on the row-major matrix units e_{ij} (index i*n + j),
/// with C = I and V = 0.
HAlgebra make_trivial_matrix(std::size_t n);
HAlgebra make_matrix_case(const MatrixCaseParams& p);
HAlgebra make_double(const DoubleCaseParams& p);
/// Requires V = 0, C an involution and `b` Z2-simple. Basis: e_i (the copy of
/// b) then phi(e_i) at index dim(b) + i.
HAlgebra make_nonsemisimple(const HAlgebra& b);
HAlgebra realize(const CanonicalDescriptor& d);

/// M_{k+m} with the elementary grading diag(E_k, -E_m) and v = 0, without the
/// k >= m normalization (so M_{1,2} is presented with its odd block first).
/// m = 0 gives the trivially graded M_k.
HAlgebra graded_matrix_algebra(std::size_t k, std::size_t m);

/// Operator a -> x a y on row-major coordinates of M_n.
Matrix sandwich_operator(const Matrix& x, const Matrix& y);
/// Structure constants of M_n on matrix units.
std::vector<Vector> matrix_units_structure(std::size_t n);

/// P = diag(a (m times), -a (k times)), m >= k, alpha = a^2.
DoubleCaseParams diagonal_sign_preset(std::size_t m, std::size_t k, const Rational& a);
/// n x n block-diagonal P with `cells` nilpotent Jordan cells [[0,1],[0,0]]
/// followed by zeros; alpha = 0.
DoubleCaseParams nilpotent_cells_preset(std::size_t n, std::size_t cells);

}  // namespace h4

#endif  // H4_CONSTRUCTIONS_HPP
