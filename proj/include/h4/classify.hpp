#ifndef H4_CLASSIFY_HPP
#define H4_CLASSIFY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "h4/algebra.hpp"
#include "h4/constructions.hpp"
#include "h4/linalg.hpp"

namespace h4 {

/// A linear bijection A1 -> A2 on basis coordinates, with the matrices it was
/// assembled from (W, or (W1, W2), or Q).
struct IsoWitness {
  Matrix map;
  std::vector<Matrix> parameters;
  std::string branch;  // "even" / "odd" for the matrix case, "+" / "-" for doubles
};

struct IsoDecision {
  bool isomorphic = false;
  std::optional<IsoWitness> witness;
  std::string route;  // "invariants" or "oracle"
  std::vector<std::pair<std::string, std::string>> invariants;
};

struct IsoOptions {
  /// Decide through the linear system plus invertibility search instead of
  /// canonical invariants.
  bool use_oracle = false;
  InvertibleSearchOptions search;
};

/// Invertible, multiplicative on all basis pairs, and intertwining C and V.
bool is_h4_isomorphism(const HAlgebra& a1, const HAlgebra& a2, const Matrix& map);
bool is_h4_automorphism(const HAlgebra& a, const Matrix& map);

/// Complete invariant of the matrix case: (k, m, alpha) and, for alpha = 0,
/// the rank pair (unordered when k = m).
struct MatrixCaseInvariant {
  std::size_t k = 0;
  std::size_t m = 0;
  Rational alpha;
  std::optional<std::pair<std::size_t, std::size_t>> ranks;

  friend bool operator==(const MatrixCaseInvariant&, const MatrixCaseInvariant&) = default;
};

MatrixCaseInvariant matrix_case_invariant(const MatrixCaseParams& p);

IsoDecision iso_matrix_case(const MatrixCaseParams& p1, const MatrixCaseParams& p2, const IsoOptions& options = {});
/// Searches W in M_{k+m} with W P = +-P W and W Q1 = Q2 W for an invertible element.
IsoDecision iso_matrix_case_oracle(const MatrixCaseParams& p1, const MatrixCaseParams& p2,
                                   const InvertibleSearchOptions& search = {});

IsoDecision iso_double_case(const DoubleCaseParams& p1, const DoubleCaseParams& p2, const IsoOptions& options = {});
/// Searches Q with Q P1 = +-P2 Q for an invertible element.
IsoDecision iso_double_case_oracle(const DoubleCaseParams& p1, const DoubleCaseParams& p2,
                                   const InvertibleSearchOptions& search = {});

/// Recognized shape of a Z2-simple algebra with v = 0.
struct GradedShape {
  enum class Kind { Matrix, Swap };
  Kind kind = Kind::Matrix;
  std::size_t k = 0;  // Matrix: larger block; Swap: matrix size
  std::size_t m = 0;  // Matrix: smaller block (0 for the trivial grading)
};

/// Throws Error when `b` is neither a graded M_{k,m} nor M_k (+) M_k with swap.
GradedShape recognize_graded(const HAlgebra& b);
bool graded_iso(const HAlgebra& b1, const HAlgebra& b2);

/// Decides through the vJ parts of both decompositions.
IsoDecision iso_nonsemisimple(const HAlgebra& a1, const HAlgebra& a2);

struct CentralizerPattern {
  enum class Kind { BlockDiagonal, BlockAntidiagonal, Full };
  Kind kind = Kind::Full;
  std::size_t k = 0;  // leading block size for the block patterns
  std::size_t m = 0;

  static CentralizerPattern full() { return {Kind::Full, 0, 0}; }
  static CentralizerPattern block_diagonal(std::size_t k, std::size_t m) { return {Kind::BlockDiagonal, k, m}; }
  static CentralizerPattern block_antidiagonal(std::size_t k) { return {Kind::BlockAntidiagonal, k, k}; }
};

/// {W in pattern : W q = q W}, or W q = -q W when `anticommute`. Rows are
/// row-major n x n matrices.
Subspace centralizer(const Matrix& q, const CentralizerPattern& pattern, bool anticommute = false);

struct AutDescription {
  int family = 0;  // case number 1..6 of the automorphism classification
  std::string group;
  std::size_t tangent_dim = 0;  // dimension of the identity component mod scalars
  std::size_t components = 1;
  bool certain = true;
  std::vector<Matrix> generators;  // maps on basis coordinates, each an H4-automorphism
};

AutDescription aut_description(const CanonicalDescriptor& d, const InvertibleSearchOptions& search = {});

/// Scales so that the first nonzero entry (row-major) equals 1.
Matrix normalize_projective(const Matrix& w);

}  // namespace h4

#endif  // H4_CLASSIFY_HPP
