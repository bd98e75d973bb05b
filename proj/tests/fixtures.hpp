// Shared fixtures and independent oracles for the test binaries and the
// acceptance runner. Oracles here deliberately avoid the library code paths
// they check: own elimination, own enumeration, own pattern equations.
#ifndef H4_TESTS_FIXTURES_HPP
#define H4_TESTS_FIXTURES_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "h4/algebra.hpp"
#include "h4/constructions.hpp"
#include "h4/linalg.hpp"

namespace fx {

using h4::CanonicalDescriptor;
using h4::HAlgebra;
using h4::Matrix;
using h4::Rational;
using h4::Vector;

inline std::vector<Vector> zero_structure(std::size_t d) { return std::vector<Vector>(d * d, Vector(d)); }

/// F = trivial M_1.
inline HAlgebra field() { return h4::make_trivial_matrix(1); }

/// F (+) F with trivial action: two orthogonal idempotents.
inline HAlgebra ff_trivial() {
  auto s = zero_structure(2);
  s[0][0] = 1;
  s[3][1] = 1;
  return HAlgebra(2, s, Vector{1, 1}, Matrix::identity(2), Matrix(2, 2), "F+F trivial");
}

/// Upper-triangular 2 x 2 matrices on (e11, e12, e22), trivial action.
inline HAlgebra upper_triangular() {
  auto s = zero_structure(3);
  s[0 * 3 + 0][0] = 1;  // e11 e11
  s[0 * 3 + 1][1] = 1;  // e11 e12
  s[1 * 3 + 2][1] = 1;  // e12 e22
  s[2 * 3 + 2][2] = 1;  // e22 e22
  return HAlgebra(3, s, Vector{1, 0, 1}, Matrix::identity(3), Matrix(3, 3), "upper triangular");
}

/// M_2 (+) M_2 with c acting on each summand as conjugation by diag(1, -1), v = 0.
inline HAlgebra m2_plus_m2_componentwise() {
  const auto m2 = h4::matrix_units_structure(2);
  auto s = zero_structure(8);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k) {
        s[i * 8 + j][k] = m2[i * 4 + j][k];
        s[(i + 4) * 8 + (j + 4)][k + 4] = m2[i * 4 + j][k];
      }
  const Matrix d = Matrix::diagonal(Vector{1, -1});
  const Matrix conj = h4::sandwich_operator(d, d);
  Matrix c(8, 8);
  c.set_block(0, 0, conj);
  c.set_block(4, 4, conj);
  return HAlgebra(8, s, Vector{1, 0, 0, 1, 1, 0, 0, 1}, c, Matrix(8, 8), "M2+M2 componentwise");
}

/// M_1 (+) M_1 with the swap and v (a, b) = (p a - b p, a p - p b).
inline HAlgebra ff_swap(const Rational& p) {
  return h4::make_double(h4::DoubleCaseParams{1, Matrix{{p}}, p * p});
}

inline CanonicalDescriptor double_desc(Matrix p) {
  const Rational alpha = h4::infer_double_alpha(p);
  const std::size_t k = p.rows();
  return CanonicalDescriptor::double_case({k, std::move(p), alpha});
}

/// Every integer matrix with entries in {-1, 0, 1}.
inline std::vector<Matrix> sign_matrices(std::size_t rows, std::size_t cols) {
  std::vector<Matrix> out;
  const std::size_t cells = rows * cols;
  std::size_t total = 1;
  for (std::size_t i = 0; i < cells; ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    Matrix m(rows, cols);
    std::size_t c = code;
    for (std::size_t i = 0; i < cells; ++i, c /= 3) m(i / cols, i % cols) = static_cast<long>(c % 3) - 1;
    out.push_back(m);
  }
  return out;
}

/// Matrix-case parameters with k, m in {1, 2} and entries in {-1, 0, 1}
/// meeting Q1 Q2 = alpha E_k, Q2 Q1 = alpha E_m. For k = m = 2 every
/// `stride`-th admissible pair is kept.
inline std::vector<h4::MatrixCaseParams> matrix_case_sweep(std::size_t stride = 7) {
  std::vector<h4::MatrixCaseParams> out;
  for (std::size_t k = 1; k <= 2; ++k)
    for (std::size_t m = 1; m <= 2; ++m) {
      const auto q1s = sign_matrices(k, m);
      const auto q2s = sign_matrices(m, k);
      std::size_t seen = 0;
      for (const auto& q1 : q1s)
        for (const auto& q2 : q2s) {
          const Matrix prod = q1 * q2;
          const Rational alpha = prod(0, 0);
          if (prod != alpha * Matrix::identity(k) || q2 * q1 != alpha * Matrix::identity(m)) continue;
          if (k == 2 && m == 2 && seen++ % stride != 0) continue;
          out.push_back({k, m, q1, q2, alpha});
        }
    }
  return out;
}

/// P with k in {1, 2}, entries in {-1, 0, 1} and P^2 scalar.
inline std::vector<h4::DoubleCaseParams> double_sweep() {
  std::vector<h4::DoubleCaseParams> out;
  for (std::size_t k = 1; k <= 2; ++k)
    for (const auto& p : sign_matrices(k, k)) {
      const Matrix sq = p * p;
      if (sq != sq(0, 0) * Matrix::identity(k)) continue;
      out.push_back({k, p, sq(0, 0)});
    }
  return out;
}

/// All constructor instances of the axiom sweep.
inline std::vector<CanonicalDescriptor> descriptor_sweep() {
  std::vector<CanonicalDescriptor> out;
  for (std::size_t n = 1; n <= 2; ++n) out.push_back(CanonicalDescriptor::trivial_matrix(n));
  for (auto& p : matrix_case_sweep()) out.push_back(CanonicalDescriptor::matrix_case(std::move(p)));
  for (auto& p : double_sweep()) out.push_back(CanonicalDescriptor::double_case(std::move(p)));
  // Non-semisimple instances over every v = 0 graded base of small size.
  out.push_back(CanonicalDescriptor::nonsemisimple(CanonicalDescriptor::trivial_matrix(1)));
  out.push_back(CanonicalDescriptor::nonsemisimple(CanonicalDescriptor::trivial_matrix(2)));
  out.push_back(CanonicalDescriptor::nonsemisimple(double_desc(Matrix{{0}})));
  out.push_back(CanonicalDescriptor::nonsemisimple(double_desc(Matrix{{0, 0}, {0, 0}})));
  out.push_back(CanonicalDescriptor::nonsemisimple(
      CanonicalDescriptor::matrix_case({1, 1, Matrix{{0}}, Matrix{{0}}, 0})));
  out.push_back(CanonicalDescriptor::nonsemisimple(
      CanonicalDescriptor::matrix_case({2, 1, Matrix(2, 1), Matrix(1, 2), 0})));
  return out;
}

// ------------------------------------------------------------------ oracles

/// Rank over Q by plain Gaussian elimination on rational rows.
inline std::size_t plain_rank(std::vector<Vector> rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && sgn(rows[p][c]) == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (sgn(rows[i][c]) == 0) continue;
      const Rational f = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

/// c_n by brute force: evaluate every monomial x^{h_1}_{s(1)} ... x^{h_n}_{s(n)}
/// on every basis assignment and take the rank of the resulting table.
inline std::size_t direct_rank_codim(const HAlgebra& a, std::size_t n) {
  const std::size_t d = a.dim();
  const Matrix ops[4] = {Matrix::identity(d), a.c_action(), a.v_action(), a.c_action() * a.v_action()};
  std::size_t assignments = 1;
  for (std::size_t i = 0; i < n; ++i) assignments *= d;
  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<Vector> rows;
  do {
    std::size_t tuples = 1;
    for (std::size_t i = 0; i < n; ++i) tuples *= 4;
    for (std::size_t code = 0; code < tuples; ++code) {
      std::vector<std::size_t> h(n);
      for (std::size_t j = 0, c = code; j < n; ++j, c /= 4) h[j] = c % 4;
      Vector row;
      row.reserve(assignments * d);
      for (std::size_t idx = 0; idx < assignments; ++idx) {
        std::vector<std::size_t> alpha(n);
        for (std::size_t i = 0, c = idx; i < n; ++i, c /= d) alpha[i] = c % d;
        Vector acc = ops[h[0]].column(alpha[sigma[0]]);
        for (std::size_t j = 1; j < n; ++j) acc = a.multiply(acc, ops[h[j]].column(alpha[sigma[j]]));
        row.insert(row.end(), acc.begin(), acc.end());
      }
      rows.push_back(std::move(row));
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return plain_rank(std::move(rows));
}

/// Dimension of span{I, C, V, CV} as operators: c_1 from the operator rank.
inline std::size_t operator_rank_c1(const HAlgebra& a) {
  const std::size_t d = a.dim();
  const Matrix ops[4] = {Matrix::identity(d), a.c_action(), a.v_action(), a.c_action() * a.v_action()};
  std::vector<Vector> rows;
  for (const auto& op : ops) rows.push_back(op.entries());
  return plain_rank(std::move(rows));
}

/// Searches integer Q with entries in [-bound, bound], det Q != 0 and
/// Q a = b Q. Finding one proves similarity.
inline bool brute_similar(const Matrix& a, const Matrix& b, long bound = 2) {
  const std::size_t n = a.rows();
  const std::size_t cells = n * n;
  const long side = 2 * bound + 1;
  std::size_t total = 1;
  for (std::size_t i = 0; i < cells; ++i) total *= static_cast<std::size_t>(side);
  for (std::size_t code = 0; code < total; ++code) {
    Matrix q(n, n);
    std::size_t c = code;
    for (std::size_t i = 0; i < cells; ++i, c /= static_cast<std::size_t>(side))
      q(i / n, i % n) = static_cast<long>(c % static_cast<std::size_t>(side)) - bound;
    if (q * a == b * q && sgn(h4::determinant(q)) != 0) return true;
  }
  return false;
}

/// Smallest subspace containing `seed` and stable under every L_{e_i},
/// R_{e_i}, C and V, grown vector by vector.
inline std::size_t ideal_dim(const HAlgebra& a, const Vector& seed) {
  const std::size_t d = a.dim();
  std::vector<Matrix> ops = {a.c_action(), a.v_action()};
  for (std::size_t i = 0; i < d; ++i) {
    ops.push_back(a.left_multiplication(i));
    ops.push_back(a.right_multiplication(i));
  }
  std::vector<Vector> found = {seed};
  std::size_t r = plain_rank(found);
  for (std::size_t idx = 0; idx < found.size() && r < d; ++idx) {
    for (const auto& op : ops) {
      found.push_back(op * found[idx]);
      const std::size_t next = plain_rank(found);
      if (next == r) {
        found.pop_back();
      } else {
        r = next;
      }
    }
  }
  return r;
}

/// Simplicity read off seeded ideals: A^2 != 0 and the H4-ideal generated by
/// each basis vector and each e_i +- e_j is all of A. Seeds need not meet
/// every proper ideal, so this is a cross-check, not a decision procedure.
inline bool basis_sweep_simple(const HAlgebra& a) {
  const std::size_t d = a.dim();
  std::vector<Vector> products = a.structure();
  if (plain_rank(products) == 0) return false;
  for (std::size_t i = 0; i < d; ++i) {
    if (ideal_dim(a, h4::unit_vector(d, i)) < d) return false;
    for (std::size_t j = i + 1; j < d; ++j) {
      for (int s : {1, -1}) {
        Vector seed = h4::unit_vector(d, i);
        seed[j] = s;
        if (ideal_dim(a, seed) < d) return false;
      }
    }
  }
  return true;
}

/// Entrywise membership in the block pattern of the centralizer for
/// P = (k Jordan cells [[0,1],[0,0]]) (+) 0 and W P = s P W:
///   W[2i+1][2j] = 0, W[2i+1][2j+1] = s W[2i][2j]   (i, j < k)
///   W[2i+1][t] = 0                                  (i < k, t >= 2k)
///   W[r][2j] = 0                                    (r >= 2k, j < k)
inline bool in_nilpotent_pattern(const Matrix& w, std::size_t k, int s) {
  const std::size_t n = w.rows();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (sgn(w(2 * i + 1, 2 * j)) != 0) return false;
      if (w(2 * i + 1, 2 * j + 1) != s * w(2 * i, 2 * j)) return false;
    }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t t = 2 * k; t < n; ++t)
      if (sgn(w(2 * i + 1, t)) != 0) return false;
  for (std::size_t r = 2 * k; r < n; ++r)
    for (std::size_t j = 0; j < k; ++j)
      if (sgn(w(r, 2 * j)) != 0) return false;
  return true;
}

}  // namespace fx

#endif  // H4_TESTS_FIXTURES_HPP
