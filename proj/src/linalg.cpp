#include "h4/linalg.hpp"

#include <algorithm>
#include <utility>

namespace h4 {

namespace {

using IntRow = std::vector<Integer>;

IntRow to_integer_row(std::span<const Rational> v) {
  Integer common = 1;
  for (const auto& x : v) {
    if (sgn(x) != 0) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), x.get_den_mpz_t());
  }
  IntRow row(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) != 0) row[i] = v[i].get_num() * (common / v[i].get_den());
  }
  return row;
}

void strip_content(IntRow& row) {
  Integer g = 0;
  for (const auto& x : row) {
    if (sgn(x) != 0) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      if (g == 1) return;
    }
  }
  if (g > 1) {
    for (auto& x : row) {
      if (sgn(x) != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
  }
}

/// row := (p/g) * row - (row[col]/g) * pivot_row with g = gcd(p, row[col]); clears row[col].
void eliminate(IntRow& row, const IntRow& pivot_row, std::size_t col) {
  const Integer& p = pivot_row[col];
  Integer g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), row[col].get_mpz_t());
  const Integer a = p / g;
  const Integer b = row[col] / g;
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (sgn(pivot_row[j]) == 0) {
      if (a != 1 && sgn(row[j]) != 0) row[j] *= a;
      continue;
    }
    if (a != 1) row[j] *= a;
    row[j] -= b * pivot_row[j];
  }
}

}  // namespace

std::size_t rank(const Matrix& m) {
  std::vector<IntRow> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    IntRow row = to_integer_row(m.row(r));
    strip_content(row);
    rows.push_back(std::move(row));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < rows.size(); ++col) {
    std::size_t pivot = rows.size();
    for (std::size_t r = rank; r < rows.size(); ++r) {
      if (sgn(rows[r][col]) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (sgn(rows[r][col]) != 0) {
        eliminate(rows[r], rows[rank], col);
        strip_content(rows[r]);
      }
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_mod_p(const Matrix& m, const PrimeField& field) {
  std::vector<std::vector<std::uint64_t>> rows(m.rows(), std::vector<std::uint64_t>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = field.reduce(m(r, c));
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < rows.size(); ++col) {
    std::size_t pivot = rows.size();
    for (std::size_t r = rank; r < rows.size(); ++r) {
      if (rows[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const std::uint64_t inv = field.inv(rows[rank][col]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      const std::uint64_t f = field.mul(rows[r][col], inv);
      for (std::size_t j = col; j < m.cols(); ++j) rows[r][j] = field.sub(rows[r][j], field.mul(f, rows[rank][j]));
    }
    ++rank;
  }
  return rank;
}

Matrix rref(const Matrix& m, std::vector<std::size_t>* pivots) {
  Matrix a = m;
  std::vector<std::size_t> piv;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < a.cols() && lead_row < a.rows(); ++col) {
    std::size_t pivot = a.rows();
    for (std::size_t r = lead_row; r < a.rows(); ++r) {
      if (sgn(a(r, col)) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == a.rows()) continue;
    if (pivot != lead_row) {
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(pivot, c), a(lead_row, c));
    }
    const Rational inv = 1 / a(lead_row, col);
    for (std::size_t c = col; c < a.cols(); ++c) a(lead_row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead_row || sgn(a(r, col)) == 0) continue;
      const Rational f = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) {
        if (sgn(a(lead_row, c)) != 0) a(r, c) -= f * a(lead_row, c);
      }
    }
    piv.push_back(col);
    ++lead_row;
  }
  if (pivots != nullptr) *pivots = piv;
  return a.block(0, 0, lead_row, a.cols());
}

Matrix kernel(const Matrix& m) {
  std::vector<std::size_t> pivots;
  const Matrix r = rref(m, &pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
    basis.push_back(std::move(v));
  }
  return Matrix::from_rows(basis, m.cols());
}

Rational determinant(const Matrix& m) {
  if (!m.is_square()) throw Error("determinant of a non-square matrix");
  Matrix a = m;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    for (std::size_t r = col; r < n; ++r) {
      if (sgn(a(r, col)) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(pivot, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    const Rational inv = 1 / a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (sgn(a(r, col)) == 0) continue;
      const Rational f = a(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) throw Error("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, Matrix::identity(n));
  std::vector<std::size_t> pivots;
  const Matrix r = rref(aug, &pivots);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  return r.block(0, n, n, n);
}

// ---------------------------------------------------------------- Subspace

Subspace::Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

Subspace Subspace::row_space(const Matrix& m) {
  Subspace s(m.cols());
  s.basis_ = rref(m, &s.pivots_);
  return s;
}

Subspace Subspace::span(const std::vector<Vector>& vectors, std::size_t ambient) {
  return row_space(Matrix::from_rows(vectors, ambient));
}

Subspace Subspace::whole(std::size_t ambient) { return row_space(Matrix::identity(ambient)); }

std::vector<Vector> Subspace::basis_vectors() const {
  std::vector<Vector> out;
  out.reserve(dim());
  for (std::size_t r = 0; r < dim(); ++r) out.push_back(basis_.row_vector(r));
  return out;
}

std::optional<Vector> Subspace::coordinates(std::span<const Rational> v) const {
  if (v.size() != ambient_) throw Error("subspace coordinate query with wrong ambient dimension");
  Vector rest(v.begin(), v.end());
  Vector coeffs(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    coeffs[i] = rest[pivots_[i]];
    if (sgn(coeffs[i]) != 0) axpy(-coeffs[i], basis_.row(i), rest);
  }
  if (!h4::is_zero(rest)) return std::nullopt;
  return coeffs;
}

bool Subspace::contains(std::span<const Rational> v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) return false;
  for (std::size_t r = 0; r < other.dim(); ++r) {
    if (!contains(other.basis_.row(r))) return false;
  }
  return true;
}

Subspace Subspace::operator+(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw Error("subspace sum with different ambient dimensions");
  Matrix stacked(dim() + other.dim(), ambient_);
  stacked.set_block(0, 0, basis_);
  stacked.set_block(dim(), 0, other.basis_);
  return row_space(stacked);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw Error("subspace intersection with different ambient dimensions");
  // x = sum a_i u_i = sum b_j w_j  <=>  [U^T | -W^T] (a, b) = 0.
  const std::size_t k1 = dim();
  const std::size_t k2 = other.dim();
  Matrix system(ambient_, k1 + k2);
  for (std::size_t i = 0; i < k1; ++i)
    for (std::size_t c = 0; c < ambient_; ++c) system(c, i) = basis_(i, c);
  for (std::size_t j = 0; j < k2; ++j)
    for (std::size_t c = 0; c < ambient_; ++c) system(c, k1 + j) = -other.basis_(j, c);
  const Matrix ker = kernel(system);
  std::vector<Vector> vectors;
  for (std::size_t r = 0; r < ker.rows(); ++r) {
    Vector x(ambient_);
    for (std::size_t i = 0; i < k1; ++i) axpy(ker(r, i), basis_.row(i), x);
    vectors.push_back(std::move(x));
  }
  return span(vectors, ambient_);
}

Subspace Subspace::image(const Matrix& map) const {
  if (map.cols() != ambient_) throw Error("subspace image under a map of the wrong size");
  std::vector<Vector> vectors;
  for (std::size_t r = 0; r < dim(); ++r) vectors.push_back(map * basis_.row(r));
  return span(vectors, map.rows());
}

LinearSolution solve_linear(const Matrix& system, std::span<const Rational> rhs) {
  Vector b(rhs.begin(), rhs.end());
  if (b.empty()) b.assign(system.rows(), Rational(0));
  if (b.size() != system.rows()) throw Error("solve_linear: right-hand side has the wrong length");
  Matrix aug(system.rows(), system.cols() + 1);
  aug.set_block(0, 0, system);
  for (std::size_t r = 0; r < system.rows(); ++r) aug(r, system.cols()) = b[r];
  std::vector<std::size_t> pivots;
  const Matrix r = rref(aug, &pivots);
  LinearSolution solution;
  if (!pivots.empty() && pivots.back() == system.cols()) {
    solution.consistent = false;
    solution.homogeneous = Subspace(system.cols());
    return solution;
  }
  solution.consistent = true;
  solution.particular.assign(system.cols(), Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) solution.particular[pivots[i]] = r(i, system.cols());
  solution.homogeneous = Subspace::row_space(kernel(system));
  return solution;
}

// ------------------------------------------------------ invariant factors

std::vector<UPoly> invariant_factors(const Matrix& m) {
  if (!m.is_square()) throw Error("invariant factors of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<std::vector<UPoly>> a(n, std::vector<UPoly>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      UPoly entry = UPoly::constant(-m(i, j));
      if (i == j) entry += UPoly::x();
      a[i][j] = std::move(entry);
    }
  }
  std::vector<UPoly> diagonal;
  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      // Move a nonzero entry of least degree to (t, t).
      std::size_t bi = n, bj = n;
      for (std::size_t i = t; i < n; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (!a[i][j].is_zero() && (bi == n || a[i][j].degree() < a[bi][bj].degree())) {
            bi = i;
            bj = j;
          }
      if (bi == n) throw InternalError("characteristic matrix became singular during Smith reduction");
      std::swap(a[t], a[bi]);
      for (std::size_t i = 0; i < n; ++i) std::swap(a[i][t], a[i][bj]);

      bool clean = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (a[i][t].is_zero()) continue;
        auto [q, r] = divmod(a[i][t], a[t][t]);
        for (std::size_t j = t; j < n; ++j) a[i][j] -= q * a[t][j];
        if (!r.is_zero()) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a[t][j].is_zero()) continue;
        auto [q, r] = divmod(a[t][j], a[t][t]);
        for (std::size_t i = t; i < n; ++i) a[i][j] -= q * a[i][t];
        if (!r.is_zero()) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide every remaining entry.
      std::size_t bad_row = n;
      for (std::size_t i = t + 1; i < n && bad_row == n; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!divmod(a[i][j], a[t][t]).second.is_zero()) {
            bad_row = i;
            break;
          }
      if (bad_row == n) break;
      for (std::size_t j = t; j < n; ++j) a[t][j] += a[bad_row][j];
    }
    diagonal.push_back(a[t][t].monic());
  }
  std::vector<UPoly> factors;
  for (auto& d : diagonal) {
    if (d.degree() > 0) factors.push_back(std::move(d));
  }
  return factors;
}

bool similar(const Matrix& a, const Matrix& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
    throw Error("similar: matrices must be square of equal size");
  }
  return invariant_factors(a) == invariant_factors(b);
}

}  // namespace h4
