#include <map>
#include <random>
#include <unordered_map>

#include "h4/linalg.hpp"

namespace h4 {

namespace {

/// Sparse multivariate polynomial keyed by exponent vectors.
using Monomial = std::vector<std::uint8_t>;
using MPoly = std::map<Monomial, Rational>;

void add_scaled(MPoly& acc, const MPoly& p, const Rational& s) {
  for (const auto& [mono, c] : p) {
    Rational& slot = acc[mono];
    slot += s * c;
    if (sgn(slot) == 0) acc.erase(mono);
  }
}

/// Multiplies p by the linear form sum_t coeffs[t] * x_t.
MPoly times_linear(const MPoly& p, const Vector& coeffs) {
  MPoly out;
  for (std::size_t t = 0; t < coeffs.size(); ++t) {
    if (sgn(coeffs[t]) == 0) continue;
    for (const auto& [mono, c] : p) {
      Monomial m = mono;
      ++m[t];
      Rational& slot = out[m];
      slot += coeffs[t] * c;
      if (sgn(slot) == 0) out.erase(m);
    }
  }
  return out;
}

/// Determinant of sum_t x_t B_t as a polynomial in x, by Laplace expansion
/// along rows with minors memoized on the set of remaining columns.
MPoly symbolic_determinant(const std::vector<Matrix>& basis) {
  const std::size_t n = basis.front().rows();
  const std::size_t vars = basis.size();
  // entry[i][j] = linear form of the (i, j) entry
  std::vector<std::vector<Vector>> entry(n, std::vector<Vector>(n, Vector(vars)));
  for (std::size_t t = 0; t < vars; ++t)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) entry[i][j][t] = basis[t](i, j);

  std::unordered_map<std::uint32_t, MPoly> memo;
  const std::uint32_t full = (1U << n) - 1U;
  memo[0] = MPoly{{Monomial(vars, 0), Rational(1)}};
  // Process column subsets by increasing size; a subset of size s pairs with rows n-s..n-1.
  for (std::size_t size = 1; size <= n; ++size) {
    const std::size_t row = n - size;
    for (std::uint32_t cols = 1; cols <= full; ++cols) {
      if (static_cast<std::size_t>(__builtin_popcount(cols)) != size) continue;
      MPoly acc;
      int sign = 1;
      for (std::size_t j = 0; j < n; ++j) {
        if (!(cols & (1U << j))) continue;
        const auto it = memo.find(cols & ~(1U << j));
        if (it != memo.end() && !it->second.empty()) {
          add_scaled(acc, times_linear(it->second, entry[row][j]), Rational(sign));
        }
        sign = -sign;
      }
      memo[cols] = std::move(acc);
    }
  }
  return memo[full];
}

Matrix combine(const std::vector<Matrix>& basis, const std::vector<Rational>& coeffs) {
  Matrix m(basis.front().rows(), basis.front().cols());
  for (std::size_t t = 0; t < basis.size(); ++t) {
    if (sgn(coeffs[t]) != 0) m += coeffs[t] * basis[t];
  }
  return m;
}

InvertibleSearch found(Matrix witness, std::string method) {
  return InvertibleSearch{InvertibleStatus::Found, std::move(witness), true, std::move(method)};
}

}  // namespace

InvertibleSearch contains_invertible(const std::vector<Matrix>& spanning, const InvertibleSearchOptions& options) {
  if (spanning.empty()) return InvertibleSearch{InvertibleStatus::None, {}, true, "empty span"};
  const std::size_t n = spanning.front().rows();
  for (const auto& m : spanning) {
    if (m.rows() != n || m.cols() != n) throw Error("contains_invertible: spanning set must be n x n matrices");
  }
  // Reduce to an echelon basis of the span.
  std::vector<Vector> flat;
  for (const auto& m : spanning) flat.push_back(m.entries());
  const Subspace space = Subspace::span(flat, n * n);
  if (space.is_zero()) return InvertibleSearch{InvertibleStatus::None, {}, true, "zero span"};
  std::vector<Matrix> basis;
  for (std::size_t r = 0; r < space.dim(); ++r) basis.push_back(Matrix::from_entries(n, n, space.basis().row(r)));
  const std::size_t dim = basis.size();

  // Deterministic probes: the spanning matrices themselves, then the all-ones combination.
  for (const auto& m : spanning) {
    if (sgn(determinant(m)) != 0) return found(m, "spanning element");
  }
  {
    const Matrix sum = combine(basis, std::vector<Rational>(dim, Rational(1)));
    if (sgn(determinant(sum)) != 0) return found(sum, "basis sum");
  }
  std::mt19937_64 rng(options.seed);
  for (std::size_t s = 0; s < options.random_samples; ++s) {
    std::vector<Rational> coeffs(dim);
    for (auto& c : coeffs) c = static_cast<long>(rng() % 2001) - 1000;
    const Matrix m = combine(basis, coeffs);
    if (sgn(determinant(m)) != 0) return found(m, "seeded sample");
  }

  // det(sum t_i B_i) has degree <= n in each variable, so it vanishes on the
  // grid {0..n}^dim only if it is identically zero.
  if (dim <= options.grid_dim_limit) {
    std::vector<std::size_t> idx(dim, 0);
    while (true) {
      std::vector<Rational> coeffs(dim);
      for (std::size_t t = 0; t < dim; ++t) coeffs[t] = static_cast<long>(idx[t]);
      const Matrix m = combine(basis, coeffs);
      if (sgn(determinant(m)) != 0) return found(m, "exhaustive grid");
      std::size_t t = 0;
      while (t < dim && ++idx[t] > n) idx[t++] = 0;
      if (t == dim) break;
    }
    return InvertibleSearch{InvertibleStatus::None, {}, true, "exhaustive grid"};
  }

  if (n <= options.symbolic_size_limit && n <= 16) {
    const MPoly det = symbolic_determinant(basis);
    if (det.empty()) return InvertibleSearch{InvertibleStatus::None, {}, true, "symbolic determinant"};
    // Nonzero determinant polynomial: random points from a set larger than 2n hit a nonroot with probability >= 1/2.
    while (true) {
      std::vector<Rational> coeffs(dim);
      for (auto& c : coeffs) c = static_cast<long>(rng() % (4 * n + 1));
      const Matrix m = combine(basis, coeffs);
      if (sgn(determinant(m)) != 0) return found(m, "symbolic determinant");
    }
  }
  return InvertibleSearch{InvertibleStatus::Unknown, {}, false, "probabilistic search exhausted"};
}

}  // namespace h4
