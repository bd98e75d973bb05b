#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "h4/linalg.hpp"

using namespace h4;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> dist(lo, hi);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Rational(dist(rng)) / (1 + (dist(rng) & 1));
  return m;
}

}  // namespace

TEST_CASE("scalars round-trip through their canonical text") {
  CHECK(format_rational(parse_rational("-6/4")) == "-3/2");
  CHECK(format_rational(parse_rational(" 12 ")) == "12");
  CHECK_THROWS_AS(parse_rational("1/0"), ValidationError);
  CHECK_THROWS_AS(parse_rational("1.5"), ValidationError);
  CHECK_THROWS_AS(parse_rational("1/-2"), ValidationError);
}

TEST_CASE("prime field arithmetic and reduction") {
  const PrimeField f(1000003);
  CHECK(f.mul(f.inv(12345), 12345) == 1);
  CHECK(f.reduce(Rational(1, 2)) == f.inv(2));
  CHECK(f.reduce(Rational(-1)) == 1000002);
  CHECK_THROWS_AS((void)f.reduce(Rational(1, 1000003)), Error);
  CHECK(is_prime(1000033));
  CHECK_FALSE(is_prime(1000001));
}

TEST_CASE("rank agrees with plain elimination on random matrices") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    Matrix m = random_matrix(rng, r, c);
    if (trial % 3 == 0 && r > 1) {
      // Force a dependency.
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * 2 - m(r - 2, j);
    }
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < r; ++i) rows.push_back(m.row_vector(i));
    CHECK(rank(m) == fx::plain_rank(rows));
    CHECK(rank(m) == rank(m.transpose()));
  }
}

TEST_CASE("kernel, rref and inverse satisfy their defining equations") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    const Matrix m = random_matrix(rng, r, c);
    const Matrix k = kernel(m);
    CHECK(k.rows() + rank(m) == c);
    for (std::size_t i = 0; i < k.rows(); ++i) CHECK(is_zero(m * k.row_vector(i)));
    std::vector<std::size_t> pivots;
    const Matrix e = rref(m, &pivots);
    CHECK(pivots.size() == rank(m));
    CHECK(Subspace::row_space(e) == Subspace::row_space(m));
    if (r == c) {
      const auto inv = inverse(m);
      CHECK(inv.has_value() == (sgn(determinant(m)) != 0));
      if (inv) CHECK(*inv * m == Matrix::identity(r));
    }
  }
}

TEST_CASE("determinant is multiplicative") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const Matrix a = random_matrix(rng, n, n), b = random_matrix(rng, n, n);
    CHECK(determinant(a * b) == determinant(a) * determinant(b));
  }
  CHECK(determinant(Matrix{{0, 1}, {1, 0}}) == -1);
}

TEST_CASE("subspace operations") {
  const Subspace a = Subspace::span({{1, 0, 0}, {0, 1, 0}}, 3);
  const Subspace b = Subspace::span({{0, 1, 0}, {0, 0, 1}}, 3);
  CHECK((a + b).is_whole());
  CHECK(a.intersect(b) == Subspace::span({{0, 1, 0}}, 3));
  CHECK(a.contains(Vector{2, -3, 0}));
  CHECK_FALSE(a.contains(Vector{0, 0, 1}));
  const auto x = a.coordinates(Vector{2, -3, 0});
  REQUIRE(x);
  CHECK(*x == Vector{2, -3});
  CHECK(a.image(Matrix{{0, 0, 0}, {0, 0, 0}, {1, 1, 0}}) == Subspace::span({{0, 0, 1}}, 3));
  CHECK(Subspace::span({{1, 1}, {2, 2}}, 2).dim() == 1);
}

TEST_CASE("solve_linear finds particular and homogeneous parts") {
  const Matrix s{{1, 1}, {2, 2}};
  const auto ok = solve_linear(s, Vector{1, 2});
  REQUIRE(ok.consistent);
  CHECK(s * ok.particular == Vector{1, 2});
  CHECK(ok.homogeneous.dim() == 1);
  CHECK_FALSE(solve_linear(s, Vector{1, 3}).consistent);
}

TEST_CASE("span builders agree with the row space over Q and modulo p") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + rng() % 6;
    SpanBuilder q(n);
    ModularSpanBuilder p(n, PrimeField(1000003));
    std::vector<Vector> inserted;
    for (int i = 0; i < 8; ++i) {
      Matrix row = random_matrix(rng, 1, n, -1, 1);
      Vector v = row.row_vector(0);
      if (i % 3 == 2 && !inserted.empty()) v = add(inserted.back(), inserted.front());
      std::vector<std::uint64_t> red;
      for (const auto& x : v) red.push_back(p.field().reduce(x));
      const std::size_t before = q.dim();
      const bool grew = q.insert(v);
      CHECK(grew == (q.dim() > before));
      p.insert(std::move(red));
      inserted.push_back(v);
      CHECK(q.dim() == Subspace::span(inserted, n).dim());
      // Small integer data: no prime of this size divides a minor.
      CHECK(p.dim() == q.dim());
    }
    CHECK(q.subspace() == Subspace::span(inserted, n));
  }
}

TEST_CASE("similarity by invariant factors agrees with a brute-force conjugator search") {
  const auto ps = fx::sign_matrices(2, 2);
  std::size_t found = 0;
  for (std::size_t i = 0; i < ps.size(); i += 4)
    for (std::size_t j = 0; j < ps.size(); j += 5) {
      const bool brute = fx::brute_similar(ps[i], ps[j], 1);
      if (brute) {
        ++found;
        CHECK(similar(ps[i], ps[j]));
      }
      // Different characteristic data can never be conjugate.
      if (ps[i].trace() != ps[j].trace() || determinant(ps[i]) != determinant(ps[j])) CHECK_FALSE(similar(ps[i], ps[j]));
    }
  CHECK(found > 0);
  CHECK(similar(Matrix{{0, 1}, {0, 0}}, Matrix{{0, 0}, {1, 0}}));
  CHECK_FALSE(similar(Matrix{{0, 1}, {0, 0}}, Matrix(2, 2)));
  CHECK_FALSE(similar(Matrix{{1, 0}, {0, -1}}, Matrix{{0, 1}, {0, 0}}));
}

TEST_CASE("invariant factors of a companion-like matrix") {
  const auto f = invariant_factors(Matrix{{0, -1}, {1, 0}});
  REQUIRE(f.size() == 1);
  CHECK(f[0] == UPoly({1, 0, 1}));
  const auto g = invariant_factors(Matrix::identity(2));
  REQUIRE(g.size() == 2);
  CHECK(g[0] == UPoly({-1, 1}));
}

TEST_CASE("contains_invertible decides spans of matrices") {
  // Strictly upper triangular 2 x 2: never invertible.
  auto none = contains_invertible({Matrix{{0, 1}, {0, 0}}});
  CHECK(none.status == InvertibleStatus::None);
  CHECK(none.certain);
  // E11 and E22 separately singular, their sum invertible.
  auto some = contains_invertible({Matrix{{1, 0}, {0, 0}}, Matrix{{0, 0}, {0, 1}}});
  REQUIRE(some.status == InvertibleStatus::Found);
  CHECK(sgn(determinant(some.witness)) != 0);
  // Anti-diagonal pattern in M_4 of dimension 8: beyond the grid limit.
  std::vector<Matrix> big;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      Matrix a(4, 4), b(4, 4);
      a(i, 2 + j) = 1;
      b(2 + i, j) = 1;
      big.push_back(a);
      big.push_back(b);
    }
  auto anti = contains_invertible(big);
  REQUIRE(anti.status == InvertibleStatus::Found);
  CHECK(sgn(determinant(anti.witness)) != 0);
  // Rank-one span of dimension 4 (all x y^T with fixed x): singular.
  std::vector<Matrix> rank_one;
  for (std::size_t j = 0; j < 4; ++j) {
    Matrix m(4, 4);
    m(0, j) = 1;
    m(1, j) = 2;
    rank_one.push_back(m);
  }
  CHECK(contains_invertible(rank_one).status == InvertibleStatus::None);
}

TEST_CASE("contains_invertible is deterministic for a fixed seed") {
  std::vector<Matrix> span = {Matrix{{1, 0, 0}, {0, 0, 0}, {0, 0, 1}}, Matrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 0}},
                              Matrix{{0, 0, 0}, {0, 1, 0}, {0, 0, 0}}};
  InvertibleSearchOptions o;
  o.seed = 42;
  CHECK(contains_invertible(span, o).witness == contains_invertible(span, o).witness);
}
