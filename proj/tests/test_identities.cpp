#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <limits>

#include "fixtures.hpp"
#include "h4/identities.hpp"

using namespace h4;

namespace {

CodimOptions rational_mode() {
  CodimOptions o;
  o.mode = ModeChoice::Rational;
  return o;
}

CodimOptions modular_mode() {
  CodimOptions o;
  o.mode = ModeChoice::Modular;
  return o;
}

std::vector<HAlgebra> small_fixtures() {
  return {fx::field(),
          fx::ff_trivial(),
          fx::ff_swap(0),
          fx::ff_swap(1),
          fx::ff_swap(-1),
          make_nonsemisimple(fx::field()),
          fx::upper_triangular(),
          make_trivial_matrix(2),
          make_matrix_case({1, 1, Matrix{{1}}, Matrix{{1}}, 1}),
          make_matrix_case({1, 1, Matrix{{1}}, Matrix{{0}}, 0})};
}

}  // namespace

TEST_CASE("monomial enumeration") {
  CHECK(monomial_count(1) == 4);
  CHECK(monomial_count(3) == 64 * 6);
  CHECK(monomial_count(40) == std::numeric_limits<std::uint64_t>::max());
  const auto ms = monomials(2);
  REQUIRE(ms.size() == 32);
  CHECK(std::is_sorted(ms.begin(), ms.end()));
  CHECK(to_string(ms[0]) == "x1^1 x2^1");
  CHECK(to_string(ms[31]) == "x2^cv x1^cv");
  std::size_t seen = 0;
  for_each_monomial(3, [&](const HMonomial&) { return ++seen < 10; });
  CHECK(seen == 10);
}

TEST_CASE("polynomial arithmetic collects terms") {
  const HMonomial m{{0, 1}, {H4Basis::C, H4Basis::One}};
  HPolynomial p = HPolynomial::monomial(m, 2);
  p.add(m, -2);
  CHECK(p.is_zero());
  HPolynomial q = HPolynomial::monomial(m);
  q += HPolynomial::monomial(m, 3);
  REQUIRE(q.terms().size() == 1);
  CHECK(q.terms()[0].coefficient == 4);
  CHECK(Rational(0) * q == HPolynomial(2));
}

TEST_CASE("evaluation of monomials") {
  const HAlgebra a = make_trivial_matrix(2);
  // x2 x1 at x1 = e12, x2 = e21: e21 e12 = e22.
  const HMonomial m{{1, 0}, {H4Basis::One, H4Basis::One}};
  CHECK(evaluate(HPolynomial::monomial(m), a, {1, 2}) == Vector{0, 0, 0, 1});
  // The commutator [x1, x2] is not an identity of M_2 but x1 x2 - x1 x2 is.
  HPolynomial comm(2);
  comm.add({{0, 1}, {H4Basis::One, H4Basis::One}}, 1);
  comm.add({{1, 0}, {H4Basis::One, H4Basis::One}}, -1);
  CHECK_FALSE(is_zero(evaluate(comm, a, {1, 2})));
  CHECK(is_zero(evaluate(comm, make_trivial_matrix(1), {0, 0})));
  // Labels act before multiplying: x1^v on the swap double is V e_0.
  const HAlgebra s = fx::ff_swap(1);
  CHECK(evaluate(HPolynomial::monomial({{0}, {H4Basis::V}}), s, {0}) == s.v_action().column(0));
}

TEST_CASE("c_1 matches the operator rank") {
  for (const auto& a : small_fixtures()) {
    INFO(a.label());
    CHECK(codimension(a, 1, rational_mode()).value == fx::operator_rank_c1(a));
  }
  CHECK(codimension(make_trivial_matrix(2), 1).value == 1);
  CHECK(codimension(make_matrix_case({1, 1, Matrix{{1}}, Matrix{{1}}, 1}), 1).value == 4);
}

TEST_CASE("c_n matches the direct-rank oracle") {
  for (const auto& a : small_fixtures()) {
    const std::size_t n_max = a.dim() <= 2 ? 4 : (a.dim() <= 3 ? 3 : 2);
    for (std::size_t n = 1; n <= n_max; ++n) {
      INFO(a.label() << " n=" << n);
      const CodimResult r = codimension(a, n, rational_mode());
      CHECK(r.complete);
      CHECK(r.certified);
      CHECK(r.value == fx::direct_rank_codim(a, n));
    }
  }
}

TEST_CASE("the field has c_n = 1") {
  for (std::size_t n = 1; n <= 6; ++n) CHECK(codimension(fx::field(), n, rational_mode()).value == 1);
}

TEST_CASE("modular mode agrees with rational mode") {
  for (const auto& a : small_fixtures()) {
    for (std::size_t n = 1; n <= 3; ++n) {
      const CodimResult q = codimension(a, n, rational_mode());
      const CodimResult p = codimension(a, n, modular_mode());
      INFO(a.label() << " n=" << n);
      CHECK(p.modular);
      CHECK(p.per_prime.size() == 3);
      CHECK(p.primes_agree);
      CHECK(p.value == q.value);
      CHECK(p.certified);
    }
  }
}

TEST_CASE("auto mode switches on the evaluation space size") {
  CHECK_FALSE(codimension(fx::ff_swap(1), 3).modular);                     // 2^4 = 16
  CHECK(codimension(make_trivial_matrix(3), 3).modular);                  // 9^4 > 4096
}

TEST_CASE("thread count does not change results") {
  const HAlgebra a = make_nonsemisimple(fx::ff_swap(0));
  CodimOptions one = rational_mode(), four = rational_mode();
  four.threads = 4;
  for (std::size_t n = 1; n <= 3; ++n) {
    const CodimResult x = codimension(a, n, one), y = codimension(a, n, four);
    CHECK(x.value == y.value);
    CHECK(x.processed == y.processed);
    CHECK(x.inserted == y.inserted);
  }
}

TEST_CASE("resource caps give a partial lower bound") {
  const HAlgebra a = make_matrix_case({1, 1, Matrix{{1}}, Matrix{{1}}, 1});
  CodimOptions o = rational_mode();
  o.max_monomials = 1;
  const CodimResult r = codimension(a, 3, o);
  CHECK_FALSE(r.complete);
  CHECK(r.lower_bound);
  CHECK_FALSE(r.certified);
  CHECK(r.stop_reason == "max monomials");
  CHECK(r.value <= codimension(a, 3, rational_mode()).value);
  CHECK_THROWS_AS(codimension(make_trivial_matrix(4), 6), ResourceLimitError);
}

TEST_CASE("codimensions respect the d^(n+1) bound") {
  for (const auto& a : {fx::ff_swap(1), fx::ff_swap(0), make_nonsemisimple(fx::field())}) {
    const BoundReport b = check_upper_bound(a, 4, rational_mode());
    CHECK(b.all_hold);
    CHECK(b.input_h4_simple);
    CHECK(b.rows.size() == 4);
  }
  const BoundReport control = check_upper_bound(fx::upper_triangular(), 2, rational_mode());
  CHECK_FALSE(control.input_h4_simple);
  CHECK_FALSE(control.warning.empty());
}

TEST_CASE("exponent trend formats four decimals") {
  const auto rows = exponent_trend(fx::ff_swap(0), 3, rational_mode());
  REQUIRE(rows.size() == 3);
  for (const auto& r : rows) CHECK(r.root_text == "2.0000");
}

TEST_CASE("alternation is antisymmetric in the chosen variables") {
  const HMonomial m{{0, 1, 2}, {H4Basis::C, H4Basis::One, H4Basis::V}};
  const HPolynomial p = HPolynomial::monomial(m);
  const HPolynomial alt = alternate(p, {0, 2});
  CHECK(alt.terms().size() == 2);
  // Renaming x1 <-> x3 in alt gives -alt.
  HPolynomial renamed(3);
  for (const auto& t : alt.terms()) {
    HMonomial r = t.monomial;
    for (auto& s : r.sigma) s = s == 0 ? 2 : (s == 2 ? 0 : s);
    renamed.add(r, t.coefficient);
  }
  CHECK(renamed == Rational(-1) * alt);
  // Alternating twice multiplies by the group order.
  CHECK(alternate(alt, {0, 2}) == Rational(2) * alt);
  // Evaluations vanish when two alternated variables coincide.
  const HAlgebra a = make_matrix_case({1, 1, Matrix{{1}}, Matrix{{1}}, 1});
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(is_zero(evaluate(alt, a, {i, j, i})));
}

TEST_CASE("alternating non-identities") {
  // Dimension 2 non-semisimple algebra, one set of size 2 at n = 3.
  CHECK(exists_alternating_nonidentity(make_nonsemisimple(fx::field()), 3, {{0, 1}}));
  // A set larger than dim A forces every alternating polynomial to vanish.
  CHECK_FALSE(exists_alternating_nonidentity(make_nonsemisimple(fx::field()), 3, {{0, 1, 2}}));
  // Commutative algebra with trivial action: every alternation in two variables vanishes.
  AlternationOptions only_one;
  only_one.allowed_labels = {H4Basis::One};
  CHECK_FALSE(exists_alternating_nonidentity(fx::ff_trivial(), 2, {{0, 1}}, only_one));
  CHECK(exists_alternating_nonidentity(make_trivial_matrix(2), 2, {{0, 1}}, only_one));
  AlternationOptions tiny;
  tiny.max_work = 10;
  CHECK_THROWS_AS(exists_alternating_nonidentity(make_trivial_matrix(2), 3, {{0, 1}}, tiny), ResourceLimitError);
  CHECK_THROWS_AS(exists_alternating_nonidentity(fx::field(), 3, {{0, 1}, {1, 2}}), Error);
}

TEST_CASE("a witness found by the search evaluates to nonzero") {
  // Cross-check: build the alternated monomial explicitly and evaluate it.
  const HAlgebra a = make_nonsemisimple(fx::field());
  bool any = false;
  for (const auto& m : monomials(3)) {
    const HPolynomial alt = alternate(HPolynomial::monomial(m), {0, 1});
    for (std::size_t i = 0; i < 2 && !any; ++i)
      for (std::size_t j = 0; j < 2 && !any; ++j)
        for (std::size_t k = 0; k < 2 && !any; ++k)
          if (!is_zero(evaluate(alt, a, {i, j, k}))) any = true;
    if (any) break;
  }
  CHECK(any);
}
