#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "h4/classify.hpp"
#include "h4/structure.hpp"

using namespace h4;

TEST_CASE("every swept instance is absolutely H4-simple") {
  for (const auto& d : fx::descriptor_sweep()) {
    const HAlgebra a = realize(d);
    INFO(a.label());
    CHECK(is_absolutely_h4_simple(a));
  }
}

TEST_CASE("controls are not H4-simple") {
  CHECK_FALSE(is_absolutely_h4_simple(fx::ff_trivial()));
  CHECK_FALSE(is_absolutely_h4_simple(fx::upper_triangular()));
  CHECK_FALSE(is_absolutely_h4_simple(fx::m2_plus_m2_componentwise()));
}

TEST_CASE("seeded ideal sweep agrees with the closure verdict up to dimension 4") {
  std::vector<HAlgebra> algebras = {fx::ff_trivial(), fx::upper_triangular()};
  for (const auto& d : fx::descriptor_sweep()) {
    HAlgebra a = realize(d);
    if (a.dim() <= 4) algebras.push_back(std::move(a));
  }
  CHECK(algebras.size() >= 15);
  for (const auto& a : algebras) {
    INFO(a.label());
    CHECK(fx::basis_sweep_simple(a) == is_absolutely_h4_simple(a));
  }
}

TEST_CASE("scopes: the swap double with P = 0 is graded-simple but not simple") {
  const HAlgebra a = fx::ff_swap(0);
  CHECK(is_absolutely_simple(a, ActionScope::Grading));
  CHECK_FALSE(is_absolutely_simple(a, ActionScope::None));
  CHECK(enveloping_operator_algebra(a, false).basis.dim() == 2);
  CHECK(enveloping_operator_algebra(a, true).is_full());
}

TEST_CASE("enveloping algebra of M_n is everything") {
  const auto e = enveloping_operator_algebra(make_trivial_matrix(2), ActionScope::None);
  CHECK(e.is_full());
  CHECK(commutant(e).dim() == 1);
}

TEST_CASE("closure of a set of operators") {
  // One nilpotent generator: words N, N^2 = 0.
  const auto e = operator_closure(2, {Matrix{{0, 1}, {0, 0}}});
  CHECK(e.basis.dim() == 1);
  // N and its transpose generate all of M_2.
  CHECK(operator_closure(2, {Matrix{{0, 1}, {0, 0}}, Matrix{{0, 0}, {1, 0}}}).is_full());
}

TEST_CASE("simple over Q but not absolutely simple is flagged") {
  // Q(i) on (1, i) with trivial action.
  auto s = fx::zero_structure(2);
  s[0] = {1, 0};
  s[1] = {0, 1};
  s[2] = {0, 1};
  s[3] = {-1, 0};
  const HAlgebra qi(2, s, Vector{1, 0}, Matrix::identity(2), Matrix(2, 2), "Q(i)");
  const SimplicityReport r = simplicity_report(qi);
  CHECK_FALSE(r.absolutely_simple);
  CHECK(r.commutant_dim == 2);
  CHECK(r.may_be_simple_over_base_field);
  CHECK_FALSE(r.note.empty());
  // A genuinely non-simple algebra does not get the flag.
  CHECK_FALSE(simplicity_report(fx::ff_trivial()).may_be_simple_over_base_field);
}

TEST_CASE("radical") {
  CHECK(radical(fx::ff_trivial()).dim() == 0);
  CHECK(radical(fx::upper_triangular()) == Subspace::span({{0, 1, 0}}, 3));
  const HAlgebra ns = make_nonsemisimple(graded_matrix_algebra(2, 1));
  const Subspace j = radical(ns);
  CHECK(j.dim() == 9);
  // The radical is the phi-copy: coordinates 9..17.
  for (const auto& v : j.basis_vectors())
    for (std::size_t i = 0; i < 9; ++i) CHECK(sgn(v[i]) == 0);
  CHECK_THROWS_WITH_AS(radical(ns, FieldMode::modp({1000003})), "radical computation requires characteristic 0", Error);
  CHECK(radical(ns, FieldMode::rational()) == j);
}

TEST_CASE("ideal closures") {
  const HAlgebra t = fx::upper_triangular();
  CHECK(ideal_closure(t, Subspace::span({{0, 1, 0}}, 3), ActionScope::Full).dim() == 1);
  CHECK(ideal_closure(t, Subspace::span({{1, 0, 0}}, 3), ActionScope::None).dim() == 2);
  const HAlgebra a = fx::ff_swap(1);
  CHECK(h4_ideal_closure(a, Subspace::span({{1, 0}}, 2)).is_whole());
  for (std::size_t i = 0; i < 3; ++i) CHECK(fx::ideal_dim(t, unit_vector(3, i)) == ideal_closure(t, Subspace::span({unit_vector(3, i)}, 3), ActionScope::Full).dim());
}

TEST_CASE("decomposition of non-semisimple algebras round-trips") {
  const std::vector<HAlgebra> bases = {fx::field(), fx::ff_swap(0), graded_matrix_algebra(1, 1), graded_matrix_algebra(2, 1)};
  for (const auto& b : bases) {
    INFO(b.label());
    const HAlgebra a = make_nonsemisimple(b);
    const Decomposition dec = decompose_nonsemisimple(a);
    for (const auto& law : dec.report.laws) {
      INFO(law.name << ": " << law.detail);
      CHECK(law.passed);
    }
    CHECK(dec.j.dim() == b.dim());
    CHECK(dec.vj.dim() == b.dim());
    CHECK((dec.j + dec.vj).is_whole());
    REQUIRE(dec.has_vj_algebra);
    CHECK(graded_iso(dec.vj_algebra, b));
    // phi inverts v on vJ.
    for (const auto& x : dec.vj_basis) CHECK(a.v_action() * (dec.phi * x) == x);
  }
}

TEST_CASE("decomposition requires a nonzero radical") {
  CHECK_THROWS_AS(decompose_nonsemisimple(fx::ff_swap(1)), Error);
}

TEST_CASE("decomposition survives a change of basis") {
  const HAlgebra a = make_nonsemisimple(fx::ff_swap(0));
  Matrix g = Matrix::identity(4);
  g(0, 2) = 1;
  g(3, 1) = -1;
  g(1, 0) = 2;
  const HAlgebra b = a.change_basis(g);
  const Decomposition dec = decompose_nonsemisimple(b);
  CHECK(dec.all_pass());
  CHECK(graded_iso(dec.vj_algebra, fx::ff_swap(0)));
}
