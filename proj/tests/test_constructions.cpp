#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "h4/constructions.hpp"
#include "h4/hopf.hpp"

using namespace h4;

TEST_CASE("the sweep is large enough and every instance satisfies the laws") {
  const auto sweep = fx::descriptor_sweep();
  CHECK(sweep.size() >= 40);
  for (const auto& d : sweep) {
    const HAlgebra a = realize(d);
    INFO(a.label());
    CHECK(verify_module_algebra(a).all_pass());
  }
}

TEST_CASE("sandwich operator realizes a -> x a y on matrix units") {
  const Matrix x{{1, 2}, {0, -1}}, y{{3, 0}, {1, 1}};
  const Matrix op = sandwich_operator(x, y);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      Matrix e(2, 2);
      e(i, j) = 1;
      CHECK(op * e.entries() == (x * e * y).entries());
    }
}

TEST_CASE("matrix units multiply as e_ij e_jl = e_il") {
  const HAlgebra m3 = make_trivial_matrix(3);
  Matrix a(3, 3), b(3, 3);
  a(0, 1) = 2;
  a(2, 2) = -1;
  b(1, 0) = 1;
  b(2, 1) = 3;
  CHECK(m3.multiply(a.entries(), b.entries()) == (a * b).entries());
}

TEST_CASE("trivial M_2 has C = I and V = 0") {
  const HAlgebra m2 = make_trivial_matrix(2);
  CHECK(m2.dim() == 4);
  CHECK(m2.c_action() == Matrix::identity(4));
  CHECK(m2.v_action().is_zero());
  CHECK(*m2.unit() == Vector{1, 0, 0, 1});
}

TEST_CASE("matrix case action is v a = (c a) Q - Q a") {
  const MatrixCaseParams p{2, 1, Matrix{{1}, {0}}, Matrix{{0, 0}}, 0};
  const HAlgebra a = make_matrix_case(p);
  const Matrix g = Matrix::diagonal(Vector{1, 1, -1});
  Matrix q(3, 3);
  q(0, 2) = 1;  // Q = [[0, Q1], [Q2, 0]]
  Matrix x{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
  const Matrix cx = g * x * g;
  CHECK(a.c_action() * x.entries() == cx.entries());
  CHECK(a.v_action() * x.entries() == (cx * q - q * x).entries());
}

TEST_CASE("double case action is v (a, b) = (P a - b P, a P - P b)") {
  const Matrix p{{0, 1}, {0, 0}};
  const HAlgebra a = make_double({2, p, 0});
  const Matrix x{{1, 2}, {3, 4}}, y{{-1, 0}, {5, 7}};
  Vector xy = x.entries();
  xy.insert(xy.end(), y.entries().begin(), y.entries().end());
  Vector expected = (p * x - y * p).entries();
  const Vector second = (x * p - p * y).entries();
  expected.insert(expected.end(), second.begin(), second.end());
  CHECK(a.v_action() * xy == expected);
  Vector swapped = y.entries();
  swapped.insert(swapped.end(), x.entries().begin(), x.entries().end());
  CHECK(a.c_action() * xy == swapped);
}

TEST_CASE("Double k=1 P=(1) is the two-dimensional swap algebra") {
  const HAlgebra a = fx::ff_swap(1);
  CHECK(a.dim() == 2);
  CHECK(a.c_action() == Matrix{{0, 1}, {1, 0}});
  CHECK(a.v_action() == Matrix{{1, -1}, {1, -1}});
  CHECK(*a.unit() == Vector{1, 1});
}

TEST_CASE("invalid parameters name the failed identity") {
  try {
    make_matrix_case({1, 1, Matrix{{1}}, Matrix{{1}}, 2});
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()) == "Q1*Q2 != alpha*E_k");
  }
  // Q1 Q2 = e12 e11 = 0 holds but Q2 Q1 = e11 e12 = e12 does not.
  CHECK_THROWS_WITH_AS(make_matrix_case({2, 2, Matrix{{0, 1}, {0, 0}}, Matrix{{1, 0}, {0, 0}}, 0}),
                       "Q2*Q1 != alpha*E_m", ValidationError);
  CHECK_THROWS_WITH_AS(make_double({1, Matrix{{1}}, 2}), "P^2 != alpha*E_k", ValidationError);
  CHECK_THROWS_AS(infer_double_alpha(Matrix{{1, 0}, {0, 0}}), ValidationError);
}

TEST_CASE("k < m inputs are transposed with a note") {
  std::string note;
  const MatrixCaseParams p = normalize_matrix_case({1, 2, Matrix{{0, 0}}, Matrix{{1}, {0}}, 0}, &note);
  CHECK(p.k == 2);
  CHECK(p.m == 1);
  CHECK(p.q1 == Matrix{{1}, {0}});
  CHECK_FALSE(note.empty());
  // The transposed description realizes an algebra satisfying the laws.
  CHECK(verify_module_algebra(make_matrix_case({1, 2, Matrix{{0, 0}}, Matrix{{1}, {0}}, 0})).all_pass());
}

TEST_CASE("non-semisimple construction") {
  const HAlgebra b = graded_matrix_algebra(1, 1);
  const HAlgebra a = make_nonsemisimple(b);
  CHECK(a.dim() == 8);
  CHECK(verify_module_algebra(a).all_pass());
  // phi(e_i) phi(e_j) = 0.
  for (std::size_t i = 4; i < 8; ++i)
    for (std::size_t j = 4; j < 8; ++j) CHECK(is_zero(a.structure(i, j)));
  // v phi(x) = x.
  for (std::size_t i = 0; i < 4; ++i) CHECK(a.v_action() * unit_vector(8, 4 + i) == unit_vector(8, i));
  CHECK_THROWS_AS(make_nonsemisimple(fx::ff_swap(1)), ValidationError);  // v != 0
  CHECK_THROWS_AS(make_nonsemisimple(fx::ff_trivial()), ValidationError);  // not Z2-simple
}

TEST_CASE("parameter presets") {
  const DoubleCaseParams diag = diagonal_sign_preset(2, 1, 3);
  CHECK(diag.p == Matrix::diagonal(Vector{3, 3, -3}));
  CHECK(diag.alpha == 9);
  CHECK(verify_module_algebra(make_double(diag)).all_pass());
  const DoubleCaseParams nil = nilpotent_cells_preset(5, 2);
  CHECK((nil.p * nil.p).is_zero());
  CHECK(rank(nil.p) == 2);
  CHECK(verify_module_algebra(make_double(nil)).all_pass());
  CHECK_THROWS_AS(nilpotent_cells_preset(3, 2), ValidationError);
}

TEST_CASE("descriptions are stable labels") {
  CHECK(describe(CanonicalDescriptor::trivial_matrix(2)) == "trivial M_2");
  CHECK(describe(fx::double_desc(Matrix{{1}})) == "double M_1 P=[[1]] alpha=1");
  CHECK(describe(CanonicalDescriptor::nonsemisimple(CanonicalDescriptor::trivial_matrix(1))) ==
        "nonsemisimple(trivial M_1)");
}
