#include "h4/hopf.hpp"

#include <ostream>

#include "h4/algebra.hpp"

namespace h4 {

namespace {

struct SignedBasis {
  int sign;  // 0 encodes a zero product
  H4Basis element;
};

// Products of basis elements in normal form c^i v^j, from c^2 = 1, v^2 = 0, vc = -cv.
constexpr SignedBasis kTable[4][4] = {
    // 1 * x
    {{1, H4Basis::One}, {1, H4Basis::C}, {1, H4Basis::V}, {1, H4Basis::CV}},
    // c * x
    {{1, H4Basis::C}, {1, H4Basis::One}, {1, H4Basis::CV}, {1, H4Basis::V}},
    // v * x
    {{1, H4Basis::V}, {-1, H4Basis::CV}, {0, H4Basis::One}, {0, H4Basis::One}},
    // cv * x
    {{1, H4Basis::CV}, {-1, H4Basis::V}, {0, H4Basis::One}, {0, H4Basis::One}},
};

}  // namespace

std::string_view to_string(H4Basis b) {
  switch (b) {
    case H4Basis::One:
      return "1";
    case H4Basis::C:
      return "c";
    case H4Basis::V:
      return "v";
    case H4Basis::CV:
      return "cv";
  }
  return "?";
}

H4Element H4Element::basis(H4Basis b) {
  H4Element e;
  e[b] = 1;
  return e;
}

H4Element& H4Element::operator+=(const H4Element& rhs) {
  for (std::size_t i = 0; i < 4; ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

H4Element& H4Element::operator-=(const H4Element& rhs) {
  for (std::size_t i = 0; i < 4; ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

H4Element operator*(const Rational& s, H4Element a) {
  for (auto& c : a.coeffs_) c *= s;
  return a;
}

H4Element h4_multiply(const H4Element& a, const H4Element& b) {
  H4Element out;
  for (std::size_t i = 0; i < 4; ++i) {
    if (sgn(a.coefficients()[i]) == 0) continue;
    for (std::size_t j = 0; j < 4; ++j) {
      if (sgn(b.coefficients()[j]) == 0) continue;
      const SignedBasis p = kTable[i][j];
      if (p.sign == 0) continue;
      out[p.element] += p.sign * a.coefficients()[i] * b.coefficients()[j];
    }
  }
  return out;
}

TensorPair TensorPair::pure(const H4Element& left, const H4Element& right) {
  TensorPair t;
  for (auto l : kH4Basis)
    for (auto r : kH4Basis) t.coefficient(l, r) = left[l] * right[r];
  return t;
}

std::vector<TensorPair::Term> TensorPair::terms() const {
  std::vector<Term> out;
  for (auto l : kH4Basis)
    for (auto r : kH4Basis)
      if (sgn(coefficient(l, r)) != 0) out.push_back({l, r, coefficient(l, r)});
  return out;
}

TensorPair& TensorPair::operator+=(const TensorPair& rhs) {
  for (std::size_t i = 0; i < 16; ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

TensorPair operator*(const TensorPair& x, const TensorPair& y) {
  TensorPair out;
  for (const auto& s : x.terms()) {
    for (const auto& t : y.terms()) {
      const H4Element left = h4_multiply(H4Element::basis(s.left), H4Element::basis(t.left));
      const H4Element right = h4_multiply(H4Element::basis(s.right), H4Element::basis(t.right));
      TensorPair p = TensorPair::pure(left, right);
      const Rational c = s.coefficient * t.coefficient;
      for (auto& v : p.coeffs_) v *= c;
      out += p;
    }
  }
  return out;
}

TensorPair h4_comultiply(const H4Element& a) {
  const H4Element one = H4Element::one();
  const H4Element c = H4Element::basis(H4Basis::C);
  const H4Element v = H4Element::basis(H4Basis::V);
  const TensorPair delta_c = TensorPair::pure(c, c);
  TensorPair delta_v = TensorPair::pure(c, v);
  delta_v += TensorPair::pure(v, one);
  const TensorPair images[4] = {TensorPair::pure(one, one), delta_c, delta_v, delta_c * delta_v};

  TensorPair out;
  for (std::size_t i = 0; i < 4; ++i) {
    const Rational& s = a.coefficients()[i];
    if (sgn(s) == 0) continue;
    for (const auto& t : images[i].terms()) out.coefficient(t.left, t.right) += s * t.coefficient;
  }
  return out;
}

const Matrix& h4_basis_operator(H4Basis b, const HAlgebra& algebra) { return algebra.basis_operator(b); }

Matrix h4_as_operator(const H4Element& h, const HAlgebra& algebra) {
  Matrix out(algebra.dim(), algebra.dim());
  for (auto b : kH4Basis) {
    if (sgn(h[b]) != 0) out += h[b] * algebra.basis_operator(b);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const H4Element& h) {
  bool first = true;
  for (auto b : kH4Basis) {
    if (sgn(h[b]) == 0) continue;
    if (!first) os << " + ";
    os << h[b];
    if (b != H4Basis::One) os << '*' << to_string(b);
    first = false;
  }
  if (first) os << '0';
  return os;
}

}  // namespace h4
