#include "h4/polynomial.hpp"

#include <ostream>

namespace h4 {

UPoly::UPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

UPoly UPoly::constant(const Rational& c) { return UPoly({c}); }

UPoly UPoly::x() { return UPoly({Rational(0), Rational(1)}); }

void UPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

const Rational& UPoly::leading() const {
  if (coeffs_.empty()) throw Error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational UPoly::coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  const Rational inv = 1 / leading();
  std::vector<Rational> c(coeffs_);
  for (auto& x : c) x *= inv;
  return UPoly(std::move(c));
}

UPoly& UPoly::operator+=(const UPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UPoly(std::move(c));
}

std::pair<UPoly, UPoly> divmod(const UPoly& dividend, const UPoly& divisor) {
  if (divisor.is_zero()) throw Error("polynomial division by zero");
  std::vector<Rational> rem = dividend.coeffs_;
  const int dd = divisor.degree();
  if (dividend.degree() < dd) return {UPoly(), dividend};
  std::vector<Rational> quot(rem.size() - static_cast<std::size_t>(dd));
  const Rational lead_inv = 1 / divisor.leading();
  for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
    const Rational q = rem[static_cast<std::size_t>(i)] * lead_inv;
    if (sgn(q) == 0) continue;
    quot[static_cast<std::size_t>(i - dd)] = q;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i - dd + j)] -= q * divisor.coeffs_[static_cast<std::size_t>(j)];
  }
  return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

std::ostream& operator<<(std::ostream& os, const UPoly& p) {
  if (p.is_zero()) return os << '0';
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Rational& c = p.coefficients()[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    if (!first) os << (sgn(c) > 0 ? " + " : " - ");
    else if (sgn(c) < 0) os << '-';
    const Rational a = abs(c);
    if (i == 0 || a != 1) os << a;
    if (i >= 1) os << 'x';
    if (i >= 2) os << '^' << i;
    first = false;
  }
  return os;
}

}  // namespace h4
