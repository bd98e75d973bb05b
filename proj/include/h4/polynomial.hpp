#ifndef H4_POLYNOMIAL_HPP
#define H4_POLYNOMIAL_HPP

#include <iosfwd>
#include <utility>
#include <vector>

#include "h4/scalar.hpp"

namespace h4 {

/// Univariate polynomial over Q, coefficients stored from degree 0 upwards
/// with no trailing zeros (the zero polynomial has no coefficients).
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coefficients);
  static UPoly constant(const Rational& c);
  static UPoly x();

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& leading() const;
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  Rational coefficient(std::size_t i) const;

  UPoly monic() const;

  UPoly& operator+=(const UPoly& rhs);
  UPoly& operator-=(const UPoly& rhs);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Quotient and remainder; `divisor` must be nonzero.
  friend std::pair<UPoly, UPoly> divmod(const UPoly& dividend, const UPoly& divisor);

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const UPoly& p);

}  // namespace h4

#endif  // H4_POLYNOMIAL_HPP
