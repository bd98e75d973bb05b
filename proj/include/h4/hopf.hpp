#ifndef H4_HOPF_HPP
#define H4_HOPF_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "h4/matrix.hpp"

namespace h4 {

class HAlgebra;

/// Basis of Sweedler's algebra, in the fixed global order (1, c, v, cv).
enum class H4Basis : std::uint8_t { One = 0, C = 1, V = 2, CV = 3 };

inline constexpr std::array<H4Basis, 4> kH4Basis = {H4Basis::One, H4Basis::C, H4Basis::V, H4Basis::CV};

std::string_view to_string(H4Basis b);

/// Element of H4 as a coefficient 4-vector over (1, c, v, cv).
class H4Element {
 public:
  H4Element() = default;
  explicit H4Element(std::array<Rational, 4> coefficients) : coeffs_(std::move(coefficients)) {}
  static H4Element basis(H4Basis b);
  static H4Element one() { return basis(H4Basis::One); }

  const std::array<Rational, 4>& coefficients() const noexcept { return coeffs_; }
  const Rational& operator[](H4Basis b) const { return coeffs_[static_cast<std::size_t>(b)]; }
  Rational& operator[](H4Basis b) { return coeffs_[static_cast<std::size_t>(b)]; }

  /// Counit: eps(1) = eps(c) = 1, eps(v) = eps(cv) = 0.
  Rational counit() const { return coeffs_[0] + coeffs_[1]; }

  H4Element& operator+=(const H4Element& rhs);
  H4Element& operator-=(const H4Element& rhs);
  friend H4Element operator+(H4Element a, const H4Element& b) { return a += b; }
  friend H4Element operator-(H4Element a, const H4Element& b) { return a -= b; }
  friend H4Element operator*(const Rational& s, H4Element a);
  friend bool operator==(const H4Element& a, const H4Element& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::array<Rational, 4> coeffs_{};
};

H4Element h4_multiply(const H4Element& a, const H4Element& b);
inline H4Element operator*(const H4Element& a, const H4Element& b) { return h4_multiply(a, b); }

/// Element of H4 (x) H4, normalized to coefficients on basis (x) basis.
class TensorPair {
 public:
  struct Term {
    H4Basis left;
    H4Basis right;
    Rational coefficient;
  };

  TensorPair() = default;
  static TensorPair pure(const H4Element& left, const H4Element& right);

  const Rational& coefficient(H4Basis left, H4Basis right) const {
    return coeffs_[static_cast<std::size_t>(left) * 4 + static_cast<std::size_t>(right)];
  }
  Rational& coefficient(H4Basis left, H4Basis right) {
    return coeffs_[static_cast<std::size_t>(left) * 4 + static_cast<std::size_t>(right)];
  }
  /// Nonzero summands in (left, right) basis order.
  std::vector<Term> terms() const;

  TensorPair& operator+=(const TensorPair& rhs);
  /// Componentwise product (a (x) b)(c (x) d) = ac (x) bd.
  friend TensorPair operator*(const TensorPair& x, const TensorPair& y);
  friend bool operator==(const TensorPair& a, const TensorPair& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::array<Rational, 16> coeffs_{};
};

/// Coproduct: D(1) = 1(x)1, D(c) = c(x)c, D(v) = c(x)v + v(x)1, D(cv) = D(c)D(v).
TensorPair h4_comultiply(const H4Element& a);

/// Action of h on the algebra: 1 -> I, c -> C, v -> V, cv -> C V, extended linearly.
Matrix h4_as_operator(const H4Element& h, const HAlgebra& algebra);
/// Operator of a basis element of H4.
const Matrix& h4_basis_operator(H4Basis b, const HAlgebra& algebra);

std::ostream& operator<<(std::ostream& os, const H4Element& h);

}  // namespace h4

#endif  // H4_HOPF_HPP
