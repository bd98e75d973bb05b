#ifndef H4_SCALAR_HPP
#define H4_SCALAR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace h4 {

/// Exact rational scalar. Every algebra in the library lives over Q.
using Rational = mpq_class;
using Integer = mpz_class;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input parameters violate a documented identity (e.g. Q1*Q2 != alpha*E_k).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A computation would exceed a configured work or memory guard.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

/// A decision procedure contradicted itself. Never expected; signals a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// Parses "p/q", "-p/q" or an integer literal. Throws ValidationError on
/// malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "3", "-3/7".
std::string format_rational(const Rational& value);

inline constexpr std::uint64_t kDefaultPrime = 1000003;

bool is_prime(std::uint64_t n);

/// Arithmetic backend for rank computations: exact rationals, or reduction
/// modulo each listed prime.
struct FieldMode {
  bool modular = false;
  std::vector<std::uint64_t> primes;

  static FieldMode rational() { return {}; }
  static FieldMode modp(std::vector<std::uint64_t> primes) { return {true, std::move(primes)}; }
};

/// Arithmetic in Z/pZ for an odd prime p < 2^32, so that products of two
/// residues fit in a machine word.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p = kDefaultPrime);

  std::uint64_t prime() const noexcept { return p_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
    const std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  std::uint64_t neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept { return (a * b) % p_; }
  std::uint64_t pow(std::uint64_t base, std::uint64_t exp) const noexcept;
  /// Multiplicative inverse; `a` must be nonzero.
  std::uint64_t inv(std::uint64_t a) const;

  std::uint64_t reduce(const Integer& value) const;
  /// Throws Error when p divides the denominator.
  std::uint64_t reduce(const Rational& value) const;

 private:
  std::uint64_t p_;
};

}  // namespace h4

#endif  // H4_SCALAR_HPP
