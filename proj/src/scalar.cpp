#include "h4/scalar.hpp"

#include <cctype>

namespace h4 {

namespace {

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  return text;
}

bool is_integer_literal(std::string_view text) {
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) text.remove_prefix(1);
  if (text.empty()) return false;
  for (char ch : text) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view text) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  return Integer(std::string(text), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view body = trim(text);
  const auto slash = body.find('/');
  const std::string_view num = slash == std::string_view::npos ? body : trim(body.substr(0, slash));
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : trim(body.substr(slash + 1));
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw ValidationError("malformed rational \"" + std::string(text) + "\"");
  }
  Integer d = parse_integer(den);
  if (d == 0) throw ValidationError("zero denominator in \"" + std::string(text) + "\"");
  Rational result(parse_integer(num), d);
  result.canonicalize();
  return result;
}

std::string format_rational(const Rational& value) { return value.get_str(10); }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
    if (n % q == 0) return n == q;
  }
  for (std::uint64_t q = 17; q * q <= n; q += 2) {
    if (n % q == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p < 3 || p >= (1ULL << 32) || !is_prime(p)) {
    throw ValidationError("prime field modulus must be an odd prime below 2^32, got " + std::to_string(p));
  }
}

std::uint64_t PrimeField::pow(std::uint64_t base, std::uint64_t exp) const noexcept {
  std::uint64_t result = 1 % p_;
  base %= p_;
  while (exp > 0) {
    if (exp & 1U) result = mul(result, base);
    base = mul(base, base);
    exp >>= 1U;
  }
  return result;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  if (a % p_ == 0) throw Error("inverse of zero in Z/" + std::to_string(p_));
  return pow(a, p_ - 2);
}

std::uint64_t PrimeField::reduce(const Integer& value) const {
  Integer r = value % Integer(static_cast<unsigned long>(p_));
  if (r < 0) r += static_cast<unsigned long>(p_);
  return r.get_ui();
}

std::uint64_t PrimeField::reduce(const Rational& value) const {
  const std::uint64_t den = reduce(value.get_den());
  if (den == 0) {
    throw Error("denominator of " + format_rational(value) + " vanishes modulo " + std::to_string(p_));
  }
  return mul(reduce(value.get_num()), inv(den));
}

}  // namespace h4
