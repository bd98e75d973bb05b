#include "h4/linalg.hpp"

namespace h4 {

namespace {

void strip(std::vector<Integer>& row) {
  Integer g = 0;
  for (const auto& x : row) {
    if (sgn(x) != 0) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      if (g == 1) return;
    }
  }
  if (g > 1) {
    for (auto& x : row) {
      if (sgn(x) != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
  }
}

}  // namespace

SpanBuilder::SpanBuilder(std::size_t ambient) : ambient_(ambient) {}

bool SpanBuilder::insert(std::span<const Rational> v) {
  if (v.size() != ambient_) throw Error("SpanBuilder: vector has the wrong dimension");
  Integer common = 1;
  for (const auto& x : v) {
    if (sgn(x) != 0 && x.get_den() != 1) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), x.get_den_mpz_t());
  }
  std::vector<Integer> row(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) != 0) row[i] = v[i].get_num() * (common / v[i].get_den());
  }
  return insert_integral(std::move(row));
}

bool SpanBuilder::insert_integral(std::vector<Integer> v) {
  if (v.size() != ambient_) throw Error("SpanBuilder: vector has the wrong dimension");
  if (rows_.size() == ambient_) return false;
  // Rows are reduced in insertion order: each stored row is zero at the
  // pivots of all rows stored before it, so one pass clears every pivot.
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t col = pivots_[r];
    if (sgn(v[col]) == 0) continue;
    const auto& pivot_row = rows_[r];
    Integer g;
    mpz_gcd(g.get_mpz_t(), pivot_row[col].get_mpz_t(), v[col].get_mpz_t());
    const Integer a = pivot_row[col] / g;
    const Integer b = v[col] / g;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (a != 1 && sgn(v[j]) != 0) v[j] *= a;
      if (sgn(pivot_row[j]) != 0) v[j] -= b * pivot_row[j];
    }
    if (mpz_sizeinbase(v[col].get_mpz_t(), 2) > 256) strip(v);
  }
  std::size_t lead = v.size();
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (sgn(v[j]) != 0) {
      lead = j;
      break;
    }
  }
  if (lead == v.size()) return false;
  strip(v);
  if (sgn(v[lead]) < 0) {
    for (auto& x : v) x = -x;
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(lead);
  return true;
}

Subspace SpanBuilder::subspace() const {
  Matrix m(rows_.size(), ambient_);
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (std::size_t c = 0; c < ambient_; ++c) m(r, c) = Rational(rows_[r][c]);
  return Subspace::row_space(m);
}

ModularSpanBuilder::ModularSpanBuilder(std::size_t ambient, PrimeField field) : ambient_(ambient), field_(field) {}

bool ModularSpanBuilder::insert(std::span<const std::uint64_t> v) {
  return insert(std::vector<std::uint64_t>(v.begin(), v.end()));
}

bool ModularSpanBuilder::insert(std::vector<std::uint64_t>&& v) {
  if (v.size() != ambient_) throw Error("ModularSpanBuilder: vector has the wrong dimension");
  if (rows_.size() == ambient_) return false;
  const std::uint64_t p = field_.prime();
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t col = pivots_[r];
    const std::uint64_t f = v[col];
    if (f == 0) continue;
    const std::uint64_t negf = p - f;
    const auto& row = rows_[r];
    for (std::size_t j = col; j < v.size(); ++j) {
      if (row[j] != 0) v[j] = (v[j] + negf * row[j]) % p;
    }
  }
  std::size_t lead = v.size();
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j] != 0) {
      lead = j;
      break;
    }
  }
  if (lead == v.size()) return false;
  const std::uint64_t inv = field_.inv(v[lead]);
  for (std::size_t j = lead; j < v.size(); ++j) v[j] = field_.mul(v[j], inv);
  rows_.push_back(std::move(v));
  pivots_.push_back(lead);
  return true;
}

}  // namespace h4
