#include "h4/identities.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <sstream>
#include <thread>

#include "h4/linalg.hpp"
#include "h4/structure.hpp"

namespace h4 {

// ------------------------------------------------------------ polynomials

bool operator<(const HMonomial& a, const HMonomial& b) {
  if (a.sigma != b.sigma) return a.sigma < b.sigma;
  return a.labels < b.labels;
}

std::string to_string(const HMonomial& m) {
  std::ostringstream os;
  for (std::size_t j = 0; j < m.degree(); ++j) {
    os << (j ? " " : "") << 'x' << static_cast<int>(m.sigma[j]) + 1 << '^' << to_string(m.labels[j]);
  }
  return os.str();
}

HPolynomial HPolynomial::monomial(HMonomial m, Rational coefficient) {
  HPolynomial p(m.degree());
  p.add(m, coefficient);
  return p;
}

void HPolynomial::add(const HMonomial& m, const Rational& coefficient) {
  if (m.degree() != n_) throw Error("polynomial term has the wrong degree");
  if (sgn(coefficient) == 0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const HTerm& t, const HMonomial& key) { return t.monomial < key; });
  if (it != terms_.end() && it->monomial == m) {
    it->coefficient += coefficient;
    if (sgn(it->coefficient) == 0) terms_.erase(it);
  } else {
    terms_.insert(it, HTerm{coefficient, m});
  }
}

HPolynomial& HPolynomial::operator+=(const HPolynomial& rhs) {
  if (rhs.n_ != n_) throw Error("adding polynomials of different degrees");
  for (const auto& t : rhs.terms_) add(t.monomial, t.coefficient);
  return *this;
}

HPolynomial operator*(const Rational& s, HPolynomial p) {
  if (sgn(s) == 0) {
    p.terms_.clear();
    return p;
  }
  for (auto& t : p.terms_) t.coefficient *= s;
  return p;
}

bool operator==(const HPolynomial& a, const HPolynomial& b) {
  if (a.n_ != b.n_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].coefficient != b.terms_[i].coefficient || !(a.terms_[i].monomial == b.terms_[i].monomial))
      return false;
  }
  return true;
}

std::uint64_t monomial_count(std::size_t n) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t c = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    if (c > kMax / (4 * i)) return kMax;
    c *= 4 * i;
  }
  return c;
}

void for_each_monomial(std::size_t n, const std::function<bool(const HMonomial&)>& f) {
  if (n == 0) throw Error("monomials: degree must be at least 1");
  HMonomial m;
  m.sigma.resize(n);
  std::iota(m.sigma.begin(), m.sigma.end(), std::uint8_t{0});
  m.labels.assign(n, H4Basis::One);
  do {
    std::vector<std::size_t> digits(n, 0);
    while (true) {
      for (std::size_t j = 0; j < n; ++j) m.labels[j] = kH4Basis[digits[j]];
      if (!f(m)) return;
      std::size_t j = n;
      while (j > 0 && digits[j - 1] == 3) digits[--j] = 0;
      if (j == 0) break;
      ++digits[j - 1];
    }
  } while (std::next_permutation(m.sigma.begin(), m.sigma.end()));
}

std::vector<HMonomial> monomials(std::size_t n) {
  std::vector<HMonomial> out;
  for_each_monomial(n, [&](const HMonomial& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

Vector evaluate_at(const HPolynomial& p, const HAlgebra& a, const std::vector<Vector>& args) {
  const std::size_t n = p.degree();
  const std::size_t d = a.dim();
  if (args.size() != n) throw Error("evaluate: need one argument per variable");
  for (const auto& x : args) {
    if (x.size() != d) throw Error("evaluate: argument has the wrong dimension");
  }
  Vector out(d);
  for (const auto& t : p.terms()) {
    const HMonomial& m = t.monomial;
    Vector acc = h4_basis_operator(m.labels[0], a) * args[m.sigma[0]];
    for (std::size_t j = 1; j < n; ++j) acc = a.multiply(acc, h4_basis_operator(m.labels[j], a) * args[m.sigma[j]]);
    axpy(t.coefficient, acc, out);
  }
  return out;
}

Vector evaluate(const HPolynomial& p, const HAlgebra& a, const std::vector<std::size_t>& assignment) {
  std::vector<Vector> args;
  for (const auto i : assignment) {
    if (i >= a.dim()) throw Error("evaluate: basis index out of range");
    args.push_back(unit_vector(a.dim(), i));
  }
  return evaluate_at(p, a, args);
}

HPolynomial alternate(const HPolynomial& p, const std::vector<std::size_t>& varset) {
  const std::size_t n = p.degree();
  std::vector<std::size_t> sorted = varset;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw Error("alternate: repeated variable");
  if (!sorted.empty() && sorted.back() >= n) throw Error("alternate: variable out of range");
  HPolynomial out(n);
  std::vector<std::size_t> image = sorted;
  do {
    int sign = 1;
    for (std::size_t i = 0; i < image.size(); ++i)
      for (std::size_t j = i + 1; j < image.size(); ++j)
        if (image[i] > image[j]) sign = -sign;
    std::vector<std::uint8_t> tau(n);
    std::iota(tau.begin(), tau.end(), std::uint8_t{0});
    for (std::size_t i = 0; i < sorted.size(); ++i) tau[sorted[i]] = static_cast<std::uint8_t>(image[i]);
    for (const auto& t : p.terms()) {
      HMonomial m = t.monomial;
      for (auto& s : m.sigma) s = tau[s];
      out.add(m, sign * t.coefficient);
    }
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

// ------------------------------------------------------ codimension engine

std::vector<std::uint64_t> default_primes() { return {1000003, 1000033, 1000037}; }

namespace {

/// Per-label data for products of action images: first[h][b] = Op_h e_b and
/// right[h][b] = R_{Op_h e_b}.
struct LabelOps {
  std::size_t d = 0;
  std::array<std::vector<Vector>, 4> first;
  std::array<std::vector<Matrix>, 4> right;

  explicit LabelOps(const HAlgebra& a) : d(a.dim()) {
    for (std::size_t h = 0; h < 4; ++h) {
      const Matrix& op = h4_basis_operator(kH4Basis[h], a);
      for (std::size_t b = 0; b < d; ++b) {
        first[h].push_back(op.column(b));
        right[h].push_back(a.right_multiplication(first[h].back()));
      }
    }
  }

  /// table[beta] for beta of length j+1 from the table of length j.
  std::vector<Vector> extend(const std::vector<Vector>& table, std::size_t h) const {
    std::vector<Vector> out;
    out.reserve(table.size() * d);
    for (const auto& x : table)
      for (std::size_t b = 0; b < d; ++b) out.push_back(right[h][b] * x);
    return out;
  }

  /// W_h[beta] = prod_j Op_{h_j} e_{beta_j}, beta read base d with beta_1 most significant.
  std::vector<Vector> table(const std::vector<std::size_t>& labels) const {
    std::vector<Vector> t = first[labels[0]];
    for (std::size_t j = 1; j < labels.size(); ++j) t = extend(t, labels[j]);
    return t;
  }
};

std::uint64_t checked_power(std::uint64_t base, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base) return std::numeric_limits<std::uint64_t>::max();
    r *= base;
  }
  return r;
}

/// beta index of (alpha o sigma) for every assignment alpha.
std::vector<std::uint32_t> gather_map(const std::vector<std::uint8_t>& sigma, std::size_t d) {
  const std::size_t n = sigma.size();
  const std::size_t count = checked_power(d, n);
  std::vector<std::uint32_t> out(count);
  std::vector<std::size_t> alpha(n, 0);
  for (std::size_t idx = 0; idx < count; ++idx) {
    std::size_t beta = 0;
    for (std::size_t j = 0; j < n; ++j) beta = beta * d + alpha[sigma[j]];
    out[idx] = static_cast<std::uint32_t>(beta);
    std::size_t j = n;
    while (j > 0 && ++alpha[j - 1] == d) alpha[--j] = 0;
  }
  return out;
}

struct RationalSink {
  using Entry = Rational;
  SpanBuilder builder;
  explicit RationalSink(std::size_t ambient) : builder(ambient) {}
  Entry convert(const Rational& x) const { return x; }
  bool insert(std::vector<Entry>&& v) { return builder.insert(v); }
  std::size_t dim() const { return builder.dim(); }
};

struct ModularSink {
  using Entry = std::uint64_t;
  PrimeField field;
  ModularSpanBuilder builder;
  ModularSink(std::size_t ambient, std::uint64_t p) : field(p), builder(ambient, field) {}
  Entry convert(const Rational& x) const { return field.reduce(x); }
  bool insert(std::vector<Entry>&& v) { return builder.insert(std::move(v)); }
  std::size_t dim() const { return builder.dim(); }
};

struct RunStats {
  std::uint64_t value = 0;
  std::uint64_t processed = 0;
  std::uint64_t inserted = 0;
  bool complete = true;
  std::string stop_reason;
};

template <class Sink>
RunStats run_codimension(const HAlgebra& a, std::size_t n, Sink sink, Sink label_sink, const CodimOptions& options) {
  using Entry = typename Sink::Entry;
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  const std::size_t d = a.dim();
  const std::size_t rows = checked_power(d, n);
  const std::size_t ambient = rows * d;
  const std::uint64_t per_sigma = checked_power(4, n);
  const std::uint64_t cap = std::min<std::uint64_t>(monomial_count(n), ambient);
  const LabelOps ops(a);
  RunStats stats;

  // Label tuples whose tables are independent of all earlier ones (in lex
  // order). A dependency W_h = sum c W_h' persists under every sigma, so only
  // these tuples can raise the rank.
  struct Kept {
    std::uint64_t lex_index;
    std::vector<Entry> table;  // rows beta, then output coordinate
  };
  std::vector<Kept> kept;
  {
    std::vector<std::vector<Vector>> stack(n);
    std::vector<std::size_t> labels(n, 0);
    std::uint64_t lex = 0;
    // Depth-first over label prefixes so that shared prefixes are computed once.
    std::function<void(std::size_t)> descend = [&](std::size_t depth) {
      for (std::size_t h = 0; h < 4 && label_sink.dim() < ambient; ++h) {
        labels[depth] = h;
        stack[depth] = depth == 0 ? ops.first[h] : ops.extend(stack[depth - 1], h);
        if (depth + 1 < n) {
          descend(depth + 1);
          continue;
        }
        std::vector<Entry> flat;
        flat.reserve(ambient);
        for (const auto& x : stack[depth])
          for (const auto& e : x) flat.push_back(label_sink.convert(e));
        std::vector<Entry> copy = flat;
        if (label_sink.insert(std::move(copy))) kept.push_back({lex, std::move(flat)});
        ++lex;
      }
    };
    descend(0);
  }

  std::vector<std::uint8_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), std::uint8_t{0});
  const std::size_t threads = std::max<std::size_t>(1, options.threads);
  const std::size_t batch = 8 * threads;
  bool more = true;
  std::uint64_t sigma_index = 0;
  while (more) {
    if (options.max_monomials != 0 && stats.processed >= options.max_monomials) {
      stats.complete = false;
      stats.stop_reason = "max monomials";
      break;
    }
    if (options.max_seconds > 0 &&
        std::chrono::duration<double>(Clock::now() - start).count() > options.max_seconds) {
      stats.complete = false;
      stats.stop_reason = "max seconds";
      break;
    }
    std::vector<std::vector<std::uint8_t>> sigmas;
    while (more && sigmas.size() < batch) {
      sigmas.push_back(sigma);
      more = std::next_permutation(sigma.begin(), sigma.end());
    }
    // Workers fill disjoint slots; the reducer below inserts in canonical order.
    std::vector<std::vector<std::vector<Entry>>> vectors(sigmas.size());
    auto work = [&](std::size_t begin, std::size_t end) {
      for (std::size_t s = begin; s < end; ++s) {
        const auto map = gather_map(sigmas[s], d);
        auto& out = vectors[s];
        out.reserve(kept.size());
        for (const auto& k : kept) {
          std::vector<Entry> e(ambient);
          for (std::size_t alpha = 0; alpha < rows; ++alpha)
            std::copy_n(k.table.begin() + static_cast<std::ptrdiff_t>(map[alpha] * d), d,
                        e.begin() + static_cast<std::ptrdiff_t>(alpha * d));
          out.push_back(std::move(e));
        }
      }
    };
    if (threads == 1 || sigmas.size() == 1) {
      work(0, sigmas.size());
    } else {
      std::vector<std::thread> pool;
      const std::size_t chunk = (sigmas.size() + threads - 1) / threads;
      for (std::size_t t = 0; t < threads; ++t) {
        const std::size_t begin = t * chunk;
        const std::size_t end = std::min(sigmas.size(), begin + chunk);
        if (begin < end) pool.emplace_back(work, begin, end);
      }
      for (auto& th : pool) th.join();
    }
    for (std::size_t s = 0; s < sigmas.size(); ++s, ++sigma_index) {
      for (std::size_t u = 0; u < kept.size(); ++u) {
        // The monomial cap is exact, so capped runs do not depend on the batch size.
        if (options.max_monomials != 0 && sigma_index * per_sigma + kept[u].lex_index >= options.max_monomials) {
          stats.processed = options.max_monomials;
          stats.value = sink.dim();
          stats.complete = false;
          stats.stop_reason = "max monomials";
          return stats;
        }
        ++stats.inserted;
        sink.insert(std::move(vectors[s][u]));
        if (sink.dim() >= cap) {
          stats.processed = sigma_index * per_sigma + kept[u].lex_index + 1;
          stats.value = sink.dim();
          stats.stop_reason = "rank cap";
          return stats;
        }
      }
      stats.processed = (sigma_index + 1) * per_sigma;
    }
  }
  stats.value = sink.dim();
  if (stats.complete) stats.stop_reason = "exhausted";
  return stats;
}

bool resolve_modular(const HAlgebra& a, std::size_t n, const CodimOptions& options) {
  switch (options.mode) {
    case ModeChoice::Rational:
      return false;
    case ModeChoice::Modular:
      return true;
    case ModeChoice::Auto:
      break;
  }
  return checked_power(a.dim(), n + 1) > 4096;
}

}  // namespace

CodimResult codimension(const HAlgebra& a, std::size_t n, const CodimOptions& options) {
  if (n == 0) throw Error("codimension: degree must be at least 1");
  if (a.dim() == 0) throw Error("codimension: zero algebra");
  const std::uint64_t ambient = checked_power(a.dim(), n + 1);
  if (ambient > (std::uint64_t{1} << 24)) throw ResourceLimitError("codimension: evaluation space d^(n+1) is too large");
  CodimResult r;
  r.n = n;
  r.modular = resolve_modular(a, n, options);
  if (!r.modular) {
    const RunStats s = run_codimension(a, n, RationalSink(ambient), RationalSink(ambient), options);
    r.value = s.value;
    r.processed = s.processed;
    r.inserted = s.inserted;
    r.complete = s.complete;
    r.stop_reason = s.stop_reason;
    r.certified = s.complete;
    r.lower_bound = !s.complete;
    return r;
  }
  if (options.primes.empty()) throw Error("codimension: modular mode needs at least one prime");
  r.primes = options.primes;
  for (const auto p : options.primes) {
    const RunStats s = run_codimension(a, n, ModularSink(ambient, p), ModularSink(ambient, p), options);
    r.per_prime.push_back(s.value);
    r.value = std::max(r.value, s.value);
    r.processed = std::max(r.processed, s.processed);
    r.inserted += s.inserted;
    if (!s.complete) {
      r.complete = false;
      r.stop_reason = s.stop_reason;
    } else if (r.stop_reason.empty() || r.complete) {
      r.stop_reason = s.stop_reason;
    }
  }
  r.primes_agree = std::adjacent_find(r.per_prime.begin(), r.per_prime.end(), std::not_equal_to<>()) ==
                   r.per_prime.end();
  r.lower_bound = true;
  r.certified = r.complete && r.primes_agree;
  return r;
}

BoundReport check_upper_bound(const HAlgebra& a, std::size_t n_max, const CodimOptions& options) {
  BoundReport report;
  report.input_h4_simple = is_absolutely_h4_simple(a);
  if (!report.input_h4_simple) report.warning = "input is not H4-simple; the bound is only asserted for H4-simple algebras";
  for (std::size_t n = 1; n <= n_max; ++n) {
    const CodimResult c = codimension(a, n, options);
    BoundRow row;
    row.n = n;
    row.codim = c.value;
    mpz_ui_pow_ui(row.bound.get_mpz_t(), a.dim(), n + 1);
    row.holds = Integer(std::to_string(c.value)) <= row.bound;
    row.certified = c.certified;
    report.all_hold = report.all_hold && row.holds;
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::vector<TrendRow> exponent_trend(const HAlgebra& a, std::size_t n_max, const CodimOptions& options) {
  std::vector<TrendRow> rows;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const CodimResult c = codimension(a, n, options);
    TrendRow row;
    row.n = n;
    row.codim = c.value;
    row.complete = c.complete;
    row.root = std::pow(static_cast<double>(c.value), 1.0 / static_cast<double>(n));
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", row.root);
    row.root_text = buf;
    rows.push_back(std::move(row));
  }
  return rows;
}

// ------------------------------------------------------------- alternation

bool exists_alternating_nonidentity(const HAlgebra& a, std::size_t n, const std::vector<std::vector<std::size_t>>& sets,
                                    const AlternationOptions& options) {
  if (n == 0) throw Error("alternation: degree must be at least 1");
  const std::size_t d = a.dim();
  std::vector<int> owner(n, -1);
  for (std::size_t s = 0; s < sets.size(); ++s) {
    for (const auto v : sets[s]) {
      if (v >= n) throw Error("alternation: variable out of range");
      if (owner[v] != -1) throw Error("alternation: sets must be disjoint");
      owner[v] = static_cast<int>(s);
    }
  }
  // Two equal basis elements in one alternating set cancel.
  for (const auto& set : sets) {
    if (set.size() > d) return false;
  }
  std::vector<std::size_t> labels_allowed;
  if (options.allowed_labels.empty()) {
    labels_allowed = {0, 1, 2, 3};
  } else {
    for (const auto h : options.allowed_labels) labels_allowed.push_back(static_cast<std::size_t>(h));
    std::sort(labels_allowed.begin(), labels_allowed.end());
    labels_allowed.erase(std::unique(labels_allowed.begin(), labels_allowed.end()), labels_allowed.end());
  }

  // Signed variable renamings: the product of the symmetric groups of the sets.
  struct Renaming {
    std::vector<std::uint8_t> tau;
    int sign;
  };
  std::vector<Renaming> renamings = {{std::vector<std::uint8_t>(n), 1}};
  std::iota(renamings[0].tau.begin(), renamings[0].tau.end(), std::uint8_t{0});
  for (const auto& set : sets) {
    std::vector<std::size_t> sorted = set;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Renaming> next;
    std::vector<std::size_t> image = sorted;
    do {
      int sign = 1;
      for (std::size_t i = 0; i < image.size(); ++i)
        for (std::size_t j = i + 1; j < image.size(); ++j)
          if (image[i] > image[j]) sign = -sign;
      for (const auto& r : renamings) {
        Renaming x = r;
        for (std::size_t i = 0; i < sorted.size(); ++i) x.tau[sorted[i]] = static_cast<std::uint8_t>(image[i]);
        x.sign *= sign;
        next.push_back(std::move(x));
      }
    } while (std::next_permutation(image.begin(), image.end()));
    renamings = std::move(next);
  }

  // Representatives: each set's variables occur in increasing order along the word.
  std::vector<std::vector<std::uint8_t>> reps;
  {
    std::vector<std::uint8_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), std::uint8_t{0});
    do {
      bool ok = true;
      std::vector<int> last(sets.size(), -1);
      for (std::size_t j = 0; j < n && ok; ++j) {
        const int s = owner[sigma[j]];
        if (s < 0) continue;
        if (static_cast<int>(sigma[j]) < last[s]) ok = false;
        last[s] = sigma[j];
      }
      if (ok) reps.push_back(sigma);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }

  // Assignments injective on every set.
  std::vector<std::vector<std::size_t>> assignments;
  {
    const std::size_t count = checked_power(d, n);
    std::vector<std::size_t> alpha(n, 0);
    for (std::size_t idx = 0; idx < count; ++idx) {
      bool ok = true;
      for (const auto& set : sets)
        for (std::size_t i = 0; i < set.size() && ok; ++i)
          for (std::size_t j = i + 1; j < set.size() && ok; ++j)
            if (alpha[set[i]] == alpha[set[j]]) ok = false;
      if (ok) assignments.push_back(alpha);
      std::size_t j = n;
      while (j > 0 && ++alpha[j - 1] == d) alpha[--j] = 0;
    }
  }

  const double work = std::pow(static_cast<double>(labels_allowed.size()), static_cast<double>(n)) *
                      static_cast<double>(reps.size()) * static_cast<double>(assignments.size()) *
                      static_cast<double>(renamings.size());
  if (work > static_cast<double>(options.max_work)) throw ResourceLimitError("alternation: combinatorial blow-up guard exceeded");

  const LabelOps ops(a);
  std::vector<std::size_t> digits(n, 0);
  while (true) {
    std::vector<std::size_t> labels(n);
    for (std::size_t j = 0; j < n; ++j) labels[j] = labels_allowed[digits[j]];
    const std::vector<Vector> table = ops.table(labels);
    for (const auto& sigma : reps) {
      for (const auto& alpha : assignments) {
        Vector acc(d);
        for (const auto& r : renamings) {
          std::size_t beta = 0;
          for (std::size_t j = 0; j < n; ++j) beta = beta * d + alpha[r.tau[sigma[j]]];
          if (r.sign > 0) {
            for (std::size_t k = 0; k < d; ++k) acc[k] += table[beta][k];
          } else {
            for (std::size_t k = 0; k < d; ++k) acc[k] -= table[beta][k];
          }
        }
        if (!h4::is_zero(acc)) return true;
      }
    }
    std::size_t j = n;
    while (j > 0 && digits[j - 1] + 1 == labels_allowed.size()) digits[--j] = 0;
    if (j == 0) break;
    ++digits[j - 1];
  }
  return false;
}

}  // namespace h4
