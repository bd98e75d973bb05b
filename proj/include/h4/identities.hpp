#ifndef H4_IDENTITIES_HPP
#define H4_IDENTITIES_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "h4/algebra.hpp"
#include "h4/hopf.hpp"

namespace h4 {

/// x^{h_1}_{sigma(1)} ... x^{h_n}_{sigma(n)}. `sigma` is one-line and 0-based:
/// position j holds variable sigma[j] with label labels[j].
struct HMonomial {
  std::vector<std::uint8_t> sigma;
  std::vector<H4Basis> labels;

  std::size_t degree() const noexcept { return sigma.size(); }
  friend bool operator==(const HMonomial&, const HMonomial&) = default;
  /// Lexicographic on sigma, then on labels in basis order.
  friend bool operator<(const HMonomial& a, const HMonomial& b);
};

std::string to_string(const HMonomial& m);

struct HTerm {
  Rational coefficient;
  HMonomial monomial;
};

/// Multilinear H-polynomial of degree n with collected, nonzero terms sorted
/// by monomial order.
class HPolynomial {
 public:
  explicit HPolynomial(std::size_t n = 1) : n_(n) {}
  static HPolynomial monomial(HMonomial m, Rational coefficient = 1);

  std::size_t degree() const noexcept { return n_; }
  const std::vector<HTerm>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add(const HMonomial& m, const Rational& coefficient);
  HPolynomial& operator+=(const HPolynomial& rhs);
  friend HPolynomial operator*(const Rational& s, HPolynomial p);
  friend bool operator==(const HPolynomial& a, const HPolynomial& b);

 private:
  std::size_t n_;
  std::vector<HTerm> terms_;
};

/// 4^n * n!
std::uint64_t monomial_count(std::size_t n);
/// All monomials of degree n in lexicographic order (sigma outer, labels inner).
std::vector<HMonomial> monomials(std::size_t n);
/// Streams the same sequence; stops when `f` returns false.
void for_each_monomial(std::size_t n, const std::function<bool(const HMonomial&)>& f);

/// Value at x_i := e_{assignment[i]}.
Vector evaluate(const HPolynomial& p, const HAlgebra& a, const std::vector<std::size_t>& assignment);
/// Value at x_i := args[i] for arbitrary elements.
Vector evaluate_at(const HPolynomial& p, const HAlgebra& a, const std::vector<Vector>& args);

enum class ModeChoice { Auto, Rational, Modular };

/// Default primes of the modular mode.
std::vector<std::uint64_t> default_primes();

struct CodimOptions {
  ModeChoice mode = ModeChoice::Auto;
  std::vector<std::uint64_t> primes = default_primes();
  std::size_t threads = 1;
  std::uint64_t max_monomials = 0;  // 0 = unlimited
  double max_seconds = 0;           // 0 = unlimited
};

struct CodimResult {
  std::size_t n = 0;
  std::uint64_t value = 0;
  bool modular = false;
  std::vector<std::uint64_t> primes;
  std::vector<std::uint64_t> per_prime;  // value for each prime, modular mode only
  bool primes_agree = true;
  /// Rational and complete, or modular, complete and equal for every prime.
  bool certified = false;
  /// The value is only known to be a lower bound (modular mode or a cap hit).
  bool lower_bound = false;
  bool complete = true;
  std::string stop_reason;         // "exhausted", "rank cap", "max monomials", "max seconds"
  std::uint64_t processed = 0;     // monomials accounted for, including skipped dependents
  std::uint64_t inserted = 0;      // evaluation vectors actually reduced
};

/// Rank of the evaluation map P_n -> A^{d^n} over all basis assignments.
CodimResult codimension(const HAlgebra& a, std::size_t n, const CodimOptions& options = {});

struct BoundRow {
  std::size_t n = 0;
  std::uint64_t codim = 0;
  Integer bound;  // d^{n+1}
  bool holds = false;
  bool certified = false;
};

struct BoundReport {
  std::vector<BoundRow> rows;
  bool all_hold = true;
  bool input_h4_simple = true;
  std::string warning;
};

BoundReport check_upper_bound(const HAlgebra& a, std::size_t n_max, const CodimOptions& options = {});

struct TrendRow {
  std::size_t n = 0;
  std::uint64_t codim = 0;
  double root = 0;        // codim^(1/n), display only
  std::string root_text;  // four decimals
  bool complete = true;
};

std::vector<TrendRow> exponent_trend(const HAlgebra& a, std::size_t n_max, const CodimOptions& options = {});

/// sum over permutations tau of `varset` of sgn(tau) * p with variables renamed by tau.
/// Variables are 0-based.
HPolynomial alternate(const HPolynomial& p, const std::vector<std::size_t>& varset);

struct AlternationOptions {
  /// Labels allowed at every position; empty means all four.
  std::vector<H4Basis> allowed_labels;
  /// Upper bound on label tuples * representatives * assignments * signed terms.
  std::uint64_t max_work = 500'000'000;
};

/// Whether some polynomial alternating in each of `sets` (disjoint, 0-based)
/// is not an identity of `a`. Throws ResourceLimitError when the work estimate exceeds the guard.
bool exists_alternating_nonidentity(const HAlgebra& a, std::size_t n, const std::vector<std::vector<std::size_t>>& sets,
                                    const AlternationOptions& options = {});

}  // namespace h4

#endif  // H4_IDENTITIES_HPP
