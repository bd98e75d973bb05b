#include "h4/structure.hpp"

#include <cstdint>

namespace h4 {

namespace {

using ModMatrix = std::vector<std::uint64_t>;  // row-major d x d residues

ModMatrix mod_multiply(const ModMatrix& x, const ModMatrix& y, std::size_t d, const PrimeField& f) {
  ModMatrix out(d * d, 0);
  const std::uint64_t p = f.prime();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      const std::uint64_t a = x[i * d + k];
      if (a == 0) continue;
      for (std::size_t j = 0; j < d; ++j) out[i * d + j] = (out[i * d + j] + a * y[k * d + j]) % p;
    }
  }
  return out;
}

/// Closure dimension over Z/pZ; nullopt when some generator has a denominator divisible by p.
std::optional<std::size_t> modular_closure_dim(std::size_t d, const std::vector<Matrix>& generators) {
  const PrimeField field(kDefaultPrime);
  std::vector<ModMatrix> gens;
  for (const auto& g : generators) {
    ModMatrix m(d * d);
    for (std::size_t t = 0; t < d * d; ++t) {
      const Rational& x = g.entries()[t];
      if (sgn(x) == 0) continue;
      if (mpz_divisible_ui_p(x.get_den_mpz_t(), static_cast<unsigned long>(field.prime()))) return std::nullopt;
      m[t] = field.reduce(x);
    }
    gens.push_back(std::move(m));
  }
  ModularSpanBuilder builder(d * d, field);
  std::vector<ModMatrix> words;
  for (const auto& g : gens) {
    if (builder.insert(std::span<const std::uint64_t>(g))) words.push_back(g);
  }
  for (std::size_t idx = 0; idx < words.size() && builder.dim() < d * d; ++idx) {
    for (const auto& g : gens) {
      ModMatrix w = mod_multiply(g, words[idx], d, field);
      if (builder.insert(std::span<const std::uint64_t>(w))) words.push_back(std::move(w));
    }
  }
  return builder.dim();
}

Subspace stable_closure(const std::vector<Vector>& seed, const std::vector<Matrix>& operators, std::size_t d) {
  SpanBuilder builder(d);
  std::vector<Vector> found;
  for (const auto& s : seed) {
    if (builder.insert(s)) found.push_back(s);
  }
  for (std::size_t idx = 0; idx < found.size() && builder.dim() < d; ++idx) {
    for (const auto& op : operators) {
      Vector image = op * found[idx];
      if (builder.insert(image)) found.push_back(std::move(image));
    }
  }
  return builder.subspace();
}

bool all_products_in(const HAlgebra& a, const std::vector<Vector>& xs, const std::vector<Vector>& ys,
                     const Subspace& target) {
  for (const auto& x : xs)
    for (const auto& y : ys)
      if (!target.contains(a.multiply(x, y))) return false;
  return true;
}

}  // namespace

EnvelopingAlgebra operator_closure(std::size_t d, std::vector<Matrix> generators) {
  EnvelopingAlgebra e;
  e.dim = d;
  const auto modular = modular_closure_dim(d, generators);
  if (modular && *modular == d * d) {
    e.basis = Subspace::whole(d * d);
    e.generators = std::move(generators);
    return e;
  }
  SpanBuilder builder(d * d);
  std::vector<Matrix> words;
  for (const auto& g : generators) {
    if (builder.insert(g.entries())) words.push_back(g);
  }
  for (std::size_t idx = 0; idx < words.size() && builder.dim() < d * d; ++idx) {
    for (const auto& g : generators) {
      Matrix w = g * words[idx];
      if (builder.insert(w.entries())) words.push_back(std::move(w));
    }
  }
  e.basis = builder.subspace();
  e.generators = std::move(generators);
  return e;
}

std::vector<Matrix> multiplication_generators(const HAlgebra& a, ActionScope scope) {
  std::vector<Matrix> gens;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    gens.push_back(a.left_multiplication(i));
    gens.push_back(a.right_multiplication(i));
  }
  if (scope != ActionScope::None) gens.push_back(a.c_action());
  if (scope == ActionScope::Full) gens.push_back(a.v_action());
  return gens;
}

EnvelopingAlgebra enveloping_operator_algebra(const HAlgebra& a, ActionScope scope) {
  return operator_closure(a.dim(), multiplication_generators(a, scope));
}

EnvelopingAlgebra enveloping_operator_algebra(const HAlgebra& a, bool include_action) {
  return enveloping_operator_algebra(a, include_action ? ActionScope::Full : ActionScope::None);
}

bool is_absolutely_simple(const HAlgebra& a, ActionScope scope) {
  if (a.dim() == 0 || square_dimension(a) == 0) return false;
  return enveloping_operator_algebra(a, scope).is_full();
}

bool is_absolutely_h4_simple(const HAlgebra& a) { return is_absolutely_simple(a, ActionScope::Full); }

bool is_absolutely_z2_simple(const HAlgebra& a) { return is_absolutely_simple(a, ActionScope::Grading); }

Subspace commutant(const EnvelopingAlgebra& e) {
  const std::size_t d = e.dim;
  // Intersect the centralizers of the generators one at a time.
  Subspace result = Subspace::whole(d * d);
  for (const auto& g : e.generators) {
    if (result.dim() <= 1) {
      bool all_commute = true;
      for (const auto& x : result.basis_vectors()) {
        const Matrix m = Matrix::from_entries(d, d, x);
        if (m * g != g * m) all_commute = false;
      }
      if (all_commute) continue;
    }
    const auto basis = result.basis_vectors();
    const Subspace coeffs = solution_space(basis.size(), [&](const Vector& t) {
      Matrix x(d, d);
      for (std::size_t s = 0; s < basis.size(); ++s) {
        if (sgn(t[s]) != 0) x += t[s] * Matrix::from_entries(d, d, basis[s]);
      }
      return (x * g - g * x).entries();
    });
    std::vector<Vector> next;
    for (const auto& t : coeffs.basis_vectors()) {
      Vector x(d * d);
      for (std::size_t s = 0; s < basis.size(); ++s) {
        if (sgn(t[s]) != 0) axpy(t[s], basis[s], x);
      }
      next.push_back(std::move(x));
    }
    result = Subspace::span(next, d * d);
  }
  return result;
}

SimplicityReport simplicity_report(const HAlgebra& a, ActionScope scope) {
  SimplicityReport r;
  r.dim = a.dim();
  r.square_nonzero = a.dim() > 0 && square_dimension(a) > 0;
  const EnvelopingAlgebra e = enveloping_operator_algebra(a, scope);
  r.enveloping_dim = e.basis.dim();
  r.absolutely_simple = r.square_nonzero && e.is_full();
  if (r.absolutely_simple) {
    r.commutant_dim = 1;
    return r;
  }
  if (!r.square_nonzero) {
    r.note = "A^2 = 0";
    return r;
  }
  const Subspace comm = commutant(e);
  r.commutant_dim = comm.dim();
  // Simple over Q forces the commutant to be a division algebra, so a singular
  // nonzero commutant element rules it out.
  bool basis_invertible = true;
  for (const auto& v : comm.basis_vectors())
    if (sgn(determinant(Matrix::from_entries(r.dim, r.dim, v))) == 0) basis_invertible = false;
  if (r.commutant_dim > 1 && basis_invertible && r.enveloping_dim * r.commutant_dim == r.dim * r.dim) {
    r.may_be_simple_over_base_field = true;
    r.note = "not absolutely simple; the commutant has dimension " + std::to_string(r.commutant_dim) +
             " and dim E * dim E' = d^2, so A may be simple over Q and split only over an extension";
  } else {
    r.note = "a proper invariant ideal exists over the algebraic closure";
  }
  return r;
}

Subspace radical(const HAlgebra& a) {
  const std::size_t d = a.dim();
  Vector traces(d);
  for (std::size_t k = 0; k < d; ++k) traces[k] = a.left_multiplication(k).trace();
  Matrix form(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const Vector& s = a.structure(i, j);
      Rational t = 0;
      for (std::size_t k = 0; k < d; ++k) {
        if (sgn(s[k]) != 0) t += s[k] * traces[k];
      }
      form(i, j) = t;
    }
  }
  return Subspace::row_space(kernel(form.transpose()));
}

Subspace radical(const HAlgebra& a, const FieldMode& mode) {
  if (mode.modular) throw Error("radical computation requires characteristic 0");
  return radical(a);
}

Subspace ideal_closure(const HAlgebra& a, const Subspace& seed, ActionScope scope) {
  if (seed.ambient() != a.dim()) throw Error("ideal_closure: seed has the wrong ambient dimension");
  return stable_closure(seed.basis_vectors(), multiplication_generators(a, scope), a.dim());
}

Subspace h4_ideal_closure(const HAlgebra& a, const Subspace& seed) {
  return ideal_closure(a, seed, ActionScope::Full);
}

Decomposition decompose_nonsemisimple(const HAlgebra& a) {
  const std::size_t d = a.dim();
  Decomposition out;
  out.j = radical(a);
  if (out.j.is_zero()) throw Error("decompose_nonsemisimple: radical is 0 (semisimple input)");
  const Matrix& c = a.c_action();
  const Matrix& v = a.v_action();
  auto& laws = out.report.laws;

  out.j_basis = out.j.basis_vectors();
  for (const auto& x : out.j_basis) out.vj_basis.push_back(v * x);
  out.vj = Subspace::span(out.vj_basis, d);
  const std::size_t r = out.j_basis.size();

  {
    bool ok = true;
    for (const auto& x : out.j_basis)
      for (const auto& y : out.j_basis) ok = ok && h4::is_zero(a.multiply(x, y));
    laws.push_back({"j_square_zero", ok, ok ? "" : "J^2 != 0"});
  }
  const bool injective = out.vj.dim() == r;
  laws.push_back({"v_injective_on_j", injective, injective ? "" : "V restricted to J has a kernel"});
  const bool direct = injective && (out.vj + out.j).is_whole() && out.vj.intersect(out.j).is_zero();
  laws.push_back({"direct_sum", direct, direct ? "" : "vJ + J is not a direct sum equal to A"});

  const bool closed = all_products_in(a, out.vj_basis, out.vj_basis, out.vj);
  laws.push_back({"vj_subalgebra", closed, closed ? "" : "vJ is not closed under multiplication"});
  bool c_stable = true;
  for (const auto& x : out.vj_basis) c_stable = c_stable && out.vj.contains(c * x);
  laws.push_back({"vj_c_invariant", c_stable, c_stable ? "" : "vJ is not stable under c"});

  if (closed && c_stable) {
    try {
      out.vj_algebra = restrict_to(a, out.vj_basis, "vJ");
      out.has_vj_algebra = true;
    } catch (const Error&) {
      out.has_vj_algebra = false;
    }
  }
  {
    const bool simple = out.has_vj_algebra && is_absolutely_z2_simple(out.vj_algebra);
    laws.push_back({"vj_g_simple", simple, simple ? "" : "vJ is not Z2-simple"});
  }

  if (!direct) {
    laws.push_back({"phi_left_law", false, "phi undefined"});
    laws.push_back({"phi_right_law", false, "phi undefined"});
    laws.push_back({"grading_flip", false, "phi undefined"});
    return out;
  }
  // phi: V j_t -> j_t, j_t -> 0.
  std::vector<Vector> domain_cols = out.vj_basis;
  std::vector<Vector> image_cols = out.j_basis;
  for (const auto& x : out.j_basis) {
    domain_cols.push_back(x);
    image_cols.push_back(zero_vector(d));
  }
  out.phi = Matrix::from_columns(image_cols, d) * *inverse(Matrix::from_columns(domain_cols, d));

  LawCheck left{"phi_left_law", true, {}};
  LawCheck right{"phi_right_law", true, {}};
  LawCheck flip{"grading_flip", true, {}};
  for (std::size_t s = 0; s < r; ++s) {
    const Vector& x = out.vj_basis[s];
    for (std::size_t t = 0; t < r; ++t) {
      const Vector& y = out.vj_basis[t];
      if (left.passed && a.multiply(x, out.phi * y) != out.phi * a.multiply(c * x, y)) {
        left.passed = false;
        left.detail = "a phi(b) != phi((ca) b) at basis pair (" + std::to_string(s) + ", " + std::to_string(t) + ")";
      }
      if (right.passed && a.multiply(out.phi * x, y) != out.phi * a.multiply(x, y)) {
        right.passed = false;
        right.detail = "phi(a) b != phi(ab) at basis pair (" + std::to_string(s) + ", " + std::to_string(t) + ")";
      }
    }
    if (flip.passed && c * (out.phi * x) != scale(Rational(-1), out.phi * (c * x))) {
      flip.passed = false;
      flip.detail = "c phi(b) != -phi(c b) at basis vector " + std::to_string(s);
    }
  }
  laws.push_back(std::move(left));
  laws.push_back(std::move(right));
  laws.push_back(std::move(flip));
  return out;
}

}  // namespace h4
