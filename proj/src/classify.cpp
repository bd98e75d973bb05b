#include "h4/classify.hpp"

#include <cmath>
#include <sstream>

#include "h4/structure.hpp"

namespace h4 {

namespace {

std::string str(const Rational& x) { return format_rational(x); }

Matrix conjugation_map(const Matrix& w) {
  const auto inv = inverse(w);
  if (!inv) throw InternalError("conjugation by a singular matrix");
  return sandwich_operator(w, *inv);
}

/// (a, b) -> (Q a Q^-1, Q b Q^-1), or (Q b Q^-1, Q a Q^-1) when `swap`.
Matrix double_map(const Matrix& q, bool swap) {
  const Matrix s = conjugation_map(q);
  const std::size_t half = s.rows();
  Matrix out(2 * half, 2 * half);
  if (swap) {
    out.set_block(0, half, s);
    out.set_block(half, 0, s);
  } else {
    out.set_block(0, 0, s);
    out.set_block(half, half, s);
  }
  return out;
}

bool in_pattern(const CentralizerPattern& p, std::size_t r, std::size_t c) {
  switch (p.kind) {
    case CentralizerPattern::Kind::Full:
      return true;
    case CentralizerPattern::Kind::BlockDiagonal:
      return (r < p.k) == (c < p.k);
    case CentralizerPattern::Kind::BlockAntidiagonal:
      return (r < p.k) != (c < p.k);
  }
  return false;
}

/// {W in pattern : W from = sign * to W} as a list of n x n matrices.
std::vector<Matrix> intertwiners(const Matrix& from, const Matrix& to, const CentralizerPattern& pattern,
                                 const Rational& sign) {
  const std::size_t n = from.rows();
  if (pattern.kind != CentralizerPattern::Kind::Full && pattern.k + pattern.m != n)
    throw Error("centralizer: pattern blocks do not match the matrix size");
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (in_pattern(pattern, r, c)) slots.emplace_back(r, c);
  auto assemble = [&](std::span<const Rational> t) {
    Matrix w(n, n);
    for (std::size_t s = 0; s < slots.size(); ++s) w(slots[s].first, slots[s].second) = t[s];
    return w;
  };
  const Subspace sol = solution_space(slots.size(), [&](const Vector& t) {
    const Matrix w = assemble(t);
    return (w * from - sign * (to * w)).entries();
  });
  std::vector<Matrix> out;
  for (std::size_t r = 0; r < sol.dim(); ++r) out.push_back(assemble(sol.basis().row(r)));
  return out;
}

std::vector<Vector> flatten(const std::vector<Matrix>& ms) {
  std::vector<Vector> out;
  for (const auto& m : ms) out.push_back(m.entries());
  return out;
}

bool found(const InvertibleSearch& s) { return s.status == InvertibleStatus::Found; }

Subspace centre(const HAlgebra& a) {
  const std::size_t d = a.dim();
  Matrix system(d * d, d);
  for (std::size_t i = 0; i < d; ++i) {
    const Matrix diff = a.right_multiplication(i) - a.left_multiplication(i);
    system.set_block(i * d, 0, diff);
  }
  return Subspace::row_space(kernel(system));
}

std::size_t isqrt_exact(std::size_t x, bool* ok) {
  auto r = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(x))));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  *ok = r * r == x;
  return r;
}

}  // namespace

// ------------------------------------------------------------ isomorphisms

bool is_h4_isomorphism(const HAlgebra& a1, const HAlgebra& a2, const Matrix& map) {
  const std::size_t d = a1.dim();
  if (a2.dim() != d || map.rows() != d || map.cols() != d) return false;
  if (sgn(determinant(map)) == 0) return false;
  if (map * a1.c_action() != a2.c_action() * map) return false;
  if (map * a1.v_action() != a2.v_action() * map) return false;
  std::vector<Vector> images(d);
  for (std::size_t i = 0; i < d; ++i) images[i] = map.column(i);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (map * a1.structure(i, j) != a2.multiply(images[i], images[j])) return false;
  return true;
}

bool is_h4_automorphism(const HAlgebra& a, const Matrix& map) { return is_h4_isomorphism(a, a, map); }

MatrixCaseInvariant matrix_case_invariant(const MatrixCaseParams& input) {
  const MatrixCaseParams p = normalize_matrix_case(input);
  MatrixCaseInvariant inv{p.k, p.m, p.alpha, std::nullopt};
  if (sgn(p.alpha) == 0) {
    std::size_t r1 = rank(p.q1);
    std::size_t r2 = rank(p.q2);
    if (p.k == p.m && r1 > r2) std::swap(r1, r2);
    inv.ranks = std::make_pair(r1, r2);
  }
  return inv;
}

IsoDecision iso_matrix_case_oracle(const MatrixCaseParams& in1, const MatrixCaseParams& in2,
                                   const InvertibleSearchOptions& search) {
  const MatrixCaseParams p1 = normalize_matrix_case(in1);
  const MatrixCaseParams p2 = normalize_matrix_case(in2);
  IsoDecision out;
  out.route = "oracle";
  const std::size_t n = p1.k + p1.m;
  if (p2.k + p2.m != n) return out;
  const auto grading = [](std::size_t k, std::size_t m) {
    Vector diag(k + m, Rational(1));
    for (std::size_t i = k; i < k + m; ++i) diag[i] = -1;
    return Matrix::diagonal(diag);
  };
  const Matrix g1 = grading(p1.k, p1.m);
  const Matrix g2 = grading(p2.k, p2.m);
  const Matrix q1 = block_antidiagonal(p1.q1, p1.q2);
  const Matrix q2 = block_antidiagonal(p2.q1, p2.q2);
  for (int sign : {1, -1}) {
    // Conjugation by W intertwines the gradings iff W G1 = +-G2 W, and the
    // skew-derivations iff W Q1 = Q2 W.
    const Subspace sol = solution_space(n * n, [&](const Vector& t) {
      const Matrix w = Matrix::from_entries(n, n, t);
      Vector eq = (w * g1 - Rational(sign) * (g2 * w)).entries();
      const Vector second = (w * q1 - q2 * w).entries();
      eq.insert(eq.end(), second.begin(), second.end());
      return eq;
    });
    std::vector<Matrix> ws;
    for (std::size_t r = 0; r < sol.dim(); ++r) ws.push_back(Matrix::from_entries(n, n, sol.basis().row(r)));
    const InvertibleSearch s = contains_invertible(ws, search);
    if (s.status == InvertibleStatus::Unknown) throw Error("invertibility search inconclusive");
    if (found(s)) {
      const Matrix w = normalize_projective(s.witness);
      out.isomorphic = true;
      out.witness = IsoWitness{conjugation_map(w), {w}, sign > 0 ? "even" : "odd"};
      return out;
    }
  }
  return out;
}

IsoDecision iso_matrix_case(const MatrixCaseParams& in1, const MatrixCaseParams& in2, const IsoOptions& options) {
  if (options.use_oracle) return iso_matrix_case_oracle(in1, in2, options.search);
  const MatrixCaseParams p1 = normalize_matrix_case(in1);
  const MatrixCaseParams p2 = normalize_matrix_case(in2);
  const MatrixCaseInvariant i1 = matrix_case_invariant(p1);
  const MatrixCaseInvariant i2 = matrix_case_invariant(p2);
  IsoDecision out;
  out.route = "invariants";
  auto describe_inv = [](const MatrixCaseInvariant& i) {
    std::ostringstream os;
    os << "k=" << i.k << " m=" << i.m << " alpha=" << str(i.alpha);
    if (i.ranks) os << " ranks=(" << i.ranks->first << "," << i.ranks->second << ")";
    return os.str();
  };
  out.invariants = {{"first", describe_inv(i1)}, {"second", describe_inv(i2)}};
  if (!(i1 == i2)) return out;

  const Matrix q1 = block_antidiagonal(p1.q1, p1.q2);
  const Matrix q2 = block_antidiagonal(p2.q1, p2.q2);
  // W Q = Q' W for Q = [[0, A], [B, 0]], Q' = [[0, A'], [B', 0]].
  // Branch "even": W = diag(W1, W2), so W1 A = A' W2 and W2 B = B' W1.
  // Branch "odd" (k = m only): W = [[0, W1], [W2, 0]], so W1 B = A' W2 and W2 A = B' W1.
  std::vector<std::pair<CentralizerPattern, std::string>> branches = {
      {CentralizerPattern::block_diagonal(p1.k, p1.m), "even"}};
  if (p1.k == p1.m) branches.push_back({CentralizerPattern::block_antidiagonal(p1.k), "odd"});
  for (const auto& [pattern, name] : branches) {
    const InvertibleSearch s = contains_invertible(intertwiners(q1, q2, pattern, Rational(1)), options.search);
    if (found(s)) {
      const Matrix w = normalize_projective(s.witness);
      std::vector<Matrix> params;
      if (name == "even") {
        params = {w.block(0, 0, p1.k, p1.k), w.block(p1.k, p1.k, p1.m, p1.m)};
      } else {
        params = {w.block(0, p1.k, p1.k, p1.m), w.block(p1.k, 0, p1.m, p1.k)};
      }
      out.isomorphic = true;
      out.witness = IsoWitness{conjugation_map(w), std::move(params), name};
      return out;
    }
  }
  throw InternalError("matrix case: invariants agree but no invertible intertwiner was found");
}

IsoDecision iso_double_case_oracle(const DoubleCaseParams& p1, const DoubleCaseParams& p2,
                                   const InvertibleSearchOptions& search) {
  validate_double(p1);
  validate_double(p2);
  IsoDecision out;
  out.route = "oracle";
  if (p1.k != p2.k) return out;
  for (int sign : {1, -1}) {
    const InvertibleSearch s =
        contains_invertible(intertwiners(p1.p, p2.p, CentralizerPattern::full(), Rational(sign)), search);
    if (s.status == InvertibleStatus::Unknown) throw Error("invertibility search inconclusive");
    if (found(s)) {
      const Matrix q = normalize_projective(s.witness);
      out.isomorphic = true;
      out.witness = IsoWitness{double_map(q, sign < 0), {q}, sign > 0 ? "+" : "-"};
      return out;
    }
  }
  return out;
}

IsoDecision iso_double_case(const DoubleCaseParams& p1, const DoubleCaseParams& p2, const IsoOptions& options) {
  if (options.use_oracle) return iso_double_case_oracle(p1, p2, options.search);
  validate_double(p1);
  validate_double(p2);
  IsoDecision out;
  out.route = "invariants";
  out.invariants = {{"k1", std::to_string(p1.k)}, {"k2", std::to_string(p2.k)}};
  if (p1.k != p2.k) return out;
  const bool plus = similar(p2.p, p1.p);
  const bool minus = !plus && similar(p2.p, -p1.p);
  out.invariants.push_back({"similar_plus", plus ? "true" : "false"});
  out.invariants.push_back({"similar_minus", minus ? "true" : "false"});
  if (!plus && !minus) return out;
  const int sign = plus ? 1 : -1;
  // Q P1 = +-P2 Q; any invertible solution conjugates P1 to +-P2.
  const InvertibleSearch s =
      contains_invertible(intertwiners(p1.p, p2.p, CentralizerPattern::full(), Rational(sign)), options.search);
  if (!found(s)) throw InternalError("double case: similarity holds but no invertible conjugator was found");
  const Matrix q = normalize_projective(s.witness);
  out.isomorphic = true;
  out.witness = IsoWitness{double_map(q, sign < 0), {q}, plus ? "+" : "-"};
  return out;
}

GradedShape recognize_graded(const HAlgebra& b) {
  if (!b.v_action().is_zero()) throw Error("graded recognition expects v = 0");
  if (!is_absolutely_z2_simple(b)) throw Error("algebra is not Z2-simple");
  const std::size_t d = b.dim();
  if (enveloping_operator_algebra(b, ActionScope::None).is_full()) {
    bool ok = false;
    const std::size_t n = isqrt_exact(d, &ok);
    if (!ok) throw Error("simple algebra of non-square dimension");
    const std::size_t even = graded_split(b).even.dim();
    // k + m = n and k^2 + m^2 = even.
    if (n * n < even || (n * n - even) % 2 != 0) throw Error("grading is not of matrix type");
    const std::size_t km = (n * n - even) / 2;
    if (n * n < 4 * km) throw Error("grading is not of matrix type");
    const std::size_t s = isqrt_exact(n * n - 4 * km, &ok);
    if (!ok || (n + s) % 2 != 0) throw Error("grading is not of matrix type");
    return GradedShape{GradedShape::Kind::Matrix, (n + s) / 2, (n - s) / 2};
  }
  bool ok = false;
  const std::size_t k = d % 2 == 0 ? isqrt_exact(d / 2, &ok) : 0;
  if (ok && centre(b).dim() == 2) return GradedShape{GradedShape::Kind::Swap, k, 0};
  throw Error("Z2-simple algebra of unrecognized shape");
}

bool graded_iso(const HAlgebra& b1, const HAlgebra& b2) {
  const GradedShape s1 = recognize_graded(b1);
  const GradedShape s2 = recognize_graded(b2);
  return s1.kind == s2.kind && s1.k == s2.k && s1.m == s2.m;
}

IsoDecision iso_nonsemisimple(const HAlgebra& a1, const HAlgebra& a2) {
  IsoDecision out;
  out.route = "invariants";
  auto base = [](const HAlgebra& a) {
    Decomposition dec = decompose_nonsemisimple(a);
    for (const auto& law : dec.report.laws) {
      if (!law.passed) throw Error("not an H4-simple non-semisimple algebra: " + law.name + " fails");
    }
    return dec.vj_algebra;
  };
  const HAlgebra b1 = base(a1);
  const HAlgebra b2 = base(a2);
  const GradedShape s1 = recognize_graded(b1);
  const GradedShape s2 = recognize_graded(b2);
  auto text = [](const GradedShape& s) {
    return s.kind == GradedShape::Kind::Matrix ? "M_{" + std::to_string(s.k) + "," + std::to_string(s.m) + "}"
                                               : "M_" + std::to_string(s.k) + "+M_" + std::to_string(s.k) + " swap";
  };
  out.invariants = {{"first_base", text(s1)}, {"second_base", text(s2)}};
  out.isomorphic = s1.kind == s2.kind && s1.k == s2.k && s1.m == s2.m;
  return out;
}

// ---------------------------------------------------------- automorphisms

Subspace centralizer(const Matrix& q, const CentralizerPattern& pattern, bool anticommute) {
  if (!q.is_square()) throw Error("centralizer: matrix must be square");
  const std::size_t n = q.rows();
  return Subspace::span(flatten(intertwiners(q, q, pattern, Rational(anticommute ? -1 : 1))), n * n);
}

Matrix normalize_projective(const Matrix& w) {
  for (const auto& x : w.entries()) {
    if (sgn(x) != 0) return Rational(1) / x * w;
  }
  return w;
}

namespace {

struct BranchData {
  std::vector<Matrix> identity_branch;  // W in the identity component (plus scalars)
  std::vector<Matrix> other_branch;
};

/// Fills tangent dimension, component count and normalized W generators; `lift`
/// turns W into a map on the realized algebra.
template <class Lift, class LiftOther>
void summarize(AutDescription& out, const BranchData& b, std::size_t n, const InvertibleSearchOptions& search,
               Lift lift, LiftOther lift_other) {
  if (b.identity_branch.empty()) throw InternalError("automorphism branch without the identity");
  out.tangent_dim = b.identity_branch.size() - 1;
  const Matrix id = Matrix::identity(n);
  for (const auto& basis : flatten(b.identity_branch)) {
    const Matrix dir = Matrix::from_entries(n, n, basis);
    if (Subspace::span({id.entries()}, n * n).contains(dir.entries())) continue;
    for (long s = 1; s <= static_cast<long>(n) + 1; ++s) {
      const Matrix w = id + Rational(s) * dir;
      if (sgn(determinant(w)) != 0) {
        out.generators.push_back(lift(normalize_projective(w)));
        break;
      }
    }
  }
  out.components = 1;
  if (!b.other_branch.empty()) {
    const InvertibleSearch s = contains_invertible(b.other_branch, search);
    out.certain = s.certain;
    if (found(s)) {
      out.components = 2;
      out.generators.push_back(lift_other(normalize_projective(s.witness)));
    }
  }
}

void validate_generators(const AutDescription& d, const HAlgebra& a) {
  for (const auto& g : d.generators) {
    if (!is_h4_automorphism(a, g)) throw InternalError("automorphism generator fails verification");
  }
}

}  // namespace

AutDescription aut_description(const CanonicalDescriptor& desc, const InvertibleSearchOptions& search) {
  AutDescription out;
  if (const auto* t = std::get_if<TrivialMatrixParams>(&desc.value)) {
    const std::size_t n = t->n;
    BranchData b;
    b.identity_branch = intertwiners(Matrix(n, n), Matrix(n, n), CentralizerPattern::full(), Rational(1));
    summarize(out, b, n, search, conjugation_map, conjugation_map);
    out.family = 1;
    out.group = "PGL_" + std::to_string(n);
    validate_generators(out, make_trivial_matrix(n));
    return out;
  }
  if (const auto* mc = std::get_if<MatrixCaseParams>(&desc.value)) {
    const MatrixCaseParams p = normalize_matrix_case(*mc);
    const std::size_t n = p.k + p.m;
    const Matrix q = block_antidiagonal(p.q1, p.q2);
    BranchData b;
    b.identity_branch = intertwiners(q, q, CentralizerPattern::block_diagonal(p.k, p.m), Rational(1));
    if (p.k == p.m) b.other_branch = intertwiners(q, q, CentralizerPattern::block_antidiagonal(p.k), Rational(1));
    summarize(out, b, n, search, conjugation_map, conjugation_map);
    const std::string k = std::to_string(p.k), m = std::to_string(p.m);
    if (q.is_zero()) {
      out.family = p.k == p.m ? 2 : 1;
      out.group = p.k == p.m ? "((GL_" + k + " x GL_" + k + ") x| Z2)/F^x" : "(GL_" + k + " x GL_" + m + ")/F^x";
    } else {
      out.family = 6;
      out.group = "image in PGL_" + std::to_string(n) + " of block " + (p.k == p.m ? "(anti)" : "") +
                  "diagonal matrices commuting with Q";
    }
    validate_generators(out, make_matrix_case(p));
    return out;
  }
  if (const auto* dc = std::get_if<DoubleCaseParams>(&desc.value)) {
    validate_double(*dc);
    BranchData b;
    b.identity_branch = intertwiners(dc->p, dc->p, CentralizerPattern::full(), Rational(1));
    b.other_branch = intertwiners(dc->p, dc->p, CentralizerPattern::full(), Rational(-1));
    summarize(
        out, b, dc->k, search, [](const Matrix& w) { return double_map(w, false); },
        [](const Matrix& w) { return double_map(w, true); });
    const std::string k = std::to_string(dc->k);
    if (dc->p.is_zero()) {
      out.family = 3;
      out.group = "PGL_" + k + " x Z2";
    } else {
      out.family = 5;
      out.group = "image in PGL_" + k + " of matrices commuting or anticommuting with P";
    }
    validate_generators(out, make_double(*dc));
    return out;
  }
  const auto& ns = std::get<NonSemisimpleParams>(desc.value);
  if (!ns.base) throw ValidationError("nonsemisimple descriptor has no base");
  AutDescription base = aut_description(*ns.base, search);
  out.family = 4;
  out.group = "Aut_Z2(vJ) = " + base.group;
  out.tangent_dim = base.tangent_dim;
  out.components = base.components;
  out.certain = base.certain;
  // psi(a + phi(b)) = psi(a) + phi(psi(b)).
  for (const auto& g : base.generators) out.generators.push_back(block_diagonal(g, g));
  validate_generators(out, realize(desc));
  return out;
}

}  // namespace h4
