#include "h4/constructions.hpp"

#include <sstream>

#include "h4/linalg.hpp"
#include "h4/structure.hpp"

namespace h4 {

namespace {

std::string compact(const Matrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? "," : "") << m(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

Matrix grading_matrix(std::size_t k, std::size_t m) {
  Vector diag(k + m, Rational(1));
  for (std::size_t i = k; i < k + m; ++i) diag[i] = -1;
  return Matrix::diagonal(diag);
}

Vector identity_coordinates(std::size_t n) { return Matrix::identity(n).entries(); }

}  // namespace

std::string describe(const CanonicalDescriptor& d) {
  return std::visit(
      [](const auto& p) -> std::string {
        using T = std::decay_t<decltype(p)>;
        std::ostringstream os;
        if constexpr (std::is_same_v<T, TrivialMatrixParams>) {
          os << "trivial M_" << p.n;
        } else if constexpr (std::is_same_v<T, MatrixCaseParams>) {
          os << "M_{" << p.k << ',' << p.m << "} Q1=" << compact(p.q1) << " Q2=" << compact(p.q2)
             << " alpha=" << p.alpha;
        } else if constexpr (std::is_same_v<T, DoubleCaseParams>) {
          os << "double M_" << p.k << " P=" << compact(p.p) << " alpha=" << p.alpha;
        } else {
          os << "nonsemisimple(" << (p.base ? describe(*p.base) : std::string("?")) << ')';
        }
        return os.str();
      },
      d.value);
}

Rational infer_matrix_case_alpha(const Matrix& q1, const Matrix& q2) {
  if (q1.cols() != q2.rows() || q1.rows() != q2.cols()) throw ValidationError("Q1 and Q2 have incompatible shapes");
  const Matrix prod = q1 * q2;
  if (prod.rows() == 0) throw ValidationError("matrix case needs k >= 1");
  const Rational alpha = prod(0, 0);
  if (prod != alpha * Matrix::identity(prod.rows())) throw ValidationError("Q1*Q2 != alpha*E_k: Q1*Q2 is not scalar");
  return alpha;
}

MatrixCaseParams normalize_matrix_case(MatrixCaseParams p, std::string* note) {
  if (p.k == 0 || p.m == 0) throw ValidationError("matrix case needs k >= 1 and m >= 1");
  if (p.q1.rows() != p.k || p.q1.cols() != p.m) throw ValidationError("Q1 must be a k x m matrix");
  if (p.q2.rows() != p.m || p.q2.cols() != p.k) throw ValidationError("Q2 must be an m x k matrix");
  if (p.q1 * p.q2 != p.alpha * Matrix::identity(p.k)) throw ValidationError("Q1*Q2 != alpha*E_k");
  if (p.q2 * p.q1 != p.alpha * Matrix::identity(p.m)) throw ValidationError("Q2*Q1 != alpha*E_m");
  if (p.k < p.m) {
    std::swap(p.k, p.m);
    std::swap(p.q1, p.q2);
    if (note) *note = "k < m: swapped k <-> m and Q1 <-> Q2";
  }
  // Implied by the two identities above; kept as a guard.
  if (sgn(p.alpha) == 0 && rank(p.q1) + rank(p.q2) > p.m) throw ValidationError("rank(Q1) + rank(Q2) > min(k, m)");
  return p;
}

Rational infer_double_alpha(const Matrix& p) {
  if (!p.is_square() || p.rows() == 0) throw ValidationError("P must be a nonempty square matrix");
  const Matrix sq = p * p;
  const Rational alpha = sq(0, 0);
  if (sq != alpha * Matrix::identity(p.rows())) throw ValidationError("P^2 != alpha*E_k: P^2 is not scalar");
  return alpha;
}

void validate_double(const DoubleCaseParams& p) {
  if (p.k == 0) throw ValidationError("double case needs k >= 1");
  if (p.p.rows() != p.k || p.p.cols() != p.k) throw ValidationError("P must be a k x k matrix");
  if (p.p * p.p != p.alpha * Matrix::identity(p.k)) throw ValidationError("P^2 != alpha*E_k");
}

Matrix sandwich_operator(const Matrix& x, const Matrix& y) {
  const std::size_t n = x.rows();
  Matrix op(n * n, n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t i = 0; i < n; ++i) {
      if (sgn(x(r, i)) == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t s = 0; s < n; ++s) {
          if (sgn(y(j, s)) != 0) op(r * n + s, i * n + j) = x(r, i) * y(j, s);
        }
    }
  return op;
}

std::vector<Vector> matrix_units_structure(std::size_t n) {
  const std::size_t d = n * n;
  std::vector<Vector> s(d * d, zero_vector(d));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) s[(i * n + j) * d + (j * n + l)][i * n + l] = 1;
  return s;
}

HAlgebra make_trivial_matrix(std::size_t n) {
  if (n == 0) throw ValidationError("trivial matrix algebra needs n >= 1");
  const std::size_t d = n * n;
  return HAlgebra(d, matrix_units_structure(n), identity_coordinates(n), Matrix::identity(d), Matrix(d, d),
                  describe(CanonicalDescriptor::trivial_matrix(n)));
}

HAlgebra graded_matrix_algebra(std::size_t k, std::size_t m) {
  const std::size_t n = k + m;
  if (n == 0) throw ValidationError("graded matrix algebra needs k + m >= 1");
  const std::size_t d = n * n;
  const Matrix p = grading_matrix(k, m);
  return HAlgebra(d, matrix_units_structure(n), identity_coordinates(n), sandwich_operator(p, p), Matrix(d, d),
                  "graded M_{" + std::to_string(k) + "," + std::to_string(m) + "}");
}

HAlgebra make_matrix_case(const MatrixCaseParams& input) {
  const MatrixCaseParams p = normalize_matrix_case(input);
  const std::size_t n = p.k + p.m;
  const Matrix grading = grading_matrix(p.k, p.m);
  const Matrix q = block_antidiagonal(p.q1, p.q2);
  // v a = P a P Q - Q a
  const Matrix v = sandwich_operator(grading, grading * q) - sandwich_operator(q, Matrix::identity(n));
  return HAlgebra(n * n, matrix_units_structure(n), identity_coordinates(n), sandwich_operator(grading, grading), v,
                  describe(CanonicalDescriptor::matrix_case(p)));
}

HAlgebra make_double(const DoubleCaseParams& p) {
  validate_double(p);
  const std::size_t k = p.k;
  const std::size_t half = k * k;
  const std::size_t d = 2 * half;
  const std::vector<Vector> block = matrix_units_structure(k);
  std::vector<Vector> structure(d * d, zero_vector(d));
  for (std::size_t i = 0; i < half; ++i)
    for (std::size_t j = 0; j < half; ++j) {
      const Vector& s = block[i * half + j];
      for (std::size_t t = 0; t < half; ++t) {
        structure[i * d + j][t] = s[t];
        structure[(half + i) * d + (half + j)][half + t] = s[t];
      }
    }
  const Vector block_unit = identity_coordinates(k);
  Vector unit = block_unit;
  unit.insert(unit.end(), block_unit.begin(), block_unit.end());

  const Matrix id = Matrix::identity(k);
  Matrix c(d, d);
  c.set_block(0, half, Matrix::identity(half));
  c.set_block(half, 0, Matrix::identity(half));
  // v (a, b) = (P a - b P, a P - P b)
  Matrix v(d, d);
  v.set_block(0, 0, sandwich_operator(p.p, id));
  v.set_block(0, half, -sandwich_operator(id, p.p));
  v.set_block(half, 0, sandwich_operator(id, p.p));
  v.set_block(half, half, -sandwich_operator(p.p, id));
  return HAlgebra(d, std::move(structure), std::move(unit), std::move(c), std::move(v),
                  describe(CanonicalDescriptor::double_case(p)));
}

HAlgebra make_nonsemisimple(const HAlgebra& b) {
  const std::size_t n = b.dim();
  if (n == 0) throw ValidationError("base algebra is zero");
  if (!b.v_action().is_zero()) throw ValidationError("base algebra must have v = 0");
  if (b.c_action() * b.c_action() != Matrix::identity(n)) throw ValidationError("c is not an involution on the base");
  if (!is_absolutely_z2_simple(b)) throw ValidationError("base algebra is not Z2-simple");
  const std::size_t d = 2 * n;
  const Matrix& cb = b.c_action();
  std::vector<Vector> structure(d * d, zero_vector(d));
  for (std::size_t i = 0; i < n; ++i) {
    const Vector ci = cb.column(i);
    for (std::size_t j = 0; j < n; ++j) {
      const Vector& s = b.structure(i, j);
      const Vector twisted = b.multiply(ci, unit_vector(n, j));  // (c e_i) e_j
      for (std::size_t t = 0; t < n; ++t) {
        structure[i * d + j][t] = s[t];                  // e_i e_j
        structure[i * d + (n + j)][n + t] = twisted[t];  // e_i phi(e_j) = phi((c e_i) e_j)
        structure[(n + i) * d + j][n + t] = s[t];        // phi(e_i) e_j = phi(e_i e_j)
      }
    }
  }
  std::optional<Vector> unit;
  if (b.unit()) {
    unit = *b.unit();
    unit->resize(d);
  }
  Matrix c(d, d);
  c.set_block(0, 0, cb);
  c.set_block(n, n, -cb);
  Matrix v(d, d);
  v.set_block(0, n, Matrix::identity(n));  // v phi(x) = x, v B = 0
  return HAlgebra(d, std::move(structure), std::move(unit), std::move(c), std::move(v),
                  "nonsemisimple(" + b.label() + ")");
}

HAlgebra realize(const CanonicalDescriptor& d) {
  return std::visit(
      [&](const auto& p) -> HAlgebra {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, TrivialMatrixParams>) {
          return make_trivial_matrix(p.n);
        } else if constexpr (std::is_same_v<T, MatrixCaseParams>) {
          return make_matrix_case(p);
        } else if constexpr (std::is_same_v<T, DoubleCaseParams>) {
          return make_double(p);
        } else {
          if (!p.base) throw ValidationError("nonsemisimple descriptor has no base");
          return make_nonsemisimple(realize(*p.base)).with_label(describe(d));
        }
      },
      d.value);
}

DoubleCaseParams diagonal_sign_preset(std::size_t m, std::size_t k, const Rational& a) {
  if (m < k) throw ValidationError("diagonal preset needs m >= k");
  if (m + k == 0) throw ValidationError("diagonal preset needs m + k >= 1");
  Vector diag(m + k, a);
  for (std::size_t i = m; i < m + k; ++i) diag[i] = -a;
  return DoubleCaseParams{m + k, Matrix::diagonal(diag), a * a};
}

DoubleCaseParams nilpotent_cells_preset(std::size_t n, std::size_t cells) {
  if (n == 0 || 2 * cells > n) throw ValidationError("nilpotent preset needs 1 <= n and 2*cells <= n");
  Matrix p(n, n);
  for (std::size_t t = 0; t < cells; ++t) p(2 * t, 2 * t + 1) = 1;
  return DoubleCaseParams{n, p, Rational(0)};
}

}  // namespace h4
