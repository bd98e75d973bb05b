#include "h4/algebra.hpp"

#include <sstream>

namespace h4 {

namespace {

std::string vec_str(std::span<const Rational> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ')';
  return os.str();
}

}  // namespace

HAlgebra::HAlgebra(std::size_t dim, std::vector<Vector> structure, std::optional<Vector> unit, Matrix c, Matrix v,
                   std::string label)
    : dim_(dim), structure_(std::move(structure)), unit_(std::move(unit)), label_(std::move(label)) {
  if (structure_.size() != dim_ * dim_) throw ValidationError("structure constants must have dim*dim entries");
  for (const auto& s : structure_) {
    if (s.size() != dim_) throw ValidationError("each product e_i e_j must have dim coordinates");
  }
  if (unit_ && unit_->size() != dim_) throw ValidationError("unit must have dim coordinates");
  if (c.rows() != dim_ || c.cols() != dim_) throw ValidationError("C must be a dim x dim matrix");
  if (v.rows() != dim_ || v.cols() != dim_) throw ValidationError("V must be a dim x dim matrix");
  operators_[0] = Matrix::identity(dim_);
  operators_[3] = c * v;
  operators_[1] = std::move(c);
  operators_[2] = std::move(v);
}

Vector HAlgebra::multiply(std::span<const Rational> x, std::span<const Rational> y) const {
  if (x.size() != dim_ || y.size() != dim_) throw Error("product: vectors must have the algebra's dimension");
  Vector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn(y[j]) == 0) continue;
      const Vector& s = structure_[i * dim_ + j];
      const Rational f = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        if (sgn(s[k]) != 0) out[k] += f * s[k];
      }
    }
  }
  return out;
}

Matrix HAlgebra::left_multiplication(std::span<const Rational> x) const {
  Matrix l(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      const Vector& s = structure_[i * dim_ + j];
      for (std::size_t k = 0; k < dim_; ++k) {
        if (sgn(s[k]) != 0) l(k, j) += x[i] * s[k];
      }
    }
  }
  return l;
}

Matrix HAlgebra::right_multiplication(std::span<const Rational> x) const {
  Matrix r(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    if (sgn(x[j]) == 0) continue;
    for (std::size_t i = 0; i < dim_; ++i) {
      const Vector& s = structure_[i * dim_ + j];
      for (std::size_t k = 0; k < dim_; ++k) {
        if (sgn(s[k]) != 0) r(k, i) += x[j] * s[k];
      }
    }
  }
  return r;
}

Matrix HAlgebra::left_multiplication(std::size_t i) const { return left_multiplication(unit_vector(dim_, i)); }

Matrix HAlgebra::right_multiplication(std::size_t i) const { return right_multiplication(unit_vector(dim_, i)); }

HAlgebra HAlgebra::with_label(std::string label) const {
  HAlgebra copy = *this;
  copy.label_ = std::move(label);
  return copy;
}

HAlgebra HAlgebra::change_basis(const Matrix& g) const {
  const auto g_inv = inverse(g);
  if (!g_inv) throw Error("change_basis: matrix is not invertible");
  std::vector<Vector> structure(dim_ * dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    const Vector fi = g.column(i);
    for (std::size_t j = 0; j < dim_; ++j) {
      structure[i * dim_ + j] = *g_inv * multiply(fi, g.column(j));
    }
  }
  std::optional<Vector> unit;
  if (unit_) unit = *g_inv * *unit_;
  return HAlgebra(dim_, std::move(structure), std::move(unit), *g_inv * c_action() * g, *g_inv * v_action() * g,
                  label_);
}

// ----------------------------------------------------------- verification

bool VerificationReport::all_pass() const {
  for (const auto& law : laws) {
    if (!law.passed) return false;
  }
  return true;
}

const LawCheck* VerificationReport::find(const std::string& name) const {
  for (const auto& law : laws) {
    if (law.name == name) return &law;
  }
  return nullptr;
}

VerificationReport verify_module_algebra(const HAlgebra& a) {
  const std::size_t d = a.dim();
  const Matrix& c = a.c_action();
  const Matrix& v = a.v_action();
  const Matrix id = Matrix::identity(d);
  VerificationReport report;

  std::vector<Matrix> left(d);
  for (std::size_t i = 0; i < d; ++i) left[i] = a.left_multiplication(i);

  {
    LawCheck law{"associativity", true, {}};
    // (e_i e_j) e_k = e_i (e_j e_k) for all k  <=>  L_{e_i e_j} = L_i L_j.
    for (std::size_t i = 0; i < d && law.passed; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        if (a.left_multiplication(a.structure(i, j)) != left[i] * left[j]) {
          law.passed = false;
          law.detail = "(e" + std::to_string(i) + " e" + std::to_string(j) + ") x != e" + std::to_string(i) + " (e" +
                       std::to_string(j) + " x) for some basis x";
          break;
        }
      }
    }
    report.laws.push_back(std::move(law));
  }
  {
    LawCheck law{"unit", true, {}};
    if (a.unit()) {
      if (a.left_multiplication(*a.unit()) != id || a.right_multiplication(*a.unit()) != id) {
        law.passed = false;
        law.detail = "declared unit " + vec_str(*a.unit()) + " is not a two-sided identity";
      }
    } else {
      law.detail = "non-unital";
    }
    report.laws.push_back(std::move(law));
  }
  report.laws.push_back({"c_involution", c * c == id, c * c == id ? "" : "C^2 != I"});
  report.laws.push_back({"v_square_zero", (v * v).is_zero(), (v * v).is_zero() ? "" : "V^2 != 0"});
  {
    const bool ok = (c * v + v * c).is_zero();
    report.laws.push_back({"cv_anticommute", ok, ok ? "" : "CV != -VC"});
  }

  std::vector<Vector> c_images(d), v_images(d);
  for (std::size_t i = 0; i < d; ++i) {
    c_images[i] = c.column(i);
    v_images[i] = v.column(i);
  }
  {
    LawCheck law{"c_automorphism", true, {}};
    for (std::size_t i = 0; i < d && law.passed; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        if (c * a.structure(i, j) != a.multiply(c_images[i], c_images[j])) {
          law.passed = false;
          law.detail = "c(e" + std::to_string(i) + " e" + std::to_string(j) + ") != (c e" + std::to_string(i) +
                       ")(c e" + std::to_string(j) + ")";
          break;
        }
      }
    }
    report.laws.push_back(std::move(law));
  }
  {
    LawCheck law{"v_skew_derivation", true, {}};
    for (std::size_t i = 0; i < d && law.passed; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        const Vector lhs = v * a.structure(i, j);
        const Vector rhs = add(a.multiply(c_images[i], v_images[j]), a.multiply(v_images[i], unit_vector(d, j)));
        if (lhs != rhs) {
          law.passed = false;
          law.detail = "v(e" + std::to_string(i) + " e" + std::to_string(j) + ") != (c e" + std::to_string(i) +
                       ")(v e" + std::to_string(j) + ") + (v e" + std::to_string(i) + ") e" + std::to_string(j);
          break;
        }
      }
    }
    report.laws.push_back(std::move(law));
  }
  return report;
}

Vector apply(const HAlgebra& a, const H4Element& h, std::span<const Rational> x) {
  if (x.size() != a.dim()) throw Error("apply: vector must have the algebra's dimension");
  return h4_as_operator(h, a) * x;
}

Vector product(const HAlgebra& a, std::span<const Rational> x, std::span<const Rational> y) {
  return a.multiply(x, y);
}

GradedSplit graded_split(const HAlgebra& a) {
  const std::size_t d = a.dim();
  const Matrix& c = a.c_action();
  const Matrix id = Matrix::identity(d);
  if (c * c != id) throw Error("c is not an involution");
  return GradedSplit{Subspace::row_space(kernel(c - id)), Subspace::row_space(kernel(c + id))};
}

HAlgebra restrict_to(const HAlgebra& a, const std::vector<Vector>& basis, std::string label) {
  const std::size_t d = a.dim();
  const std::size_t k = basis.size();
  const Subspace span = Subspace::span(basis, d);
  if (span.dim() != k) throw Error("restrict_to: basis vectors are linearly dependent");
  // Coordinates with respect to `basis` through the echelon basis of the span.
  Matrix echelon_to_basis(k, k);
  {
    Matrix coords(k, k);  // row r = echelon coordinates of basis[r]
    for (std::size_t r = 0; r < k; ++r) {
      const auto x = span.coordinates(basis[r]);
      for (std::size_t s = 0; s < k; ++s) coords(r, s) = (*x)[s];
    }
    // basis = coords * echelon  =>  echelon = coords^{-1} * basis.
    echelon_to_basis = *inverse(coords);
  }
  auto to_local = [&](std::span<const Rational> x, const char* what) {
    const auto e = span.coordinates(x);
    if (!e) throw Error(std::string("restrict_to: subspace is not closed under ") + what);
    // x = sum_s e_s echelon_s = sum_s e_s sum_r inv(s, r) basis_r.
    Vector local(k);
    for (std::size_t s = 0; s < k; ++s) {
      if (sgn((*e)[s]) == 0) continue;
      for (std::size_t r = 0; r < k; ++r) local[r] += (*e)[s] * echelon_to_basis(s, r);
    }
    return local;
  };
  std::vector<Vector> structure(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) structure[i * k + j] = to_local(a.multiply(basis[i], basis[j]), "multiplication");
  std::vector<Vector> c_cols, v_cols;
  for (std::size_t i = 0; i < k; ++i) {
    c_cols.push_back(to_local(a.c_action() * basis[i], "c"));
    v_cols.push_back(to_local(a.v_action() * basis[i], "v"));
  }
  std::optional<Vector> unit;
  if (a.unit() && span.contains(*a.unit())) unit = to_local(*a.unit(), "unit");
  return HAlgebra(k, std::move(structure), std::move(unit), Matrix::from_columns(c_cols, k),
                  Matrix::from_columns(v_cols, k), std::move(label));
}

std::size_t square_dimension(const HAlgebra& a) {
  return Subspace::span(a.structure(), a.dim()).dim();
}

}  // namespace h4
