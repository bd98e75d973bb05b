#include "h4/serialization.hpp"

namespace h4 {

namespace {

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw ValidationError(where + ": expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw ValidationError(where + ": missing \"" + key + "\"");
  return *it;
}

std::size_t size_from_json(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    throw ValidationError(where + ": expected a non-negative integer");
  return j.get<std::size_t>();
}

Vector vector_from_json(const Json& j, std::size_t n, const std::string& where) {
  if (!j.is_array() || j.size() != n)
    throw ValidationError(where + ": expected an array of " + std::to_string(n) + " scalars");
  Vector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = rational_from_json(j[i], where + "[" + std::to_string(i) + "]");
  return v;
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json to_json(const Rational& x) { return format_rational(x); }

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const ValidationError& e) {
      throw ValidationError(where + ": " + e.what());
    }
  }
  if (j.is_number_integer()) return Rational(j.dump());
  throw ValidationError(where + ": expected a scalar string such as \"3/7\"");
}

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row_vector(r)));
  return out;
}

Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& where) {
  if (!j.is_array() || j.size() != rows)
    throw ValidationError(where + ": expected a " + std::to_string(rows) + " x " + std::to_string(cols) + " matrix");
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const Vector row = vector_from_json(j[r], cols, where + "[" + std::to_string(r) + "]");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
  }
  return m;
}

Json to_json(const H4Element& h) {
  Json out = Json::array();
  for (const auto& x : h.coefficients()) out.push_back(to_json(x));
  return out;
}

H4Element h4_element_from_json(const Json& j) {
  const Vector v = vector_from_json(j, 4, "$");
  return H4Element({v[0], v[1], v[2], v[3]});
}

Json to_json(const HAlgebra& a) {
  const std::size_t d = a.dim();
  Json mult = Json::array();
  for (std::size_t i = 0; i < d; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < d; ++j) row.push_back(to_json(a.structure(i, j)));
    mult.push_back(std::move(row));
  }
  Json out;
  out["dim"] = d;
  out["mult"] = std::move(mult);
  out["unit"] = a.unit() ? to_json(*a.unit()) : Json(nullptr);
  out["C"] = to_json(a.c_action());
  out["V"] = to_json(a.v_action());
  out["label"] = a.label();
  return out;
}

HAlgebra algebra_from_json(const Json& j) {
  const std::size_t d = size_from_json(member(j, "dim", "$"), "$.dim");
  const Json& mult = member(j, "mult", "$");
  if (!mult.is_array() || mult.size() != d) throw ValidationError("$.mult: expected a dim x dim x dim array");
  std::vector<Vector> structure;
  structure.reserve(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    const std::string wi = "$.mult[" + std::to_string(i) + "]";
    if (!mult[i].is_array() || mult[i].size() != d) throw ValidationError(wi + ": expected " + std::to_string(d) + " rows");
    for (std::size_t k = 0; k < d; ++k)
      structure.push_back(vector_from_json(mult[i][k], d, wi + "[" + std::to_string(k) + "]"));
  }
  std::optional<Vector> unit;
  if (const auto it = j.find("unit"); it != j.end() && !it->is_null()) unit = vector_from_json(*it, d, "$.unit");
  Matrix c = matrix_from_json(member(j, "C", "$"), d, d, "$.C");
  Matrix v = matrix_from_json(member(j, "V", "$"), d, d, "$.V");
  std::string label;
  if (const auto it = j.find("label"); it != j.end()) {
    if (!it->is_string()) throw ValidationError("$.label: expected a string");
    label = it->get<std::string>();
  }
  return HAlgebra(d, std::move(structure), std::move(unit), std::move(c), std::move(v), std::move(label));
}

Json to_json(const CanonicalDescriptor& d) {
  Json out;
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, TrivialMatrixParams>) {
          out["type"] = "trivial_matrix";
          out["n"] = p.n;
        } else if constexpr (std::is_same_v<T, MatrixCaseParams>) {
          out["type"] = "matrix_case";
          out["k"] = p.k;
          out["m"] = p.m;
          out["Q1"] = to_json(p.q1);
          out["Q2"] = to_json(p.q2);
          out["alpha"] = to_json(p.alpha);
        } else if constexpr (std::is_same_v<T, DoubleCaseParams>) {
          out["type"] = "double";
          out["k"] = p.k;
          out["P"] = to_json(p.p);
          out["alpha"] = to_json(p.alpha);
        } else {
          out["type"] = "nonsemisimple";
          out["base"] = to_json(*p.base);
        }
      },
      d.value);
  return out;
}

namespace {

CanonicalDescriptor descriptor_at(const Json& j, const std::string& where) {
  const Json& type = member(j, "type", where);
  if (!type.is_string()) throw ValidationError(where + ".type: expected a string");
  const std::string t = type.get<std::string>();
  if (t == "trivial_matrix") {
    const std::size_t n = size_from_json(member(j, "n", where), where + ".n");
    if (n == 0) throw ValidationError(where + ".n: must be at least 1");
    return CanonicalDescriptor::trivial_matrix(n);
  }
  if (t == "matrix_case") {
    MatrixCaseParams p;
    p.k = size_from_json(member(j, "k", where), where + ".k");
    p.m = size_from_json(member(j, "m", where), where + ".m");
    if (p.k == 0 || p.m == 0) throw ValidationError(where + ": k and m must be at least 1");
    p.q1 = matrix_from_json(member(j, "Q1", where), p.k, p.m, where + ".Q1");
    p.q2 = matrix_from_json(member(j, "Q2", where), p.m, p.k, where + ".Q2");
    if (const auto it = j.find("alpha"); it != j.end())
      p.alpha = rational_from_json(*it, where + ".alpha");
    else
      p.alpha = infer_matrix_case_alpha(p.q1, p.q2);
    return CanonicalDescriptor::matrix_case(std::move(p));
  }
  if (t == "double") {
    DoubleCaseParams p;
    p.k = size_from_json(member(j, "k", where), where + ".k");
    if (p.k == 0) throw ValidationError(where + ".k: must be at least 1");
    p.p = matrix_from_json(member(j, "P", where), p.k, p.k, where + ".P");
    if (const auto it = j.find("alpha"); it != j.end())
      p.alpha = rational_from_json(*it, where + ".alpha");
    else
      p.alpha = infer_double_alpha(p.p);
    return CanonicalDescriptor::double_case(std::move(p));
  }
  if (t == "nonsemisimple") return CanonicalDescriptor::nonsemisimple(descriptor_at(member(j, "base", where), where + ".base"));
  throw ValidationError(where + ".type: unknown descriptor type \"" + t + "\"");
}

}  // namespace

CanonicalDescriptor descriptor_from_json(const Json& j) { return descriptor_at(j, "$"); }

bool is_descriptor_json(const Json& j) { return j.is_object() && j.contains("type") && !j.contains("mult"); }

Json to_json(const VerificationReport& r) {
  Json laws = Json::array();
  for (const auto& law : r.laws) {
    Json l;
    l["name"] = law.name;
    l["passed"] = law.passed;
    l["detail"] = law.detail;
    laws.push_back(std::move(l));
  }
  Json out;
  out["all_pass"] = r.all_pass();
  out["laws"] = std::move(laws);
  return out;
}

Json to_json(const SimplicityReport& r) {
  Json out;
  out["dim"] = r.dim;
  out["square_nonzero"] = r.square_nonzero;
  out["enveloping_dim"] = r.enveloping_dim;
  out["commutant_dim"] = r.commutant_dim;
  out["absolutely_simple"] = r.absolutely_simple;
  out["may_be_simple_over_base_field"] = r.may_be_simple_over_base_field;
  out["note"] = r.note;
  return out;
}

Json to_json(const IsoDecision& d) {
  Json out;
  out["decision"] = d.isomorphic;
  out["route"] = d.route;
  if (d.witness) {
    Json w;
    w["branch"] = d.witness->branch;
    w["map"] = to_json(d.witness->map);
    Json params = Json::array();
    for (const auto& p : d.witness->parameters) params.push_back(to_json(p));
    w["parameters"] = std::move(params);
    out["witness"] = std::move(w);
  } else {
    out["witness"] = nullptr;
  }
  Json inv;
  for (const auto& [key, value] : d.invariants) inv[key] = value;
  out["invariants"] = inv.is_null() ? Json::object() : inv;
  return out;
}

Json to_json(const AutDescription& a) {
  Json out;
  out["family"] = a.family;
  out["group"] = a.group;
  out["tangent_dim"] = a.tangent_dim;
  out["components"] = a.components;
  out["certain"] = a.certain;
  Json gens = Json::array();
  for (const auto& g : a.generators) gens.push_back(to_json(g));
  out["generators"] = std::move(gens);
  return out;
}

Json to_json(const CodimResult& c) {
  Json out;
  out["n"] = c.n;
  out["value"] = c.value;
  out["mode"] = c.modular ? "modp" : "rational";
  out["primes"] = c.primes;
  out["per_prime"] = c.per_prime;
  out["primes_agree"] = c.primes_agree;
  out["certified"] = c.certified;
  out["lower_bound"] = c.lower_bound;
  out["complete"] = c.complete;
  out["stop_reason"] = c.stop_reason;
  out["processed"] = c.processed;
  out["inserted"] = c.inserted;
  return out;
}

Json to_json(const BoundReport& b) {
  Json rows = Json::array();
  for (const auto& r : b.rows) {
    Json row;
    row["n"] = r.n;
    row["codim"] = r.codim;
    row["bound"] = r.bound.get_str();
    row["holds"] = r.holds;
    row["certified"] = r.certified;
    rows.push_back(std::move(row));
  }
  Json out;
  out["all_hold"] = b.all_hold;
  out["input_h4_simple"] = b.input_h4_simple;
  out["warning"] = b.warning;
  out["rows"] = std::move(rows);
  return out;
}

}  // namespace h4
