#ifndef H4_SERIALIZATION_HPP
#define H4_SERIALIZATION_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "h4/algebra.hpp"
#include "h4/classify.hpp"
#include "h4/constructions.hpp"
#include "h4/hopf.hpp"
#include "h4/identities.hpp"
#include "h4/structure.hpp"

namespace h4 {

/// Insertion-ordered so that emitted documents follow the schema order and
/// identical values always serialize to identical bytes.
using Json = nlohmann::ordered_json;

/// Parses text; malformed input throws ValidationError naming the byte offset.
Json parse_json(std::string_view text);
/// Two-space indented, newline terminated.
std::string dump(const Json& j);

// Scalars are "p/q" strings (integers without "/1"). Readers also accept JSON
// integers. `where` is a JSON-path-like location used in error messages.
Json to_json(const Rational& x);
Rational rational_from_json(const Json& j, const std::string& where);
Json to_json(const Matrix& m);
/// Rows of scalars; `rows` x `cols` is enforced.
Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& where);
Json to_json(const Vector& v);

Json to_json(const H4Element& h);
H4Element h4_element_from_json(const Json& j);

/// { "dim", "mult": mult[i][j] = coordinates of e_i e_j, "unit", "C", "V", "label" }.
Json to_json(const HAlgebra& a);
HAlgebra algebra_from_json(const Json& j);

/// Tagged by "type": "trivial_matrix" {n}, "matrix_case" {k, m, Q1, Q2, alpha?},
/// "double" {k, P, alpha?}, "nonsemisimple" {base}. A missing alpha is inferred.
Json to_json(const CanonicalDescriptor& d);
CanonicalDescriptor descriptor_from_json(const Json& j);
/// True when `j` looks like a descriptor rather than an algebra.
bool is_descriptor_json(const Json& j);

Json to_json(const VerificationReport& r);
Json to_json(const SimplicityReport& r);
Json to_json(const IsoDecision& d);
Json to_json(const AutDescription& a);
Json to_json(const CodimResult& c);
Json to_json(const BoundReport& b);

}  // namespace h4

#endif  // H4_SERIALIZATION_HPP
