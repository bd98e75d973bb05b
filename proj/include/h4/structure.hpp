#ifndef H4_STRUCTURE_HPP
#define H4_STRUCTURE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "h4/algebra.hpp"
#include "h4/linalg.hpp"

namespace h4 {

/// Which action operators join the left and right multiplications.
enum class ActionScope {
  None,     // ordinary two-sided ideals
  Grading,  // C only: Z2-graded ideals
  Full,     // C and V: H4-invariant ideals
};

/// Multiplicative closure of a set of d x d operators, stored as a subspace
/// of row-major d^2 coordinates.
struct EnvelopingAlgebra {
  std::size_t dim = 0;  // d, the size of the operators
  Subspace basis;       // ambient d^2
  std::vector<Matrix> generators;

  bool is_full() const { return basis.dim() == dim * dim; }
};

/// Span of all nonempty words in `generators`. A closure reaching d^2 over
/// Z/pZ is already conclusive; otherwise the loop reruns over Q.
EnvelopingAlgebra operator_closure(std::size_t d, std::vector<Matrix> generators);

/// Generators: L_{e_i}, R_{e_i} for every basis e_i, plus the operators of `scope`.
std::vector<Matrix> multiplication_generators(const HAlgebra& a, ActionScope scope);
EnvelopingAlgebra enveloping_operator_algebra(const HAlgebra& a, bool include_action);
EnvelopingAlgebra enveloping_operator_algebra(const HAlgebra& a, ActionScope scope);

/// A^2 != 0 and the enveloping algebra of `scope` is all of End(A), i.e. A has
/// no proper nonzero invariant ideal even after extending scalars.
bool is_absolutely_simple(const HAlgebra& a, ActionScope scope);
bool is_absolutely_h4_simple(const HAlgebra& a);
bool is_absolutely_z2_simple(const HAlgebra& a);

struct SimplicityReport {
  std::size_t dim = 0;
  bool square_nonzero = false;
  std::size_t enveloping_dim = 0;
  std::size_t commutant_dim = 0;
  bool absolutely_simple = false;
  /// Set when the verdict is false but dim E * dim E' = d^2 for the enveloping
  /// algebra E and its commutant E' != scalars: A may still be simple over Q
  /// while splitting over an extension.
  bool may_be_simple_over_base_field = false;
  std::string note;
};

SimplicityReport simplicity_report(const HAlgebra& a, ActionScope scope = ActionScope::Full);

/// Operators commuting with every element of `e`.
Subspace commutant(const EnvelopingAlgebra& e);

/// Kernel of the trace form (x, y) -> Tr(L_{xy}). Characteristic 0 only.
Subspace radical(const HAlgebra& a);
/// Throws Error("radical computation requires characteristic 0") for a modular mode.
Subspace radical(const HAlgebra& a, const FieldMode& mode);

/// Smallest subspace containing `seed` that is stable under every L_{e_i},
/// R_{e_i} and the operators of `scope`.
Subspace ideal_closure(const HAlgebra& a, const Subspace& seed, ActionScope scope);
Subspace h4_ideal_closure(const HAlgebra& a, const Subspace& seed);

/// Splitting A = vJ (+) J of an H4-simple algebra with radical J != 0.
struct Decomposition {
  Subspace j;
  Subspace vj;
  std::vector<Vector> j_basis;   // echelon basis of J
  std::vector<Vector> vj_basis;  // V applied to j_basis, in the same order
  /// Operator on A inverting V|_J on vJ and vanishing on J; empty when V|_J
  /// is not injective or vJ + J != A.
  Matrix phi;
  HAlgebra vj_algebra;  // vJ in the basis vj_basis; set when vJ is a C-stable subalgebra
  bool has_vj_algebra = false;
  VerificationReport report;

  bool all_pass() const { return report.all_pass(); }
};

/// Law names: j_square_zero, v_injective_on_j, direct_sum, vj_subalgebra,
/// vj_c_invariant, vj_g_simple, phi_left_law, phi_right_law, grading_flip.
/// Throws Error when the radical is zero.
Decomposition decompose_nonsemisimple(const HAlgebra& a);

}  // namespace h4

#endif  // H4_STRUCTURE_HPP
