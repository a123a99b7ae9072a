#ifndef SHIFTLAB_CLASSIFY_HPP
#define SHIFTLAB_CLASSIFY_HPP

#include <vector>

#include "shiftlab/lattice.hpp"

namespace shiftlab {

/// Exact test of x_k + y_k = C with C := x_(0,0) + y_(0,0); the verdict
/// carries C. Requires a commutative diagram.
PredicateVerdict is_spherically_quasinormal(const WeightDiagram& d);

/// The same condition through the moments: gamma_{k+e1} + gamma_{k+e2}
/// = C gamma_k. Agrees with is_spherically_quasinormal on every commutative
/// diagram; kept as an independent route for cross-checking.
PredicateVerdict spherical_via_moment_criterion(const WeightDiagram& d);

/// Joint quasinormality. Raw conditions first (y constant along e1, x
/// constant along e2); combined with sphericality these force a globally
/// constant diagram, so the final test is constancy of x and y.
PredicateVerdict is_jointly_quasinormal(const WeightDiagram& d);

/// Always violated: commuting with the mixed products would make every row
/// shift above row zero a normal unilateral weighted shift, and there are
/// none. The verdict carries the obstruction as a note instead of a lattice
/// witness.
PredicateVerdict is_matricially_quasinormal(const WeightDiagram& d);

/// x nondecreasing along e1 and y nondecreasing along e2 — necessary for
/// subnormality, not sufficient.
PredicateVerdict is_coordinatewise_hyponormal(const WeightDiagram& d);

struct ClassificationReport {
  PredicateVerdict matricial;
  PredicateVerdict joint;
  PredicateVerdict spherical;
  PredicateVerdict coordinatewise_hyponormal;
  PredicateVerdict toral_fixed;
  PredicateVerdict spherical_fixed;
  PredicateVerdict transforms_agree;
  /// Spherical quasinormality implies subnormality; reported as a derived
  /// flag, never as an independent test.
  bool subnormal_implied = false;
};

/// Runs the whole hierarchy. Throws CommutativityError when the diagram does
/// not commute. Asserts the implication chain (joint => spherical,
/// spherical-fixed-point <=> spherical).
ClassificationReport classify(const WeightDiagram& d);

/// Unilateral weighted shift through its squared weights.
struct OneVarShift {
  std::vector<Rational> w;
  TailRule tail = TailRule::None;  // None or ConstantExtension
};

/// Splits the m-th power into its m shift components on the reducing
/// subspaces spanned by e_{m l + p}: component p has squared weights
/// prod_{j<m} w[m l + p + j].
std::vector<OneVarShift> onevar_power_components(const OneVarShift& s, int m);

/// Holds iff all squared weights are equal (constant multiples of the
/// unweighted unilateral shift).
PredicateVerdict onevar_is_quasinormal(const OneVarShift& s);

}  // namespace shiftlab

#endif
