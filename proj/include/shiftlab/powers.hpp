#ifndef SHIFTLAB_POWERS_HPP
#define SHIFTLAB_POWERS_HPP

#include <optional>
#include <vector>

#include "shiftlab/lattice.hpp"

namespace shiftlab {

/// Restriction coordinates for W^(m,n) = (T1^m, T2^n) on the reducing
/// subspace spanned by e_(m l + p, n k + q).
struct PowerSpec {
  int m = 1;
  int n = 1;
  int p = 0;
  int q = 0;
};

/// Squared weights of the restriction:
///   x'_(l,k) = prod_{j<m} x_(m l + p + j, n k + q)
///   y'_(l,k) = prod_{j<n} y_(m l + p, n k + q + j)
/// Requires a commutative diagram; the output is commutative (asserted
/// exactly). Measure-generated inputs yield a measure-generated restriction
/// (atoms (s^m, t^n), densities rho s^p t^q / gamma_(p,q)).
WeightDiagram power_subspace_diagram(const WeightDiagram& d, const PowerSpec& spec);

struct PowerCell {
  int p = 0;
  int q = 0;
  PredicateVerdict verdict;
};

struct PowerSphericalReport {
  int m = 1;
  int n = 1;
  std::vector<PowerCell> cells;  // p-major, q within
  bool all_hold = false;
  /// Whether all restrictions carry one and the same constant C. The
  /// definition acts on the full space, so a global constant is the
  /// stronger, reported property.
  bool constants_coincide = false;
  std::optional<Rational> common_constant;
};

/// Spherical quasinormality of every restriction of W^(m,n); the overall
/// verdict holds iff all (p,q) restrictions pass.
PowerSphericalReport power_spherical_report(const WeightDiagram& d, int m, int n);

}  // namespace shiftlab

#endif
