#ifndef SHIFTLAB_BERGER_HPP
#define SHIFTLAB_BERGER_HPP

#include <memory>
#include <vector>

#include "shiftlab/lattice.hpp"
#include "shiftlab/rational.hpp"

namespace shiftlab {

struct Atom {
  Rational s;    // first coordinate (x direction)
  Rational t;    // second coordinate (y direction)
  Rational rho;  // density, > 0
};

/// Finitely many weighted point masses on the nonnegative quadrant, kept in
/// lexicographic (s,t) order. Probability by default; `with_total_mass`
/// admits an arbitrary positive total (needed by atom recovery, where the
/// recovered density is gamma_00).
class AtomicMeasure {
 public:
  explicit AtomicMeasure(std::vector<Atom> atoms) : AtomicMeasure(std::move(atoms), true) {}
  static AtomicMeasure with_total_mass(std::vector<Atom> atoms) {
    return AtomicMeasure(std::move(atoms), false);
  }

  const std::vector<Atom>& atoms() const { return atoms_; }
  size_t size() const { return atoms_.size(); }
  Rational total_mass() const;
  bool is_probability() const { return total_mass() == Rational(1); }
  /// True when some atom has both coordinates strictly positive; exactly then
  /// every lattice moment is strictly positive.
  bool has_strictly_positive_atom() const;

 private:
  AtomicMeasure(std::vector<Atom> atoms, bool require_probability);

  std::vector<Atom> atoms_;
};

/// gamma_k = sum_i rho_i s_i^{k1} t_i^{k2}, with 0^0 = 1.
Rational measure_moment(const AtomicMeasure& mu, LatticePoint k);

/// Diagram whose lattice moments equal the measure's moments exactly:
/// x_k = gamma_{k+e1}/gamma_k, y_k = gamma_{k+e2}/gamma_k. Rejects measures
/// with a zero moment on the window (that would force a zero weight).
WeightDiagram shift_from_measure(const AtomicMeasure& mu, Window w = kDefaultWindow);

/// Measure-backed tail for a diagram with the given Berger measure.
std::shared_ptr<const TailModel> measure_tail(AtomicMeasure mu);

/// The measure behind a measure-generated diagram, nullptr otherwise.
const AtomicMeasure* measure_behind(const WeightDiagram& d);

/// The three exact sphericality conditions of a 2-atom measure
/// mu = sigma delta_(s,t) + tau delta_(u,v) with s < u, t != v:
///   base  <=> (T1,T2)    spherically quasinormal <=> s+t   = u+v
///   pow21 <=> (T1^2,T2)  spherically quasinormal <=> s^2+t = u^2+v
///   pow12 <=> (T1,T2^2)  spherically quasinormal <=> s+t^2 = u+v^2
struct TwoAtomConditions {
  bool base;
  bool pow21;
  bool pow12;
};

TwoAtomConditions two_atom_conditions(const AtomicMeasure& mu);

/// Two-atom measure with atoms (s,t), (u,v) and densities 1/2 whose powers
/// (T1^2,T2) and (T1,T2^2) are spherically quasinormal while (T1,T2) is not:
///   t = (1 - s^3 - s^2 u + s u^2 + u^3) / (2(s+u)),  v = s^2 + t - u^2.
/// Requires 0 <= s < u and s+u != 1; rejects parameters that drive t or v
/// negative.
AtomicMeasure counterexample_measure(const Rational& s, const Rational& u);

/// mu = (1-x0) delta_(0,1+q) + x0 delta_(1,q), 0 < x0 < 1, q > 0: the 2-atomic
/// Berger measures of shifts that are spherically quasinormal together with
/// their (T1^2,T2) power (row 0 normalized so alpha_(3,0) = 1).
AtomicMeasure pow21_stable_measure(const Rational& x0, const Rational& q);

/// x0 -> 1 limit of the family above: the point mass at (1,q), a constant
/// multiple of the Helton-Howe shift.
AtomicMeasure pow21_stable_point_mass(const Rational& q);

/// (gamma_(0,2) + x0) - (q^2 + 1) for the pow21-stable family; equals
/// 2q(1-x0) exactly and is nonzero iff (T1,T2^2) fails to be spherically
/// quasinormal. x0 = 1 selects the point-mass member (deficit 0).
Rational pow12_deficit(const Rational& x0, const Rational& q);

/// Atoms (s,1-s) and (1-s,s), 0 <= s < 1/2: the family satisfying all three
/// two-atom conditions at once (densities immaterial).
AtomicMeasure symmetric_two_atom_measure(const Rational& s, const Rational& sigma = Rational(1, 2));

/// Berger measure of the restriction of (T1^m, T2^n) to the reducing
/// subspace spanned by e_(m l + p, n k + q): atoms (s^m, t^n) with densities
/// rho s^p t^q / gamma_(p,q), zero-density atoms dropped.
AtomicMeasure restricted_measure(const AtomicMeasure& mu, int m, int n, int p, int q);

}  // namespace shiftlab

#endif
