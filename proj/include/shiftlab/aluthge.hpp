#ifndef SHIFTLAB_ALUTHGE_HPP
#define SHIFTLAB_ALUTHGE_HPP

#include <vector>

#include "shiftlab/bigfloat.hpp"
#include "shiftlab/lattice.hpp"

namespace shiftlab {

enum class TransformKind { Toral, Spherical };

/// Squared weights evaluated in high-precision binary floating point. The
/// transforms generally produce irrational weights (square and fourth roots
/// of rationals), so transform outputs live here; every decision predicate
/// stays exact on the rational side.
class NumericDiagram {
 public:
  NumericDiagram(std::vector<std::vector<BigFloat>> x_rows,
                 std::vector<std::vector<BigFloat>> y_rows, unsigned precision);

  Window window() const { return {width_, height_}; }
  int width() const { return width_; }
  int height() const { return height_; }
  unsigned precision() const { return prec_; }

  const BigFloat& x(LatticePoint k) const;
  const BigFloat& y(LatticePoint k) const;

 private:
  std::vector<std::vector<BigFloat>> x_;
  std::vector<std::vector<BigFloat>> y_;
  int width_;
  int height_;
  unsigned prec_;
};

/// Rounds the diagram's weights to the given precision. A zero window keeps
/// the diagram's own window; a larger one needs a total tail.
NumericDiagram to_numeric(const WeightDiagram& d, unsigned precision = kDefaultPrecision,
                          Window w = {0, 0});

/// x'_k = sqrt(x_k x_{k+e1}), y'_k = sqrt(y_k y_{k+e2}). The window shrinks
/// by one in each direction unless the tail extends the diagram.
NumericDiagram toral_transform(const WeightDiagram& d, unsigned precision = kDefaultPrecision);
NumericDiagram toral_transform(const NumericDiagram& d);

/// x'_k = x_k sqrt(S_{k+e1}/S_k), y'_k = y_k sqrt(S_{k+e2}/S_k) with
/// S_k = x_k + y_k (the squared weights of the spherical transform).
NumericDiagram spherical_transform(const WeightDiagram& d, unsigned precision = kDefaultPrecision);
NumericDiagram spherical_transform(const NumericDiagram& d);

/// Exact test of x_{k+e2} x_{k+e1+e2} = x_{k+e1} x_{k+2e2}: the toral
/// transform of a commuting diagram commutes iff this holds.
PredicateVerdict toral_transform_commutes(const WeightDiagram& d);

/// Exact fixed-point test for the toral transform: x constant along e1 and
/// y constant along e2.
PredicateVerdict is_toral_fixed_point(const WeightDiagram& d);

/// Exact fixed-point test for the spherical transform; coincides with
/// spherical quasinormality, so it delegates to that predicate.
PredicateVerdict is_spherical_fixed_point(const WeightDiagram& d);

/// Exact test of x_{k+e1} = x_{k+e2} and y_{k+e2} = y_{k+e1}: precisely when
/// the toral and spherical transforms agree.
PredicateVerdict transforms_agree(const WeightDiagram& d);

/// max over the common window of |a-b|/max(|a|,|b|), across both weight
/// grids.
BigFloat max_relative_deviation(const NumericDiagram& a, const NumericDiagram& b);

/// Largest relative commutator residual |y_{k+e1} x_k - x_{k+e2} y_k| scaled
/// by the larger side.
BigFloat commutativity_residual(const NumericDiagram& d);

/// Relative distance between the diagram and its spherical transform —
/// numeric cross-check for the exact fixed-point predicate.
BigFloat spherical_fixed_point_deviation(const WeightDiagram& d,
                                         unsigned precision = kDefaultPrecision);

struct IterationTrace {
  TransformKind kind = TransformKind::Toral;
  unsigned precision = kDefaultPrecision;
  int requested = 0;
  bool window_exhausted = false;
  std::vector<NumericDiagram> steps;  // steps[0] is the numeric input
  std::vector<BigFloat> deltas;       // deltas[i]: step i -> i+1 sup-distance
};

/// Applies the chosen transform repeatedly, recording per-step sup-norm
/// deltas on the common window. When the window runs out before `steps`
/// transforms, the trace reports the last valid step.
IterationTrace iterate(const WeightDiagram& d, TransformKind kind, int steps,
                       unsigned precision = kDefaultPrecision);

}  // namespace shiftlab

#endif
