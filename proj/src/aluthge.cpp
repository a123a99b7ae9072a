#include "shiftlab/aluthge.hpp"

#include <cassert>
#include <utility>

#include "shiftlab/classify.hpp"
#include "shiftlab/errors.hpp"

namespace shiftlab {

NumericDiagram::NumericDiagram(std::vector<std::vector<BigFloat>> x_rows,
                               std::vector<std::vector<BigFloat>> y_rows, unsigned precision)
    : x_(std::move(x_rows)), y_(std::move(y_rows)), prec_(precision) {
  if (x_.empty() || x_[0].empty()) throw InputError("numeric diagram window must be at least 1x1");
  if (y_.size() != x_.size()) throw InputError("x and y grids disagree in height");
  height_ = static_cast<int>(x_.size());
  width_ = static_cast<int>(x_[0].size());
  for (const auto& grid : {std::cref(x_), std::cref(y_)})
    for (const auto& row : grid.get())
      if (static_cast<int>(row.size()) != width_) throw InputError("numeric diagram rows are ragged");
}

const BigFloat& NumericDiagram::x(LatticePoint k) const {
  if (k.k1 < 0 || k.k2 < 0 || k.k1 >= width_ || k.k2 >= height_)
    throw InputError("numeric diagram access outside the window");
  return x_[static_cast<size_t>(k.k2)][static_cast<size_t>(k.k1)];
}

const BigFloat& NumericDiagram::y(LatticePoint k) const {
  if (k.k1 < 0 || k.k2 < 0 || k.k1 >= width_ || k.k2 >= height_)
    throw InputError("numeric diagram access outside the window");
  return y_[static_cast<size_t>(k.k2)][static_cast<size_t>(k.k1)];
}

namespace {

void require_precision(unsigned precision) {
  if (precision < kMinPrecision)
    throw InputError("precision must be at least " + std::to_string(kMinPrecision) + " bits");
}

template <typename XF, typename YF>
NumericDiagram build_numeric(Window w, unsigned precision, XF&& fx, YF&& fy) {
  std::vector<std::vector<BigFloat>> xs, ys;
  xs.reserve(static_cast<size_t>(w.n2));
  ys.reserve(static_cast<size_t>(w.n2));
  for (int k2 = 0; k2 < w.n2; ++k2) {
    std::vector<BigFloat> xr, yr;
    xr.reserve(static_cast<size_t>(w.n1));
    yr.reserve(static_cast<size_t>(w.n1));
    for (int k1 = 0; k1 < w.n1; ++k1) {
      xr.push_back(fx(LatticePoint{k1, k2}));
      yr.push_back(fy(LatticePoint{k1, k2}));
    }
    xs.push_back(std::move(xr));
    ys.push_back(std::move(yr));
  }
  return NumericDiagram(std::move(xs), std::move(ys), precision);
}

Window transform_window(const WeightDiagram& d) {
  if (d.tail_total()) return d.window();
  Window w{d.width() - 1, d.height() - 1};
  if (w.n1 < 1 || w.n2 < 1)
    throw InputError("window too small for a transform (needs 2x2 without a total tail)");
  return w;
}

}  // namespace

NumericDiagram to_numeric(const WeightDiagram& d, unsigned precision, Window w) {
  require_precision(precision);
  if (w.n1 == 0 || w.n2 == 0) w = d.window();
  return build_numeric(
      w, precision,
      [&](LatticePoint k) { return BigFloat::from_rational(d.x(k), precision); },
      [&](LatticePoint k) { return BigFloat::from_rational(d.y(k), precision); });
}

NumericDiagram toral_transform(const WeightDiagram& d, unsigned precision) {
  require_precision(precision);
  // products are formed exactly in Q, so each output is one correctly
  // rounded square root
  return build_numeric(
      transform_window(d), precision,
      [&](LatticePoint k) {
        return BigFloat::from_rational(d.x(k) * d.x(k + kEps1), precision).sqrt();
      },
      [&](LatticePoint k) {
        return BigFloat::from_rational(d.y(k) * d.y(k + kEps2), precision).sqrt();
      });
}

NumericDiagram toral_transform(const NumericDiagram& d) {
  Window w{d.width() - 1, d.height() - 1};
  if (w.n1 < 1 || w.n2 < 1) throw InputError("numeric window too small for a transform");
  return build_numeric(
      w, d.precision(),
      [&](LatticePoint k) { return (d.x(k) * d.x(k + kEps1)).sqrt(); },
      [&](LatticePoint k) { return (d.y(k) * d.y(k + kEps2)).sqrt(); });
}

NumericDiagram spherical_transform(const WeightDiagram& d, unsigned precision) {
  require_precision(precision);
  auto S = [&](LatticePoint k) { return d.x(k) + d.y(k); };
  return build_numeric(
      transform_window(d), precision,
      [&](LatticePoint k) {
        return BigFloat::from_rational(d.x(k).pow(2) * S(k + kEps1) / S(k), precision).sqrt();
      },
      [&](LatticePoint k) {
        return BigFloat::from_rational(d.y(k).pow(2) * S(k + kEps2) / S(k), precision).sqrt();
      });
}

NumericDiagram spherical_transform(const NumericDiagram& d) {
  Window w{d.width() - 1, d.height() - 1};
  if (w.n1 < 1 || w.n2 < 1) throw InputError("numeric window too small for a transform");
  auto S = [&](LatticePoint k) { return d.x(k) + d.y(k); };
  return build_numeric(
      w, d.precision(),
      [&](LatticePoint k) { return d.x(k) * (S(k + kEps1) / S(k)).sqrt(); },
      [&](LatticePoint k) { return d.y(k) * (S(k + kEps2) / S(k)).sqrt(); });
}

PredicateVerdict toral_transform_commutes(const WeightDiagram& d) {
  PointCheck check{PredicateId::ToralCommutes, 1, 2,
                   [](const WeightDiagram& dd, LatticePoint k) -> std::optional<Witness> {
                     Rational lhs = dd.x(k + kEps2) * dd.x(k + kEps1 + kEps2);
                     Rational rhs = dd.x(k + kEps1) * dd.x(k + LatticePoint{0, 2});
                     if (lhs != rhs) return Witness{k, lhs, rhs};
                     return std::nullopt;
                   }};
  return scan_predicate(d, check);
}

PredicateVerdict is_toral_fixed_point(const WeightDiagram& d) {
  PointCheck x_rows{PredicateId::ToralFixed, 1, 0,
                    [](const WeightDiagram& dd, LatticePoint k) -> std::optional<Witness> {
                      Rational lhs = dd.x(k + kEps1);
                      Rational rhs = dd.x(k);
                      if (lhs != rhs) return Witness{k, lhs, rhs};
                      return std::nullopt;
                    }};
  PointCheck y_cols{PredicateId::ToralFixed, 0, 1,
                    [](const WeightDiagram& dd, LatticePoint k) -> std::optional<Witness> {
                      Rational lhs = dd.y(k + kEps2);
                      Rational rhs = dd.y(k);
                      if (lhs != rhs) return Witness{k, lhs, rhs};
                      return std::nullopt;
                    }};
  PredicateVerdict vx = scan_predicate(d, x_rows);
  if (!vx.holds()) return vx;
  PredicateVerdict vy = scan_predicate(d, y_cols);
  if (!vy.holds()) return vy;
  PredicateVerdict out;
  out.status = (vx.everywhere() && vy.everywhere()) ? VerdictStatus::HoldsEverywhere
                                                    : VerdictStatus::HoldsOnWindow;
  return out;
}

PredicateVerdict is_spherical_fixed_point(const WeightDiagram& d) {
  PredicateVerdict v = is_spherically_quasinormal(d);
  v.note = "exact fixed-point identity of the spherical transform; "
           "subnormality of the pair is not verified";
#ifndef NDEBUG
  if (d.width() >= 2 && d.height() >= 2) {
    BigFloat dev = spherical_fixed_point_deviation(d, kDefaultPrecision);
    BigFloat tol = BigFloat::pow2(-static_cast<long>(kDefaultPrecision) / 2, kDefaultPrecision);
    assert(v.holds() ? dev < tol : dev > tol);
  }
#endif
  return v;
}

PredicateVerdict transforms_agree(const WeightDiagram& d) {
  PointCheck x_part{PredicateId::TransformsAgree, 1, 1,
                    [](const WeightDiagram& dd, LatticePoint k) -> std::optional<Witness> {
                      Rational lhs = dd.x(k + kEps1);
                      Rational rhs = dd.x(k + kEps2);
                      if (lhs != rhs) return Witness{k, lhs, rhs};
                      return std::nullopt;
                    }};
  PointCheck y_part{PredicateId::TransformsAgree, 1, 1,
                    [](const WeightDiagram& dd, LatticePoint k) -> std::optional<Witness> {
                      Rational lhs = dd.y(k + kEps2);
                      Rational rhs = dd.y(k + kEps1);
                      if (lhs != rhs) return Witness{k, lhs, rhs};
                      return std::nullopt;
                    }};
  PredicateVerdict vx = scan_predicate(d, x_part);
  if (!vx.holds()) return vx;
  PredicateVerdict vy = scan_predicate(d, y_part);
  if (!vy.holds()) return vy;
  PredicateVerdict out;
  out.status = (vx.everywhere() && vy.everywhere()) ? VerdictStatus::HoldsEverywhere
                                                    : VerdictStatus::HoldsOnWindow;
  return out;
}

BigFloat max_relative_deviation(const NumericDiagram& a, const NumericDiagram& b) {
  int n1 = std::min(a.width(), b.width());
  int n2 = std::min(a.height(), b.height());
  BigFloat best(std::max(a.precision(), b.precision()));
  for (int k2 = 0; k2 < n2; ++k2)
    for (int k1 = 0; k1 < n1; ++k1) {
      LatticePoint k{k1, k2};
      BigFloat dx = relative_deviation(a.x(k), b.x(k));
      BigFloat dy = relative_deviation(a.y(k), b.y(k));
      if (dx > best) best = dx;
      if (dy > best) best = dy;
    }
  return best;
}

BigFloat commutativity_residual(const NumericDiagram& d) {
  BigFloat best(d.precision());
  for (int k2 = 0; k2 + 1 < d.height(); ++k2)
    for (int k1 = 0; k1 + 1 < d.width(); ++k1) {
      LatticePoint k{k1, k2};
      BigFloat lhs = d.y(k + kEps1) * d.x(k);
      BigFloat rhs = d.x(k + kEps2) * d.y(k);
      BigFloat r = relative_deviation(lhs, rhs);
      if (r > best) best = r;
    }
  return best;
}

BigFloat spherical_fixed_point_deviation(const WeightDiagram& d, unsigned precision) {
  NumericDiagram transformed = spherical_transform(d, precision);
  NumericDiagram original = to_numeric(d, precision, transformed.window());
  return max_relative_deviation(transformed, original);
}

IterationTrace iterate(const WeightDiagram& d, TransformKind kind, int steps, unsigned precision) {
  require_precision(precision);
  if (steps < 1) throw InputError("iteration needs at least one step");
  IterationTrace trace;
  trace.kind = kind;
  trace.precision = precision;
  trace.requested = steps;
  Window start = d.window();
  if (d.tail_total()) start = {start.n1 + steps, start.n2 + steps};
  trace.steps.push_back(to_numeric(d, precision, start));
  for (int i = 0; i < steps; ++i) {
    const NumericDiagram& cur = trace.steps.back();
    if (cur.width() < 2 || cur.height() < 2) {
      trace.window_exhausted = true;
      break;
    }
    NumericDiagram next = kind == TransformKind::Toral ? toral_transform(cur)
                                                       : spherical_transform(cur);
    trace.deltas.push_back(max_relative_deviation(next, cur));
    trace.steps.push_back(std::move(next));
  }
  return trace;
}

}  // namespace shiftlab
