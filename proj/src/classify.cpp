#include "shiftlab/classify.hpp"

#include <cassert>
#include <map>
#include <memory>
#include <utility>

#include "shiftlab/aluthge.hpp"
#include "shiftlab/errors.hpp"

namespace shiftlab {

namespace {

VerdictStatus weaker(VerdictStatus a, VerdictStatus b) {
  if (a == VerdictStatus::Violated || b == VerdictStatus::Violated) return VerdictStatus::Violated;
  if (a == VerdictStatus::HoldsOnWindow || b == VerdictStatus::HoldsOnWindow)
    return VerdictStatus::HoldsOnWindow;
  return VerdictStatus::HoldsEverywhere;
}

/// First violated verdict wins; otherwise the weakest status.
PredicateVerdict combine(std::initializer_list<PredicateVerdict> parts) {
  PredicateVerdict out{VerdictStatus::HoldsEverywhere, std::nullopt, std::nullopt, {}};
  for (const auto& v : parts) {
    if (!v.holds()) return v;
    out.status = weaker(out.status, v.status);
  }
  return out;
}

/// Moments along the canonical path, memoized for one scan. Identical by
/// definition to moment(d, k) but without re-verifying commutativity at
/// every probe (the caller guarantees it).
class MomentGrid {
 public:
  explicit MomentGrid(const WeightDiagram& d) : d_(d) {}

  const Rational& at(LatticePoint k) {
    auto key = std::make_pair(k.k1, k.k2);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    Rational g;
    if (k.k1 == 0 && k.k2 == 0) g = Rational(1);
    else if (k.k2 > 0) g = at({k.k1, k.k2 - 1}) * d_.y({k.k1, k.k2 - 1});
    else g = at({k.k1 - 1, 0}) * d_.x({k.k1 - 1, 0});
    return memo_.emplace(key, std::move(g)).first->second;
  }

 private:
  const WeightDiagram& d_;
  std::map<std::pair<int, int>, Rational> memo_;
};

}  // namespace

PredicateVerdict is_spherically_quasinormal(const WeightDiagram& d) {
  Rational c = d.x({0, 0}) + d.y({0, 0});
  PointCheck check{PredicateId::SphericalSum, 0, 0,
                   [c](const WeightDiagram& dd, LatticePoint k) -> std::optional<Witness> {
                     Rational sum = dd.x(k) + dd.y(k);
                     if (sum != c) return Witness{k, sum, c};
                     return std::nullopt;
                   }};
  PredicateVerdict v = scan_predicate(d, check);
  v.constant = c;
  return v;
}

PredicateVerdict spherical_via_moment_criterion(const WeightDiagram& d) {
  Rational c = d.x({0, 0}) + d.y({0, 0});
  auto grid = std::make_shared<MomentGrid>(d);
  PointCheck check{PredicateId::SphericalMoments, 1, 1,
                   [c, grid](const WeightDiagram&, LatticePoint k) -> std::optional<Witness> {
                     Rational lhs = grid->at(k + kEps1) + grid->at(k + kEps2);
                     Rational rhs = c * grid->at(k);
                     if (lhs != rhs) return Witness{k, lhs, rhs};
                     return std::nullopt;
                   }};
  PredicateVerdict v = scan_predicate(d, check);
  v.constant = c;
  return v;
}

PredicateVerdict is_jointly_quasinormal(const WeightDiagram& d) {
  PointCheck row_y{PredicateId::RowConstantY, 1, 0,
                   [](const WeightDiagram& dd, LatticePoint k) -> std::optional<Witness> {
                     Rational lhs = dd.y(k);
                     Rational rhs = dd.y(k + kEps1);
                     if (lhs != rhs) return Witness{k, lhs, rhs};
                     return std::nullopt;
                   }};
  PointCheck col_x{PredicateId::ColConstantX, 0, 1,
                   [](const WeightDiagram& dd, LatticePoint k) -> std::optional<Witness> {
                     Rational lhs = dd.x(k);
                     Rational rhs = dd.x(k + kEps2);
                     if (lhs != rhs) return Witness{k, lhs, rhs};
                     return std::nullopt;
                   }};
  Rational x0 = d.x({0, 0}), y0 = d.y({0, 0});
  PointCheck const_x{PredicateId::ConstantX, 0, 0,
                     [x0](const WeightDiagram& dd, LatticePoint k) -> std::optional<Witness> {
                       Rational v = dd.x(k);
                       if (v != x0) return Witness{k, v, x0};
                       return std::nullopt;
                     }};
  PointCheck const_y{PredicateId::ConstantY, 0, 0,
                     [y0](const WeightDiagram& dd, LatticePoint k) -> std::optional<Witness> {
                       Rational v = dd.y(k);
                       if (v != y0) return Witness{k, v, y0};
                       return std::nullopt;
                     }};
  return combine({scan_predicate(d, row_y), scan_predicate(d, col_x),
                  scan_predicate(d, const_x), scan_predicate(d, const_y)});
}

PredicateVerdict is_matricially_quasinormal(const WeightDiagram&) {
  PredicateVerdict v;
  v.status = VerdictStatus::Violated;
  v.note = "commuting with the mixed products T_j* T_k would make every row shift above row "
           "zero a normal unilateral weighted shift; no normal unilateral weighted shifts exist";
  return v;
}

PredicateVerdict is_coordinatewise_hyponormal(const WeightDiagram& d) {
  PointCheck along_x{PredicateId::Hyponormal, 1, 0,
                     [](const WeightDiagram& dd, LatticePoint k) -> std::optional<Witness> {
                       Rational lo = dd.x(k);
                       Rational hi = dd.x(k + kEps1);
                       if (hi < lo) return Witness{k, hi, lo};
                       return std::nullopt;
                     }};
  PointCheck along_y{PredicateId::Hyponormal, 0, 1,
                     [](const WeightDiagram& dd, LatticePoint k) -> std::optional<Witness> {
                       Rational lo = dd.y(k);
                       Rational hi = dd.y(k + kEps2);
                       if (hi < lo) return Witness{k, hi, lo};
                       return std::nullopt;
                     }};
  PredicateVerdict v = combine({scan_predicate(d, along_x), scan_predicate(d, along_y)});
  if (v.note.empty()) v.note = "necessary for subnormality, not sufficient";
  return v;
}

ClassificationReport classify(const WeightDiagram& d) {
  PredicateVerdict comm = check_commutative(d);
  if (!comm.holds()) {
    const Witness& w = *comm.witness;
    throw CommutativityError("diagram does not commute at (" + std::to_string(w.k.k1) + "," +
                             std::to_string(w.k.k2) + "): " + w.lhs.str() + " != " + w.rhs.str());
  }
  ClassificationReport r;
  r.matricial = is_matricially_quasinormal(d);
  r.joint = is_jointly_quasinormal(d);
  r.spherical = is_spherically_quasinormal(d);
  r.coordinatewise_hyponormal = is_coordinatewise_hyponormal(d);
  r.toral_fixed = is_toral_fixed_point(d);
  r.spherical_fixed = is_spherical_fixed_point(d);
  r.transforms_agree = transforms_agree(d);
  r.subnormal_implied = r.spherical.holds();

  assert(!r.joint.holds() || r.spherical.holds());             // implication chain
  assert(r.spherical_fixed.status == r.spherical.status);      // fixed point <=> spherical
#ifndef NDEBUG
  PredicateVerdict iv = spherical_via_moment_criterion(d);
  assert(iv.holds() == r.spherical.holds());
  assert(iv.constant == r.spherical.constant);
#endif
  return r;
}

std::vector<OneVarShift> onevar_power_components(const OneVarShift& s, int m) {
  if (m < 1) throw InputError("power must be >= 1");
  for (const auto& v : s.w)
    if (!v.positive()) throw InputError("shift weights must be strictly positive");
  const int len = static_cast<int>(s.w.size());
  auto at = [&](int i) -> const Rational& {
    if (i < len) return s.w[static_cast<size_t>(i)];
    if (s.tail == TailRule::ConstantExtension) return s.w.back();
    throw InputError("shift window too small for the requested power");
  };
  std::vector<OneVarShift> out;
  for (int p = 0; p < m; ++p) {
    int count;
    if (s.tail == TailRule::ConstantExtension) {
      // cover up to the first all-clamped product, after which the
      // component is constant
      count = (len - 1 - p + m - 1) / m + 1;
      if (count < 1) count = 1;
    } else {
      count = (len - p) / m;
      if (count < 1)
        throw InputError("shift window too small: component " + std::to_string(p) +
                         " of the power " + std::to_string(m) + " decomposition is empty");
    }
    OneVarShift comp;
    comp.tail = s.tail;
    comp.w.reserve(static_cast<size_t>(count));
    for (int l = 0; l < count; ++l) {
      Rational prod(1);
      for (int j = 0; j < m; ++j) prod *= at(m * l + p + j);
      comp.w.push_back(std::move(prod));
    }
    out.push_back(std::move(comp));
  }
  return out;
}

PredicateVerdict onevar_is_quasinormal(const OneVarShift& s) {
  if (s.w.empty()) throw InputError("shift needs at least one weight");
  for (size_t i = 0; i < s.w.size(); ++i) {
    if (!s.w[i].positive()) throw InputError("shift weights must be strictly positive");
    if (s.w[i] != s.w[0])
      return PredicateVerdict::violated({{static_cast<int>(i), 0}, s.w[i], s.w[0]});
  }
  PredicateVerdict v;
  v.status = s.tail == TailRule::ConstantExtension ? VerdictStatus::HoldsEverywhere
                                                   : VerdictStatus::HoldsOnWindow;
  v.constant = s.w[0];
  return v;
}

}  // namespace shiftlab
