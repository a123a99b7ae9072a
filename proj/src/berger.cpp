#include "shiftlab/berger.hpp"

#include <algorithm>
#include <cassert>
#include <string>
#include <utility>

#include "shiftlab/errors.hpp"

namespace shiftlab {

namespace {

std::string point_str(LatticePoint k) {
  return "(" + std::to_string(k.k1) + "," + std::to_string(k.k2) + ")";
}

bool atom_less(const Atom& a, const Atom& b) {
  if (a.s != b.s) return a.s < b.s;
  return a.t < b.t;
}

}  // namespace

AtomicMeasure::AtomicMeasure(std::vector<Atom> atoms, bool require_probability)
    : atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw InputError("measure needs at least one atom");
  for (const auto& a : atoms_) {
    if (a.s.sign() < 0 || a.t.sign() < 0)
      throw InputError("atoms must lie in the nonnegative quadrant");
    if (!a.rho.positive()) throw InputError("atom densities must be strictly positive");
  }
  std::sort(atoms_.begin(), atoms_.end(), atom_less);
  for (size_t i = 1; i < atoms_.size(); ++i)
    if (atoms_[i - 1].s == atoms_[i].s && atoms_[i - 1].t == atoms_[i].t)
      throw InputError("atoms must be pairwise distinct");
  if (require_probability && !is_probability())
    throw InputError("atom densities must sum to 1, got " + total_mass().str());
}

Rational AtomicMeasure::total_mass() const {
  Rational m(0);
  for (const auto& a : atoms_) m += a.rho;
  return m;
}

bool AtomicMeasure::has_strictly_positive_atom() const {
  for (const auto& a : atoms_)
    if (a.s.positive() && a.t.positive()) return true;
  return false;
}

Rational measure_moment(const AtomicMeasure& mu, LatticePoint k) {
  if (k.k1 < 0 || k.k2 < 0) throw InputError("moment index must be nonnegative");
  Rational g(0);
  for (const auto& a : mu.atoms())
    g += a.rho * a.s.pow(static_cast<unsigned long>(k.k1)) * a.t.pow(static_cast<unsigned long>(k.k2));
  return g;
}

namespace {

class MeasureTail final : public TailModel {
 public:
  explicit MeasureTail(AtomicMeasure mu) : mu_(std::move(mu)), total_(mu_.has_strictly_positive_atom()) {}

  Rational x(LatticePoint k) const override {
    return ratio(measure_moment(mu_, k + kEps1), k);
  }
  Rational y(LatticePoint k) const override {
    return ratio(measure_moment(mu_, k + kEps2), k);
  }
  bool total() const override { return total_; }

  std::optional<Window> decision_window(PredicateId id) const override {
    if (!total_) return std::nullopt;
    // An identity of degree g in the moments is a vanishing statement for a
    // signed atomic measure with at most d^g distinct product atoms, so it
    // holds for all k iff it holds on the grid {0,...,d^g-1}^2.
    const int d = static_cast<int>(mu_.size());
    int degree = 1;
    switch (id) {
      case PredicateId::Commutativity:
      case PredicateId::Hyponormal:
        // Moments are path-independent by definition, and measure-generated
        // shifts are subnormal, hence coordinatewise hyponormal.
        return Window{2, 2};
      case PredicateId::SphericalSum:
      case PredicateId::SphericalMoments:
      case PredicateId::ConstantX:
      case PredicateId::ConstantY:
        degree = 1;
        break;
      case PredicateId::RowConstantY:
      case PredicateId::ColConstantX:
      case PredicateId::ToralFixed:
      case PredicateId::TransformsAgree:
        degree = 2;
        break;
      case PredicateId::ToralCommutes:
        degree = 3;
        break;
    }
    int side = 1;
    for (int i = 0; i < degree; ++i) side *= d;
    return Window{std::max(side, 2), std::max(side, 2)};
  }
  std::string kind() const override { return "from_measure"; }

  const AtomicMeasure& measure() const { return mu_; }

 private:
  Rational ratio(Rational num, LatticePoint k) const {
    Rational den = measure_moment(mu_, k);
    if (den.is_zero())
      throw InputError("zero moment at " + point_str(k) + " — weight undefined");
    if (num.is_zero())
      throw InputError("zero moment adjacent to " + point_str(k) + " — would force a zero weight");
    return num / den;
  }

  AtomicMeasure mu_;
  bool total_;
};

}  // namespace

std::shared_ptr<const TailModel> measure_tail(AtomicMeasure mu) {
  return std::make_shared<MeasureTail>(std::move(mu));
}

const AtomicMeasure* measure_behind(const WeightDiagram& d) {
  auto* tail = dynamic_cast<const MeasureTail*>(d.generator().get());
  return tail ? &tail->measure() : nullptr;
}

WeightDiagram shift_from_measure(const AtomicMeasure& mu, Window w) {
  if (!mu.is_probability())
    throw InputError("shift_from_measure needs a probability measure (total mass " +
                     mu.total_mass().str() + ")");
  if (w.n1 < 1 || w.n2 < 1) throw InputError("diagram window must be at least 1x1");
  for (int k2 = 0; k2 <= w.n2; ++k2)
    for (int k1 = 0; k1 <= w.n1; ++k1)
      if (measure_moment(mu, {k1, k2}).is_zero())
        throw InputError("measure has zero moment at " + point_str({k1, k2}) +
                         " — cannot represent a shift on a " + std::to_string(w.n1) + "x" +
                         std::to_string(w.n2) + " window");
  auto gen = measure_tail(mu);
  std::vector<std::vector<Rational>> xs(static_cast<size_t>(w.n2)), ys(static_cast<size_t>(w.n2));
  for (int k2 = 0; k2 < w.n2; ++k2)
    for (int k1 = 0; k1 < w.n1; ++k1) {
      xs[static_cast<size_t>(k2)].push_back(gen->x({k1, k2}));
      ys[static_cast<size_t>(k2)].push_back(gen->y({k1, k2}));
    }
  return WeightDiagram(std::move(xs), std::move(ys), TailRule::GeneratorBacked, gen);
}

TwoAtomConditions two_atom_conditions(const AtomicMeasure& mu) {
  if (mu.size() != 2)
    throw InputError("two-atom conditions need exactly 2 atoms, got " + std::to_string(mu.size()));
  const Atom& lo = mu.atoms()[0];  // atoms are (s,t)-sorted
  const Atom& hi = mu.atoms()[1];
  if (lo.s == hi.s) throw InputError("two-atom conditions require s < u");
  if (lo.t == hi.t) throw InputError("two-atom conditions require t != v");
  const Rational &s = lo.s, &t = lo.t, &u = hi.s, &v = hi.t;
  return {s + t == u + v, s * s + t == u * u + v, s + t * t == u + v * v};
}

AtomicMeasure counterexample_measure(const Rational& s, const Rational& u) {
  if (s.sign() < 0 || !(s < u)) throw InputError("counterexample requires 0 <= s < u");
  if (s + u == Rational(1))
    throw InputError("counterexample degenerates when s + u = 1 (the base condition would hold)");
  Rational t = (Rational(1) - s.pow(3) - s * s * u + s * u * u + u.pow(3)) / (Rational(2) * (s + u));
  Rational v = s * s + t - u * u;
  if (t.sign() < 0) throw InputError("parameters give t = " + t.str() + " < 0");
  if (v.sign() < 0) throw InputError("parameters give v = " + v.str() + " < 0");
  if (t == v) throw InputError("parameters give t = v, a degenerate pair");
  return AtomicMeasure({{s, t, Rational(1, 2)}, {u, v, Rational(1, 2)}});
}

AtomicMeasure pow21_stable_measure(const Rational& x0, const Rational& q) {
  if (!(x0.positive() && x0 < Rational(1)))
    throw InputError("pow21-stable family requires 0 < x0 < 1 (x0 = 1 is the point-mass member)");
  if (!q.positive()) throw InputError("pow21-stable family requires q > 0");
  return AtomicMeasure({{Rational(0), Rational(1) + q, Rational(1) - x0}, {Rational(1), q, x0}});
}

AtomicMeasure pow21_stable_point_mass(const Rational& q) {
  if (!q.positive()) throw InputError("point-mass member requires q > 0");
  return AtomicMeasure({{Rational(1), q, Rational(1)}});
}

Rational pow12_deficit(const Rational& x0, const Rational& q) {
  AtomicMeasure mu = (x0 == Rational(1)) ? pow21_stable_point_mass(q) : pow21_stable_measure(x0, q);
  Rational pb = measure_moment(mu, {0, 2});
  return pb + x0 - (q * q + Rational(1));
}

AtomicMeasure symmetric_two_atom_measure(const Rational& s, const Rational& sigma) {
  if (s.sign() < 0 || !(s < Rational(1, 2)))
    throw InputError("symmetric family requires 0 <= s < 1/2");
  if (!(sigma.positive() && sigma < Rational(1)))
    throw InputError("symmetric family requires 0 < sigma < 1");
  Rational one(1);
  return AtomicMeasure({{s, one - s, sigma}, {one - s, s, one - sigma}});
}

AtomicMeasure restricted_measure(const AtomicMeasure& mu, int m, int n, int p, int q) {
  if (m < 1 || n < 1) throw InputError("powers require m, n >= 1");
  if (p < 0 || p >= m || q < 0 || q >= n) throw InputError("need 0 <= p < m and 0 <= q < n");
  Rational gpq = measure_moment(mu, {p, q});
  if (gpq.is_zero())
    throw InputError("restriction has zero mass: gamma_" + point_str({p, q}) + " = 0");
  std::vector<Atom> atoms;
  for (const auto& a : mu.atoms()) {
    Rational rho = a.rho * a.s.pow(static_cast<unsigned long>(p)) *
                   a.t.pow(static_cast<unsigned long>(q)) / gpq;
    if (rho.is_zero()) continue;
    atoms.push_back({a.s.pow(static_cast<unsigned long>(m)),
                     a.t.pow(static_cast<unsigned long>(n)), rho});
  }
  assert(!atoms.empty());
  return AtomicMeasure(std::move(atoms));
}

}  // namespace shiftlab
