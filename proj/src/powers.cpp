#include "shiftlab/powers.hpp"

#include <cassert>
#include <string>
#include <utility>

#include "shiftlab/berger.hpp"
#include "shiftlab/classify.hpp"
#include "shiftlab/errors.hpp"

namespace shiftlab {

namespace {

void validate_spec(const PowerSpec& s) {
  if (s.m < 1 || s.n < 1) throw InputError("powers require m, n >= 1");
  if (s.p < 0 || s.p >= s.m || s.q < 0 || s.q >= s.n)
    throw InputError("need 0 <= p < m and 0 <= q < n");
}

}  // namespace

WeightDiagram power_subspace_diagram(const WeightDiagram& d, const PowerSpec& spec) {
  validate_spec(spec);
  {
    PredicateVerdict comm = check_commutative(d);
    if (!comm.holds()) {
      const Witness& w = *comm.witness;
      throw CommutativityError("diagram does not commute at (" + std::to_string(w.k.k1) + "," +
                               std::to_string(w.k.k2) + "): " + w.lhs.str() + " != " + w.rhs.str());
    }
  }
  const int L1 = (d.width() - spec.p) / spec.m;
  const int L2 = (d.height() - spec.q) / spec.n;
  if (L1 < 1 || L2 < 1)
    throw InputError("window " + std::to_string(d.width()) + "x" + std::to_string(d.height()) +
                     " too small for the (" + std::to_string(spec.m) + "," + std::to_string(spec.n) +
                     ") power at (p,q)=(" + std::to_string(spec.p) + "," + std::to_string(spec.q) + ")");

  std::vector<std::vector<Rational>> xs(static_cast<size_t>(L2)), ys(static_cast<size_t>(L2));
  for (int k = 0; k < L2; ++k)
    for (int l = 0; l < L1; ++l) {
      Rational xp(1), yp(1);
      for (int j = 0; j < spec.m; ++j) xp *= d.x({spec.m * l + spec.p + j, spec.n * k + spec.q});
      for (int j = 0; j < spec.n; ++j) yp *= d.y({spec.m * l + spec.p, spec.n * k + spec.q + j});
      xs[static_cast<size_t>(k)].push_back(std::move(xp));
      ys[static_cast<size_t>(k)].push_back(std::move(yp));
    }

  WeightDiagram out = [&] {
    if (const AtomicMeasure* mu = measure_behind(d)) {
      auto tail = measure_tail(restricted_measure(*mu, spec.m, spec.n, spec.p, spec.q));
#ifndef NDEBUG
      for (int k = 0; k < L2; ++k)
        for (int l = 0; l < L1; ++l) {
          assert(tail->x({l, k}) == xs[static_cast<size_t>(k)][static_cast<size_t>(l)]);
          assert(tail->y({l, k}) == ys[static_cast<size_t>(k)][static_cast<size_t>(l)]);
        }
#endif
      return WeightDiagram(std::move(xs), std::move(ys), TailRule::GeneratorBacked, tail);
    }
    if (auto cp = constant_params_behind(d))
      return generate_constant(cp->x.pow(static_cast<unsigned long>(spec.m)),
                               cp->y.pow(static_cast<unsigned long>(spec.n)), Window{L1, L2});
    return WeightDiagram(std::move(xs), std::move(ys));
  }();

  if (out.width() >= 2 && out.height() >= 2) {
    PredicateVerdict comm = check_commutative(out);
    if (!comm.holds())
      throw Error("internal: power restriction lost commutativity");  // forbidden by construction
  }
  return out;
}

PowerSphericalReport power_spherical_report(const WeightDiagram& d, int m, int n) {
  if (m < 1 || n < 1) throw InputError("powers require m, n >= 1");
  PowerSphericalReport report;
  report.m = m;
  report.n = n;
  report.all_hold = true;
  report.constants_coincide = true;
  std::optional<Rational> c_ref;
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < n; ++q) {
      WeightDiagram sub = power_subspace_diagram(d, {m, n, p, q});
      PredicateVerdict v = is_spherically_quasinormal(sub);
      if (!v.holds()) report.all_hold = false;
      if (v.constant) {
        if (!c_ref) c_ref = v.constant;
        else if (*c_ref != *v.constant) report.constants_coincide = false;
      }
      report.cells.push_back({p, q, std::move(v)});
    }
  if (!report.all_hold) report.constants_coincide = false;
  if (report.all_hold && report.constants_coincide) report.common_constant = c_ref;
  return report;
}

}  // namespace shiftlab
