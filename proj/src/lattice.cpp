#include "shiftlab/lattice.hpp"

#include <cassert>
#include <sstream>
#include <utility>

#include "shiftlab/errors.hpp"

namespace shiftlab {

namespace {

std::string point_str(LatticePoint k) {
  std::ostringstream os;
  os << "(" << k.k1 << "," << k.k2 << ")";
  return os.str();
}

void require_positive_window(Window w) {
  if (w.n1 < 1 || w.n2 < 1) throw InputError("diagram window must be at least 1x1");
}

}  // namespace

std::string to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::HoldsOnWindow: return "holds-on-window";
    case VerdictStatus::HoldsEverywhere: return "holds-everywhere";
    case VerdictStatus::Violated: return "violated";
  }
  return "?";
}

WeightDiagram::WeightDiagram(std::vector<std::vector<Rational>> x_rows,
                             std::vector<std::vector<Rational>> y_rows,
                             TailRule tail,
                             std::shared_ptr<const TailModel> generator)
    : x_(std::move(x_rows)), y_(std::move(y_rows)), tail_(tail), gen_(std::move(generator)) {
  if (x_.empty() || x_[0].empty()) throw InputError("diagram window must be at least 1x1");
  if (y_.size() != x_.size()) throw InputError("x and y grids disagree in height");
  height_ = static_cast<int>(x_.size());
  width_ = static_cast<int>(x_[0].size());
  for (int k2 = 0; k2 < height_; ++k2) {
    if (static_cast<int>(x_[k2].size()) != width_ || static_cast<int>(y_[k2].size()) != width_)
      throw InputError("diagram rows are ragged");
    for (int k1 = 0; k1 < width_; ++k1) {
      if (!x_[k2][k1].positive() || !y_[k2][k1].positive())
        throw InputError("weights must be strictly positive (offending point " +
                         point_str({k1, k2}) + ")");
    }
  }
  if (tail_ == TailRule::GeneratorBacked && !gen_)
    throw InputError("generator-backed diagram without a generator");
  if (tail_ != TailRule::GeneratorBacked && gen_)
    throw InputError("generator supplied but tail rule is not generator-backed");
}

bool WeightDiagram::tail_total() const {
  switch (tail_) {
    case TailRule::None: return false;
    case TailRule::ConstantExtension: return true;
    case TailRule::GeneratorBacked: return gen_->total();
  }
  return false;
}

Rational WeightDiagram::x(LatticePoint k) const {
  if (k.k1 < 0 || k.k2 < 0) throw InputError("negative lattice point " + point_str(k));
  if (in_window(k)) return x_[k.k2][k.k1];
  switch (tail_) {
    case TailRule::None:
      throw InputError("access at " + point_str(k) + " outside the window with tail rule 'none'");
    case TailRule::ConstantExtension:
      return x_[std::min(k.k2, height_ - 1)][std::min(k.k1, width_ - 1)];
    case TailRule::GeneratorBacked:
      return gen_->x(k);
  }
  throw InputError("unreachable");
}

Rational WeightDiagram::y(LatticePoint k) const {
  if (k.k1 < 0 || k.k2 < 0) throw InputError("negative lattice point " + point_str(k));
  if (in_window(k)) return y_[k.k2][k.k1];
  switch (tail_) {
    case TailRule::None:
      throw InputError("access at " + point_str(k) + " outside the window with tail rule 'none'");
    case TailRule::ConstantExtension:
      return y_[std::min(k.k2, height_ - 1)][std::min(k.k1, width_ - 1)];
    case TailRule::GeneratorBacked:
      return gen_->y(k);
  }
  throw InputError("unreachable");
}

PredicateVerdict scan_predicate(const WeightDiagram& d, const PointCheck& check) {
  const Window w = d.window();
  const int in1 = w.n1 - check.dk1;
  const int in2 = w.n2 - check.dk2;
  if (in1 <= 0 || in2 <= 0)
    throw InputError("window too small for predicate scan (needs at least " +
                     std::to_string(check.dk1 + 1) + "x" + std::to_string(check.dk2 + 1) + ")");
  auto run = [&](int n1, int n2) -> std::optional<Witness> {
    for (int k2 = 0; k2 < n2; ++k2)
      for (int k1 = 0; k1 < n1; ++k1)
        if (auto bad = check.at(d, {k1, k2})) return bad;
    return std::nullopt;
  };
  if (auto bad = run(in1, in2)) return PredicateVerdict::violated(*bad);
  switch (d.tail_rule()) {
    case TailRule::None:
      return {VerdictStatus::HoldsOnWindow, std::nullopt, std::nullopt, {}};
    case TailRule::ConstantExtension:
      // Offsets clamp to the window edge, so every k in Z+^2 reads the same
      // values as some in-window k: rescanning the full window decides the
      // identity absolutely.
      if (auto bad = run(w.n1, w.n2)) return PredicateVerdict::violated(*bad);
      return {VerdictStatus::HoldsEverywhere, std::nullopt, std::nullopt, {}};
    case TailRule::GeneratorBacked: {
      auto dw = d.generator()->decision_window(check.id);
      if (!dw) return {VerdictStatus::HoldsOnWindow, std::nullopt, std::nullopt, {}};
      if (auto bad = run(dw->n1, dw->n2)) return PredicateVerdict::violated(*bad);
      return {VerdictStatus::HoldsEverywhere, std::nullopt, std::nullopt, {}};
    }
  }
  throw InputError("unreachable");
}

PredicateVerdict check_commutative(const WeightDiagram& d) {
  if (d.width() < 2 || d.height() < 2)
    throw InputError("commutativity check needs a window of at least 2x2");
  PointCheck c{PredicateId::Commutativity, 1, 1,
               [](const WeightDiagram& dd, LatticePoint k) -> std::optional<Witness> {
                 Rational lhs = dd.y(k + kEps1) * dd.x(k);
                 Rational rhs = dd.x(k + kEps2) * dd.y(k);
                 if (lhs != rhs) return Witness{k, lhs, rhs};
                 return std::nullopt;
               }};
  return scan_predicate(d, c);
}

Rational moment(const WeightDiagram& d, LatticePoint k) {
  if (k.k1 < 0 || k.k2 < 0) throw InputError("moment index must be nonnegative");
  for (int b = 0; b < k.k2; ++b) {
    for (int a = 0; a < k.k1; ++a) {
      LatticePoint p{a, b};
      Rational lhs = d.y(p + kEps1) * d.x(p);
      Rational rhs = d.x(p + kEps2) * d.y(p);
      if (lhs != rhs)
        throw CommutativityError("commutativity violated at " + point_str(p) + ": " + lhs.str() +
                                 " != " + rhs.str() + " inside the moment rectangle");
    }
  }
  Rational g(1);
  for (int a = 0; a < k.k1; ++a) g *= d.x({a, 0});
  for (int b = 0; b < k.k2; ++b) g *= d.y({k.k1, b});
#ifndef NDEBUG
  Rational h(1);
  for (int b = 0; b < k.k2; ++b) h *= d.y({0, b});
  for (int a = 0; a < k.k1; ++a) h *= d.x({a, k.k2});
  assert(g == h && "moment path-independence");
#endif
  return g;
}

// ---------------------------------------------------------------------------
// generators

namespace {

class ConstantTail final : public TailModel {
 public:
  ConstantTail(Rational xv, Rational yv) : x_(std::move(xv)), y_(std::move(yv)) {}
  Rational x(LatticePoint) const override { return x_; }
  Rational y(LatticePoint) const override { return y_; }
  bool total() const override { return true; }
  std::optional<Window> decision_window(PredicateId) const override { return Window{2, 2}; }
  std::string kind() const override { return "constant"; }

 private:
  Rational x_;
  Rational y_;
};

class FlatTail final : public TailModel {
 public:
  FlatTail(Rational a, Rational y00, Rational C)
      : a_(std::move(a)), y00_(std::move(y00)), c_(std::move(C)), total_(y00_ <= c_ - a_) {}

  Rational x(LatticePoint k) const override { return k.k2 >= 1 ? a_ : c_ - row0_y(k.k1); }
  Rational y(LatticePoint k) const override { return k.k2 >= 1 ? c_ - a_ : row0_y(k.k1); }
  bool total() const override { return total_; }

  std::optional<Window> decision_window(PredicateId id) const override {
    if (!total_) return std::nullopt;
    switch (id) {
      case PredicateId::Commutativity:
      case PredicateId::SphericalSum:
      case PredicateId::SphericalMoments:
      case PredicateId::Hyponormal:
        // Hold by construction: x + y = C everywhere and row 0 is the
        // commutativity-forced orbit, monotone when y00 <= C - a.
        return Window{2, 2};
      default:
        // Every remaining identity forces the orbit to sit at its fixed
        // point y = C - a; a non-constant orbit shows a witness at the
        // origin, inside a 3x3 corner.
        return Window{3, 3};
    }
  }
  std::string kind() const override { return "flat_above_row_zero"; }

  const Rational& a() const { return a_; }
  const Rational& y00() const { return y00_; }
  const Rational& C() const { return c_; }

  Rational row0_y(int k1) const {
    Rational y = y00_;
    for (int i = 0; i < k1; ++i) {
      y = a_ * y / (c_ - y);
      if (!(y.positive() && y < c_))
        throw InputError("row-0 recurrence escaped (0, C) at column " + std::to_string(i + 1));
    }
    return y;
  }

 private:
  Rational a_;
  Rational y00_;
  Rational c_;
  bool total_;
};

class TSTail final : public TailModel {
 public:
  TSTail(std::vector<Rational> row, Rational y00, RowTail tail)
      : row_(std::move(row)), y00_(std::move(y00)), const_tail_(tail == RowTail::Constant) {}

  Rational x(LatticePoint k) const override { return r(k.k1 + k.k2); }
  Rational y(LatticePoint k) const override { return r(k.k1 + k.k2) * y00_ / row_[0]; }
  bool total() const override { return const_tail_; }

  std::optional<Window> decision_window(PredicateId id) const override {
    if (!const_tail_) return std::nullopt;
    switch (id) {
      case PredicateId::Commutativity:
      case PredicateId::TransformsAgree:
      case PredicateId::ToralCommutes:
        // Hold by construction for any row: both sides reduce to values of
        // the row sequence at the same indices.
        return Window{2, 2};
      default: {
        // x and y depend on k only through the diagonal index k1+k2, so a
        // scan reaching past the explicit row (into the constant tail)
        // exercises every value the identity can ever see.
        int n = static_cast<int>(row_.size()) + 3;
        return Window{n, 3};
      }
    }
  }
  std::string kind() const override { return "ts"; }

  const std::vector<Rational>& row() const { return row_; }
  const Rational& y00() const { return y00_; }
  bool constant_tail() const { return const_tail_; }

 private:
  Rational r(int j) const {
    if (j < static_cast<int>(row_.size())) return row_[static_cast<size_t>(j)];
    if (const_tail_) return row_.back();
    throw InputError("TS row index " + std::to_string(j) + " beyond the supplied row with tail rule 'none'");
  }

  std::vector<Rational> row_;
  Rational y00_;
  bool const_tail_;
};

WeightDiagram materialize(Window w, const std::shared_ptr<const TailModel>& gen) {
  std::vector<std::vector<Rational>> xs(static_cast<size_t>(w.n2)),
      ys(static_cast<size_t>(w.n2));
  for (int k2 = 0; k2 < w.n2; ++k2) {
    xs[static_cast<size_t>(k2)].reserve(static_cast<size_t>(w.n1));
    ys[static_cast<size_t>(k2)].reserve(static_cast<size_t>(w.n1));
    for (int k1 = 0; k1 < w.n1; ++k1) {
      xs[static_cast<size_t>(k2)].push_back(gen->x({k1, k2}));
      ys[static_cast<size_t>(k2)].push_back(gen->y({k1, k2}));
    }
  }
  return WeightDiagram(std::move(xs), std::move(ys), TailRule::GeneratorBacked, gen);
}

}  // namespace

WeightDiagram with_window(const WeightDiagram& d, Window w) {
  require_positive_window(w);
  std::vector<std::vector<Rational>> xs(static_cast<size_t>(w.n2)), ys(static_cast<size_t>(w.n2));
  for (int k2 = 0; k2 < w.n2; ++k2)
    for (int k1 = 0; k1 < w.n1; ++k1) {
      xs[static_cast<size_t>(k2)].push_back(d.x({k1, k2}));
      ys[static_cast<size_t>(k2)].push_back(d.y({k1, k2}));
    }
  return WeightDiagram(std::move(xs), std::move(ys), d.tail_rule(), d.generator());
}

WeightDiagram generate_flat_above_row_zero(const Rational& a, const Rational& y00,
                                           const Rational& C, Window w) {
  require_positive_window(w);
  if (!(a.positive() && a < C))
    throw InputError("flat_above_row_zero requires 0 < a < C, got a=" + a.str() + ", C=" + C.str());
  if (!(y00.positive() && y00 < C))
    throw InputError("flat_above_row_zero requires 0 < y00 < C, got y00=" + y00.str());
  auto gen = std::make_shared<FlatTail>(a, y00, C);
  return materialize(w, gen);  // forces the row-0 orbit over the window; escapes throw here
}

WeightDiagram generate_constant(const Rational& r1_sq, const Rational& r2_sq, Window w) {
  require_positive_window(w);
  if (!r1_sq.positive() || !r2_sq.positive())
    throw InputError("constant diagram requires strictly positive squared weights");
  return materialize(w, std::make_shared<ConstantTail>(r1_sq, r2_sq));
}

std::optional<FlatParams> flat_params_behind(const WeightDiagram& d) {
  if (auto* t = dynamic_cast<const FlatTail*>(d.generator().get()))
    return FlatParams{t->a(), t->y00(), t->C()};
  return std::nullopt;
}

std::optional<ConstantParams> constant_params_behind(const WeightDiagram& d) {
  if (auto* t = dynamic_cast<const ConstantTail*>(d.generator().get()))
    return ConstantParams{t->x({0, 0}), t->y({0, 0})};
  return std::nullopt;
}

std::optional<TSParams> ts_params_behind(const WeightDiagram& d) {
  if (auto* t = dynamic_cast<const TSTail*>(d.generator().get()))
    return TSParams{t->row(), t->y00(), t->constant_tail() ? RowTail::Constant : RowTail::None};
  return std::nullopt;
}

WeightDiagram generate_TS(std::vector<Rational> row0_x, const Rational& y00, Window w,
                          RowTail row_tail) {
  require_positive_window(w);
  if (row0_x.empty()) throw InputError("TS diagram requires a nonempty 0-th row");
  for (const auto& v : row0_x)
    if (!v.positive()) throw InputError("TS row entries must be strictly positive");
  if (!y00.positive()) throw InputError("TS diagram requires y00 > 0");
  if (row_tail == RowTail::None &&
      static_cast<int>(row0_x.size()) < w.n1 + w.n2 - 1)
    throw InputError("TS row of length " + std::to_string(row0_x.size()) +
                     " cannot fill a " + std::to_string(w.n1) + "x" + std::to_string(w.n2) +
                     " window with tail rule 'none'");
  return materialize(w, std::make_shared<TSTail>(std::move(row0_x), y00, row_tail));
}

}  // namespace shiftlab
