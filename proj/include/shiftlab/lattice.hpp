#ifndef SHIFTLAB_LATTICE_HPP
#define SHIFTLAB_LATTICE_HPP

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "shiftlab/rational.hpp"

namespace shiftlab {

struct LatticePoint {
  int k1 = 0;
  int k2 = 0;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

inline LatticePoint operator+(LatticePoint a, LatticePoint b) { return {a.k1 + b.k1, a.k2 + b.k2}; }

inline constexpr LatticePoint kEps1{1, 0};
inline constexpr LatticePoint kEps2{0, 1};

/// Extent of the explicitly represented sublattice: k1 in [0,n1), k2 in [0,n2).
struct Window {
  int n1 = 0;
  int n2 = 0;
  friend bool operator==(const Window&, const Window&) = default;
};

inline constexpr Window kDefaultWindow{8, 8};

enum class TailRule { None, ConstantExtension, GeneratorBacked };

enum class VerdictStatus { HoldsOnWindow, HoldsEverywhere, Violated };

struct Witness {
  LatticePoint k;
  Rational lhs;
  Rational rhs;
};

/// Outcome of an exact all-k predicate. `holds-everywhere` is only reported
/// when the tail rule supplies an exact certificate; a witness may point
/// outside the display window when such a certificate detects a violation in
/// the tail.
struct PredicateVerdict {
  VerdictStatus status = VerdictStatus::HoldsOnWindow;
  std::optional<Witness> witness;
  std::optional<Rational> constant;
  std::string note;

  bool holds() const { return status != VerdictStatus::Violated; }
  bool everywhere() const { return status == VerdictStatus::HoldsEverywhere; }

  static PredicateVerdict violated(Witness w) {
    return {VerdictStatus::Violated, std::move(w), std::nullopt, {}};
  }
};

std::string to_string(VerdictStatus s);

/// The pointwise identities tails can certify over the whole lattice.
enum class PredicateId {
  Commutativity,    // y_{k+e1} x_k = x_{k+e2} y_k
  SphericalSum,     // x_k + y_k = C
  SphericalMoments, // moment form of the spherical condition
  RowConstantY,     // y_{k+e1} = y_k
  ColConstantX,     // x_{k+e2} = x_k
  ConstantX,        // x_k = x_(0,0)
  ConstantY,        // y_k = y_(0,0)
  ToralFixed,       // x_{k+e1} = x_k and y_{k+e2} = y_k (scanned per axis)
  TransformsAgree,  // x_{k+e1} = x_{k+e2} and y_{k+e2} = y_{k+e1}
  ToralCommutes,    // x_{k+e2} x_{k+e1+e2} = x_{k+e1} x_{k+2e2}
  Hyponormal,       // x nondecreasing along e1, y nondecreasing along e2
};

/// Evaluates squared weights beyond the explicit window and knows, per
/// identity, a finite window on which the identity decides its own truth for
/// every lattice point.
class TailModel {
 public:
  virtual ~TailModel() = default;
  virtual Rational x(LatticePoint k) const = 0;
  virtual Rational y(LatticePoint k) const = 0;
  /// True when weights are defined at every lattice point.
  virtual bool total() const = 0;
  /// If the identity holds at every k in [0,W.n1) x [0,W.n2), it holds at
  /// every k in Z+^2. nullopt when no finite certificate exists.
  virtual std::optional<Window> decision_window(PredicateId id) const = 0;
  virtual std::string kind() const = 0;
};

/// A commuting-candidate 2-variable weighted shift stored through its squared
/// weights x_k = alpha_k^2, y_k = beta_k^2. Immutable after construction;
/// accessors are pure.
class WeightDiagram {
 public:
  /// Rows are indexed by k2 (row index = k2), entries by k1. Throws
  /// InputError on ragged rows, empty windows or nonpositive weights.
  WeightDiagram(std::vector<std::vector<Rational>> x_rows,
                std::vector<std::vector<Rational>> y_rows,
                TailRule tail = TailRule::None,
                std::shared_ptr<const TailModel> generator = nullptr);

  Window window() const { return {width_, height_}; }
  int width() const { return width_; }
  int height() const { return height_; }
  TailRule tail_rule() const { return tail_; }
  const std::shared_ptr<const TailModel>& generator() const { return gen_; }
  /// True when x()/y() are defined for every lattice point.
  bool tail_total() const;
  bool in_window(LatticePoint k) const {
    return k.k1 >= 0 && k.k2 >= 0 && k.k1 < width_ && k.k2 < height_;
  }

  Rational x(LatticePoint k) const;
  Rational y(LatticePoint k) const;

 private:
  std::vector<std::vector<Rational>> x_;
  std::vector<std::vector<Rational>> y_;
  int width_;
  int height_;
  TailRule tail_;
  std::shared_ptr<const TailModel> gen_;
};

inline Rational weight_x(const WeightDiagram& d, LatticePoint k) { return d.x(k); }
inline Rational weight_y(const WeightDiagram& d, LatticePoint k) { return d.y(k); }

/// One pointwise identity: returns the witness when it fails at k.
struct PointCheck {
  PredicateId id;
  int dk1 = 0;  // largest k1 offset the identity reads
  int dk2 = 0;  // largest k2 offset the identity reads
  std::function<std::optional<Witness>(const WeightDiagram&, LatticePoint)> at;
};

/// Scans `check` over the diagram: the in-window region first, then the
/// region its tail needs to decide the identity for all of Z+^2. Scan order
/// is k2-major, k1 within a row; the first failing point is the witness.
PredicateVerdict scan_predicate(const WeightDiagram& d, const PointCheck& check);

/// Exact commutativity test y_{k+e1} x_k = x_{k+e2} y_k. Window must be at
/// least 2x2.
PredicateVerdict check_commutative(const WeightDiagram& d);

/// Lattice moment along the canonical path (row 0 first, then up column k1).
/// Verifies commutativity on [0,k1] x [0,k2] and throws CommutativityError on
/// a violation inside that rectangle.
Rational moment(const WeightDiagram& d, LatticePoint k);

/// Family with constant rows above row zero: rows k2 >= 1 carry x = a,
/// y = C - a; row zero starts at y_(0,0) = y00 and follows the
/// commutativity-forced recurrence y_{k+1,0} = a y_{k,0} / x_{k,0} with
/// x = C - y. Spherically quasinormal with constant C by construction.
WeightDiagram generate_flat_above_row_zero(const Rational& a, const Rational& y00,
                                           const Rational& C, Window w = kDefaultWindow);

/// Constant diagram x = r1_sq, y = r2_sq (Helton-Howe shift and its constant
/// multiples).
WeightDiagram generate_constant(const Rational& r1_sq, const Rational& r2_sq,
                                Window w = kDefaultWindow);

enum class RowTail { None, Constant };

/// Diagram determined by its 0-th row and y_(0,0): x_(k1,k2) = row0_x[k1+k2],
/// y_(k1,k2) = row0_x[k1+k2] * y00 / row0_x[0]. The toral and spherical
/// Aluthge transforms of such a diagram agree.
WeightDiagram generate_TS(std::vector<Rational> row0_x, const Rational& y00,
                          Window w = kDefaultWindow, RowTail row_tail = RowTail::Constant);

// Generator parameters behind a diagram, when it was built by the matching
// generator. Used for serialization and for reconstructing derived diagrams.
struct FlatParams {
  Rational a;
  Rational y00;
  Rational C;
};
struct ConstantParams {
  Rational x;
  Rational y;
};
struct TSParams {
  std::vector<Rational> row0_x;
  Rational y00;
  RowTail row_tail;
};

std::optional<FlatParams> flat_params_behind(const WeightDiagram& d);
std::optional<ConstantParams> constant_params_behind(const WeightDiagram& d);
std::optional<TSParams> ts_params_behind(const WeightDiagram& d);

/// Re-materializes the diagram on another window through its accessors,
/// keeping the tail. Growing the window requires a tail that reaches the new
/// points.
WeightDiagram with_window(const WeightDiagram& d, Window w);

}  // namespace shiftlab

#endif
