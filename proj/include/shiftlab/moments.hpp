#ifndef SHIFTLAB_MOMENTS_HPP
#define SHIFTLAB_MOMENTS_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shiftlab/berger.hpp"
#include "shiftlab/lattice.hpp"

namespace shiftlab {

/// Truncated bivariate moment sequence gamma_ij = integral of y^i x^j,
/// 0 <= i+j <= 2n, gamma_00 > 0. Note the index order: i is the y-power;
/// the lattice moment gamma_(k1,k2) corresponds to gamma_{k2,k1}.
class BiMomentSequence {
 public:
  BiMomentSequence(int n, std::vector<std::vector<Rational>> by_degree);

  int order() const { return n_; }
  const Rational& gamma(int i, int j) const;

 private:
  int n_;
  // g_[d][i] = gamma_{i, d-i}, one row per total degree d = 0..2n
  std::vector<std::vector<Rational>> g_;
};

BiMomentSequence sequence_from_measure(const AtomicMeasure& mu, int n);

/// Same sequence through the diagram's lattice moments (gamma_ij =
/// gamma^lattice_(j,i)); the explicit converter that keeps the two index
/// conventions from silently transposing.
BiMomentSequence sequence_from_diagram(const WeightDiagram& d, int n);

/// From explicit entries keyed (i,j); all 0 <= i+j <= 2n must be present.
BiMomentSequence sequence_from_entries(int n, const std::map<std::pair<int, int>, Rational>& entries);

/// Column label y^ydeg x^xdeg in the graded order 1, X, Y, X^2, XY, Y^2, ...
struct MonomialLabel {
  int xdeg = 0;
  int ydeg = 0;
  int degree() const { return xdeg + ydeg; }
  std::string str() const;
};

std::vector<MonomialLabel> monomial_labels(int n);

/// The Hankel-block moment matrix M(n): entry (u,v) = gamma_{a_u+a_v, b_u+b_v}
/// for row label y^{a_u} x^{b_u} and column label y^{a_v} x^{b_v}.
class MomentMatrix {
 public:
  explicit MomentMatrix(const BiMomentSequence& g);

  int order() const { return n_; }
  int dim() const { return static_cast<int>(labels_.size()); }
  const Rational& at(int row, int col) const { return e_[static_cast<size_t>(row)][static_cast<size_t>(col)]; }
  const std::vector<MonomialLabel>& labels() const { return labels_; }

  /// Leading principal block M(m), m <= n (labels are graded, so truncation
  /// is a prefix).
  MomentMatrix truncated(int m) const;

  /// Structural scan: every block M[i,j] constant on cross-diagonals.
  bool hankel_blocks_ok() const;

 private:
  MomentMatrix(int n, std::vector<std::vector<Rational>> entries);

  int n_;
  std::vector<std::vector<Rational>> e_;
  std::vector<MonomialLabel> labels_;
};

inline MomentMatrix build_moment_matrix(const BiMomentSequence& g) { return MomentMatrix(g); }

/// Exact positive-semidefiniteness by symmetric rational elimination: all
/// pivots nonnegative, and a zero diagonal pivot forces its whole remaining
/// row to vanish.
bool psd_exact(const MomentMatrix& m);

/// Exact rank by rational row elimination.
int rank_exact(const MomentMatrix& m);

/// A vanishing column combination, normalized so the latest column in the
/// graded order has coefficient 1 and all other support lies on earlier
/// independent columns.
struct ColumnRelation {
  int lead = 0;
  std::vector<Rational> coeffs;  // over all columns; coeffs[lead] = 1

  /// "X^2 = X", "X + Y = 2*1", ... (dependent column against the rest)
  std::string str(const std::vector<MonomialLabel>& labels) const;
};

/// The reduced basis of column relations: one per dependent column, each
/// expressing it over the earlier independent columns. Verified against the
/// matrix exactly.
std::vector<ColumnRelation> column_relations(const MomentMatrix& m);

/// rank M(n) == rank M(n-1) for n = g.order() (needs n >= 1).
bool flat_extension(const BiMomentSequence& g);

/// Flatness at each level 1..n: entry l-1 holds rank M(l) == rank M(l-1).
std::vector<bool> flatness_by_level(const BiMomentSequence& g);

/// Recovers the unique representing measure of a PSD flat sequence of rank
/// <= 2: rank 1 gives the mean-point mass; rank 2 intersects the zero sets
/// of the degree-<=2 column relations and solves for the densities. Every
/// moment through order 2n is verified exactly. Throws UnsupportedError for
/// rank > 2 or irrational support, InputError when no representing measure
/// exists.
AtomicMeasure recover_atoms(const BiMomentSequence& g);

/// Exact square root of a nonnegative rational when it is rational.
std::optional<Rational> sqrt_exact(const Rational& r);

}  // namespace shiftlab

#endif
