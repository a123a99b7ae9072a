#include "shiftlab/moments.hpp"

#include <algorithm>
#include <cassert>
#include <gmpxx.h>
#include <utility>

#include "shiftlab/errors.hpp"

namespace shiftlab {

BiMomentSequence::BiMomentSequence(int n, std::vector<std::vector<Rational>> by_degree)
    : n_(n), g_(std::move(by_degree)) {
  if (n_ < 0) throw InputError("moment sequence order must be nonnegative");
  if (static_cast<int>(g_.size()) != 2 * n_ + 1)
    throw InputError("moment sequence must cover degrees 0..2n");
  for (int d = 0; d <= 2 * n_; ++d)
    if (static_cast<int>(g_[static_cast<size_t>(d)].size()) != d + 1)
      throw InputError("degree " + std::to_string(d) + " of the moment sequence is incomplete");
  if (!g_[0][0].positive()) throw InputError("gamma_00 must be strictly positive");
}

const Rational& BiMomentSequence::gamma(int i, int j) const {
  if (i < 0 || j < 0 || i + j > 2 * n_)
    throw InputError("moment index (" + std::to_string(i) + "," + std::to_string(j) +
                     ") outside order " + std::to_string(n_));
  return g_[static_cast<size_t>(i + j)][static_cast<size_t>(i)];
}

BiMomentSequence sequence_from_measure(const AtomicMeasure& mu, int n) {
  if (n < 0) throw InputError("moment sequence order must be nonnegative");
  std::vector<std::vector<Rational>> rows;
  for (int d = 0; d <= 2 * n; ++d) {
    std::vector<Rational> row;
    for (int i = 0; i <= d; ++i)
      row.push_back(measure_moment(mu, {d - i, i}));  // gamma_ij = integral y^i x^j, x <-> s
    rows.push_back(std::move(row));
  }
  return BiMomentSequence(n, std::move(rows));
}

BiMomentSequence sequence_from_diagram(const WeightDiagram& d, int n) {
  if (n < 0) throw InputError("moment sequence order must be nonnegative");
  std::vector<std::vector<Rational>> rows;
  for (int deg = 0; deg <= 2 * n; ++deg) {
    std::vector<Rational> row;
    for (int i = 0; i <= deg; ++i) row.push_back(moment(d, {deg - i, i}));
    rows.push_back(std::move(row));
  }
  return BiMomentSequence(n, std::move(rows));
}

BiMomentSequence sequence_from_entries(int n, const std::map<std::pair<int, int>, Rational>& entries) {
  if (n < 0) throw InputError("moment sequence order must be nonnegative");
  std::vector<std::vector<Rational>> rows;
  for (int d = 0; d <= 2 * n; ++d) {
    std::vector<Rational> row;
    for (int i = 0; i <= d; ++i) {
      auto it = entries.find({i, d - i});
      if (it == entries.end())
        throw InputError("moment sequence misses gamma_(" + std::to_string(i) + "," +
                         std::to_string(d - i) + ")");
      row.push_back(it->second);
    }
    rows.push_back(std::move(row));
  }
  return BiMomentSequence(n, std::move(rows));
}

std::string MonomialLabel::str() const {
  if (degree() == 0) return "1";
  std::string s;
  auto piece = [&](char var, int deg) {
    if (deg == 0) return;
    s += var;
    if (deg > 1) s += "^" + std::to_string(deg);
  };
  piece('X', xdeg);
  piece('Y', ydeg);
  return s;
}

std::vector<MonomialLabel> monomial_labels(int n) {
  std::vector<MonomialLabel> labels;
  for (int d = 0; d <= n; ++d)
    for (int r = 0; r <= d; ++r) labels.push_back({d - r, r});
  return labels;
}

MomentMatrix::MomentMatrix(const BiMomentSequence& g) : n_(g.order()), labels_(monomial_labels(n_)) {
  const int dim = static_cast<int>(labels_.size());
  e_.assign(static_cast<size_t>(dim), std::vector<Rational>(static_cast<size_t>(dim)));
  for (int u = 0; u < dim; ++u)
    for (int v = 0; v < dim; ++v)
      e_[static_cast<size_t>(u)][static_cast<size_t>(v)] =
          g.gamma(labels_[static_cast<size_t>(u)].ydeg + labels_[static_cast<size_t>(v)].ydeg,
                  labels_[static_cast<size_t>(u)].xdeg + labels_[static_cast<size_t>(v)].xdeg);
  assert(hankel_blocks_ok());
}

MomentMatrix::MomentMatrix(int n, std::vector<std::vector<Rational>> entries)
    : n_(n), e_(std::move(entries)), labels_(monomial_labels(n)) {}

MomentMatrix MomentMatrix::truncated(int m) const {
  if (m < 0 || m > n_) throw InputError("truncation order out of range");
  const int dim = (m + 1) * (m + 2) / 2;
  std::vector<std::vector<Rational>> sub(static_cast<size_t>(dim));
  for (int u = 0; u < dim; ++u)
    sub[static_cast<size_t>(u)] = std::vector<Rational>(e_[static_cast<size_t>(u)].begin(),
                                                        e_[static_cast<size_t>(u)].begin() + dim);
  return MomentMatrix(m, std::move(sub));
}

bool MomentMatrix::hankel_blocks_ok() const {
  // block (i,j) holds rows of degree i against columns of degree j; within
  // it the entry depends on r+c only
  auto base = [](int d) { return d * (d + 1) / 2; };
  for (int i = 0; i <= n_; ++i)
    for (int j = 0; j <= n_; ++j)
      for (int r = 0; r <= i; ++r)
        for (int c = 0; c <= j; ++c) {
          if (r + 1 <= i && c - 1 >= 0 &&
              at(base(i) + r, base(j) + c) != at(base(i) + r + 1, base(j) + c - 1))
            return false;
        }
  return true;
}

bool psd_exact(const MomentMatrix& m) {
  const int dim = m.dim();
  std::vector<std::vector<Rational>> a(static_cast<size_t>(dim));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) a[static_cast<size_t>(i)].push_back(m.at(i, j));

  for (int k = 0; k < dim; ++k) {
    const Rational& piv = a[static_cast<size_t>(k)][static_cast<size_t>(k)];
    if (piv.sign() < 0) return false;
    if (piv.is_zero()) {
      for (int j = k + 1; j < dim; ++j)
        if (!a[static_cast<size_t>(k)][static_cast<size_t>(j)].is_zero()) return false;
      continue;
    }
    for (int i = k + 1; i < dim; ++i) {
      Rational f = a[static_cast<size_t>(i)][static_cast<size_t>(k)] / piv;
      if (f.is_zero()) continue;
      for (int j = k; j < dim; ++j)
        a[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
            f * a[static_cast<size_t>(k)][static_cast<size_t>(j)];
    }
  }
  return true;
}

namespace {

int rank_by_elimination(std::vector<std::vector<Rational>> a) {
  if (a.empty()) return 0;
  const int rows = static_cast<int>(a.size());
  const int cols = static_cast<int>(a[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pr = -1;
    for (int r = rank; r < rows; ++r)
      if (!a[static_cast<size_t>(r)][static_cast<size_t>(c)].is_zero()) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(a[static_cast<size_t>(pr)], a[static_cast<size_t>(rank)]);
    const Rational piv = a[static_cast<size_t>(rank)][static_cast<size_t>(c)];
    for (int r = rank + 1; r < rows; ++r) {
      Rational f = a[static_cast<size_t>(r)][static_cast<size_t>(c)] / piv;
      if (f.is_zero()) continue;
      for (int j = c; j < cols; ++j)
        a[static_cast<size_t>(r)][static_cast<size_t>(j)] -=
            f * a[static_cast<size_t>(rank)][static_cast<size_t>(j)];
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<Rational>> to_rows(const MomentMatrix& m) {
  std::vector<std::vector<Rational>> a(static_cast<size_t>(m.dim()));
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) a[static_cast<size_t>(i)].push_back(m.at(i, j));
  return a;
}

}  // namespace

int rank_exact(const MomentMatrix& m) {
  return rank_by_elimination(to_rows(m));
}

std::string ColumnRelation::str(const std::vector<MonomialLabel>& labels) const {
  // render as "lead = combination of earlier columns", paper style
  std::string lhs = labels[static_cast<size_t>(lead)].str();
  std::string rhs;
  for (int j = lead - 1; j >= 0; --j) {
    const Rational& c = coeffs[static_cast<size_t>(j)];
    if (c.is_zero()) continue;
    Rational v = -c;
    if (!rhs.empty()) {
      rhs += v.sign() < 0 ? " - " : " + ";
      v = v.abs();
    } else if (v.sign() < 0) {
      rhs += "-";
      v = v.abs();
    }
    if (v == Rational(1) && labels[static_cast<size_t>(j)].degree() > 0)
      rhs += labels[static_cast<size_t>(j)].str();
    else if (labels[static_cast<size_t>(j)].degree() == 0)
      rhs += v.str() + "*1";
    else
      rhs += v.str() + "*" + labels[static_cast<size_t>(j)].str();
  }
  if (rhs.empty()) rhs = "0";
  return lhs + " = " + rhs;
}

std::vector<ColumnRelation> column_relations(const MomentMatrix& m) {
  const int dim = m.dim();
  auto a = to_rows(m);
  // reduced row echelon form; pivot columns are the greedily independent
  // columns in the graded label order
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < dim && r < dim; ++c) {
    int pr = -1;
    for (int i = r; i < dim; ++i)
      if (!a[static_cast<size_t>(i)][static_cast<size_t>(c)].is_zero()) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(a[static_cast<size_t>(pr)], a[static_cast<size_t>(r)]);
    const Rational piv = a[static_cast<size_t>(r)][static_cast<size_t>(c)];
    for (int j = 0; j < dim; ++j) a[static_cast<size_t>(r)][static_cast<size_t>(j)] /= piv;
    for (int i = 0; i < dim; ++i) {
      if (i == r) continue;
      Rational f = a[static_cast<size_t>(i)][static_cast<size_t>(c)];
      if (f.is_zero()) continue;
      for (int j = 0; j < dim; ++j)
        a[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
            f * a[static_cast<size_t>(r)][static_cast<size_t>(j)];
    }
    pivot_col.push_back(c);
    ++r;
  }

  std::vector<ColumnRelation> rels;
  size_t next_pivot = 0;
  for (int c = 0; c < dim; ++c) {
    if (next_pivot < pivot_col.size() && pivot_col[next_pivot] == c) {
      ++next_pivot;
      continue;
    }
    ColumnRelation rel;
    rel.lead = c;
    rel.coeffs.assign(static_cast<size_t>(dim), Rational(0));
    rel.coeffs[static_cast<size_t>(c)] = Rational(1);
    for (size_t i = 0; i < pivot_col.size(); ++i)
      rel.coeffs[static_cast<size_t>(pivot_col[i])] = -a[i][static_cast<size_t>(c)];
    rels.push_back(std::move(rel));
  }

  // each relation must evaluate to the zero column, exactly
  for (const auto& rel : rels)
    for (int row = 0; row < dim; ++row) {
      Rational acc(0);
      for (int j = 0; j < dim; ++j) acc += m.at(row, j) * rel.coeffs[static_cast<size_t>(j)];
      if (!acc.is_zero()) throw Error("internal: column relation fails to annihilate the matrix");
    }
  return rels;
}

bool flat_extension(const BiMomentSequence& g) {
  if (g.order() < 1) throw InputError("flat extension needs order n >= 1");
  MomentMatrix m(g);
  return rank_exact(m) == rank_exact(m.truncated(g.order() - 1));
}

std::vector<bool> flatness_by_level(const BiMomentSequence& g) {
  MomentMatrix m(g);
  std::vector<int> ranks;
  for (int l = 0; l <= g.order(); ++l) ranks.push_back(rank_exact(m.truncated(l)));
  std::vector<bool> out;
  for (int l = 1; l <= g.order(); ++l)
    out.push_back(ranks[static_cast<size_t>(l)] == ranks[static_cast<size_t>(l - 1)]);
  return out;
}

std::optional<Rational> sqrt_exact(const Rational& r) {
  if (r.sign() < 0) return std::nullopt;
  const mpq_class& q = r.raw();
  if (mpz_perfect_square_p(q.get_num_mpz_t()) == 0) return std::nullopt;
  if (mpz_perfect_square_p(q.get_den_mpz_t()) == 0) return std::nullopt;
  mpz_class num, den;
  mpz_sqrt(num.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), q.get_den_mpz_t());
  return Rational::parse(num.get_str() + "/" + den.get_str());
}

namespace {

const ColumnRelation* relation_with_lead(const std::vector<ColumnRelation>& rels, int lead) {
  for (const auto& r : rels)
    if (r.lead == lead) return &r;
  return nullptr;
}

void verify_all_moments(const BiMomentSequence& g, const AtomicMeasure& mu) {
  for (int d = 0; d <= 2 * g.order(); ++d)
    for (int i = 0; i <= d; ++i)
      if (measure_moment(mu, {d - i, i}) != g.gamma(i, d - i))
        throw InputError("no representing measure: recovered atoms fail to reproduce gamma_(" +
                         std::to_string(i) + "," + std::to_string(d - i) + ")");
}

}  // namespace

AtomicMeasure recover_atoms(const BiMomentSequence& g) {
  MomentMatrix m(g);
  if (!psd_exact(m)) throw InputError("no representing measure: moment matrix is not PSD");
  const int rank = rank_exact(m);
  if (rank > 2)
    throw UnsupportedError("atom recovery is limited to rank <= 2, got rank " + std::to_string(rank));
  if (!flat_extension(g))
    throw InputError("sequence is not flat at its top level; recovery needs rank M(n) = rank M(n-1)");

  const Rational& g00 = g.gamma(0, 0);
  if (rank == 1) {
    AtomicMeasure mu = AtomicMeasure::with_total_mass(
        {{g.gamma(0, 1) / g00, g.gamma(1, 0) / g00, g00}});
    verify_all_moments(g, mu);
    return mu;
  }

  // rank 2: flatness against M(n-1) rules out n = 1 (rank M(0) = 1), so the
  // degree-2 columns and their relations exist
  auto rels = column_relations(m);
  const ColumnRelation* rel_y = relation_with_lead(rels, 2);

  Rational s1, t1, s2, t2;
  if (rel_y == nullptr && relation_with_lead(rels, 1) == nullptr)
    throw Error("internal: rank-2 matrix lacks a linear column relation");
  if (relation_with_lead(rels, 1) != nullptr) {
    // X = s0 * 1: both atoms share the x-coordinate; split along y via the
    // Y^2 relation over the {1, Y} basis
    const ColumnRelation& rx = *relation_with_lead(rels, 1);
    Rational s0 = -rx.coeffs[0];
    const ColumnRelation* ryy = relation_with_lead(rels, 5);
    if (ryy == nullptr) throw Error("internal: missing Y^2 relation in rank-2 recovery");
    Rational e1 = -ryy->coeffs[2], e0 = -ryy->coeffs[0];  // y^2 = e1 y + e0
    Rational disc = e1 * e1 + Rational(4) * e0;
    if (disc.sign() < 0) throw InputError("no representing measure: empty real variety");
    auto root = sqrt_exact(disc);
    if (!root) throw UnsupportedError("recovered atoms are irrational; reported, not approximated");
    t1 = (e1 + *root) / Rational(2);
    t2 = (e1 - *root) / Rational(2);
    if (t1 == t2) throw InputError("no representing measure: variety degenerates to one point");
    s1 = s2 = s0;
  } else {
    // basis {1, X}: atoms sit on the line y = c0 + c1 x; split along x via
    // the X^2 relation
    Rational c1 = -rel_y->coeffs[1], c0 = -rel_y->coeffs[0];  // y = c0 + c1 x
    const ColumnRelation* rxx = relation_with_lead(rels, 3);
    if (rxx == nullptr) throw Error("internal: missing X^2 relation in rank-2 recovery");
    Rational d1 = -rxx->coeffs[1], d0 = -rxx->coeffs[0];  // x^2 = d1 x + d0
    Rational disc = d1 * d1 + Rational(4) * d0;
    if (disc.sign() < 0) throw InputError("no representing measure: empty real variety");
    auto root = sqrt_exact(disc);
    if (!root) throw UnsupportedError("recovered atoms are irrational; reported, not approximated");
    s1 = (d1 + *root) / Rational(2);
    s2 = (d1 - *root) / Rational(2);
    if (s1 == s2) throw InputError("no representing measure: variety degenerates to one point");
    t1 = c0 + c1 * s1;
    t2 = c0 + c1 * s2;
  }

  if (s1.sign() < 0 || s2.sign() < 0 || t1.sign() < 0 || t2.sign() < 0)
    throw UnsupportedError("recovered support leaves the nonnegative quadrant");

  // densities from total mass and the separating first moment
  Rational rho1, rho2;
  if (s1 != s2) {
    const Rational& mean = g.gamma(0, 1);  // integral of x
    rho1 = (mean - g00 * s2) / (s1 - s2);
    rho2 = g00 - rho1;
  } else {
    const Rational& mean = g.gamma(1, 0);  // integral of y
    rho1 = (mean - g00 * t2) / (t1 - t2);
    rho2 = g00 - rho1;
  }
  if (!rho1.positive() || !rho2.positive())
    throw InputError("no representing measure: densities are not strictly positive");

  AtomicMeasure mu = AtomicMeasure::with_total_mass({{s1, t1, rho1}, {s2, t2, rho2}});
  verify_all_moments(g, mu);
  return mu;
}

}  // namespace shiftlab
