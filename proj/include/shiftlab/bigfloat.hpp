#ifndef SHIFTLAB_BIGFLOAT_HPP
#define SHIFTLAB_BIGFLOAT_HPP

#include <mpfr.h>

#include <string>

#include "shiftlab/rational.hpp"

namespace shiftlab {

/// Default mantissa size for numeric diagrams, overridable per call and via
/// the CLI --precision flag / SHIFTLAB_PRECISION.
inline constexpr unsigned kDefaultPrecision = 256;
inline constexpr unsigned kMinPrecision = 64;

/// High-precision binary float with an explicit per-value mantissa size.
/// All operations round to nearest; binary operations carry the larger
/// precision of the two operands.
class BigFloat {
 public:
  BigFloat() : BigFloat(kMinPrecision) {}
  explicit BigFloat(unsigned prec_bits);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(BigFloat o) noexcept;
  ~BigFloat();

  static BigFloat from_rational(const Rational& q, unsigned prec_bits);
  static BigFloat from_long(long v, unsigned prec_bits);
  /// 2^e, exact at any precision.
  static BigFloat pow2(long e, unsigned prec_bits);

  unsigned precision() const { return prec_; }

  BigFloat operator+(const BigFloat& o) const;
  BigFloat operator-(const BigFloat& o) const;
  BigFloat operator*(const BigFloat& o) const;
  BigFloat operator/(const BigFloat& o) const;
  BigFloat sqrt() const;
  BigFloat abs() const;

  int cmp(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return a.cmp(b) < 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return a.cmp(b) > 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return a.cmp(b) <= 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return a.cmp(b) >= 0; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return a.cmp(b) == 0; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  /// Decimal string; digit count derived from the precision when not given.
  /// Deterministic for a given value and precision.
  std::string str(size_t digits = 0) const;

 private:
  mpfr_t v_;
  unsigned prec_;

  static unsigned join(unsigned a, unsigned b) { return a > b ? a : b; }
};

/// |a - b| / max(|a|, |b|); zero when both are zero.
BigFloat relative_deviation(const BigFloat& a, const BigFloat& b);

}  // namespace shiftlab

#endif
