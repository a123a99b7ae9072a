#ifndef SHIFTLAB_RATIONAL_HPP
#define SHIFTLAB_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace shiftlab {

/// Exact arbitrary-precision rational, always reduced to lowest terms with a
/// positive denominator. Backed by GMP; construction and parsing canonicalize,
/// arithmetic preserves canonical form.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
  Rational(long num, long den);

  /// Parses "p/q" or "p" (optional leading '-'). Throws InputError on
  /// malformed text or zero denominator.
  static Rational parse(std::string_view text);

  /// "p/q", or just "p" when the denominator is 1.
  std::string str() const;

  const mpq_class& raw() const { return v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool positive() const { return sign() > 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational abs() const;
  /// Nonnegative integer power, 0^0 = 1.
  Rational pow(unsigned long e) const;

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace shiftlab

#endif
