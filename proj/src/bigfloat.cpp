#include "shiftlab/bigfloat.hpp"

#include <cmath>
#include <cstdio>
#include <utility>
#include <vector>

#include "shiftlab/errors.hpp"

namespace shiftlab {

BigFloat::BigFloat(unsigned prec_bits) : prec_(prec_bits < kMinPrecision ? kMinPrecision : prec_bits) {
  mpfr_init2(v_, static_cast<mpfr_prec_t>(prec_));
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const BigFloat& o) : prec_(o.prec_) {
  mpfr_init2(v_, static_cast<mpfr_prec_t>(prec_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept : prec_(o.prec_) {
  mpfr_init2(v_, static_cast<mpfr_prec_t>(prec_));
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(BigFloat o) noexcept {
  mpfr_swap(v_, o.v_);
  std::swap(prec_, o.prec_);
  return *this;
}

BigFloat::~BigFloat() {
  mpfr_clear(v_);
}

BigFloat BigFloat::from_rational(const Rational& q, unsigned prec_bits) {
  BigFloat r(prec_bits);
  mpfr_set_q(r.v_, q.raw().get_mpq_t(), MPFR_RNDN);
  return r;
}

BigFloat BigFloat::from_long(long v, unsigned prec_bits) {
  BigFloat r(prec_bits);
  mpfr_set_si(r.v_, v, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::pow2(long e, unsigned prec_bits) {
  BigFloat r(prec_bits);
  mpfr_set_ui_2exp(r.v_, 1, static_cast<mpfr_exp_t>(e), MPFR_RNDN);
  return r;
}

BigFloat BigFloat::operator+(const BigFloat& o) const {
  BigFloat r(join(prec_, o.prec_));
  mpfr_add(r.v_, v_, o.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::operator-(const BigFloat& o) const {
  BigFloat r(join(prec_, o.prec_));
  mpfr_sub(r.v_, v_, o.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::operator*(const BigFloat& o) const {
  BigFloat r(join(prec_, o.prec_));
  mpfr_mul(r.v_, v_, o.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::operator/(const BigFloat& o) const {
  if (o.is_zero()) throw InputError("bigfloat division by zero");
  BigFloat r(join(prec_, o.prec_));
  mpfr_div(r.v_, v_, o.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::sqrt() const {
  if (mpfr_sgn(v_) < 0) throw InputError("bigfloat sqrt of negative value");
  BigFloat r(prec_);
  mpfr_sqrt(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::abs() const {
  BigFloat r(prec_);
  mpfr_abs(r.v_, v_, MPFR_RNDN);
  return r;
}

std::string BigFloat::str(size_t digits) const {
  if (digits == 0) digits = static_cast<size_t>(std::floor(prec_ * 0.30103)) + 1;
  int need = mpfr_snprintf(nullptr, 0, "%.*R*g", static_cast<int>(digits), MPFR_RNDN, v_);
  std::vector<char> buf(static_cast<size_t>(need) + 1);
  mpfr_snprintf(buf.data(), buf.size(), "%.*R*g", static_cast<int>(digits), MPFR_RNDN, v_);
  return std::string(buf.data());
}

BigFloat relative_deviation(const BigFloat& a, const BigFloat& b) {
  BigFloat diff = (a - b).abs();
  BigFloat aa = a.abs(), bb = b.abs();
  const BigFloat& scale = aa < bb ? bb : aa;
  if (scale.is_zero()) return BigFloat(diff.precision());
  return diff / scale;
}

}  // namespace shiftlab
