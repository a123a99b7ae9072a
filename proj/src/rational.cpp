#include "shiftlab/rational.hpp"

#include <cctype>
#include <ostream>

#include "shiftlab/errors.hpp"

namespace shiftlab {

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw InputError("rational with zero denominator");
  v_.canonicalize();
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw InputError("rational division by zero");
  return Rational(mpq_class(a.v_ / b.v_));
}

Rational Rational::parse(std::string_view text) {
  auto valid = [](std::string_view s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  std::string_view num = text, den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!valid(den)) throw InputError("malformed rational: '" + std::string(text) + "'");
  }
  if (!valid(num)) throw InputError("malformed rational: '" + std::string(text) + "'");

  mpq_class v;
  if (v.set_str(std::string(text), 10) != 0)
    throw InputError("malformed rational: '" + std::string(text) + "'");
  if (v.get_den() == 0) throw InputError("rational with zero denominator: '" + std::string(text) + "'");
  return Rational(std::move(v));
}

std::string Rational::str() const {
  return v_.get_str();
}

Rational Rational::abs() const {
  return sign() < 0 ? -*this : *this;
}

Rational Rational::pow(unsigned long e) const {
  mpq_class r;
  mpz_pow_ui(r.get_num_mpz_t(), v_.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), v_.get_den_mpz_t(), e);
  return Rational(std::move(r));  // powers of canonical p/q are canonical
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace shiftlab
