#include "gmflow/rational.hpp"

#include <ostream>

namespace gmflow {

Rational::Rational(const Int& num, const Int& den) : v_(num, den) {
  if (sgn(den) == 0) throw Error("rational: zero denominator");
  v_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(Int(num), Int(den)) {}

Rational Rational::from_string(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(text));
    return Rational(Int(text.substr(0, slash)), Int(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw Error("rational: cannot parse \"" + text + "\"");
  }
}

Rational Rational::abs() const {
  Rational r = *this;
  r.v_ = ::abs(v_);
  return r;
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw Error("rational: reciprocal of zero");
  Rational r;
  r.v_ = 1 / v_;
  return r;
}

Rational Rational::pow(unsigned long e) const {
  Rational r;
  mpz_pow_ui(r.v_.get_num_mpz_t(), v_.get_num_mpz_t(), e);
  mpz_pow_ui(r.v_.get_den_mpz_t(), v_.get_den_mpz_t(), e);
  return r;  // powers of a canonical fraction stay canonical
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.v_ = -v_;
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error("rational: division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rational::str() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

}  // namespace gmflow
