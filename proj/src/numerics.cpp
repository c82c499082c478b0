#include "effcone/numerics.hpp"

#include <string>
#include <utility>
#include <limits>
#include <ostream>

namespace effcone {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw PreconditionError("rational with zero denominator");
  q_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
  q_.canonicalize();
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw PreconditionError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.q_ == 0) throw std::domain_error("rational division by zero");
  q_ /= o.q_;
  return *this;
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  if (text.empty()) throw PreconditionError("malformed rational: '" + std::string(whole) + "'");
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) throw PreconditionError("malformed rational: '" + std::string(whole) + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9') {
      throw PreconditionError("malformed rational: '" + std::string(whole) + "'");
    }
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return Integer(digits, 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  Integer num = parse_integer(text.substr(0, slash), text);
  Integer den = parse_integer(text.substr(slash + 1), text);
  return Rational(num, den);
}

std::string Rational::str() const { return q_.get_str(10); }

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

Integer floor(const Rational& x) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), x.raw().get_num_mpz_t(), x.raw().get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& x) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), x.raw().get_num_mpz_t(), x.raw().get_den_mpz_t());
  return r;
}

Rational frac(const Rational& x) { return x - Rational(floor(x)); }

std::int64_t to_int64(const Integer& x) {
  if (!x.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits: " + x.get_str());
  return x.get_si();
}

Bezout egcd(std::int64_t a, std::int64_t b) {
  if (a == 0 && b == 0) throw PreconditionError("egcd: both inputs are zero");
  std::int64_t old_r = a, r = b;
  std::int64_t old_s = 1, s = 0;
  std::int64_t old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
    old_t = std::exchange(t, old_t - q * t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

std::int64_t tri(std::int64_t d) {
  if (d < 0) throw PreconditionError("tri: negative argument " + std::to_string(d));
  return d * (d + 1) / 2;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  if (m < 1) throw PreconditionError("mod_inverse: modulus must be positive");
  if (m == 1) return 0;
  const Bezout e = egcd(mod_floor(a, m), m);
  if (e.g != 1) {
    throw PreconditionError("mod_inverse: " + std::to_string(a) + " is not invertible mod " +
                            std::to_string(m));
  }
  return mod_floor(e.s, m);
}

}  // namespace effcone
