#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace effcone {

using Integer = mpz_class;

// Thrown when caller-supplied inputs violate an operation's preconditions.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exact rational number, always kept in lowest terms with a positive
// denominator, so equality is structural.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : q_(static_cast<long>(value)) {}  // NOLINT
  Rational(std::int64_t num, std::int64_t den);
  Rational(const Integer& num, const Integer& den);
  explicit Rational(const Integer& value) : q_(value) {}
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  // Accepts "num/den" or a plain integer, with optional sign.
  static Rational parse(std::string_view text);

  Integer numerator() const { return q_.get_num(); }
  Integer denominator() const { return q_.get_den(); }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  // Canonical rendering: "n" for integers, "n/d" otherwise.
  std::string str() const;
  // Lossy; only for report columns labelled "_approx".
  double approx() const { return q_.get_d(); }

  const mpq_class& raw() const { return q_; }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& x);

Integer floor(const Rational& x);
Integer ceil(const Rational& x);

// x - floor(x), always in [0, 1).
Rational frac(const Rational& x);

// Narrowing with a range check; throws std::overflow_error.
std::int64_t to_int64(const Integer& x);

struct Bezout {
  std::int64_t g;
  std::int64_t s;
  std::int64_t t;
};

// g = gcd(a, b) > 0 with s*a + t*b = g. Both zero is a PreconditionError.
Bezout egcd(std::int64_t a, std::int64_t b);

// d(d+1)/2, the number of monomials of degree < d in two variables.
std::int64_t tri(std::int64_t d);

// Inverse of a modulo m (m >= 1, gcd(a, m) = 1), in [0, m).
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

// Euclidean remainder in [0, m).
inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace effcone
