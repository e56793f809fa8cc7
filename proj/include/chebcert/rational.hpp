#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace chebcert {

/// Exact arbitrary-precision rational number, always held in canonical form:
/// denominator > 0 and gcd(numerator, denominator) == 1.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}  // NOLINT: implicit by design, mirrors integer literals
  Rational(long n, long d) : Rational(mpz_class(n), mpz_class(d)) {}
  explicit Rational(const mpz_class& n) : q_(n) {}
  Rational(const mpz_class& n, const mpz_class& d) {
    if (sgn(d) == 0) throw std::domain_error("Rational: zero denominator");
    q_ = mpq_class(n, d);
    q_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  const mpz_class& num() const { return q_.get_num(); }
  const mpz_class& den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  Rational operator-() const { return Rational(mpq_class(-q_)); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.q_ + b.q_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.q_ - b.q_));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.q_ * b.q_));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(mpq_class(a.q_ / b.q_));
  }

  Rational& operator+=(const Rational& b) { q_ += b.q_; return *this; }
  Rational& operator-=(const Rational& b) { q_ -= b.q_; return *this; }
  Rational& operator*=(const Rational& b) { q_ *= b.q_; return *this; }
  Rational& operator/=(const Rational& b) { *this = *this / b; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) != 0; }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) >= 0; }

  double to_double() const { return q_.get_d(); }

  /// "p/q", or just "p" when the value is an integer.
  std::string str() const;

  /// 10^k as an exact rational (k may be negative).
  static Rational pow10(long k);

  static Rational pow(const Rational& base, unsigned long e);

 private:
  mpq_class q_;
};

inline Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

/// One binary arithmetic step, dispatched by name. Division by zero throws.
enum class RationalOp { add, sub, mul, div };
Rational rational_arith(const Rational& a, const Rational& b, RationalOp op);

}  // namespace chebcert
