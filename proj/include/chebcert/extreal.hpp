#pragma once

#include <mpfr.h>

#include <stdexcept>
#include <string>

#include "chebcert/rational.hpp"

namespace chebcert {

/// Real number carried at a configurable working precision, measured in
/// significant decimal digits. Every operation is correctly rounded at the
/// precision of its widest operand, so results stay within 2 units in the
/// last carried place. Values are immutable after construction except via
/// assignment.
class ExtReal {
 public:
  static constexpr int kDefaultDigits = 40;

  ExtReal() : ExtReal(kDefaultDigits) {}
  explicit ExtReal(int precision_digits) : digits_(check_digits(precision_digits)) {
    mpfr_init2(v_, bits_for(digits_));
    mpfr_set_zero(v_, 1);
  }
  explicit ExtReal(long v, int precision_digits = kDefaultDigits)
      : digits_(check_digits(precision_digits)) {
    mpfr_init2(v_, bits_for(digits_));
    mpfr_set_si(v_, v, MPFR_RNDN);
  }
  explicit ExtReal(const Rational& q, int precision_digits = kDefaultDigits)
      : digits_(check_digits(precision_digits)) {
    mpfr_init2(v_, bits_for(digits_));
    mpfr_set_q(v_, q.raw().get_mpq_t(), MPFR_RNDN);
  }
  explicit ExtReal(const mpz_class& z, int precision_digits = kDefaultDigits)
      : digits_(check_digits(precision_digits)) {
    mpfr_init2(v_, bits_for(digits_));
    mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
  }

  static ExtReal from_string(const std::string& s, int precision_digits = kDefaultDigits);

  ExtReal(const ExtReal& o) : digits_(o.digits_) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  ExtReal(ExtReal&& o) noexcept : digits_(o.digits_) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  ExtReal& operator=(const ExtReal& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
      digits_ = o.digits_;
    }
    return *this;
  }
  ExtReal& operator=(ExtReal&& o) noexcept {
    mpfr_swap(v_, o.v_);
    digits_ = o.digits_;
    return *this;
  }
  ~ExtReal() { mpfr_clear(v_); }

  int precision_digits() const { return digits_; }
  mpfr_srcptr raw() const { return v_; }

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }

  ExtReal operator-() const {
    ExtReal r(digits_);
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }

  friend ExtReal operator+(const ExtReal& a, const ExtReal& b) {
    ExtReal r(wider(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend ExtReal operator-(const ExtReal& a, const ExtReal& b) {
    ExtReal r(wider(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend ExtReal operator*(const ExtReal& a, const ExtReal& b) {
    ExtReal r(wider(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend ExtReal operator/(const ExtReal& a, const ExtReal& b) {
    if (b.is_zero()) throw std::domain_error("ExtReal: division by zero");
    ExtReal r(wider(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }

  friend bool operator==(const ExtReal& a, const ExtReal& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const ExtReal& a, const ExtReal& b) { return mpfr_cmp(a.v_, b.v_) != 0; }
  friend bool operator<(const ExtReal& a, const ExtReal& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const ExtReal& a, const ExtReal& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const ExtReal& a, const ExtReal& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const ExtReal& a, const ExtReal& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

  /// The exact rational value of the stored binary float.
  Rational to_rational() const;

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  /// Decimal debug rendering with `significant` digits (0 = working precision).
  std::string str(int significant = 0) const;

  static mpfr_prec_t bits_for(int decimal_digits);

 private:
  static int check_digits(int d) {
    if (d < 1) throw std::invalid_argument("ExtReal: precision must be >= 1 digit");
    return d;
  }
  static int wider(const ExtReal& a, const ExtReal& b) {
    return a.digits_ > b.digits_ ? a.digits_ : b.digits_;
  }

  int digits_;
  mpfr_t v_;
};

ExtReal abs(const ExtReal& x);
ExtReal sqrt_ext(const ExtReal& x);  // domain error on negative input
ExtReal cos_ext(const ExtReal& x);
ExtReal acos_ext(const ExtReal& x);  // domain error outside [-1, 1]

inline Rational one_like(const Rational&) { return Rational(1); }
inline ExtReal one_like(const ExtReal& x) { return ExtReal(1, x.precision_digits()); }
inline Rational zero_like(const Rational&) { return Rational(0); }
inline ExtReal zero_like(const ExtReal& x) { return ExtReal(0, x.precision_digits()); }
inline Rational abs_value(const Rational& x) { return abs(x); }
inline ExtReal abs_value(const ExtReal& x) { return abs(x); }

}  // namespace chebcert
