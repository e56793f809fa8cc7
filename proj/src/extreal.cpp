#include "chebcert/extreal.hpp"

#include <cmath>
#include <memory>

namespace chebcert {

mpfr_prec_t ExtReal::bits_for(int decimal_digits) {
  // log2(10) = 3.3219..., plus a few guard bits so the last decimal digit
  // carried is itself correctly rounded.
  return static_cast<mpfr_prec_t>(std::ceil(decimal_digits * 3.3219280948873623)) + 8;
}

ExtReal ExtReal::from_string(const std::string& s, int precision_digits) {
  ExtReal r(precision_digits);
  if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0) {
    throw std::invalid_argument("ExtReal: cannot parse \"" + s + "\"");
  }
  return r;
}

Rational ExtReal::to_rational() const {
  if (!mpfr_number_p(v_)) throw std::domain_error("ExtReal: non-finite value");
  if (mpfr_zero_p(v_)) return Rational(0);
  mpz_class m;
  mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), v_);
  mpz_class two_abs_e;
  mpz_ui_pow_ui(two_abs_e.get_mpz_t(), 2,
                static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0) return Rational(mpz_class(m * two_abs_e));
  return Rational(m, two_abs_e);
}

std::string ExtReal::str(int significant) const {
  if (significant <= 0) significant = digits_;
  char* s = nullptr;
  int n = mpfr_asprintf(&s, "%.*Rg", significant, v_);
  if (n < 0) throw std::runtime_error("ExtReal: formatting failed");
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

ExtReal abs(const ExtReal& x) {
  ExtReal r(x.precision_digits());
  mpfr_abs(const_cast<mpfr_ptr>(r.raw()), x.raw(), MPFR_RNDN);
  return r;
}

ExtReal sqrt_ext(const ExtReal& x) {
  if (x.sign() < 0) throw std::domain_error("sqrt_ext: negative input");
  ExtReal r(x.precision_digits());
  mpfr_sqrt(const_cast<mpfr_ptr>(r.raw()), x.raw(), MPFR_RNDN);
  return r;
}

ExtReal cos_ext(const ExtReal& x) {
  ExtReal r(x.precision_digits());
  mpfr_cos(const_cast<mpfr_ptr>(r.raw()), x.raw(), MPFR_RNDN);
  return r;
}

ExtReal acos_ext(const ExtReal& x) {
  if (mpfr_cmp_si(x.raw(), 1) > 0 || mpfr_cmp_si(x.raw(), -1) < 0) {
    throw std::domain_error("acos_ext: input outside [-1, 1]");
  }
  ExtReal r(x.precision_digits());
  mpfr_acos(const_cast<mpfr_ptr>(r.raw()), x.raw(), MPFR_RNDN);
  return r;
}

}  // namespace chebcert
