#include "chebcert/rational.hpp"

namespace chebcert {

std::string Rational::str() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

Rational Rational::pow10(long k) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k < 0 ? -k : k));
  return k >= 0 ? Rational(p) : Rational(mpz_class(1), p);
}

Rational Rational::pow(const Rational& base, unsigned long e) {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), e);
  return Rational(n, d);
}

Rational rational_arith(const Rational& a, const Rational& b, RationalOp op) {
  switch (op) {
    case RationalOp::add: return a + b;
    case RationalOp::sub: return a - b;
    case RationalOp::mul: return a * b;
    case RationalOp::div: return a / b;
  }
  throw std::invalid_argument("rational_arith: unknown op");
}

}  // namespace chebcert
