#include "chebcert/int_polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace chebcert {

namespace {
void trim(std::vector<mpz_class>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}
}  // namespace

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs, Var var)
    : coeffs_(std::move(coeffs)), var_(var) {
  trim(coeffs_);
}

const mpz_class& IntPolynomial::coeff(size_t i) const {
  static const mpz_class kZero = 0;
  return i < coeffs_.size() ? coeffs_[i] : kZero;
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return zero(var_);
  std::vector<mpz_class> d(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return IntPolynomial(std::move(d), var_);
}

IntPolynomial IntPolynomial::times_var() const {
  if (is_zero()) return *this;
  std::vector<mpz_class> c(coeffs_.size() + 1);
  for (size_t i = 0; i < coeffs_.size(); ++i) c[i + 1] = coeffs_[i];
  return IntPolynomial(std::move(c), var_);
}

IntPolynomial IntPolynomial::scaled(const mpz_class& c) const {
  std::vector<mpz_class> out(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] * c;
  return IntPolynomial(std::move(out), var_);
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<mpz_class> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return IntPolynomial(std::move(c), a.var_);
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<mpz_class> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return IntPolynomial(std::move(c), a.var_);
}

Rational IntPolynomial::eval(const Rational& v) const {
  if (is_zero()) return Rational(0);
  const mpz_class scaled = eval_scaled(v.num(), v.den());
  mpz_class dpow;
  mpz_pow_ui(dpow.get_mpz_t(), v.den().get_mpz_t(), static_cast<unsigned long>(degree()));
  return Rational(scaled, dpow);
}

ExtReal IntPolynomial::eval(const ExtReal& v) const {
  ExtReal acc(0, v.precision_digits());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * v + ExtReal(*it, v.precision_digits());
  }
  return acc;
}

mpz_class IntPolynomial::eval_scaled(const mpz_class& num, const mpz_class& den) const {
  if (is_zero()) return 0;
  mpz_class acc = coeffs_.back();
  mpz_class dpow = 1;
  for (size_t i = coeffs_.size() - 1; i-- > 0;) {
    dpow *= den;
    acc = acc * num + coeffs_[i] * dpow;
  }
  return acc;
}

int IntPolynomial::sign_at(const Rational& v) const {
  if (is_zero()) return 0;
  return sgn(eval_scaled(v.num(), v.den()));
}

std::string IntPolynomial::coeff_list_str() const {
  if (is_zero()) return "[0]";
  std::string s = "[";
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) s += ", ";
    s += coeffs_[i].get_str();
  }
  return s + "]";
}

RationalInterval eval_interval(const IntPolynomial& p, const RationalInterval& xi) {
  if (xi.lo > xi.hi) throw std::invalid_argument("eval_interval: inverted interval");
  if (p.is_zero()) return {Rational(0), Rational(0)};

  // Scaled-integer interval Horner over [a/D, b/D]: acc_i holds the range of
  // D^(n-i) * p_tail, so every step stays in integers.
  const mpz_class D = xi.lo.den() * (xi.hi.den() / gcd(xi.lo.den(), xi.hi.den()));
  const mpz_class a = xi.lo.num() * (D / xi.lo.den());
  const mpz_class b = xi.hi.num() * (D / xi.hi.den());

  const auto& c = p.coefficients();
  mpz_class lo = c.back(), hi = c.back();
  mpz_class dpow = 1;
  mpz_class p1, p2, p3, p4;
  for (size_t i = c.size() - 1; i-- > 0;) {
    dpow *= D;
    p1 = lo * a; p2 = lo * b; p3 = hi * a; p4 = hi * b;
    lo = std::min(std::min(p1, p2), std::min(p3, p4));
    hi = std::max(std::max(p1, p2), std::max(p3, p4));
    const mpz_class term = c[i] * dpow;
    lo += term;
    hi += term;
  }
  return {Rational(lo, dpow), Rational(hi, dpow)};
}

}  // namespace chebcert
