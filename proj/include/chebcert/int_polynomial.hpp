#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "chebcert/extreal.hpp"
#include "chebcert/rational.hpp"

namespace chebcert {

/// Which formal variable a polynomial is written in: t, or x = t^2.
enum class Var { t, x };

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients, constant term first. Kept trimmed: the leading stored
/// coefficient is nonzero unless the polynomial is identically zero.
class IntPolynomial {
 public:
  IntPolynomial() : var_(Var::x) {}
  IntPolynomial(std::vector<mpz_class> coeffs, Var var);

  static IntPolynomial zero(Var var) { return IntPolynomial({}, var); }

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Var var() const { return var_; }
  const std::vector<mpz_class>& coefficients() const { return coeffs_; }
  const mpz_class& coeff(size_t i) const;

  IntPolynomial derivative() const;
  /// Multiply by the variable (shift coefficients up one slot).
  IntPolynomial times_var() const;
  IntPolynomial scaled(const mpz_class& c) const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.var_ == b.var_ && a.coeffs_ == b.coeffs_;
  }

  Rational eval(const Rational& v) const;
  ExtReal eval(const ExtReal& v) const;
  /// den^degree * p(num/den); exact, sign-faithful for den > 0.
  mpz_class eval_scaled(const mpz_class& num, const mpz_class& den) const;
  int sign_at(const Rational& v) const;

  /// "[c0, c1, ...]" (zero polynomial renders as "[0]").
  std::string coeff_list_str() const;

 private:
  std::vector<mpz_class> coeffs_;
  Var var_;
};

/// Closed rational interval; lo <= hi.
struct RationalInterval {
  Rational lo, hi;
};

/// Interval Horner: a rigorous enclosure of p over [xi.lo, xi.hi].
RationalInterval eval_interval(const IntPolynomial& p, const RationalInterval& xi);

}  // namespace chebcert
