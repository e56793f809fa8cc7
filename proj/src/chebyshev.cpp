#include "chebcert/chebyshev.hpp"

namespace chebcert {

ExtReal cheb_eval_trig(unsigned k, const ExtReal& t) {
  const ExtReal theta = acos_ext(t);  // throws outside [-1, 1]
  return cos_ext(ExtReal(static_cast<long>(k), t.precision_digits()) * theta);
}

IntPolynomial cheb_expand(unsigned k) {
  std::vector<mpz_class> prev{1};      // T_0
  if (k == 0) return IntPolynomial(std::move(prev), Var::t);
  std::vector<mpz_class> cur{0, 1};    // T_1
  for (unsigned j = 1; j < k; ++j) {
    std::vector<mpz_class> next(j + 2);
    for (size_t i = 0; i < cur.size(); ++i) next[i + 1] = 2 * cur[i];
    for (size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return IntPolynomial(std::move(cur), Var::t);
}

Rational odd_cheb_bound(unsigned k, const Rational& t) {
  if (t.sign() < 0 || t > Rational(1)) throw std::domain_error("odd_cheb_bound: t outside [0, 1]");
  Rational slope = Rational(static_cast<long>(2 * k + 1)) * t;
  return slope < Rational(1) ? slope : Rational(1);
}

ExtReal odd_cheb_bound(unsigned k, const ExtReal& t) {
  if (t.sign() < 0 || t > ExtReal(1, t.precision_digits())) {
    throw std::domain_error("odd_cheb_bound: t outside [0, 1]");
  }
  ExtReal slope = ExtReal(static_cast<long>(2 * k + 1), t.precision_digits()) * t;
  const ExtReal one(1, t.precision_digits());
  return slope < one ? slope : one;
}

}  // namespace chebcert
