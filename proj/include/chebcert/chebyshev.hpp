#pragma once

#include <stdexcept>

#include "chebcert/extreal.hpp"
#include "chebcert/int_polynomial.hpp"
#include "chebcert/rational.hpp"

namespace chebcert {

/// T_k(t) by the three-term recurrence T_{j+1} = 2 t T_j - T_{j-1}.
/// Exact on rational input.
template <typename S>
S cheb_eval_recurrence(unsigned k, const S& t) {
  S prev = one_like(t);
  if (k == 0) return prev;
  S cur = t;
  const S two_t = t + t;
  for (unsigned j = 1; j < k; ++j) {
    S next = two_t * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// T_k(t) by Clenshaw's backward recurrence applied to the one-term
/// Chebyshev series with coefficient 1 at index k. Exact on rational input.
template <typename S>
S cheb_eval_clenshaw(unsigned k, const S& t) {
  if (k == 0) return one_like(t);
  const S two_t = t + t;
  S b_up2 = zero_like(t);  // b_{k+2}
  S b_up1 = one_like(t);   // b_{k+1} seeded with the series coefficient c_k = 1
  for (unsigned j = k; j-- > 1;) {
    S b = two_t * b_up1 - b_up2;
    b_up2 = std::move(b_up1);
    b_up1 = std::move(b);
  }
  return t * b_up1 - b_up2;
}

/// T_k(t) = cos(k arccos t); defined on [-1, 1] only.
ExtReal cheb_eval_trig(unsigned k, const ExtReal& t);

/// Exact integer coefficients of T_k in the variable t, constant term first.
IntPolynomial cheb_expand(unsigned k);

/// min{1, (2k+1) t} for t in [0, 1]; bounds |T_{2k+1}(t)| from above.
Rational odd_cheb_bound(unsigned k, const Rational& t);
ExtReal odd_cheb_bound(unsigned k, const ExtReal& t);

}  // namespace chebcert
