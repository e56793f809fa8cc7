#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chebcert/extreal.hpp"
#include "chebcert/int_polynomial.hpp"
#include "chebcert/rational.hpp"
#include "chebcert/root_isolation.hpp"

namespace chebcert {

/// Stationarity polynomial of the smooth signed objective Q_nu(t^2)/t on
/// (0, 1): p(x) = 2 x Q_nu'(x) - Q_nu(x), with x = t^2. p(0) = 0.
struct CriticalPolynomial {
  unsigned nu;
  IntPolynomial p;
};

/// One candidate for the maximum: either the t = 1 endpoint or a bracket
/// around an interior stationary point, with a rigorous enclosure of
/// (sup of the objective over the bracket)^2 as exact rationals.
struct SupCandidate {
  RootBracket bracket;  // in x = t^2; the endpoint candidate is [1, 1]
  bool is_endpoint = false;
  Rational value_sq_lo, value_sq_hi;
};

/// A certified supremum C_nu/(2nu+1): the reported value is max over the
/// candidate set, enclosed by [value_sq_lo, value_sq_hi] (squares, exact).
struct SupResult {
  unsigned nu = 0;
  ExtReal value;
  ExtReal maximizer_t;
  std::vector<SupCandidate> candidates;
  std::string method;
  Rational value_sq_lo, value_sq_hi;
  bool maximizer_is_endpoint = false;
  std::optional<Rational> exact_value;  // set when t = 1 attains the maximum
  RootBracket maximizer_bracket;        // in x
};

/// |Q_nu(t^2)| / ((2nu+1)^2 t) on (0, 1]; exact on rational input. Equals the
/// direct-difference form identically, with the cancellation at small t
/// removed.
Rational objective(unsigned nu, const Rational& t);
ExtReal objective(unsigned nu, const ExtReal& t);

/// |(-1)^nu (2nu+1) t - T_{2nu+1}(t)| / ((2nu+1) t)^2, evaluated by direct
/// subtraction; cross-check path only.
ExtReal objective_direct(unsigned nu, const ExtReal& t);

CriticalPolynomial critical_polynomial(unsigned nu);

/// Certified supremum over (0, 1]: candidates are the t = 1 endpoint plus
/// every root of the critical polynomial in (0, 1), isolated exactly and
/// refined until the value is pinned to `digits` fractional digits.
SupResult compute_sup(unsigned nu, int digits = 12, int precision = ExtReal::kDefaultDigits);

/// Brute-force oracle: dense uniform sampling of the objective on (0, 1]
/// followed by golden-section refinement around every local maximum.
/// Returns the largest refined value (a lower bound on the supremum).
ExtReal grid_oracle(unsigned nu, long points, int refine_iters = 160,
                    int precision = ExtReal::kDefaultDigits);

/// (2 - |T_{2nu+1}(2/(2nu+1))|) / 4, exact; lies in [1/4, C_nu/(2nu+1)].
Rational lower_bound_witness(unsigned nu);

/// Rigorous enclosure of (sup over x in [x_lo, x_hi] of the objective)^2,
/// x_lo >= 0, x_hi <= 1. Used by the certificate module's split checks.
RationalInterval sup_sq_enclosure_over(unsigned nu, const Rational& x_lo,
                                       const Rational& x_hi, int digits);

}  // namespace chebcert
