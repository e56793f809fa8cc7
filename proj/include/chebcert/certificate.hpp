#pragma once

#include <map>
#include <string>
#include <utility>

#include "chebcert/extreal.hpp"
#include "chebcert/rational.hpp"

namespace chebcert {

/// Split parameters for the upper-bound proof machinery: alpha > 1, beta > 1,
/// feasible when (2nu+1)/(2*floor(nu/beta)+1) <= alpha <= (2nu+1)/sqrt(2).
struct CertParams {
  unsigned nu;
  Rational alpha;
  Rational beta;
};

bool params_feasible(const CertParams& p);

/// u1(nu) = ((12b-8)nu^3 + (12b^3+18b)nu^2 + 2b^2 nu) / (3 b^3 (2nu+1)^3)
/// u2(nu) = (2(b-1)^2 nu^2 + 2b(b-1) nu) / (b^2 (2nu+1)^2)
/// Exact rationals; these bound the slope and offset of the small-t branch.
std::pair<Rational, Rational> u_functions(unsigned nu, const Rational& beta);

/// Limits of u1, u2 as nu grows: (3b-2)/(6b^3) and (b-1)^2/(2b^2).
std::pair<Rational, Rational> u_limits(const Rational& beta);

/// u1(nu) * alpha + u2(nu); upper bound for the small-t part of the split.
/// Throws if the parameters are infeasible.
Rational s1_bound_general(unsigned nu, const Rational& alpha, const Rational& beta);

/// 1/alpha + 1/alpha^2; upper bound for the large-t part. Requires alpha > 1.
Rational s2_bound(const Rational& alpha);

/// max{ u1(31) alpha + u2(31), 1/alpha + 1/alpha^2 }. Requires alpha > 1.
Rational envelope_U(const Rational& alpha);

/// The envelope minimizer: alpha* is the unique root in (1, inf) of
/// a x^3 + b x^2 - x - 1 with a = u1(31), b = u2(31), bisected with exact
/// signs to the bracket [alpha_lo, alpha_hi]; U enclosed likewise.
struct EnvelopeMinimum {
  Rational alpha_lo, alpha_hi;  // bracket width <= 2^-85
  Rational u_lo, u_hi;
  ExtReal alpha_star;
  ExtReal u_star;
  Rational cubic_residual;  // |cubic(alpha mid)|, exact
};

EnvelopeMinimum minimize_U(int precision = ExtReal::kDefaultDigits);

/// Remark-style feasibility: for every nu in [nu_from, nu_to], with beta=5/2,
///   (2nu+1)/(2 floor(2nu/5)+1) < (10nu+5)/(4nu-5) <= 315/119,
///   2nu+1 >= 63, and alpha* strictly inside the feasible alpha interval.
/// All comparisons exact (the sqrt(2) side is squared first).
bool check_feasibility_remark(unsigned nu_from, unsigned nu_to);

/// u1 and u2 both strictly decrease at every step in [nu_from, nu_to).
bool check_monotone_decrease(unsigned nu_from, unsigned nu_to, const Rational& beta);

/// Aggregate certificate for the two-sided bound 1/4 <= C_nu/(2nu+1) <= 4/9.
struct BoundCertificate {
  Rational u1_at_31, u2_at_31;
  ExtReal alpha_star;
  ExtReal U_at_alpha_star;
  std::pair<Rational, ExtReal> feasible_interval;  // (315/119, 63/sqrt(2))
  std::map<std::string, bool> checks;
  bool all_passed = false;
};

/// Runs every check: supremum sweep over nu = 1..min(nu_max, 200) against
/// [1/4, 4/9], reference-table match for nu <= 30, exactness of u1/u2 at 31,
/// the envelope minimum below 4/9, feasibility and monotonicity up to nu_max.
BoundCertificate verify_theorem(unsigned nu_max);

/// The published 12-digit reference values of C_nu/(2nu+1), nu = 1..30.
const char* reference_sup_12digits(unsigned nu);

}  // namespace chebcert
