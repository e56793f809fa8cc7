#include "chebcert/certificate.hpp"

#include <stdexcept>

#include "chebcert/decimal.hpp"
#include "chebcert/supremum.hpp"

namespace chebcert {

namespace {

const char* const kReferenceSup[30] = {
    "0.444444444444", "0.344265186330", "0.330166016890", "0.325185126688",
    "0.322817680242", "0.321499599981", "0.320688247098", "0.320152568605",
    "0.319780050865", "0.319510389628", "0.319308836395", "0.319154197729",
    "0.319032940515", "0.318936089320", "0.318857498690", "0.318792844850",
    "0.318739013405", "0.318693714591", "0.318655234248", "0.318622268380",
    "0.318593810687", "0.318569074526", "0.318547437753", "0.318528403079",
    "0.318511569147", "0.318496609147", "0.318483254782", "0.318471284130",
    "0.318460512343", "0.318450784453"};

mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// floor(nu / beta) for rational beta > 0.
mpz_class floor_ratio(unsigned nu, const Rational& beta) {
  return floor_div(static_cast<long>(nu) * beta.den(), beta.num());
}

Rational left_alpha_endpoint(unsigned nu, const Rational& beta) {
  const mpz_class f = floor_ratio(nu, beta);
  return Rational(mpz_class(2 * static_cast<long>(nu) + 1), mpz_class(2 * f + 1));
}

}  // namespace

const char* reference_sup_12digits(unsigned nu) {
  if (nu < 1 || nu > 30) throw std::out_of_range("reference_sup_12digits: nu in 1..30");
  return kReferenceSup[nu - 1];
}

bool params_feasible(const CertParams& p) {
  if (!(p.alpha > Rational(1)) || !(p.beta > Rational(1))) return false;
  const Rational n(2 * static_cast<long>(p.nu) + 1);
  if (p.alpha < left_alpha_endpoint(p.nu, p.beta)) return false;
  // alpha <= n / sqrt(2), i.e. 2 alpha^2 <= n^2 (alpha > 0).
  return Rational(2) * p.alpha * p.alpha <= n * n;
}

std::pair<Rational, Rational> u_functions(unsigned nu, const Rational& beta) {
  if (nu < 1) throw std::invalid_argument("u_functions: nu must be >= 1");
  if (!(beta > Rational(1))) throw std::domain_error("u_functions: beta must be > 1");
  const Rational v(static_cast<long>(nu));
  const Rational n(2 * static_cast<long>(nu) + 1);
  const Rational b = beta;
  const Rational u1 =
      ((Rational(12) * b - Rational(8)) * v * v * v +
       (Rational(12) * b * b * b + Rational(18) * b) * v * v +
       Rational(2) * b * b * v) /
      (Rational(3) * b * b * b * n * n * n);
  const Rational u2 =
      (Rational(2) * (b - Rational(1)) * (b - Rational(1)) * v * v +
       Rational(2) * b * (b - Rational(1)) * v) /
      (b * b * n * n);
  return {u1, u2};
}

std::pair<Rational, Rational> u_limits(const Rational& beta) {
  if (!(beta > Rational(1))) throw std::domain_error("u_limits: beta must be > 1");
  const Rational b = beta;
  return {(Rational(3) * b - Rational(2)) / (Rational(6) * b * b * b),
          (b - Rational(1)) * (b - Rational(1)) / (Rational(2) * b * b)};
}

Rational s1_bound_general(unsigned nu, const Rational& alpha, const Rational& beta) {
  if (!params_feasible({nu, alpha, beta})) {
    throw std::domain_error("s1_bound_general: infeasible parameters");
  }
  const auto [u1, u2] = u_functions(nu, beta);
  return u1 * alpha + u2;
}

Rational s2_bound(const Rational& alpha) {
  if (!(alpha > Rational(1))) throw std::domain_error("s2_bound: alpha must be > 1");
  return Rational(1) / alpha + Rational(1) / (alpha * alpha);
}

Rational envelope_U(const Rational& alpha) {
  if (!(alpha > Rational(1))) throw std::domain_error("envelope_U: alpha must be > 1");
  const auto [u1, u2] = u_functions(31, Rational(5, 2));
  const Rational rising = u1 * alpha + u2;
  const Rational falling = s2_bound(alpha);
  return rising > falling ? rising : falling;
}

EnvelopeMinimum minimize_U(int precision) {
  const auto [a, b] = u_functions(31, Rational(5, 2));

  // a x^3 + b x^2 - x - 1, cleared to integer coefficients.
  const mpz_class L = lcm(a.den(), b.den());
  const IntPolynomial cubic(
      {mpz_class(-L), mpz_class(-L), mpz_class(b.num() * (L / b.den())),
       mpz_class(a.num() * (L / a.den()))},
      Var::x);

  Rational lo(3), hi(4);
  if (!(cubic.sign_at(lo) < 0 && cubic.sign_at(hi) > 0)) {
    throw std::logic_error("minimize_U: crossing not bracketed by [3, 4]");
  }
  for (int i = 0; i < 85; ++i) {
    const Rational mid = (lo + hi) / Rational(2);
    const int s = cubic.sign_at(mid);
    if (s == 0) { lo = hi = mid; break; }
    if (s < 0) lo = mid;
    else hi = mid;
  }

  EnvelopeMinimum m;
  m.alpha_lo = lo;
  m.alpha_hi = hi;
  // The rising branch increases, the falling branch decreases, so the
  // envelope over the bracket is enclosed endpoint-wise.
  const Rational rise_lo = a * lo + b, rise_hi = a * hi + b;
  const Rational fall_lo = s2_bound(hi), fall_hi = s2_bound(lo);
  m.u_lo = rise_lo > fall_lo ? rise_lo : fall_lo;
  m.u_hi = rise_hi > fall_hi ? rise_hi : fall_hi;

  const Rational alpha_mid = (lo + hi) / Rational(2);
  m.alpha_star = ExtReal(alpha_mid, precision);
  m.u_star = ExtReal((m.u_lo + m.u_hi) / Rational(2), precision);
  m.cubic_residual = abs(cubic.eval(alpha_mid));
  return m;
}

bool check_feasibility_remark(unsigned nu_from, unsigned nu_to) {
  if (nu_from < 31) throw std::domain_error("check_feasibility_remark: range must start at nu >= 31");
  if (nu_to < nu_from) throw std::invalid_argument("check_feasibility_remark: empty range");
  const EnvelopeMinimum m = minimize_U();
  const Rational beta(5, 2);
  const Rational cap(315, 119);
  for (unsigned nu = nu_from; nu <= nu_to; ++nu) {
    const long n = 2 * static_cast<long>(nu) + 1;
    const Rational left = left_alpha_endpoint(nu, beta);
    const Rational loose(10 * static_cast<long>(nu) + 5, 4 * static_cast<long>(nu) - 5);
    if (!(left < loose && loose <= cap)) return false;
    if (n < 63) return false;
    if (!(m.alpha_lo > left)) return false;
    if (!(Rational(2) * m.alpha_hi * m.alpha_hi < Rational(n) * Rational(n))) return false;
  }
  return true;
}

bool check_monotone_decrease(unsigned nu_from, unsigned nu_to, const Rational& beta) {
  if (nu_to <= nu_from) throw std::invalid_argument("check_monotone_decrease: empty range");
  auto [u1_prev, u2_prev] = u_functions(nu_from, beta);
  for (unsigned nu = nu_from + 1; nu <= nu_to; ++nu) {
    const auto [u1, u2] = u_functions(nu, beta);
    if (!(u1 < u1_prev && u2 < u2_prev)) return false;
    u1_prev = u1;
    u2_prev = u2;
  }
  return true;
}

BoundCertificate verify_theorem(unsigned nu_max) {
  if (nu_max < 31) throw std::invalid_argument("verify_theorem: nu_max must be >= 31");

  BoundCertificate cert;
  const Rational beta(5, 2);
  const auto [u1, u2] = u_functions(31, beta);
  cert.u1_at_31 = u1;
  cert.u2_at_31 = u2;

  const Rational quarter(1, 4);
  const Rational four_ninths_sq(16, 81);
  const Rational quarter_sq(1, 16);

  // (1) supremum sweep against the two-sided bound, and the witness ordering
  bool sup_ok = true, witness_ok = true;
  const unsigned sweep_max = nu_max < 200 ? nu_max : 200;
  bool table_ok = true;
  for (unsigned nu = 1; nu <= sweep_max; ++nu) {
    const SupResult r = compute_sup(nu, 12);
    if (!(r.value_sq_lo >= quarter_sq && r.value_sq_hi <= four_ninths_sq)) sup_ok = false;
    const Rational w = lower_bound_witness(nu);
    if (!(w >= quarter && w * w <= r.value_sq_lo)) witness_ok = false;
    // (2) reference-table match to +-1 in the 12th fractional digit
    if (nu <= 30) {
      const Rational shown = parse_decimal(round_decimal(r.value, 12).text);
      const Rational ref = parse_decimal(reference_sup_12digits(nu));
      if (abs(shown - ref) > Rational::pow10(-12)) table_ok = false;
    }
  }
  cert.checks["sup_bounds"] = sup_ok;
  cert.checks["lower_bound"] = witness_ok;
  cert.checks["table_match"] = table_ok;

  // (3) exactness of the specialized bound coefficients
  cert.checks["u1_exact"] = u1 == Rational(2344592, 31255875);
  cert.checks["u2_exact"] = u2 == Rational(6076, 33075);
  const auto [l1, l2] = u_limits(beta);
  cert.checks["u_limits_exact"] = l1 == Rational(22, 375) && l2 == Rational(9, 50);

  // (4) envelope minimum strictly below 4/9
  const EnvelopeMinimum m = minimize_U();
  cert.alpha_star = m.alpha_star;
  cert.U_at_alpha_star = m.u_star;
  cert.checks["envelope_minimum"] = m.u_hi < Rational(4, 9);

  // (5), (6) exact loops up to nu_max
  cert.checks["feasibility"] = check_feasibility_remark(31, nu_max);
  cert.checks["monotone_u"] = check_monotone_decrease(31, nu_max, beta);

  cert.feasible_interval = {Rational(315, 119),
                            sqrt_ext(ExtReal(Rational(63 * 63, 2))) };

  cert.all_passed = true;
  for (const auto& [name, ok] : cert.checks) {
    if (!ok) cert.all_passed = false;
  }
  return cert;
}

}  // namespace chebcert
