#include "chebcert/supremum.hpp"

#include <algorithm>
#include <stdexcept>

#include "chebcert/chebyshev.hpp"
#include "chebcert/decimal.hpp"
#include "chebcert/decomposition.hpp"

namespace chebcert {

namespace {

IntPolynomial q_polynomial(unsigned nu) {
  return build_decomposition(nu).back().Q;
}

// Shared evaluation state for one nu. The objective in x = t^2 is
// f(x) = |Q(x)| / (n^2 sqrt(x)); all comparisons run on f^2, which is
// rational at rational x.
struct SupEngine {
  unsigned nu;
  long n;
  IntPolynomial Q;
  IntPolynomial crit;
  Rational n4;

  explicit SupEngine(unsigned nu_in)
      : nu(nu_in),
        n(static_cast<long>(2 * nu_in + 1)),
        Q(q_polynomial(nu_in)),
        crit(Q.derivative().times_var().scaled(2) - Q) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(n), 4);
    n4 = Rational(p);
  }

  Rational f_sq_at(const Rational& x) const {
    const Rational qv = Q.eval(x);
    return qv * qv / (n4 * x);
  }

  // Rigorous enclosure of (sup of f over the bracket)^2. Lower end is
  // attained at a probe; upper end comes from interval Horner on Q. A
  // bracket with lo == 0 is bounded through q = Q/x, since f^2 = x q(x)^2/n^4.
  void enclose(SupCandidate& c) const {
    const RootBracket& b = c.bracket;
    if (b.exact) {
      c.value_sq_lo = c.value_sq_hi = f_sq_at(b.lo);
      return;
    }
    if (b.lo.is_zero()) {
      IntPolynomial q(std::vector<mpz_class>(Q.coefficients().begin() + 1,
                                             Q.coefficients().end()),
                      Var::x);
      const RationalInterval qi = eval_interval(q, {b.lo, b.hi});
      const Rational mag = std::max(abs(qi.lo), abs(qi.hi));
      c.value_sq_lo = f_sq_at(b.hi);
      c.value_sq_hi = b.hi * mag * mag / n4;
      return;
    }
    const RationalInterval qi = eval_interval(Q, {b.lo, b.hi});
    const Rational mag = std::max(abs(qi.lo), abs(qi.hi));
    c.value_sq_hi = mag * mag / (n4 * b.lo);
    const Rational mid = (b.lo + b.hi) / Rational(2);
    c.value_sq_lo = std::max({f_sq_at(b.lo), f_sq_at(mid), f_sq_at(b.hi)});
  }
};

Rational max_lower(const std::vector<SupCandidate>& cands) {
  Rational m(0);
  for (const auto& c : cands) m = std::max(m, c.value_sq_lo);
  return m;
}

Rational max_upper(const std::vector<SupCandidate>& cands) {
  Rational m(0);
  for (const auto& c : cands) m = std::max(m, c.value_sq_hi);
  return m;
}

// Refine the candidate set until the global enclosure [max lo, max hi] is
// tighter than tol_sq. Dominated candidates (upper end below the best
// attained lower end) are left as-is.
void tighten(const SupEngine& eng, std::vector<SupCandidate>& cands, const Rational& tol_sq) {
  for (int pass = 0; pass < 200; ++pass) {
    const Rational best_lo = max_lower(cands);
    bool changed = false;
    for (auto& c : cands) {
      if (c.is_endpoint || c.bracket.exact || !c.bracket.resolved) continue;
      if (c.value_sq_hi < best_lo) continue;
      if (c.value_sq_hi - c.value_sq_lo <= tol_sq) continue;
      RootBracket& b = c.bracket;
      refine_to_width(eng.crit, b, (b.hi - b.lo) / Rational(256));
      eng.enclose(c);
      changed = true;
    }
    if (!changed) return;
  }
  throw std::logic_error("supremum: enclosure failed to converge");
}

}  // namespace

Rational objective(unsigned nu, const Rational& t) {
  if (nu < 1) throw std::invalid_argument("objective: nu must be >= 1");
  if (t.sign() <= 0 || t > Rational(1)) throw std::domain_error("objective: t outside (0, 1]");
  const IntPolynomial Q = q_polynomial(nu);
  const long n = static_cast<long>(2 * nu + 1);
  return abs(Q.eval(t * t)) / (Rational(n * n) * t);
}

ExtReal objective(unsigned nu, const ExtReal& t) {
  if (nu < 1) throw std::invalid_argument("objective: nu must be >= 1");
  if (t.sign() <= 0 || t > ExtReal(1, t.precision_digits())) {
    throw std::domain_error("objective: t outside (0, 1]");
  }
  const IntPolynomial Q = q_polynomial(nu);
  const long n = static_cast<long>(2 * nu + 1);
  return abs(Q.eval(t * t)) / (ExtReal(n * n, t.precision_digits()) * t);
}

ExtReal objective_direct(unsigned nu, const ExtReal& t) {
  if (nu < 1) throw std::invalid_argument("objective_direct: nu must be >= 1");
  if (t.sign() <= 0 || t > ExtReal(1, t.precision_digits())) {
    throw std::domain_error("objective_direct: t outside (0, 1]");
  }
  const int prec = t.precision_digits();
  const long n = static_cast<long>(2 * nu + 1);
  const long sign = nu % 2 == 0 ? 1 : -1;
  const ExtReal T = cheb_eval_recurrence(2 * nu + 1, t);
  const ExtReal nt = ExtReal(n, prec) * t;
  return abs(ExtReal(sign, prec) * nt - T) / (nt * nt);
}

CriticalPolynomial critical_polynomial(unsigned nu) {
  if (nu < 1) throw std::invalid_argument("critical_polynomial: nu must be >= 1");
  const IntPolynomial Q = q_polynomial(nu);
  return {nu, Q.derivative().times_var().scaled(2) - Q};
}

SupResult compute_sup(unsigned nu, int digits, int precision) {
  if (nu < 1) throw std::invalid_argument("compute_sup: nu must be >= 1");
  if (digits < 1) throw std::invalid_argument("compute_sup: digits must be >= 1");
  if (digits > precision - 8) {
    throw std::invalid_argument("compute_sup: requires digits <= precision - 8");
  }

  const SupEngine eng(nu);

  std::vector<SupCandidate> cands;
  {
    SupCandidate endpoint;
    endpoint.bracket = {Rational(1), Rational(1), true, true};
    endpoint.is_endpoint = true;
    endpoint.value_sq_lo = endpoint.value_sq_hi = eng.f_sq_at(Rational(1));
    cands.push_back(std::move(endpoint));
  }
  for (const RootBracket& b : isolate_roots(eng.crit)) {
    SupCandidate c;
    c.bracket = b;
    eng.enclose(c);
    cands.push_back(std::move(c));
  }

  const auto render = [&](const Rational& sq) {
    return round_decimal(sqrt_ext(ExtReal(sq, precision)), digits).text;
  };

  // Tighten until the two ends of the global enclosure print identically; a
  // value sitting exactly on a rounding boundary bottoms out at the width
  // floor, far below the requested digits.
  Rational tol_sq = Rational::pow10(-(digits + 4));
  const Rational floor_sq = Rational::pow10(-(digits + 30));
  for (;;) {
    tighten(eng, cands, tol_sq);
    if (render(max_lower(cands)) == render(max_upper(cands))) break;
    if (tol_sq <= floor_sq) break;
    tol_sq = tol_sq / Rational(10000);
  }

  SupResult res;
  res.nu = nu;
  res.method = "critical-points";
  res.candidates = cands;
  res.value_sq_lo = max_lower(cands);
  res.value_sq_hi = max_upper(cands);

  size_t win = 0;
  for (size_t i = 1; i < cands.size(); ++i) {
    if (cands[i].value_sq_hi > cands[win].value_sq_hi) win = i;
  }
  const SupCandidate& w = cands[win];
  res.maximizer_is_endpoint = w.is_endpoint;
  res.maximizer_bracket = w.bracket;
  if (w.is_endpoint) {
    res.exact_value = abs(eng.Q.eval(Rational(1))) / Rational(eng.n * eng.n);
    res.value = ExtReal(*res.exact_value, precision);
    res.maximizer_t = ExtReal(1, precision);
  } else {
    const Rational mid_sq = (res.value_sq_lo + res.value_sq_hi) / Rational(2);
    res.value = sqrt_ext(ExtReal(mid_sq, precision));
    const Rational x_mid = (w.bracket.lo + w.bracket.hi) / Rational(2);
    res.maximizer_t = sqrt_ext(ExtReal(x_mid, precision));
  }
  return res;
}

ExtReal grid_oracle(unsigned nu, long points, int refine_iters, int precision) {
  if (nu < 1) throw std::invalid_argument("grid_oracle: nu must be >= 1");
  if (points < 4 * (2 * static_cast<long>(nu) + 1)) {
    throw std::invalid_argument("grid_oracle: need at least 4(2nu+1) points");
  }
  const IntPolynomial Q = q_polynomial(nu);
  const long n = static_cast<long>(2 * nu + 1);
  const ExtReal n2(n * n, precision);

  const auto f = [&](const ExtReal& t) { return abs(Q.eval(t * t)) / (n2 * t); };

  std::vector<ExtReal> ts, vs;
  ts.reserve(points);
  vs.reserve(points);
  for (long i = 1; i <= points; ++i) {
    ts.push_back(ExtReal(Rational(i, points), precision));
    vs.push_back(f(ts.back()));
  }

  ExtReal best = vs.back();

  const ExtReal one(1, precision);
  const ExtReal half = one / ExtReal(2, precision);
  const ExtReal inv_phi = (sqrt_ext(ExtReal(5, precision)) - one) * half;   // 0.618...
  const ExtReal inv_phi2 = one - inv_phi;                                   // 0.381...

  const auto golden_refine = [&](ExtReal a, ExtReal b) {
    ExtReal c = a + inv_phi2 * (b - a);
    ExtReal d = a + inv_phi * (b - a);
    ExtReal fc = f(c), fd = f(d);
    for (int it = 0; it < refine_iters; ++it) {
      if (fc >= fd) {
        b = d; d = c; fd = fc;
        c = a + inv_phi2 * (b - a);
        fc = f(c);
      } else {
        a = c; c = d; fc = fd;
        d = a + inv_phi * (b - a);
        fd = f(d);
      }
    }
    return fc >= fd ? fc : fd;
  };

  for (long i = 1; i < points; ++i) {
    const bool interior_max =
        i + 1 < points && vs[i] >= vs[i - 1] && vs[i] >= vs[i + 1];
    const bool boundary_max = i + 1 == points && vs[i] >= vs[i - 1];
    if (!interior_max && !boundary_max) continue;
    const ExtReal& a = ts[i - 1];
    const ExtReal& b = i + 1 < points ? ts[i + 1] : ts[i];
    const ExtReal refined = golden_refine(a, b);
    if (refined > best) best = refined;
  }
  return best;
}

Rational lower_bound_witness(unsigned nu) {
  if (nu < 1) throw std::invalid_argument("lower_bound_witness: nu must be >= 1");
  const Rational t0(2, static_cast<long>(2 * nu + 1));
  const Rational T = cheb_eval_recurrence(2 * nu + 1, t0);
  return (Rational(2) - abs(T)) / Rational(4);
}

RationalInterval sup_sq_enclosure_over(unsigned nu, const Rational& x_lo,
                                       const Rational& x_hi, int digits) {
  if (nu < 1) throw std::invalid_argument("sup_sq_enclosure_over: nu must be >= 1");
  if (x_lo.sign() < 0 || x_hi > Rational(1) || x_lo >= x_hi) {
    throw std::domain_error("sup_sq_enclosure_over: need 0 <= x_lo < x_hi <= 1");
  }
  const SupEngine eng(nu);

  std::vector<SupCandidate> cands;
  const auto add_point = [&](const Rational& x) {
    SupCandidate c;
    c.bracket = {x, x, true, true};
    c.is_endpoint = true;
    c.value_sq_lo = c.value_sq_hi = eng.f_sq_at(x);
    cands.push_back(std::move(c));
  };
  if (x_lo.sign() > 0) add_point(x_lo);  // at x_lo = 0 the objective vanishes
  add_point(x_hi);

  for (RootBracket b : isolate_roots(eng.crit)) {
    // Split straddling brackets at the region edges so each candidate lies
    // inside or outside; a root exactly on an edge collapses to that edge.
    for (const Rational& edge : {x_lo, x_hi}) {
      while (!b.exact && b.lo < edge && edge < b.hi) {
        if (eng.crit.sign_at(edge) == 0) {
          b = {edge, edge, true, true};
          break;
        }
        refine_to_width(eng.crit, b, (b.hi - b.lo) / Rational(2));
      }
    }
    if (b.hi <= x_lo || b.lo >= x_hi) continue;
    SupCandidate c;
    c.bracket = b;
    eng.enclose(c);
    cands.push_back(std::move(c));
  }

  tighten(eng, cands, Rational::pow10(-(digits + 4)));
  return {max_lower(cands), max_upper(cands)};
}

}  // namespace chebcert
