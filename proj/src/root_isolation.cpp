#include "chebcert/root_isolation.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace chebcert {

namespace {

// In-place Taylor shift by one: c(y) <- c(y + 1).
void taylor_shift_1(std::vector<mpz_class>& c) {
  const size_t n = c.size();
  for (size_t i = 0; i + 1 < n; ++i) {
    for (size_t j = n - 1; j-- > i;) c[j] += c[j + 1];
  }
}

int sign_variations(const std::vector<mpz_class>& c) {
  int v = 0;
  int last = 0;
  for (const auto& a : c) {
    const int s = sgn(a);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

// Variation count of (1+y)^n c(1/(1+y)): bounds the roots of c in (0, 1).
int variations_unit(const std::vector<mpz_class>& c) {
  std::vector<mpz_class> rev(c.rbegin(), c.rend());
  taylor_shift_1(rev);
  return sign_variations(rev);
}

// Divide out the largest common power of two (keeps coefficients small as
// the bisection deepens; roots are unaffected).
void strip_twos(std::vector<mpz_class>& c) {
  mp_bitcnt_t min_scan = ~static_cast<mp_bitcnt_t>(0);
  for (const auto& a : c) {
    if (a == 0) continue;
    min_scan = std::min(min_scan, mpz_scan1(a.get_mpz_t(), 0));
    if (min_scan == 0) return;
  }
  if (min_scan == ~static_cast<mp_bitcnt_t>(0)) return;
  for (auto& a : c) {
    if (a != 0) a >>= min_scan;
  }
}

struct Node {
  std::vector<mpz_class> coeffs;  // p rescaled so this node's span is (0, 1)
  Rational lo, hi;
  int depth;
};

// Exactly one root lies in the open interval (b.lo, b.hi). Shrink until both
// endpoint signs are nonzero (they then differ by parity), or the root is hit
// exactly. Endpoint-zero cases arise only when a bisection point of an outer
// interval is itself a root.
RootBracket fix_bracket(const IntPolynomial& p, Rational lo, Rational hi) {
  int s_lo = p.sign_at(lo);
  int s_hi = p.sign_at(hi);
  while (s_lo == 0 || s_hi == 0) {
    const Rational mid = (lo + hi) / Rational(2);
    const int s_m = p.sign_at(mid);
    if (s_m == 0) return {mid, mid, true, true};
    if (s_lo != 0) {
      // Root in (lo, mid) iff the signs disagree; otherwise that half holds
      // an even count, which must be zero here.
      if (s_m != s_lo) { hi = mid; s_hi = s_m; }
      else { lo = mid; s_lo = s_m; }
    } else if (s_hi != 0) {
      if (s_m != s_hi) { lo = mid; s_lo = s_m; }
      else { hi = mid; s_hi = s_m; }
    } else {
      // Both endpoints are roots of p (but not the isolated one). Probe
      // alternately toward each endpoint; the side holding the root flips
      // sign against mid once the probe passes it.
      Rational pl = (lo + mid) / Rational(2);
      Rational pr = (mid + hi) / Rational(2);
      for (;;) {
        int s = p.sign_at(pl);
        if (s == 0) return {pl, pl, true, true};
        if (s != s_m) { lo = pl; s_lo = s; hi = mid; s_hi = s_m; break; }
        s = p.sign_at(pr);
        if (s == 0) return {pr, pr, true, true};
        if (s != s_m) { lo = mid; s_lo = s_m; hi = pr; s_hi = s; break; }
        pl = (lo + pl) / Rational(2);
        pr = (pr + hi) / Rational(2);
      }
    }
  }
  return {lo, hi, false, true};
}

}  // namespace

int descartes_bound_unit(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("descartes_bound_unit: zero polynomial");
  return variations_unit(p.coefficients());
}

std::vector<RootBracket> isolate_roots(const IntPolynomial& p, int max_depth) {
  if (p.is_zero()) throw std::invalid_argument("isolate_roots: zero polynomial");

  // Roots at x = 0 are outside the open interval; strip them so the
  // transformed polynomials keep full formal degree.
  std::vector<mpz_class> base = p.coefficients();
  size_t low = 0;
  while (low < base.size() && base[low] == 0) ++low;
  base.erase(base.begin(), base.begin() + static_cast<long>(low));
  strip_twos(base);

  std::vector<RootBracket> out;
  if (base.size() <= 1) return out;  // nonzero constant: no roots

  std::vector<Node> stack;
  stack.push_back({base, Rational(0), Rational(1), 0});
  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();

    const int v = variations_unit(node.coeffs);
    if (v == 0) continue;
    if (v == 1) {
      out.push_back(fix_bracket(p, node.lo, node.hi));
      continue;
    }
    if (node.depth >= max_depth) {
      out.push_back({node.lo, node.hi, false, false});
      continue;
    }

    const Rational mid = (node.lo + node.hi) / Rational(2);
    if (p.sign_at(mid) == 0) out.push_back({mid, mid, true, true});

    // Left child: 2^n c(y/2); right child: left shifted by one.
    const size_t n = node.coeffs.size() - 1;
    std::vector<mpz_class> left(node.coeffs);
    for (size_t i = 0; i < left.size(); ++i) left[i] <<= (n - i);
    strip_twos(left);
    std::vector<mpz_class> right(left);
    taylor_shift_1(right);
    strip_twos(right);

    // Push right first so brackets pop out in ascending order.
    stack.push_back({std::move(right), mid, node.hi, node.depth + 1});
    stack.push_back({std::move(left), node.lo, mid, node.depth + 1});
  }

  std::sort(out.begin(), out.end(),
            [](const RootBracket& a, const RootBracket& b) { return a.lo < b.lo; });
  return out;
}

void refine_to_width(const IntPolynomial& p, RootBracket& b, const Rational& width) {
  if (b.exact || !b.resolved) return;
  int s_lo = p.sign_at(b.lo);
  while (b.hi - b.lo > width) {
    const Rational mid = (b.lo + b.hi) / Rational(2);
    const int s_m = p.sign_at(mid);
    if (s_m == 0) {
      b.lo = b.hi = mid;
      b.exact = true;
      return;
    }
    if (s_m == s_lo) b.lo = mid;
    else b.hi = mid;
  }
}

}  // namespace chebcert
