#include "chebcert/decomposition.hpp"

#include <stdexcept>

#include "chebcert/chebyshev.hpp"

namespace chebcert {

std::vector<DecompTriple> build_decomposition(unsigned k_max) {
  std::vector<DecompTriple> out;
  out.reserve(k_max + 1);

  const IntPolynomial zero = IntPolynomial::zero(Var::x);
  auto linear = [](long c) {  // c * x
    return IntPolynomial({0, mpz_class(c)}, Var::x);
  };
  auto r_of = [&](unsigned k, const IntPolynomial& P) {
    const long s = k % 2 == 0 ? 1 : -1;
    return P.scaled(2) - linear(4 * s * static_cast<long>(2 * k + 1));
  };

  out.push_back({0, zero, zero, r_of(0, zero)});
  for (unsigned k = 1; k <= k_max; ++k) {
    const IntPolynomial& Pp = out.back().P;
    const IntPolynomial& Qp = out.back().Q;
    const long s = (k - 1) % 2 == 0 ? 1 : -1;  // (-1)^(k-1)
    const long m = s * static_cast<long>(2 * k - 1);

    IntPolynomial P = (zero - Pp) + linear(2 * m) + Qp.times_var().scaled(2);
    IntPolynomial Q =
        Qp.times_var().scaled(4) - Qp - Pp.scaled(2) + linear(4 * m);
    out.push_back({k, std::move(P), std::move(Q), zero});
    out.back().R = r_of(k, out.back().P);
  }
  return out;
}

bool verify_even_identity(unsigned k, const Rational& t) {
  const auto seq = build_decomposition(k);
  const Rational lhs = cheb_eval_recurrence(2 * k, t);
  const Rational sign(k % 2 == 0 ? 1 : -1);
  return lhs == sign + seq[k].P.eval(t * t);
}

bool verify_odd_identity(unsigned k, const Rational& t) {
  if (k < 1) throw std::invalid_argument("verify_odd_identity: k must be >= 1");
  const auto seq = build_decomposition(k - 1);
  const Rational lhs = cheb_eval_recurrence(2 * k - 1, t);
  const Rational sign((k - 1) % 2 == 0 ? 1 : -1);
  const Rational m = sign * Rational(static_cast<long>(2 * k - 1));
  return lhs == m * t + t * seq[k - 1].Q.eval(t * t);
}

bool verify_r_recursion(unsigned k, const Rational& t) {
  if (k < 1) throw std::invalid_argument("verify_r_recursion: k must be >= 1");
  const auto seq = build_decomposition(k);
  const Rational x = t * t;
  const Rational sign((k - 1) % 2 == 0 ? 1 : -1);

  const Rational r_lhs = seq[k].R.eval(x);
  const Rational r_rhs = -seq[k - 1].R.eval(x) +
                         Rational(4) * t * cheb_eval_recurrence(2 * k - 1, t) +
                         sign * Rational(8) * x;
  if (r_lhs != r_rhs) return false;

  const Rational q_lhs = seq[k].Q.eval(x);
  const Rational q_rhs =
      (Rational(4) * x - Rational(1)) * seq[k - 1].Q.eval(x) - seq[k - 1].R.eval(x);
  return q_lhs == q_rhs;
}

bool verify_q_inequality(unsigned k, const Rational& t) {
  if (k < 1) throw std::invalid_argument("verify_q_inequality: k must be >= 1");
  if (t.sign() <= 0 || Rational(2) * t * t > Rational(1)) {
    throw std::domain_error("verify_q_inequality: t must satisfy 0 < t <= 1/sqrt(2)");
  }
  const auto seq = build_decomposition(k);
  const Rational lhs = abs(seq[k].Q.eval(t * t)) / t;

  Rational rhs = Rational(static_cast<long>(4 * k * k)) * t;
  for (unsigned j = 1; j < k; ++j) {
    rhs += Rational(4) * Rational(static_cast<long>(k - j)) * odd_cheb_bound(j - 1, t);
  }
  return lhs <= rhs;
}

}  // namespace chebcert
