#pragma once

#include <vector>

#include "chebcert/int_polynomial.hpp"
#include "chebcert/rational.hpp"

namespace chebcert {

/// The k-th members of the three coupled polynomial families in x = t^2:
///   T_{2k}(t)   = (-1)^k + P_k(t^2)
///   T_{2k-1}(t) = (-1)^(k-1) (2k-1) t + t Q_{k-1}(t^2)
///   R_k(x)      = 2 P_k(x) - 4 (-1)^k (2k+1) x
/// P_k(0) = Q_k(0) = 0; deg P_k = deg Q_k = k for k >= 1.
struct DecompTriple {
  unsigned k;
  IntPolynomial P, Q, R;
};

/// Build P_k, Q_k, R_k for k = 0..k_max by the coupled recursions
///   P_k = -P_{k-1} + 2 (-1)^(k-1) (2k-1) x + 2 x Q_{k-1}
///   Q_k = (4x - 1) Q_{k-1} - 2 P_{k-1} + 4 (-1)^(k-1) (2k-1) x
/// with P_0 = Q_0 = 0. All coefficients exact integers.
std::vector<DecompTriple> build_decomposition(unsigned k_max);

/// T_{2k}(t) == (-1)^k + P_k(t^2), checked in exact rational arithmetic.
bool verify_even_identity(unsigned k, const Rational& t);

/// T_{2k-1}(t) == (-1)^(k-1) (2k-1) t + t Q_{k-1}(t^2); requires k >= 1.
bool verify_odd_identity(unsigned k, const Rational& t);

/// Both of (requires k >= 1):
///   R_k(t^2) == -R_{k-1}(t^2) + 4 t T_{2k-1}(t) + (-1)^(k-1) 8 t^2
///   Q_k(t^2) == (4t^2 - 1) Q_{k-1}(t^2) - R_{k-1}(t^2)
bool verify_r_recursion(unsigned k, const Rational& t);

/// |Q_k(t^2)| / t <= 4 k^2 t + 4 sum_{j=1}^{k-1} (k-j) min{1, (2j-1) t},
/// exact comparison; valid regime 0 < t <= 1/sqrt(2), enforced as 2 t^2 <= 1.
bool verify_q_inequality(unsigned k, const Rational& t);

}  // namespace chebcert
