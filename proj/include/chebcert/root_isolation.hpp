#pragma once

#include <vector>

#include "chebcert/int_polynomial.hpp"
#include "chebcert/rational.hpp"

namespace chebcert {

/// An isolating interval for one real root, endpoints rational.
///   exact:    lo == hi is the root itself.
///   resolved: the interval provably contains exactly one root. An
///             unresolved bracket (possible only past the depth cap, e.g.
///             for a multiple root) still contains every root of its
///             subinterval, so enclosure-based bounds over it remain valid.
struct RootBracket {
  Rational lo, hi;
  bool exact = false;
  bool resolved = true;
};

/// All real roots of p in the open interval (0, 1), as disjoint brackets in
/// ascending order, isolated by Descartes sign-variation bisection in exact
/// integer arithmetic. Throws on the zero polynomial.
std::vector<RootBracket> isolate_roots(const IntPolynomial& p, int max_depth = 256);

/// Shrink a sign-change bracket by exact bisection until hi - lo <= width.
/// No-op for exact or unresolved brackets.
void refine_to_width(const IntPolynomial& p, RootBracket& b, const Rational& width);

/// Descartes bound: an upper bound, matching in parity, on the number of
/// roots of p in (0, 1).
int descartes_bound_unit(const IntPolynomial& p);

}  // namespace chebcert
