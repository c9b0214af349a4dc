#pragma once

// Skew products: tau(x, g) = (sigma(x), g c(x)) on X x G, the induced
// G-valued cocycle on the groupoid, and the identification of the groupoid of
// (X x G, tau) with the skew-product groupoid.

#include <gcoh/finite_group.hpp>
#include <gcoh/groupoid.hpp>

namespace gcoh {

/// c(x) c(sigma x) ... c(sigma^{k-1} x), left to right.
int path_product(const FiniteSystem& sys, const FiniteGroup& group, const std::vector<int>& c, Index x, long k);

/// C_k(x) C_l(y)^{-1} for the witness (k, l).
int skew_cocycle(const FiniteSystem& sys, const FiniteGroup& group, const std::vector<int>& c, Index x, Index y,
                 const Witness& w);

struct SkewProduct {
  FiniteSystem system;  // X x G with tau
  FiniteGroup group;
  std::vector<int> c;
  VerificationReport report;

  /// Point (x, g) of X x G.
  Index point(Index x, int g) const { return x * group.order() + g; }
  Index base(Index p) const { return p / group.order(); }
  int fiber(Index p) const { return static_cast<int>(p % group.order()); }
};

/// Builds tau and checks, on truncations with the given bounds: iterates of
/// tau against path products, witness independence and the cocycle identity
/// of the induced cocycle, the elementwise bijection
/// (gamma, g) <-> ((x, g), m, (y, g c(gamma))) with equal minimal witnesses,
/// and compatibility with products and inverses.
SkewProduct skew_product(const FiniteSystem& sys, const FiniteGroup& group, const std::vector<int>& c, long max_abs_m,
                         long max_witness);

}  // namespace gcoh
