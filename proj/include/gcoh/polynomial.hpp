#pragma once

// Dense integer polynomials, just enough for characteristic polynomials and
// the search for their unit-constant factors.

#include <gcoh/scalar.hpp>

#include <optional>
#include <vector>

namespace gcoh {

/// Coefficients from the constant term upward; no trailing zeros.
using IntPoly = std::vector<BigInt>;

/// det(x I - A) by Faddeev-LeVerrier (all divisions are exact).
IntPoly characteristic_polynomial(const IntMatrix& a);

BigInt evaluate(const IntPoly& p, const BigInt& x);
IntMatrix evaluate(const IntPoly& p, const IntMatrix& a);

/// Quotient and remainder by a monic divisor.
std::pair<IntPoly, IntPoly> divide_monic(const IntPoly& p, const IntPoly& monic);

/**
 * The largest monic divisor of a monic p whose constant term is +-1, i.e. the
 * product of all irreducible factors whose roots are algebraic units.  Found
 * by Kronecker interpolation; std::nullopt when the search would exceed
 * `budget` candidate polynomials.
 */
std::optional<IntPoly> unit_part(const IntPoly& p, long budget = 250'000);

}  // namespace gcoh
