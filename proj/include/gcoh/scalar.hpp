#pragma once

// Scalar types and dense matrix aliases.  Every algorithm in the library is
// templated on the scalar; the production instantiation is BigInt so that no
// intermediate ever overflows.

#include <gmpxx.h>

#include <Eigen/Core>

#include <cstdint>
#include <cstdlib>
#include <string>
#include <type_traits>
#include <utility>

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpz_class;
  using Nested = mpz_class;
  using Literal = mpz_class;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace gcoh {

using BigInt = mpz_class;

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Mat<BigInt>;
using IntVector = Vec<BigInt>;

using Index = Eigen::Index;

namespace scalar {

template <typename Scalar>
inline Scalar abs(const Scalar& a) {
  if constexpr (std::is_same_v<Scalar, BigInt>) {
    return BigInt(::abs(a));
  } else {
    return a < 0 ? Scalar(-a) : a;
  }
}

template <typename Scalar>
inline int sign(const Scalar& a) {
  if constexpr (std::is_same_v<Scalar, BigInt>) {
    return sgn(a);
  } else {
    return (a > 0) - (a < 0);
  }
}

// Floor-style remainder in [0, |m|).
template <typename Scalar>
inline Scalar mod(const Scalar& a, const Scalar& m) {
  Scalar am = abs(m);
  Scalar r = a % am;
  if (r < 0) r += am;
  return r;
}

template <typename Scalar>
inline Scalar floor_div(const Scalar& a, const Scalar& b) {
  Scalar q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

template <typename Scalar>
inline Scalar gcd(Scalar a, Scalar b) {
  a = abs(a);
  b = abs(b);
  while (b != 0) {
    Scalar r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

template <typename Scalar>
inline Scalar lcm(const Scalar& a, const Scalar& b) {
  if (a == 0 || b == 0) return Scalar(0);
  return abs(Scalar(a / gcd(a, b) * b));
}

// Bezout coefficients: s*a + t*b = g with g = gcd(a, b) >= 0.
template <typename Scalar>
struct Bezout {
  Scalar g, s, t;
};

template <typename Scalar>
inline Bezout<Scalar> extended_gcd(const Scalar& a, const Scalar& b) {
  Scalar old_r = a, r = b;
  Scalar old_s = 1, s = 0;
  Scalar old_t = 0, t = 1;
  while (r != 0) {
    Scalar q = old_r / r;
    Scalar tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

inline std::string to_string(const BigInt& a) { return a.get_str(); }

// Throws std::invalid_argument on malformed input.
BigInt parse_bigint(const std::string& text);

}  // namespace scalar
}  // namespace gcoh
