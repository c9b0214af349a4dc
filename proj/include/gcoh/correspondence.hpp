#pragma once

// The finite-dimensional correspondence over functions on X: right action
// through sigma, pointwise left action, inner product summed over the fibres
// of sigma, and its representation on l^2(X).

#include <gcoh/gaussian.hpp>
#include <gcoh/groupoid.hpp>
#include <gcoh/scalar.hpp>

#include <cstdint>

namespace Eigen {

template <>
struct NumTraits<gcoh::GaussianRational> : GenericNumTraits<gcoh::GaussianRational> {
  using Real = gcoh::GaussianRational;
  using NonInteger = gcoh::GaussianRational;
  using Nested = gcoh::GaussianRational;
  using Literal = gcoh::GaussianRational;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 200,
    MulCost = 400
  };
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace gcoh {

using CVector = Vec<GaussianRational>;
using CMatrix = Mat<GaussianRational>;

CVector conj(const CVector& v);
CMatrix adjoint(const CMatrix& m);
CVector constant(Index n, const GaussianRational& c);

/// (xi . f)(x) = xi(x) f(sigma x)
CVector right_action(const FiniteSystem& sys, const CVector& xi, const CVector& f);
/// (f . xi)(x) = f(x) xi(x)
CVector left_action(const CVector& f, const CVector& xi);
/// <xi, eta>(x) = sum over sigma(y) = x of conj(xi(y)) eta(y)
CVector inner_product(const FiniteSystem& sys, const CVector& xi, const CVector& eta);

/// Pairs (x, y) with sigma(x) = sigma(y).
bool in_relation(const FiniteSystem& sys, Index x, Index y);
/// theta_{xi,eta}(zeta) = xi . <eta, zeta>
CVector rank_one(const FiniteSystem& sys, const CVector& xi, const CVector& eta, const CVector& zeta);
/// k(x, y) = xi(x) conj(eta(y)) on the relation, zero off it.
CMatrix rank_one_kernel(const FiniteSystem& sys, const CVector& xi, const CVector& eta);

/// V(xi) h(y) = xi(y) h(sigma y) on l^2(X).
CMatrix creation_operator(const FiniteSystem& sys, const CVector& xi);
/// Multiplication by f on l^2(X).
CMatrix multiplication_operator(const CVector& f);

/// Exact checks over the point masses plus `samples` seeded random vectors:
/// right-module and inner-product identities, positivity, adjointability of
/// the left action, kernels of rank-one operators, the left action as a
/// combination of rank-one operators with diagonal kernel, and the two
/// representation identities on l^2(X).
VerificationReport correspondence_check(const FiniteSystem& sys, std::uint64_t seed, int samples = 3);

}  // namespace gcoh
