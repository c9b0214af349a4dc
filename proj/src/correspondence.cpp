#include <gcoh/correspondence.hpp>

#include <gcoh/errors.hpp>

#include <random>

namespace gcoh {

CVector conj(const CVector& v) {
  return v.unaryExpr([](const GaussianRational& z) { return z.conj(); });
}

CMatrix adjoint(const CMatrix& m) {
  return m.transpose().unaryExpr([](const GaussianRational& z) { return z.conj(); });
}

CVector constant(Index n, const GaussianRational& c) { return CVector::Constant(n, c); }

namespace {

void require_size(const FiniteSystem& sys, const CVector& v) {
  if (v.size() != sys.size()) throw ValidationError("function on X has the wrong number of values");
}

}  // namespace

CVector right_action(const FiniteSystem& sys, const CVector& xi, const CVector& f) {
  require_size(sys, xi);
  require_size(sys, f);
  CVector out(sys.size());
  for (Index x = 0; x < sys.size(); ++x) out(x) = xi(x) * f(sys.sigma(x));
  return out;
}

CVector left_action(const CVector& f, const CVector& xi) {
  if (f.size() != xi.size()) throw ValidationError("function on X has the wrong number of values");
  return f.cwiseProduct(xi);
}

CVector inner_product(const FiniteSystem& sys, const CVector& xi, const CVector& eta) {
  require_size(sys, xi);
  require_size(sys, eta);
  CVector out = CVector::Zero(sys.size());
  for (Index y = 0; y < sys.size(); ++y) out(sys.sigma(y)) += xi(y).conj() * eta(y);
  return out;
}

bool in_relation(const FiniteSystem& sys, Index x, Index y) { return sys.sigma(x) == sys.sigma(y); }

CVector rank_one(const FiniteSystem& sys, const CVector& xi, const CVector& eta, const CVector& zeta) {
  return right_action(sys, xi, inner_product(sys, eta, zeta));
}

CMatrix rank_one_kernel(const FiniteSystem& sys, const CVector& xi, const CVector& eta) {
  require_size(sys, xi);
  require_size(sys, eta);
  CMatrix k = CMatrix::Zero(sys.size(), sys.size());
  for (Index x = 0; x < sys.size(); ++x)
    for (Index y = 0; y < sys.size(); ++y)
      if (in_relation(sys, x, y)) k(x, y) = xi(x) * eta(y).conj();
  return k;
}

CMatrix creation_operator(const FiniteSystem& sys, const CVector& xi) {
  require_size(sys, xi);
  CMatrix v = CMatrix::Zero(sys.size(), sys.size());
  for (Index y = 0; y < sys.size(); ++y) v(y, sys.sigma(y)) = xi(y);
  return v;
}

CMatrix multiplication_operator(const CVector& f) {
  CMatrix m = CMatrix::Zero(f.size(), f.size());
  for (Index x = 0; x < f.size(); ++x) m(x, x) = f(x);
  return m;
}

VerificationReport correspondence_check(const FiniteSystem& sys, std::uint64_t seed, int samples) {
  const Index n = sys.size();
  std::mt19937_64 rng(seed);
  auto small = [&] {
    const long num = static_cast<long>(rng() % 7) - 3;
    const long den = static_cast<long>(rng() % 3) + 1;
    return mpq_class(num, den);
  };
  auto random_vector = [&] {
    CVector v(n);
    for (Index x = 0; x < n; ++x) v(x) = GaussianRational(small(), small());
    return v;
  };
  auto delta = [&](Index x) {
    CVector v = CVector::Zero(n);
    v(x) = 1;
    return v;
  };

  std::vector<CVector> vectors, functions;
  for (Index x = 0; x < n; ++x) vectors.push_back(delta(x));
  for (int s = 0; s < samples; ++s) vectors.push_back(random_vector());
  functions = vectors;
  functions.push_back(constant(n, 1));
  const GaussianRational a(mpq_class(2, 3), mpq_class(-1));

  LawReport module{"right-module"}, inner{"inner-product"}, positivity{"positivity"}, adjointable{"adjointable"},
      kernels{"rank-one-kernel"}, compact{"left-action-compact"}, representation{"representation"};
  auto at = [](std::size_t i, std::size_t j) { return "vectors " + std::to_string(i) + "," + std::to_string(j); };

  const CVector one = constant(n, 1);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    const CVector& xi = vectors[i];
    module.check(right_action(sys, xi, one) == xi, [&] { return at(i, i); });

    const CVector norm = inner_product(sys, xi, xi);
    bool ok = true;
    for (Index x = 0; x < n && ok; ++x) {
      mpq_class sum = 0;
      for (Index y = 0; y < n; ++y)
        if (sys.sigma(y) == x) sum += xi(y).norm();
      ok = norm(x).is_nonnegative_real() && norm(x) == GaussianRational(sum);
    }
    positivity.check(ok, [&] { return at(i, i); });

    for (std::size_t j = 0; j < vectors.size(); ++j) {
      const CVector& eta = vectors[j];
      const CVector ip = inner_product(sys, xi, eta);
      inner.check(conj(ip) == inner_product(sys, eta, xi) &&
                      inner_product(sys, xi, eta + a * xi) == ip + a * inner_product(sys, xi, xi) &&
                      inner_product(sys, a * xi, eta) == a.conj() * ip,
                  [&] { return at(i, j); });
      module.check(right_action(sys, xi + eta, vectors.back()) ==
                       right_action(sys, xi, vectors.back()) + right_action(sys, eta, vectors.back()),
                   [&] { return at(i, j); });

      for (std::size_t fi = 0; fi < functions.size(); ++fi) {
        const CVector& f = functions[fi];
        const CVector& g = functions[(fi + 1) % functions.size()];
        module.check(right_action(sys, right_action(sys, xi, f), g) == right_action(sys, xi, f.cwiseProduct(g)),
                     [&] { return at(i, j) + " f" + std::to_string(fi); });
        inner.check(inner_product(sys, xi, right_action(sys, eta, f)) == ip.cwiseProduct(f),
                    [&] { return at(i, j) + " f" + std::to_string(fi); });
        adjointable.check(inner_product(sys, left_action(f, xi), eta) == inner_product(sys, xi, left_action(conj(f), eta)) &&
                              right_action(sys, left_action(f, xi), g) == left_action(f, right_action(sys, xi, g)),
                          [&] { return at(i, j) + " f" + std::to_string(fi); });
        const CMatrix v = creation_operator(sys, xi);
        representation.check(creation_operator(sys, right_action(sys, left_action(f, xi), g)) ==
                                 CMatrix(multiplication_operator(f) * v * multiplication_operator(g)),
                             [&] { return at(i, j) + " f" + std::to_string(fi); });
      }
      representation.check(CMatrix(adjoint(creation_operator(sys, xi)) * creation_operator(sys, eta)) ==
                               multiplication_operator(ip),
                           [&] { return at(i, j); });

      const CMatrix k = rank_one_kernel(sys, xi, eta);
      for (std::size_t zi = 0; zi < vectors.size(); ++zi)
        kernels.check(CVector(k * vectors[zi]) == rank_one(sys, xi, eta, vectors[zi]),
                      [&] { return at(i, j) + " applied to " + std::to_string(zi); });
    }
  }

  // pointwise multiplication is sum_x f(x) theta_{delta_x, delta_x}
  for (std::size_t fi = 0; fi < functions.size(); ++fi) {
    const CVector& f = functions[fi];
    CMatrix k = CMatrix::Zero(n, n);
    for (Index x = 0; x < n; ++x) k += f(x) * rank_one_kernel(sys, delta(x), delta(x));
    bool ok = k == multiplication_operator(f);
    for (Index x = 0; x < n && ok; ++x)
      for (Index y = 0; y < n && ok; ++y)
        ok = (k(x, y) == GaussianRational(0)) || (x == y && in_relation(sys, x, y));
    for (std::size_t zi = 0; zi < vectors.size() && ok; ++zi) {
      CVector sum = CVector::Zero(n);
      for (Index x = 0; x < n; ++x) sum += f(x) * rank_one(sys, delta(x), delta(x), vectors[zi]);
      ok = sum == left_action(f, vectors[zi]);
    }
    compact.check(ok, [&] { return "function " + std::to_string(fi); });
  }

  return {{module, inner, positivity, adjointable, kernels, compact, representation}};
}

}  // namespace gcoh
