#include <gcoh/polynomial.hpp>

#include <gcoh/errors.hpp>

#include <functional>

namespace gcoh {

namespace {

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Positive and negative divisors of n != 0, or nullopt if n is too large to factor by trial division.
std::optional<std::vector<BigInt>> signed_divisors(const BigInt& n) {
  const BigInt a = scalar::abs(n);
  if (a > BigInt("1000000000000")) return std::nullopt;
  std::vector<BigInt> out;
  for (BigInt d = 1; d * d <= a; ++d)
    if (a % d == 0) {
      out.push_back(d);
      out.push_back(-d);
      if (d * d != a) {
        out.push_back(a / d);
        out.push_back(-(a / d));
      }
    }
  return out;
}

}  // namespace

IntPoly characteristic_polynomial(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw ValidationError("characteristic polynomial: matrix is not square");
  const Index n = a.rows();
  IntPoly c(static_cast<std::size_t>(n + 1));
  c[static_cast<std::size_t>(n)] = 1;
  IntMatrix m = IntMatrix::Zero(n, n);
  for (Index k = 1; k <= n; ++k) {
    m = a * m;
    for (Index i = 0; i < n; ++i) m(i, i) += c[static_cast<std::size_t>(n - k + 1)];
    const BigInt tr = IntMatrix(a * m).trace();
    if (tr % k != 0) throw InternalError("characteristic polynomial: inexact division");
    c[static_cast<std::size_t>(n - k)] = -tr / k;
  }
  return c;
}

BigInt evaluate(const IntPoly& p, const BigInt& x) {
  BigInt out = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) out = out * x + *it;
  return out;
}

IntMatrix evaluate(const IntPoly& p, const IntMatrix& a) {
  IntMatrix out = IntMatrix::Zero(a.rows(), a.cols());
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    out = a * out;
    for (Index i = 0; i < a.rows(); ++i) out(i, i) += *it;
  }
  return out;
}

std::pair<IntPoly, IntPoly> divide_monic(const IntPoly& p, const IntPoly& monic) {
  if (monic.empty() || monic.back() != 1) throw ValidationError("divide_monic: divisor is not monic");
  IntPoly r = p;
  trim(r);
  const std::size_t dm = monic.size() - 1;
  if (r.size() <= dm) return {IntPoly{}, r};
  IntPoly q(r.size() - dm);
  for (std::size_t i = r.size(); i-- > dm;) {
    const BigInt coeff = r[i];
    q[i - dm] = coeff;
    if (coeff == 0) continue;
    for (std::size_t j = 0; j <= dm; ++j) r[i - dm + j] -= coeff * monic[j];
  }
  trim(q);
  trim(r);
  return {q, r};
}

std::optional<IntPoly> unit_part(const IntPoly& p, long budget) {
  IntPoly poly = p;
  trim(poly);
  if (poly.empty() || poly.back() != 1) throw ValidationError("unit_part: polynomial is not monic");
  const Index deg = static_cast<Index>(poly.size()) - 1;
  if (deg == 0) return IntPoly{1};
  if (scalar::abs(poly[0]) == 1) return poly;
  if (poly[0] == 0) {
    // x divides p and is not a unit factor; p = x^j p'
    std::size_t j = 0;
    while (poly[j] == 0) ++j;
    return unit_part(IntPoly(poly.begin() + static_cast<std::ptrdiff_t>(j), poly.end()), budget);
  }
  for (Index e = deg - 1; e >= 1; --e) {
    // interpolation nodes: 0 plus e nonzero integers where p does not vanish
    std::vector<BigInt> xs{0};
    std::vector<std::vector<BigInt>> choices{{1, -1}};
    long combos = 2;
    for (long t = 1; static_cast<Index>(xs.size()) < e + 1; ++t)
      for (long x : {t, -t}) {
        if (static_cast<Index>(xs.size()) == e + 1) break;
        const BigInt v = evaluate(poly, BigInt(x));
        if (v == 0) continue;
        auto divs = signed_divisors(v);
        if (!divs) return std::nullopt;
        combos *= static_cast<long>(divs->size());
        if (combos > budget) return std::nullopt;
        xs.emplace_back(x);
        choices.push_back(std::move(*divs));
      }
    // Lagrange basis polynomials over Q, built once per node set
    const std::size_t n = xs.size();
    std::vector<std::vector<mpq_class>> basis(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<mpq_class> b{mpq_class(1)};
      mpq_class denom = 1;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        std::vector<mpq_class> next(b.size() + 1, mpq_class(0));
        for (std::size_t k = 0; k < b.size(); ++k) {
          next[k + 1] += b[k];
          next[k] -= b[k] * mpq_class(xs[j]);
        }
        b = std::move(next);
        denom *= mpq_class(xs[i] - xs[j]);
      }
      for (auto& c : b) c /= denom;
      basis[i] = std::move(b);
    }
    std::vector<BigInt> values(n);
    std::optional<IntPoly> found;
    std::function<void(std::size_t)> search = [&](std::size_t i) {
      if (found) return;
      if (i == n) {
        std::vector<mpq_class> g(n, mpq_class(0));
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t c = 0; c < n; ++c) g[c] += mpq_class(values[k]) * basis[k][c];
        if (g[n - 1] != 1) return;
        IntPoly candidate;
        for (auto& c : g) {
          c.canonicalize();
          if (c.get_den() != 1) return;
          candidate.push_back(c.get_num());
        }
        if (divide_monic(poly, candidate).second.empty()) found = candidate;
        return;
      }
      for (const auto& v : choices[i]) {
        values[i] = v;
        search(i + 1);
      }
    };
    search(0);
    if (found) return found;
  }
  return IntPoly{1};
}

}  // namespace gcoh
