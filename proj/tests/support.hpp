#pragma once

// Shared test helpers: a seeded generator and independent brute-force oracles
// that never call into the normal-form code they are used to check.

#include <gcoh/abelian_group.hpp>
#include <gcoh/scalar.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <vector>

namespace gcoh::testing {

using i64 = std::int64_t;
using SmallMatrix = std::vector<std::vector<i64>>;  // row-major, rows may be empty

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  // Uniform-ish integer in [lo, hi]; modulo bias is irrelevant for tests.
  i64 uniform(i64 lo, i64 hi) {
    return lo + static_cast<i64>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool coin() { return (engine_() & 1u) != 0; }
  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

inline IntMatrix to_int_matrix(const SmallMatrix& m, Index cols) {
  IntMatrix out(static_cast<Index>(m.size()), cols);
  for (Index r = 0; r < out.rows(); ++r)
    for (Index c = 0; c < cols; ++c) out(r, c) = static_cast<long>(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
  return out;
}

inline IntMatrix random_matrix(Rng& rng, Index rows, Index cols, i64 lo, i64 hi) {
  IntMatrix m(rows, cols);
  for (Index r = 0; r < rows; ++r)
    for (Index c = 0; c < cols; ++c) m(r, c) = static_cast<long>(rng.uniform(lo, hi));
  return m;
}

inline i64 to_i64(const BigInt& a) { return a.get_si(); }

// Leibniz determinant over all permutations.
inline BigInt leibniz_det(const IntMatrix& m) {
  const Index n = m.rows();
  std::vector<Index> perm(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  BigInt total = 0;
  do {
    int inversions = 0;
    for (Index i = 0; i < n; ++i)
      for (Index j = i + 1; j < n; ++j)
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
    BigInt term = inversions % 2 ? -1 : 1;
    for (Index i = 0; i < n; ++i) term *= m(i, perm[static_cast<std::size_t>(i)]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline void for_each_subset(Index k, Index n, const std::function<void(const std::vector<Index>&)>& fn) {
  std::vector<Index> cur;
  std::function<void(Index)> rec = [&](Index start) {
    if (static_cast<Index>(cur.size()) == n) {
      fn(cur);
      return;
    }
    for (Index i = start; i < k; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

// Largest nonzero minor size, and one nonzero minor of that size.
struct MinorRank {
  Index rank = 0;
  BigInt witness = 1;
};

inline MinorRank minor_rank(const IntMatrix& m) {
  MinorRank out;
  const Index top = std::min(m.rows(), m.cols());
  for (Index k = top; k >= 1; --k) {
    bool found = false;
    for_each_subset(m.rows(), k, [&](const std::vector<Index>& rs) {
      if (found) return;
      for_each_subset(m.cols(), k, [&](const std::vector<Index>& cs) {
        if (found) return;
        IntMatrix sub(k, k);
        for (Index i = 0; i < k; ++i)
          for (Index j = 0; j < k; ++j) sub(i, j) = m(rs[static_cast<std::size_t>(i)], cs[static_cast<std::size_t>(j)]);
        BigInt d = leibniz_det(sub);
        if (d != 0) {
          found = true;
          out.rank = k;
          out.witness = d;
        }
      });
    });
    if (found) return out;
  }
  return out;
}

// Size of the subgroup of (Z/q)^r generated by the given vectors, by closure.
inline i64 subgroup_size(const std::vector<std::vector<i64>>& gens, Index r, i64 q) {
  i64 total = 1;
  for (Index i = 0; i < r; ++i) total *= q;
  auto encode = [&](const std::vector<i64>& v) {
    i64 code = 0;
    for (Index i = 0; i < r; ++i) code = code * q + v[static_cast<std::size_t>(i)];
    return code;
  };
  std::vector<char> seen(static_cast<std::size_t>(total), 0);
  std::vector<std::vector<i64>> frontier{std::vector<i64>(static_cast<std::size_t>(r), 0)};
  seen[0] = 1;
  i64 count = 1;
  while (!frontier.empty()) {
    std::vector<std::vector<i64>> next;
    for (const auto& v : frontier)
      for (const auto& g : gens) {
        std::vector<i64> w(static_cast<std::size_t>(r));
        for (Index i = 0; i < r; ++i) {
          i64 x = (v[static_cast<std::size_t>(i)] + g[static_cast<std::size_t>(i)]) % q;
          w[static_cast<std::size_t>(i)] = x < 0 ? x + q : x;
        }
        const i64 code = encode(w);
        if (!seen[static_cast<std::size_t>(code)]) {
          seen[static_cast<std::size_t>(code)] = 1;
          ++count;
          next.push_back(std::move(w));
        }
      }
    frontier = std::move(next);
  }
  return count;
}

// Expected (free rank, invariant factors) of Z^rows / image(m), found by
// counting |G / p^a G| in explicit finite quotients.  Entries must be small.
struct GroupShape {
  Index free = 0;
  std::vector<i64> torsion;
  bool operator==(const GroupShape&) const = default;
};

inline GroupShape shape_of(const FgAbGroup& g) {
  GroupShape s;
  s.free = g.free_rank();
  for (const auto& d : g.torsion()) s.torsion.push_back(to_i64(d));
  return s;
}

inline GroupShape cokernel_by_enumeration(const IntMatrix& m) {
  const Index r = m.rows();
  const MinorRank mr = minor_rank(m);
  GroupShape out;
  out.free = r - mr.rank;
  i64 delta = std::abs(to_i64(mr.witness));
  std::map<i64, std::vector<int>> exps;  // prime -> exponents, descending
  for (i64 p = 2; p <= delta; ++p) {
    if (delta % p != 0) continue;
    bool prime = true;
    for (i64 d = 2; d * d <= p; ++d)
      if (p % d == 0) prime = false;
    if (!prime) continue;
    int v = 0;
    for (i64 t = delta; t % p == 0; t /= p) ++v;
    // s_a = log_p |G/p^a G|
    std::vector<i64> s(static_cast<std::size_t>(v + 2), 0);
    i64 q = 1;
    for (int a = 1; a <= v + 1; ++a) {
      q *= p;
      std::vector<std::vector<i64>> gens;
      for (Index c = 0; c < m.cols(); ++c) {
        std::vector<i64> g(static_cast<std::size_t>(r));
        for (Index i = 0; i < r; ++i) g[static_cast<std::size_t>(i)] = to_i64(m(i, c)) % q;
        gens.push_back(g);
      }
      i64 total = 1;
      for (Index i = 0; i < r; ++i) total *= q;
      i64 quotient = total / subgroup_size(gens, r, q);
      int e = 0;
      while (quotient > 1) {
        quotient /= p;
        ++e;
      }
      s[static_cast<std::size_t>(a)] = e;
    }
    // c_a = #{exponents >= a}
    std::vector<i64> c(static_cast<std::size_t>(v + 3), 0);
    for (int a = 1; a <= v + 1; ++a)
      c[static_cast<std::size_t>(a)] = s[static_cast<std::size_t>(a)] - s[static_cast<std::size_t>(a - 1)] - out.free;
    std::vector<int> e;
    for (int a = v + 1; a >= 1; --a)
      for (i64 k = 0; k < c[static_cast<std::size_t>(a)] - c[static_cast<std::size_t>(a + 1)]; ++k) e.push_back(a);
    if (!e.empty()) exps[p] = e;
  }
  std::size_t t = 0;
  for (const auto& [p, e] : exps) t = std::max(t, e.size());
  for (std::size_t i = 0; i < t; ++i) {
    i64 d = 1;
    for (const auto& [p, e] : exps)
      if (i < e.size())
        for (int k = 0; k < e[i]; ++k) d *= p;
    out.torsion.push_back(d);
  }
  std::reverse(out.torsion.begin(), out.torsion.end());
  return out;
}

// Brute-force Lambda^n M through multilinear expansion of M e_{i1} ^ ... ^ M e_{in}.
inline IntMatrix wedge_by_expansion(const IntMatrix& m, Index n) {
  const Index k = m.rows();
  std::vector<std::vector<Index>> subsets;
  for_each_subset(k, n, [&](const std::vector<Index>& s) { subsets.push_back(s); });
  std::map<std::vector<Index>, Index> position;
  for (std::size_t i = 0; i < subsets.size(); ++i) position[subsets[i]] = static_cast<Index>(i);
  const Index size = static_cast<Index>(subsets.size());
  IntMatrix out = IntMatrix::Zero(size, size);
  for (Index J = 0; J < size; ++J) {
    const auto& cols = subsets[static_cast<std::size_t>(J)];
    std::vector<Index> rows(static_cast<std::size_t>(n), 0);
    std::function<void(Index)> rec = [&](Index t) {
      if (t == n) {
        BigInt coeff = 1;
        for (Index i = 0; i < n; ++i) coeff *= m(rows[static_cast<std::size_t>(i)], cols[static_cast<std::size_t>(i)]);
        if (coeff == 0) return;
        std::vector<Index> sorted = rows;
        int sign = 1;
        for (std::size_t a = 0; a < sorted.size(); ++a)
          for (std::size_t b = 0; b + 1 < sorted.size() - a; ++b)
            if (sorted[b] > sorted[b + 1]) {
              std::swap(sorted[b], sorted[b + 1]);
              sign = -sign;
            }
        for (std::size_t a = 0; a + 1 < sorted.size(); ++a)
          if (sorted[a] == sorted[a + 1]) return;
        out(position[sorted], J) += sign * coeff;
        return;
      }
      for (Index j = 0; j < k; ++j) {
        rows[static_cast<std::size_t>(t)] = j;
        rec(t + 1);
      }
    };
    rec(0);
  }
  return out;
}

// Elements of a finite FgAbGroup as reduced coordinate vectors.
inline std::vector<IntVector> elements_of(const FgAbGroup& g) {
  std::vector<IntVector> out;
  IntVector v = IntVector::Zero(g.generator_count());
  std::function<void(Index)> rec = [&](Index i) {
    if (i == g.generator_count()) {
      out.push_back(v);
      return;
    }
    for (BigInt x = 0; x < g.generator_order(i); ++x) {
      v(i) = x;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

// Order-profile of a finite group given as a set of elements and an order
// function; two finite abelian groups are isomorphic iff these agree.
inline std::map<i64, i64> order_profile(const std::vector<i64>& orders) {
  std::map<i64, i64> out;
  for (i64 o : orders) ++out[o];
  return out;
}

}  // namespace gcoh::testing
