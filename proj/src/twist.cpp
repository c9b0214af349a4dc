#include <gcoh/twist.hpp>

#include <gcoh/errors.hpp>

#include <algorithm>
#include <random>

namespace gcoh {

namespace {

int mod(long a, int n) {
  const long r = a % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

}  // namespace

FiberBundle::FiberBundle(int n, std::vector<std::vector<int>> labeling) : n_(n), labeling_(std::move(labeling)) {
  if (n < 1) throw ValidationError("fibre order n must be >= 1");
  for (std::size_t x = 0; x < labeling_.size(); ++x) {
    const auto& row = labeling_[x];
    if (static_cast<int>(row.size()) != n)
      throw ValidationError("bundle data: labeling of point " + std::to_string(x) + " must have n entries");
    std::vector<int> inv(static_cast<std::size_t>(n), -1);
    for (int t = 0; t < n; ++t) {
      const int z = row[static_cast<std::size_t>(t)];
      if (z < 0 || z >= n || inv[static_cast<std::size_t>(z)] != -1)
        throw ValidationError("bundle data: labeling of point " + std::to_string(x) + " is not a bijection onto Z/n");
      inv[static_cast<std::size_t>(z)] = t;
    }
    inverse_.push_back(std::move(inv));
  }
}

FiberBundle FiberBundle::trivial(Index points, int n) {
  std::vector<int> id(static_cast<std::size_t>(std::max(n, 0)));
  for (int t = 0; t < n; ++t) id[static_cast<std::size_t>(t)] = t;
  return FiberBundle(n, std::vector<std::vector<int>>(static_cast<std::size_t>(points), id));
}

bool FiberBundle::is_identity_labeling() const {
  for (const auto& row : labeling_)
    for (int t = 0; t < n_; ++t)
      if (row[static_cast<std::size_t>(t)] != t) return false;
  return true;
}

int FiberBundle::act(Index x, int z, int t) const {
  const auto xi = static_cast<std::size_t>(x);
  return inverse_[xi][static_cast<std::size_t>(mod(labeling_[xi][static_cast<std::size_t>(t)] + z, n_))];
}

int FiberBundle::difference(Index x, int a, int b) const {
  for (int z = 0; z < n_; ++z)
    if (act(x, z, b) == a) return z;
  throw InternalError("fibre action is not transitive");
}

Twist::Twist(const FiniteSystem& sys, FiberBundle bundle) : sys_(&sys), bundle_(std::move(bundle)) {
  if (bundle_.points() != sys.size()) throw ValidationError("bundle data: one labeling per point required");
}

Index Twist::slot_point(const TwistElement& a, bool conj, std::size_t i) const {
  return sys_->iterate(conj ? a.base.y : a.base.x, static_cast<long>(i));
}

TwistElement Twist::make(const GroupoidElement& base, Witness level, int scalar, std::vector<int> u,
                         std::vector<int> v) const {
  if (level.k - level.l != base.m || !is_witness(*sys_, base.x, base.y, level.k, level.l))
    throw ValidationError("twist element: level is not a witness of its base");
  if (static_cast<long>(u.size()) != level.k || static_cast<long>(v.size()) != level.l)
    throw ValidationError("twist element: tuple length does not match its level");
  for (int t : u)
    if (t < 0 || t >= n()) throw ValidationError("twist element: label out of range");
  for (int t : v)
    if (t < 0 || t >= n()) throw ValidationError("twist element: label out of range");
  return {base, level, mod(scalar, n()), std::move(u), std::move(v)};
}

TwistElement Twist::canonical(const GroupoidElement& base, int scalar) const {
  return {base, base.witness, mod(scalar, n()), std::vector<int>(static_cast<std::size_t>(base.witness.k), 0),
          std::vector<int>(static_cast<std::size_t>(base.witness.l), 0)};
}

TwistElement Twist::unit(Index x) const { return canonical(gcoh::unit(x), 0); }

TwistElement Twist::section(const GroupoidElement& base) const {
  TwistElement s = canonical(base, 0);
  for (std::size_t i = 0; i < s.u.size(); ++i) s.u[i] = bundle_.zero_label(slot_point(s, false, i));
  for (std::size_t j = 0; j < s.v.size(); ++j) s.v[j] = bundle_.zero_label(slot_point(s, true, j));
  return s;
}

TwistElement Twist::act(int z, const TwistElement& a) const {
  TwistElement out = a;
  out.scalar = mod(a.scalar + z, n());
  return out;
}

TwistElement Twist::lift(const TwistElement& a, int p) const {
  TwistElement out = a;
  out.u.push_back(p);
  out.v.push_back(p);
  ++out.level.k;
  ++out.level.l;
  return out;
}

TwistElement Twist::restrict(const TwistElement& a) const {
  if (a.level.k < 1 || a.level.l < 1 || !is_witness(*sys_, a.base.x, a.base.y, a.level.k - 1, a.level.l - 1))
    throw ValidationError("twist element cannot be restricted below its minimal witness");
  // u_{k+1} and v_{l+1} lie over the same point
  const Index q = slot_point(a, false, a.u.size() - 1);
  TwistElement out = a;
  out.scalar = mod(a.scalar + bundle_.difference(q, a.u.back(), a.v.back()), n());
  out.u.pop_back();
  out.v.pop_back();
  --out.level.k;
  --out.level.l;
  return out;
}

TwistElement Twist::reduce(const TwistElement& a) const {
  TwistElement out = a;
  while (!(out.level == out.base.witness)) out = restrict(out);
  return out;
}

TwistElement Twist::multiply(const TwistElement& a, const TwistElement& b) const {
  if (!composable(a.base, b.base)) throw ValidationError("twist elements are not composable");
  TwistElement lhs = a, rhs = b;
  while (lhs.level.l < rhs.level.k) lhs = lift(lhs, 0);
  while (rhs.level.k < lhs.level.l) rhs = lift(rhs, 0);
  // scalar picks up prod_i v_i conj(u_i) where u is the conjugate part of the
  // left factor and v the first part of the right one
  long z = lhs.scalar + rhs.scalar;
  for (std::size_t i = 0; i < lhs.v.size(); ++i)
    z += bundle_.difference(slot_point(lhs, true, i), rhs.u[i], lhs.v[i]);
  TwistElement out;
  out.base = compose(*sys_, a.base, b.base);
  out.level = {lhs.level.k, rhs.level.l};
  out.scalar = mod(z, n());
  out.u = lhs.u;
  out.v = rhs.v;
  return out;
}

TwistElement Twist::inverse(const TwistElement& a) const {
  return {gcoh::inverse(a.base), {a.level.l, a.level.k}, mod(-a.scalar, n()), a.v, a.u};
}

int Twist::same_level_difference(const TwistElement& a, const TwistElement& b) const {
  if (!(a.base == b.base) || !(a.level == b.level)) throw ValidationError("twist elements at different levels");
  long z = a.scalar - b.scalar;
  for (std::size_t i = 0; i < a.u.size(); ++i) z += bundle_.difference(slot_point(a, false, i), a.u[i], b.u[i]);
  // z acts on conj(v) as -z acts on v
  for (std::size_t j = 0; j < a.v.size(); ++j) z -= bundle_.difference(slot_point(a, true, j), a.v[j], b.v[j]);
  return mod(z, n());
}

int Twist::difference(const TwistElement& a, const TwistElement& b) const {
  if (!(a.base == b.base)) throw ValidationError("twist elements over different base points");
  return same_level_difference(reduce(a), reduce(b));
}

bool Twist::equivalent(const TwistElement& a, const TwistElement& b) const {
  return a.base == b.base && difference(a, b) == 0;
}

namespace {

class Sampler {
 public:
  Sampler(const Twist& tw, std::uint64_t seed) : tw_(tw), rng_(seed) {}

  int label() { return static_cast<int>(rng_() % static_cast<std::uint64_t>(tw_.n())); }

  // Another representative of the same class: random lifts, then moves that
  // shift one slot by z and another by -z.
  TwistElement shuffle(const TwistElement& a, bool allow_lift = true) {
    TwistElement out = a;
    if (allow_lift)
      for (int lifts = static_cast<int>(rng_() % 3); lifts > 0; --lifts) out = tw_.lift(out, label());
    const std::size_t slots = 1 + out.u.size() + out.v.size();
    for (int moves = 0; moves < 3; ++moves) {
      const int z = label();
      shift(out, rng_() % slots, z);
      shift(out, rng_() % slots, -z);
    }
    return out;
  }

  TwistElement random(const GroupoidElement& base) { return shuffle(tw_.canonical(base, label())); }

  TwistElement random_at(const GroupoidElement& base, Witness level) {
    std::vector<int> u(static_cast<std::size_t>(level.k)), v(static_cast<std::size_t>(level.l));
    for (auto& t : u) t = label();
    for (auto& t : v) t = label();
    return tw_.make(base, level, label(), std::move(u), std::move(v));
  }

 private:
  // Changes the class by +c through slot s.
  void shift(TwistElement& a, std::size_t s, int c) {
    const auto& sys = tw_.system();
    if (s == 0) {
      a.scalar = mod(a.scalar + c, tw_.n());
    } else if (s <= a.u.size()) {
      const std::size_t i = s - 1;
      a.u[i] = tw_.bundle().act(sys.iterate(a.base.x, static_cast<long>(i)), c, a.u[i]);
    } else {
      const std::size_t j = s - 1 - a.u.size();
      a.v[j] = tw_.bundle().act(sys.iterate(a.base.y, static_cast<long>(j)), -c, a.v[j]);
    }
  }

  const Twist& tw_;
  std::mt19937_64 rng_;
};

}  // namespace

VerificationReport verify_twist(const Twist& tw, const Truncation& t, std::uint64_t seed) {
  const FiniteSystem& sys = t.system();
  if (&sys != &tw.system()) throw ValidationError("truncation and twist use different systems");
  Sampler rng(tw, seed);
  const auto& els = t.elements();
  const int n = tw.n();
  LawReport well_defined{"well-defined"}, assoc{"associativity"}, inverses{"inverse"}, restriction{"restriction"},
      pullback{"pullback"}, section{"section"};

  for (std::size_t i = 0; i < els.size(); ++i) {
    const auto& a = els[i];
    const TwistElement lam = rng.random(a);

    // units and inverses
    const TwistElement lam_inv = tw.inverse(lam);
    inverses.check(tw.equivalent(tw.multiply(lam, lam_inv), tw.unit(a.x)) &&
                       tw.equivalent(tw.multiply(lam_inv, lam), tw.unit(a.y)) &&
                       tw.equivalent(tw.multiply(tw.unit(a.x), lam), lam) &&
                       tw.equivalent(tw.multiply(lam, tw.unit(a.y)), lam) &&
                       tw.equivalent(tw.inverse(lam_inv), lam),
                   [&] { return describe(sys, a); });

    // restriction from one level above the minimal witness
    const Witness up{a.witness.k + 1, a.witness.l + 1};
    const TwistElement rho = rng.random_at(a, up);
    const TwistElement r = tw.restrict(rho);
    bool ok = r.level == a.witness &&
              tw.same_level_difference(tw.restrict(rng.shuffle(rho, false)), r) == 0 &&
              tw.same_level_difference(tw.restrict(tw.lift(r, rng.label())), r) == 0;
    for (int z = 0; z < n && ok; ++z) ok = tw.same_level_difference(tw.restrict(tw.act(z, rho)), r) == z;
    for (std::size_t hi : t.with_range(a.y)) {
      if (!ok) break;
      const TwistElement mu = rng.random(els[hi]);
      ok = tw.equivalent(tw.multiply(rho, mu), tw.multiply(r, mu));
    }
    restriction.check(ok, [&] { return describe(sys, a); });

    section.check(tw.equivalent(tw.section(gcoh::unit(a.x)), tw.unit(a.x)), [&] { return describe(sys, a); });

    for (std::size_t hi : t.with_range(a.y)) {
      const auto& b = els[hi];
      const TwistElement mu = rng.random(b);
      const TwistElement prod = tw.multiply(lam, mu);
      well_defined.check(prod.base == compose(sys, a, b) &&
                             tw.equivalent(prod, tw.multiply(rng.shuffle(lam), rng.shuffle(mu))),
                         [&] { return describe(sys, a) + describe(sys, b); });
      section.check(tw.equivalent(tw.multiply(tw.section(a), tw.section(b)), tw.section(compose(sys, a, b))),
                    [&] { return describe(sys, a) + describe(sys, b); });
      for (std::size_t ci : t.with_range(b.y)) {
        const TwistElement nu = rng.random(els[ci]);
        assoc.check(tw.equivalent(tw.multiply(prod, nu), tw.multiply(lam, tw.multiply(mu, nu))),
                    [&] { return describe(sys, a) + describe(sys, b) + describe(sys, els[ci]); });
      }
    }
  }

  // the fibre over j(x) = (x, 1, sigma x) is the bundle over x again
  for (Index x = 0; x < sys.size(); ++x) {
    const GroupoidElement g = generator(sys, x);
    auto j = [&](int label) { return tw.make(g, {1, 0}, 0, {label}, {}); };
    bool ok = true;
    for (int p = 0; p < n && ok; ++p)
      for (int q = 0; q < n && ok; ++q) ok = tw.difference(j(p), j(q)) == tw.bundle().difference(x, p, q);
    for (int p = 0; p < n && ok; ++p)
      for (int z = 0; z < n && ok; ++z) ok = tw.equivalent(j(tw.bundle().act(x, z, p)), tw.act(z, j(p)));
    pullback.check(ok, [&] { return sys.label(x); });
  }

  return {{well_defined, assoc, inverses, restriction, pullback, section}};
}

}  // namespace gcoh
