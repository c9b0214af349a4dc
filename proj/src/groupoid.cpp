#include <gcoh/groupoid.hpp>

#include <gcoh/errors.hpp>

#include <algorithm>
#include <set>
#include <sstream>

namespace gcoh {

FiniteSystem::FiniteSystem(std::vector<std::string> labels, std::vector<Index> sigma)
    : labels_(std::move(labels)), sigma_(std::move(sigma)) {
  const Index n = size();
  if (static_cast<Index>(labels_.size()) != n) throw ValidationError("system: one label per point required");
  std::set<std::string> seen;
  for (const auto& l : labels_)
    if (!seen.insert(l).second) throw ValidationError("system: duplicate point '" + l + "'");
  for (Index x = 0; x < n; ++x)
    if (sigma_[static_cast<std::size_t>(x)] < 0 || sigma_[static_cast<std::size_t>(x)] >= n)
      throw ValidationError("system: sigma(" + labels_[static_cast<std::size_t>(x)] + ") is not a point");

  powers_.assign(static_cast<std::size_t>(n), {});
  period_.assign(static_cast<std::size_t>(n), 1);
  for (Index x = 0; x < n; ++x) {
    auto& row = powers_[static_cast<std::size_t>(x)];
    row.resize(static_cast<std::size_t>(2 * n));
    Index p = x;
    for (Index k = 0; k < 2 * n; ++k) {
      row[static_cast<std::size_t>(k)] = p;
      p = sigma_[static_cast<std::size_t>(p)];
    }
    // sigma^n(x) is periodic
    const Index c = row[static_cast<std::size_t>(n)];
    long len = 1;
    for (Index q = sigma_[static_cast<std::size_t>(c)]; q != c; q = sigma_[static_cast<std::size_t>(q)]) ++len;
    period_[static_cast<std::size_t>(x)] = len;
  }
}

FiniteSystem FiniteSystem::from_map(std::vector<Index> sigma) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < sigma.size(); ++i) labels.push_back(std::to_string(i));
  return FiniteSystem(std::move(labels), std::move(sigma));
}

FiniteSystem FiniteSystem::from_labels(const std::vector<std::string>& points,
                                       const std::map<std::string, std::string>& sigma) {
  std::map<std::string, Index> index;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (!index.emplace(points[i], static_cast<Index>(i)).second)
      throw ValidationError("system: duplicate point '" + points[i] + "'");
  for (const auto& [from, to] : sigma)
    if (!index.count(from)) throw ValidationError("system: sigma is given on unknown point '" + from + "'");
  std::vector<Index> map;
  for (const auto& p : points) {
    auto it = sigma.find(p);
    if (it == sigma.end()) throw ValidationError("system: sigma is not total, no value at '" + p + "'");
    auto target = index.find(it->second);
    if (target == index.end())
      throw ValidationError("system: sigma(" + p + ") = '" + it->second + "' is not a point");
    map.push_back(target->second);
  }
  return FiniteSystem(points, std::move(map));
}

Index FiniteSystem::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw ValidationError("system: unknown point '" + label + "'");
  return static_cast<Index>(it - labels_.begin());
}

Index FiniteSystem::iterate(Index x, long k) const {
  if (k < 0) throw ValidationError("negative iterate");
  const auto& row = powers_[static_cast<std::size_t>(x)];
  const long n = static_cast<long>(size());
  if (k < 2 * n) return row[static_cast<std::size_t>(k)];
  return row[static_cast<std::size_t>(n + (k - n) % period_[static_cast<std::size_t>(x)])];
}

bool is_witness(const FiniteSystem& sys, Index x, Index y, long k, long l) {
  return k >= 0 && l >= 0 && sys.iterate(x, k) == sys.iterate(y, l);
}

std::optional<Witness> minimal_witness(const FiniteSystem& sys, Index x, long m, Index y) {
  const long k0 = std::max(0L, m);
  // After |X| further steps both orbits are on cycles where sigma is injective,
  // so a first meeting cannot happen later than that.
  for (long j = 0; j <= static_cast<long>(sys.size()); ++j)
    if (is_witness(sys, x, y, k0 + j, k0 + j - m)) return Witness{k0 + j, k0 + j - m};
  return std::nullopt;
}

GroupoidElement make_element(const FiniteSystem& sys, Index x, long m, Index y) {
  auto w = minimal_witness(sys, x, m, y);
  if (!w)
    throw ValidationError("(" + sys.label(x) + "," + std::to_string(m) + "," + sys.label(y) +
                          ") is not in the groupoid");
  return {x, m, y, *w};
}

GroupoidElement unit(Index x) { return {x, 0, x, {0, 0}}; }

GroupoidElement generator(const FiniteSystem& sys, Index x) { return {x, 1, sys.sigma(x), {1, 0}}; }

std::vector<GroupoidElement> enumerate(const FiniteSystem& sys, long max_abs_m, long max_witness) {
  if (max_abs_m < 0 || max_witness < 0) throw ValidationError("enumeration bounds must be >= 0");
  std::vector<GroupoidElement> out;
  for (Index x = 0; x < sys.size(); ++x)
    for (long m = -max_abs_m; m <= max_abs_m; ++m)
      for (Index y = 0; y < sys.size(); ++y) {
        // witnesses are closed under (k,l) -> (k+1,l+1), so the minimal one decides
        auto w = minimal_witness(sys, x, m, y);
        if (w && w->k <= max_witness && w->l <= max_witness) out.push_back({x, m, y, *w});
      }
  std::sort(out.begin(), out.end());
  return out;
}

bool composable(const GroupoidElement& g, const GroupoidElement& h) { return g.y == h.x; }

GroupoidElement compose(const FiniteSystem& sys, const GroupoidElement& g, const GroupoidElement& h) {
  if (!composable(g, h))
    throw ValidationError("not composable: source of " + describe(sys, g) + " differs from range of " +
                          describe(sys, h));
  auto w = minimal_witness(sys, g.x, g.m + h.m, h.y);
  if (!w) throw InternalError("product of groupoid elements has no witness");
  return {g.x, g.m + h.m, h.y, *w};
}

GroupoidElement inverse(const GroupoidElement& g) { return {g.y, -g.m, g.x, {g.witness.l, g.witness.k}}; }

std::string describe(const FiniteSystem& sys, const GroupoidElement& g) {
  std::ostringstream os;
  os << "(" << sys.label(g.x) << "," << g.m << "," << sys.label(g.y) << ")";
  return os.str();
}

Truncation::Truncation(const FiniteSystem& sys, long max_abs_m, long max_witness)
    : sys_(&sys), max_abs_m_(max_abs_m), max_witness_(max_witness),
      elements_(enumerate(sys, max_abs_m, max_witness)) {
  by_range_.resize(static_cast<std::size_t>(sys.size()));
  for (std::size_t i = 0; i < elements_.size(); ++i) by_range_[static_cast<std::size_t>(elements_[i].x)].push_back(i);
}

std::optional<std::size_t> Truncation::find(Index x, long m, Index y) const {
  const GroupoidElement key{x, m, y, {}};
  auto it = std::lower_bound(elements_.begin(), elements_.end(), key);
  if (it == elements_.end() || !(*it == key)) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

namespace {

bool same_with_witness(const GroupoidElement& a, const GroupoidElement& b) {
  return a == b && a.witness == b.witness;
}

}  // namespace

VerificationReport verify_groupoid_laws(const Truncation& t) {
  const FiniteSystem& sys = t.system();
  const auto& els = t.elements();
  LawReport witness{"witness"}, range_source{"range-source"}, units{"unit"}, inverses{"inverse"},
      assoc{"associativity"};

  for (const auto& g : els) {
    const auto [k, l] = g.witness;
    const bool valid = k - l == g.m && is_witness(sys, g.x, g.y, k, l);
    const bool minimal = k == 0 || l == 0 || !is_witness(sys, g.x, g.y, k - 1, l - 1);
    const bool bounded = k <= t.max_witness() && l <= t.max_witness() && std::abs(g.m) <= t.max_abs_m();
    witness.check(valid && minimal && bounded, [&] { return describe(sys, g); });

    units.check(same_with_witness(compose(sys, unit(g.x), g), g) && same_with_witness(compose(sys, g, unit(g.y)), g),
                [&] { return describe(sys, g); });

    const GroupoidElement gi = inverse(g);
    const auto gi_min = minimal_witness(sys, gi.x, gi.m, gi.y);
    inverses.check(gi_min && *gi_min == gi.witness && t.find(gi).has_value() &&
                       same_with_witness(compose(sys, g, gi), unit(g.x)) &&
                       same_with_witness(compose(sys, gi, g), unit(g.y)) &&
                       same_with_witness(inverse(gi), g),
                   [&] { return describe(sys, g); });
  }

  for (const auto& g : els)
    for (std::size_t hi : t.with_range(g.y)) {
      const auto& h = els[hi];
      const GroupoidElement gh = compose(sys, g, h);
      range_source.check(gh.range() == g.range() && gh.source() == h.source() &&
                             gh.witness.k <= g.witness.k + h.witness.k && gh.witness.l <= g.witness.l + h.witness.l,
                         [&] { return describe(sys, g) + describe(sys, h); });
      for (std::size_t ki : t.with_range(h.y)) {
        const auto& k = els[ki];
        assoc.check(same_with_witness(compose(sys, gh, k), compose(sys, g, compose(sys, h, k))),
                    [&] { return describe(sys, g) + describe(sys, h) + describe(sys, k); });
      }
    }

  return {{witness, range_source, units, inverses, assoc}};
}

IntVector cocycle_value(const FiniteSystem& sys, const FgAbGroup& a, const std::vector<IntVector>& g, Index x,
                        Index y, const Witness& w) {
  IntVector sum = IntVector::Zero(a.generator_count());
  for (long i = 0; i < w.k; ++i) sum += g[static_cast<std::size_t>(sys.iterate(x, i))];
  for (long j = 0; j < w.l; ++j) sum -= g[static_cast<std::size_t>(sys.iterate(y, j))];
  return a.reduce(sum);
}

CocycleExtension extend_cocycle(const Truncation& t, const FgAbGroup& a, const std::vector<IntVector>& g) {
  const FiniteSystem& sys = t.system();
  if (static_cast<Index>(g.size()) != sys.size()) throw ValidationError("cocycle data: one value per point required");
  CocycleExtension ext{a, {}, {}, {}};
  for (const auto& v : g) ext.generator_values.push_back(a.reduce(v));
  const auto& gv = ext.generator_values;
  const auto& els = t.elements();
  auto f = [&](const GroupoidElement& e) { return cocycle_value(sys, a, gv, e.x, e.y, e.witness); };
  for (const auto& e : els) ext.values.push_back(f(e));

  LawReport independence{"witness-independence"}, additivity{"additivity"}, restriction{"restriction"},
      uniqueness{"uniqueness"};

  for (std::size_t i = 0; i < els.size(); ++i) {
    const auto& e = els[i];
    for (long j = 1; j <= t.max_witness(); ++j) {
      const Witness w{e.witness.k + j, e.witness.l + j};
      independence.check(cocycle_value(sys, a, gv, e.x, e.y, w) == ext.values[i],
                         [&] { return describe(sys, e) + " at witness (" + std::to_string(w.k) + "," +
                                      std::to_string(w.l) + ")"; });
    }
  }

  for (std::size_t i = 0; i < els.size(); ++i)
    for (std::size_t hi : t.with_range(els[i].y)) {
      const GroupoidElement p = compose(sys, els[i], els[hi]);
      additivity.check(f(p) == a.reduce(ext.values[i] + ext.values[hi]),
                       [&] { return describe(sys, els[i]) + describe(sys, els[hi]); });
    }

  for (Index x = 0; x < sys.size(); ++x)
    restriction.check(f(generator(sys, x)) == gv[static_cast<std::size_t>(x)], [&] { return sys.label(x); });

  // Uniqueness: shift the value on one element by a generator of A (and on its
  // inverse by the negative); some relation inside the truncation, or the
  // restriction to generators, must notice.
  if (t.max_abs_m() >= 1 && t.max_witness() >= 1) {
    struct Relation {
      std::size_t a, b, c;  // els[a] els[b] = els[c]
    };
    std::vector<Relation> relations;
    std::vector<std::vector<std::size_t>> touching(els.size());
    for (std::size_t i = 0; i < els.size(); ++i)
      for (std::size_t hi : t.with_range(els[i].y)) {
        auto c = t.find(compose(sys, els[i], els[hi]));
        if (!c) continue;
        const std::size_t id = relations.size();
        relations.push_back({i, hi, *c});
        for (std::size_t e : {i, hi, *c})
          if (touching[e].empty() || touching[e].back() != id) touching[e].push_back(id);
      }
    std::vector<bool> is_generator(els.size(), false);
    for (Index x = 0; x < sys.size(); ++x)
      if (auto gi = t.find(generator(sys, x))) is_generator[*gi] = true;

    for (std::size_t i = 0; i < els.size(); ++i) {
      const std::size_t ii = *t.find(inverse(els[i]));
      for (Index gen = 0; gen < a.generator_count(); ++gen) {
        IntVector delta = IntVector::Zero(a.generator_count());
        delta(gen) = 1;
        auto perturbed = [&](std::size_t e) {
          IntVector v = ext.values[e];
          if (e == i) v += delta;
          if (e == ii && ii != i) v -= delta;
          return a.reduce(v);
        };
        bool detected = false;
        for (std::size_t e : {i, ii})
          if (is_generator[e] && perturbed(e) != ext.values[e]) detected = true;
        for (std::size_t e : {i, ii})
          for (std::size_t r : touching[e]) {
            if (detected) break;
            const auto& rel = relations[r];
            if (perturbed(rel.c) != a.reduce(perturbed(rel.a) + perturbed(rel.b))) detected = true;
          }
        uniqueness.check(detected, [&] { return describe(sys, els[i]) + " shifted along generator " +
                                                std::to_string(gen); });
      }
    }
  }

  ext.report.laws = {independence, additivity, restriction, uniqueness};
  return ext;
}

}  // namespace gcoh
