#include <gcoh/skew_product.hpp>

#include <gcoh/errors.hpp>

#include <set>

namespace gcoh {

int path_product(const FiniteSystem& sys, const FiniteGroup& group, const std::vector<int>& c, Index x, long k) {
  int r = group.identity();
  for (long i = 0; i < k; ++i) r = group.mul(r, c[static_cast<std::size_t>(sys.iterate(x, i))]);
  return r;
}

int skew_cocycle(const FiniteSystem& sys, const FiniteGroup& group, const std::vector<int>& c, Index x, Index y,
                 const Witness& w) {
  return group.mul(path_product(sys, group, c, x, w.k), group.inv(path_product(sys, group, c, y, w.l)));
}

namespace {

FiniteSystem build_tau(const FiniteSystem& sys, const FiniteGroup& group, const std::vector<int>& c) {
  const int n = group.order();
  std::vector<std::string> labels;
  std::vector<Index> tau;
  for (Index x = 0; x < sys.size(); ++x)
    for (int g = 0; g < n; ++g) {
      labels.push_back("(" + sys.label(x) + "," + std::to_string(g) + ")");
      tau.push_back(sys.sigma(x) * n + group.mul(g, c[static_cast<std::size_t>(x)]));
    }
  return FiniteSystem(std::move(labels), std::move(tau));
}

}  // namespace

SkewProduct skew_product(const FiniteSystem& sys, const FiniteGroup& group, const std::vector<int>& c, long max_abs_m,
                         long max_witness) {
  if (static_cast<Index>(c.size()) != sys.size()) throw ValidationError("skew product: one group element per point");
  for (int v : c)
    if (v < 0 || v >= group.order()) throw ValidationError("skew product: cocycle value is not a group element");

  SkewProduct sp{build_tau(sys, group, c), group, c, {}};
  const int n = group.order();
  const Truncation base(sys, max_abs_m, max_witness);
  const Truncation big(sp.system, max_abs_m, max_witness);
  const auto& els = base.elements();
  auto ctilde = [&](const GroupoidElement& e) { return skew_cocycle(sys, group, c, e.x, e.y, e.witness); };
  auto phi = [&](const GroupoidElement& e, int g) {
    return GroupoidElement{sp.point(e.x, g), e.m, sp.point(e.y, group.mul(g, ctilde(e))), e.witness};
  };
  auto show = [&](const GroupoidElement& e, int g) { return describe(sys, e) + " with g=" + std::to_string(g); };

  LawReport paths{"path-product"}, independence{"cocycle-independence"}, identity{"cocycle-identity"},
      bijection{"bijection"}, homomorphism{"homomorphism"};

  for (Index x = 0; x < sys.size(); ++x)
    for (int g = 0; g < n; ++g)
      for (long k = 0; k <= max_witness; ++k)
        paths.check(sp.system.iterate(sp.point(x, g), k) ==
                        sp.point(sys.iterate(x, k), group.mul(g, path_product(sys, group, c, x, k))),
                    [&] { return sys.label(x) + " g=" + std::to_string(g) + " k=" + std::to_string(k); });

  for (const auto& e : els)
    for (long j = 1; j <= max_witness; ++j)
      independence.check(skew_cocycle(sys, group, c, e.x, e.y, {e.witness.k + j, e.witness.l + j}) == ctilde(e),
                         [&] { return describe(sys, e); });

  for (std::size_t i = 0; i < els.size(); ++i)
    for (std::size_t hi : base.with_range(els[i].y)) {
      const auto& a = els[i];
      const auto& b = els[hi];
      identity.check(ctilde(compose(sys, a, b)) == group.mul(ctilde(a), ctilde(b)),
                     [&] { return describe(sys, a) + describe(sys, b); });
    }

  // forward: every (gamma, g) lands in the big truncation with the same witness
  std::set<std::size_t> hit;
  for (const auto& e : els)
    for (int g = 0; g < n; ++g) {
      const GroupoidElement img = phi(e, g);
      auto pos = big.find(img);
      const bool ok = pos && big.elements()[*pos].witness == e.witness && hit.insert(*pos).second;
      bijection.check(ok, [&] { return show(e, g); });
    }
  // backward: every element of the big truncation comes from one
  for (const auto& E : big.elements()) {
    const int g = sp.fiber(E.x), h = sp.fiber(E.y);
    auto pos = base.find(sp.base(E.x), E.m, sp.base(E.y));
    bijection.check(pos && h == group.mul(g, ctilde(els[*pos])) && els[*pos].witness == E.witness,
                    [&] { return describe(sp.system, E); });
  }
  bijection.check(big.size() == els.size() * static_cast<std::size_t>(n), [] { return std::string("cardinality"); });

  for (std::size_t i = 0; i < els.size(); ++i)
    for (int g = 0; g < n; ++g) {
      const auto& a = els[i];
      // (a, g)^{-1} = (a^{-1}, g c(a))
      homomorphism.check(inverse(phi(a, g)) == phi(inverse(a), group.mul(g, ctilde(a))),
                         [&] { return "inverse of " + show(a, g); });
      for (std::size_t hi : base.with_range(a.y)) {
        const auto& b = els[hi];
        // (a, g)(b, g c(a)) = (ab, g)
        const GroupoidElement lhs = compose(sp.system, phi(a, g), phi(b, group.mul(g, ctilde(a))));
        const GroupoidElement rhs = phi(compose(sys, a, b), g);
        homomorphism.check(lhs == rhs && lhs.witness == rhs.witness,
                           [&] { return show(a, g) + " times " + describe(sys, b); });
      }
    }

  sp.report.laws = {paths, independence, identity, bijection, homomorphism};
  return sp;
}

}  // namespace gcoh
