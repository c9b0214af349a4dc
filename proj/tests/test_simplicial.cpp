#include "support.hpp"

#include <gcoh/simplicial.hpp>

#include <catch_amalgamated.hpp>

using namespace gcoh;
using namespace gcoh::testing;

namespace {

std::vector<FgAbGroup> all_cohomology(const SimplicialComplex& k) {
  const auto c = cochain_complex(k);
  std::vector<FgAbGroup> out;
  for (Index n = 0; n <= std::max<Index>(k.dimension(), 0); ++n) out.push_back(cohomology(c, n).group);
  return out;
}

SimplicialComplex seven_vertex_torus() {
  std::vector<Simplex> faces;
  for (Index i = 0; i < 7; ++i) {
    Simplex a{i, (i + 1) % 7, (i + 3) % 7}, b{i, (i + 2) % 7, (i + 3) % 7};
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    faces.push_back(a);
    faces.push_back(b);
  }
  return SimplicialComplex::from_facets(7, faces);
}

// Independent Betti numbers: rank of C^n minus ranks of adjacent boundary
// maps, with ranks from nonzero minors (small complexes only).
Index betti(const SimplicialComplex& k, Index n) {
  const auto c = cochain_complex(k);
  Index out = c.rank(n) - minor_rank(c.differential(n)).rank;
  if (n > 0) out -= minor_rank(c.differential(n - 1)).rank;
  return out;
}

SimplicialComplex random_complex(Rng& rng) {
  const Index nv = rng.uniform(1, 6);
  std::vector<Simplex> facets;
  const int count = static_cast<int>(rng.uniform(0, 6));
  for (int f = 0; f < count; ++f) {
    Simplex s;
    for (Index v = 0; v < nv; ++v)
      if (rng.uniform(0, 2) == 0) s.push_back(v);
    if (!s.empty() && s.size() <= 4) facets.push_back(s);
  }
  return SimplicialComplex::from_facets(nv, facets);
}

}  // namespace

TEST_CASE("closure and ordering") {
  const auto k = SimplicialComplex({"a", "b", "c"}, {{"c", "a", "b"}});
  REQUIRE(k.dimension() == 2);
  REQUIRE(k.simplices(0).size() == 3);
  REQUIRE(k.simplices(1) == std::vector<Simplex>{{0, 1}, {0, 2}, {1, 2}});
  REQUIRE(k.simplices(2) == std::vector<Simplex>{{0, 1, 2}});
  REQUIRE_THROWS_AS(SimplicialComplex({"a", "a"}, {}), ValidationError);
  REQUIRE_THROWS_AS(SimplicialComplex({"a"}, {{"a", "z"}}), ValidationError);
  REQUIRE_THROWS_AS(SimplicialComplex({"a"}, {{"a", "a"}}), ValidationError);
}

TEST_CASE("cohomology of standard complexes") {
  REQUIRE(all_cohomology(circle(3)) == std::vector<FgAbGroup>{FgAbGroup::free(1), FgAbGroup::free(1)});
  const auto solid = SimplicialComplex::from_facets(3, {{0, 1, 2}});
  REQUIRE(all_cohomology(solid) == std::vector<FgAbGroup>{FgAbGroup::free(1), FgAbGroup(), FgAbGroup()});
  const auto torus = seven_vertex_torus();
  REQUIRE(torus.simplices(0).size() == 7);
  REQUIRE(torus.simplices(1).size() == 21);
  REQUIRE(torus.simplices(2).size() == 14);
  REQUIRE(all_cohomology(torus) ==
          std::vector<FgAbGroup>{FgAbGroup::free(1), FgAbGroup::free(2), FgAbGroup::free(1)});
  // Betti numbers by minors agree
  REQUIRE(betti(circle(3), 1) == 1);
  REQUIRE(betti(solid, 1) == 0);
}

TEST_CASE("projective plane has 2-torsion") {
  // 6-vertex real projective plane
  const auto rp2 = SimplicialComplex::from_facets(
      6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5}, {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {1, 3, 5}, {2, 4, 5}});
  const auto h = all_cohomology(rp2);
  REQUIRE(h[0] == FgAbGroup::free(1));
  REQUIRE(h[1].is_trivial());
  REQUIRE(h[2] == FgAbGroup::cyclic(2));
}

TEST_CASE("cochain complexes of random complexes are valid and match Betti numbers") {
  Rng rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const auto k = random_complex(rng);
    const auto c = cochain_complex(k);
    for (Index n = 0; n <= k.dimension(); ++n) REQUIRE(cohomology(c, n).group.free_rank() == betti(k, n));
  }
}

TEST_CASE("simplicial maps are validated") {
  const auto k = circle(4);
  REQUIRE_THROWS_AS(SimplicialMap(k, k, {0, 2, 1, 3}), ValidationError);  // edge 01 -> 02 missing
  REQUIRE_THROWS_AS(SimplicialMap(k, k, {0, 1, 2}), ValidationError);
  REQUIRE_NOTHROW(SimplicialMap(k, k, {1, 2, 3, 0}));
  REQUIRE_NOTHROW(SimplicialMap(k, k, {0, 0, 1, 1}));
}

TEST_CASE("identity and constant maps") {
  const auto k = seven_vertex_torus();
  const auto id = induced_cochain_map(SimplicialMap::identity(k));
  for (Index n = 0; n <= 2; ++n) REQUIRE(induced_map(id, n) == AbHom::identity(cohomology(cochain_complex(k), n).group));

  const auto c = circle(5);
  const auto constant = induced_cochain_map(SimplicialMap(c, c, std::vector<Index>(5, 2)));
  REQUIRE(induced_map(constant, 0) == AbHom::identity(FgAbGroup::free(1)));
  REQUIRE(induced_map(constant, 1).matrix().isZero());
}

TEST_CASE("connected complexes: every self-map is the identity on H^0") {
  Rng rng(42);
  const auto k = circle(5);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Index> f(5);
    // a random walk map is always simplicial on a cycle
    f[0] = rng.uniform(0, 4);
    for (Index i = 1; i < 5; ++i) f[static_cast<std::size_t>(i)] = scalar::mod<Index>(f[static_cast<std::size_t>(i - 1)] + rng.uniform(-1, 1), 5);
    try {
      const auto m = induced_cochain_map(SimplicialMap(k, k, f));
      REQUIRE(induced_map(m, 0) == AbHom::identity(FgAbGroup::free(1)));
    } catch (const ValidationError&) {
      // the closing edge f[4] -> f[0] may not be an edge
    }
  }
}

TEST_CASE("circle degree maps agree with the winding number") {
  for (Index n : {3, 4, 5}) {
    for (Index d = -3; d <= 3; ++d) {
      const auto cm = circle_map(n, d);
      std::vector<Index> walk;
      for (Index v : cm.approximation.vertex_map()) walk.push_back(v);
      const Index w = d == 0 ? 0 : winding_number(walk, n);
      REQUIRE(w == d);
      const AbHom h1 = induced_map(cm.self, 1);
      REQUIRE(h1.matrix()(0, 0) == static_cast<long>(w));
      REQUIRE(induced_map(cm.self, 0) == AbHom::identity(FgAbGroup::free(1)));
    }
  }
}

TEST_CASE("doubling on an even cycle") {
  // vertex i -> 2i mod 4 on a subdivided 4-cycle: the 8-gon wraps twice around the 4-gon
  const auto cm = circle_map(4, 2);
  REQUIRE(cm.subdivided.vertex_count() == 8);
  REQUIRE(induced_map(cm.self, 1).matrix()(0, 0) == 2);
}

TEST_CASE("induced cochain maps are functorial on the torus") {
  const auto k = seven_vertex_torus();
  // rotations i -> i + a are automorphisms of this triangulation
  for (Index a = 0; a < 7; ++a)
    for (Index b = 0; b < 7; ++b) {
      std::vector<Index> fa, fb;
      for (Index i = 0; i < 7; ++i) {
        fa.push_back((i + a) % 7);
        fb.push_back((i + b) % 7);
      }
      SimplicialMap ma(k, k, fa), mb(k, k, fb);
      const auto both = induced_cochain_map(compose(mb, ma));
      const auto separate = compose(induced_cochain_map(ma), induced_cochain_map(mb));
      REQUIRE(both.components() == separate.components());
    }
}
