#include "support.hpp"

#include <gcoh/abelian_group.hpp>
#include <gcoh/normal_form.hpp>

#include <catch_amalgamated.hpp>

using namespace gcoh;
using namespace gcoh::testing;

namespace {

IntMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r ? static_cast<Index>(rows.begin()->size()) : 0;
  IntMatrix m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

IntVector vec(std::initializer_list<long> xs) {
  IntVector v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (long x : xs) v(i++) = x;
  return v;
}

template <typename Scalar>
void check_smith(const Mat<Scalar>& m) {
  const auto snf = smith_normal_form(m);
  REQUIRE(snf.D == snf.U * m * snf.V);
  REQUIRE(snf.U * snf.U_inv == Mat<Scalar>::Identity(m.rows(), m.rows()));
  REQUIRE(snf.V * snf.V_inv == Mat<Scalar>::Identity(m.cols(), m.cols()));
  for (Index i = 0; i < snf.D.rows(); ++i)
    for (Index j = 0; j < snf.D.cols(); ++j)
      if (i != j) REQUIRE(snf.D(i, j) == 0);
  for (std::size_t i = 0; i < snf.diagonal.size(); ++i) {
    REQUIRE(snf.diagonal[i] >= 0);
    if (i + 1 < snf.diagonal.size()) {
      if (snf.diagonal[i] == 0)
        REQUIRE(snf.diagonal[i + 1] == 0);
      else
        REQUIRE(snf.diagonal[i + 1] % snf.diagonal[i] == 0);
    }
  }
}

}  // namespace

TEST_CASE("smith normal form examples") {
  auto snf = smith_normal_form(mat({{2, 4}, {6, 8}}));
  REQUIRE(snf.diagonal == std::vector<BigInt>{2, 4});
  // independent check: product of invariant factors is |det|
  REQUIRE(snf.diagonal[0] * snf.diagonal[1] == abs(leibniz_det(mat({{2, 4}, {6, 8}}))));
  REQUIRE(smith_normal_form(mat({{1, 0}, {0, 1}})).diagonal == std::vector<BigInt>{1, 1});
  REQUIRE(smith_normal_form(mat({{0}})).diagonal == std::vector<BigInt>{0});
  auto empty = smith_normal_form(IntMatrix(0, 3));
  REQUIRE(empty.diagonal.empty());
  REQUIRE(empty.V.rows() == 3);
}

TEST_CASE("smith decomposition reconstructs for random matrices") {
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const Index r = rng.uniform(0, 5), c = rng.uniform(0, 5);
    check_smith<BigInt>(random_matrix(rng, r, c, -9, 9));
  }
  for (int trial = 0; trial < 100; ++trial) {
    Mat<std::int64_t> m(3, 4);
    for (Index i = 0; i < 3; ++i)
      for (Index j = 0; j < 4; ++j) m(i, j) = rng.uniform(-5, 5);
    check_smith<std::int64_t>(m);
  }
  // rank deficient and zero-heavy
  check_smith<BigInt>(mat({{0, 0, 0}, {0, 6, 0}, {0, 0, 4}}));
  check_smith<BigInt>(mat({{1, 2, 3}, {2, 4, 6}, {3, 6, 9}}));
}

TEST_CASE("unimodular factors have determinant +-1") {
  Rng rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const Index n = rng.uniform(1, 4);
    const auto snf = smith_normal_form(random_matrix(rng, n, n + 1, -6, 6));
    REQUIRE(abs(leibniz_det(snf.U)) == 1);
    REQUIRE(abs(leibniz_det(snf.V)) == 1);
  }
}

TEST_CASE("big entries do not overflow") {
  IntMatrix m(2, 2);
  m << BigInt("123456789012345678901234567890"), BigInt(3), BigInt(7), BigInt("98765432109876543210");
  check_smith<BigInt>(m);
  REQUIRE(determinant(m) == leibniz_det(m));
}

TEST_CASE("cokernel examples") {
  REQUIRE(cokernel(mat({{3}})).to_string() == "Z/3");
  REQUIRE(cokernel(mat({{2, 0}, {0, 4}})).to_string() == "Z/2 + Z/4");
  REQUIRE(cokernel(IntMatrix(1, 0)).to_string() == "Z");
  REQUIRE(cokernel(mat({{2, 0}, {0, 4}})) == FgAbGroup::from_factors(0, {2, 4}));
}

TEST_CASE("cokernel matches quotient enumeration exhaustively on 2x2") {
  IntMatrix m(2, 2);
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b)
      for (long c = -3; c <= 3; ++c)
        for (long d = -3; d <= 3; ++d) {
          m << a, b, c, d;
          REQUIRE(shape_of(cokernel(m)) == cokernel_by_enumeration(m));
        }
}

TEST_CASE("cokernel matches quotient enumeration on sampled shapes up to 3x3") {
  Rng rng(13);
  for (int trial = 0; trial < 400; ++trial) {
    const Index r = rng.uniform(0, 3), c = rng.uniform(0, 3);
    const IntMatrix m = random_matrix(rng, r, c, -3, 3);
    INFO(m);
    REQUIRE(shape_of(cokernel(m)) == cokernel_by_enumeration(m));
  }
}

TEST_CASE("cokernel torsion is transpose invariant") {
  Rng rng(14);
  for (int trial = 0; trial < 200; ++trial) {
    const IntMatrix m = random_matrix(rng, rng.uniform(1, 4), rng.uniform(1, 4), -5, 5);
    REQUIRE(cokernel(m).torsion() == cokernel(IntMatrix(m.transpose())).torsion());
  }
}

TEST_CASE("kernel basis examples") {
  IntMatrix k = kernel_basis(mat({{1, -1}}));
  REQUIRE(k.cols() == 1);
  REQUIRE(abs(k(0, 0)) == 1);
  REQUIRE(k(0, 0) == k(1, 0));
  REQUIRE(kernel_basis(mat({{1, 0}, {0, 1}})).cols() == 0);
  k = kernel_basis(mat({{2, 4}}));
  REQUIRE(k.cols() == 1);
  REQUIRE(((k.col(0) == vec({2, -1})) || (k.col(0) == vec({-2, 1}))));
}

TEST_CASE("kernel basis spans every small kernel vector") {
  Rng rng(15);
  for (int trial = 0; trial < 60; ++trial) {
    const IntMatrix m = random_matrix(rng, rng.uniform(1, 2), 3, -3, 3);
    const IntMatrix k = kernel_basis(m);
    REQUIRE((m * k).isZero());
    REQUIRE(matrix_rank(k) == k.cols());
    REQUIRE(k.cols() == 3 - minor_rank(m).rank);
    IntVector v(3);
    for (long a = -4; a <= 4; ++a)
      for (long b = -4; b <= 4; ++b)
        for (long c = -4; c <= 4; ++c) {
          v << a, b, c;
          if ((m * v).isZero()) REQUIRE(hermite_solve(k, v).has_value());
        }
  }
}

TEST_CASE("hermite solve") {
  REQUIRE(*hermite_solve(mat({{2}}), vec({4})) == vec({2}));
  REQUIRE_FALSE(hermite_solve(mat({{2}}), vec({3})).has_value());
  REQUIRE(*hermite_solve(mat({{1, 2}, {3, 4}}), vec({1, 1})) == vec({-1, 1}));

  Rng rng(16);
  for (int trial = 0; trial < 200; ++trial) {
    const Index r = rng.uniform(1, 4), c = rng.uniform(1, 4);
    const IntMatrix a = random_matrix(rng, r, c, -5, 5);
    const IntVector x = random_matrix(rng, c, 1, -5, 5);
    const IntVector b = a * x;
    auto sol = hermite_solve(a, b);
    REQUIRE(sol.has_value());
    REQUIRE(a * *sol == b);
  }
  // 2x on Z^2 misses odd vectors
  REQUIRE_FALSE(hermite_solve(mat({{2, 0}, {0, 2}}), vec({1, 0})).has_value());
}

TEST_CASE("hermite form is canonical for lattices") {
  Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const IntMatrix a = random_matrix(rng, 3, rng.uniform(1, 4), -5, 5);
    // multiply by a random unimodular matrix built from elementary operations
    IntMatrix w = IntMatrix::Identity(a.cols(), a.cols());
    for (int s = 0; s < 6 && a.cols() > 1; ++s) {
      const Index i = rng.uniform(0, a.cols() - 1);
      Index j = rng.uniform(0, a.cols() - 2);
      if (j >= i) ++j;
      w.col(i) += BigInt(static_cast<long>(rng.uniform(-3, 3))) * w.col(j);
    }
    REQUIRE(same_lattice(a, IntMatrix(a * w)));
    REQUIRE(lattice_basis(a) == lattice_basis(IntMatrix(a * w)));
  }
  REQUIRE_FALSE(same_lattice(mat({{2}}), mat({{4}})));
  REQUIRE(lattice_contains(mat({{2}}), mat({{4}})));
}

TEST_CASE("determinant agrees with Leibniz") {
  Rng rng(18);
  for (int trial = 0; trial < 200; ++trial) {
    const Index n = rng.uniform(0, 5);
    const IntMatrix m = random_matrix(rng, n, n, -4, 4);
    REQUIRE(determinant(m) == leibniz_det(m));
  }
}

TEST_CASE("exterior power examples") {
  REQUIRE(exterior_power(mat({{2, 0}, {0, 3}}), 2) == mat({{6}}));
  REQUIRE(exterior_power(mat({{5, 1}, {2, 7}}), 0) == mat({{1}}));
  REQUIRE_THROWS_AS(exterior_power(mat({{1}}), 2), ValidationError);
  REQUIRE_THROWS_AS(exterior_power(mat({{1, 2}}), 1), ValidationError);
  const IntMatrix r = mat({{2, 1, 0}, {0, 2, 0}, {0, 0, 2}});
  REQUIRE(exterior_power(r, 1) == r);
}

TEST_CASE("exterior power matches multilinear expansion") {
  Rng rng(19);
  for (int trial = 0; trial < 60; ++trial) {
    const Index k = rng.uniform(1, 4);
    const IntMatrix m = random_matrix(rng, k, k, -3, 3);
    for (Index n = 0; n <= k; ++n) REQUIRE(exterior_power(m, n) == wedge_by_expansion(m, n));
  }
}

TEST_CASE("exterior power is functorial") {
  Rng rng(20);
  for (int trial = 0; trial < 60; ++trial) {
    const Index k = rng.uniform(3, 4);
    const IntMatrix a = random_matrix(rng, k, k, -3, 3), b = random_matrix(rng, k, k, -3, 3);
    for (Index n = 0; n <= k; ++n)
      REQUIRE(exterior_power(IntMatrix(a * b), n) == exterior_power(a, n) * exterior_power(b, n));
  }
}

TEST_CASE("exterior power invariant factors do not depend on subset order") {
  // reversing the subset order conjugates by a permutation matrix
  Rng rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const IntMatrix m = random_matrix(rng, 4, 4, -3, 3);
    const IntMatrix w = exterior_power(m, 2);
    const IntMatrix rev = w.reverse();
    const IntMatrix id = IntMatrix::Identity(w.rows(), w.cols());
    REQUIRE(cokernel(IntMatrix(id - w)) == cokernel(IntMatrix(id - rev)));
  }
}

TEST_CASE("direct sums recombine invariant factors") {
  auto z2 = FgAbGroup::cyclic(2), z3 = FgAbGroup::cyclic(3), z4 = FgAbGroup::cyclic(4);
  REQUIRE(direct_sum(z2, z3) == FgAbGroup::cyclic(6));
  REQUIRE(direct_sum(FgAbGroup::free(1), FgAbGroup::trivial()) == FgAbGroup::free(1));
  REQUIRE(direct_sum(z2, z4).to_string() == "Z/2 + Z/4");
  REQUIRE(FgAbGroup::from_factors(2, {6, 4, 1, 0}).to_string() == "Z^3 + Z/2 + Z/12");
  REQUIRE(FgAbGroup::cyclic(0) == FgAbGroup::free(1));
  REQUIRE(FgAbGroup::cyclic(-1).is_trivial());
  REQUIRE(FgAbGroup::trivial().to_string() == "0");
}

TEST_CASE("direct sum of cyclic groups matches element orders") {
  // Z/2 + Z/3 has an element of order 6
  const auto g = direct_sum(FgAbGroup::cyclic(2), FgAbGroup::cyclic(3));
  std::vector<i64> orders;
  for (const auto& e : elements_of(g)) {
    i64 o = 1;
    IntVector x = e;
    while (!g.is_zero_element(x)) {
      x += e;
      ++o;
    }
    orders.push_back(o);
  }
  REQUIRE(*std::max_element(orders.begin(), orders.end()) == 6);
  REQUIRE(orders.size() == 6);
}

TEST_CASE("homomorphisms are validated") {
  REQUIRE_THROWS_AS(AbHom(FgAbGroup::cyclic(2), FgAbGroup::free(1), mat({{1}})), ValidationError);
  REQUIRE_THROWS_AS(AbHom(FgAbGroup::cyclic(4), FgAbGroup::cyclic(6), mat({{1}})), ValidationError);
  REQUIRE_NOTHROW(AbHom(FgAbGroup::cyclic(4), FgAbGroup::cyclic(6), mat({{3}})));
  REQUIRE_THROWS_AS(AbHom(FgAbGroup::free(2), FgAbGroup::free(1), mat({{1}})), ValidationError);
  AbHom h(FgAbGroup::free(1), FgAbGroup::cyclic(3), mat({{7}}));
  REQUIRE(h.matrix()(0, 0) == 1);
}

TEST_CASE("kernel, image and cokernel of homomorphisms") {
  const auto z4 = FgAbGroup::cyclic(4);
  AbHom twice(z4, z4, mat({{2}}));
  REQUIRE(kernel(twice) == FgAbGroup::cyclic(2));
  REQUIRE(image(twice) == FgAbGroup::cyclic(2));
  REQUIRE(cokernel(twice) == FgAbGroup::cyclic(2));

  AbHom x2(FgAbGroup::free(1), FgAbGroup::free(1), mat({{2}}));
  REQUIRE(kernel(x2).is_trivial());
  REQUIRE(cokernel(x2) == FgAbGroup::cyclic(2));
  REQUIRE(kernel(identity_minus(AbHom::identity(FgAbGroup::free(2)))) == FgAbGroup::free(2));

  // Z -> Z/6, 1 -> 2
  AbHom proj(FgAbGroup::free(1), FgAbGroup::cyclic(6), mat({{2}}));
  REQUIRE(kernel(proj) == FgAbGroup::free(1));
  REQUIRE(image(proj) == FgAbGroup::cyclic(3));
  REQUIRE(cokernel(proj) == FgAbGroup::cyclic(2));
}

TEST_CASE("kernel and image of random finite homomorphisms match enumeration") {
  Rng rng(22);
  const std::vector<std::vector<BigInt>> shapes = {{2}, {4}, {6}, {2, 2}, {2, 4}, {3, 3}, {2, 6}, {12}};
  int checked = 0;
  while (checked < 150) {
    const auto src = FgAbGroup::from_factors(0, shapes[static_cast<std::size_t>(rng.uniform(0, 7))]);
    const auto tgt = FgAbGroup::from_factors(0, shapes[static_cast<std::size_t>(rng.uniform(0, 7))]);
    const IntMatrix m = random_matrix(rng, tgt.generator_count(), src.generator_count(), 0, 11);
    AbHom f = [&]() -> AbHom {
      try {
        return AbHom(src, tgt, m);
      } catch (const ValidationError&) {
        return AbHom::zero(src, tgt);
      }
    }();
    ++checked;
    // brute force: kernel order profile and image size
    std::vector<i64> kernel_orders;
    std::vector<IntVector> image_elems;
    for (const auto& e : elements_of(src)) {
      const IntVector fe = f.apply(e);
      if (tgt.is_zero_element(fe)) {
        i64 o = 1;
        IntVector x = e;
        while (!src.is_zero_element(x)) {
          x = src.reduce(IntVector(x + e));
          ++o;
        }
        kernel_orders.push_back(o);
      }
      if (std::find(image_elems.begin(), image_elems.end(), fe) == image_elems.end()) image_elems.push_back(fe);
    }
    const FgAbGroup k = kernel(f);
    REQUIRE(k.is_finite());
    std::vector<i64> expected_orders;
    for (const auto& e : elements_of(k)) {
      i64 o = 1;
      IntVector x = e;
      while (!k.is_zero_element(x)) {
        x = k.reduce(IntVector(x + e));
        ++o;
      }
      expected_orders.push_back(o);
    }
    REQUIRE(order_profile(kernel_orders) == order_profile(expected_orders));
    REQUIRE(image(f).torsion_order() == static_cast<long>(image_elems.size()));
    REQUIRE(cokernel(f).torsion_order() * static_cast<long>(image_elems.size()) == tgt.torsion_order());
  }
}

TEST_CASE("composition and identity") {
  Rng rng(23);
  const auto g = FgAbGroup::from_factors(1, {2, 4});
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix a = random_matrix(rng, 3, 3, -3, 3), b = random_matrix(rng, 3, 3, -3, 3);
    // force well-definedness: torsion columns must be killed by their orders
    a(2, 0) = 0; a(2, 1) = 0; a(1, 0) *= 2;
    b(2, 0) = 0; b(2, 1) = 0; b(1, 0) *= 2;
    AbHom f(g, g, a), h(g, g, b);
    const IntVector x = random_matrix(rng, 3, 1, -5, 5);
    REQUIRE(compose(h, f).apply(x) == h.apply(f.apply(x)));
    REQUIRE(compose(AbHom::identity(g), f) == f);
  }
}
