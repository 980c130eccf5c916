#include <catch2/catch_amalgamated.hpp>

#include <hypo/census.hpp>

using namespace hypo;

TEST_CASE("cusp parameters") {
  CuspData d21 = cusp_parameters(build_param({2, 1}));
  REQUIRE(d21.count == 3);
  REQUIRE_FALSE(d21.cusp_at_infinity);
  // parameter polynomial ~ t(t^2-3)
  UniPoly t = UniPoly::variable("t");
  REQUIRE(d21.parameter_poly == primitive_part(t * (t * t - UniPoly::constant(Rat(3), "t"))));

  REQUIRE(cusp_parameters(build_param({3, 2})).count == 5);
  REQUIRE(cusp_parameters(build_param({5, 3})).count == 8);
  REQUIRE(cusp_parameters(build_param({3, 1})).cusp_at_infinity);
  REQUIRE_FALSE(cusp_parameters(build_param({3, 1, Variant::tilde})).cusp_at_infinity);
}

TEST_CASE("node censuses match the closed forms") {
  NodeData n21 = node_parameters(build_param({2, 1}));
  REQUIRE(n21.total == 0);

  NodeData n31 = node_parameters(build_param({3, 1}));
  REQUIRE(n31.total == 4);
  REQUIRE(n31.real_pairs == 0);
  REQUIRE(n31.nonreal == 4);

  NodeData n53 = node_parameters(build_param({5, 3}));
  REQUIRE(n53.total == 24);
  REQUIRE(n53.real_pairs == 16);
  REQUIRE(n53.nonreal == 8);
}

TEST_CASE("node polynomial is mirror invariant") {
  for (CurveSpec s : {CurveSpec{3, 1}, CurveSpec{3, 2}, CurveSpec{4, 3}}) {
    UniPoly e = node_parameters(build_param(s)).elim_poly;
    UniPoly mirrored = e;
    for (int i = 1; i <= mirrored.degree(); i += 2) mirrored.c[i] = -mirrored.c[i];
    mirrored.trim();
    REQUIRE((mirrored == e || mirrored == -e));
  }
}

TEST_CASE("infinity types and genus closure") {
  InfinityType i21 = infinity_type({2, 1});
  REQUIRE(i21.p == 2);
  REQUIRE(i21.q == 1);
  REQUIRE(i21.smooth());
  InfinityType i31 = infinity_type({3, 1});
  REQUIRE(i31.p == 3);
  REQUIRE(i31.q == 2);
  REQUIRE_FALSE(i31.smooth());
  REQUIRE(infinity_type({5, 3}).q == 2);

  REQUIRE(genus_check({2, 1}) == 0);
  REQUIRE(genus_check({3, 1}) == 0);
  REQUIRE(genus_check({5, 3}) == 0);
  for (int k = 2; k <= 10; ++k)
    for (int l = 1; l < k; ++l)
      if (std::gcd(k, l) == 1) REQUIRE(genus_check({k, l}) == 0);
}

TEST_CASE("full census certificates") {
  SingularityCensus c21 = full_census({2, 1});
  REQUIRE(c21.degree == 4);
  REQUIRE(c21.cusps == 3);
  REQUIRE(c21.nodes_real == 0);
  REQUIRE(c21.nodes_nonreal == 0);
  REQUIRE(c21.alpha == 0);

  SingularityCensus c32 = full_census({3, 2});
  REQUIRE(c32.degree == 6);
  REQUIRE(c32.cusps == 5);
  REQUIRE(c32.nodes_real == 5);
  REQUIRE(c32.nodes_nonreal == 0);
  REQUIRE(c32.infinity.p == 3);
  REQUIRE(c32.infinity.q == 1);

  SingularityCensus c43 = full_census({4, 3});
  REQUIRE(c43.degree == 8);
  REQUIRE(c43.cusps == 7);
  REQUIRE(c43.nodes_real == 14);
  REQUIRE(c43.nodes_nonreal == 0);
  REQUIRE(c43.infinity.q == 1);

  REQUIRE_THROWS_AS(full_census({7, 2}), domain_error);  // resource bound
  REQUIRE(full_census({7, 2}, 8).cusps == 9);
}

TEST_CASE("elimination counts for all coprime pairs up to k = 5") {
  for (int k = 2; k <= 5; ++k)
    for (int l = 1; l < k; ++l) {
      if (std::gcd(k, l) != 1) continue;
      int N = k + l;
      SingularityCensus c = full_census({k, l});
      REQUIRE(c.cusps == N);
      REQUIRE(c.nodes_real == N * (l - 1));
      REQUIRE(c.nodes_nonreal == N * (k - l - 1));
      REQUIRE(c.infinity.p == k);
      REQUIRE(c.infinity.q == k - l);
      REQUIRE(c.alpha == 0);
    }
}
