#include <catch2/catch_amalgamated.hpp>

#include <hypo/groups.hpp>

#include <random>

using namespace hypo;

namespace {

// the complement-group presentation for the folded deltoid plus axis, with
// the meridian square killed: < a, x, b | (ax)^3=(xa)^3, [b,x], aba=bab, x^2 >
Presentation deltoid_quotient_group() {
  Presentation p;
  p.gens = {"a", "x", "b"};
  auto ax = reduced(3, {1, 2});
  auto xa = reduced(3, {2, 1});
  add_relator(p, pow(ax, 3) * inverse(pow(xa, 3)));
  add_relator(p, commutator_relator(3, 3, 2));
  add_relator(p, braid_relator(3, 1, 3));
  add_relator(p, reduced(3, {2, 2}));
  return p;
}

// < x, a, b, y | aba=bab, [a,x], [b,y], [x,y], (ay)^2=(ya)^2, (bx)^2=(xb)^2,
//                x^2, y^2 >
Presentation astroid_quotient_group() {
  Presentation p;
  p.gens = {"x", "a", "b", "y"};
  add_relator(p, braid_relator(4, 2, 3));
  add_relator(p, commutator_relator(4, 2, 1));
  add_relator(p, commutator_relator(4, 3, 4));
  add_relator(p, commutator_relator(4, 1, 4));
  auto ay = reduced(4, {2, 4}), ya = reduced(4, {4, 2});
  add_relator(p, pow(ay, 2) * inverse(pow(ya, 2)));
  auto bx = reduced(4, {3, 1}), xb = reduced(4, {1, 3});
  add_relator(p, pow(bx, 2) * inverse(pow(xb, 2)));
  add_relator(p, reduced(4, {1, 1}));
  add_relator(p, reduced(4, {4, 4}));
  return p;
}

}  // namespace

TEST_CASE("artin presentations") {
  Presentation b3 = artin_presentation(path_graph(2));
  REQUIRE(b3.rank() == 2);
  REQUIRE(b3.relators.size() == 1);
  REQUIRE(b3.relators[0].letters == cyclic_canonical(braid_relator(2, 1, 2)).letters);

  ArtinGraph k3 = cycle_graph(3);
  Presentation tri = artin_presentation(k3);
  REQUIRE(tri.relators.size() == 3);

  ArtinGraph empty2;
  empty2.vertices = {"s", "t"};
  Presentation z2 = artin_presentation(empty2);
  REQUIRE(z2.relators.size() == 1);
  REQUIRE(z2.relators[0].letters == cyclic_canonical(commutator_relator(2, 1, 2)).letters);
}

TEST_CASE("add_relations") {
  Presentation p = artin_presentation(path_graph(2));
  size_t before = p.relators.size();
  Presentation q = add_relations(p, {reduced(2, {1, 1})});
  REQUIRE(q.relators.size() == before + 1);
  REQUIRE(add_relations(q, {reduced(2, {1, 1})}).relators.size() == q.relators.size());
  REQUIRE_THROWS_AS(add_relations(p, {reduced(5, {5})}), domain_error);
}

TEST_CASE("kernel of the sign map on Z/2 is trivial") {
  Presentation p;
  p.gens = {"x"};
  add_relator(p, reduced(1, {1, 1}));
  FiniteQuotientMap m{p, {2}, {{1}}};
  SubgroupPresentation s = kernel_presentation(m);
  REQUIRE(s.index == 2);
  TietzeResult t = tietze_simplify(s.pres);
  REQUIRE(t.complete);
  REQUIRE(t.pres.rank() == 0);
  REQUIRE(t.pres.relators.empty());
}

TEST_CASE("deltoid kernel is the triangle artin group") {
  Presentation g = deltoid_quotient_group();
  // x -> t, a, b -> 1
  FiniteQuotientMap m{g, {2}, {{0}, {1}, {0}}};
  SubgroupPresentation s = kernel_presentation(m);
  REQUIRE(s.index == 2);
  REQUIRE(s.schreier_generator_count == 2 * 3 - 2 + 1);
  TietzeResult t = tietze_simplify(s.pres);
  REQUIRE(t.complete);
  REQUIRE(t.pres.rank() == 3);
  REQUIRE(t.pres.relators.size() == 3);
  ArtinMatch match = match_artin_graph(t.pres);
  REQUIRE(match.matched);
  REQUIRE(is_cycle(match.graph, 3));
}

TEST_CASE("astroid kernel is the square artin group") {
  Presentation g = astroid_quotient_group();
  // x -> (1,0), y -> (0,1), a, b -> 0
  FiniteQuotientMap m{g, {2, 2}, {{1, 0}, {0, 0}, {0, 0}, {0, 1}}};
  SubgroupPresentation s = kernel_presentation(m);
  REQUIRE(s.index == 4);
  TietzeResult t = tietze_simplify(s.pres);
  REQUIRE(t.complete);
  ArtinMatch match = match_artin_graph(t.pres);
  REQUIRE(match.matched);
  REQUIRE(is_cycle(match.graph, 4));
}

TEST_CASE("tietze eliminates defined generators") {
  Presentation p;
  p.gens = {"a", "b"};
  add_relator(p, reduced(2, {-2, 1, 1}));  // b = a^2
  TietzeResult t = tietze_simplify(p);
  REQUIRE(t.pres.rank() == 1);
  REQUIRE(t.pres.relators.empty());
}

TEST_CASE("tietze preserves abelianization") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> letter(1, 4), len(2, 8), coin(0, 1);
  for (int trial = 0; trial < 30; ++trial) {
    Presentation p;
    p.gens = default_generator_names(4);
    int n_rel = 2 + trial % 3;
    for (int i = 0; i < n_rel; ++i) {
      std::vector<int> w;
      int L = len(rng);
      for (int j = 0; j < L; ++j) w.push_back(coin(rng) ? letter(rng) : -letter(rng));
      add_relator(p, reduced(4, std::move(w)));
    }
    Abelianization before = abelianization(p);
    TietzeResult t = tietze_simplify(p);
    Presentation q = t.pres;
    REQUIRE(abelianization(q) == before);
  }
}

TEST_CASE("abelianization invariants") {
  Presentation tri = artin_presentation(cycle_graph(3));
  Abelianization a = abelianization(tri);
  REQUIRE(a.free_rank == 1);
  REQUIRE(a.torsion.empty());

  Presentation z2;
  z2.gens = {"x"};
  add_relator(z2, reduced(1, {1, 1}));
  Abelianization b = abelianization(z2);
  REQUIRE(b.free_rank == 0);
  REQUIRE(b.torsion == std::vector<Int>{2});

  Presentation oct = artin_presentation(cycle_graph(8));
  Abelianization c = abelianization(oct);
  REQUIRE(c.free_rank == 1);
  REQUIRE(c.torsion.empty());
}

TEST_CASE("low index subgroup counts") {
  Presentation z;  // infinite cyclic
  z.gens = {"a"};
  auto zc = low_index_subgroups(z, 5);
  REQUIRE(zc == std::vector<int>{1, 1, 1, 1, 1});

  Presentation b3 = artin_presentation(path_graph(2));
  auto bc = low_index_subgroups(b3, 2);
  REQUIRE(bc[0] == 1);
  REQUIRE(bc[1] == 1);

  REQUIRE(low_index_subgroups(z, 1) == std::vector<int>{1});
  REQUIRE_THROWS_AS(low_index_subgroups(z, 9), domain_error);
}

TEST_CASE("artin graph recognition round trip") {
  std::mt19937 rng(2718);
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<int> nv(2, 8), coin(0, 1);
    int n = nv(rng);
    ArtinGraph g;
    g.vertices = default_generator_names(n);
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (coin(rng)) g.add_edge(a, b);
    ArtinMatch m = match_artin_graph(artin_presentation(g));
    REQUIRE(m.matched);
    REQUIRE(m.graph == g);
  }

  // (ab)^2 = (ba)^2 is neither braid nor commutator shaped
  Presentation p;
  p.gens = {"a", "b"};
  add_relator(p, pow(reduced(2, {1, 2}), 2) * inverse(pow(reduced(2, {2, 1}), 2)));
  REQUIRE_FALSE(match_artin_graph(p).matched);
}
