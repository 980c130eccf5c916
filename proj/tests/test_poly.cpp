#include <catch2/catch_amalgamated.hpp>

#include <hypo/chebyshev.hpp>
#include <hypo/resultant.hpp>
#include <hypo/sturm.hpp>

#include <random>

using namespace hypo;

namespace {

std::mt19937 rng(20240811);

UniPoly random_poly(int max_deg, int coeff_range = 6, const std::string& var = "x") {
  std::uniform_int_distribution<int> degd(0, max_deg), cd(-coeff_range, coeff_range);
  int d = degd(rng);
  std::vector<Rat> c(d + 1);
  for (auto& q : c) q = Rat(cd(rng));
  if (sign(c.back()) == 0) c.back() = Rat(1);
  return UniPoly(var, c);
}

}  // namespace

TEST_CASE("rational arithmetic is exact") {
  std::uniform_int_distribution<long> d(-1000, 1000), e(1, 1000);
  for (int i = 0; i < 200; ++i) {
    Rat a = rat(d(rng), e(rng)), b = rat(d(rng), e(rng));
    REQUIRE((a + b) - b == a);
    if (sign(b) != 0) REQUIRE((a * b) / b == a);
  }
  REQUIRE(rat_from_string("-4/6") == rat(-2, 3));
  REQUIRE(rat_to_string(rat(8, -6)) == "-4/3");
  REQUIRE_THROWS_AS(rat_from_string("1.5"), domain_error);
}

TEST_CASE("unipoly division and gcd") {
  UniPoly x = UniPoly::variable("x");
  UniPoly f = (x * x - UniPoly::constant(Rat(1), "x"));
  UniPoly g = x - UniPoly::constant(Rat(1), "x");
  REQUIRE(gcd(f, g) == g);
  REQUIRE(exact_divide(f, g) == x + UniPoly::constant(Rat(1), "x"));

  UniPoly sq = pow(x - UniPoly::constant(Rat(1), "x"), 2) * (x + UniPoly::constant(Rat(2), "x"));
  UniPoly sf = squarefree_part(sq);
  UniPoly expect = (x - UniPoly::constant(Rat(1), "x")) * (x + UniPoly::constant(Rat(2), "x"));
  REQUIRE(sf == expect / expect.lc());
}

TEST_CASE("resultant examples and properties") {
  UniPoly t = UniPoly::variable("t");
  // res(t-2, t^2-1) = value of t^2-1 at t=2 (monic linear first argument).
  UniPoly a = t - UniPoly::constant(Rat(2), "t");
  UniPoly b = t * t - UniPoly::constant(Rat(1), "t");
  REQUIRE(resultant(a, b) == Rat(3));

  // Common factor forces a zero resultant; checked against brute force gcd.
  for (int i = 0; i < 40; ++i) {
    UniPoly f = random_poly(4, 4, "t");
    UniPoly g = random_poly(4, 4, "t");
    if (f.degree() < 1) continue;
    REQUIRE(resultant(f, f * g) == Rat(0));
    bool share = gcd(f, g).degree() > 0;
    REQUIRE((resultant(f, g) == Rat(0)) == share);
  }

  // Multiplicativity res(f, g h) = res(f,g) res(f,h).
  for (int i = 0; i < 40; ++i) {
    UniPoly f = random_poly(4, 4, "t"), g = random_poly(3, 4, "t"), h = random_poly(3, 4, "t");
    if (f.is_zero() || g.is_zero() || h.is_zero()) continue;
    REQUIRE(resultant(f, g * h) == resultant(f, g) * resultant(f, h));
  }
}

TEST_CASE("bivariate resultant and discriminant") {
  // f = y^2 - x, discriminant in y is -4x (res(f, 2y) / 1).
  BiPoly f("x", "y");
  f.add_term(0, 2, Rat(1));
  f.add_term(1, 0, Rat(-1));
  UniPoly d = discriminant(f, 1);
  UniPoly x4 = UniPoly("x", {Rat(0), Rat(4)});
  REQUIRE((d == x4 || d == -x4));

  // y^2 - x^3: discriminant is a constant times x^3.
  BiPoly g("x", "y");
  g.add_term(0, 2, Rat(1));
  g.add_term(3, 0, Rat(-1));
  UniPoly dg = discriminant(g, 1);
  REQUIRE(dg.degree() == 3);
  REQUIRE(primitive_part(dg) == UniPoly("x", {Rat(0), Rat(0), Rat(0), Rat(1)}));

  REQUIRE_THROWS_AS(discriminant(lift(UniPoly::variable("x"), 0, "y"), 1), domain_error);
}

TEST_CASE("sturm counting and isolation") {
  UniPoly x = UniPoly::variable("x");
  UniPoly f = x * x - UniPoly::constant(Rat(2), "x");
  REQUIRE(sturm_count(f, Rat(0), Rat(2)) == 1);
  UniPoly g = x * x + UniPoly::constant(Rat(1), "x");
  REQUIRE(sturm_count(g) == 0);

  UniPoly h = x * (x * x - UniPoly::constant(Rat(3), "x"));
  auto roots = isolate_real_roots(h);
  REQUIRE(roots.size() == 3);
  REQUIRE(roots[0].upper < roots[1].lower);
  REQUIRE(roots[1].upper < roots[2].lower);
  REQUIRE(roots[1].contains(Rat(0)));

  REQUIRE(isolate_real_roots(UniPoly::constant(Rat(5), "x")).empty());

  // Whole-line counts agree with sign-change bisection at fine resolution.
  for (int i = 0; i < 25; ++i) {
    UniPoly p = random_poly(8);
    if (p.degree() < 1) continue;
    int exact = sturm_count(p);
    UniPoly sf = squarefree_part(p);
    Rat bound = root_bound(sf);
    int brute = 0;
    const int steps = 1 << 12;
    Rat lo = -bound, step = (bound - (-bound)) / steps;
    int prev = sign(eval(sf, lo));
    for (int s = 1; s <= steps; ++s) {
      Rat xx = lo + step * s;
      int cur = sign(eval(sf, xx));
      if (cur == 0) {
        ++brute;
        prev = 0;
        continue;
      }
      if (prev != 0 && cur != prev) ++brute;
      if (cur != 0) prev = cur;
    }
    // Bisection can only undercount (root pairs inside one step); at 2^-12 of
    // the Cauchy bound the random degree-8 integer polys here are safe.
    REQUIRE(exact == brute);
  }
}

TEST_CASE("tarski query counts roots with sign condition") {
  UniPoly x = UniPoly::variable("x");
  // roots of x(x-1)(x+2): signs of q = x+1 there: -1 -> -, 0 -> +, 1 -> +.
  UniPoly f = x * (x - UniPoly::constant(Rat(1), "x")) * (x + UniPoly::constant(Rat(2), "x"));
  UniPoly q = x + UniPoly::constant(Rat(1), "x");
  REQUIRE(tarski_query(f, q) == 1);
  REQUIRE(count_roots_with_positive(f, q) == 2);
}

TEST_CASE("bivariate gcd and squarefree") {
  BiPoly x = BiPoly::monomial(Rat(1), 1, 0);
  BiPoly y = BiPoly::monomial(Rat(1), 0, 1);
  BiPoly one = BiPoly::constant(Rat(1));
  BiPoly f = (x * y - one) * (x + y);
  BiPoly g = (x * y - one) * (x - y);
  REQUIRE(gcd_in(f, g, 1) == canonical(x * y - one));

  BiPoly sq = (x + y) * (x + y) * (x * y - one);
  REQUIRE(squarefree_part(sq) == canonical((x + y) * (x * y - one)));

  // pure-content factors survive squarefree_part
  BiPoly h = (x * x) * (y - x);
  REQUIRE(squarefree_part(h) == canonical(x * (y - x)));
}

TEST_CASE("chebyshev generation and identities") {
  REQUIRE(cheb(ChebKind::T, 2) == UniPoly("x", {Rat(-1), Rat(0), Rat(2)}));
  REQUIRE(cheb(ChebKind::U, 2) == UniPoly("x", {Rat(-1), Rat(0), Rat(4)}));
  REQUIRE(cheb(ChebKind::W, 2) == UniPoly("x", {Rat(-1), Rat(2), Rat(4)}));
  REQUIRE(certify_w_seeds());

  REQUIRE(verify_identity({ChebIdentityTag::sumU_even, 3, 1}));
  REQUIRE(verify_identity({ChebIdentityTag::diffT_odd, 2, 1}));
  REQUIRE(verify_identity({ChebIdentityTag::leadP, 5, 3}));
  REQUIRE(hypo_P(5, 3).lc() == Rat(48));

  // degrees and leading coefficients
  for (int n = 1; n <= 12; ++n) {
    REQUIRE(cheb(ChebKind::T, n).degree() == n);
    REQUIRE(cheb(ChebKind::T, n).lc() == pow_rat(Rat(2), n - 1));
    REQUIRE(cheb(ChebKind::U, n).lc() == pow_rat(Rat(2), n));
    REQUIRE(cheb(ChebKind::W, n).lc() == pow_rat(Rat(2), n));
  }

  // composition identity T_m(T_n) = T_{mn}
  for (int m = 1; m <= 8; ++m)
    for (int n = 1; m * n <= 64 && n <= 8; ++n)
      REQUIRE(compose(cheb(ChebKind::T, m), cheb(ChebKind::T, n)) == cheb(ChebKind::T, m * n));

  auto z = cheb_zero_count(ChebKind::T, 3);
  REQUIRE(z.count == 3);
  auto zw = cheb_zero_count(ChebKind::W, 1);
  REQUIRE(zw.count == 1);
  REQUIRE(zw.intervals[0].contains(rat(-1, 2)));

  // U_5 roots are cos(r*pi/6): two strictly negative, two strictly positive,
  // one at zero; the multiset is closed under negation.
  UniPoly u5 = cheb(ChebKind::U, 5);
  REQUIRE(sturm_count(u5, Rat(-1), rat(-1, 1000000)) == 2);
  REQUIRE(sturm_count(u5, rat(1, 1000000), Rat(1)) == 2);
  REQUIRE(sign(eval(u5, Rat(0))) == 0);
  auto u5roots = isolate_real_roots(u5);
  REQUIRE(u5roots.size() == 5);
  for (const auto& iv : u5roots) {
    bool has_mirror = false;
    for (const auto& jv : u5roots)
      if (jv.contains(-iv.lower) || jv.contains(-iv.upper) ||
          (-iv.upper <= jv.lower && jv.upper <= -iv.lower))
        has_mirror = true;
    REQUIRE(has_mirror);
  }
}
