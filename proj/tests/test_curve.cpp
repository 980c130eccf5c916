#include <catch2/catch_amalgamated.hpp>

#include <hypo/curve.hpp>
#include <hypo/fixtures.hpp>

#include <cmath>
#include <random>

using namespace hypo;

TEST_CASE("parametrization basics") {
  RationalParam p = build_param({2, 1, Variant::plain});
  REQUIRE(param_x(p, Rat(0)) == Rat(1));
  REQUIRE(param_y(p, Rat(0)) == Rat(0));
  REQUIRE(p.den == Rat(3) * pow(UniPoly("t", {Rat(1), Rat(0), Rat(1)}), 2));

  RationalParam q = build_param({3, 1, Variant::tilde});
  REQUIRE(param_x(q, Rat(0)) == rat(-1, 2));
  REQUIRE(param_y(q, Rat(0)) == Rat(0));

  REQUIRE_THROWS_AS(build_param({4, 2, Variant::plain}), domain_error);
  REQUIRE_THROWS_AS(build_param({1, 1, Variant::plain}), domain_error);
}

TEST_CASE("projectivization degrees and infinity images") {
  for (CurveSpec spec : {CurveSpec{2, 1}, CurveSpec{3, 1}, CurveSpec{3, 2}, CurveSpec{5, 3}}) {
    auto pp = projectivize(build_param(spec));
    REQUIRE(pp.degree == 2 * spec.k);
    // z component vanishes at [1:+-i], x and y components land on [1:+-i:0]
    auto [zr, zi] = eval_at_one_i(pp.hom[2], true);
    REQUIRE(zr == 0);
    REQUIRE(zi == 0);
    auto [xr, xi] = eval_at_one_i(pp.hom[0], true);
    auto [yr, yi] = eval_at_one_i(pp.hom[1], true);
    REQUIRE((sign(xr) != 0 || sign(xi) != 0));
    // y/x = +-i  <=>  y = +-i x  <=>  (yr, yi) = (-xi, xr) or (xi, -xr)
    bool plus = (yr == -xi && yi == xr);
    bool minus = (yr == xi && yi == -xr);
    REQUIRE((plus || minus));
  }
  // [0:1] lands at a finite affine point
  auto pp = projectivize(build_param({2, 1, Variant::plain}));
  REQUIRE(sign(pp.hom[2][0]) != 0);
}

TEST_CASE("implicitization matches the reference quartic and sextic") {
  ImplicitCurve deltoid = implicitize(build_param({2, 1, Variant::plain}));
  REQUIRE(deltoid.f == reference_deltoid());

  ImplicitCurve h53 = implicitize(build_param({3, 2, Variant::plain}));
  REQUIRE(h53.f == reference_hipo53());
}

TEST_CASE("astroid and the degree-ten curve need the tilde variant") {
  ImplicitCurve tilde = implicitize(build_param({3, 1, Variant::tilde}));
  REQUIRE(tilde.f == reference_astroid());
  ImplicitCurve plain = implicitize(build_param({3, 1, Variant::plain}));
  REQUIRE(plain.f != reference_astroid());

  ImplicitCurve t85 = implicitize(build_param({5, 3, Variant::tilde}));
  REQUIRE(t85.f == reference_hipo85());
}

TEST_CASE("quotient substitutions") {
  ImplicitCurve deltoid{{2, 1}, reference_deltoid()};
  REQUIRE(quotient_y(deltoid).f == reference_deltoid_fold());

  ImplicitCurve astroid{{3, 1, Variant::tilde}, reference_astroid()};
  ImplicitCurve astro_fold = quotient_y(astroid);
  REQUIRE(astro_fold.f == reference_astroid_fold());
  REQUIRE(quotient_x(astro_fold).f == reference_astroid_fold2());

  BiPoly yy = BiPoly::monomial(Rat(1), 0, 2) - BiPoly::constant(Rat(1));
  ImplicitCurve c{{2, 1}, yy};
  REQUIRE(quotient_y(c).f == canonical(BiPoly::monomial(Rat(1), 0, 1) - BiPoly::constant(Rat(1))));

  BiPoly xy = BiPoly::monomial(Rat(1), 2, 0) + BiPoly::monomial(Rat(1), 0, 1);
  ImplicitCurve cx{{2, 1}, xy};
  REQUIRE(quotient_x(cx).f == canonical(BiPoly::monomial(Rat(1), 1, 0) + BiPoly::monomial(Rat(1), 0, 1)));

  BiPoly odd = BiPoly::monomial(Rat(1), 0, 3) + BiPoly::monomial(Rat(1), 1, 0);
  REQUIRE_THROWS_AS(quotient_y({{2, 1}, odd}), domain_error);
}

TEST_CASE("implicit curve invariants across small specs") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> num(-50, 50);
  for (CurveSpec spec :
       {CurveSpec{2, 1}, CurveSpec{3, 1}, CurveSpec{3, 2}, CurveSpec{4, 1}, CurveSpec{4, 3},
        CurveSpec{5, 2}, CurveSpec{2, 1, Variant::tilde}, CurveSpec{3, 2, Variant::tilde}}) {
    RationalParam p = build_param(spec);
    ImplicitCurve c = implicitize(p);
    REQUIRE(c.f.total_degree() == 2 * spec.k);
    REQUIRE(even_in(c.f, 1));  // mirror symmetry f(x,-y) = f(x,y)
    REQUIRE(vanishes_on_param(c.f, p));
    // canonical form is primitive with positive leading coefficient
    REQUIRE(rational_content(c.f) == Rat(1));
    // a spread of rational parameter points satisfies f (Zariski-dense image)
    for (int i = 0; i < 50; ++i) {
      Rat t(num(rng), 1 + (i % 7));
      t.canonicalize();
      REQUIRE(eval_at(c.f, param_x(p, t), param_y(p, t)) == Rat(0));
    }
  }
}

TEST_CASE("real evaluation agrees with the rational path") {
  for (CurveSpec spec : {CurveSpec{2, 1}, CurveSpec{3, 1, Variant::tilde}, CurveSpec{3, 2}}) {
    RationalParam p = build_param(spec);
    for (double theta : {0.1, 0.5, 1.0, 2.2, 3.0, 4.4, 5.9, M_PI / 4}) {
      auto [x, y] = eval_real(spec, theta);
      double t = std::tan(theta / 2);
      double xd = eval_double(p.xnum, t) / eval_double(p.den, t);
      double yd = eval_double(p.ynum, t) / eval_double(p.den, t);
      REQUIRE(std::abs(x - xd) < 1e-10);
      REQUIRE(std::abs(y - yd) < 1e-10);
    }
  }
  auto [x0, y0] = eval_real({2, 1}, 0.0);
  REQUIRE(x0 == 1.0);
  REQUIRE(y0 == 0.0);
  // advancing theta by 2 pi/N rotates the point by 2 pi k/N, so the cusp at
  // theta = 2 pi/3 is (1,0) rotated by 4 pi/3
  auto [xc, yc] = eval_real({2, 1}, 2 * M_PI / 3);
  REQUIRE(std::abs(xc - std::cos(4 * M_PI / 3)) < 1e-12);
  REQUIRE(std::abs(yc - std::sin(4 * M_PI / 3)) < 1e-12);
}

TEST_CASE("rotation by 2 pi / N stays on the curve") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> th(0, 2 * M_PI);
  for (CurveSpec spec : {CurveSpec{2, 1}, CurveSpec{3, 2}}) {
    ImplicitCurve c = implicitize(build_param(spec));
    double ang = 2 * M_PI / spec.N();
    for (int i = 0; i < 20; ++i) {
      auto [x, y] = eval_real(spec, th(rng));
      double xr = std::cos(ang) * x - std::sin(ang) * y;
      double yr = std::sin(ang) * x + std::cos(ang) * y;
      double v = 0;
      for (const auto& [e, coeff] : c.f.terms)
        v += to_double(coeff) * std::pow(xr, e.first) * std::pow(yr, e.second);
      REQUIRE(std::abs(v) < 1e-8);
    }
  }
}

TEST_CASE("circle meeting encodes the cusp parameters twice") {
  RationalParam p = build_param({2, 1, Variant::plain});
  UniPoly m = circle_meeting(p);
  // roots {0, +-sqrt 3} with multiplicity 2: m = c * t^2 (t^2-3)^2 (1+t^2)^(k-l)
  UniPoly t = UniPoly::variable("t");
  UniPoly expected = t * t * pow(t * t - UniPoly::constant(Rat(3), "t"), 2) *
                     UniPoly("t", {Rat(1), Rat(0), Rat(1)});
  REQUIRE(primitive_part(m) == primitive_part(expected));
}
