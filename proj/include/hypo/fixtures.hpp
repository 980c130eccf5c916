#pragma once

// Reference implicit equations for the four case-study curves and their
// symmetry quotients, built structurally and expanded exactly.  These anchor
// the golden tests and the fixture manifest.

#include <hypo/curve.hpp>

namespace hypo {

namespace detail {

inline BiPoly X() { return BiPoly::monomial(Rat(1), 1, 0); }
inline BiPoly Y() { return BiPoly::monomial(Rat(1), 0, 1); }
inline BiPoly C(long v) { return BiPoly::constant(Rat(v)); }

}  // namespace detail

// 3(x^2+y^2)^2 + 24x(x^2+y^2) + 6(x^2+y^2) - 32x^3 - 1
inline BiPoly reference_deltoid() {
  using namespace detail;
  BiPoly r2 = X() * X() + Y() * Y();
  return canonical(C(3) * r2 * r2 + C(24) * X() * r2 + C(6) * r2 - C(32) * pow(X(), 3) - C(1));
}

// 3(x^2+y)^2 + 24x(x^2+y) + 6(x^2+y) - 32x^3 - 1
inline BiPoly reference_deltoid_fold() {
  using namespace detail;
  BiPoly s = X() * X() + Y();
  return canonical(C(3) * s * s + C(24) * X() * s + C(6) * s - C(32) * pow(X(), 3) - C(1));
}

// 4(x^2+y^2)^3 + 15(x^2+y^2)^2 + 12(x^2+y^2) - 108 x^2 y^2 - 4
inline BiPoly reference_astroid() {
  using namespace detail;
  BiPoly r2 = X() * X() + Y() * Y();
  return canonical(C(4) * pow(r2, 3) + C(15) * r2 * r2 + C(12) * r2 -
                   C(108) * X() * X() * Y() * Y() - C(4));
}

// 4(x^2+y)^3 + 15(x^2+y)^2 + 12(x^2+y) - 108 x^2 y - 4
inline BiPoly reference_astroid_fold() {
  using namespace detail;
  BiPoly s = X() * X() + Y();
  return canonical(C(4) * pow(s, 3) + C(15) * s * s + C(12) * s - C(108) * X() * X() * Y() - C(4));
}

// 4(x+y)^3 + 15(x+y)^2 + 12(x+y) - 108 x y - 4
inline BiPoly reference_astroid_fold2() {
  using namespace detail;
  BiPoly s = X() + Y();
  return canonical(C(4) * pow(s, 3) + C(15) * s * s + C(12) * s - C(108) * X() * Y() - C(4));
}

// 80(x^2+y^2)^3 + 165(x^2+y^2)^2 - 30(x^2+y^2) - 216 x (x^4 - 10 x^2 y^2 + 5 y^4) + 1
inline BiPoly reference_hipo53() {
  using namespace detail;
  BiPoly r2 = X() * X() + Y() * Y();
  BiPoly penta = pow(X(), 4) - C(10) * X() * X() * Y() * Y() + C(5) * pow(Y(), 4);
  return canonical(C(80) * pow(r2, 3) + C(165) * r2 * r2 - C(30) * r2 - C(216) * X() * penta +
                   C(1));
}

// 11664(x^2+y^2)^5 + 47655(x^2+y^2)^4 + 40240(x^2+y^2)^3 - 17040(x^2+y^2)^2
//   + 1920(x^2+y^2) - 1350000 x^2 y^2 (x^2-y^2)^2 - 64
inline BiPoly reference_hipo85() {
  using namespace detail;
  BiPoly r2 = X() * X() + Y() * Y();
  BiPoly mix = X() * X() * Y() * Y() * pow(X() * X() - Y() * Y(), 2);
  return canonical(C(11664) * pow(r2, 5) + C(47655) * pow(r2, 4) + C(40240) * pow(r2, 3) -
                   C(17040) * r2 * r2 + C(1920) * r2 - C(1350000) * mix - C(64));
}

}  // namespace hypo
