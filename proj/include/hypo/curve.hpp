#pragma once

// Hypocycloid parametrizations (plain and tilde), projectivization,
// implicitization, symmetry quotients and real-point evaluation.

#include <hypo/chebyshev.hpp>
#include <hypo/resultant.hpp>

#include <cmath>
#include <numeric>

namespace hypo {

enum class Variant { plain, tilde };

struct CurveSpec {
  int k = 2, l = 1;
  Variant variant = Variant::plain;

  int N() const { return k + l; }
  void validate() const {
    if (l < 1 || k <= l) throw domain_error("curve spec needs k > l >= 1");
    if (std::gcd(k, l) != 1) throw domain_error("curve spec needs gcd(k,l) = 1");
  }
};

inline std::string variant_name(Variant v) { return v == Variant::plain ? "plain" : "tilde"; }

// Exact rational parametrization with common denominator N (1+t^2)^k.
struct RationalParam {
  CurveSpec spec;
  UniPoly xnum, ynum, den;  // in t
};

namespace detail {

// (1+t^2)^deg * p((1-t^2)/(1+t^2)) as a polynomial in t.
inline UniPoly weierstrass_substitute(const UniPoly& p, int deg) {
  UniPoly one_minus("t", {Rat(1), Rat(0), Rat(-1)});
  UniPoly one_plus("t", {Rat(1), Rat(0), Rat(1)});
  UniPoly acc("t");
  for (int j = 0; j <= p.degree(); ++j) {
    if (sign(p.coeff(j)) == 0) continue;
    acc = acc + UniPoly::constant(p.coeff(j), "t") * pow(one_minus, j) * pow(one_plus, deg - j);
  }
  return acc;
}

}  // namespace detail

inline RationalParam build_param(const CurveSpec& spec) {
  spec.validate();
  const int k = spec.k, l = spec.l, N = spec.N();
  UniPoly P = spec.variant == Variant::plain ? hypo_P(k, l) : hypo_P_tilde(k, l);
  UniPoly Q = spec.variant == Variant::plain ? hypo_Q(k, l) : hypo_Q_tilde(k, l);
  UniPoly xnum = detail::weierstrass_substitute(P, k);
  UniPoly qhat = detail::weierstrass_substitute(Q, k - 1);
  UniPoly t = UniPoly::variable("t");
  UniPoly ynum = Rat(2) * t * qhat;
  UniPoly den = Rat(N) * pow(UniPoly("t", {Rat(1), Rat(0), Rat(1)}), k);
  // x(-t) = x(t), y(-t) = -y(t): parity is structural, but cheap to assert.
  for (int i = 1; i <= xnum.degree(); i += 2)
    if (sign(xnum.coeff(i)) != 0) throw domain_error("parametrization parity broken (x)");
  for (int i = 0; i <= ynum.degree(); i += 2)
    if (sign(ynum.coeff(i)) != 0) throw domain_error("parametrization parity broken (y)");
  UniPoly g = gcd(gcd(xnum, ynum), den);
  if (g.degree() != 0) throw domain_error("parametrization has a common factor");
  return {spec, xnum, ynum, den};
}

inline Rat param_x(const RationalParam& p, const Rat& t) {
  return eval(p.xnum, t) / eval(p.den, t);
}
inline Rat param_y(const RationalParam& p, const Rat& t) {
  return eval(p.ynum, t) / eval(p.den, t);
}

// Homogeneous parametrization [p : q : z] of degree 2k in (t, s).
struct ProjectiveParam {
  CurveSpec spec;
  // coefficient vectors in t; component i carries the implicit factor s^(2k - deg - i)...
  // stored explicitly: hom[c][j] = coefficient of t^j s^(2k-j) in component c.
  std::array<std::vector<Rat>, 3> hom;
  int degree = 0;
};

inline ProjectiveParam projectivize(const RationalParam& p) {
  const int d = 2 * p.spec.k;
  ProjectiveParam out;
  out.spec = p.spec;
  out.degree = d;
  const UniPoly* comp[3] = {&p.xnum, &p.ynum, &p.den};
  for (int c = 0; c < 3; ++c) {
    out.hom[c].assign(d + 1, Rat(0));
    for (int j = 0; j <= comp[c]->degree(); ++j) out.hom[c][j] = comp[c]->coeff(j);
  }
  // no common zero on P^1: all components at [1:0] and [0:1]; shared roots of the
  // affine parts are excluded by the gcd check in build_param, s-divisibility here.
  bool all_szero = true, all_tzero = true;
  for (int c = 0; c < 3; ++c) {
    if (sign(out.hom[c][d]) != 0) all_szero = false;  // t^d coefficient
    if (sign(out.hom[c][0]) != 0) all_tzero = false;
  }
  if (all_szero || all_tzero) throw domain_error("projectivization has a base point");
  return out;
}

// Gaussian-rational evaluation (a + b i with exact a, b) of one homogeneous
// component at (t, s) = (1, +-i); used to certify the image of [1:+-i].
inline std::pair<Rat, Rat> eval_at_one_i(const std::vector<Rat>& hom, bool positive_i) {
  // t = 1, s = +-i: term c_j * t^j * s^(d-j) = c_j * (+-i)^(d-j)
  Rat re(0), im(0);
  const int d = static_cast<int>(hom.size()) - 1;
  for (int j = 0; j <= d; ++j) {
    if (sign(hom[j]) == 0) continue;
    int e = (d - j) % 4;
    if (!positive_i && (d - j) % 2 == 1) e = (e + 2) % 4;  // (-i)^n = conj(i^n)
    switch (e) {
      case 0: re += hom[j]; break;
      case 1: im += hom[j]; break;
      case 2: re -= hom[j]; break;
      case 3: im -= hom[j]; break;
    }
  }
  return {re, im};
}

struct ImplicitCurve {
  CurveSpec spec;
  BiPoly f;  // canonical: primitive integer coefficients, positive leading term
};

// Exact rational-function identity f(x(t), y(t)) = 0, cleared of denominators.
inline bool vanishes_on_param(const BiPoly& f, const RationalParam& p) {
  int d = f.total_degree();
  UniPoly acc("t");
  std::vector<UniPoly> xpow{UniPoly::constant(Rat(1), "t")}, ypow = xpow, dpow = xpow;
  for (int i = 1; i <= d; ++i) {
    xpow.push_back(xpow.back() * p.xnum);
    ypow.push_back(ypow.back() * p.ynum);
    dpow.push_back(dpow.back() * p.den);
  }
  for (const auto& [e, c] : f.terms) {
    int rest = d - e.first - e.second;
    acc = acc + UniPoly::constant(c, "t") * xpow[e.first] * ypow[e.second] * dpow[rest];
  }
  return acc.is_zero();
}

// Implicit equation by eliminating t from {xnum - x den, ynum - y den}.
// Extraneous resultant factors are stripped; the certificate is total degree
// exactly 2k plus exact vanishing on the parametrization.
inline ImplicitCurve implicitize(const RationalParam& p) {
  const int k = p.spec.k;
  const int dt = std::max({p.xnum.degree(), p.ynum.degree(), p.den.degree()});
  std::vector<BiPoly> fc(dt + 1, BiPoly("x", "y")), gc(dt + 1, BiPoly("x", "y"));
  for (int j = 0; j <= dt; ++j) {
    fc[j].add_term(0, 0, p.xnum.coeff(j));
    fc[j].add_term(1, 0, -p.den.coeff(j));
    gc[j].add_term(0, 0, p.ynum.coeff(j));
    gc[j].add_term(0, 1, -p.den.coeff(j));
  }
  while (!fc.empty() && fc.back().is_zero() && gc.back().is_zero()) {
    fc.pop_back();
    gc.pop_back();
  }
  BiPoly res = resultant_coeff_lists(fc, gc);
  if (res.is_zero()) throw domain_error("implicitization resultant vanished");
  BiPoly f = canonical(res);
  if (f.total_degree() != 2 * k) {
    f = squarefree_part(f);
    if (f.total_degree() != 2 * k)
      throw domain_error("implicitization left an extraneous factor: degree " +
                         std::to_string(f.total_degree()) + " vs expected " +
                         std::to_string(2 * k) + " for " + to_string(f));
  }
  if (!vanishes_on_param(f, p)) throw domain_error("implicit equation fails on parametrization");
  return {p.spec, f};
}

inline ImplicitCurve quotient_y(const ImplicitCurve& c) {
  if (!even_in(c.f, 1)) throw domain_error("curve is not mirror-symmetric in y");
  return {c.spec, canonical(halve_exponents(c.f, 1))};
}

inline ImplicitCurve quotient_x(const ImplicitCurve& c) {
  if (!even_in(c.f, 0)) throw domain_error("curve is not mirror-symmetric in x");
  return {c.spec, canonical(halve_exponents(c.f, 0))};
}

// Trigonometric evaluation; the drawing path.
inline std::pair<double, double> eval_real(const CurveSpec& spec, double theta) {
  const double k = spec.k, l = spec.l, N = spec.N();
  if (spec.variant == Variant::plain)
    return {(l * std::cos(k * theta) + k * std::cos(l * theta)) / N,
            (l * std::sin(k * theta) - k * std::sin(l * theta)) / N};
  return {(l * std::cos(k * theta) - k * std::cos(l * theta)) / N,
          (l * std::sin(k * theta) + k * std::sin(l * theta)) / N};
}

// Numerator of x(t)^2 + y(t)^2 - 1: its roots are the cusp parameters, each
// with multiplicity two (the fixed circle meets the curve transversally at
// the cusps and nowhere else in the affine plane).
inline UniPoly circle_meeting(const RationalParam& p) {
  return p.xnum * p.xnum + p.ynum * p.ynum - p.den * p.den;
}

}  // namespace hypo
