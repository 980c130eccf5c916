#pragma once

// Singularity census of a hypocycloid: cusp parameters, node counts via
// elimination in symmetric parameter coordinates, infinity type, and the
// genus-formula closure.  The census is a certificate, not a report: every
// elimination result must agree with the closed-form counts or construction
// throws.

#include <hypo/curve.hpp>
#include <hypo/resultant.hpp>
#include <hypo/sturm.hpp>

#include <numeric>

namespace hypo {

struct InfinityType {
  int p = 0, q = 0;  // local equation u^p - v^q at each of the two points
  bool smooth() const { return q == 1; }
};

struct SingularityCensus {
  int degree = 0;
  int cusps = 0;
  int nodes_real = 0;
  int nodes_nonreal = 0;
  InfinityType infinity;
  int alpha = 0;  // genus defect
};

struct CuspData {
  UniPoly parameter_poly;  // squarefree, roots = affine cusp parameters, all real
  int count = 0;           // projective count (affine roots + the t = infinity cusp)
  bool cusp_at_infinity = false;
};

// Common vanishing locus of the two coordinate derivatives.  Factors of
// 1 + t^2 (parameters of the points at infinity) are stripped; the chart
// u = 1/t decides whether t = infinity is itself a cusp.
inline CuspData cusp_parameters(const RationalParam& p) {
  UniPoly dx = derivative(p.xnum) * p.den - p.xnum * derivative(p.den);
  UniPoly dy = derivative(p.ynum) * p.den - p.ynum * derivative(p.den);
  UniPoly g = gcd(dx, dy);
  UniPoly circle("t", {Rat(1), Rat(0), Rat(1)});
  divide_out_powers(g, circle);
  UniPoly sf = squarefree_part(g);
  int real_roots = sf.degree() > 0 ? sturm_count(sf) : 0;
  if (real_roots != sf.degree())
    throw domain_error("cusp parameter polynomial has non-real roots");

  const int d = 2 * p.spec.k;
  UniPoly xr = reverse_to_degree(p.xnum, d, "u");
  UniPoly yr = reverse_to_degree(p.ynum, d, "u");
  UniPoly dr = reverse_to_degree(p.den, d, "u");
  UniPoly dxr = derivative(xr) * dr - xr * derivative(dr);
  UniPoly dyr = derivative(yr) * dr - yr * derivative(dr);
  bool inf_cusp = sign(eval(dxr, Rat(0))) == 0 && sign(eval(dyr, Rat(0))) == 0;

  CuspData out;
  out.parameter_poly = primitive_part(sf);
  out.cusp_at_infinity = inf_cusp;
  out.count = real_roots + (inf_cusp ? 1 : 0);
  if (out.count != p.spec.N())
    throw domain_error("cusp count " + std::to_string(out.count) +
                       " != N = " + std::to_string(p.spec.N()));
  return out;
}

namespace detail {

// Rewrite a symmetric polynomial in (t, s) in e = t+s, p = ts: substitute
// s = e - t, reduce modulo t^2 - e t + p, and check the odd part cancels.
inline BiPoly symmetric_reduce(const BiPoly& f_ts) {
  const std::string E = "e", P = "p";
  int dmax = std::max(f_ts.degree(0) + f_ts.degree(1), 1);
  std::vector<BiPoly> g(dmax + 1, BiPoly(E, P));  // g[a] multiplies t^a
  std::vector<std::vector<Rat>> binom(dmax + 1);
  for (int n = 0; n <= dmax; ++n) {
    binom[n].assign(n + 1, Rat(1));
    for (int r = 1; r < n; ++r) binom[n][r] = binom[n - 1][r - 1] + binom[n - 1][r];
  }
  for (const auto& [ex, c] : f_ts.terms) {
    int a = ex.first, b = ex.second;
    for (int j = 0; j <= b; ++j) {
      Rat coeff = c * binom[b][j];
      if ((b - j) % 2 == 1) coeff = -coeff;
      g[a + b - j].add_term(j, 0, coeff);  // e^j times t^(a+b-j)
    }
  }
  BiPoly e_poly = BiPoly::monomial(Rat(1), 1, 0, E, P);
  BiPoly p_poly = BiPoly::monomial(Rat(1), 0, 1, E, P);
  for (int d = dmax; d >= 2; --d) {
    if (g[d].is_zero()) continue;
    g[d - 1] = g[d - 1] + e_poly * g[d];
    g[d - 2] = g[d - 2] - p_poly * g[d];
    g[d] = BiPoly(E, P);
  }
  if (!g[1].is_zero()) throw domain_error("symmetric reduction left an odd part");
  return g[0];
}

inline BiPoly product_poly(const UniPoly& a, const UniPoly& b, const std::string& v0,
                           const std::string& v1) {
  BiPoly r(v0, v1);
  for (int i = 0; i <= a.degree(); ++i) {
    if (sign(a.coeff(i)) == 0) continue;
    for (int j = 0; j <= b.degree(); ++j)
      if (sign(b.coeff(j)) != 0) r.add_term(i, j, a.coeff(i) * b.coeff(j));
  }
  return r;
}

// (f(t) D(s) - f(s) D(t)) / (t - s), symmetric in (t, s).
inline BiPoly divided_difference(const UniPoly& f, const UniPoly& den) {
  BiPoly num = product_poly(f, den, "t", "s") - product_poly(den, f, "t", "s");
  BiPoly t_minus_s("t", "s");
  t_minus_s.add_term(1, 0, Rat(1));
  t_minus_s.add_term(0, 1, Rat(-1));
  return exact_divide(num, t_minus_s);
}

// Divide out every monomial factor of the given variable.
inline BiPoly strip_var_powers(const BiPoly& f, int which) {
  if (f.is_zero()) return f;
  int v = 1 << 30;
  for (const auto& [e, c] : f.terms) v = std::min(v, which == 0 ? e.first : e.second);
  if (v == 0) return f;
  BiPoly r(f.vars[0], f.vars[1]);
  for (const auto& [e, c] : f.terms)
    r.add_term(which == 0 ? e.first - v : e.first, which == 0 ? e.second : e.second - v, c);
  return r;
}

// Last PRS element of degree one in p, as the pair (u, v) with u p + v.
inline std::pair<UniPoly, UniPoly> linear_subresultant_in_p(BiPoly A, BiPoly B) {
  if (A.degree(1) < B.degree(1)) std::swap(A, B);
  while (!B.is_zero() && B.degree(1) > 1) {
    BiPoly r = pseudo_rem(A, B, 1);
    if (!r.is_zero()) r = divide_content(r, content_in(r, 1), 1);
    A = std::move(B);
    B = std::move(r);
  }
  if (B.is_zero() || B.degree(1) != 1)
    throw domain_error("node elimination is not in shape position");
  auto coeffs = coefficients_in(B, 1);
  return {coeffs[1], coeffs[0]};
}

}  // namespace detail

struct NodeData {
  // Squarefree polynomial in e = t+s carrying the off-axis nodes, times
  // e^(number of axis nodes); axis nodes (parameter pairs (t,-t)) all sit at
  // e = 0 and are counted through the y-numerator crossings.
  UniPoly elim_poly;
  int total = 0;       // = N(k-2)
  int real_pairs = 0;  // both parameters real      = N(l-1)
  int nonreal = 0;     // conjugate parameter pairs = N(k-l-1)
};

// Nodes in parameter space: pairs (t,s), t != s, with equal image.  The
// mirror symmetry splits them into the axis family (s = -t, detected on the
// y-numerator) and the off-axis family (eliminated in (e,p) coordinates).
inline NodeData node_parameters(const RationalParam& param) {
  const int N = param.spec.N(), k = param.spec.k, l = param.spec.l;
  const int expected_total = N * (k - 2);
  const int expected_real = N * (l - 1);
  const int expected_nonreal = N * (k - l - 1);
  CuspData cusps = cusp_parameters(param);

  // ---- axis family: y(t) = 0, t != 0, pairs (t, -t) -----------------------
  UniPoly w = param.ynum;
  UniPoly tvar = UniPoly::variable("t");
  UniPoly circle("t", {Rat(1), Rat(0), Rat(1)});
  divide_out_powers(w, tvar);
  divide_out_powers(w, circle);
  if (gcd(w, cusps.parameter_poly).degree() > 0)
    throw domain_error("axis crossing collides with a cusp parameter");
  if (squarefree_part(w).degree() != w.degree())
    throw domain_error("axis-node polynomial is not squarefree");
  UniPoly W = halve_exponents(w, "u");  // roots in u = t^2, one per node
  int axis_total = W.degree();
  int axis_real = 0, axis_nonreal = 0;
  if (axis_total > 0) {
    if (sign(eval(W, Rat(0))) == 0) throw domain_error("axis-node polynomial vanishes at zero");
    int real_u = sturm_count(W);
    int positive_u = count_roots_with_positive(W, UniPoly::variable("u"));
    if (real_u != positive_u)
      throw domain_error("unexpected real-image node with conjugate parameters (axis)");
    axis_real = positive_u;
    axis_nonreal = axis_total - real_u;
  }

  // ---- off-axis family in (e, p) ------------------------------------------
  BiPoly A = detail::symmetric_reduce(detail::divided_difference(param.xnum, param.den));
  BiPoly B = detail::symmetric_reduce(detail::divided_difference(param.ynum, param.den));
  // x is even, so the whole anti-diagonal e = 0 lies in {A = 0}: strip it.
  BiPoly A0 = detail::strip_var_powers(A, 0);

  UniPoly r = primitive_part(resultant_in(A0, B, 1));
  if (r.is_zero()) throw domain_error("node elimination degenerated (common factor)");
  UniPoly cusp_e = primitive_part(
      compose(cusps.parameter_poly, UniPoly("e", {Rat(0), rat(1, 2)})));
  divide_out_powers(r, cusp_e);
  // parameter pairs involving t = +-i are not affine points: the pair (i,-i)
  // sits at e = 0, the diagonals (+-i,+-i) at e^2 = -4
  divide_out_powers(r, UniPoly::variable("e"));
  divide_out_powers(r, UniPoly("e", {Rat(4), Rat(0), Rat(1)}));
  r = primitive_part(r);

  int off_total = 0, off_real = 0, off_nonreal = 0;
  if (r.degree() > 0) {
    UniPoly sf = squarefree_part(r);
    if (sf.degree() != r.degree())
      throw domain_error("off-axis node polynomial has multiple roots: " + to_string(r));
    off_total = r.degree();
    auto [u, v] = detail::linear_subresultant_in_p(A0, B);
    UniPoly e2 = UniPoly("e", {Rat(0), Rat(0), Rat(1)});
    UniPoly wcond = u * (e2 * u + Rat(4) * v);
    if (gcd(r, u).degree() > 0)
      throw domain_error("node elimination: leading subresultant vanishes at a node");
    int real_e = sturm_count(r);
    int with_positive = count_roots_with_positive(r, wcond);
    if (with_positive != real_e)
      throw domain_error("unexpected real-image node with conjugate parameters");
    off_real = real_e;
    off_nonreal = off_total - real_e;
  }

  NodeData out;
  out.total = axis_total + off_total;
  out.real_pairs = axis_real + off_real;
  out.nonreal = axis_nonreal + off_nonreal;
  out.elim_poly = r * pow(UniPoly::variable("e"), axis_total);
  if (out.total != expected_total)
    throw domain_error("node total " + std::to_string(out.total) + " != closed form " +
                       std::to_string(expected_total) + " (axis " + std::to_string(axis_total) +
                       " + off " + std::to_string(off_total) + ")");
  if (out.real_pairs != expected_real || out.nonreal != expected_nonreal)
    throw domain_error("node reality split " + std::to_string(out.real_pairs) + "/" +
                       std::to_string(out.nonreal) + " disagrees with closed form " +
                       std::to_string(expected_real) + "/" + std::to_string(expected_nonreal));
  return out;
}

inline InfinityType infinity_type(const CurveSpec& spec) {
  spec.validate();
  return {spec.k, spec.k - spec.l};
}

// (2k-1)(2k-2)/2 - (k-2)N - N - (k-l-1)(k-1); zero certifies the census is
// complete for a rational curve of degree 2k.
inline int genus_check(const CurveSpec& spec) {
  spec.validate();
  const int k = spec.k, N = spec.N();
  return (2 * k - 1) * (2 * k - 2) / 2 - (k - 2) * N - N - (spec.k - spec.l - 1) * (k - 1);
}

// The fixed circle meets the curve exactly at the cusps (each with local
// intersection number two) plus the points at infinity; certified by exact
// divisibility of the circle-meeting numerator by kappa^2.
inline void certify_circle_meeting(const RationalParam& param, const CuspData& cusps) {
  UniPoly m = circle_meeting(param);
  UniPoly q = exact_divide(m, cusps.parameter_poly * cusps.parameter_poly);
  UniPoly circle("t", {Rat(1), Rat(0), Rat(1)});
  divide_out_powers(q, circle);
  if (q.degree() != 0)
    throw domain_error("circle meeting certificate failed: leftover " + to_string(q));
}

inline SingularityCensus full_census(const CurveSpec& spec, int k_bound = 6) {
  spec.validate();
  if (spec.k > k_bound)
    throw domain_error("census bound exceeded: k = " + std::to_string(spec.k) + " > bound " +
                       std::to_string(k_bound) +
                       "; raise the bound to run the exact node elimination");
  RationalParam param = build_param(spec);
  CuspData cusps = cusp_parameters(param);
  certify_circle_meeting(param, cusps);
  NodeData nodes = node_parameters(param);
  SingularityCensus c;
  c.degree = 2 * spec.k;
  c.cusps = cusps.count;
  c.nodes_real = nodes.real_pairs;
  c.nodes_nonreal = nodes.nonreal;
  c.infinity = infinity_type(spec);
  c.alpha = genus_check(spec);
  if (c.alpha != 0) throw domain_error("genus defect nonzero");
  if (c.cusps != spec.N()) throw domain_error("census cusp mismatch");
  return c;
}

}  // namespace hypo
