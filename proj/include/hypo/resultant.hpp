#pragma once

// Resultants and discriminants via fraction-free (Bareiss) elimination on the
// Sylvester matrix, plus a primitive-PRS bivariate gcd.

#include <hypo/bipoly.hpp>

#include <vector>

namespace hypo {

// Resultant of two univariate rational polynomials (Euclidean form).
inline Rat resultant(const UniPoly& f0, const UniPoly& g0) {
  if (f0.is_zero() || g0.is_zero()) return Rat(0);
  UniPoly f = f0, g = g0;
  Rat res(1);
  bool neg = false;
  while (g.degree() > 0) {
    auto [q, r] = divmod(f, g);
    (void)q;
    if (r.is_zero()) return Rat(0);
    res *= pow_rat(g.lc(), f.degree() - r.degree());
    if ((f.degree() % 2) && (g.degree() % 2)) neg = !neg;
    f = std::move(g);
    g = std::move(r);
  }
  if (f.degree() > 0) res *= pow_rat(g.lc(), f.degree());
  return neg ? -res : res;
}

// Fraction-free determinant over a polynomial ring; every division is exact.
// R must provide *, binary -, unary -, is_zero(), and exact_divide.
template <class R>
R bareiss_determinant(std::vector<std::vector<R>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) throw domain_error("empty determinant");
  bool neg = false;
  R prev;
  for (int k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (!m[i][k].is_zero()) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return m[0][0] - m[0][0];
      std::swap(m[k], m[swap_row]);
      neg = !neg;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        R num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = k == 0 ? std::move(num) : exact_divide(num, prev);
      }
    prev = m[k][k];
  }
  return neg ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

// Sylvester matrix of two coefficient sequences (index = exponent of the
// eliminated variable), entries in any coefficient ring R.
template <class R>
std::vector<std::vector<R>> sylvester_matrix(const std::vector<R>& f, const std::vector<R>& g,
                                             const R& zero) {
  const int m = static_cast<int>(f.size()) - 1;
  const int n = static_cast<int>(g.size()) - 1;
  if (m < 0 || n < 0) throw domain_error("sylvester matrix of zero polynomial");
  const int size = m + n;
  std::vector<std::vector<R>> mat(size, std::vector<R>(size, zero));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) mat[i][i + j] = f[m - j];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) mat[n + i][i + j] = g[n - j];
  return mat;
}

// Resultant eliminating one variable of a bivariate pair; the result is a
// univariate polynomial in the surviving variable.
inline UniPoly resultant_in(const BiPoly& f, const BiPoly& g, int var) {
  if (f.is_zero() || g.is_zero()) throw domain_error("resultant of zero polynomial");
  int df = f.degree(var), dg = g.degree(var);
  if (df < 1 && dg < 1)
    throw domain_error("degenerate elimination: neither input involves " + f.vars[var]);
  if (df < 1) return pow(coefficients_in(f, var)[0], static_cast<unsigned>(dg));
  if (dg < 1) return pow(coefficients_in(g, var)[0], static_cast<unsigned>(df));
  auto fc = coefficients_in(f, var);
  auto gc = coefficients_in(g, var);
  UniPoly zero(f.vars[1 - var]);
  return bareiss_determinant(sylvester_matrix(fc, gc, zero));
}

// Resultant of two polynomials in an eliminated variable whose coefficients
// are bivariate (used for implicitization: one input in Q[x][t], the other in
// Q[y][t]; entries mix during elimination).
inline BiPoly resultant_coeff_lists(const std::vector<BiPoly>& fc, const std::vector<BiPoly>& gc) {
  if (fc.empty() || gc.empty()) throw domain_error("resultant of zero polynomial");
  if (fc.size() < 2 && gc.size() < 2)
    throw domain_error("degenerate elimination: neither input involves the variable");
  if (fc.size() < 2) return pow(fc[0], static_cast<unsigned>(gc.size() - 1));
  if (gc.size() < 2) return pow(gc[0], static_cast<unsigned>(fc.size() - 1));
  BiPoly zero(fc[0].vars[0], fc[0].vars[1]);
  return bareiss_determinant(sylvester_matrix(fc, gc, zero));
}

// Discriminant with respect to one variable: res(f, df/dvar) / lc_var(f).
inline UniPoly discriminant(const BiPoly& f, int var) {
  if (f.degree(var) < 2) throw domain_error("discriminant needs degree >= 2 in the variable");
  UniPoly r = resultant_in(f, derivative(f, var), var);
  UniPoly lc = coefficients_in(f, var).back();
  return exact_divide(r, lc);
}

// ---- bivariate gcd (primitive PRS) ---------------------------------------

inline UniPoly content_in(const BiPoly& f, int main) {
  auto coeffs = coefficients_in(f, main);
  UniPoly g(f.vars[1 - main]);
  for (const auto& c : coeffs) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

inline BiPoly divide_content(const BiPoly& f, const UniPoly& content, int main) {
  auto coeffs = coefficients_in(f, main);
  for (auto& c : coeffs)
    if (!c.is_zero()) c = exact_divide(c, content);
  return from_coefficients(coeffs, main, f.vars[main], f.vars[1 - main]);
}

// Pseudo-remainder of f by g in the main variable.
inline BiPoly pseudo_rem(const BiPoly& f, const BiPoly& g, int main) {
  int df = f.degree(main), dg = g.degree(main);
  if (dg < 0) throw domain_error("pseudo division by zero");
  if (df < dg) return f;
  BiPoly glc = lift(coefficients_in(g, main).back(), 1 - main, f.vars[main]);
  BiPoly r = f;
  int steps = df - dg + 1;
  for (int s = 0; s < steps && !r.is_zero() && r.degree(main) >= dg; ++s) {
    int dr = r.degree(main);
    BiPoly rlc = lift(coefficients_in(r, main).back(), 1 - main, f.vars[main]);
    BiPoly shift = BiPoly::monomial(Rat(1), main == 0 ? dr - dg : 0, main == 0 ? 0 : dr - dg,
                                    f.vars[0], f.vars[1]);
    r = glc * r - rlc * shift * g;
  }
  return r;
}

// Gcd of two bivariate polynomials (primitive PRS on the main variable, then
// content gcd), normalized primitive with positive leading coefficient.
inline BiPoly gcd_in(const BiPoly& f0, const BiPoly& g0, int main) {
  if (f0.is_zero()) return canonical(g0);
  if (g0.is_zero()) return canonical(f0);
  UniPoly cf = content_in(f0, main), cg = content_in(g0, main);
  UniPoly cont = gcd(cf, cg);
  BiPoly f = divide_content(f0, cf, main), g = divide_content(g0, cg, main);
  if (f.degree(main) < g.degree(main)) std::swap(f, g);
  while (!g.is_zero() && g.degree(main) > 0) {
    BiPoly r = pseudo_rem(f, g, main);
    if (!r.is_zero()) {
      UniPoly cr = content_in(r, main);
      r = divide_content(r, cr, main);
    }
    f = std::move(g);
    g = std::move(r);
  }
  BiPoly result = g.is_zero() ? f : BiPoly::constant(Rat(1), f0.vars[0], f0.vars[1]);
  BiPoly lifted_cont = lift(cont, 1 - main, f0.vars[main]);
  return canonical(result * lifted_cont);
}

// Squarefree part (Musser along the main variable; pure content factors are
// made squarefree separately so they are kept, not dropped).
inline BiPoly squarefree_part(const BiPoly& f) {
  if (f.is_zero()) return f;
  int main = f.degree(1) > 0 ? 1 : 0;
  if (f.degree(main) == 0) {
    UniPoly u = coefficients_in(f, main)[0];
    return canonical(lift(squarefree_part(u), 1 - main, f.vars[main]));
  }
  UniPoly cont = content_in(f, main);
  BiPoly pp = divide_content(f, cont, main);
  BiPoly g = gcd_in(pp, derivative(pp, main), main);
  BiPoly sf = g.total_degree() == 0 ? pp : exact_divide(pp, g);
  BiPoly cl = lift(squarefree_part(cont), 1 - main, f.vars[main]);
  return canonical(sf * cl);
}

}  // namespace hypo
