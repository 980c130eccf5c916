#pragma once

// Sparse bivariate polynomials over the rationals.  Hypocycloid implicit
// equations are sparse in mixed monomials, so a map representation wins over
// a dense grid.

#include <hypo/unipoly.hpp>

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hypo {

struct BiPoly {
  std::array<std::string, 2> vars{"x", "y"};
  std::map<std::pair<int, int>, Rat> terms;  // (e0, e1) -> coefficient, no zeros

  BiPoly() = default;
  BiPoly(std::string v0, std::string v1) : vars{std::move(v0), std::move(v1)} {}

  static BiPoly constant(const Rat& v, std::string v0 = "x", std::string v1 = "y") {
    BiPoly p(std::move(v0), std::move(v1));
    if (sign(v) != 0) p.terms[{0, 0}] = v;
    return p;
  }
  static BiPoly monomial(const Rat& coeff, int e0, int e1, std::string v0 = "x",
                         std::string v1 = "y") {
    BiPoly p(std::move(v0), std::move(v1));
    if (sign(coeff) != 0) p.terms[{e0, e1}] = coeff;
    return p;
  }

  bool is_zero() const { return terms.empty(); }

  void add_term(int e0, int e1, const Rat& coeff) {
    if (sign(coeff) == 0) return;
    auto key = std::make_pair(e0, e1);
    auto it = terms.find(key);
    if (it == terms.end()) terms.emplace(key, coeff);
    else {
      it->second += coeff;
      if (sign(it->second) == 0) terms.erase(it);
    }
  }

  int degree(int which) const {
    int d = -1;
    for (const auto& [e, c] : terms) d = std::max(d, which == 0 ? e.first : e.second);
    return d;
  }
  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms) d = std::max(d, e.first + e.second);
    return d;
  }

  // Leading term under graded lex with vars[0] < vars[1].
  std::pair<std::pair<int, int>, Rat> leading_term() const {
    if (terms.empty()) throw domain_error("leading term of zero polynomial");
    auto best = terms.begin();
    for (auto it = std::next(terms.begin()); it != terms.end(); ++it) {
      auto [a, b] = it->first;
      auto [c, d] = best->first;
      if (a + b > c + d || (a + b == c + d && (b > d || (b == d && a > c)))) best = it;
    }
    return {best->first, best->second};
  }

  bool operator==(const BiPoly& o) const { return terms == o.terms; }
};

inline BiPoly operator-(const BiPoly& a) {
  BiPoly r = a;
  for (auto& [e, c] : r.terms) c = -c;
  return r;
}

inline BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  BiPoly r = a;
  for (const auto& [e, c] : b.terms) r.add_term(e.first, e.second, c);
  return r;
}
inline BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }

inline BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r(a.vars[0], a.vars[1]);
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms)
      r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
  return r;
}

inline BiPoly operator*(const BiPoly& a, const Rat& s) {
  BiPoly r(a.vars[0], a.vars[1]);
  if (sign(s) == 0) return r;
  r = a;
  for (auto& [e, c] : r.terms) c *= s;
  return r;
}
inline BiPoly operator*(const Rat& s, const BiPoly& a) { return a * s; }
inline BiPoly operator/(const BiPoly& a, const Rat& s) {
  if (sign(s) == 0) throw domain_error("division by zero scalar");
  return a * (Rat(1) / s);
}

inline BiPoly pow(const BiPoly& a, unsigned e) {
  BiPoly r = BiPoly::constant(Rat(1), a.vars[0], a.vars[1]);
  BiPoly b = a;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

inline BiPoly derivative(const BiPoly& a, int which) {
  BiPoly r(a.vars[0], a.vars[1]);
  for (const auto& [e, c] : a.terms) {
    int ev = which == 0 ? e.first : e.second;
    if (ev == 0) continue;
    if (which == 0) r.add_term(e.first - 1, e.second, c * Rat(ev));
    else r.add_term(e.first, e.second - 1, c * Rat(ev));
  }
  return r;
}

// Coefficients of powers of vars[main] as univariate polynomials in the other
// variable; index = exponent of the main variable.
inline std::vector<UniPoly> coefficients_in(const BiPoly& a, int main) {
  int d = a.degree(main);
  std::vector<UniPoly> out(std::max(d + 1, 0), UniPoly(a.vars[1 - main]));
  for (const auto& [e, c] : a.terms) {
    int em = main == 0 ? e.first : e.second;
    int eo = main == 0 ? e.second : e.first;
    if (eo >= static_cast<int>(out[em].c.size())) out[em].c.resize(eo + 1, Rat(0));
    out[em].c[eo] = c;
  }
  for (auto& p : out) p.trim();
  return out;
}

inline BiPoly from_coefficients(const std::vector<UniPoly>& coeffs, int main,
                                const std::string& vmain, const std::string& vother) {
  BiPoly r = main == 0 ? BiPoly(vmain, vother) : BiPoly(vother, vmain);
  for (size_t em = 0; em < coeffs.size(); ++em)
    for (size_t eo = 0; eo < coeffs[em].c.size(); ++eo) {
      if (main == 0) r.add_term(static_cast<int>(em), static_cast<int>(eo), coeffs[em].c[eo]);
      else r.add_term(static_cast<int>(eo), static_cast<int>(em), coeffs[em].c[eo]);
    }
  return r;
}

inline BiPoly lift(const UniPoly& p, int which, const std::string& vother) {
  BiPoly r = which == 0 ? BiPoly(p.var, vother) : BiPoly(vother, p.var);
  for (size_t i = 0; i < p.c.size(); ++i) {
    if (sign(p.c[i]) == 0) continue;
    if (which == 0) r.add_term(static_cast<int>(i), 0, p.c[i]);
    else r.add_term(0, static_cast<int>(i), p.c[i]);
  }
  return r;
}

// Substitute a rational for one variable.
inline UniPoly eval_at(const BiPoly& a, int which, const Rat& v) {
  UniPoly r(a.vars[1 - which]);
  for (const auto& [e, c] : a.terms) {
    int ev = which == 0 ? e.first : e.second;
    int eo = which == 0 ? e.second : e.first;
    Rat t = c * pow_rat(v, ev);
    if (eo >= static_cast<int>(r.c.size())) r.c.resize(eo + 1, Rat(0));
    r.c[eo] += t;
  }
  r.trim();
  return r;
}

inline Rat eval_at(const BiPoly& a, const Rat& x, const Rat& y) {
  Rat acc(0);
  for (const auto& [e, c] : a.terms) acc += c * pow_rat(x, e.first) * pow_rat(y, e.second);
  return acc;
}

// Substitute arbitrary bivariate polynomials for both variables.
inline BiPoly substitute(const BiPoly& a, const BiPoly& for0, const BiPoly& for1) {
  BiPoly acc(for0.vars[0], for0.vars[1]);
  int d0 = a.degree(0);
  // Horner in var0 whose "coefficients" are polynomials in var1.
  auto coeffs = coefficients_in(a, 0);
  for (int i = d0; i >= 0; --i) {
    BiPoly layer(for0.vars[0], for0.vars[1]);
    const UniPoly& ci = i < static_cast<int>(coeffs.size()) ? coeffs[i] : UniPoly();
    BiPoly acc1(for0.vars[0], for0.vars[1]);
    for (int j = ci.degree(); j >= 0; --j)
      acc1 = acc1 * for1 + BiPoly::constant(ci.coeff(j), for0.vars[0], for0.vars[1]);
    acc = acc * for0 + acc1;
  }
  return acc;
}

inline bool even_in(const BiPoly& a, int which) {
  for (const auto& [e, c] : a.terms)
    if ((which == 0 ? e.first : e.second) % 2 != 0) return false;
  return true;
}

// Substitute var^2 -> var; requires evenness in that variable.
inline BiPoly halve_exponents(const BiPoly& a, int which) {
  if (!even_in(a, which))
    throw domain_error("polynomial has odd exponents in " + a.vars[which]);
  BiPoly r(a.vars[0], a.vars[1]);
  for (const auto& [e, c] : a.terms) {
    if (which == 0) r.add_term(e.first / 2, e.second, c);
    else r.add_term(e.first, e.second / 2, c);
  }
  return r;
}

inline Rat rational_content(const BiPoly& a) {
  if (a.is_zero()) return Rat(0);
  Int num_gcd(0), den_lcm(1);
  for (const auto& [e, c] : a.terms) {
    num_gcd = gcd(num_gcd, Int(c.get_num()));
    den_lcm = lcm(den_lcm, Int(c.get_den()));
  }
  Rat content(num_gcd, den_lcm);
  content.canonicalize();
  if (sign(a.leading_term().second) < 0) content = -content;
  return content;
}

// Canonical form: primitive integer coefficients, positive leading coefficient
// under graded lex.  "Equal up to positive scalar" becomes plain equality.
inline BiPoly canonical(const BiPoly& a) {
  if (a.is_zero()) return a;
  return a / rational_content(a);
}

// Leading-term exact division; throws if not exactly divisible.
inline BiPoly exact_divide(const BiPoly& a, const BiPoly& b) {
  if (b.is_zero()) throw domain_error("division by zero polynomial");
  BiPoly rem = a, quot(a.vars[0], a.vars[1]);
  auto [eb, cb] = b.leading_term();
  while (!rem.is_zero()) {
    auto [ea, ca] = rem.leading_term();
    if (ea.first < eb.first || ea.second < eb.second)
      throw domain_error("inexact bivariate division");
    std::pair<int, int> eq{ea.first - eb.first, ea.second - eb.second};
    Rat cq = ca / cb;
    quot.add_term(eq.first, eq.second, cq);
    BiPoly t = BiPoly::monomial(cq, eq.first, eq.second, a.vars[0], a.vars[1]);
    rem = rem - t * b;
  }
  return quot;
}

inline std::optional<BiPoly> try_exact_divide(const BiPoly& a, const BiPoly& b) {
  try {
    return exact_divide(a, b);
  } catch (const domain_error&) {
    return std::nullopt;
  }
}

inline BiPoly swap_vars(const BiPoly& a) {
  BiPoly r(a.vars[1], a.vars[0]);
  for (const auto& [e, c] : a.terms) r.add_term(e.second, e.first, c);
  return r;
}

inline std::string to_string(const BiPoly& a) {
  if (a.is_zero()) return "0";
  std::string s;
  for (auto it = a.terms.rbegin(); it != a.terms.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!s.empty()) s += sign(c) > 0 ? " + " : " - ";
    else if (sign(c) < 0) s += "-";
    Rat v = abs(c);
    bool unit = (v == 1) && (e.first > 0 || e.second > 0);
    if (!unit) s += rat_to_string(v);
    auto app = [&](const std::string& var, int exp) {
      if (exp == 0) return;
      if (s.back() != '-' && !s.empty() && s.back() != ' ' ) s += "*";
      s += var;
      if (exp > 1) s += "^" + std::to_string(exp);
    };
    app(a.vars[0], e.first);
    app(a.vars[1], e.second);
  }
  return s;
}

}  // namespace hypo
