#pragma once

// Dense univariate polynomials over the exact rationals.

#include <hypo/rational.hpp>

#include <algorithm>
#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace hypo {

struct UniPoly {
  std::string var = "x";
  std::vector<Rat> c;  // c[i] multiplies var^i; no trailing zero entries

  UniPoly() = default;
  explicit UniPoly(std::string v) : var(std::move(v)) {}
  UniPoly(std::string v, std::vector<Rat> coeffs) : var(std::move(v)), c(std::move(coeffs)) {
    trim();
  }

  static UniPoly constant(const Rat& value, std::string v = "x") {
    UniPoly p(std::move(v));
    if (sign(value) != 0) p.c = {value};
    return p;
  }
  static UniPoly variable(std::string v = "x") {
    UniPoly p(std::move(v));
    p.c = {Rat(0), Rat(1)};
    return p;
  }
  static UniPoly monomial(const Rat& coeff, int deg, std::string v = "x") {
    UniPoly p(std::move(v));
    if (sign(coeff) != 0) {
      p.c.assign(deg + 1, Rat(0));
      p.c[deg] = coeff;
    }
    return p;
  }

  void trim() {
    while (!c.empty() && sign(c.back()) == 0) c.pop_back();
  }

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_constant() const { return c.size() <= 1; }

  const Rat& lc() const {
    static const Rat zero(0);
    return c.empty() ? zero : c.back();
  }
  Rat coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c.size())) return Rat(0);
    return c[i];
  }

  bool operator==(const UniPoly& o) const { return c == o.c; }
};

namespace detail {
inline std::string join_var(const UniPoly& a, const UniPoly& b) {
  if (a.is_constant()) return b.var;
  if (b.is_constant()) return a.var;
  if (a.var != b.var) throw domain_error("variable mismatch: " + a.var + " vs " + b.var);
  return a.var;
}
}  // namespace detail

inline UniPoly operator-(const UniPoly& a) {
  UniPoly r = a;
  for (auto& x : r.c) x = -x;
  return r;
}

inline UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  UniPoly r(detail::join_var(a, b));
  r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
  r.trim();
  return r;
}

inline UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

inline UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  UniPoly r(detail::join_var(a, b));
  if (a.is_zero() || b.is_zero()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (sign(a.c[i]) == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  }
  r.trim();
  return r;
}

inline UniPoly operator*(const UniPoly& a, const Rat& s) {
  UniPoly r = a;
  if (sign(s) == 0) return UniPoly(a.var);
  for (auto& x : r.c) x *= s;
  return r;
}
inline UniPoly operator*(const Rat& s, const UniPoly& a) { return a * s; }
inline UniPoly operator/(const UniPoly& a, const Rat& s) {
  if (sign(s) == 0) throw domain_error("division by zero scalar");
  return a * (Rat(1) / s);
}

inline UniPoly derivative(const UniPoly& a) {
  UniPoly r(a.var);
  if (a.c.size() <= 1) return r;
  r.c.resize(a.c.size() - 1);
  for (size_t i = 1; i < a.c.size(); ++i) r.c[i - 1] = a.c[i] * Rat(static_cast<long>(i));
  r.trim();
  return r;
}

inline Rat eval(const UniPoly& a, const Rat& x) {
  Rat acc(0);
  for (auto it = a.c.rbegin(); it != a.c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

inline double eval_double(const UniPoly& a, double x) {
  double acc = 0;
  for (auto it = a.c.rbegin(); it != a.c.rend(); ++it) acc = acc * x + to_double(*it);
  return acc;
}

inline std::complex<double> eval_complex(const UniPoly& a, std::complex<double> x) {
  std::complex<double> acc = 0;
  for (auto it = a.c.rbegin(); it != a.c.rend(); ++it) acc = acc * x + to_double(*it);
  return acc;
}

// Quotient and remainder over the rationals; b must be nonzero.
inline std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw domain_error("polynomial division by zero");
  std::string v = detail::join_var(a, b);
  UniPoly q(v), r = a;
  r.var = v;
  int db = b.degree();
  if (r.degree() >= db) q.c.assign(r.degree() - db + 1, Rat(0));
  while (!r.is_zero() && r.degree() >= db) {
    int shift = r.degree() - db;
    Rat f = r.lc() / b.lc();
    q.c[shift] += f;
    for (int i = 0; i <= db; ++i) r.c[shift + i] -= f * b.c[i];
    r.trim();
  }
  q.trim();
  return {q, r};
}

inline UniPoly exact_divide(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw domain_error("inexact polynomial division");
  return q;
}

inline UniPoly pow(const UniPoly& a, unsigned e) {
  UniPoly r = UniPoly::constant(Rat(1), a.var);
  UniPoly b = a;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

// a(b(x)).
inline UniPoly compose(const UniPoly& a, const UniPoly& b) {
  UniPoly acc(b.var);
  for (auto it = a.c.rbegin(); it != a.c.rend(); ++it)
    acc = acc * b + UniPoly::constant(*it, b.var);
  return acc;
}

// Monic gcd; gcd(0,0) = 0.
inline UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly f = a, g = b;
  g.var = f.var = detail::join_var(a, b);
  while (!g.is_zero()) {
    auto [q, r] = divmod(f, g);
    (void)q;
    f = std::move(g);
    g = std::move(r);
  }
  if (!f.is_zero()) f = f / f.lc();
  return f;
}

inline UniPoly squarefree_part(const UniPoly& a) {
  if (a.is_zero()) return a;
  if (a.degree() == 0) return UniPoly::constant(Rat(1), a.var);
  UniPoly g = gcd(a, derivative(a));
  UniPoly s = exact_divide(a, g);
  return s / s.lc();
}

// Yun decomposition: returns q such that a = lc * prod q[i]^(i+1), q[i] squarefree
// and pairwise coprime (entries may be constant 1).
inline std::vector<UniPoly> squarefree_decomposition(const UniPoly& a) {
  std::vector<UniPoly> out;
  if (a.degree() <= 0) return out;
  UniPoly f = a / a.lc();
  UniPoly fp = derivative(f);
  UniPoly g = gcd(f, fp);
  if (g.degree() == 0) {
    out.push_back(f);
    return out;
  }
  UniPoly w = exact_divide(f, g);
  UniPoly y = exact_divide(fp, g);
  UniPoly z = y - derivative(w);
  while (!z.is_zero()) {
    UniPoly h = gcd(w, z);
    out.push_back(h / h.lc());
    w = exact_divide(w, h);
    y = exact_divide(z, h);
    z = y - derivative(w);
  }
  out.push_back(w / w.lc());
  return out;
}

// Integer content (as a positive rational) and the primitive integer part with
// positive leading coefficient.
inline Rat rational_content(const UniPoly& a) {
  if (a.is_zero()) return Rat(0);
  Int num_gcd(0), den_lcm(1);
  for (const auto& q : a.c) {
    if (sign(q) == 0) continue;
    num_gcd = gcd(num_gcd, Int(q.get_num()));
    den_lcm = lcm(den_lcm, Int(q.get_den()));
  }
  Rat content(num_gcd, den_lcm);
  content.canonicalize();
  if (sign(a.lc()) < 0) content = -content;
  return content;
}

inline UniPoly primitive_part(const UniPoly& a) {
  if (a.is_zero()) return a;
  return a / rational_content(a);
}

// Cauchy bound: all real roots lie in (-B, B).
inline Rat root_bound(const UniPoly& a) {
  if (a.degree() <= 0) return Rat(1);
  Rat m(0);
  for (int i = 0; i < a.degree(); ++i) {
    Rat q = abs(a.c[i] / a.lc());
    if (q > m) m = q;
  }
  return m + 1;
}

// Coefficient reversal into the u = 1/x chart, padded to the given degree.
inline UniPoly reverse_to_degree(const UniPoly& a, int deg, const std::string& var) {
  if (a.degree() > deg) throw domain_error("reverse_to_degree: degree too small");
  UniPoly r(var);
  r.c.assign(deg + 1, Rat(0));
  for (int i = 0; i <= a.degree(); ++i) r.c[deg - i] = a.coeff(i);
  r.trim();
  return r;
}

// Divides out every factor of g; returns the multiplicity removed.
inline int divide_out_powers(UniPoly& f, const UniPoly& g) {
  int count = 0;
  while (f.degree() >= g.degree() && !f.is_zero()) {
    auto [q, r] = divmod(f, g);
    if (!r.is_zero()) break;
    f = std::move(q);
    ++count;
  }
  return count;
}

// x^2 -> x on an even polynomial.
inline UniPoly halve_exponents(const UniPoly& a, const std::string& var) {
  UniPoly r(var);
  r.c.assign(a.degree() / 2 + 1, Rat(0));
  for (int i = 0; i <= a.degree(); ++i) {
    if (sign(a.coeff(i)) == 0) continue;
    if (i % 2 != 0) throw domain_error("halve_exponents: odd exponent present");
    r.c[i / 2] = a.coeff(i);
  }
  r.trim();
  return r;
}

inline std::string to_string(const UniPoly& a) {
  if (a.is_zero()) return "0";
  std::string s;
  for (int i = a.degree(); i >= 0; --i) {
    if (sign(a.c[i]) == 0) continue;
    if (!s.empty()) s += sign(a.c[i]) > 0 ? " + " : " - ";
    else if (sign(a.c[i]) < 0) s += "-";
    Rat v = abs(a.c[i]);
    bool unit = (v == 1) && i > 0;
    if (!unit) s += rat_to_string(v);
    if (i > 0) {
      if (!unit) s += "*";
      s += a.var;
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

}  // namespace hypo
