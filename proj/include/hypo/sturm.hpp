#pragma once

// Sturm sequences: exact real-root counting, isolation into rational
// intervals, and Tarski sign queries.

#include <hypo/unipoly.hpp>

#include <optional>
#include <vector>

namespace hypo {

struct Interval {
  Rat lower, upper;  // lower <= upper; degenerate means an exact rational root
  bool contains(const Rat& x) const { return lower <= x && x <= upper; }
  Rat width() const { return upper - lower; }
  Rat mid() const { return midpoint(lower, upper); }
};

namespace detail {

inline std::vector<UniPoly> sturm_chain(const UniPoly& f) {
  std::vector<UniPoly> chain;
  chain.push_back(f);
  chain.push_back(derivative(f));
  while (!chain.back().is_zero()) {
    auto [q, r] = divmod(chain[chain.size() - 2], chain.back());
    (void)q;
    chain.push_back(-r);
  }
  chain.pop_back();
  return chain;
}

inline int sign_variations(const std::vector<int>& signs) {
  int v = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

inline int variations_at(const std::vector<UniPoly>& chain, const Rat& x) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& p : chain) signs.push_back(sign(eval(p, x)));
  return sign_variations(signs);
}

inline int variations_at_infinity(const std::vector<UniPoly>& chain, int dir) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& p : chain) {
    int s = sign(p.lc());
    if (dir < 0 && p.degree() % 2 == 1) s = -s;
    signs.push_back(s);
  }
  return sign_variations(signs);
}

}  // namespace detail

// Distinct real roots of f in the half-open interval (lo, hi].
inline int sturm_count(const UniPoly& f, const Rat& lo, const Rat& hi) {
  if (f.is_zero()) throw domain_error("sturm_count of zero polynomial");
  UniPoly g = squarefree_part(f);
  if (g.degree() <= 0) return 0;
  auto chain = detail::sturm_chain(g);
  return detail::variations_at(chain, lo) - detail::variations_at(chain, hi);
}

inline int sturm_count(const UniPoly& f, const Interval& range) {
  return sturm_count(f, range.lower, range.upper);
}

// Distinct real roots on the whole line.
inline int sturm_count(const UniPoly& f) {
  if (f.is_zero()) throw domain_error("sturm_count of zero polynomial");
  UniPoly g = squarefree_part(f);
  if (g.degree() <= 0) return 0;
  auto chain = detail::sturm_chain(g);
  return detail::variations_at_infinity(chain, -1) - detail::variations_at_infinity(chain, +1);
}

// Shrinks an isolating interval of f below the given width by bisection.
inline Interval refine_root(const UniPoly& f, Interval iv, const Rat& width) {
  UniPoly g = squarefree_part(f);
  int slo = sign(eval(g, iv.lower));
  if (slo == 0) return {iv.lower, iv.lower};
  while (iv.width() > width) {
    Rat m = iv.mid();
    int sm = sign(eval(g, m));
    if (sm == 0) return {m, m};
    if (sm == slo) iv.lower = m;
    else iv.upper = m;
  }
  return iv;
}

// Isolating intervals for all distinct real roots, sorted ascending.  Each
// interval contains exactly one root of the squarefree part; endpoints are
// rational non-roots (or a degenerate [r,r] for an exact rational root).
inline std::vector<Interval> isolate_real_roots(const UniPoly& f) {
  std::vector<Interval> out;
  if (f.is_zero()) throw domain_error("isolate_real_roots of zero polynomial");
  UniPoly g = squarefree_part(f);
  if (g.degree() <= 0) return out;
  auto chain = detail::sturm_chain(g);
  Rat bound = root_bound(g);

  struct Seg {
    Rat lo, hi;
    int vlo, vhi;
  };
  std::vector<Seg> stack;
  stack.push_back({-bound, bound, detail::variations_at(chain, -bound),
                   detail::variations_at(chain, bound)});
  while (!stack.empty()) {
    Seg s = stack.back();
    stack.pop_back();
    int n = s.vlo - s.vhi;
    if (n <= 0) continue;
    if (n == 1) {
      out.push_back({s.lo, s.hi});
      continue;
    }
    Rat m = midpoint(s.lo, s.hi);
    while (sign(eval(g, m)) == 0) m = midpoint(s.lo, m);  // nudge off a root
    int vm = detail::variations_at(chain, m);
    stack.push_back({s.lo, m, s.vlo, vm});
    stack.push_back({m, s.hi, vm, s.vhi});
  }
  std::sort(out.begin(), out.end(),
            [](const Interval& a, const Interval& b) { return a.lower < b.lower; });
  // Make the intervals pairwise disjoint (bisection can leave shared
  // endpoints, which are never roots).
  for (size_t i = 0; i + 1 < out.size(); ++i)
    while (out[i].upper >= out[i + 1].lower) {
      out[i] = refine_root(g, out[i], out[i].width() / 2);
      out[i + 1] = refine_root(g, out[i + 1], out[i + 1].width() / 2);
    }
  return out;
}

// Tarski query: sum over real roots x of f (distinct, via squarefree part) of
// sign(q(x)).  Computed from the sign-variation difference of the generalized
// Sturm chain of (f, f'.q).
inline int tarski_query(const UniPoly& f, const UniPoly& q) {
  UniPoly g = squarefree_part(f);
  if (g.degree() <= 0) return 0;
  std::vector<UniPoly> chain;
  chain.push_back(g);
  chain.push_back(derivative(g) * q);
  while (!chain.back().is_zero()) {
    auto [quo, r] = divmod(chain[chain.size() - 2], chain.back());
    (void)quo;
    chain.push_back(-r);
  }
  chain.pop_back();
  return detail::variations_at_infinity(chain, -1) - detail::variations_at_infinity(chain, +1);
}

// Number of distinct real roots of f where q > 0 (q must not vanish at any
// real root of f).
inline int count_roots_with_positive(const UniPoly& f, const UniPoly& q) {
  int total = sturm_count(f);
  int ta = tarski_query(f, q);
  if ((total + ta) % 2 != 0) throw domain_error("tarski query parity mismatch (q vanishes at a root?)");
  return (total + ta) / 2;
}

}  // namespace hypo
