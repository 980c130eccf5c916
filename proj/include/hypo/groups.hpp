#pragma once

// Finitely presented group computations: Artin-graph presentations,
// Reidemeister-Schreier kernels of maps onto finite abelian groups, Tietze
// simplification, abelianization via Smith normal form, low-index subgroup
// enumeration, and Artin-graph recognition.

#include <hypo/braid.hpp>

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace hypo {

struct ArtinGraph {
  std::vector<std::string> vertices;
  std::set<std::pair<int, int>> edges;  // 0-based, first < second

  void add_edge(int a, int b) {
    if (a == b) throw domain_error("artin graph forbids loops");
    if (a > b) std::swap(a, b);
    edges.insert({a, b});
  }
  bool has_edge(int a, int b) const {
    if (a > b) std::swap(a, b);
    return edges.count({a, b}) > 0;
  }
  bool operator==(const ArtinGraph& o) const {
    return vertices.size() == o.vertices.size() && edges == o.edges;
  }
};

inline ArtinGraph cycle_graph(int n) {
  ArtinGraph g;
  g.vertices = default_generator_names(n);
  if (n == 2) {
    g.add_edge(0, 1);
    return g;
  }
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline ArtinGraph path_graph(int n) {
  ArtinGraph g;
  g.vertices = default_generator_names(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

// Is the graph a single cycle of the given length?
inline bool is_cycle(const ArtinGraph& g, int n) {
  if (static_cast<int>(g.vertices.size()) != n) return false;
  if (n < 3) return false;
  if (static_cast<int>(g.edges.size()) != n) return false;
  std::vector<int> deg(n, 0);
  for (auto [a, b] : g.edges) ++deg[a], ++deg[b];
  for (int d : deg)
    if (d != 2) return false;
  // connectivity
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int cnt = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (auto [a, b] : g.edges) {
      int w = a == v ? b : (b == v ? a : -1);
      if (w >= 0 && !seen[w]) {
        seen[w] = true;
        ++cnt;
        stack.push_back(w);
      }
    }
  }
  return cnt == n;
}

inline FreeWord braid_relator(int rank, int g, int h) {  // g h g = h g h
  return reduced(rank, {g, h, g, -h, -g, -h});
}
inline FreeWord commutator_relator(int rank, int g, int h) {
  return reduced(rank, {g, h, -g, -h});
}

// One relator per unordered vertex pair: braid type on edges, commutation off
// edges.
inline Presentation artin_presentation(const ArtinGraph& g) {
  Presentation p;
  p.gens = g.vertices;
  int n = p.rank();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      add_relator(p, g.has_edge(a, b) ? braid_relator(n, a + 1, b + 1)
                                      : commutator_relator(n, a + 1, b + 1));
  return p;
}

inline Presentation add_relations(const Presentation& p, const std::vector<FreeWord>& rels) {
  Presentation out = p;
  for (const FreeWord& r : rels) {
    for (int l : r.letters) {
      int g = l > 0 ? l : -l;
      if (g < 1 || g > p.rank()) throw domain_error("relator uses an unknown generator");
    }
    add_relator(out, r);
  }
  return out;
}

// ---- finite abelian quotients and Reidemeister-Schreier -------------------

struct FiniteQuotientMap {
  Presentation source;
  std::vector<int> cyclic_orders;           // target = Z/c_1 x ... x Z/c_r
  std::vector<std::vector<int>> images;     // generator -> exponent tuple

  int target_order() const {
    int n = 1;
    for (int c : cyclic_orders) n *= c;
    return n;
  }
};

namespace detail {

inline std::vector<int> tuple_add(const std::vector<int>& a, const std::vector<int>& b,
                                  const std::vector<int>& orders, int sign) {
  std::vector<int> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    int v = (a[i] + sign * b[i]) % orders[i];
    if (v < 0) v += orders[i];
    r[i] = v;
  }
  return r;
}

inline int tuple_index(const std::vector<int>& t, const std::vector<int>& orders) {
  int idx = 0;
  for (size_t i = 0; i < t.size(); ++i) idx = idx * orders[i] + t[i];
  return idx;
}

}  // namespace detail

inline void validate_quotient_map(const FiniteQuotientMap& m) {
  if (m.images.size() != static_cast<size_t>(m.source.rank()))
    throw domain_error("quotient map image count mismatch");
  for (int c : m.cyclic_orders)
    if (c < 1) throw domain_error("cyclic order must be positive");
  for (const FreeWord& r : m.source.relators) {
    std::vector<int> acc(m.cyclic_orders.size(), 0);
    for (int l : r.letters)
      acc = detail::tuple_add(acc, m.images[(l > 0 ? l : -l) - 1], m.cyclic_orders,
                              l > 0 ? 1 : -1);
    for (int v : acc)
      if (v != 0) throw domain_error("relator has nontrivial image under the quotient map");
  }
}

struct SubgroupPresentation {
  Presentation pres;
  // provenance[i] = (coset index, source generator index 1-based)
  std::vector<std::pair<int, int>> provenance;
  int index = 0;
  int schreier_generator_count = 0;  // index*gens - index + 1, trivial tree edges excluded
};

// Reidemeister-Schreier for the kernel of a map onto a finite abelian group.
// Transversal: breadth-first over the target Cayley graph in generator order.
inline SubgroupPresentation kernel_presentation(const FiniteQuotientMap& m) {
  validate_quotient_map(m);
  const int n_gens = m.source.rank();
  const int order = m.target_order();
  const auto& orders = m.cyclic_orders;

  // BFS transversal
  std::vector<std::vector<int>> rep_word(order);  // words in source letters
  std::vector<bool> visited(order, false);
  std::vector<std::vector<int>> element(order);
  std::vector<int> queue;
  std::vector<int> zero(orders.size(), 0);
  int id = detail::tuple_index(zero, orders);
  visited[id] = true;
  element[id] = zero;
  queue.push_back(id);
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int cur = queue[qi];
    for (int g = 1; g <= n_gens; ++g) {
      auto nxt = detail::tuple_add(element[cur], m.images[g - 1], orders, 1);
      int ni = detail::tuple_index(nxt, orders);
      if (!visited[ni]) {
        visited[ni] = true;
        element[ni] = nxt;
        rep_word[ni] = rep_word[cur];
        rep_word[ni].push_back(g);
        queue.push_back(ni);
      }
    }
  }
  for (bool v : visited)
    if (!v) throw domain_error("quotient map is not surjective");

  // Schreier generators: (coset r, generator g) -> r g rep(rg)^-1
  auto step = [&](int coset, int letter) {
    int g = letter > 0 ? letter : -letter;
    return detail::tuple_index(
        detail::tuple_add(element[coset], m.images[g - 1], orders, letter > 0 ? 1 : -1),
        orders);
  };
  std::map<std::pair<int, int>, int> gen_index;  // (coset, gen) -> new index, 0 = frozen
  std::vector<std::pair<int, int>> provenance;
  std::vector<std::string> names;
  // tree edges are frozen (they rewrite to the empty word)
  std::set<std::pair<int, int>> tree;
  for (int c : queue) {
    const auto& w = rep_word[c];
    int cur = id;
    for (int l : w) {
      tree.insert({cur, l});
      cur = step(cur, l);
    }
  }
  for (int c : queue) {
    for (int g = 1; g <= n_gens; ++g) {
      if (tree.count({c, g})) {
        gen_index[{c, g}] = 0;
        continue;
      }
      provenance.push_back({c, g});
      names.push_back(m.source.gens[g - 1] +
                      (c == id ? "" : "_" + std::to_string(c)));
      gen_index[{c, g}] = static_cast<int>(provenance.size());
    }
  }

  SubgroupPresentation out;
  out.index = order;
  out.schreier_generator_count = static_cast<int>(provenance.size());
  out.provenance = provenance;
  out.pres.gens = names;

  // rewrite every source relator at every coset
  for (int c : queue) {
    for (const FreeWord& r : m.source.relators) {
      std::vector<int> w;
      int cur = c;
      for (int l : r.letters) {
        if (l > 0) {
          int gi = gen_index[{cur, l}];
          if (gi > 0) w.push_back(gi);
          cur = step(cur, l);
        } else {
          int prev = step(cur, l);
          int gi = gen_index[{prev, -l}];
          if (gi > 0) w.push_back(-gi);
          cur = prev;
        }
      }
      if (cur != c) throw domain_error("relator rewrite did not close");
      add_relator(out.pres, reduced(out.pres.rank(), std::move(w)));
    }
  }
  return out;
}

// ---- Tietze simplification -------------------------------------------------

namespace detail {

inline int occurrences(const FreeWord& r, int g) {
  int n = 0;
  for (int l : r.letters)
    if (l == g || l == -g) ++n;
  return n;
}

inline size_t total_length(const Presentation& p) {
  size_t n = 0;
  for (const auto& r : p.relators) n += r.letters.size();
  return n;
}

// substitute generator g by the word w (over the same indexing) in r
inline FreeWord substitute(const FreeWord& r, int g, const FreeWord& w) {
  std::vector<int> out;
  for (int l : r.letters) {
    if (l == g) out.insert(out.end(), w.letters.begin(), w.letters.end());
    else if (l == -g) {
      FreeWord wi = inverse(w);
      out.insert(out.end(), wi.letters.begin(), wi.letters.end());
    } else out.push_back(l);
  }
  return reduced(r.rank, std::move(out));
}

// remove generator index g (1-based) renumbering everything above it
inline FreeWord drop_generator(const FreeWord& r, int g) {
  FreeWord out = r;
  out.rank = r.rank - 1;
  for (int& l : out.letters) {
    int a = l > 0 ? l : -l;
    if (a == g) throw domain_error("dropping a generator still in use");
    if (a > g) l = l > 0 ? l - 1 : l + 1;
  }
  return out;
}

// Try to shorten v using a cyclic subword match against u (Dehn-style): if
// more than half of u (cyclically, either orientation) appears in v, replace
// it by the shorter complement.  Returns true if v changed.
inline bool overlap_shorten(const FreeWord& u, FreeWord& v) {
  if (u.letters.size() < 2) return false;
  const int ulen = static_cast<int>(u.letters.size());
  for (int orient = 0; orient < 2; ++orient) {
    FreeWord uu = orient ? inverse(u) : u;
    std::vector<int> dbl = uu.letters;
    dbl.insert(dbl.end(), uu.letters.begin(), uu.letters.end());
    for (int len = std::min<int>(ulen - 1, static_cast<int>(v.letters.size()));
         len > ulen / 2; --len) {
      for (int start = 0; start < ulen; ++start) {
        // candidate piece dbl[start .. start+len)
        auto piece_begin = dbl.begin() + start;
        auto it = std::search(v.letters.begin(), v.letters.end(), piece_begin,
                              piece_begin + len);
        if (it == v.letters.end()) continue;
        // u ~ piece * rest  =>  piece = rest^-1 ; replace piece by rest^-1
        std::vector<int> rest(dbl.begin() + start + len, dbl.begin() + start + ulen);
        std::vector<int> replacement;
        for (auto rit = rest.rbegin(); rit != rest.rend(); ++rit) replacement.push_back(-*rit);
        std::vector<int> nw(v.letters.begin(), it);
        nw.insert(nw.end(), replacement.begin(), replacement.end());
        nw.insert(nw.end(), it + len, v.letters.end());
        FreeWord cand = cyclic_canonical(reduced(v.rank, std::move(nw)));
        if (cand.letters.size() < v.letters.size()) {
          v = cand;
          return true;
        }
      }
    }
  }
  return false;
}

}  // namespace detail

struct TietzeResult {
  Presentation pres;
  bool complete = true;  // false if the step budget ran out
};

// Deterministic greedy simplification: eliminate generators that occur exactly
// once in some relator (choosing the elimination that minimizes total relator
// length, ties by generator order), interleaved with Dehn-style overlap
// shortening; both preserve the presented group.
inline TietzeResult tietze_simplify(const Presentation& input, int budget = 20000) {
  Presentation p = input;
  // normalize
  {
    Presentation q;
    q.gens = p.gens;
    for (const auto& r : p.relators) add_relator(q, r);
    p = std::move(q);
  }
  int steps = 0;
  bool changed = true;
  while (changed && steps < budget) {
    changed = false;

    // 1) generator elimination
    int best_g = -1, best_r = -1;
    long best_score = 0;
    for (size_t ri = 0; ri < p.relators.size(); ++ri) {
      const FreeWord& r = p.relators[ri];
      for (int g = 1; g <= p.rank(); ++g) {
        if (detail::occurrences(r, g) != 1) continue;
        long sub_len = static_cast<long>(r.letters.size()) - 1;
        long score = 0;
        for (size_t rj = 0; rj < p.relators.size(); ++rj) {
          if (rj == ri) continue;
          const FreeWord& other = p.relators[rj];
          int occ = detail::occurrences(other, g);
          score += static_cast<long>(other.letters.size()) + occ * (sub_len - 1);
        }
        if (best_g < 0 || score < best_score ||
            (score == best_score && g < best_g)) {
          best_score = score;
          best_g = g;
          best_r = static_cast<int>(ri);
        }
      }
    }
    if (best_g > 0) {
      // solve r for g: rotate so the +-g letter leads, then g = (rest)^-+
      FreeWord r = p.relators[best_r];
      size_t pos = 0;
      while (r.letters[pos] != best_g && r.letters[pos] != -best_g) ++pos;
      std::rotate(r.letters.begin(), r.letters.begin() + pos, r.letters.end());
      std::vector<int> rest(r.letters.begin() + 1, r.letters.end());
      FreeWord w;
      w.rank = p.rank();
      if (r.letters[0] == best_g) {
        for (auto it = rest.rbegin(); it != rest.rend(); ++it) w.letters.push_back(-*it);
      } else {
        w.letters = rest;
      }
      Presentation q;
      q.gens = p.gens;
      q.gens.erase(q.gens.begin() + (best_g - 1));
      for (size_t rj = 0; rj < p.relators.size(); ++rj) {
        if (static_cast<int>(rj) == best_r) continue;
        FreeWord s = detail::substitute(p.relators[rj], best_g, w);
        add_relator(q, detail::drop_generator(cyclic_canonical(s), best_g));
      }
      p = std::move(q);
      changed = true;
      ++steps;
      continue;
    }

    // 2) overlap shortening
    for (size_t i = 0; i < p.relators.size() && !changed; ++i)
      for (size_t j = 0; j < p.relators.size() && !changed; ++j) {
        if (i == j) continue;
        FreeWord v = p.relators[j];
        if (detail::overlap_shorten(p.relators[i], v)) {
          Presentation q;
          q.gens = p.gens;
          for (size_t k = 0; k < p.relators.size(); ++k)
            add_relator(q, k == j ? v : p.relators[k]);
          p = std::move(q);
          changed = true;
          ++steps;
        }
      }
  }
  return {std::move(p), steps < budget};
}

// ---- abelianization (Smith normal form) ------------------------------------

struct Abelianization {
  std::vector<Int> torsion;  // invariant factors > 1
  int free_rank = 0;
  bool operator==(const Abelianization& o) const {
    return torsion == o.torsion && free_rank == o.free_rank;
  }
};

inline Abelianization abelianization(const Presentation& p) {
  const int n = p.rank();
  std::vector<std::vector<Int>> m;
  for (const auto& r : p.relators) {
    std::vector<Int> row(n, 0);
    for (int l : r.letters) row[(l > 0 ? l : -l) - 1] += l > 0 ? 1 : -1;
    m.push_back(std::move(row));
  }
  const int rows = static_cast<int>(m.size());
  int rank = 0;
  std::vector<Int> diag;
  int r0 = 0, c0 = 0;
  while (r0 < rows && c0 < n) {
    // find pivot of least absolute value
    int pr = -1, pc = -1;
    for (int i = r0; i < rows; ++i)
      for (int j = c0; j < n; ++j)
        if (m[i][j] != 0 && (pr < 0 || abs(m[i][j]) < abs(m[pr][pc]))) pr = i, pc = j;
    if (pr < 0) break;
    std::swap(m[r0], m[pr]);
    for (int i = r0; i < rows; ++i) std::swap(m[i][c0], m[i][pc]);
    bool clean = true;
    for (int i = r0 + 1; i < rows; ++i) {
      if (m[i][c0] == 0) continue;
      Int q = m[i][c0] / m[r0][c0];
      for (int j = c0; j < n; ++j) m[i][j] -= q * m[r0][j];
      if (m[i][c0] != 0) clean = false;
    }
    for (int j = c0 + 1; j < n; ++j) {
      if (m[r0][j] == 0) continue;
      Int q = m[r0][j] / m[r0][c0];
      for (int i = r0; i < rows; ++i) m[i][j] -= q * m[i][c0];
      if (m[r0][j] != 0) clean = false;
    }
    if (!clean) continue;  // smaller pivots surfaced; repeat at the same corner
    diag.push_back(abs(m[r0][c0]));
    ++rank;
    ++r0;
    ++c0;
  }
  // enforce the divisibility chain d1 | d2 | ...
  bool settled = false;
  while (!settled) {
    settled = true;
    for (size_t i = 0; i + 1 < diag.size(); ++i)
      for (size_t j = i + 1; j < diag.size(); ++j) {
        if (diag[j] % diag[i] == 0) continue;
        Int g = gcd(diag[i], diag[j]);
        Int l = diag[i] / g * diag[j];
        diag[i] = g;
        diag[j] = l;
        settled = false;
      }
  }
  std::sort(diag.begin(), diag.end());
  Abelianization out;
  out.free_rank = n - rank;
  for (const Int& d : diag)
    if (d > 1) out.torsion.push_back(d);
  return out;
}

// ---- low-index subgroups ----------------------------------------------------

namespace detail {

// Complete coset tables in discovery-standard form, one per subgroup of index
// <= max_index; backtracking with relator-scan deductions.
class LowIndexSearch {
 public:
  LowIndexSearch(const Presentation& p, int max_index)
      : n_gens_(p.rank()), max_(max_index) {
    for (const auto& r : p.relators)
      if (!r.letters.empty()) relators_.push_back(r.letters);
  }

  // tables: table[c][2g] = c.g, table[c][2g+1] = c.g^-1 (0-based cosets, -1 unset)
  std::vector<std::vector<std::vector<int>>> run() {
    table_.assign(1, empty_row());
    found_.clear();
    search();
    return found_;
  }

 private:
  std::vector<int> empty_row() const { return std::vector<int>(2 * n_gens_, -1); }
  int col(int letter) const { return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1; }
  int inv_col(int c) const { return c ^ 1; }

  bool define(int coset, int c, int target, std::vector<std::pair<int, int>>& trail) {
    if (table_[coset][c] == target) return true;
    if (table_[coset][c] != -1 || table_[target][inv_col(c)] != -1) return false;
    table_[coset][c] = target;
    table_[target][inv_col(c)] = coset;
    trail.push_back({coset, c});
    return true;
  }

  // scan all relators at all cosets, performing forced deductions; false on
  // contradiction.  Restarts after any deduction (cheap at these sizes).
  bool propagate(std::vector<std::pair<int, int>>& trail) {
    bool again = true;
    while (again) {
      again = false;
      for (const auto& rel : relators_)
        for (int c = 0; c < static_cast<int>(table_.size()); ++c) {
          int fwd = c;
          size_t fi = 0;
          while (fi < rel.size()) {
            int nxt = table_[fwd][col(rel[fi])];
            if (nxt < 0) break;
            fwd = nxt;
            ++fi;
          }
          if (fi == rel.size()) {
            if (fwd != c) return false;
            continue;
          }
          int bwd = c;
          size_t bi = rel.size();
          while (bi > fi) {
            int prv = table_[bwd][col(-rel[bi - 1])];
            if (prv < 0) break;
            bwd = prv;
            --bi;
          }
          if (bi == fi) {
            if (bwd != fwd) return false;
            continue;
          }
          if (bi == fi + 1) {
            if (!define(fwd, col(rel[fi]), bwd, trail)) return false;
            again = true;
          }
        }
    }
    return true;
  }

  void undo(std::vector<std::pair<int, int>>& trail, size_t mark, size_t rows_mark) {
    while (trail.size() > mark) {
      auto [coset, c] = trail.back();
      trail.pop_back();
      int target = table_[coset][c];
      table_[target][inv_col(c)] = -1;
      table_[coset][c] = -1;
    }
    (void)rows_mark;
  }

  void search() {
    // first undefined slot in scan order
    int coset = -1, c = -1;
    for (int i = 0; i < static_cast<int>(table_.size()) && coset < 0; ++i)
      for (int j = 0; j < 2 * n_gens_; ++j)
        if (table_[i][j] < 0) {
          coset = i;
          c = j;
          break;
        }
    if (coset < 0) {
      found_.push_back(table_);
      return;
    }
    // candidates: every existing coset, plus one fresh coset if room remains
    const int rows = static_cast<int>(table_.size());
    for (int target = 0; target <= rows; ++target) {
      bool fresh = target == rows;
      if (fresh && rows >= max_) break;
      if (fresh) table_.push_back(empty_row());
      std::vector<std::pair<int, int>> trail;
      if (define(coset, c, target, trail) && propagate(trail)) search();
      undo(trail, 0, rows + (fresh ? 1 : 0));
      if (fresh) table_.resize(rows);
    }
  }

  int n_gens_;
  int max_;
  std::vector<std::vector<int>> relators_;
  std::vector<std::vector<int>> table_;
  std::vector<std::vector<std::vector<int>>> found_;
};

// BFS-standardized encoding of a transitive table from a basepoint.
inline std::vector<int> standardize_table(const std::vector<std::vector<int>>& table,
                                          int base) {
  const int n = static_cast<int>(table.size());
  const int w = static_cast<int>(table[0].size());
  std::vector<int> relabel(n, -1);
  std::vector<int> order;
  relabel[base] = 0;
  order.push_back(base);
  for (size_t qi = 0; qi < order.size(); ++qi) {
    int cur = order[qi];
    for (int j = 0; j < w; ++j) {
      int t = table[cur][j];
      if (t >= 0 && relabel[t] < 0) {
        relabel[t] = static_cast<int>(order.size());
        order.push_back(t);
      }
    }
  }
  std::vector<int> enc;
  enc.reserve(n * w);
  for (int i : order)
    for (int j = 0; j < w; ++j) enc.push_back(relabel[table[i][j]]);
  return enc;
}

}  // namespace detail

// Number of conjugacy classes of subgroups for each index 1..max_index.
inline std::vector<int> low_index_subgroups(const Presentation& p, int max_index) {
  if (max_index < 1 || max_index > 7) throw domain_error("low_index resource guard: 1..7");
  detail::LowIndexSearch search(p, max_index);
  auto tables = search.run();
  std::vector<std::set<std::vector<int>>> classes(max_index + 1);
  for (const auto& t : tables) {
    int idx = static_cast<int>(t.size());
    // class signature: least standardized encoding over all basepoints
    std::vector<int> best;
    for (int b = 0; b < idx; ++b) {
      auto enc = detail::standardize_table(t, b);
      if (best.empty() || enc < best) best = enc;
    }
    classes[idx].insert(best);
  }
  std::vector<int> counts(max_index);
  for (int i = 1; i <= max_index; ++i) counts[i - 1] = static_cast<int>(classes[i].size());
  return counts;
}

// ---- Artin-graph recognition -----------------------------------------------

struct ArtinMatch {
  bool matched = false;
  ArtinGraph graph;
};

// Succeeds iff every relator is a braid relator or a commutator between two
// distinct generators, with each unordered pair constrained exactly once.
inline ArtinMatch match_artin_graph(const Presentation& p) {
  const int n = p.rank();
  std::map<std::pair<int, int>, int> constraint;  // pair -> 0 commute, 1 braid
  for (const FreeWord& r : p.relators) {
    std::set<int> gens;
    for (int l : r.letters) gens.insert(l > 0 ? l : -l);
    if (gens.size() != 2) return {};
    int g = *gens.begin(), h = *std::next(gens.begin());
    FreeWord c = cyclic_canonical(r);
    int kind = -1;
    if (c.letters == cyclic_canonical(commutator_relator(n, g, h)).letters) kind = 0;
    else if (c.letters == cyclic_canonical(braid_relator(n, g, h)).letters ||
             c.letters == cyclic_canonical(braid_relator(n, h, g)).letters)
      kind = 1;
    if (kind < 0) return {};
    auto key = std::make_pair(g - 1, h - 1);
    if (constraint.count(key)) return {};
    constraint[key] = kind;
  }
  if (static_cast<int>(constraint.size()) != n * (n - 1) / 2) return {};
  ArtinMatch out;
  out.matched = true;
  out.graph.vertices = p.gens;
  for (const auto& [key, kind] : constraint)
    if (kind == 1) out.graph.add_edge(key.first, key.second);
  return out;
}

}  // namespace hypo
