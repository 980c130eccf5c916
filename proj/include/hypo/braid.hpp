#pragma once

// Words in the braid group B_d and free group F_d, the right action of B_d on
// F_d, the local braid catalog for plane-curve singularities, and assembly of
// presentations from braid monodromy data.

#include <hypo/rational.hpp>

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace hypo {

// Freely reduced word in F_rank; +i encodes a_i, -i its inverse (1-based).
struct FreeWord {
  int rank = 0;
  std::vector<int> letters;

  static FreeWord identity(int rank) { return {rank, {}}; }
  static FreeWord generator(int rank, int i, int sign = +1) {
    if (i < 1 || i > rank) throw domain_error("generator index out of range");
    return {rank, {sign > 0 ? i : -i}};
  }
  bool is_identity() const { return letters.empty(); }
  bool operator==(const FreeWord& o) const { return letters == o.letters; }
};

inline void reduce_in_place(std::vector<int>& w) {
  std::vector<int> out;
  out.reserve(w.size());
  for (int l : w) {
    if (l == 0) throw domain_error("zero letter");
    if (!out.empty() && out.back() == -l) out.pop_back();
    else out.push_back(l);
  }
  w = std::move(out);
}

inline FreeWord reduced(int rank, std::vector<int> letters) {
  reduce_in_place(letters);
  return {rank, std::move(letters)};
}

inline FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  std::vector<int> w = a.letters;
  w.insert(w.end(), b.letters.begin(), b.letters.end());
  return reduced(std::max(a.rank, b.rank), std::move(w));
}

inline FreeWord inverse(const FreeWord& a) {
  std::vector<int> w(a.letters.rbegin(), a.letters.rend());
  for (int& l : w) l = -l;
  return {a.rank, std::move(w)};
}

inline FreeWord conjugate(const FreeWord& w, const FreeWord& by) {
  return inverse(by) * w * by;
}

inline FreeWord pow(const FreeWord& a, int e) {
  FreeWord base = e >= 0 ? a : inverse(a);
  int n = e >= 0 ? e : -e;
  FreeWord r = FreeWord::identity(a.rank);
  for (int i = 0; i < n; ++i) r = r * base;
  return r;
}

// Cyclic reduction plus a canonical rotation (lexicographically least over all
// rotations of the word and its inverse) so relator sets dedupe syntactically.
inline FreeWord cyclic_canonical(FreeWord w) {
  std::vector<int>& v = w.letters;
  reduce_in_place(v);
  while (v.size() >= 2 && v.front() == -v.back()) {
    v.erase(v.begin());
    v.pop_back();
  }
  if (v.empty()) return w;
  auto best_rotation = [](const std::vector<int>& u) {
    std::vector<int> best = u;
    std::vector<int> cur = u;
    for (size_t i = 1; i < u.size(); ++i) {
      std::rotate(cur.begin(), cur.begin() + 1, cur.end());
      if (cur < best) best = cur;
    }
    return best;
  };
  std::vector<int> a = best_rotation(v);
  std::vector<int> inv(v.rbegin(), v.rend());
  for (int& l : inv) l = -l;
  std::vector<int> b = best_rotation(inv);
  w.letters = std::min(a, b);
  return w;
}

// Braid word on a fixed strand count; +i encodes sigma_i (1 <= i < strands).
struct BraidWord {
  int strands = 2;
  std::vector<int> letters;

  void check() const {
    for (int l : letters) {
      int i = l > 0 ? l : -l;
      if (i < 1 || i >= strands) throw domain_error("braid letter out of range");
    }
  }
  bool operator==(const BraidWord& o) const {
    return strands == o.strands && letters == o.letters;
  }
};

inline BraidWord operator*(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands) throw domain_error("strand count mismatch");
  BraidWord r = a;
  r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
  return r;
}

inline BraidWord inverse(const BraidWord& a) {
  BraidWord r{a.strands, {a.letters.rbegin(), a.letters.rend()}};
  for (int& l : r.letters) l = -l;
  return r;
}

// Cancel adjacent sigma sigma^-1 pairs (plain free reduction on braid letters).
inline BraidWord free_reduce(const BraidWord& a) {
  BraidWord r = a;
  reduce_in_place(r.letters);
  return r;
}

inline int exponent_sum(const BraidWord& a) {
  int s = 0;
  for (int l : a.letters) s += l > 0 ? 1 : -1;
  return s;
}

// Strand permutation: perm[i] = where strand at position i (0-based) ends.
inline std::vector<int> braid_permutation(const BraidWord& b) {
  std::vector<int> perm(b.strands);
  std::iota(perm.begin(), perm.end(), 0);
  for (int l : b.letters) {
    int i = (l > 0 ? l : -l) - 1;
    std::swap(perm[i], perm[i + 1]);
  }
  return perm;
}

// Right action of one braid generator on a free word.  The convention is the
// unique reading of the index cases under which a_d ... a_1 is fixed:
//   sigma_j:  a_j -> a_{j+1},  a_{j+1} -> a_{j+1} a_j a_{j+1}^-1.
inline FreeWord apply_generator(const FreeWord& w, int braid_letter) {
  int j = braid_letter > 0 ? braid_letter : -braid_letter;
  std::vector<int> out;
  out.reserve(w.letters.size() * 3);
  for (int l : w.letters) {
    int g = l > 0 ? l : -l;
    bool pos = l > 0;
    auto emit = [&](std::initializer_list<int> img) {
      if (pos) out.insert(out.end(), img.begin(), img.end());
      else
        for (auto it = std::rbegin(img); it != std::rend(img); ++it) out.push_back(-*it);
    };
    if (braid_letter > 0) {
      if (g == j) emit({j + 1});
      else if (g == j + 1) emit({j + 1, j, -(j + 1)});
      else emit({g});
    } else {
      if (g == j) emit({-j, j + 1, j});
      else if (g == j + 1) emit({j});
      else emit({g});
    }
  }
  reduce_in_place(out);
  return {w.rank, std::move(out)};
}

inline FreeWord braid_act(const BraidWord& b, const FreeWord& w) {
  if (w.rank != b.strands) throw domain_error("rank does not match strand count");
  b.check();
  FreeWord cur = w;
  for (int l : b.letters) cur = apply_generator(cur, l);
  return cur;
}

// Both defining braid relations act identically on every generator of F_d.
inline bool braid_action_welldefined(int d) {
  if (d < 2) throw domain_error("need at least two strands");
  auto act_word = [&](const std::vector<int>& bw, const FreeWord& w) {
    FreeWord cur = w;
    for (int l : bw) cur = apply_generator(cur, l);
    return cur;
  };
  for (int i = 1; i + 1 <= d - 1; ++i)
    for (int g = 1; g <= d; ++g) {
      FreeWord a = FreeWord::generator(d, g);
      if (!(act_word({i, i + 1, i}, a) == act_word({i + 1, i, i + 1}, a))) return false;
    }
  for (int i = 1; i <= d - 1; ++i)
    for (int j = i + 2; j <= d - 1; ++j)
      for (int g = 1; g <= d; ++g) {
        FreeWord a = FreeWord::generator(d, g);
        if (!(act_word({i, j}, a) == act_word({j, i}, a))) return false;
      }
  return true;
}

enum class LocalSingType { tangent, node, cusp, cusp_tangent, tacnode };

struct LocalSing {
  LocalSingType type;
  int offset = 1;  // lowest strand index involved (1-based)
  int m = 2;       // tacnode intersection number
};

// tangent: sigma_i; node: sigma_i^2; cusp: sigma_i^3; cusp tangent:
// (sigma_{i+1} sigma_i)^2; m-tacnode: sigma_i^(2m).
inline BraidWord local_braid(const LocalSing& s, int strands) {
  int span = s.type == LocalSingType::cusp_tangent ? 3 : 2;
  if (s.offset < 1 || s.offset + span - 1 > strands)
    throw domain_error("local braid does not fit in the strand count");
  BraidWord b{strands, {}};
  int i = s.offset;
  switch (s.type) {
    case LocalSingType::tangent: b.letters = {i}; break;
    case LocalSingType::node: b.letters = {i, i}; break;
    case LocalSingType::cusp: b.letters = {i, i, i}; break;
    case LocalSingType::cusp_tangent: b.letters = {i + 1, i, i + 1, i}; break;
    case LocalSingType::tacnode: b.letters.assign(2 * s.m, i); break;
  }
  return b;
}

struct Presentation {
  std::vector<std::string> gens;
  std::vector<FreeWord> relators;  // canonical cyclic form, unique

  int rank() const { return static_cast<int>(gens.size()); }
};

inline void add_relator(Presentation& p, const FreeWord& r) {
  FreeWord c = cyclic_canonical(r);
  if (c.is_identity()) return;
  for (const auto& existing : p.relators)
    if (existing.letters == c.letters) return;
  c.rank = p.rank();
  p.relators.push_back(std::move(c));
}

inline std::vector<std::string> default_generator_names(int d) {
  std::vector<std::string> names;
  names.reserve(d);
  for (int i = 1; i <= d; ++i) names.push_back("a" + std::to_string(i));
  return names;
}

// Presentation of the complement group from a braid monodromy list: relators
// a_i^-1 (a_i)^beta for i = 1..d-1, canonicalized and deduplicated.
inline Presentation zvk_presentation(const std::vector<BraidWord>& monodromy, int d,
                                     std::vector<std::string> names = {}) {
  Presentation p;
  p.gens = names.empty() ? default_generator_names(d) : std::move(names);
  if (static_cast<int>(p.gens.size()) != d) throw domain_error("generator name count mismatch");
  for (const BraidWord& b : monodromy) {
    if (b.strands != d) throw domain_error("monodromy braid strand mismatch");
    for (int i = 1; i <= d - 1; ++i) {
      FreeWord a = FreeWord::generator(d, i);
      add_relator(p, inverse(a) * braid_act(b, a));
    }
  }
  return p;
}

inline std::string to_string(const FreeWord& w, const std::vector<std::string>& names) {
  if (w.letters.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < w.letters.size(); ++i) {
    int l = w.letters[i];
    int g = l > 0 ? l : -l;
    if (!s.empty()) s += " ";
    s += names.at(g - 1);
    if (l < 0) s += "^-1";
  }
  return s;
}

inline std::string to_string(const Presentation& p) {
  std::string s = "< ";
  for (size_t i = 0; i < p.gens.size(); ++i) s += (i ? ", " : "") + p.gens[i];
  s += " | ";
  for (size_t i = 0; i < p.relators.size(); ++i)
    s += (i ? ", " : "") + to_string(p.relators[i], p.gens);
  s += " >";
  return s;
}

}  // namespace hypo
