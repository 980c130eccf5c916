#pragma once

// The three Chebyshev families T_n, U_n, W_n and the product/sum identities
// the hypocycloid singularity analysis runs on.  T and U are the classical
// first/second kinds; W is the fourth kind, pinned by the half-angle sine
// identity and generated by the shared recurrence from W0 = 1, W1 = 2x + 1.

#include <hypo/sturm.hpp>

#include <cmath>
#include <numeric>

namespace hypo {

enum class ChebKind { T, U, W };

inline UniPoly cheb(ChebKind kind, int n, const std::string& var = "x") {
  if (n < 0) {
    if (kind == ChebKind::U && n == -1) return UniPoly(var);  // U_{-1} = 0
    throw domain_error("cheb: negative index");
  }
  UniPoly p0 = UniPoly::constant(Rat(1), var);
  UniPoly p1;
  switch (kind) {
    case ChebKind::T: p1 = UniPoly(var, {Rat(0), Rat(1)}); break;
    case ChebKind::U: p1 = UniPoly(var, {Rat(0), Rat(2)}); break;
    case ChebKind::W: p1 = UniPoly(var, {Rat(1), Rat(2)}); break;
  }
  if (n == 0) return p0;
  if (n == 1) return p1;
  UniPoly two_x(var, {Rat(0), Rat(2)});
  for (int i = 2; i <= n; ++i) {
    UniPoly p2 = two_x * p1 - p0;
    p0 = std::move(p1);
    p1 = std::move(p2);
  }
  return p1;
}

// Numeric certificate for the W seeds: checks sin((n+1/2)t) = sin(t/2) W_n(cos t)
// at sample angles.  Identity verification elsewhere is exact; only the seed
// choice leans on the defining trigonometric identity.
inline bool certify_w_seeds(int n_max = 8, int samples = 16, double tol = 1e-12) {
  for (int n = 0; n <= n_max; ++n) {
    UniPoly w = cheb(ChebKind::W, n);
    for (int s = 1; s <= samples; ++s) {
      double theta = 3.0 * s / (samples + 1);  // spread over (0, 3)
      double lhs = std::sin((n + 0.5) * theta);
      double rhs = std::sin(theta / 2) * eval_double(w, std::cos(theta));
      if (std::abs(lhs - rhs) > tol) return false;
    }
  }
  return true;
}

// P_{k,l} = l T_k + k T_l and Q_{k,l} = l U_{k-1} - k U_{l-1}; the tilde pair
// flips the inner-circle phase.
inline UniPoly hypo_P(int k, int l, const std::string& var = "x") {
  return Rat(l) * cheb(ChebKind::T, k, var) + Rat(k) * cheb(ChebKind::T, l, var);
}
inline UniPoly hypo_Q(int k, int l, const std::string& var = "x") {
  return Rat(l) * cheb(ChebKind::U, k - 1, var) - Rat(k) * cheb(ChebKind::U, l - 1, var);
}
inline UniPoly hypo_P_tilde(int k, int l, const std::string& var = "x") {
  return Rat(l) * cheb(ChebKind::T, k, var) - Rat(k) * cheb(ChebKind::T, l, var);
}
inline UniPoly hypo_Q_tilde(int k, int l, const std::string& var = "x") {
  return Rat(l) * cheb(ChebKind::U, k - 1, var) + Rat(k) * cheb(ChebKind::U, l - 1, var);
}

enum class ChebIdentityTag { sumU_even, shift_even, diffU_even, diffT_odd, leadP, leadQ };

struct ChebIdentity {
  ChebIdentityTag tag;
  int k = 0, l = 0;
};

// Exact polynomial verification of the factorization identities.  Tags with an
// "even" suffix require N = k+l even, the "odd" tag requires N odd; the
// leading-coefficient tags have no parity constraint.
inline bool verify_identity(const ChebIdentity& id) {
  const int k = id.k, l = id.l;
  if (k <= l || l < 1 || std::gcd(k, l) != 1)
    throw domain_error("identity requires coprime k > l >= 1");
  const int n = k + l;
  auto T = [](int m) { return cheb(ChebKind::T, m); };
  auto U = [](int m) { return cheb(ChebKind::U, m); };
  auto W = [](int m) { return cheb(ChebKind::W, m); };
  const UniPoly x = UniPoly::variable("x");
  switch (id.tag) {
    case ChebIdentityTag::sumU_even: {
      if (n % 2 != 0) throw domain_error("sumU-even requires k+l even");
      return U(k - 1) + U(l - 1) == Rat(2) * T((k - l) / 2) * U(n / 2 - 1);
    }
    case ChebIdentityTag::shift_even: {
      if (n % 2 != 0) throw domain_error("shift-even requires k+l even");
      return (T(k) - T(l)) + x * (U(k - 1) + U(l - 1)) == U(k) + U(l - 2);
    }
    case ChebIdentityTag::diffU_even: {
      if (n % 2 != 0) throw domain_error("diffU-even requires k+l even");
      return U(k - 1) - U(l - 1) == Rat(2) * T(n / 2) * U((k - l) / 2 - 1);
    }
    case ChebIdentityTag::diffT_odd: {
      if (n % 2 != 1) throw domain_error("diffT-odd requires k+l odd");
      // cos k0 - cos l0 = -2 sin((k+l)0/2) sin((k-l)0/2) and
      // sin^2(0/2) = (1-x)/2, so the factorization carries x-1, not 1-x.
      UniPoly x_minus_one = x - UniPoly::constant(Rat(1), "x");
      return T(k) - T(l) == x_minus_one * W((n - 1) / 2) * W((k - l - 1) / 2);
    }
    case ChebIdentityTag::leadP:
      return hypo_P(k, l).lc() == Rat(l) * pow_rat(Rat(2), k - 1);
    case ChebIdentityTag::leadQ:
      return hypo_Q(k, l).lc() == Rat(l) * pow_rat(Rat(2), k - 1);
  }
  return false;
}

struct ChebZeros {
  int count;
  std::vector<Interval> intervals;
};

// All n roots are real, simple and inside (-1, 1); certified by Sturm counts.
inline ChebZeros cheb_zero_count(ChebKind kind, int n) {
  if (n < 1) throw domain_error("cheb_zero_count needs n >= 1");
  UniPoly p = cheb(kind, n);
  auto intervals = isolate_real_roots(p);
  int inside = sturm_count(p, Rat(-1), Rat(1));
  if (static_cast<int>(intervals.size()) != n || inside != n)
    throw domain_error("chebyshev zero certification failed");
  return {n, std::move(intervals)};
}

}  // namespace hypo
