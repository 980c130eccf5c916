#pragma once

// Exact rational scalars on top of GMP.  All arithmetic in the library is
// exact; nothing here ever rounds.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hypo {

using Int = mpz_class;
using Rat = mpq_class;

struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline int sign(const Rat& q) { return sgn(q); }
inline int sign(const Int& z) { return sgn(z); }

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Accepts "n" or "n/d"; no decimals.
inline Rat rat_from_string(const std::string& s) {
  if (s.empty() || s.find('.') != std::string::npos)
    throw domain_error("bad rational literal: '" + s + "'");
  Rat q;
  if (q.set_str(s, 10) != 0) throw domain_error("bad rational literal: '" + s + "'");
  q.canonicalize();
  if (sgn(q.get_den()) <= 0) throw domain_error("bad rational literal: '" + s + "'");
  return q;
}

inline std::string rat_to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int m;
  mpz_lcm(m.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return m;
}

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rat pow_rat(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  Rat b = e > 0 ? base : Rat(1) / base;
  unsigned long n = e > 0 ? e : -e;
  Rat r(1);
  while (n) {
    if (n & 1) r *= b;
    b *= b;
    n >>= 1;
  }
  return r;
}

inline double to_double(const Rat& q) { return q.get_d(); }

// Midpoint helper used all over root isolation.
inline Rat midpoint(const Rat& a, const Rat& b) { return (a + b) / 2; }

}  // namespace hypo
