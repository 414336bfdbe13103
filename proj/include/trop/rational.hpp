#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace trop {

// Exact arithmetic base types. mpq_class keeps values in canonical form
// (reduced, positive denominator) as long as constructors canonicalize.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat make_rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "p" or "p/q" with arbitrary-precision integers.
inline Rat parse_rat(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  Rat q;
  if (q.set_str(text, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + text);
  if (q.get_den() == 0)
    throw std::invalid_argument("rational with zero denominator: " + text);
  q.canonicalize();
  return q;
}

/// Canonical "p" / "p/q" rendering, inverse of parse_rat.
inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline Int rat_floor(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Int rat_ceil(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline long to_long(const Rat& q) {
  if (!is_integer(q)) throw std::invalid_argument("rational is not an integer");
  if (!q.get_num().fits_slong_p())
    throw std::overflow_error("integer does not fit in long");
  return q.get_num().get_si();
}

inline long gcd_long(long a, long b) {
  a = std::labs(a);
  b = std::labs(b);
  while (b != 0) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace trop
