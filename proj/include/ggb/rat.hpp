#pragma once

#include <gmpxx.h>

#include <string>

namespace ggb {

// Exact rational arithmetic, GMP-backed. mpq_class keeps values canonical
// (lowest terms, positive denominator), which is exactly the invariant the
// rest of the library relies on.
using Int = mpz_class;
using Rat = mpq_class;

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline Int numerator(const Rat& r) { return r.get_num(); }
inline Int denominator(const Rat& r) { return r.get_den(); }

inline std::string to_string(const Rat& r) { return r.get_str(); }

inline Int factorial(unsigned long n) {
  Int f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

/// Binomial coefficient with the boundary convention used throughout:
/// C(a, b) = 0 when b < 0 or a < b, and C(a, 0) = 1 for every a.
inline Int binomial(long a, long b) {
  if (b < 0) return 0;
  if (b == 0) return 1;
  if (a < b) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a),
               static_cast<unsigned long>(b));
  return r;
}

/// t^e for integer t, e >= 0.
inline Int ipow(long t, int e) {
  Int r = 1;
  Int base(t);
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace ggb
