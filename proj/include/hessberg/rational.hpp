#ifndef HESSBERG_RATIONAL_HPP
#define HESSBERG_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "hessberg/error.hpp"

namespace hessberg {

// All arithmetic in this library is exact. Rat is the only number type used
// for coefficients, inner products and series; no floating point anywhere.
using Rat = mpq_class;
using Int = mpz_class;

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;
using IntVec = std::vector<long>;
using IntMat = std::vector<IntVec>;

/// Canonical "p/q" (or "p") rendering, bit-stable across platforms.
inline std::string rat_str(const Rat& q) { return q.get_str(); }

/// Parse "p", "-p" or "p/q". Throws InputError on malformed input.
inline Rat rat_parse(const std::string& s) {
  try {
    Rat q(s);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw InputError("malformed rational: '" + s + "'");
  }
}

inline bool rat_is_integer(const Rat& q) { return q.get_den() == 1; }

/// Exact conversion to long; throws InternalError when the value is not a
/// machine-size integer (callers use this only where integrality is a theorem).
inline long rat_to_long(const Rat& q) {
  if (!rat_is_integer(q)) throw InternalError("expected integer, got " + rat_str(q));
  if (!q.get_num().fits_slong_p()) throw InternalError("integer overflow in rat_to_long");
  return q.get_num().get_si();
}

inline Int factorial(unsigned long n) {
  Int f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

inline Int binomial(unsigned long n, unsigned long k) {
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

inline Rat rat_pow(const Rat& q, unsigned long e) {
  Rat r = 1;
  Rat base = q;
  unsigned long k = e;
  while (k > 0) {
    if (k & 1) r *= base;
    base *= base;
    k >>= 1;
  }
  return r;
}

}  // namespace hessberg

#endif
