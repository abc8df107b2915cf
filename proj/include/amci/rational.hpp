#pragma once

#include <gmpxx.h>

#include <string>

namespace amci {

// Exact arithmetic everywhere: arbitrary-precision integers and rationals.
// mpq_class keeps values canonical (lowest terms, positive denominator).
using Int = mpz_class;
using Rat = mpq_class;

// "p" when the denominator is 1, otherwise "p/q".
inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

inline Rat rat_from_string(const std::string& s) {
  Rat q(s);
  q.canonicalize();
  return q;
}

}  // namespace amci
