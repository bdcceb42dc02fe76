#pragma once

#include <gmpxx.h>

#include <string>

#include "topdeg/errors.hpp"

namespace topdeg {

// Exact rational arithmetic.  GMP's canonical form (lowest terms, positive
// denominator) is exactly the invariant the rest of the library relies on.
using Rational = mpq_class;
using Integer = mpz_class;

inline int sign(const Rational& q) { return sgn(q); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Accepts "p" or "p/q" with an optional leading sign; canonicalizes.
inline Rational rational_from_string(const std::string& s) {
  if (s.empty()) fail(ErrorKind::Parse, "empty rational literal");
  try {
    Rational q(s);
    if (q.get_den() == 0) fail(ErrorKind::Parse, "zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    fail(ErrorKind::Parse, "bad rational literal '" + s + "'");
  }
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

} // namespace topdeg
