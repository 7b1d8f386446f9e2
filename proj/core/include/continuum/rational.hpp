#pragma once

#include <gmpxx.h>

#include <string>

#include "continuum/errors.hpp"

namespace continuum {

/// Exact arbitrary-precision rational. No floating point anywhere in the library.
using Rat = mpq_class;

/// Parses "n" or "p/q" (optional leading '-', base 10). Rejects anything else,
/// including floats and a zero denominator. Result is canonicalized.
Rat parse_rat(const std::string& text);

/// Renders canonically as "n" or "p/q", matching the wire format.
std::string rat_to_string(const Rat& value);

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace continuum
