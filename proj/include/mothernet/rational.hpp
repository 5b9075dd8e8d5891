#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mothernet {

/// Exact rational arithmetic used for conductances, weights and exact solves.
using Rational = mpq_class;

/// Formats as "p/q"; integers keep the "/1" suffix so the form is uniform.
std::string to_string(const Rational& value);

/// Accepts "p/q" or a bare integer "p". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// num / den in lowest terms. The two-argument mpq_class constructor does not
/// reduce, and unreduced values compare wrongly.
inline Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline double to_double(const Rational& value) { return value.get_d(); }

}  // namespace mothernet
