#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace gcdft {

// Every function value in the library is an exact GMP integer or rational.
using Integer = mpz_class;
using Rational = mpq_class;

static_assert(sizeof(unsigned long) == sizeof(std::uint64_t), "LP64 expected");

inline Integer to_integer(std::uint64_t v) { return Integer(static_cast<unsigned long>(v)); }
inline Integer to_integer(std::int64_t v) { return Integer(static_cast<long>(v)); }

inline Rational to_rational(const Integer& v) { return Rational(v); }

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

// Integers print bare, everything else as "num/den".
inline std::string to_string(const Rational& q) {
  if (is_integral(q)) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

// Inverse of to_string(Rational). Throws std::invalid_argument on malformed text.
Rational parse_rational(const std::string& text);

}  // namespace gcdft
