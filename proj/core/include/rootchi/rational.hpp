#pragma once

#include <gmpxx.h>

#include <string>

namespace rootchi {

using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p" or "p/q"; throws ParseError.
Rational parse_rational(const std::string& text);

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace rootchi
