#pragma once

#include <gmpxx.h>

#include <string>

namespace inertia {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

inline std::string to_string(const BigInt& value) { return value.get_str(); }
std::string to_string(const Rational& value);

}  // namespace inertia
