#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace tpalab {

using Rational = mpq_class;

// canonical GMP form: "3", "-1/2"
std::string to_string(const Rational& q);

// accepts "p", "p/q", "-p/q"; throws std::invalid_argument otherwise
Rational parse_rational(const std::string& s);

// exact k-th root if it exists in Q
std::optional<Rational> rational_root(const Rational& q, unsigned long k);

// integer power with possibly negative exponent
Rational rpow(const Rational& q, long e);

}  // namespace tpalab
