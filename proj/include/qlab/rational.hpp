#pragma once

#include <string>

#include "qlab/real.hpp"

namespace qlab {

/// n! as an exact integer (cached).
const Int& factorial(long n);

/// Parse "num/den" or "num" into an exact rational (canonicalized).
Rat parse_rational(const std::string& s);

/// Serialize a rational as "num/den" ("num" when den == 1).
std::string rational_str(const Rat& q);

} // namespace qlab
