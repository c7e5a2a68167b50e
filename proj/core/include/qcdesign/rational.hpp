#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace qcd {

/// Exact rational used for every aliasing index, resolution and WLP entry.
/// All values that arise here are dyadic, so 64-bit numerators/denominators
/// are ample for the supported design sizes.
using Rational = boost::rational<std::int64_t>;

/// 2^(-exponent) for exponent >= 0.
Rational inverse_power_of_two(int exponent);

/// Returns e such that value == 2^(-e), or -1 if value is not of that form.
int dyadic_exponent(const Rational& value);

/// Lowest-terms "p/q"; integers render as "p".
std::string to_string(const Rational& value);

/// Presentation-only decimal rendering (e.g. "4.5", "8.875").
std::string to_decimal(const Rational& value);

/// Parses "p" or "p/q". Anything with a decimal point or exponent is rejected.
/// Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// floor(value), the <y> operator used by the index constants.
std::int64_t floor_of(const Rational& value);

}  // namespace qcd
