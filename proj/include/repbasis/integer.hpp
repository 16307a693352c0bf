#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace repbasis {

/// Arbitrary-precision integer used for set elements and counts.
using Int = boost::multiprecision::cpp_int;
/// Exact rational used for density ratios.
using Rational = boost::multiprecision::cpp_rational;

/// Quotient rounded toward negative infinity. `d` must be positive.
Int floor_div(const Int& n, const Int& d);
/// Remainder in [0, d). `d` must be positive.
Int floor_mod(const Int& n, const Int& d);
/// Ceiling of log2(x) for x >= 1; zero for x == 1.
std::int64_t ceil_log2(const Int& x);
/// Largest r with r^k <= x, for x >= 0 and k >= 1.
Int integer_root(const Int& x, unsigned k);

/// Parses an optionally signed decimal integer; throws ValidationError.
Int parse_int(std::string_view text);

/// True if the value fits in a signed 64-bit integer.
bool fits_int64(const Int& x);
std::int64_t to_int64(const Int& x);

/// Reads the REPBASIS_BUDGET environment variable, falling back to `fallback`.
std::uint64_t enumeration_budget(std::uint64_t fallback = 100'000'000ULL);

}  // namespace repbasis
