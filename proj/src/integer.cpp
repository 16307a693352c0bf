#include "repbasis/integer.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <limits>
#include <string>

#include "repbasis/errors.hpp"

namespace repbasis {

Int floor_div(const Int& n, const Int& d) {
  Int q = n / d;
  if (n % d != 0 && n < 0) --q;
  return q;
}

Int floor_mod(const Int& n, const Int& d) {
  Int r = n % d;
  if (r < 0) r += d;
  return r;
}

std::int64_t ceil_log2(const Int& x) {
  if (x < 1) throw ValidationError("ceil_log2 requires x >= 1");
  if (x == 1) return 0;
  Int y = x - 1;
  return static_cast<std::int64_t>(boost::multiprecision::msb(y)) + 1;
}

Int integer_root(const Int& x, unsigned k) {
  if (x < 0 || k == 0) throw ValidationError("integer_root requires x >= 0 and k >= 1");
  if (x < 2 || k == 1) return x;
  Int lo = 0;
  Int hi = Int(1) << (boost::multiprecision::msb(x) / k + 1);
  // invariant: lo^k <= x < hi^k
  while (hi - lo > 1) {
    Int mid = (lo + hi) / 2;
    if (boost::multiprecision::pow(mid, k) <= x) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

Int parse_int(std::string_view text) {
  std::size_t i = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
  if (i == text.size()) throw ValidationError("not an integer: '" + std::string(text) + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw ValidationError("not an integer: '" + std::string(text) + "'");
    }
  }
  Int value(std::string(text.substr(i)));
  return text[0] == '-' ? Int(-value) : value;
}

bool fits_int64(const Int& x) {
  return x >= std::numeric_limits<std::int64_t>::min() &&
         x <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t to_int64(const Int& x) {
  if (!fits_int64(x)) throw BudgetError("integer " + x.str() + " exceeds 64 bits");
  return x.convert_to<std::int64_t>();
}

std::uint64_t enumeration_budget(std::uint64_t fallback) {
  const char* env = std::getenv("REPBASIS_BUDGET");
  if (env == nullptr || *env == '\0') return fallback;
  std::uint64_t value = 0;
  const char* end = env + std::char_traits<char>::length(env);
  auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc{} || ptr != end || value == 0) {
    throw ValidationError(std::string("REPBASIS_BUDGET must be a positive integer, got '") + env + "'");
  }
  return value;
}

}  // namespace repbasis
