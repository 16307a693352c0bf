#include "repbasis/polyring.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "repbasis/errors.hpp"

namespace repbasis {

LaurentPoly::LaurentPoly(std::int64_t offset, std::vector<Int> coeffs)
    : offset_(offset), coeffs_(std::move(coeffs)) {
  normalize();
}

LaurentPoly LaurentPoly::monomial(std::int64_t exponent, Int coefficient) {
  return LaurentPoly(exponent, {std::move(coefficient)});
}

void LaurentPoly::normalize() {
  std::size_t first = 0;
  while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
  if (first == coeffs_.size()) {
    coeffs_.clear();
    offset_ = 0;
    return;
  }
  std::size_t last = coeffs_.size();
  while (coeffs_[last - 1] == 0) --last;
  coeffs_.erase(coeffs_.begin() + static_cast<std::ptrdiff_t>(last), coeffs_.end());
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(first));
  offset_ += static_cast<std::int64_t>(first);
}

Int LaurentPoly::coeff(std::int64_t exponent) const {
  if (is_zero() || exponent < low() || exponent > high()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - offset_)];
}

namespace {

LaurentPoly combine(const LaurentPoly& p, const LaurentPoly& q, int sign) {
  if (p.is_zero()) return q.scaled(sign);
  if (q.is_zero()) return p;
  const std::int64_t lo = std::min(p.low(), q.low());
  const std::int64_t hi = std::max(p.high(), q.high());
  std::vector<Int> out(static_cast<std::size_t>(hi - lo + 1));
  for (std::int64_t e = p.low(); e <= p.high(); ++e) out[static_cast<std::size_t>(e - lo)] += p.coeff(e);
  for (std::int64_t e = q.low(); e <= q.high(); ++e) {
    if (sign > 0) {
      out[static_cast<std::size_t>(e - lo)] += q.coeff(e);
    } else {
      out[static_cast<std::size_t>(e - lo)] -= q.coeff(e);
    }
  }
  return LaurentPoly(lo, std::move(out));
}

}  // namespace

LaurentPoly LaurentPoly::operator+(const LaurentPoly& other) const { return combine(*this, other, 1); }

LaurentPoly LaurentPoly::operator-(const LaurentPoly& other) const { return combine(*this, other, -1); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const {
  if (is_zero() || other.is_zero()) return {};
  std::vector<Int> out(coeffs_.size() + other.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  return LaurentPoly(offset_ + other.offset_, std::move(out));
}

LaurentPoly LaurentPoly::scaled(const Int& factor) const {
  std::vector<Int> out = coeffs_;
  for (Int& c : out) c *= factor;
  return LaurentPoly(offset_, std::move(out));
}

LaurentPoly LaurentPoly::divided_exactly(const Int& divisor) const {
  std::vector<Int> out = coeffs_;
  for (Int& c : out) {
    if (c % divisor != 0) {
      throw InternalError("coefficient " + c.str() + " not divisible by " + divisor.str());
    }
    c /= divisor;
  }
  return LaurentPoly(offset_, std::move(out));
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << " + ";
    os << coeffs_[i] << "*z^" << offset_ + static_cast<std::int64_t>(i);
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

LaurentPoly from_set(const FiniteIntSet& set) {
  if (set.empty()) return {};
  const std::int64_t lo = to_int64(set.min());
  const std::int64_t hi = to_int64(set.max());
  const Int span = Int(hi) - lo + 1;
  if (span > Int(enumeration_budget())) {
    throw BudgetError("generating function span " + span.str() + " exceeds the enumeration budget");
  }
  std::vector<Int> coeffs(static_cast<std::size_t>(hi - lo + 1));
  for (const Int& a : set) coeffs[static_cast<std::size_t>(to_int64(a) - lo)] = 1;
  return LaurentPoly(lo, std::move(coeffs));
}

LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }

LaurentPoly pow(const LaurentPoly& p, unsigned h) {
  if (h == 0) throw ValidationError("pow requires a positive exponent");
  LaurentPoly result;
  LaurentPoly base = p;
  bool have = false;
  while (h > 0) {
    if (h & 1U) {
      result = have ? result * base : base;
      have = true;
    }
    h >>= 1U;
    if (h > 0) base = base * base;
  }
  return result;
}

LaurentPoly substitute_square(const LaurentPoly& p) {
  if (p.is_zero()) return {};
  std::vector<Int> out(2 * p.coeffs().size() - 1);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) out[2 * i] = p.coeffs()[i];
  return LaurentPoly(2 * p.low(), std::move(out));
}

FiniteIntSet hth_root_01(const LaurentPoly& p, unsigned h) {
  if (h == 0) throw ValidationError("root order must be positive");
  if (p.is_zero()) return {};
  for (const Int& c : p.coeffs()) {
    if (c < 0) throw NoRootError("negative coefficient " + c.str());
  }
  const std::int64_t hh = h;
  if (p.low() % hh != 0) {
    throw NoRootError("lowest exponent " + std::to_string(p.low()) + " is not a multiple of " + std::to_string(h));
  }
  if (p.coeff(p.low()) != 1) {
    throw NoRootError("lowest coefficient is " + p.coeff(p.low()).str() + ", expected 1");
  }
  const std::int64_t degree = p.high() - p.low();
  if (degree % hh != 0) {
    throw NoRootError("degree span " + std::to_string(degree) + " is not a multiple of " + std::to_string(h));
  }
  const std::int64_t base = p.low() / hh;
  const auto root_degree = static_cast<std::size_t>(degree / hh);
  const std::vector<Int>& q = p.coeffs();  // q[0] == 1

  std::vector<Int> f(root_degree + 1);
  f[0] = 1;
  for (std::size_t n = 1; n <= root_degree; ++n) {
    // n h F_n = sum_{j=1..n} (j (h+1) - h n) Q_j F_{n-j}
    Int acc = 0;
    const std::size_t top = std::min(n, q.size() - 1);
    for (std::size_t j = 1; j <= top; ++j) {
      if (q[j] == 0 || f[n - j] == 0) continue;
      const Int weight = Int(j) * (hh + 1) - Int(hh) * n;
      acc += weight * q[j] * f[n - j];
    }
    const Int denom = Int(n) * hh;
    if (acc % denom != 0) {
      throw NoRootError("root coefficient at z^" + std::to_string(base + static_cast<std::int64_t>(n)) +
                        " is not an integer");
    }
    f[n] = acc / denom;
    if (f[n] != 0 && f[n] != 1) {
      throw NoRootError("root coefficient at z^" + std::to_string(base + static_cast<std::int64_t>(n)) + " is " +
                        f[n].str());
    }
  }

  std::vector<Int> elements;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 1) elements.emplace_back(base + static_cast<std::int64_t>(i));
  }
  FiniteIntSet root = FiniteIntSet::from_sorted(std::move(elements));
  if (pow(from_set(root), h) != p) {
    throw NoRootError("candidate root does not reproduce the polynomial");
  }
  return root;
}

}  // namespace repbasis
