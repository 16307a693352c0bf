#include "repbasis/intset.hpp"

#include <algorithm>
#include <ostream>

#include "repbasis/errors.hpp"

namespace repbasis {

FiniteIntSet::FiniteIntSet(std::initializer_list<Int> values)
    : FiniteIntSet(std::vector<Int>(values)) {}

FiniteIntSet::FiniteIntSet(std::vector<Int> values) : elements_(std::move(values)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

FiniteIntSet FiniteIntSet::from_sorted(std::vector<Int> values) {
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (!(values[i - 1] < values[i])) {
      throw ValidationError("set elements must be strictly increasing (" + values[i - 1].str() +
                            " then " + values[i].str() + ")");
    }
  }
  FiniteIntSet set;
  set.elements_ = std::move(values);
  return set;
}

FiniteIntSet FiniteIntSet::interval(const Int& lo, const Int& hi) {
  std::vector<Int> values;
  if (lo <= hi) {
    const Int span = hi - lo + 1;
    if (span > Int(enumeration_budget())) {
      throw BudgetError("interval [" + lo.str() + ", " + hi.str() + "] exceeds the enumeration budget");
    }
    values.reserve(span.convert_to<std::size_t>());
    for (Int n = lo; n <= hi; ++n) values.push_back(n);
  }
  FiniteIntSet set;
  set.elements_ = std::move(values);
  return set;
}

const Int& FiniteIntSet::min() const {
  if (empty()) throw ValidationError("min of empty set");
  return elements_.front();
}

const Int& FiniteIntSet::max() const {
  if (empty()) throw ValidationError("max of empty set");
  return elements_.back();
}

Int FiniteIntSet::max_abs() const {
  if (empty()) return 0;
  return std::max(abs(elements_.front()), abs(elements_.back()));
}

bool FiniteIntSet::contains(const Int& n) const {
  return std::binary_search(elements_.begin(), elements_.end(), n);
}

FiniteIntSet FiniteIntSet::unite(const FiniteIntSet& other) const {
  std::vector<Int> merged;
  merged.reserve(size() + other.size());
  std::set_union(begin(), end(), other.begin(), other.end(), std::back_inserter(merged));
  FiniteIntSet set;
  set.elements_ = std::move(merged);
  return set;
}

bool FiniteIntSet::intersects(const FiniteIntSet& other) const {
  auto a = begin();
  auto b = other.begin();
  while (a != end() && b != other.end()) {
    if (*a < *b) {
      ++a;
    } else if (*b < *a) {
      ++b;
    } else {
      return true;
    }
  }
  return false;
}

bool FiniteIntSet::is_subset_of(const FiniteIntSet& other) const {
  return std::includes(other.begin(), other.end(), begin(), end());
}

std::ostream& operator<<(std::ostream& os, const FiniteIntSet& set) {
  os << '{';
  bool first = true;
  for (const Int& a : set) {
    if (!first) os << ", ";
    os << a;
    first = false;
  }
  return os << '}';
}

EventuallyPeriodicSet::EventuallyPeriodicSet(Int n0, std::int64_t m,
                                             std::vector<std::int64_t> residues,
                                             FiniteIntSet head)
    : n0_(std::move(n0)), m_(m), residues_(std::move(residues)), head_(std::move(head)) {
  if (m_ < 1) throw ValidationError("modulus must be positive");
  std::sort(residues_.begin(), residues_.end());
  residues_.erase(std::unique(residues_.begin(), residues_.end()), residues_.end());
  for (std::int64_t t : residues_) {
    if (t < 0 || t >= m_) {
      throw ValidationError("residue " + std::to_string(t) + " outside [0, " + std::to_string(m_) + ")");
    }
  }
  if (!head_.empty() && head_.max() > n0_) {
    throw ValidationError("head element " + head_.max().str() + " exceeds n0 = " + n0_.str());
  }
}

EventuallyPeriodicSet EventuallyPeriodicSet::naturals() {
  return EventuallyPeriodicSet(-1, 1, {0}, {});
}

bool EventuallyPeriodicSet::contains(const Int& n) const {
  if (n <= n0_) return head_.contains(n);
  const auto r = floor_mod(n, m_).convert_to<std::int64_t>();
  return std::binary_search(residues_.begin(), residues_.end(), r);
}

Int EventuallyPeriodicSet::min() const {
  if (!head_.empty()) return head_.min();
  if (residues_.empty()) throw ValidationError("min of empty set");
  const Int first = n0_ + 1;
  Int best;
  bool have = false;
  for (std::int64_t t : residues_) {
    Int c = first + floor_mod(Int(t) - first, m_);
    if (!have || c < best) {
      best = c;
      have = true;
    }
  }
  return best;
}

FiniteIntSet EventuallyPeriodicSet::materialize(const Int& lo, const Int& hi) const {
  std::vector<Int> values;
  for (const Int& a : head_) {
    if (a >= lo && a <= hi) values.push_back(a);
  }
  const Int start = std::max(lo, Int(n0_ + 1));
  if (start <= hi && !residues_.empty()) {
    if (hi - start + 1 > Int(enumeration_budget())) {
      throw BudgetError("materialization window exceeds the enumeration budget");
    }
    for (Int n = start; n <= hi; ++n) {
      if (contains(n)) values.push_back(n);
    }
  }
  return FiniteIntSet::from_sorted(std::move(values));
}

Int count(const FiniteIntSet& set, const Int& y, const Int& x) {
  if (y > x) return 0;
  auto lo = std::lower_bound(set.begin(), set.end(), y);
  auto hi = std::upper_bound(set.begin(), set.end(), x);
  return Int(hi - lo);
}

Int count(const EventuallyPeriodicSet& set, const Int& y, const Int& x) {
  if (y > x) return 0;
  Int total = count(set.head(), y, std::min(x, set.n0()));
  const Int lo = std::max(y, Int(set.n0() + 1));
  if (lo > x) return total;
  const Int m = set.modulus();
  for (std::int64_t t : set.residues()) {
    // #{ n in [lo, x] : n = t mod m }
    total += floor_div(x - t, m) - floor_div(lo - 1 - t, m);
  }
  return total;
}

namespace {

template <typename Set>
DensityProfile profile(const Set& set, std::span<const Int> xs) {
  if (xs.empty()) throw ValidationError("density profile needs at least one sample point");
  DensityProfile out;
  out.samples.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] < 1) throw ValidationError("sample points must be positive");
    if (i > 0 && !(xs[i - 1] < xs[i])) throw ValidationError("sample points must be strictly increasing");
    const Int c = count(set, -xs[i], xs[i]);
    out.samples.push_back({xs[i], Rational(c, 2 * xs[i] + 1)});
  }
  return out;
}

}  // namespace

DensityProfile density_profile(const FiniteIntSet& set, std::span<const Int> xs) {
  return profile(set, xs);
}

DensityProfile density_profile(const EventuallyPeriodicSet& set, std::span<const Int> xs) {
  return profile(set, xs);
}

FiniteIntSet shift(const FiniteIntSet& set, const Int& x) {
  std::vector<Int> out;
  out.reserve(set.size());
  for (const Int& a : set) out.push_back(a + x);
  return FiniteIntSet::from_sorted(std::move(out));
}

FiniteIntSet dilate(const FiniteIntSet& set, const Int& h) {
  if (h < 1) throw ValidationError("dilation factor must be positive");
  std::vector<Int> out;
  out.reserve(set.size());
  for (const Int& a : set) out.push_back(a * h);
  return FiniteIntSet::from_sorted(std::move(out));
}

}  // namespace repbasis
