#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "repbasis/integer.hpp"

namespace repbasis {

/// A finite set of integers stored as a strictly increasing sequence.
///
/// Every set handled by the library (bases under construction, heads of
/// periodic sets, sumsets, images of linear forms) is a FiniteIntSet. The
/// constructors sort and deduplicate; `from_sorted` trusts nothing and
/// rejects input that is not strictly increasing.
class FiniteIntSet {
 public:
  using value_type = Int;
  using const_iterator = std::vector<Int>::const_iterator;

  FiniteIntSet() = default;
  FiniteIntSet(std::initializer_list<Int> values);
  explicit FiniteIntSet(std::vector<Int> values);

  /// Throws ValidationError unless `values` is strictly increasing.
  static FiniteIntSet from_sorted(std::vector<Int> values);
  /// The integers lo, lo+1, ..., hi (empty when lo > hi).
  static FiniteIntSet interval(const Int& lo, const Int& hi);

  bool empty() const noexcept { return elements_.empty(); }
  std::size_t size() const noexcept { return elements_.size(); }
  const Int& min() const;
  const Int& max() const;
  /// max |a| over the set; zero for the empty set.
  Int max_abs() const;
  bool contains(const Int& n) const;

  const_iterator begin() const noexcept { return elements_.begin(); }
  const_iterator end() const noexcept { return elements_.end(); }
  std::span<const Int> elements() const noexcept { return elements_; }
  const Int& operator[](std::size_t i) const { return elements_[i]; }

  /// Set union.
  FiniteIntSet unite(const FiniteIntSet& other) const;
  bool intersects(const FiniteIntSet& other) const;
  bool is_subset_of(const FiniteIntSet& other) const;

  friend bool operator==(const FiniteIntSet&, const FiniteIntSet&) = default;

 private:
  std::vector<Int> elements_;
};

std::ostream& operator<<(std::ostream& os, const FiniteIntSet& set);

/// A set that is finite up to `n0` and a union of residue classes beyond it:
///
///   head ∪ { c > n0 : c mod m ∈ residues }.
///
/// The periodic tail runs to +infinity only.
class EventuallyPeriodicSet {
 public:
  EventuallyPeriodicSet(Int n0, std::int64_t m, std::vector<std::int64_t> residues,
                        FiniteIntSet head);

  /// The nonnegative integers.
  static EventuallyPeriodicSet naturals();

  const Int& n0() const noexcept { return n0_; }
  std::int64_t modulus() const noexcept { return m_; }
  std::span<const std::int64_t> residues() const noexcept { return residues_; }
  const FiniteIntSet& head() const noexcept { return head_; }

  bool contains(const Int& n) const;
  /// False when the residue set is empty.
  bool is_infinite() const noexcept { return !residues_.empty(); }
  /// Smallest element. Throws ValidationError for the empty set.
  Int min() const;
  bool empty() const noexcept { return head_.empty() && residues_.empty(); }

  /// Elements in [lo, hi] by enumeration of the window.
  FiniteIntSet materialize(const Int& lo, const Int& hi) const;

  friend bool operator==(const EventuallyPeriodicSet&, const EventuallyPeriodicSet&) = default;

 private:
  Int n0_;
  std::int64_t m_;
  std::vector<std::int64_t> residues_;
  FiniteIntSet head_;
};

/// card{ a in A : y <= a <= x }.
Int count(const FiniteIntSet& set, const Int& y, const Int& x);
/// Closed form: head contribution plus per-residue arithmetic progression counts.
Int count(const EventuallyPeriodicSet& set, const Int& y, const Int& x);

struct DensitySample {
  Int x;
  Rational ratio;
};

/// Window estimates A(-x, x) / (2x + 1) at increasing sample points.
struct DensityProfile {
  std::vector<DensitySample> samples;
};

DensityProfile density_profile(const FiniteIntSet& set, std::span<const Int> xs);
DensityProfile density_profile(const EventuallyPeriodicSet& set, std::span<const Int> xs);

/// { a + x : a in A }.
FiniteIntSet shift(const FiniteIntSet& set, const Int& x);
/// { h a : a in A }, h >= 1.
FiniteIntSet dilate(const FiniteIntSet& set, const Int& h);

}  // namespace repbasis
