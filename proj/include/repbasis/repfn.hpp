#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "repbasis/integer.hpp"
#include "repbasis/intset.hpp"

namespace repbasis {

/// Which tuples are counted: all h-tuples, weakly increasing ones, or
/// strictly increasing ones.
enum class RepKind { ordered, unordered, restricted };

std::string_view to_string(RepKind kind);
/// Accepts "ordered", "unordered", "restricted".
RepKind parse_rep_kind(std::string_view text);

/// Closed integer interval [lo, hi], lo <= hi.
struct Window {
  Int lo;
  Int hi;

  Window(Int lo_, Int hi_);
  Int length() const { return hi - lo + 1; }
  bool contains(const Int& n) const { return lo <= n && n <= hi; }
};

struct RepEntry {
  Int n;
  Int count;

  friend bool operator==(const RepEntry&, const RepEntry&) = default;
};

/// A representation function of a finite set stored over its full support:
/// entries sorted by n with nonzero counts only.
class RepSupport {
 public:
  RepSupport() = default;
  /// Entries must be strictly increasing in n with positive counts.
  explicit RepSupport(std::vector<RepEntry> entries);
  /// Sorts raw sums and tallies multiplicities.
  static RepSupport tally(std::vector<Int> sums);

  Int at(const Int& n) const;
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  const std::vector<RepEntry>& entries() const noexcept { return entries_; }
  Int max_count() const;
  /// The support as a set (the sumset, for representation functions).
  FiniteIntSet keys() const;

  friend bool operator==(const RepSupport&, const RepSupport&) = default;

 private:
  std::vector<RepEntry> entries_;
};

/// Exact counts n -> count for every n in a window.
class RepTable {
 public:
  /// Throws BudgetError if the window is longer than the enumeration budget.
  RepTable(Window window, std::vector<Int> counts);
  static RepTable zeros(const Window& window);
  static RepTable restrict(const RepSupport& support, const Window& window);

  const Int& lo() const noexcept { return window_.lo; }
  const Int& hi() const noexcept { return window_.hi; }
  const Window& window() const noexcept { return window_; }
  const std::vector<Int>& counts() const noexcept { return counts_; }
  Int at(const Int& n) const;

  friend bool operator==(const RepTable& a, const RepTable& b) {
    return a.window_.lo == b.window_.lo && a.window_.hi == b.window_.hi && a.counts_ == b.counts_;
  }

 private:
  Window window_;
  std::vector<Int> counts_;
};

namespace repfn {

/// hA; 0A = {0}.
FiniteIntSet sumset(unsigned h, const FiniteIntSet& set);

/// Full support of R_{A,h}, r_{A,h} or the restricted count, h >= 1.
///
/// Ordered counts use pair enumeration for h = 2 and iterated sparse
/// convolution for h >= 3. Unordered and restricted counts enumerate
/// weakly (strictly) increasing index tuples over the sorted elements,
/// carrying partial sums down the recursion.
RepSupport support(const FiniteIntSet& set, unsigned h, RepKind kind);

RepTable ordered(const FiniteIntSet& set, unsigned h, const Window& window);
RepTable unordered(const FiniteIntSet& set, unsigned h, const Window& window);
RepTable restricted(const FiniteIntSet& set, unsigned h, const Window& window);
RepTable table(const FiniteIntSet& set, unsigned h, RepKind kind, const Window& window);

/// Per-identity outcome of the generating-function cross-check. The
/// unordered and restricted identities only apply for h = 2 and are
/// reported as passing otherwise.
struct GfCheck {
  bool ordered = true;
  bool unordered = true;
  bool restricted = true;

  bool all() const { return ordered && unordered && restricted; }
};

GfCheck gf_check(const FiniteIntSet& set, unsigned h, const Window& window);

/// Inverts the ordered representation function of order h.
///
/// Values outside the window are taken to be zero. The extreme nonzero
/// values of a genuine R_{A,h} are 1 (at h min A and h max A); a nonzero
/// value other than 1 on a window edge therefore means the support runs
/// past the window, and TruncationError is raised. Otherwise delegates to
/// hth_root_01 and propagates NoRootError.
FiniteIntSet reconstruct_ordered(const RepTable& table, unsigned h);

struct DiracReport {
  bool finite = false;         // finite sets are exempt
  bool tail_constant = false;  // r_{A,2} constant on the upper half of the window
  Int tail_start;
  std::optional<Int> tail_value;
  RepTable values;

  /// True when the observation is as expected for the set: a finite set, or a
  /// tail that is not constant.
  bool consistent() const { return finite || !tail_constant; }
  /// True when the non-constancy report fires for an infinite set.
  bool fires() const { return !finite && !tail_constant; }
};

DiracReport dirac_diagnostic(const FiniteIntSet& set, const Window& window);
DiracReport dirac_diagnostic(const EventuallyPeriodicSet& set, const Window& window);

}  // namespace repfn
}  // namespace repbasis
