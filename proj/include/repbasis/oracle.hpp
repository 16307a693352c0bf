#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "repbasis/integer.hpp"
#include "repbasis/intset.hpp"
#include "repbasis/repfn.hpp"

// Brute-force witnesses. Everything in this namespace enumerates the literal
// defining sets (all tuples of A^h, filtered by the ordering condition) and
// must not call into repfn, polyring or any other fast path.
namespace repbasis::oracle {

/// Throws BudgetError when |A|^h exceeds the enumeration budget
/// (REPBASIS_BUDGET, default 1e8).
void check_budget(std::size_t set_size, unsigned h);

RepTable enum_ordered(const FiniteIntSet& set, unsigned h, const Window& window);
RepTable enum_unordered(const FiniteIntSet& set, unsigned h, const Window& window);
RepTable enum_restricted(const FiniteIntSet& set, unsigned h, const Window& window);
/// Ordered tuples with pairwise distinct entries.
RepTable enum_ordered_restricted(const FiniteIntSet& set, unsigned h, const Window& window);

/// Full-support variants: every n with a nonzero count.
RepSupport enum_ordered_support(const FiniteIntSet& set, unsigned h);
RepSupport enum_unordered_support(const FiniteIntSet& set, unsigned h);
RepSupport enum_restricted_support(const FiniteIntSet& set, unsigned h);

/// Pairs (a1, a2) in A1 x A2 with u1 a1 + u2 a2 = n, for every n hit.
RepSupport enum_linear_form(const Int& u1, const Int& u2, const FiniteIntSet& first,
                            const FiniteIntSet& second);

/// Unordered h-multisets of residues summing to each x mod m; size m.
std::vector<Int> enum_mod(std::int64_t m, const std::vector<std::int64_t>& members, unsigned h);

/// Every multiset of size 1..h drawn from A, as sorted element lists.
std::vector<std::vector<Int>> enum_multisets_up_to(const FiniteIntSet& set, unsigned h);

/// The fast paths checked by equivalence_suite. Defaults to repfn; tests
/// substitute doubles to exercise the mismatch reporting.
struct FastPaths {
  std::function<RepTable(const FiniteIntSet&, unsigned, const Window&)> ordered;
  std::function<RepTable(const FiniteIntSet&, unsigned, const Window&)> unordered;
  std::function<RepTable(const FiniteIntSet&, unsigned, const Window&)> restricted;

  static FastPaths library();
};

struct Mismatch {
  std::string mode;
  Int n;
  Int fast;
  Int expected;
};

struct EquivalenceReport {
  std::optional<Mismatch> mismatch;

  bool clean() const { return !mismatch.has_value(); }
};

/// Compares ordered, unordered and restricted fast paths against the
/// enumerators, then checks ordered-restricted == h! * restricted. Returns the
/// first mismatch found.
EquivalenceReport equivalence_suite(const FiniteIntSet& set, unsigned h, const Window& window,
                                    const FastPaths& fast = FastPaths::library());

}  // namespace repbasis::oracle
