#include "repbasis/oracle.hpp"

#include <map>

#include "repbasis/errors.hpp"

namespace repbasis::oracle {

void check_budget(std::size_t set_size, unsigned h) {
  const std::uint64_t budget = enumeration_budget();
  Int total = 1;
  for (unsigned i = 0; i < h; ++i) {
    total *= set_size;
    if (total > budget) {
      throw BudgetError("oracle enumeration of " + std::to_string(set_size) + "^" + std::to_string(h) +
                        " tuples exceeds the budget of " + std::to_string(budget));
    }
  }
}

namespace {

enum class Filter { none, weakly_increasing, strictly_increasing, pairwise_distinct };

bool accept(const std::vector<std::size_t>& idx, Filter filter) {
  switch (filter) {
    case Filter::none:
      return true;
    case Filter::weakly_increasing:
      for (std::size_t i = 1; i < idx.size(); ++i) {
        if (idx[i - 1] > idx[i]) return false;
      }
      return true;
    case Filter::strictly_increasing:
      for (std::size_t i = 1; i < idx.size(); ++i) {
        if (idx[i - 1] >= idx[i]) return false;
      }
      return true;
    case Filter::pairwise_distinct:
      for (std::size_t i = 0; i < idx.size(); ++i) {
        for (std::size_t j = i + 1; j < idx.size(); ++j) {
          if (idx[i] == idx[j]) return false;
        }
      }
      return true;
  }
  return false;
}

// Odometer over all index tuples in {0..n-1}^h.
template <typename Visit>
void for_each_tuple(std::size_t n, unsigned h, Visit&& visit) {
  if (n == 0 || h == 0) return;
  std::vector<std::size_t> idx(h, 0);
  while (true) {
    visit(idx);
    std::size_t pos = h;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < n) break;
      idx[pos] = 0;
      if (pos == 0) return;
    }
  }
}

std::map<Int, Int> tally(const FiniteIntSet& set, unsigned h, Filter filter) {
  if (h == 0) throw ValidationError("order h must be positive");
  check_budget(set.size(), h);
  std::map<Int, Int> counts;
  for_each_tuple(set.size(), h, [&](const std::vector<std::size_t>& idx) {
    if (!accept(idx, filter)) return;
    Int sum = 0;
    for (std::size_t i : idx) sum += set[i];
    ++counts[sum];
  });
  return counts;
}

RepTable to_table(const std::map<Int, Int>& counts, const Window& window) {
  std::vector<Int> out;
  for (Int n = window.lo; n <= window.hi; ++n) {
    auto it = counts.find(n);
    out.push_back(it == counts.end() ? Int(0) : it->second);
  }
  return RepTable(window, std::move(out));
}

RepSupport to_support(const std::map<Int, Int>& counts) {
  std::vector<RepEntry> entries;
  for (const auto& [n, c] : counts) entries.push_back({n, c});
  return RepSupport(std::move(entries));
}

}  // namespace

RepTable enum_ordered(const FiniteIntSet& set, unsigned h, const Window& window) {
  return to_table(tally(set, h, Filter::none), window);
}

RepTable enum_unordered(const FiniteIntSet& set, unsigned h, const Window& window) {
  return to_table(tally(set, h, Filter::weakly_increasing), window);
}

RepTable enum_restricted(const FiniteIntSet& set, unsigned h, const Window& window) {
  return to_table(tally(set, h, Filter::strictly_increasing), window);
}

RepTable enum_ordered_restricted(const FiniteIntSet& set, unsigned h, const Window& window) {
  return to_table(tally(set, h, Filter::pairwise_distinct), window);
}

RepSupport enum_ordered_support(const FiniteIntSet& set, unsigned h) {
  return to_support(tally(set, h, Filter::none));
}

RepSupport enum_unordered_support(const FiniteIntSet& set, unsigned h) {
  return to_support(tally(set, h, Filter::weakly_increasing));
}

RepSupport enum_restricted_support(const FiniteIntSet& set, unsigned h) {
  return to_support(tally(set, h, Filter::strictly_increasing));
}

RepSupport enum_linear_form(const Int& u1, const Int& u2, const FiniteIntSet& first,
                            const FiniteIntSet& second) {
  check_budget(first.size() * second.size(), 1);
  std::map<Int, Int> counts;
  for (const Int& a1 : first) {
    for (const Int& a2 : second) ++counts[u1 * a1 + u2 * a2];
  }
  return to_support(counts);
}

std::vector<Int> enum_mod(std::int64_t m, const std::vector<std::int64_t>& members, unsigned h) {
  if (m < 1) throw ValidationError("modulus must be positive");
  if (h == 0) throw ValidationError("order h must be positive");
  check_budget(members.size(), h);
  std::vector<Int> counts(static_cast<std::size_t>(m));
  for_each_tuple(members.size(), h, [&](const std::vector<std::size_t>& idx) {
    if (!accept(idx, Filter::weakly_increasing)) return;
    std::int64_t sum = 0;
    for (std::size_t i : idx) sum += members[i];
    ++counts[static_cast<std::size_t>(((sum % m) + m) % m)];
  });
  return counts;
}

std::vector<std::vector<Int>> enum_multisets_up_to(const FiniteIntSet& set, unsigned h) {
  std::vector<std::vector<Int>> out;
  for (unsigned r = 1; r <= h; ++r) {
    check_budget(set.size(), r);
    for_each_tuple(set.size(), r, [&](const std::vector<std::size_t>& idx) {
      if (!accept(idx, Filter::weakly_increasing)) return;
      std::vector<Int> multiset;
      for (std::size_t i : idx) multiset.push_back(set[i]);
      out.push_back(std::move(multiset));
    });
  }
  return out;
}

FastPaths FastPaths::library() {
  return {.ordered = &repfn::ordered, .unordered = &repfn::unordered, .restricted = &repfn::restricted};
}

EquivalenceReport equivalence_suite(const FiniteIntSet& set, unsigned h, const Window& window,
                                    const FastPaths& fast) {
  EquivalenceReport report;
  auto compare = [&](const std::string& mode, const RepTable& got, const RepTable& want) {
    if (report.mismatch) return;
    for (Int n = window.lo; n <= window.hi; ++n) {
      if (got.at(n) != want.at(n)) {
        report.mismatch = Mismatch{mode, n, got.at(n), want.at(n)};
        return;
      }
    }
  };
  compare("ordered", fast.ordered(set, h, window), enum_ordered(set, h, window));
  compare("unordered", fast.unordered(set, h, window), enum_unordered(set, h, window));
  const RepTable restricted_fast = fast.restricted(set, h, window);
  compare("restricted", restricted_fast, enum_restricted(set, h, window));

  // Ordered tuples of distinct elements are exactly h! orderings of each
  // strictly increasing tuple.
  Int factorial = 1;
  for (unsigned i = 2; i <= h; ++i) factorial *= i;
  std::vector<Int> scaled;
  for (const Int& c : restricted_fast.counts()) scaled.push_back(c * factorial);
  compare("ordered-restricted", RepTable(window, std::move(scaled)), enum_ordered_restricted(set, h, window));
  return report;
}

}  // namespace repbasis::oracle
