#include "repbasis/repfn.hpp"

#include <algorithm>
#include <string>

#include "repbasis/errors.hpp"
#include "repbasis/polyring.hpp"

namespace repbasis {

std::string_view to_string(RepKind kind) {
  switch (kind) {
    case RepKind::ordered:
      return "ordered";
    case RepKind::unordered:
      return "unordered";
    case RepKind::restricted:
      return "restricted";
  }
  return "?";
}

RepKind parse_rep_kind(std::string_view text) {
  if (text == "ordered") return RepKind::ordered;
  if (text == "unordered") return RepKind::unordered;
  if (text == "restricted") return RepKind::restricted;
  throw ValidationError("unknown representation kind '" + std::string(text) + "'");
}

Window::Window(Int lo_, Int hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (lo > hi) throw ValidationError("empty window [" + lo.str() + ", " + hi.str() + "]");
}

namespace {

// Sorts by n and folds equal keys together, dropping zero totals.
std::vector<RepEntry> fold(std::vector<RepEntry> raw) {
  std::sort(raw.begin(), raw.end(), [](const RepEntry& a, const RepEntry& b) { return a.n < b.n; });
  std::vector<RepEntry> out;
  for (RepEntry& e : raw) {
    if (!out.empty() && out.back().n == e.n) {
      out.back().count += e.count;
    } else {
      out.push_back(std::move(e));
    }
  }
  std::erase_if(out, [](const RepEntry& e) { return e.count == 0; });
  return out;
}

}  // namespace

RepSupport::RepSupport(std::vector<RepEntry> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].count <= 0) throw ValidationError("support counts must be positive");
    if (i > 0 && !(entries_[i - 1].n < entries_[i].n)) {
      throw ValidationError("support entries must be strictly increasing");
    }
  }
}

RepSupport RepSupport::tally(std::vector<Int> sums) {
  std::sort(sums.begin(), sums.end());
  RepSupport out;
  for (Int& s : sums) {
    if (!out.entries_.empty() && out.entries_.back().n == s) {
      ++out.entries_.back().count;
    } else {
      out.entries_.push_back({std::move(s), 1});
    }
  }
  return out;
}

Int RepSupport::at(const Int& n) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), n,
                             [](const RepEntry& e, const Int& key) { return e.n < key; });
  if (it == entries_.end() || it->n != n) return 0;
  return it->count;
}

Int RepSupport::max_count() const {
  Int best = 0;
  for (const RepEntry& e : entries_) best = std::max(best, e.count);
  return best;
}

FiniteIntSet RepSupport::keys() const {
  std::vector<Int> out;
  out.reserve(entries_.size());
  for (const RepEntry& e : entries_) out.push_back(e.n);
  return FiniteIntSet::from_sorted(std::move(out));
}

RepTable::RepTable(Window window, std::vector<Int> counts)
    : window_(std::move(window)), counts_(std::move(counts)) {
  const Int length = window_.length();
  if (length > Int(enumeration_budget())) {
    throw BudgetError("window of length " + length.str() + " exceeds the enumeration budget");
  }
  if (Int(counts_.size()) != length) {
    throw ValidationError("table has " + std::to_string(counts_.size()) + " counts for a window of length " +
                          length.str());
  }
  for (const Int& c : counts_) {
    if (c < 0) throw ValidationError("representation counts must be nonnegative");
  }
}

RepTable RepTable::zeros(const Window& window) {
  if (window.length() > Int(enumeration_budget())) {
    throw BudgetError("window of length " + window.length().str() + " exceeds the enumeration budget");
  }
  return RepTable(window, std::vector<Int>(window.length().convert_to<std::size_t>()));
}

RepTable RepTable::restrict(const RepSupport& support, const Window& window) {
  RepTable out = zeros(window);
  auto it = std::lower_bound(support.entries().begin(), support.entries().end(), window.lo,
                             [](const RepEntry& e, const Int& key) { return e.n < key; });
  for (; it != support.entries().end() && it->n <= window.hi; ++it) {
    out.counts_[(it->n - window.lo).convert_to<std::size_t>()] = it->count;
  }
  return out;
}

Int RepTable::at(const Int& n) const {
  if (!window_.contains(n)) throw ValidationError("n = " + n.str() + " outside the table window");
  return counts_[(n - window_.lo).convert_to<std::size_t>()];
}

namespace repfn {

FiniteIntSet sumset(unsigned h, const FiniteIntSet& set) {
  if (h == 0) return FiniteIntSet{0};
  FiniteIntSet acc = set;
  for (unsigned round = 1; round < h; ++round) {
    std::vector<Int> sums;
    sums.reserve(acc.size() * set.size());
    for (const Int& s : acc) {
      for (const Int& a : set) sums.push_back(s + a);
    }
    acc = FiniteIntSet(std::move(sums));
  }
  return acc;
}

namespace {

// Visits every weakly (strict = false) or strictly increasing index tuple of
// length h, passing the element sum.
template <typename Emit>
void for_each_increasing(std::span<const Int> elems, unsigned h, bool strict, Emit&& emit) {
  std::vector<std::size_t> idx(h);
  std::vector<Int> partial(h + 1);
  const std::size_t n = elems.size();
  if (n == 0 || (strict && h > n)) return;
  // depth-first over idx, partial[d] = sum of the first d chosen elements
  std::size_t depth = 0;
  idx[0] = 0;
  while (true) {
    if (idx[depth] >= n || (strict && n - idx[depth] < h - depth)) {
      if (depth == 0) return;
      --depth;
      ++idx[depth];
      continue;
    }
    partial[depth + 1] = partial[depth] + elems[idx[depth]];
    if (depth + 1 == h) {
      emit(partial[h]);
      ++idx[depth];
    } else {
      idx[depth + 1] = strict ? idx[depth] + 1 : idx[depth];
      ++depth;
    }
  }
}

RepSupport ordered_support(const FiniteIntSet& set, unsigned h) {
  std::span<const Int> elems = set.elements();
  if (h == 1) {
    std::vector<RepEntry> out;
    for (const Int& a : elems) out.push_back({a, 1});
    return RepSupport(std::move(out));
  }
  if (h == 2) {
    std::vector<RepEntry> raw;
    raw.reserve(elems.size() * (elems.size() + 1) / 2);
    for (std::size_t i = 0; i < elems.size(); ++i) {
      raw.push_back({2 * elems[i], 1});
      for (std::size_t j = i + 1; j < elems.size(); ++j) raw.push_back({elems[i] + elems[j], 2});
    }
    return RepSupport(fold(std::move(raw)));
  }
  std::vector<RepEntry> current;
  for (const Int& a : elems) current.push_back({a, 1});
  for (unsigned round = 1; round < h; ++round) {
    std::vector<RepEntry> next;
    next.reserve(current.size() * elems.size());
    for (const RepEntry& e : current) {
      for (const Int& a : elems) next.push_back({e.n + a, e.count});
    }
    current = fold(std::move(next));
  }
  return RepSupport(std::move(current));
}

}  // namespace

RepSupport support(const FiniteIntSet& set, unsigned h, RepKind kind) {
  if (h == 0) throw ValidationError("order h must be positive");
  if (kind == RepKind::ordered) return ordered_support(set, h);
  std::vector<Int> sums;
  for_each_increasing(set.elements(), h, kind == RepKind::restricted,
                      [&sums](const Int& s) { sums.push_back(s); });
  return RepSupport::tally(std::move(sums));
}

RepTable ordered(const FiniteIntSet& set, unsigned h, const Window& window) {
  if (h == 0) throw ValidationError("order h must be positive");
  if (h != 2) return RepTable::restrict(ordered_support(set, h), window);
  // Pairs meet in the middle: for each n and each a, look up n - a.
  RepTable out = RepTable::zeros(window);
  std::vector<Int> counts(out.counts().size());
  if (!set.empty()) {
    const Int lo = std::max(window.lo, Int(2 * set.min()));
    const Int hi = std::min(window.hi, Int(2 * set.max()));
    for (Int n = lo; n <= hi; ++n) {
      Int c = 0;
      for (const Int& a : set) {
        if (set.contains(n - a)) ++c;
      }
      counts[(n - window.lo).convert_to<std::size_t>()] = c;
    }
  }
  return RepTable(window, std::move(counts));
}

RepTable unordered(const FiniteIntSet& set, unsigned h, const Window& window) {
  return RepTable::restrict(support(set, h, RepKind::unordered), window);
}

RepTable restricted(const FiniteIntSet& set, unsigned h, const Window& window) {
  return RepTable::restrict(support(set, h, RepKind::restricted), window);
}

RepTable table(const FiniteIntSet& set, unsigned h, RepKind kind, const Window& window) {
  switch (kind) {
    case RepKind::ordered:
      return ordered(set, h, window);
    case RepKind::unordered:
      return unordered(set, h, window);
    case RepKind::restricted:
      return restricted(set, h, window);
  }
  throw InternalError("unreachable RepKind");
}

namespace {

bool matches(const RepTable& t, const LaurentPoly& p) {
  for (Int n = t.lo(); n <= t.hi(); ++n) {
    const Int expected = fits_int64(n) ? p.coeff(n.convert_to<std::int64_t>()) : Int(0);
    if (t.at(n) != expected) return false;
  }
  return true;
}

}  // namespace

GfCheck gf_check(const FiniteIntSet& set, unsigned h, const Window& window) {
  if (h == 0) throw ValidationError("order h must be positive");
  const LaurentPoly g = from_set(set);
  GfCheck out;
  out.ordered = matches(ordered(set, h, window), pow(g, h));
  if (h == 2) {
    const LaurentPoly square = g * g;
    const LaurentPoly diagonal = substitute_square(g);
    out.unordered = matches(unordered(set, 2, window), (square + diagonal).divided_exactly(2));
    out.restricted = matches(restricted(set, 2, window), (square - diagonal).divided_exactly(2));
  }
  return out;
}

FiniteIntSet reconstruct_ordered(const RepTable& table, unsigned h) {
  if (h == 0) throw ValidationError("order h must be positive");
  const auto& counts = table.counts();
  const bool all_zero = std::all_of(counts.begin(), counts.end(), [](const Int& c) { return c == 0; });
  if (all_zero) return {};
  if (counts.front() > 1) {
    throw TruncationError("table value " + counts.front().str() + " at the lower window edge " + table.lo().str() +
                          " implies support below the window");
  }
  if (counts.back() > 1) {
    throw TruncationError("table value " + counts.back().str() + " at the upper window edge " + table.hi().str() +
                          " implies support above the window");
  }
  return hth_root_01(LaurentPoly(to_int64(table.lo()), counts), h);
}

namespace {

DiracReport summarize(RepTable values, bool finite) {
  const Int length = values.window().length();
  if (length < 3) throw ValidationError("dirac diagnostic needs a window of length >= 3");
  DiracReport report{.finite = finite,
                     .tail_constant = true,
                     .tail_start = values.lo() + length / 2,
                     .tail_value = std::nullopt,
                     .values = std::move(values)};
  const Int first = report.values.at(report.tail_start);
  for (Int n = report.tail_start; n <= report.values.hi(); ++n) {
    if (report.values.at(n) != first) {
      report.tail_constant = false;
      break;
    }
  }
  if (report.tail_constant) report.tail_value = first;
  return report;
}

}  // namespace

DiracReport dirac_diagnostic(const FiniteIntSet& set, const Window& window) {
  return summarize(unordered(set, 2, window), true);
}

DiracReport dirac_diagnostic(const EventuallyPeriodicSet& set, const Window& window) {
  if (!set.is_infinite()) return dirac_diagnostic(set.head(), window);
  // Pairs summing to at most hi use elements no larger than hi - min A.
  const Int lowest = set.min();
  const FiniteIntSet prefix = set.materialize(lowest, window.hi - lowest);
  return summarize(unordered(prefix, 2, window), false);
}

}  // namespace repfn
}  // namespace repbasis
