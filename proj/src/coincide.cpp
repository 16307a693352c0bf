#include "repbasis/coincide.hpp"

#include <algorithm>

#include "repbasis/errors.hpp"

namespace repbasis {

void CoincidencePair::validate() const {
  if (m < 1) throw ValidationError("modulus must be positive");
  for (std::size_t i = 0; i < residues.size(); ++i) {
    const std::int64_t t = residues[i];
    if (t < 0 || t >= m) throw ValidationError("residue " + std::to_string(t) + " outside [0, m)");
    if (i > 0 && residues[i - 1] >= t) throw ValidationError("residues must be strictly increasing");
  }
  for (const FiniteIntSet* head : {&astar, &bstar}) {
    if (!head->empty() && (head->min() < 0 || head->max() > n0)) {
      throw ValidationError("head elements must lie in [0, n0]");
    }
  }
}

namespace {

std::vector<std::int64_t> residue_histogram(const FiniteIntSet& head, const std::vector<std::int64_t>& residues,
                                            std::int64_t m) {
  std::vector<std::int64_t> hist(static_cast<std::size_t>(m), 0);
  for (const Int& a : head) {
    const std::int64_t r = to_int64(floor_mod(a, m));
    for (std::int64_t t : residues) ++hist[static_cast<std::size_t>((r + t) % m)];
  }
  return hist;
}

std::vector<std::int64_t> to_int64s(const FiniteIntSet& set) {
  std::vector<std::int64_t> out;
  out.reserve(set.size());
  for (const Int& a : set) out.push_back(to_int64(a));
  return out;
}

// counts[n - lo] = number of (i <= j) with e_i + e_j = n, weighted 2 for i < j
// when `ordered` is set.
std::vector<std::int64_t> pair_counts(const std::vector<std::int64_t>& elems, std::int64_t lo, std::int64_t hi,
                                      bool ordered) {
  std::vector<std::int64_t> counts(static_cast<std::size_t>(hi - lo + 1), 0);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = i; j < elems.size(); ++j) {
      const std::int64_t s = elems[i] + elems[j];
      if (s > hi) break;
      if (s >= lo) counts[static_cast<std::size_t>(s - lo)] += (ordered && i != j) ? 2 : 1;
    }
  }
  return counts;
}

}  // namespace

bool check_congruence(const CoincidencePair& pair) {
  pair.validate();
  return residue_histogram(pair.astar, pair.residues, pair.m) ==
         residue_histogram(pair.bstar, pair.residues, pair.m);
}

PeriodicPair synthesize_pair(const CoincidencePair& pair) {
  if (!check_congruence(pair)) throw CongruenceError("A* + T and B* + T differ modulo m");
  return {EventuallyPeriodicSet(pair.n0, pair.m, pair.residues, pair.astar),
          EventuallyPeriodicSet(pair.n0, pair.m, pair.residues, pair.bstar)};
}

CoincidencePair induced_pair(const EventuallyPeriodicSet& a, const EventuallyPeriodicSet& b) {
  if (a.modulus() != b.modulus() || !std::ranges::equal(a.residues(), b.residues())) {
    throw ValidationError("sets do not share tail parameters");
  }
  if ((!a.empty() && a.min() < 0) || (!b.empty() && b.min() < 0)) {
    throw ValidationError("induced pairs need nonnegative sets");
  }
  CoincidencePair pair;
  pair.n0 = std::max(Int(std::max(a.n0(), b.n0())), Int(0));
  pair.m = a.modulus();
  pair.residues.assign(a.residues().begin(), a.residues().end());
  pair.astar = a.materialize(0, pair.n0);
  pair.bstar = b.materialize(0, pair.n0);
  return pair;
}

std::vector<Int> ordered_pair_counts(const EventuallyPeriodicSet& set, const Int& lo, const Int& hi) {
  if (lo > hi) throw ValidationError("empty count window");
  if (hi - lo + 1 > Int(enumeration_budget())) throw BudgetError("count window exceeds the enumeration budget");
  if (set.empty()) return std::vector<Int>(static_cast<std::size_t>(hi - lo + 1), Int(0));
  const Int least = set.min();
  const std::vector<std::int64_t> elems =
      least <= hi - least ? to_int64s(set.materialize(least, hi - least)) : std::vector<std::int64_t>{};
  const std::vector<std::int64_t> counts = pair_counts(elems, to_int64(lo), to_int64(hi), true);
  return {counts.begin(), counts.end()};
}

std::optional<Disagreement> verify_pair(const EventuallyPeriodicSet& a, const EventuallyPeriodicSet& b,
                                        const Int& horizon) {
  const Int n0 = std::max(a.n0(), b.n0());
  if (horizon <= 2 * n0) throw ValidationError("horizon must exceed 2 n0");
  const Int lo = 2 * n0 + 1;
  const std::vector<Int> ra = ordered_pair_counts(a, lo, horizon);
  const std::vector<Int> rb = ordered_pair_counts(b, lo, horizon);
  for (std::size_t i = 0; i < ra.size(); ++i) {
    if (ra[i] != rb[i]) return Disagreement{lo + i, ra[i], rb[i]};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

std::vector<bool> sandor_membership(std::size_t n, const std::string& head_bits, std::int64_t horizon) {
  if (n < 1) throw ValidationError("N must be positive");
  if (head_bits.size() != 2 * n) {
    throw ValidationError("head must have 2N = " + std::to_string(2 * n) + " bits, got " +
                          std::to_string(head_bits.size()));
  }
  if (horizon < static_cast<std::int64_t>(2 * n) - 1) throw ValidationError("horizon must be at least 2N - 1");
  if (static_cast<std::uint64_t>(horizon) >= enumeration_budget()) {
    throw BudgetError("horizon exceeds the enumeration budget");
  }
  std::size_t ones = 0;
  for (char ch : head_bits) {
    if (ch != '0' && ch != '1') throw ValidationError("head bits must be 0 or 1");
    ones += ch == '1';
  }
  if (ones != n) {
    throw HeadCountError("head has " + std::to_string(ones) + " elements of A in [0, 2N - 1], expected " +
                         std::to_string(n));
  }
  std::vector<bool> chi(static_cast<std::size_t>(horizon) + 1);
  for (std::size_t i = 0; i < chi.size(); ++i) {
    if (i < 2 * n) {
      chi[i] = head_bits[i] == '1';
    } else {
      chi[i] = i % 2 == 0 ? !chi[i / 2] : chi[i / 2];
    }
  }
  return chi;
}

SandorSets sandor_generate(std::size_t n, const std::string& head_bits, std::int64_t horizon) {
  const std::vector<bool> chi = sandor_membership(n, head_bits, horizon);
  std::vector<Int> a, b;
  for (std::size_t i = 0; i < chi.size(); ++i) (chi[i] ? a : b).emplace_back(i);
  return {FiniteIntSet::from_sorted(std::move(a)), FiniteIntSet::from_sorted(std::move(b))};
}

std::optional<Disagreement> partition_disagreement(const std::vector<bool>& membership, std::int64_t from) {
  const std::int64_t hi = static_cast<std::int64_t>(membership.size()) - 1;
  if (from < 0) throw ValidationError("window start must be nonnegative");
  if (from > hi) return std::nullopt;
  std::vector<std::int64_t> a, b;
  for (std::int64_t i = 0; i <= hi; ++i) (membership[static_cast<std::size_t>(i)] ? a : b).push_back(i);
  const std::vector<std::int64_t> ra = pair_counts(a, from, hi, false);
  const std::vector<std::int64_t> rb = pair_counts(b, from, hi, false);
  for (std::size_t i = 0; i < ra.size(); ++i) {
    if (ra[i] != rb[i]) return Disagreement{from + static_cast<std::int64_t>(i), ra[i], rb[i]};
  }
  return std::nullopt;
}

std::optional<Disagreement> sandor_verify(std::size_t n, const std::string& head_bits, std::int64_t horizon) {
  return partition_disagreement(sandor_membership(n, head_bits, horizon), static_cast<std::int64_t>(2 * n) - 1);
}

}  // namespace repbasis
