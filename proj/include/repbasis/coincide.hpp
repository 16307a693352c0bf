#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "repbasis/integer.hpp"
#include "repbasis/intset.hpp"

namespace repbasis {

/// Heads A*, B* ⊆ [0, n0] sharing the periodic tail C = { c > n0 : c mod m ∈ T }.
struct CoincidencePair {
  Int n0;
  std::int64_t m = 1;
  std::vector<std::int64_t> residues;
  FiniteIntSet astar;
  FiniteIntSet bstar;

  /// Throws ValidationError on m < 1, residues outside [0, m) or heads outside [0, n0].
  void validate() const;
};

/// True iff (A* + T) mod m and (B* + T) mod m agree as multisets.
bool check_congruence(const CoincidencePair& pair);

struct PeriodicPair {
  EventuallyPeriodicSet a;
  EventuallyPeriodicSet b;
};

/// A = A* ∪ C and B = B* ∪ C. Throws CongruenceError unless check_congruence holds.
PeriodicPair synthesize_pair(const CoincidencePair& pair);

/// Recovers heads and shared tail from two periodic sets with the same modulus
/// and residues. Heads are taken on [0, max n0]; both sets must be nonnegative.
CoincidencePair induced_pair(const EventuallyPeriodicSet& a, const EventuallyPeriodicSet& b);

struct Disagreement {
  Int n;
  Int a_count;
  Int b_count;

  friend bool operator==(const Disagreement&, const Disagreement&) = default;
};

/// First n in (2 n0, horizon] with R_{A,2}(n) != R_{B,2}(n), where n0 is the
/// larger of the two thresholds. Membership is materialized on the window the
/// pairs can reach.
std::optional<Disagreement> verify_pair(const EventuallyPeriodicSet& a, const EventuallyPeriodicSet& b,
                                        const Int& horizon);

/// R_{A,2}(n) for lo <= n <= hi, by materializing A.
std::vector<Int> ordered_pair_counts(const EventuallyPeriodicSet& set, const Int& lo, const Int& hi);

// ---------------------------------------------------------------------------
// Partitions of N_0 with equal unordered counts

/// Membership of A on [0, horizon], starting from 2N head bits ('1' = in A)
/// and extending by chi(2a) = 1 - chi(a), chi(2a + 1) = chi(a) for a >= N.
///
/// Throws ValidationError for bad characters, a head of the wrong length or
/// horizon < 2N - 1, and HeadCountError unless exactly N head bits are set.
std::vector<bool> sandor_membership(std::size_t n, const std::string& head_bits, std::int64_t horizon);

struct SandorSets {
  FiniteIntSet a;
  FiniteIntSet b;
};

/// A ∩ [0, horizon] and its complement B = [0, horizon] \ A.
SandorSets sandor_generate(std::size_t n, const std::string& head_bits, std::int64_t horizon);

/// First n in [2N - 1, horizon] with r_{A,2}(n) != r_{B,2}(n).
std::optional<Disagreement> sandor_verify(std::size_t n, const std::string& head_bits, std::int64_t horizon);

/// First n in [from, size - 1] where A (given by membership on [0, size)) and
/// its complement have different unordered pair counts.
std::optional<Disagreement> partition_disagreement(const std::vector<bool>& membership, std::int64_t from);

}  // namespace repbasis
