#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "repbasis/integer.hpp"

namespace repbasis {

/// A subset of Z/mZ, members sorted in [0, m).
class ResidueSet {
 public:
  ResidueSet(std::int64_t m, std::vector<std::int64_t> members);

  std::int64_t modulus() const noexcept { return m_; }
  std::span<const std::int64_t> members() const noexcept { return members_; }
  bool contains(std::int64_t r) const;

  friend bool operator==(const ResidueSet&, const ResidueSet&) = default;

 private:
  std::int64_t m_;
  std::vector<std::int64_t> members_;
};

/// r(x) for x = 0..m-1: multisets of h members summing to x mod m.
std::vector<Int> rep_mod(const ResidueSet& set, unsigned h);

bool is_basis_mod(const ResidueSet& set, unsigned h);

struct SearchOptions {
  std::uint64_t budget = 10'000;  // rep_mod evaluations
  std::uint64_t seed = 1;
};

/// Randomized greedy with pruning and restarts. Returns a basis of order h
/// whose counts never exceed `bound`, or nothing when the budget runs out.
std::optional<ResidueSet> search_bounded_basis(std::int64_t m, unsigned h, std::uint64_t bound,
                                               const SearchOptions& options = {});

}  // namespace repbasis
