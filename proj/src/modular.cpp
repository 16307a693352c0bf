#include "repbasis/modular.hpp"

#include <algorithm>
#include <random>

#include "repbasis/errors.hpp"

namespace repbasis {

ResidueSet::ResidueSet(std::int64_t m, std::vector<std::int64_t> members) : m_(m), members_(std::move(members)) {
  if (m_ < 1) throw ValidationError("modulus must be positive");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (std::int64_t r : members_) {
    if (r < 0 || r >= m_) throw ValidationError("residue " + std::to_string(r) + " outside [0, m)");
  }
}

bool ResidueSet::contains(std::int64_t r) const { return std::binary_search(members_.begin(), members_.end(), r); }

std::vector<Int> rep_mod(const ResidueSet& set, unsigned h) {
  if (h == 0) throw ValidationError("order h must be positive");
  const auto m = static_cast<std::size_t>(set.modulus());
  if (Int(m) * (h + 1) > Int(enumeration_budget())) throw BudgetError("modulus too large for the count table");
  // dp[j][r]: multisets of size j over the members seen so far with sum r.
  std::vector<std::vector<Int>> dp(h + 1, std::vector<Int>(m, Int(0)));
  dp[0][0] = 1;
  for (std::int64_t x : set.members()) {
    const auto shift = static_cast<std::size_t>(x);
    for (unsigned j = 1; j <= h; ++j) {
      for (std::size_t r = 0; r < m; ++r) dp[j][(r + shift) % m] += dp[j - 1][r];
    }
  }
  return dp[h];
}

bool is_basis_mod(const ResidueSet& set, unsigned h) {
  const std::vector<Int> r = rep_mod(set, h);
  return std::all_of(r.begin(), r.end(), [](const Int& c) { return c > 0; });
}

namespace {

struct Score {
  std::size_t covered = 0;
  Int max_count = 0;
};

Score score(const std::vector<std::int64_t>& members, std::int64_t m, unsigned h) {
  Score s;
  for (const Int& c : rep_mod(ResidueSet(m, members), h)) {
    s.covered += c > 0;
    s.max_count = std::max(s.max_count, c);
  }
  return s;
}

}  // namespace

std::optional<ResidueSet> search_bounded_basis(std::int64_t m, unsigned h, std::uint64_t bound,
                                               const SearchOptions& options) {
  if (m < 1) throw ValidationError("modulus must be positive");
  if (h == 0) throw ValidationError("order h must be positive");
  if (bound < 1) throw ValidationError("bound must be positive");
  std::mt19937_64 rng(options.seed);
  std::uint64_t spent = 0;
  const auto mm = static_cast<std::size_t>(m);

  while (spent < options.budget) {
    std::vector<std::int64_t> members;
    std::size_t covered = 0;
    while (covered < mm && spent < options.budget) {
      // Residues that keep every count within the bound, best coverage first.
      std::vector<std::int64_t> best;
      std::size_t best_cover = covered;
      for (std::int64_t r = 0; r < m && spent < options.budget; ++r) {
        if (std::find(members.begin(), members.end(), r) != members.end()) continue;
        std::vector<std::int64_t> trial = members;
        trial.push_back(r);
        const Score s = score(trial, m, h);
        ++spent;
        if (s.max_count > bound || s.covered < best_cover) continue;
        if (s.covered > best_cover) {
          best.clear();
          best_cover = s.covered;
        }
        best.push_back(r);
      }
      if (best.empty() || best_cover == covered) break;
      members.push_back(best[std::uniform_int_distribution<std::size_t>(0, best.size() - 1)(rng)]);
      covered = best_cover;
    }
    if (covered < mm) continue;

    // Drop members that are not needed.
    std::shuffle(members.begin(), members.end(), rng);
    for (std::size_t i = 0; i < members.size() && members.size() > 1;) {
      std::vector<std::int64_t> trial = members;
      trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
      ++spent;
      if (score(trial, m, h).covered == mm) {
        members = std::move(trial);
      } else {
        ++i;
      }
    }
    ResidueSet out(m, members);
    const std::vector<Int> r = rep_mod(out, h);
    if (std::all_of(r.begin(), r.end(), [&](const Int& c) { return c > 0 && c <= bound; })) return out;
  }
  return std::nullopt;
}

}  // namespace repbasis
