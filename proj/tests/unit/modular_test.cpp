#include <gtest/gtest.h>

#include <random>

#include "../support.hpp"
#include "repbasis/errors.hpp"
#include "repbasis/modular.hpp"
#include "repbasis/oracle.hpp"

namespace repbasis {
namespace {

using testing::counts;

TEST(ResidueSet, Validates) {
  EXPECT_EQ(ResidueSet(5, {2, 0, 2}).members().size(), 2u);
  EXPECT_THROW(ResidueSet(0, {}), ValidationError);
  EXPECT_THROW(ResidueSet(5, {5}), ValidationError);
  EXPECT_THROW(ResidueSet(5, {-1}), ValidationError);
}

TEST(RepMod, Examples) {
  EXPECT_EQ(rep_mod(ResidueSet(5, {0, 1, 2}), 2), counts({1, 1, 2, 1, 1}));
  EXPECT_EQ(rep_mod(ResidueSet(5, {}), 2), counts({0, 0, 0, 0, 0}));
  // Full Z/6Z: 21 multisets, residues 0, 2, 4 get 4 and 1, 3, 5 get 3.
  EXPECT_EQ(rep_mod(ResidueSet(6, {0, 1, 2, 3, 4, 5}), 2), counts({4, 3, 4, 3, 4, 3}));
  EXPECT_EQ(rep_mod(ResidueSet(7, {0, 1, 2, 3, 4, 5, 6}), 2), counts({4, 4, 4, 4, 4, 4, 4}));
}

TEST(RepMod, MatchesEnumeration) {
  std::mt19937_64 rng(71);
  for (std::int64_t m = 1; m <= 30; ++m) {
    for (int iter = 0; iter < 6; ++iter) {
      std::vector<std::int64_t> members;
      for (std::int64_t r = 0; r < m; ++r) {
        if (rng() % 3 == 0) members.push_back(r);
      }
      for (unsigned h = 1; h <= 3; ++h) {
        ASSERT_EQ(rep_mod(ResidueSet(m, members), h), oracle::enum_mod(m, members, h)) << "m=" << m << " h=" << h;
      }
    }
  }
}

TEST(IsBasisMod, Examples) {
  EXPECT_TRUE(is_basis_mod(ResidueSet(5, {0, 1, 2}), 2));
  EXPECT_FALSE(is_basis_mod(ResidueSet(5, {0}), 2));
  EXPECT_TRUE(is_basis_mod(ResidueSet(1, {0}), 3));
  EXPECT_FALSE(is_basis_mod(ResidueSet(1, {}), 1));
}

void expect_witness(const std::optional<ResidueSet>& found, std::int64_t m, unsigned h, std::uint64_t bound) {
  ASSERT_TRUE(found);
  EXPECT_EQ(found->modulus(), m);
  for (const Int& c : oracle::enum_mod(m, {found->members().begin(), found->members().end()}, h)) {
    EXPECT_GE(c, 1);
    EXPECT_LE(c, bound);
  }
}

TEST(Search, SmallWitnesses) {
  expect_witness(search_bounded_basis(5, 2, 2), 5, 2, 2);
  const auto one = search_bounded_basis(1, 2, 1);
  expect_witness(one, 1, 2, 1);
  EXPECT_EQ(one->members().size(), 1u);
  expect_witness(search_bounded_basis(13, 2, 3), 13, 2, 3);
  expect_witness(search_bounded_basis(20, 3, 6, {.budget = 50'000, .seed = 9}), 20, 3, 6);
}

TEST(Search, PerfectBasisOfFortyIsNotFound) {
  // h = 2, bound 1 needs k(k + 1)/2 = 40 multisets, which has no integer k.
  EXPECT_FALSE(search_bounded_basis(40, 2, 1, {.budget = 3000, .seed = 1}));
}

TEST(Search, DeterministicGivenSeed) {
  const auto a = search_bounded_basis(17, 2, 3, {.budget = 20'000, .seed = 5});
  const auto b = search_bounded_basis(17, 2, 3, {.budget = 20'000, .seed = 5});
  EXPECT_EQ(a, b);
}

}  // namespace
}  // namespace repbasis
