#include <gtest/gtest.h>

#include <random>

#include "../support.hpp"
#include "repbasis/errors.hpp"
#include "repbasis/oracle.hpp"
#include "repbasis/polyring.hpp"

namespace repbasis {
namespace {

using testing::counts;
using testing::ints;

TEST(LaurentPoly, NormalizesAndPrints) {
  const LaurentPoly p(-2, counts({0, 0, 1, 0, 3, 0}));
  EXPECT_EQ(p.low(), 0);
  EXPECT_EQ(p.high(), 2);
  EXPECT_EQ(p.coeff(2), 3);
  EXPECT_EQ(p.coeff(7), 0);
  EXPECT_EQ(p.to_string(), "1*z^0 + 3*z^2");
  EXPECT_TRUE(LaurentPoly(5, counts({0, 0})).is_zero());
  EXPECT_EQ(LaurentPoly().to_string(), "0");
}

TEST(FromSet, Examples) {
  EXPECT_EQ(from_set(ints({0, 1})), LaurentPoly(0, counts({1, 1})));
  EXPECT_TRUE(from_set(FiniteIntSet{}).is_zero());
  EXPECT_EQ(from_set(ints({-4, 0, 1, 3})), LaurentPoly(-4, counts({1, 0, 0, 0, 1, 1, 0, 1})));
}

TEST(Pow, Examples) {
  const LaurentPoly one_plus_z(0, counts({1, 1}));
  EXPECT_EQ(pow(one_plus_z, 2), LaurentPoly(0, counts({1, 2, 1})));
  EXPECT_EQ(substitute_square(one_plus_z), LaurentPoly(0, counts({1, 0, 1})));
  EXPECT_EQ(pow(from_set(ints({0, 1})), 3), LaurentPoly(0, counts({1, 3, 3, 1})));
  EXPECT_THROW(pow(one_plus_z, 0), ValidationError);
}

TEST(Pow, MatchesOrderedEnumeration) {
  const FiniteIntSet a = ints({0, 1});
  const RepTable want = oracle::enum_ordered(a, 3, Window(0, 3));
  const LaurentPoly got = pow(from_set(a), 3);
  for (std::int64_t n = 0; n <= 3; ++n) EXPECT_EQ(got.coeff(n), want.at(n));
}

TEST(Mul, RingLaws) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<std::int64_t> coeff(-5, 5), off(-6, 6);
  auto random_poly = [&] {
    std::vector<Int> c(1 + rng() % 6);
    for (Int& x : c) x = coeff(rng);
    return LaurentPoly(off(rng), c);
  };
  for (int iter = 0; iter < 500; ++iter) {
    const LaurentPoly p = random_poly(), q = random_poly(), r = random_poly();
    ASSERT_EQ(mul(p, q), mul(q, p));
    ASSERT_EQ(mul(mul(p, q), r), mul(p, mul(q, r)));
    ASSERT_EQ(mul(p, q + r), mul(p, q) + mul(p, r));
    if (!p.is_zero() && !q.is_zero()) {
      const LaurentPoly pq = mul(p, q);
      ASSERT_EQ(pq.high() - pq.low(), (p.high() - p.low()) + (q.high() - q.low()));
    }
    ASSERT_EQ(pow(p, 3), mul(p, mul(p, p)));
  }
}

TEST(HthRoot, Examples) {
  EXPECT_EQ(hth_root_01(LaurentPoly(0, counts({1, 2, 1})), 2), ints({0, 1}));
  EXPECT_EQ(hth_root_01(LaurentPoly(0, counts({1})), 5), ints({0}));
  EXPECT_THROW(hth_root_01(LaurentPoly(0, counts({1, 1})), 2), NoRootError);
  EXPECT_EQ(hth_root_01(LaurentPoly(), 3), FiniteIntSet{});
}

TEST(HthRoot, RejectsNonRoots) {
  EXPECT_THROW(hth_root_01(LaurentPoly(1, counts({1})), 2), NoRootError);         // odd exponent
  EXPECT_THROW(hth_root_01(LaurentPoly(0, counts({2})), 2), NoRootError);         // leading 2
  EXPECT_THROW(hth_root_01(LaurentPoly(0, counts({1, -1, 1})), 2), NoRootError);  // negative
  EXPECT_THROW(hth_root_01(LaurentPoly(0, counts({1, 2, 2})), 2), NoRootError);   // root 1 + z + z^2/2...
  EXPECT_THROW(hth_root_01(LaurentPoly(0, counts({1, 0, 0, 1})), 2), NoRootError);
}

TEST(HthRoot, RoundTripsRandomSets) {
  std::mt19937_64 rng(22);
  for (int iter = 0; iter < 1000; ++iter) {
    const FiniteIntSet a = testing::random_set(rng, -30, 30, 12);
    const unsigned h = 2 + static_cast<unsigned>(rng() % 3);
    ASSERT_EQ(hth_root_01(pow(from_set(a), h), h), a) << a << " h=" << h;
  }
}

}  // namespace
}  // namespace repbasis
