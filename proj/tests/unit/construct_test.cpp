#include <gtest/gtest.h>

#include "../support.hpp"
#include "repbasis/construct.hpp"
#include "repbasis/errors.hpp"
#include "repbasis/oracle.hpp"
#include "repbasis/sidon.hpp"

namespace repbasis {
namespace {

using testing::ints;

const Multiplicity kInf = Multiplicity::infinity();

TEST(TargetFn, ZeroSetAndDefaults) {
  const TargetFn f(1, {{0, 0}, {5, 0}, {7, kInf}});
  EXPECT_EQ(f.zero_set(), ints({0, 5}));
  EXPECT_EQ(f(7), kInf);
  EXPECT_EQ(f(8), Multiplicity(1));
  EXPECT_THROW(TargetFn(0, {{0, kInf}}), ValidationError);
  EXPECT_EQ(to_string(kInf), "inf");
  EXPECT_TRUE(kInf.admits(Int(1) << 200));
  EXPECT_FALSE(Multiplicity(2).admits(3));
}

TEST(Schedule, Examples) {
  EXPECT_EQ(schedule_targets(TargetFn(1), 5), (std::vector<Int>{0, -1, 1, -2, 2}));
  const std::vector<Int> no_zero = schedule_targets(TargetFn(1, {{0, 0}}), 40);
  EXPECT_EQ(std::count(no_zero.begin(), no_zero.end(), Int(0)), 0);
  // Sweeps 1..4 for f = 2: 0 | 0 -1 | 1 -1 ... until every count reaches 2.
  EXPECT_EQ(schedule_targets(TargetFn(2), 7), (std::vector<Int>{0, 0, -1, -1, 1, 1, -2}));
  const std::vector<Int> inf_zero = schedule_targets(TargetFn(1, {{0, kInf}}), 9);
  EXPECT_EQ(inf_zero, (std::vector<Int>{0, 0, -1, 0, 1, 0, -2, 0, 2}));
}

TEST(Schedule, CountsNeverExceedTarget) {
  const TargetFn f(2, {{0, 0}, {3, 1}, {-2, kInf}});
  const std::vector<Int> s = schedule_targets(f, 300);
  for (std::int64_t n = -40; n <= 40; ++n) {
    const auto c = static_cast<std::uint64_t>(std::count(s.begin(), s.end(), Int(n)));
    ASSERT_TRUE(f(n).admits(c)) << n;
  }
  EXPECT_GT(std::count(s.begin(), s.end(), Int(-2)), 2);
}

TEST(Urb, WorkedSteps) {
  const UrbState a2 = urb_step(UrbState::initial());
  EXPECT_EQ(a2.set, ints({-4, 0, 1, 3}));
  ASSERT_EQ(a2.trace.size(), 1u);
  EXPECT_EQ(a2.trace[0].d, 1);
  EXPECT_EQ(a2.trace[0].b, 1);
  EXPECT_EQ(a2.trace[0].c, 1);
  EXPECT_FALSE(a2.trace[0].positive_branch);
  EXPECT_EQ(a2.d, 4);
  EXPECT_EQ(oracle::enum_unordered_support(a2.set, 2).keys(), ints({-8, -4, -3, -1, 0, 1, 2, 3, 4, 6}));

  const UrbState a3 = urb_step(a2);
  EXPECT_EQ(a3.trace[1].b, 2);
  EXPECT_EQ(a3.trace[1].d, 4);
  EXPECT_EQ(a3.set, ints({-14, -4, 0, 1, 3, 12}));
  const UrbState a5 = urb_build(5);
  EXPECT_EQ(a5.set, ints({-146, -42, -14, -4, 0, 1, 3, 12, 47, 141}));
}

TEST(Urb, BaseCase) {
  const UrbState a1 = urb_build(1);
  EXPECT_EQ(a1.set, ints({0, 1}));
  EXPECT_TRUE(a1.trace.empty());
  EXPECT_THROW(urb_build(0), ValidationError);
}

TEST(Urb, EveryPrefixIsUniqueOnItsSupport) {
  UrbState s = UrbState::initial();
  for (std::size_t k = 2; k <= 30; ++k) {
    s = urb_step(s);
    const RepSupport r = oracle::enum_unordered_support(s.set, 2);
    ASSERT_EQ(s.set.size(), 2 * k);
    ASSERT_LE(r.max_count(), 1);
    ASSERT_GE(represented_radius(r.keys()), Int(k / 2));
  }
}

TEST(Urb, SparsityCheckpoints) {
  UrbOptions options;
  options.sparsity = SparsityBound::log2_plus4();
  const UrbState s = urb_build(50, options);
  const auto cps = sparsity_checkpoints(s, *options.sparsity);
  ASSERT_FALSE(cps.empty());
  for (const SparsityCheckpoint& cp : cps) {
    ASSERT_LE(cp.count, cp.bound) << "x=" << cp.x;
    ASSERT_EQ(cp.count, count(s.set, -cp.x, cp.x));
  }
  EXPECT_LE(oracle::enum_unordered_support(s.set, 2).max_count(), 1);
}

TEST(Urb, SparsityBoundSearch) {
  UrbOptions options;
  options.sparsity = SparsityBound::parse("poly:0.25");
  const UrbState s = urb_build(12, options);
  for (const UrbStepRecord& r : s.trace) {
    EXPECT_GE(r.c, r.d);
    EXPECT_GE(options.sparsity->phi(r.c), 2 * Int(r.k) + 2);
    if (r.c > r.d) EXPECT_LT(options.sparsity->phi(r.c - 1), 2 * Int(r.k) + 2);
  }
  UrbOptions hopeless;
  hopeless.sparsity = SparsityBound{"flat", [](const Int&) { return Int(3); }};
  hopeless.search_bits = 64;
  EXPECT_THROW(urb_build(2, hopeless), SparsityError);
}

TEST(SparsityBound, Parses) {
  EXPECT_EQ(SparsityBound::parse("log").phi(1024), 14);
  EXPECT_EQ(SparsityBound::parse("log").phi(1025), 15);
  EXPECT_EQ(SparsityBound::parse("poly:0.5").phi(99), 9);
  EXPECT_EQ(SparsityBound::parse("poly:0.5").phi(100), 10);
  EXPECT_THROW(SparsityBound::parse("poly:"), ValidationError);
  EXPECT_THROW(SparsityBound::parse("poly:-1"), ValidationError);
  EXPECT_THROW(SparsityBound::parse("exp"), ValidationError);
}

TEST(FundRep, FirstStepsByHand) {
  const FundRepState s1 = fundrep_step(FundRepState::initial(2), TargetFn(1));
  EXPECT_EQ(s1.set, ints({-5, 5}));
  EXPECT_EQ(s1.trace[0].c, 5);
  EXPECT_EQ(s1.counts.keys(), ints({-10, 0, 10}));
  EXPECT_EQ(s1.counts.at(0), 1);

  const FundRepState s4 = fundrep_build(TargetFn(1), 2, 4);
  EXPECT_EQ(s4.set, ints({-21865, -1365, -85, -5, 5, 84, 1366, 21863}));
  const FundRepState t4 = fundrep_build(TargetFn(1), 3, 4);
  EXPECT_EQ(t4.set, ints({-2646985, -36763, -511, -7, 14, 1021, 73527, 5293968}));
  EXPECT_EQ(t4.trace[3].d, 220581);
  EXPECT_EQ(t4.prefix(2), ints({-511, -7, 14, 1021}));
  EXPECT_THROW(FundRepState::initial(1), ValidationError);
}

void expect_build_sound(const TargetFn& f, unsigned h, std::size_t steps) {
  FundRepState s = FundRepState::initial(h);
  for (std::size_t k = 1; k <= steps; ++k) {
    const FundRepState next = fundrep_step(s, f);
    ASSERT_TRUE(is_generalized_sidon(next.set, h - 1));
    for (const RepEntry& e : s.counts.entries()) ASSERT_GE(next.counts.at(e.n), e.count);
    s = next;
  }
  const RepSupport recount = oracle::enum_unordered_support(s.set, h);
  ASSERT_EQ(recount, s.counts);
  ASSERT_FALSE(check_target_conditions(recount, f, s.schedule).has_value());
  for (const Int& z : f.zero_set()) ASSERT_EQ(recount.at(z), 0);
}

TEST(FundRep, ConstantOneOrderTwo) {
  expect_build_sound(TargetFn(1), 2, 20);
  const FundRepState s = fundrep_build(TargetFn(1), 2, 20);
  const RepSupport r = oracle::enum_unordered_support(s.set, 2);
  for (const Int& u : s.schedule) EXPECT_EQ(r.at(u), 1);
  EXPECT_LE(r.max_count(), 1);
}

TEST(FundRep, TargetsSkipFreshSums) {
  FundRepState s = FundRepState::initial(2);
  for (int k = 0; k < 25; ++k) {
    const Int u = next_target(s, TargetFn(1));
    ASSERT_EQ(s.counts.at(u), 0) << "k=" << k;
    s = fundrep_step(s, TargetFn(1));
    ASSERT_EQ(s.schedule.back(), u);
  }
  // -10 is a fresh sum of A_1 = {-5, 5}, so it is never scheduled.
  EXPECT_EQ(std::count(s.schedule.begin(), s.schedule.end(), Int(-10)), 0);
  EXPECT_EQ(s.counts.at(-10), 1);
  EXPECT_THROW(fundrep_step(s, TargetFn(1), Int(-10)), InternalError);
}

TEST(FundRep, ConstantTwoOrderThree) {
  expect_build_sound(TargetFn(2), 3, 30);
  const FundRepState s = fundrep_build(TargetFn(2), 3, 30);
  const RepSupport r = oracle::enum_unordered_support(s.set, 3);
  EXPECT_LE(r.max_count(), 2);
  for (const Int& u : s.schedule) {
    if (std::count(s.schedule.begin(), s.schedule.end(), u) == 2) EXPECT_EQ(r.at(u), 2);
  }
}

TEST(FundRep, ZeroOverride) {
  const TargetFn f(1, {{0, 0}});
  FundRepState s = FundRepState::initial(2);
  for (int k = 0; k < 20; ++k) {
    s = fundrep_step(s, f);
    ASSERT_EQ(s.counts.at(0), 0);
  }
}

TEST(FundRep, ConditionCheckerReportsViolations) {
  const TargetFn f(1);
  const RepSupport two({{Int(3), Int(2)}});
  EXPECT_TRUE(check_target_conditions(two, f, {}).has_value());
  const RepSupport one({{Int(3), Int(1)}});
  EXPECT_FALSE(check_target_conditions(one, f, {3}).has_value());
  EXPECT_TRUE(check_target_conditions(one, f, {3, 4}).has_value());
}

}  // namespace
}  // namespace repbasis
