#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "linecut/model.hpp"
#include "test_support.hpp"

namespace linecut {
namespace {

using testing::ints;
using testing::mask_cut;

std::vector<std::int64_t> scaled_xs(const CompressedInstance& ci) {
  std::vector<std::int64_t> out;
  for (const auto& c : ci.xs()) out.push_back(c.scaled);
  return out;
}

TEST(CompressTest, AllDistinct) {
  const auto ci = ints({2, 0, 1});
  EXPECT_EQ(scaled_xs(ci), (std::vector<std::int64_t>{0, 1, 2}));
  EXPECT_EQ(ci.mult(), (std::vector<count_t>{1, 1, 1}));
  EXPECT_EQ(ci.prefix(), (std::vector<count_t>{0, 1, 2, 3}));
  EXPECT_EQ(ci.gaps(), (std::vector<std::int64_t>{1, 1}));
  EXPECT_EQ(ci.n(), 3);
}

TEST(CompressTest, SingleDistinctValue) {
  const auto ci = ints({5, 5, 5});
  EXPECT_EQ(scaled_xs(ci), (std::vector<std::int64_t>{5}));
  EXPECT_EQ(ci.mult(), (std::vector<count_t>{3}));
  EXPECT_EQ(ci.prefix(), (std::vector<count_t>{0, 3}));
  EXPECT_TRUE(ci.gaps().empty());
}

TEST(CompressTest, GroupsDuplicates) {
  const auto ci = ints({0, 1, 0, 0});
  EXPECT_EQ(scaled_xs(ci), (std::vector<std::int64_t>{0, 1}));
  EXPECT_EQ(ci.mult(), (std::vector<count_t>{3, 1}));
  EXPECT_EQ(ci.prefix(), (std::vector<count_t>{0, 3, 4}));
}

TEST(CompressTest, EmptyInstanceRejected) {
  try {
    compress(Instance{});
    FAIL() << "expected InstanceEmpty";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InstanceEmpty);
  }
}

TEST(CompressTest, PreservesMultisetAndInvariants) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto inst = testing::random_instance(rng, 30, 12, -6);
    const auto ci = compress(inst);
    auto raw = std::vector<std::int64_t>{};
    for (const auto& c : inst.coords) raw.push_back(c.scaled);
    std::sort(raw.begin(), raw.end());
    EXPECT_EQ(testing::expand(ci), raw);
    for (std::size_t i = 0; i < ci.l(); ++i) {
      EXPECT_GE(ci.mult()[i], 1);
      EXPECT_EQ(ci.prefix()[i + 1], ci.prefix()[i] + ci.mult()[i]);
      if (i + 1 < ci.l()) {
        EXPECT_GT(ci.gaps()[i], 0);
      }
    }
    EXPECT_EQ(ci.prefix().back(), static_cast<count_t>(inst.n()));
  }
}

TEST(CutValueTest, SweepExamples) {
  // {0,3} against {1,2}: 1 + 2 + 2 + 1.
  const auto ci = ints({0, 1, 2, 3});
  ASSERT_EQ(mask_cut({0, 1, 2, 3}, 0b1001), 6);
  EXPECT_EQ(cut_value_sweep(ci, {{1, 0, 0, 1}}).value, 6);
  EXPECT_EQ(cut_value_sweep(ints({5, 5, 5}), {{1}}).value, 0);
  EXPECT_EQ(cut_value_sweep(ints({0, 1, 2}), {{1, 1, 1}}).value, 0);
}

TEST(CutValueTest, NaiveExamples) {
  EXPECT_EQ(cut_value_naive(ints({0, 10}), {{1, 0}}).value, 10);
  ASSERT_EQ(mask_cut({0, 1, 2, 3}, 0b0101), 6);
  EXPECT_EQ(cut_value_naive(ints({0, 1, 2, 3}), {{1, 0, 1, 0}}).value, 6);
  ASSERT_EQ(mask_cut({0, 0, 0, 1}, 0b1000), 3);
  EXPECT_EQ(cut_value_naive(ints({0, 0, 0, 1}), {{0, 1}}).value, 3);
}

TEST(CutValueTest, ProfileMismatchRejected) {
  const auto ci = ints({0, 1, 2});
  for (const auto& bad : {CountProfile{{1, 0}}, CountProfile{{2, 0, 0}}, CountProfile{{-1, 0, 0}}}) {
    try {
      cut_value_sweep(ci, bad);
      FAIL() << "expected InvalidProfile";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::InvalidProfile);
    }
    EXPECT_THROW(cut_value_naive(ci, bad), Error);
  }
}

CountProfile random_profile(std::mt19937_64& rng, const CompressedInstance& ci) {
  CountProfile a;
  for (auto m : ci.mult()) a.a.push_back(std::uniform_int_distribution<count_t>(0, m)(rng));
  return a;
}

TEST(CutValueTest, EvaluatorsAgreeWithEachOtherAndPerElementDefinition) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 10000; ++trial) {
    const auto ci = compress(testing::random_instance(rng, 14, 40, -20));
    const auto a = random_profile(rng, ci);
    const auto sweep = cut_value_sweep(ci, a);
    ASSERT_EQ(sweep, cut_value_naive(ci, a));
    if (trial % 10 == 0) {
      // Label the first a_i copies of each value as the first set.
      std::uint32_t mask = 0;
      std::size_t bit = 0;
      for (std::size_t i = 0; i < ci.l(); ++i)
        for (count_t c = 0; c < ci.mult()[i]; ++c, ++bit)
          if (c < a.a[i]) mask |= 1u << bit;
      ASSERT_EQ(sweep.value, mask_cut(testing::expand(ci), mask));
    }
  }
}

TEST(CutValueTest, SymmetriesAndInvariances) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const auto inst = testing::random_instance(rng, 20, 1000, -500);
    const auto ci = compress(inst);
    const auto a = random_profile(rng, ci);
    const auto v = cut_value_sweep(ci, a);

    EXPECT_EQ(cut_value_sweep(ci, complement(ci, a)), v);

    std::vector<Coord> shifted, scaled, reflected;
    for (const auto& c : ci.xs()) {
      shifted.push_back({c.scaled + 1'000'000});
      scaled.push_back({c.scaled * 7});
    }
    for (auto it = ci.xs().rbegin(); it != ci.xs().rend(); ++it) reflected.push_back({-it->scaled});
    const auto ci_shift = CompressedInstance::from_counts(shifted, ci.mult());
    const auto ci_scale = CompressedInstance::from_counts(scaled, ci.mult());
    const auto ci_refl = CompressedInstance::from_counts(
        reflected, std::vector<count_t>(ci.mult().rbegin(), ci.mult().rend()));
    const CountProfile a_rev{std::vector<count_t>(a.a.rbegin(), a.a.rend())};

    EXPECT_EQ(cut_value_sweep(ci_shift, a), v);
    EXPECT_EQ(cut_value_naive(ci_shift, a), v);
    EXPECT_EQ(cut_value_sweep(ci_scale, a).value, 7 * v.value);
    EXPECT_EQ(cut_value_naive(ci_scale, a).value, 7 * v.value);
    EXPECT_EQ(cut_value_sweep(ci_refl, a_rev), v);
    EXPECT_EQ(cut_value_naive(ci_refl, a_rev), v);

    EXPECT_EQ(cut_value_sweep(ci, CountProfile{std::vector<count_t>(ci.l(), 0)}).value, 0);
    EXPECT_EQ(cut_value_sweep(ci, CountProfile{ci.mult()}).value, 0);

    const auto n = static_cast<wide_int>(ci.n());
    EXPECT_GE(v.value, 0);
    EXPECT_LE(v.value, n * n / 4 * ci.span());
  }
}

TEST(FixedPointTest, RendersExactly) {
  EXPECT_EQ(to_fixed_point(3, 2), "0.03");
  EXPECT_EQ(to_fixed_point(10, 0), "10");
  EXPECT_EQ(to_fixed_point(-225, 2), "-2.25");
  EXPECT_EQ(to_fixed_point(-5, 1), "-0.5");
  EXPECT_EQ(to_fixed_point(0, 3), "0.000");
  EXPECT_EQ(to_decimal(wide_int{1} << 100), "1267650600228229401496703205376");
}

TEST(ProblemSpecTest, Validation) {
  EXPECT_NO_THROW(validate_spec(ProblemSpec::partition(Objective::Min, 0), 3));
  EXPECT_NO_THROW(validate_spec(ProblemSpec::partition(Objective::Max, 3), 3));
  try {
    validate_spec(ProblemSpec::partition(Objective::Max, 4), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InvalidK);
  }
  try {
    validate_spec(ProblemSpec{Objective::Min, std::nullopt}, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::UnsupportedProblem);
  }
  try {
    ProblemSpec::bisection(Objective::Min, 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::OddBisection);
    EXPECT_NE(std::string(e.what()).find("even"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("k = 2"), std::string::npos);
  }
  EXPECT_EQ(ProblemSpec::bisection(Objective::Max, 6).k, 3);
}

}  // namespace
}  // namespace linecut
