#include <gtest/gtest.h>

#include "linecut/gen.hpp"
#include "linecut/io.hpp"

namespace linecut {
namespace {

GenSpec make(GenKind kind, count_t n, std::int64_t span, std::uint64_t seed) {
  GenSpec s;
  s.kind = kind;
  s.n = n;
  s.span = span;
  s.seed = seed;
  return s;
}

TEST(GenerateTest, SinglePointInRange) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto inst = generate(make(GenKind::Uniform, 1, 1, seed));
    ASSERT_EQ(inst.n(), 1u);
    EXPECT_TRUE(inst.coords[0].scaled == 0 || inst.coords[0].scaled == 1);
  }
}

TEST(GenerateTest, OneDistinctValue) {
  auto spec = make(GenKind::Duplicates, 10, 1000, 3);
  spec.distinct_target = 1;
  const auto ci = compress(generate(spec));
  EXPECT_EQ(ci.l(), 1u);
  EXPECT_EQ(ci.mult().front(), 10);
}

TEST(GenerateTest, GoldenDigest) {
  const auto text = render_instance(generate(make(GenKind::Uniform, 100, 1'000'000, 42)));
  // Frozen from the first run of generator v1.
  EXPECT_EQ(fnv1a64(text), 0x0fbb81e72fa8156fULL) << std::hex << fnv1a64(text);
}

TEST(GenerateTest, DeterministicAndWithinBounds) {
  for (auto kind : {GenKind::Uniform, GenKind::Duplicates, GenKind::Clustered}) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      auto spec = make(kind, 1 + static_cast<count_t>(seed * 7), 100'000, seed);
      spec.clusters = 1 + static_cast<count_t>(seed % 4);
      if (kind == GenKind::Duplicates) spec.distinct_target = 1 + static_cast<count_t>(seed % 5) % spec.n;
      const auto a = generate(spec);
      const auto b = generate(spec);
      EXPECT_EQ(render_instance(a), render_instance(b));
      EXPECT_EQ(static_cast<count_t>(a.n()), spec.n);
      for (const auto& c : a.coords) {
        const std::int64_t slack = kind == GenKind::Clustered ? spec.span / 1000 : 0;
        EXPECT_GE(c.scaled, -slack);
        EXPECT_LE(c.scaled, spec.span + slack);
      }
      if (kind == GenKind::Duplicates) {
        EXPECT_EQ(static_cast<count_t>(compress(a).l()), *spec.distinct_target);
      }
    }
  }
}

TEST(GenerateTest, ClusteredPointsHugCenters) {
  auto spec = make(GenKind::Clustered, 500, 1'000'000, 9);
  spec.clusters = 2;
  const auto ci = compress(generate(spec));
  // Two clusters of width 2000 inside a span of 1e6.
  EXPECT_LE(ci.span(), 1'000'000 + 2000);
  std::int64_t widest_gap = 0;
  for (auto g : ci.gaps()) widest_gap = std::max(widest_gap, g);
  EXPECT_TRUE(ci.span() <= 2000 || widest_gap >= ci.span() - 4000);
}

TEST(GenerateTest, InvalidSpecs) {
  auto expect_invalid = [](GenSpec s) {
    try {
      generate(s);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::InvalidGenSpec);
    }
  };
  expect_invalid(make(GenKind::Uniform, 0, 10, 1));
  expect_invalid(make(GenKind::Uniform, 5, 0, 1));
  expect_invalid(make(GenKind::Uniform, 5, kMaxGenSpan + 1, 1));
  auto s = make(GenKind::Duplicates, 5, 10, 1);
  s.distinct_target = 6;
  expect_invalid(s);
  s = make(GenKind::Duplicates, 5, 2, 1);
  s.distinct_target = 4;
  expect_invalid(s);
  s = make(GenKind::Clustered, 5, 10, 1);
  s.clusters = 0;
  expect_invalid(s);
}

}  // namespace
}  // namespace linecut
