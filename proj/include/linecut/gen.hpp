#pragma once

// Seeded instance generators.
//
// Engine: std::mt19937_64 seeded with the 64-bit GenSpec seed. Its output
// sequence is fixed by the C++ standard. Bounded draws use our own rejection
// sampler instead of std::uniform_int_distribution, whose algorithm varies
// between standard libraries. Any change to the draw order below is a
// format change (current: generator v1).

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "linecut/model.hpp"

namespace linecut {

inline constexpr int kGeneratorVersion = 1;

enum class GenKind { Uniform, Duplicates, Clustered };

inline const char* gen_kind_name(GenKind kind) {
  switch (kind) {
    case GenKind::Uniform: return "uniform";
    case GenKind::Duplicates: return "duplicates";
    case GenKind::Clustered: return "clustered";
  }
  return "unknown";
}

inline std::optional<GenKind> parse_gen_kind(const std::string& name) {
  if (name == "uniform") return GenKind::Uniform;
  if (name == "duplicates") return GenKind::Duplicates;
  if (name == "clustered") return GenKind::Clustered;
  return std::nullopt;
}

struct GenSpec {
  GenKind kind = GenKind::Uniform;
  count_t n = 1;
  std::int64_t span = 1;
  /// Number of distinct values for Duplicates; defaults to max(1, n / 4).
  std::optional<count_t> distinct_target;
  count_t clusters = 1;
  std::uint64_t seed = 0;
};

/// Spans above this could push clustered points past the coordinate limit.
inline constexpr std::int64_t kMaxGenSpan = std::int64_t{1} << 39;

namespace detail {

/// Uniform draw from [0, bound) without modulo bias.
inline std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x < threshold);
  return x % bound;
}

/// Uniform draw from [lo, hi].
inline std::int64_t draw_between(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(draw_below(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

template <class T>
void shuffle(std::mt19937_64& rng, std::vector<T>& v) {
  for (std::size_t i = v.size(); i > 1; --i)
    std::swap(v[i - 1], v[draw_below(rng, i)]);
}

}  // namespace detail

inline void validate_gen_spec(const GenSpec& spec) {
  auto fail = [](const std::string& msg) { throw Error(Errc::InvalidGenSpec, msg); };
  if (spec.n < 1) fail("n must be at least 1");
  if (spec.span < 1) fail("span must be at least 1");
  if (spec.span > kMaxGenSpan) fail("span must not exceed 2^39");
  if (spec.clusters < 1) fail("clusters must be at least 1");
  if (spec.distinct_target) {
    if (*spec.distinct_target < 1 || *spec.distinct_target > spec.n)
      fail("distinct count must lie in [1, n]");
    if (*spec.distinct_target > spec.span + 1) fail("distinct count exceeds span + 1");
  }
}

inline Instance generate(const GenSpec& spec) {
  validate_gen_spec(spec);
  std::mt19937_64 rng(spec.seed);
  std::vector<std::int64_t> values;
  values.reserve(static_cast<std::size_t>(spec.n));

  switch (spec.kind) {
    case GenKind::Uniform:
      for (count_t i = 0; i < spec.n; ++i) values.push_back(detail::draw_between(rng, 0, spec.span));
      break;

    case GenKind::Duplicates: {
      const count_t l = spec.distinct_target.value_or(
          std::min<count_t>(std::max<count_t>(1, spec.n / 4), spec.span + 1));
      std::set<std::int64_t> seen;
      std::vector<std::int64_t> distinct;
      while (static_cast<count_t>(distinct.size()) < l) {
        const auto v = detail::draw_between(rng, 0, spec.span);
        if (seen.insert(v).second) distinct.push_back(v);
      }
      // Random composition of n into l positive parts: l - 1 distinct cut
      // points out of 1..n-1 by partial Fisher-Yates.
      std::vector<count_t> points(static_cast<std::size_t>(spec.n - 1));
      for (count_t i = 0; i < spec.n - 1; ++i) points[static_cast<std::size_t>(i)] = i + 1;
      for (count_t i = 0; i < l - 1; ++i) {
        const auto j = static_cast<std::size_t>(i) +
                       detail::draw_below(rng, points.size() - static_cast<std::size_t>(i));
        std::swap(points[static_cast<std::size_t>(i)], points[j]);
      }
      std::vector<count_t> cuts(points.begin(), points.begin() + (l - 1));
      std::sort(cuts.begin(), cuts.end());
      cuts.push_back(spec.n);
      count_t previous = 0;
      for (std::size_t j = 0; j < cuts.size(); ++j) {
        for (count_t c = previous; c < cuts[j]; ++c) values.push_back(distinct[j]);
        previous = cuts[j];
      }
      detail::shuffle(rng, values);
      break;
    }

    case GenKind::Clustered: {
      const std::int64_t width = spec.span / 1000;
      std::vector<std::int64_t> centers;
      for (count_t c = 0; c < spec.clusters; ++c)
        centers.push_back(detail::draw_between(rng, 0, spec.span));
      for (count_t i = 0; i < spec.n; ++i) {
        const auto c = detail::draw_below(rng, centers.size());
        values.push_back(centers[c] + detail::draw_between(rng, -width, width));
      }
      break;
    }
  }
  return Instance::from_integers(values);
}

}  // namespace linecut
