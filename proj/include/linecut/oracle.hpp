#pragma once

// Reference solvers for validating the dynamic program: exhaustive search
// over count profiles and the best threshold (prefix) cut.

#include <cstdint>
#include <string>

#include "linecut/model.hpp"

namespace linecut {

inline constexpr std::uint64_t kDefaultOracleCap = std::uint64_t{1} << 22;

/// Enumerates every profile a in [0,m_1] x ... x [0,m_l] in lexicographic
/// order and keeps the first optimum. No pruning.
inline Solution oracle_solve(const CompressedInstance& ci, const ProblemSpec& spec,
                             std::uint64_t cap = kDefaultOracleCap) {
  validate_spec(spec, ci.n());
  const auto count = ci.profile_count(cap);
  if (count > cap)
    throw Error(Errc::TooLargeForOracle, "more than " + std::to_string(cap) +
                                             " count profiles to enumerate");
  const bool maximize = spec.objective == Objective::Max;

  CountProfile current;
  current.a.assign(ci.l(), 0);
  count_t current_total = 0;
  bool found = false;
  Solution best;
  best.spec = spec;

  for (std::uint64_t step = 0; step < count; ++step) {
    if (!spec.k || current_total == *spec.k) {
      const CutValue v = cut_value_sweep(ci, current);
      if (!found || (maximize ? v > best.value : v < best.value)) {
        found = true;
        best.value = v;
        best.profile = current;
        best.k_actual = current_total;
      }
    }
    // Odometer increment, last position fastest, so profiles come out in
    // lexicographic order.
    for (std::size_t pos = ci.l(); pos-- > 0;) {
      if (current.a[pos] < ci.mult()[pos]) {
        ++current.a[pos];
        ++current_total;
        break;
      }
      current_total -= current.a[pos];
      current.a[pos] = 0;
    }
  }
  if (!found) throw Error(Errc::InternalInconsistency, "oracle found no feasible profile");
  return best;
}

/// Profile whose first set is the j smallest points of the sorted multiset.
inline CountProfile threshold_profile(const CompressedInstance& ci, count_t j) {
  CountProfile profile;
  profile.a.reserve(ci.l());
  for (auto m : ci.mult()) {
    const count_t take = std::min(m, j);
    profile.a.push_back(take);
    j -= take;
  }
  return profile;
}

/// Best of the n + 1 prefix cuts (only j = k under a cardinality
/// constraint). Ties go to the smallest j.
inline Solution best_threshold(const CompressedInstance& ci, const ProblemSpec& spec) {
  validate_spec(spec, ci.n());
  const bool maximize = spec.objective == Objective::Max;
  const count_t lo = spec.k ? *spec.k : 0;
  const count_t hi = spec.k ? *spec.k : ci.n();
  Solution best;
  best.spec = spec;
  for (count_t j = lo; j <= hi; ++j) {
    auto profile = threshold_profile(ci, j);
    const CutValue v = cut_value_sweep(ci, profile);
    if (!best.profile || (maximize ? v > best.value : v < best.value)) {
      best.value = v;
      best.profile = std::move(profile);
      best.k_actual = j;
    }
  }
  return best;
}

}  // namespace linecut
