#pragma once

// Exact dynamic program for maximum cuts and cardinality-constrained
// minimum/maximum partitions of points on the line.
//
// Level i (1..l) collapses every point >= x_i onto x_i. A state (p, r) at
// level i stands for the subproblem on P_{i-1} (the |P_{i-1}| points left of
// x_i) plus n - |P_{i-1}| copies of x_i, where p of the left points and r of
// the copies form the first set. The remaining counts are implied:
//   q = |P_{i-1}| - p,   t = n - |P_{i-1}| - r.
// Moving the copies of x_i back onto x_{i-1} changes the cut by exactly
// (x_i - x_{i-1}) * (p*t + q*r), so
//   opt_i(p, r) = gap * (p*t + q*r) + opt_{r0} opt_{i-1}(p - r0, r0 + r)
// where r0 (resp. m_{i-1} - r0) copies of x_{i-1} sit in the first (second)
// set. Level 1 has only p = 0 and every value is 0.

#include <cassert>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "linecut/detail/parallel.hpp"
#include "linecut/model.hpp"

namespace linecut {

/// One DP subproblem; level is 1-based.
struct DpState {
  std::size_t level = 1;
  count_t p = 0;
  count_t r = 0;

  count_t q(const CompressedInstance& ci) const { return ci.prefix()[level - 1] - p; }
  count_t t(const CompressedInstance& ci) const { return ci.n() - ci.prefix()[level - 1] - r; }

  friend bool operator==(const DpState&, const DpState&) = default;
};

/// Dense (p, r) table, row-major in p, for 0 <= p <= p_max, 0 <= r <= r_max.
template <class T>
class LevelTable {
 public:
  LevelTable() = default;
  LevelTable(count_t p_max, count_t r_max, T fill = T{})
      : p_max_(p_max),
        r_max_(r_max),
        cells_(static_cast<std::size_t>((p_max + 1) * (r_max + 1)), fill) {}

  count_t p_max() const noexcept { return p_max_; }
  count_t r_max() const noexcept { return r_max_; }
  bool empty() const noexcept { return cells_.empty(); }

  T& at(count_t p, count_t r) { return cells_[index(p, r)]; }
  const T& at(count_t p, count_t r) const { return cells_[index(p, r)]; }

  std::span<T> row(count_t p) {
    return {cells_.data() + index(p, 0), static_cast<std::size_t>(r_max_ + 1)};
  }
  std::span<const T> row(count_t p) const {
    return {cells_.data() + index(p, 0), static_cast<std::size_t>(r_max_ + 1)};
  }

 private:
  std::size_t index(count_t p, count_t r) const {
    assert(p >= 0 && p <= p_max_ && r >= 0 && r <= r_max_);
    return static_cast<std::size_t>(p * (r_max_ + 1) + r);
  }

  count_t p_max_ = -1;
  count_t r_max_ = -1;
  std::vector<T> cells_;
};

using choice_t = std::uint32_t;

/// Marks a state with no admissible predecessor. Real values are >= 0.
template <class Acc>
inline constexpr Acc kInfeasible = Acc{-1};

/// gap * (p*t + q*r): the change in cut value when the copies at x_i are
/// collapsed onto x_{i-1}.
inline CutValue gap_term(std::int64_t gap, count_t p, count_t q, count_t r, count_t t) {
  return CutValue{static_cast<wide_int>(gap) *
                  (static_cast<wide_int>(p) * t + static_cast<wide_int>(q) * r)};
}

/// Admissible r0 (copies of x_{i-1} in the first set) for a state with p, q
/// left points split and m_prev copies of x_{i-1}: r0 <= p, t0 <= q,
/// r0 + t0 = m_prev, with r0 and t0 allowed to be zero.
struct TransitionRange {
  count_t lo = 0;
  count_t hi = -1;
  bool empty() const noexcept { return lo > hi; }
};

inline TransitionRange transition_bounds(count_t p, count_t q, count_t m_prev) {
  return {std::max<count_t>(0, m_prev - q), std::min(p, m_prev)};
}

/// Knobs shared by the level fill and solve.
struct FillOptions {
  unsigned threads = 1;
  bool record_choices = true;
  /// Test-only mutation: forbid r0 = 0 and t0 = 0 (the 1 <= r0, 1 <= t0
  /// reading of the recurrence). Used to prove the verifier catches errors.
  bool fault_strict_lower_bound = false;
};

template <class Acc>
struct LevelResult {
  LevelTable<Acc> values;
  LevelTable<choice_t> choices;
};

template <class Acc>
LevelTable<Acc> base_level(const CompressedInstance& ci) {
  return LevelTable<Acc>(0, ci.n(), Acc{0});
}

/// Fills every state (p, r) of `level` (2..l) from the level below. Each
/// state keeps the smallest optimizing r0.
template <class Acc>
LevelResult<Acc> fill_level(const CompressedInstance& ci, std::size_t level,
                            const LevelTable<Acc>& prev, Objective objective,
                            const FillOptions& options = {}) {
  assert(level >= 2 && level <= ci.l());
  const count_t left = ci.prefix()[level - 1];
  const count_t right = ci.n() - left;
  const count_t m_prev = ci.mult()[level - 2];
  const Acc gap = static_cast<Acc>(ci.gaps()[level - 2]);
  if (prev.p_max() != ci.prefix()[level - 2] || prev.r_max() != ci.n() - ci.prefix()[level - 2])
    throw Error(Errc::InternalInconsistency,
                "previous level table has the wrong shape for level " + std::to_string(level));

  LevelResult<Acc> out{LevelTable<Acc>(left, right, kInfeasible<Acc>),
                       options.record_choices ? LevelTable<choice_t>(left, right, 0)
                                              : LevelTable<choice_t>()};
  const bool maximize = objective == Objective::Max;

  auto fill_rows = [&](std::size_t row_lo, std::size_t row_hi) {
    for (auto p = static_cast<count_t>(row_lo); p < static_cast<count_t>(row_hi); ++p) {
      const count_t q = left - p;
      auto range = transition_bounds(p, q, m_prev);
      if (options.fault_strict_lower_bound) {
        range.lo = std::max<count_t>(range.lo, 1);
        range.hi = std::min(range.hi, m_prev - 1);
      }
      auto best = out.values.row(p);
      std::span<choice_t> choice;
      if (options.record_choices) choice = out.choices.row(p);

      // r0 ascending with strict improvement keeps the smallest optimizer.
      for (count_t r0 = range.lo; r0 <= range.hi; ++r0) {
        const Acc* src = prev.row(p - r0).data() + r0;
        for (count_t r = 0; r <= right; ++r) {
          const Acc v = src[r];
          if (v < 0) continue;
          Acc& b = best[static_cast<std::size_t>(r)];
          if (b < 0 || (maximize ? v > b : v < b)) {
            b = v;
            if (options.record_choices) choice[static_cast<std::size_t>(r)] =
                static_cast<choice_t>(r0);
          }
        }
      }
      for (count_t r = 0; r <= right; ++r) {
        Acc& b = best[static_cast<std::size_t>(r)];
        if (b < 0) continue;
        const count_t t = right - r;
        b += gap * static_cast<Acc>(p * t + q * r);
      }
    }
  };

  // Small levels are not worth a thread spawn.
  const auto states = static_cast<std::size_t>((left + 1) * (right + 1));
  const unsigned workers = states < (std::size_t{1} << 15) ? 1u : options.threads;
  detail::parallel_chunks(0, static_cast<std::size_t>(left + 1), workers, fill_rows);
  return out;
}

/// Choices for levels 2..l (index level - 1; entry 0 is unused) and the
/// top-level values. `values` holds every level only when requested.
template <class Acc>
struct DpTables {
  std::vector<LevelTable<choice_t>> choices;
  LevelTable<Acc> top;
  std::vector<LevelTable<Acc>> values;
};

/// Bottom-up fill of all levels. Keeps two rolling value levels unless
/// keep_all_values is set.
template <class Acc>
DpTables<Acc> fill_tables(const CompressedInstance& ci, Objective objective,
                          const FillOptions& options = {}, bool keep_all_values = false) {
  DpTables<Acc> tables;
  if (options.record_choices) tables.choices.resize(ci.l());
  LevelTable<Acc> current = base_level<Acc>(ci);
  if (keep_all_values) tables.values.push_back(current);
  for (std::size_t level = 2; level <= ci.l(); ++level) {
    auto next = fill_level(ci, level, current, objective, options);
    current = std::move(next.values);
    if (options.record_choices) tables.choices[level - 1] = std::move(next.choices);
    if (keep_all_values) tables.values.push_back(current);
  }
  tables.top = std::move(current);
  return tables;
}

/// Best level-l state for the spec; ties go to the lexicographically
/// smallest (p, r).
template <class Acc>
std::pair<DpState, CutValue> scan_roots(const CompressedInstance& ci, const LevelTable<Acc>& top,
                                        const ProblemSpec& spec) {
  validate_spec(spec, ci.n());
  const count_t p_max = ci.prefix()[ci.l() - 1];
  const count_t r_max = ci.mult().back();
  if (top.p_max() != p_max || top.r_max() != r_max)
    throw Error(Errc::InternalInconsistency, "top table does not match the last level");
  const bool maximize = spec.objective == Objective::Max;

  bool found = false;
  DpState best{ci.l(), 0, 0};
  Acc best_value = 0;
  auto consider = [&](count_t p, count_t r) {
    const Acc v = top.at(p, r);
    if (v < 0) return;
    if (!found || (maximize ? v > best_value : v < best_value)) {
      found = true;
      best = DpState{ci.l(), p, r};
      best_value = v;
    }
  };
  if (spec.k) {
    const count_t k = *spec.k;
    for (count_t p = std::max<count_t>(0, k - r_max); p <= std::min(p_max, k); ++p)
      consider(p, k - p);
  } else {
    for (count_t p = 0; p <= p_max; ++p)
      for (count_t r = 0; r <= r_max; ++r) consider(p, r);
  }
  if (!found) throw Error(Errc::InternalInconsistency, "no feasible root state");
  return {best, CutValue{static_cast<wide_int>(best_value)}};
}

/// Walks the stored choices from the root down to level 1.
template <class Acc>
CountProfile reconstruct(const CompressedInstance& ci, const DpTables<Acc>& tables,
                         const DpState& root) {
  if (root.level != ci.l() || root.p < 0 || root.r < 0 || root.p > ci.prefix()[ci.l() - 1] ||
      root.r > ci.mult().back())
    throw Error(Errc::InternalInconsistency, "root is not a valid top-level state");
  if (ci.l() > 1 && tables.choices.size() != ci.l())
    throw Error(Errc::InternalInconsistency, "tables carry no choices (value-only mode)");

  CountProfile profile;
  profile.a.assign(ci.l(), 0);
  profile.a[ci.l() - 1] = root.r;
  count_t p = root.p;
  count_t r = root.r;
  for (std::size_t level = ci.l(); level >= 2; --level) {
    const count_t q = ci.prefix()[level - 1] - p;
    const count_t m_prev = ci.mult()[level - 2];
    const auto r0 = static_cast<count_t>(tables.choices[level - 1].at(p, r));
    const auto range = transition_bounds(p, q, m_prev);
    if (r0 < range.lo || r0 > range.hi)
      throw Error(Errc::InternalInconsistency,
                  "stored choice outside transition bounds at level " + std::to_string(level));
    profile.a[level - 2] = r0;
    p -= r0;
    r += r0;
  }
  if (p != 0) throw Error(Errc::InternalInconsistency, "backtracking did not end at p = 0");
  return profile;
}

struct SolveOptions {
  unsigned threads = 1;
  /// Skip choice tables: O(n^2) memory, no profile in the result.
  bool value_only = false;
  bool fault_strict_lower_bound = false;
};

namespace detail {

/// Upper bound on any cut value of the instance: (n^2 / 4) * span.
inline wide_int cut_value_bound(const CompressedInstance& ci) {
  const wide_int n = ci.n();
  return (n * n / 4 + 1) * static_cast<wide_int>(ci.span());
}

/// For unconstrained problems the two sides are interchangeable; report the
/// one with a_1 <= m_1 - a_1, lexicographically smaller on a tie.
inline CountProfile canonical_side(const CompressedInstance& ci, CountProfile profile) {
  auto other = complement(ci, profile);
  const count_t a1 = profile.a.front();
  const count_t m1 = ci.mult().front();
  if (2 * a1 > m1 || (2 * a1 == m1 && other.a < profile.a)) return other;
  return profile;
}

template <class Acc>
Solution solve_with(const CompressedInstance& ci, const ProblemSpec& spec,
                    const SolveOptions& options) {
  FillOptions fill{options.threads, !options.value_only, options.fault_strict_lower_bound};
  auto tables = fill_tables<Acc>(ci, spec.objective, fill);
  const auto [root, value] = scan_roots(ci, tables.top, spec);

  Solution sol;
  sol.spec = spec;
  sol.value = value;
  sol.k_actual = root.p + root.r;
  if (options.value_only) return sol;

  auto profile = reconstruct(ci, tables, root);
  if (profile.total() != root.p + root.r)
    throw Error(Errc::InternalInconsistency, "reconstructed profile lost first-set elements");
  if (cut_value_sweep(ci, profile) != value)
    throw Error(Errc::InternalInconsistency,
                "reconstructed profile evaluates to " + to_decimal(cut_value_sweep(ci, profile).value) +
                    ", table says " + to_decimal(value.value));
  if (!spec.k) profile = canonical_side(ci, std::move(profile));
  sol.k_actual = profile.total();
  sol.profile = std::move(profile);
  return sol;
}

}  // namespace detail

/// Optimal cut for the spec. Values fit in 64 bits for most inputs; wider
/// accumulation is used only when the value bound demands it.
inline Solution solve(const CompressedInstance& ci, const ProblemSpec& spec,
                      const SolveOptions& options = {}) {
  validate_spec(spec, ci.n());
  const wide_int bound = detail::cut_value_bound(ci);
  if (bound > (wide_int{1} << 120))
    throw Error(Errc::Overflow, "instance too large for exact 128-bit cut values");
  if (bound < wide_int{std::numeric_limits<std::int64_t>::max() / 4})
    return detail::solve_with<std::int64_t>(ci, spec, options);
  return detail::solve_with<wide_int>(ci, spec, options);
}

}  // namespace linecut
