#pragma once

// Points on the real line, their compressed (distinct value, multiplicity)
// form, two-set partitions encoded as count profiles, and the cut value.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace linecut {

using count_t = std::int64_t;
using wide_int = __int128;

enum class Errc {
  InstanceEmpty,
  InvalidProfile,
  InvalidK,
  UnsupportedProblem,
  OddBisection,
  Overflow,
  InternalInconsistency,
  TooLargeForOracle,
  InvalidGenSpec,
  ParseError,
  PrecisionError,
  RangeError,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::InstanceEmpty: return "InstanceEmpty";
    case Errc::InvalidProfile: return "InvalidProfile";
    case Errc::InvalidK: return "InvalidK";
    case Errc::UnsupportedProblem: return "UnsupportedProblem";
    case Errc::OddBisection: return "OddBisection";
    case Errc::Overflow: return "Overflow";
    case Errc::InternalInconsistency: return "InternalInconsistency";
    case Errc::TooLargeForOracle: return "TooLargeForOracle";
    case Errc::InvalidGenSpec: return "InvalidGenSpec";
    case Errc::ParseError: return "ParseError";
    case Errc::PrecisionError: return "PrecisionError";
    case Errc::RangeError: return "RangeError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Largest admissible |scaled| coordinate. Keeps every cut value of an
/// instance with n <= 1e5 points below 2^74.
inline constexpr std::int64_t kMaxScaled = std::int64_t{1} << 40;
inline constexpr unsigned kMaxScaleExp = 9;

/// A coordinate stored as an exact integer: the real value is
/// scaled * 10^-scale_exp, with scale_exp shared by the whole instance.
struct Coord {
  std::int64_t scaled = 0;
  friend auto operator<=>(const Coord&, const Coord&) = default;
};

/// Exact cut value in units of 10^-scale_exp.
struct CutValue {
  wide_int value = 0;
  friend auto operator<=>(const CutValue&, const CutValue&) = default;
};

/// Renders a signed wide integer as decimal.
inline std::string to_decimal(wide_int v) {
  if (v == 0) return "0";
  const bool neg = v < 0;
  // Work with the negative magnitude so the minimum value does not overflow.
  wide_int x = neg ? v : -v;
  std::string digits;
  while (x != 0) {
    digits.push_back(static_cast<char>('0' - static_cast<int>(x % 10)));
    x /= 10;
  }
  if (neg) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

/// Renders scaled * 10^-scale_exp exactly, with scale_exp fractional digits.
inline std::string to_fixed_point(wide_int scaled, unsigned scale_exp) {
  const bool neg = scaled < 0;
  std::string mag = to_decimal(neg ? -scaled : scaled);
  if (scale_exp == 0) return neg ? "-" + mag : mag;
  if (mag.size() <= scale_exp) mag.insert(0, scale_exp + 1 - mag.size(), '0');
  mag.insert(mag.size() - scale_exp, ".");
  return neg ? "-" + mag : mag;
}

/// A finite multiset of points on the line. Order is irrelevant and
/// duplicates are allowed.
struct Instance {
  std::vector<Coord> coords;
  unsigned scale_exp = 0;

  std::size_t n() const noexcept { return coords.size(); }

  static Instance from_integers(const std::vector<std::int64_t>& values) {
    Instance inst;
    inst.coords.reserve(values.size());
    for (auto v : values) inst.coords.push_back(Coord{v});
    return inst;
  }
};

/// Sorted distinct values x_1 < ... < x_l with multiplicities m_i.
/// Indices into xs/mult/gaps are 0-based; prefix has l+1 entries with
/// prefix[0] = 0 and prefix[i] = m_1 + ... + m_i.
class CompressedInstance {
 public:
  static CompressedInstance from_counts(std::vector<Coord> xs, std::vector<count_t> mult,
                                        unsigned scale_exp = 0) {
    if (xs.empty()) throw Error(Errc::InstanceEmpty, "instance has no points");
    if (xs.size() != mult.size())
      throw Error(Errc::InvalidProfile, "value and multiplicity lists differ in length");
    CompressedInstance ci;
    ci.scale_exp_ = scale_exp;
    ci.prefix_.assign(1, 0);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (mult[i] < 1) throw Error(Errc::InvalidProfile, "multiplicity must be positive");
      if (xs[i].scaled > kMaxScaled || xs[i].scaled < -kMaxScaled)
        throw Error(Errc::RangeError, "coordinate magnitude exceeds 2^40");
      if (i > 0 && !(xs[i - 1] < xs[i]))
        throw Error(Errc::InvalidProfile, "values must be strictly increasing");
      if (i > 0) ci.gaps_.push_back(xs[i].scaled - xs[i - 1].scaled);
      ci.prefix_.push_back(ci.prefix_.back() + mult[i]);
    }
    ci.xs_ = std::move(xs);
    ci.mult_ = std::move(mult);
    return ci;
  }

  std::size_t l() const noexcept { return xs_.size(); }
  count_t n() const noexcept { return prefix_.back(); }
  unsigned scale_exp() const noexcept { return scale_exp_; }
  const std::vector<Coord>& xs() const noexcept { return xs_; }
  const std::vector<count_t>& mult() const noexcept { return mult_; }
  const std::vector<count_t>& prefix() const noexcept { return prefix_; }
  const std::vector<std::int64_t>& gaps() const noexcept { return gaps_; }
  std::int64_t span() const noexcept { return xs_.back().scaled - xs_.front().scaled; }

  /// Number of profiles prod(m_i + 1), saturating at `cap + 1`.
  std::uint64_t profile_count(std::uint64_t cap) const noexcept {
    std::uint64_t total = 1;
    for (auto m : mult_) {
      const auto f = static_cast<std::uint64_t>(m) + 1;
      if (total > cap / f) return cap + 1;
      total *= f;
    }
    return total;
  }

 private:
  CompressedInstance() = default;

  std::vector<Coord> xs_;
  std::vector<count_t> mult_;
  std::vector<count_t> prefix_;
  std::vector<std::int64_t> gaps_;
  unsigned scale_exp_ = 0;
};

inline CompressedInstance compress(const Instance& instance) {
  if (instance.coords.empty()) throw Error(Errc::InstanceEmpty, "instance has no points");
  std::vector<Coord> sorted = instance.coords;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Coord> xs;
  std::vector<count_t> mult;
  for (const auto& c : sorted) {
    if (!xs.empty() && xs.back() == c) {
      ++mult.back();
    } else {
      xs.push_back(c);
      mult.push_back(1);
    }
  }
  return CompressedInstance::from_counts(std::move(xs), std::move(mult), instance.scale_exp);
}

/// Copies of each distinct value assigned to the first set.
struct CountProfile {
  std::vector<count_t> a;

  count_t total() const noexcept {
    count_t s = 0;
    for (auto v : a) s += v;
    return s;
  }

  friend bool operator==(const CountProfile&, const CountProfile&) = default;
};

inline void validate_profile(const CompressedInstance& ci, const CountProfile& profile) {
  if (profile.a.size() != ci.l())
    throw Error(Errc::InvalidProfile, "profile length " + std::to_string(profile.a.size()) +
                                          " does not match " + std::to_string(ci.l()) +
                                          " distinct values");
  for (std::size_t i = 0; i < ci.l(); ++i) {
    if (profile.a[i] < 0 || profile.a[i] > ci.mult()[i])
      throw Error(Errc::InvalidProfile, "profile entry " + std::to_string(i) + " out of range");
  }
}

inline CountProfile complement(const CompressedInstance& ci, const CountProfile& profile) {
  CountProfile out;
  out.a.reserve(profile.a.size());
  for (std::size_t i = 0; i < profile.a.size(); ++i) out.a.push_back(ci.mult()[i] - profile.a[i]);
  return out;
}

/// Cut value as a sum over gaps: every gap g_i is crossed by each pair with
/// one endpoint on either side of it and the endpoints in different sets.
/// Linear in l.
inline CutValue cut_value_sweep(const CompressedInstance& ci, const CountProfile& profile) {
  validate_profile(ci, profile);
  const count_t n = ci.n();
  const count_t a_total = profile.total();
  wide_int value = 0;
  count_t a_left = 0;
  for (std::size_t i = 0; i + 1 < ci.l(); ++i) {
    a_left += profile.a[i];
    const count_t b_left = ci.prefix()[i + 1] - a_left;
    const count_t a_right = a_total - a_left;
    const count_t b_right = n - ci.prefix()[i + 1] - a_right;
    const wide_int crossing = static_cast<wide_int>(a_left) * b_right +
                              static_cast<wide_int>(b_left) * a_right;
    value += crossing * ci.gaps()[i];
  }
  return CutValue{value};
}

/// Cut value straight from the definition: sum over value pairs of
/// a_i * (m_j - a_j) * |x_i - x_j|. Quadratic in l.
inline CutValue cut_value_naive(const CompressedInstance& ci, const CountProfile& profile) {
  validate_profile(ci, profile);
  wide_int value = 0;
  for (std::size_t i = 0; i < ci.l(); ++i) {
    for (std::size_t j = 0; j < ci.l(); ++j) {
      const wide_int dist = ci.xs()[i].scaled > ci.xs()[j].scaled
                                ? ci.xs()[i].scaled - ci.xs()[j].scaled
                                : ci.xs()[j].scaled - ci.xs()[i].scaled;
      value += static_cast<wide_int>(profile.a[i]) * (ci.mult()[j] - profile.a[j]) * dist;
    }
  }
  return CutValue{value};
}

enum class Objective { Min, Max };

/// Objective plus an optional first-set cardinality k.
struct ProblemSpec {
  Objective objective = Objective::Max;
  std::optional<count_t> k;

  static ProblemSpec max_cut() { return {Objective::Max, std::nullopt}; }
  static ProblemSpec partition(Objective obj, count_t k) { return {obj, k}; }

  /// k = n/2; throws OddBisection for odd n.
  static ProblemSpec bisection(Objective obj, count_t n) {
    if (n % 2 != 0)
      throw Error(Errc::OddBisection,
                  "bisection requires an even number of points (n = " + std::to_string(n) +
                      "); use a partition with k = " + std::to_string(n / 2) + " instead");
    return {obj, n / 2};
  }

  bool constrained() const noexcept { return k.has_value(); }

  friend bool operator==(const ProblemSpec&, const ProblemSpec&) = default;
};

inline std::string describe(const ProblemSpec& spec) {
  std::string s = spec.objective == Objective::Max ? "MAX" : "MIN";
  s += spec.k ? " EXACT(" + std::to_string(*spec.k) + ")" : " UNCONSTRAINED";
  return s;
}

inline void validate_spec(const ProblemSpec& spec, count_t n) {
  if (spec.k && (*spec.k < 0 || *spec.k > n))
    throw Error(Errc::InvalidK, "k = " + std::to_string(*spec.k) + " outside [0, " +
                                    std::to_string(n) + "]");
  if (spec.objective == Objective::Min && !spec.k)
    throw Error(Errc::UnsupportedProblem,
                "unconstrained minimum cut is trivially 0; give a cardinality k");
}

/// Optimal partition found by a solver. `profile` is absent in value-only mode.
struct Solution {
  std::optional<CountProfile> profile;
  CutValue value;
  ProblemSpec spec;
  count_t k_actual = 0;
};

}  // namespace linecut
