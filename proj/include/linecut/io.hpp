#pragma once

// Instance text format, solution rendering and problem-name handling.
//
// Instance format: UTF-8 text, one point per line as `<decimal>` or
// `<decimal> <multiplicity>`. `#` starts a comment; blank lines are ignored.
// Decimals are `[+-]digits[.digits]` with at most 9 fractional digits; the
// instance scale is the largest fractional digit count present.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "linecut/model.hpp"

namespace linecut {

/// Guard against multiplicity columns that would exhaust memory.
inline constexpr count_t kMaxPoints = 10'000'000;

namespace detail {

struct ParsedDecimal {
  wide_int mantissa = 0;
  unsigned frac_digits = 0;
};

inline wide_int pow10(unsigned e) {
  wide_int v = 1;
  while (e-- > 0) v *= 10;
  return v;
}

inline std::string line_tag(std::size_t line) { return "line " + std::to_string(line) + ": "; }

inline ParsedDecimal parse_decimal(std::string_view tok, std::size_t line) {
  const auto bad = [&] {
    return Error(Errc::ParseError, line_tag(line) + "malformed number '" + std::string(tok) + "'");
  };
  std::size_t i = 0;
  bool neg = false;
  if (i < tok.size() && (tok[i] == '+' || tok[i] == '-')) neg = tok[i++] == '-';
  ParsedDecimal out;
  // Anything above this cannot scale into range at any admissible scale.
  const wide_int limit = static_cast<wide_int>(kMaxScaled) * pow10(kMaxScaleExp);
  std::size_t int_digits = 0;
  bool in_fraction = false;
  for (; i < tok.size(); ++i) {
    const char c = tok[i];
    if (c == '.') {
      if (in_fraction || int_digits == 0) throw bad();
      in_fraction = true;
      continue;
    }
    if (c < '0' || c > '9') throw bad();
    if (in_fraction) {
      if (++out.frac_digits > kMaxScaleExp)
        throw Error(Errc::PrecisionError, line_tag(line) + "more than 9 fractional digits in '" +
                                              std::string(tok) + "'");
    } else {
      ++int_digits;
    }
    out.mantissa = out.mantissa * 10 + (c - '0');
    if (out.mantissa > limit)
      throw Error(Errc::RangeError, line_tag(line) + "'" + std::string(tok) + "' is out of range");
  }
  if (int_digits == 0 || (in_fraction && out.frac_digits == 0)) throw bad();
  if (neg) out.mantissa = -out.mantissa;
  return out;
}

}  // namespace detail

inline Instance parse_instance(std::string_view text) {
  struct Entry {
    detail::ParsedDecimal value;
    count_t count;
    std::size_t line;
  };
  std::vector<Entry> entries;
  unsigned scale = 0;
  count_t total = 0;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      const auto start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    if (tokens.empty()) continue;
    if (tokens.size() > 2)
      throw Error(Errc::ParseError, detail::line_tag(line_no) + "expected '<value> [count]'");

    Entry e{detail::parse_decimal(tokens[0], line_no), 1, line_no};
    if (tokens.size() == 2) {
      const auto tok = tokens[1];
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), e.count);
      if (ec != std::errc{} || ptr != tok.data() + tok.size() || e.count < 1)
        throw Error(Errc::ParseError, detail::line_tag(line_no) + "multiplicity '" +
                                          std::string(tok) + "' is not a positive integer");
    }
    total += e.count;
    if (total > kMaxPoints)
      throw Error(Errc::RangeError, detail::line_tag(line_no) + "more than " +
                                        std::to_string(kMaxPoints) + " points");
    scale = std::max(scale, e.value.frac_digits);
    entries.push_back(e);
  }
  if (entries.empty()) throw Error(Errc::InstanceEmpty, "instance has no points");

  Instance inst;
  inst.scale_exp = scale;
  inst.coords.reserve(static_cast<std::size_t>(total));
  for (const auto& e : entries) {
    const wide_int scaled = e.value.mantissa * detail::pow10(scale - e.value.frac_digits);
    if (scaled > kMaxScaled || scaled < -kMaxScaled)
      throw Error(Errc::RangeError, detail::line_tag(e.line) +
                                        "coordinate exceeds 2^40 units at scale 10^-" +
                                        std::to_string(scale));
    for (count_t c = 0; c < e.count; ++c) inst.coords.push_back(Coord{static_cast<std::int64_t>(scaled)});
  }
  return inst;
}

/// One point per line in input order, each with exactly scale_exp
/// fractional digits, so parsing restores the same scale.
inline std::string render_instance(const Instance& inst) {
  std::string out;
  for (const auto& c : inst.coords) {
    out += to_fixed_point(c.scaled, inst.scale_exp);
    out += '\n';
  }
  return out;
}

/// 64-bit FNV-1a, used for golden digests of generated instances.
inline std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

enum class OutputFormat { Text, Json };

/// Problem names accepted on the command line.
inline const std::vector<std::string>& problem_names() {
  static const std::vector<std::string> names{"max-cut", "max-bisection", "min-bisection",
                                              "max-partition", "min-partition"};
  return names;
}

/// Maps a problem name (and --k for partitions) to a spec for n points.
/// Usage mistakes throw std::invalid_argument; infeasible requests throw Error.
inline ProblemSpec problem_spec_for(const std::string& name, std::optional<count_t> k, count_t n) {
  const bool is_partition = name == "max-partition" || name == "min-partition";
  if (is_partition && !k) throw std::invalid_argument(name + " requires --k");
  if (!is_partition && k) throw std::invalid_argument("--k only applies to max-partition and min-partition");
  ProblemSpec spec;
  if (name == "max-cut") spec = ProblemSpec::max_cut();
  else if (name == "max-bisection") spec = ProblemSpec::bisection(Objective::Max, n);
  else if (name == "min-bisection") spec = ProblemSpec::bisection(Objective::Min, n);
  else if (name == "max-partition") spec = ProblemSpec::partition(Objective::Max, *k);
  else if (name == "min-partition") spec = ProblemSpec::partition(Objective::Min, *k);
  else throw std::invalid_argument("unknown problem '" + name + "'");
  validate_spec(spec, n);
  return spec;
}

inline std::string render_solution(const Solution& sol, const CompressedInstance& ci,
                                   const std::string& problem, OutputFormat fmt,
                                   std::optional<std::int64_t> elapsed_ns = std::nullopt) {
  const auto value = to_fixed_point(sol.value.value, ci.scale_exp());
  if (fmt == OutputFormat::Json) {
    nlohmann::ordered_json j;
    j["problem"] = problem;
    j["n"] = ci.n();
    j["k"] = sol.k_actual;
    j["value"] = value;
    if (sol.profile) {
      auto rows = nlohmann::ordered_json::array();
      for (std::size_t i = 0; i < ci.l(); ++i) {
        nlohmann::ordered_json row;
        row["x"] = to_fixed_point(ci.xs()[i].scaled, ci.scale_exp());
        row["count_first"] = sol.profile->a[i];
        row["count_second"] = ci.mult()[i] - sol.profile->a[i];
        rows.push_back(std::move(row));
      }
      j["assignment"] = std::move(rows);
    } else {
      j["assignment"] = nullptr;
    }
    if (elapsed_ns) j["elapsed_ns"] = *elapsed_ns;
    else j["elapsed_ns"] = nullptr;
    return j.dump(2) + "\n";
  }

  std::ostringstream os;
  os << "problem: " << problem << " (" << describe(sol.spec) << ")\n";
  os << "points: " << ci.n() << " (" << ci.l() << " distinct)\n";
  os << "first set size: " << sol.k_actual << ", second set size: " << ci.n() - sol.k_actual << "\n";
  os << "value: " << value << "\n";
  if (sol.profile) {
    os << "assignment (x: first / second):\n";
    for (std::size_t i = 0; i < ci.l(); ++i)
      os << "  " << to_fixed_point(ci.xs()[i].scaled, ci.scale_exp()) << ": " << sol.profile->a[i]
         << " / " << ci.mult()[i] - sol.profile->a[i] << "\n";
  }
  if (elapsed_ns) os << "elapsed: " << *elapsed_ns << " ns\n";
  return os.str();
}

}  // namespace linecut
