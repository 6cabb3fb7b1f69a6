#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cjsp/error.hpp"

namespace cjsp {

// Internal time unit. Instances with fractional durations are stored in
// centiunits and carry scale = 100.
using Time = std::int64_t;

struct OperationSpec {
  int machine = 0;
  Time duration = 0;

  friend bool operator==(const OperationSpec&, const OperationSpec&) = default;
};

// A job is its technological route; consecutive operations are the only
// precedence pairs.
struct Job {
  std::vector<OperationSpec> ops;

  friend bool operator==(const Job&, const Job&) = default;
};

struct Instance {
  std::string name;
  int machines = 0;
  std::vector<Job> jobs;
  int scale = 1;

  int job_count() const noexcept { return static_cast<int>(jobs.size()); }

  std::size_t total_ops() const noexcept {
    std::size_t total = 0;
    for (const auto& job : jobs) total += job.ops.size();
    return total;
  }

  // Longest route over all jobs.
  std::size_t max_route_length() const noexcept {
    std::size_t longest = 0;
    for (const auto& job : jobs) longest = std::max(longest, job.ops.size());
    return longest;
  }

  // Name is a label, not structure.
  bool structurally_equal(const Instance& other) const {
    return machines == other.machines && scale == other.scale && jobs == other.jobs;
  }

  friend bool operator==(const Instance&, const Instance&) = default;
};

// Throws if the instance breaks one of its invariants.
inline void check_instance(const Instance& inst) {
  if (inst.jobs.empty() || inst.machines < 1) {
    throw Error(ErrorKind::MalformedHeader, "instance needs at least one job and one machine");
  }
  if (inst.scale < 1) throw Error(ErrorKind::MalformedHeader, "scale must be positive");
  for (std::size_t j = 0; j < inst.jobs.size(); ++j) {
    if (inst.jobs[j].ops.empty()) {
      throw Error(ErrorKind::BadOpCount, "job " + std::to_string(j) + " has no operations");
    }
    for (const auto& op : inst.jobs[j].ops) {
      if (op.machine < 0 || op.machine >= inst.machines) {
        throw Error(ErrorKind::MachineOutOfRange,
                    "job " + std::to_string(j) + " uses machine " + std::to_string(op.machine));
      }
      if (op.duration < 0) {
        throw Error(ErrorKind::NegativeDuration, "job " + std::to_string(j) + " has a negative duration");
      }
    }
  }
}

namespace detail {

struct Line {
  int number = 0;
  std::vector<std::string_view> tokens;
};

// Splits text into whitespace-separated tokens per line, dropping blank lines
// and lines whose first non-blank character is '#'. Views point into `text`.
inline std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    pos = end + 1;

    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      std::size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      if (i > start) line.tokens.push_back(raw.substr(start, i - start));
    }
    if (line.tokens.empty() || line.tokens.front().front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    lines.push_back(std::move(line));
    if (end == text.size()) break;
  }
  return lines;
}

inline bool parse_int(std::string_view token, long long& out) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

inline std::pair<int, int> parse_header(const std::vector<Line>& lines) {
  if (lines.empty()) throw Error(ErrorKind::MalformedHeader, "missing \"n m\" header");
  const Line& header = lines.front();
  long long n = 0, m = 0;
  if (header.tokens.size() != 2 || !parse_int(header.tokens[0], n) || !parse_int(header.tokens[1], m) ||
      n <= 0 || m <= 0 || n > 1'000'000 || m > 1'000'000) {
    throw Error(ErrorKind::MalformedHeader, "header must be two positive integers \"n m\"", header.number);
  }
  return {static_cast<int>(n), static_cast<int>(m)};
}

inline int parse_machine(std::string_view token, int machines, int line) {
  long long value = 0;
  if (!parse_int(token, value)) {
    throw Error(ErrorKind::WrongTokenCount, "machine index \"" + std::string(token) + "\" is not an integer",
                line);
  }
  if (value < 0 || value >= machines) {
    throw Error(ErrorKind::MachineOutOfRange,
                "machine index " + std::string(token) + " outside [0, " + std::to_string(machines) + ")", line);
  }
  return static_cast<int>(value);
}

// Parses a duration with at most two decimals into centiunits.
inline Time parse_centi(std::string_view token, bool& had_point, int line) {
  bool negative = !token.empty() && token.front() == '-';
  std::string_view body = negative ? token.substr(1) : token;
  std::size_t dot = body.find('.');
  std::string_view whole = body.substr(0, dot);
  std::string_view frac = dot == std::string_view::npos ? std::string_view{} : body.substr(dot + 1);
  long long whole_value = 0;
  long long frac_value = 0;
  bool ok = !whole.empty() && whole.front() != '+' && whole.front() != '-' && parse_int(whole, whole_value);
  if (ok && dot != std::string_view::npos) {
    ok = !frac.empty() && frac.size() <= 2 && frac.front() != '+' && frac.front() != '-' &&
         parse_int(frac, frac_value);
    if (ok && frac.size() == 1) frac_value *= 10;
    had_point = true;
  }
  if (!ok) {
    throw Error(ErrorKind::BadDuration,
                "duration \"" + std::string(token) + "\" is not a number with at most two decimals", line);
  }
  if (negative) throw Error(ErrorKind::NegativeDuration, "negative duration " + std::string(token), line);
  return whole_value * 100 + frac_value;
}

}  // namespace detail

// OR-Library layout: "n m" then n lines of m (machine, duration) pairs.
inline Instance parse_orlib(std::string_view text, std::string name = {}) {
  const auto lines = detail::tokenize(text);
  const auto [n, m] = detail::parse_header(lines);

  Instance inst;
  inst.name = std::move(name);
  inst.machines = m;
  inst.jobs.reserve(n);
  for (int j = 0; j < n; ++j) {
    if (static_cast<std::size_t>(j + 1) >= lines.size()) {
      throw Error(ErrorKind::WrongTokenCount,
                  "expected " + std::to_string(n) + " job lines, found " + std::to_string(j));
    }
    const auto& line = lines[j + 1];
    if (line.tokens.size() != static_cast<std::size_t>(2 * m)) {
      throw Error(ErrorKind::WrongTokenCount,
                  "job line has " + std::to_string(line.tokens.size()) + " tokens, expected " +
                      std::to_string(2 * m),
                  line.number);
    }
    Job job;
    job.ops.reserve(m);
    for (int k = 0; k < m; ++k) {
      OperationSpec op;
      op.machine = detail::parse_machine(line.tokens[2 * k], m, line.number);
      long long duration = 0;
      if (!detail::parse_int(line.tokens[2 * k + 1], duration)) {
        throw Error(ErrorKind::WrongTokenCount,
                    "duration \"" + std::string(line.tokens[2 * k + 1]) + "\" is not an integer", line.number);
      }
      if (duration < 0) throw Error(ErrorKind::NegativeDuration, "negative duration", line.number);
      op.duration = duration;
      job.ops.push_back(op);
    }
    inst.jobs.push_back(std::move(job));
  }
  if (lines.size() > static_cast<std::size_t>(n) + 1) {
    throw Error(ErrorKind::WrongTokenCount, "unexpected data after the last job", lines[n + 1].number);
  }
  return inst;
}

// Variable-length layout: "n m" then n lines "L machine dur machine dur ...".
// Any duration written with a decimal point switches the whole instance to
// centiunits (scale = 100).
inline Instance parse_extended(std::string_view text, std::string name = {}) {
  const auto lines = detail::tokenize(text);
  const auto [n, m] = detail::parse_header(lines);

  Instance inst;
  inst.name = std::move(name);
  inst.machines = m;
  inst.jobs.reserve(n);
  bool had_point = false;
  for (int j = 0; j < n; ++j) {
    if (static_cast<std::size_t>(j + 1) >= lines.size()) {
      throw Error(ErrorKind::WrongTokenCount,
                  "expected " + std::to_string(n) + " job lines, found " + std::to_string(j));
    }
    const auto& line = lines[j + 1];
    long long count = 0;
    if (!detail::parse_int(line.tokens.front(), count) || count <= 0) {
      throw Error(ErrorKind::BadOpCount, "operation count must be a positive integer", line.number);
    }
    if (line.tokens.size() != static_cast<std::size_t>(1 + 2 * count)) {
      throw Error(ErrorKind::BadOpCount,
                  "job declares " + std::to_string(count) + " operations but has " +
                      std::to_string(line.tokens.size() - 1) + " tokens after the count",
                  line.number);
    }
    Job job;
    job.ops.reserve(count);
    for (long long k = 0; k < count; ++k) {
      OperationSpec op;
      op.machine = detail::parse_machine(line.tokens[1 + 2 * k], m, line.number);
      op.duration = detail::parse_centi(line.tokens[2 + 2 * k], had_point, line.number);
      job.ops.push_back(op);
    }
    inst.jobs.push_back(std::move(job));
  }
  if (lines.size() > static_cast<std::size_t>(n) + 1) {
    throw Error(ErrorKind::WrongTokenCount, "unexpected data after the last job", lines[n + 1].number);
  }
  if (had_point) {
    inst.scale = 100;
  } else {
    for (auto& job : inst.jobs)
      for (auto& op : job.ops) op.duration /= 100;
  }
  return inst;
}

// Formats an internal time in display units ("657.55" for scale 100).
inline std::string format_time(Time value, int scale) {
  if (scale == 1) return std::to_string(value);
  std::ostringstream out;
  const Time whole = value / scale;
  const Time frac = value % scale;
  if (value < 0 && whole == 0) out << '-';
  out << whole << '.';
  std::string digits = std::to_string(frac < 0 ? -frac : frac);
  const std::size_t width = std::to_string(scale - 1).size();
  out << std::string(width - std::min(width, digits.size()), '0') << digits;
  return out.str();
}

inline std::string to_extended(const Instance& inst, std::string_view comment = {}) {
  std::ostringstream out;
  if (!comment.empty()) out << "# " << comment << '\n';
  out << inst.job_count() << ' ' << inst.machines << '\n';
  for (const auto& job : inst.jobs) {
    out << job.ops.size();
    for (const auto& op : job.ops) out << ' ' << op.machine << ' ' << format_time(op.duration, inst.scale);
    out << '\n';
  }
  return out.str();
}

// max(heaviest machine load, longest job).
inline Time lower_bound(const Instance& inst) {
  std::vector<Time> load(inst.machines, 0);
  Time longest_job = 0;
  for (const auto& job : inst.jobs) {
    Time length = 0;
    for (const auto& op : job.ops) {
      load[op.machine] += op.duration;
      length += op.duration;
    }
    longest_job = std::max(longest_job, length);
  }
  const Time heaviest = load.empty() ? 0 : *std::max_element(load.begin(), load.end());
  return std::max(heaviest, longest_job);
}

inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// ".jsx" files use the extended layout, everything else OR-Library.
inline Instance load_instance(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  const std::string name = path.stem().string();
  return path.extension() == ".jsx" ? parse_extended(text, name) : parse_orlib(text, name);
}

}  // namespace cjsp
