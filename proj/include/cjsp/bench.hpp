#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "cjsp/annealing.hpp"
#include "cjsp/cyclic.hpp"
#include "cjsp/error.hpp"
#include "cjsp/instance.hpp"

namespace cjsp {

// Best-known order-1 makespans in display units, keyed by instance name.
class BestKnownRegistry {
 public:
  // Reference column of the published comparison table.
  static BestKnownRegistry published() {
    BestKnownRegistry reg;
    const std::pair<const char*, double> rows[] = {
        {"abz6", 943},  {"ft06", 55},   {"ft10", 930},  {"ft20", 1165}, {"la01", 666},  {"la02", 655},
        {"la03", 597},  {"la04", 590},  {"la05", 593},  {"la06", 926},  {"la07", 890},  {"la08", 863},
        {"la09", 951},  {"la10", 958},  {"la11", 1222}, {"la12", 1039}, {"la13", 1150}, {"la14", 1292},
        {"la15", 1207}, {"la16", 945},  {"la17", 784},  {"la18", 848},  {"la19", 842},  {"la20", 902},
        {"la21", 1046}, {"fig1", 31},   {"sk", 657.55},
    };
    for (const auto& [name, value] : rows) reg.set(name, value);
    return reg;
  }

  // "name,best1" lines; a header line and '#' comments are skipped.
  static BestKnownRegistry parse_csv(std::string_view text) {
    BestKnownRegistry reg;
    std::istringstream in{std::string(text)};
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
      ++number;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      const auto first = line.find_first_not_of(" \t");
      if (first == std::string::npos || line[first] == '#') continue;
      const auto comma = line.find(',');
      if (comma == std::string::npos) throw Error(ErrorKind::MalformedHeader, "expected name,best1", number);
      std::string name = line.substr(first, comma - first);
      std::string value = line.substr(comma + 1);
      if (name == "name") continue;
      try {
        std::size_t used = 0;
        const double v = std::stod(value, &used);
        reg.set(name, v);
      } catch (const std::logic_error&) {
        throw Error(ErrorKind::MalformedHeader, "best1 \"" + value + "\" is not a number", number);
      } catch (const Error& e) {
        throw Error(e.kind(), e.what(), number);
      }
    }
    return reg;
  }

  void set(const std::string& name, double best1) {
    if (!(best1 > 0)) throw Error(ErrorKind::ZeroBaseline, "best-known value for " + name + " must be positive");
    values_[name] = best1;
  }

  std::optional<double> find(const std::string& name) const {
    const auto it = values_.find(name);
    if (it == values_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t size() const noexcept { return values_.size(); }

 private:
  std::map<std::string, double> values_;
};

// 100 * (baseline - sa_value) / baseline.
inline double compute_dif(Time baseline, Time sa_value) {
  if (baseline <= 0) throw Error(ErrorKind::ZeroBaseline, "baseline must be positive");
  return 100.0 * static_cast<double>(baseline - sa_value) / static_cast<double>(baseline);
}

// Half-up rounding to `places` decimals for display. The tiny nudge absorbs
// binary representation error on exact halves such as 0.125.
inline double round_half_up(double value, int places) {
  const double factor = std::pow(10.0, places);
  return std::floor(value * factor + 0.5 + 1e-9) / factor;
}

inline std::string format_fixed(double value, int places) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", places, round_half_up(value, places));
  std::string s = buf;
  if (s == "-0.00") s = "0.00";
  return s;
}

struct CorpusItem {
  std::string name;
  std::filesystem::path path;
  std::optional<Instance> instance;  // used as-is when present, else loaded from path
};

struct BenchRow {
  std::string instance;
  int machines = 0;
  int order = 1;
  int scale = 1;
  std::optional<Time> baseline;  // order * best-known, internal units
  Time sa_value = 0;
  std::optional<double> dif_percent;
  Time lower_bound = 0;
  std::vector<Time> per_seed;
  int seeds_used = 0;
  double elapsed = 0;
  std::string error;

  bool ok() const noexcept { return error.empty(); }
};

struct BenchReport {
  std::vector<BenchRow> rows;
  std::vector<int> orders;
};

struct BenchOptions {
  std::set<int> orders{1};
  int seeds = 1;
  SAConfig config;
  unsigned workers = 1;
};

// Runs every (instance, order, seed) anneal, then reduces to one row per
// (instance, order) in corpus order. Seed i of a row is config.seed + i.
inline BenchReport run_benchmark(const std::vector<CorpusItem>& corpus, const BenchOptions& options,
                                 const BestKnownRegistry& registry) {
  if (options.seeds < 1) throw Error(ErrorKind::InvalidConfig, "seeds must be >= 1");
  for (int k : options.orders)
    if (k < 1) throw Error(ErrorKind::OrderZero, "orders must be >= 1");
  options.config.check();

  BenchReport report;
  report.orders.assign(options.orders.begin(), options.orders.end());

  struct Prepared {
    std::size_t row;
    CyclicInstance cyclic;
  };
  std::vector<Prepared> prepared;
  for (const auto& item : corpus) {
    std::optional<Instance> inst;
    std::string error;
    try {
      inst = item.instance ? *item.instance : load_instance(item.path);
      check_instance(*inst);
    } catch (const std::exception& e) {
      error = e.what();
    }
    for (int k : report.orders) {
      BenchRow row;
      row.instance = item.name;
      row.order = k;
      row.error = error;
      if (inst) {
        row.machines = inst->machines;
        row.scale = inst->scale;
        if (const auto best = registry.find(item.name)) {
          row.baseline = static_cast<Time>(std::llround(*best * inst->scale)) * k;
        }
        if (error.empty()) {
          prepared.push_back({report.rows.size(), expand(*inst, k)});
          row.lower_bound = lower_bound(prepared.back().cyclic.expanded);
        }
      }
      report.rows.push_back(std::move(row));
    }
  }

  struct Task {
    std::size_t prepared;
    int seed_index;
    std::optional<SAResult> result;
    std::string error;
  };
  std::vector<Task> tasks;
  for (std::size_t p = 0; p < prepared.size(); ++p)
    for (int s = 0; s < options.seeds; ++s) tasks.push_back({p, s, std::nullopt, {}});

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t t = next++; t < tasks.size(); t = next++) {
      Task& task = tasks[t];
      const Prepared& prep = prepared[task.prepared];
      SAConfig cfg = options.config.for_order(prep.cyclic.order);
      cfg.seed = options.config.seed + static_cast<std::uint64_t>(task.seed_index);
      cfg.record_trace = false;
      try {
        task.result = anneal(prep.cyclic.expanded, cfg);
      } catch (const std::exception& e) {
        task.error = e.what();
      }
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(tasks.size())));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  for (const auto& task : tasks) {
    BenchRow& row = report.rows[prepared[task.prepared].row];
    if (!task.error.empty()) {
      if (row.error.empty()) row.error = task.error;
      continue;
    }
    const Time value = task.result->best_makespan;
    row.sa_value = row.per_seed.empty() ? value : std::min(row.sa_value, value);
    row.per_seed.push_back(value);
    row.elapsed += task.result->elapsed;
    ++row.seeds_used;
  }
  for (auto& row : report.rows) {
    if (row.ok() && row.baseline) row.dif_percent = compute_dif(*row.baseline, row.sa_value);
  }
  return report;
}

struct Summary {
  std::size_t count = 0;
  double mean = 0;
  double max = 0;
  std::size_t filtered_count = 0;
  double filtered_mean = 0;
  double filtered_max = 0;
};

// Mean and max Dif% over rows that have one, overall and over rows with at
// least `min_machines` machines.
inline Summary summarize(std::span<const BenchRow> rows, int min_machines = 10) {
  Summary s;
  double sum = 0, filtered_sum = 0;
  for (const auto& row : rows) {
    if (!row.ok() || !row.dif_percent) continue;
    const double d = *row.dif_percent;
    s.max = s.count == 0 ? d : std::max(s.max, d);
    sum += d;
    ++s.count;
    if (row.machines >= min_machines) {
      s.filtered_max = s.filtered_count == 0 ? d : std::max(s.filtered_max, d);
      filtered_sum += d;
      ++s.filtered_count;
    }
  }
  if (s.count == 0) throw Error(ErrorKind::EmptyReport, "no rows with a Dif% value to summarize");
  s.mean = sum / static_cast<double>(s.count);
  if (s.filtered_count > 0) s.filtered_mean = filtered_sum / static_cast<double>(s.filtered_count);
  return s;
}

inline std::vector<BenchRow> rows_for_order(const BenchReport& report, int order) {
  std::vector<BenchRow> out;
  for (const auto& row : report.rows)
    if (row.order == order) out.push_back(row);
  return out;
}

struct ScalingRow {
  int order = 1;
  Time baseline = 0;
  Time sa_value = 0;
  Time difference = 0;
  double difference_percent = 0;
  int scale = 1;
};

// Order-scaling view of one instance: repetition baseline against the
// directly solved order-k value for each order in the report.
inline std::vector<ScalingRow> scaling_table(const BenchReport& report, const std::string& instance) {
  std::vector<ScalingRow> out;
  for (const auto& row : report.rows) {
    if (row.instance != instance || !row.ok() || !row.baseline) continue;
    out.push_back({row.order, *row.baseline, row.sa_value, *row.baseline - row.sa_value, *row.dif_percent,
                   row.scale});
  }
  return out;
}

namespace detail {

inline std::vector<std::string> instance_names(const BenchReport& report) {
  std::vector<std::string> names;
  for (const auto& row : report.rows)
    if (std::find(names.begin(), names.end(), row.instance) == names.end()) names.push_back(row.instance);
  return names;
}

inline bool contiguous(const std::vector<int>& orders) {
  if (orders.size() < 2) return false;
  for (std::size_t i = 1; i < orders.size(); ++i)
    if (orders[i] != orders[i - 1] + 1) return false;
  return true;
}

}  // namespace detail

// Machine-readable report. Contains no timings, so identical runs give
// identical bytes.
inline std::string report_csv(const BenchReport& report) {
  std::string out = "instance,machines,order,baseline,sa_value,dif_percent,seeds,lower_bound,error\n";
  for (const auto& row : report.rows) {
    out += row.instance + "," + std::to_string(row.machines) + "," + std::to_string(row.order) + ",";
    out += row.baseline ? format_time(*row.baseline, row.scale) : "";
    out += ",";
    if (row.ok()) out += format_time(row.sa_value, row.scale);
    out += ",";
    if (row.dif_percent) out += format_fixed(*row.dif_percent, 2);
    out += "," + std::to_string(row.seeds_used) + "," + format_time(row.lower_bound, row.scale) + ",";
    std::string error = row.error;
    std::replace(error.begin(), error.end(), ',', ';');
    std::replace(error.begin(), error.end(), '\n', ' ');
    out += error + "\n";
  }
  return out;
}

inline std::string scaling_markdown(const BenchReport& report, const std::string& instance) {
  std::string out = "### " + instance + "\n\n";
  out += "| Order | Repeated order-1 | Solved as cyclic | Difference | Difference, % |\n";
  out += "|---|---|---|---|---|\n";
  for (const auto& r : scaling_table(report, instance)) {
    out += "| " + std::to_string(r.order) + " | " + format_time(r.baseline, r.scale) + " | " +
           format_time(r.sa_value, r.scale) + " | " + format_time(r.difference, r.scale) + " | " +
           format_fixed(r.difference_percent, 2) + "% |\n";
  }
  return out;
}

// Comparison table: Best k / SA k column pairs per order, Dif% of the
// highest order. Adds per-instance scaling tables when the orders form a
// range or the report covers a single instance.
inline std::string report_markdown(const BenchReport& report) {
  const auto names = detail::instance_names(report);
  std::string out = "| Task |";
  std::string rule = "|---|";
  for (int k : report.orders) {
    out += " Best " + std::to_string(k) + " | SA " + std::to_string(k) + " |";
    rule += "---|---|";
  }
  out += " Dif. % |\n" + rule + "---|\n";
  for (const auto& name : names) {
    out += "| " + name + " |";
    std::string dif;
    for (const auto& row : report.rows) {
      if (row.instance != name) continue;
      out += " " + (row.baseline ? format_time(*row.baseline, row.scale) : std::string("-")) + " |";
      out += " " + (row.ok() ? format_time(row.sa_value, row.scale) : std::string("error")) + " |";
      dif = row.dif_percent ? format_fixed(*row.dif_percent, 2) : "-";
    }
    out += " " + dif + " |\n";
  }
  if (report.orders.size() >= 2 && (detail::contiguous(report.orders) || names.size() == 1)) {
    for (const auto& name : names) out += "\n" + scaling_markdown(report, name);
  }
  return out;
}

inline std::string report_json(const BenchReport& report) {
  nlohmann::ordered_json out;
  out["orders"] = report.orders;
  auto& rows = out["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : report.rows) {
    nlohmann::ordered_json j;
    j["instance"] = row.instance;
    j["machines"] = row.machines;
    j["order"] = row.order;
    j["scale"] = row.scale;
    j["baseline"] = row.baseline ? nlohmann::ordered_json(*row.baseline) : nlohmann::ordered_json();
    j["sa_value"] = row.sa_value;
    j["dif_percent"] = row.dif_percent ? nlohmann::ordered_json(*row.dif_percent) : nlohmann::ordered_json();
    j["lower_bound"] = row.lower_bound;
    j["per_seed"] = row.per_seed;
    j["seeds_used"] = row.seeds_used;
    j["elapsed"] = row.elapsed;
    if (!row.ok()) j["error"] = row.error;
    rows.push_back(std::move(j));
  }
  return out.dump(2) + "\n";
}

// Manifest lines: "name path best1", paths relative to the manifest file.
inline std::vector<std::pair<CorpusItem, double>> parse_manifest(std::string_view text,
                                                                 const std::filesystem::path& base_dir) {
  std::vector<std::pair<CorpusItem, double>> out;
  for (const auto& line : detail::tokenize(text)) {
    if (line.tokens.size() != 3) {
      throw Error(ErrorKind::WrongTokenCount, "manifest line needs \"name path best1\"", line.number);
    }
    double best = 0;
    try {
      best = std::stod(std::string(line.tokens[2]));
    } catch (const std::exception&) {
      throw Error(ErrorKind::MalformedHeader, "best1 is not a number", line.number);
    }
    CorpusItem item{std::string(line.tokens[0]), base_dir / std::string(line.tokens[1]), std::nullopt};
    out.emplace_back(std::move(item), best);
  }
  return out;
}

// All *.jss and *.jsx files of a directory, sorted by file name.
inline std::vector<CorpusItem> scan_corpus(const std::filesystem::path& dir) {
  std::vector<CorpusItem> items;
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(dir, ec)) {
    const auto ext = entry.path().extension();
    if (entry.is_regular_file() && (ext == ".jss" || ext == ".jsx")) {
      items.push_back({entry.path().stem().string(), entry.path(), std::nullopt});
    }
  }
  if (ec) throw Error(ErrorKind::Io, "cannot read directory " + dir.string());
  std::sort(items.begin(), items.end(),
            [](const CorpusItem& a, const CorpusItem& b) { return a.path.filename() < b.path.filename(); });
  return items;
}

}  // namespace cjsp
