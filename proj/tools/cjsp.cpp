// cjsp: command-line front end for the cyclic job-shop solver.
//
//   cjsp solve    --instance ft06.jss --order 2 --seed 7 --out ft06_k2.json
//   cjsp expand   ft06.jss --order 4 --out ft06_k4.jsx
//   cjsp validate --instance ft06.jss --schedule ft06_k2.json
//   cjsp gantt    --schedule ft06_k2.json --format svg --out ft06_k2.svg
//   cjsp bench    --dir data/orlib --orders 1,2,4 --seeds 3 --format md
//
// Exit codes: 0 ok, 1 schedule violations, 2 parse error, 3 invalid config,
// 4 I/O error, 64 usage error.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cjsp.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitViolations = 1;
constexpr int kExitParse = 2;
constexpr int kExitConfig = 3;
constexpr int kExitIo = 4;
constexpr int kExitUsage = 64;

// Raw SA flags; unset ones fall back to the config file, then to defaults.
struct SaFlags {
  std::optional<double> initial_temperature;
  std::optional<long long> cooling_steps;
  std::optional<double> cooling_fraction;
  std::optional<long long> steps_per_temp;
  std::optional<double> kt;
  std::optional<std::uint64_t> seed;
  std::optional<double> time_limit;
  std::string config_file;
};

void add_sa_flags(CLI::App* cmd, SaFlags& f) {
  cmd->add_option("--seed", f.seed, "Random seed (falls back to $CJSP_SEED, then 1)")->envname("CJSP_SEED");
  cmd->add_option("--steps,--cooling-steps", f.cooling_steps,
                  "Outer cooling iterations (default 3000, 6000 for order >= 6)");
  cmd->add_option("--steps-per-temp", f.steps_per_temp,
                  "Moves per temperature (default 3000, 6000 for order >= 6)");
  cmd->add_option("--initial-temperature", f.initial_temperature, "Starting temperature (default 1.0)");
  cmd->add_option("--cooling-fraction", f.cooling_fraction, "Temperature multiplier per step (default 0.97)");
  cmd->add_option("--kt", f.kt, "Acceptance scale constant (default 0.01)");
  cmd->add_option("--time-limit", f.time_limit, "Wall-clock limit per anneal in seconds");
  cmd->add_option("--config", f.config_file, "key = value file with SA settings");
}

void apply_config_line(cjsp::SAConfig& cfg, const std::string& key, const std::string& value, int line) {
  try {
    if (key == "initial_temperature") cfg.initial_temperature = std::stod(value);
    else if (key == "cooling_steps") cfg.cooling_steps = std::stoll(value);
    else if (key == "cooling_fraction") cfg.cooling_fraction = std::stod(value);
    else if (key == "steps_per_temp") cfg.steps_per_temp = std::stoll(value);
    else if (key == "kt") cfg.kt = std::stod(value);
    else if (key == "seed") cfg.seed = std::stoull(value);
    else if (key == "time_limit") cfg.time_limit = std::stod(value);
    else throw cjsp::Error(cjsp::ErrorKind::InvalidConfig, "unknown config key \"" + key + "\"", line);
  } catch (const std::logic_error&) {
    throw cjsp::Error(cjsp::ErrorKind::InvalidConfig, "bad value for " + key + ": \"" + value + "\"", line);
  }
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

cjsp::SAConfig build_config(const SaFlags& f) {
  cjsp::SAConfig cfg;
  if (!f.config_file.empty()) {
    std::istringstream in(cjsp::read_text_file(f.config_file));
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
      ++number;
      line = trim(line);
      if (line.empty() || line.front() == '#') continue;
      const auto eq = line.find('=');
      if (eq == std::string::npos) {
        throw cjsp::Error(cjsp::ErrorKind::InvalidConfig, "expected key = value", number);
      }
      apply_config_line(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)), number);
    }
  }
  if (f.initial_temperature) cfg.initial_temperature = *f.initial_temperature;
  if (f.cooling_steps) cfg.cooling_steps = *f.cooling_steps;
  if (f.cooling_fraction) cfg.cooling_fraction = *f.cooling_fraction;
  if (f.steps_per_temp) cfg.steps_per_temp = *f.steps_per_temp;
  if (f.kt) cfg.kt = *f.kt;
  if (f.seed) cfg.seed = *f.seed;
  if (f.time_limit) cfg.time_limit = *f.time_limit;
  return cfg;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw cjsp::Error(cjsp::ErrorKind::Io, "cannot write " + path);
  out << text;
  if (!out) throw cjsp::Error(cjsp::ErrorKind::Io, "failed writing " + path);
}

cjsp::Instance load(const std::string& path, bool extended) {
  if (!extended) return cjsp::load_instance(path);
  return cjsp::parse_extended(cjsp::read_text_file(path), fs::path(path).stem().string());
}

// "1,2,4", "1..10" or a mix such as "1..4,6".
std::set<int> parse_orders(const std::string& text) {
  std::set<int> orders;
  std::istringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    part = trim(part);
    if (part.empty()) continue;
    try {
      const auto dots = part.find("..");
      if (dots == std::string::npos) {
        orders.insert(std::stoi(part));
      } else {
        const int lo = std::stoi(part.substr(0, dots));
        const int hi = std::stoi(part.substr(dots + 2));
        if (hi < lo) throw std::invalid_argument("empty range");
        for (int k = lo; k <= hi; ++k) orders.insert(k);
      }
    } catch (const std::logic_error&) {
      throw cjsp::Error(cjsp::ErrorKind::InvalidConfig, "bad --orders value \"" + part + "\"");
    }
  }
  if (orders.empty()) throw cjsp::Error(cjsp::ErrorKind::InvalidConfig, "--orders is empty");
  return orders;
}

int exit_code_for(const cjsp::Error& e) {
  if (e.is_parse_error()) return kExitParse;
  if (e.kind() == cjsp::ErrorKind::Io) return kExitIo;
  return kExitConfig;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cyclic job-shop scheduling by simulated annealing"};
  app.require_subcommand(1, 1);

  // solve
  std::string instance_path, out_path, trace_path;
  int order = 1;
  bool extended = false;
  SaFlags sa;
  auto* solve = app.add_subcommand("solve", "Anneal the order-k problem and write the schedule as JSON");
  solve->add_option("--instance", instance_path, "Instance file (.jss OR-Library, .jsx extended)")->required();
  solve->add_option("--order,-k", order, "Number of consignments k")->default_val(1);
  solve->add_flag("--extended", extended, "Force the extended instance format");
  solve->add_option("--out,-o", out_path, "Schedule JSON path (default stdout)");
  solve->add_option("--trace", trace_path, "Write step,temperature,current,best CSV here");
  add_sa_flags(solve, sa);

  // expand
  std::string expand_path, expand_out;
  int expand_order = 1;
  bool expand_extended = false;
  auto* expand_cmd = app.add_subcommand("expand", "Write the order-k instance in the extended format");
  expand_cmd->add_option("instance", expand_path, "Instance file")->required();
  expand_cmd->add_option("--order,-k", expand_order, "Number of consignments k")->default_val(1);
  expand_cmd->add_flag("--extended", expand_extended, "Force the extended instance format");
  expand_cmd->add_option("--out,-o", expand_out, "Output path (default stdout)");

  // validate
  std::string validate_instance, validate_schedule;
  std::optional<int> validate_order;
  bool validate_extended = false;
  auto* validate_cmd = app.add_subcommand("validate", "Check a schedule JSON against its instance");
  validate_cmd->add_option("--instance", validate_instance, "Base instance file")->required();
  validate_cmd->add_option("--schedule", validate_schedule, "Schedule JSON")->required();
  validate_cmd->add_option("--order,-k", validate_order, "Order k (default: taken from the JSON)");
  validate_cmd->add_flag("--extended", validate_extended, "Force the extended instance format");

  // gantt
  std::string gantt_schedule, gantt_out, gantt_format = "svg";
  bool gantt_ascii = false;
  auto* gantt_cmd = app.add_subcommand("gantt", "Render a schedule JSON as a Gantt chart");
  gantt_cmd->add_option("--schedule", gantt_schedule, "Schedule JSON")->required();
  gantt_cmd->add_option("--format", gantt_format, "svg or ascii")->check(CLI::IsMember({"svg", "ascii"}));
  gantt_cmd->add_flag("--ascii", gantt_ascii, "Shorthand for --format ascii");
  gantt_cmd->add_option("--out,-o", gantt_out, "Output path (default stdout)");

  // bench
  std::string bench_dir, bench_manifest, bench_registry, bench_out, bench_format = "csv", bench_orders = "1";
  std::vector<std::string> bench_instances;
  int bench_seeds = 1;
  unsigned bench_workers = 1;
  int bench_min_machines = 10;
  bool bench_summary = false;
  SaFlags bench_sa;
  auto* bench_cmd = app.add_subcommand("bench", "Compare direct order-k solving with repeating order 1");
  bench_cmd->add_option("--dir", bench_dir, "Directory of .jss/.jsx instances");
  bench_cmd->add_option("--instance", bench_instances, "Instance file (repeatable)");
  bench_cmd->add_option("--manifest", bench_manifest, "Manifest of \"name path best1\" lines");
  bench_cmd->add_option("--orders", bench_orders, "Orders, e.g. 1,2,4 or 1..10")->default_val("1");
  bench_cmd->add_option("--seeds", bench_seeds, "Independent anneals per row")->default_val(1);
  bench_cmd->add_option("--registry", bench_registry, "name,best1 CSV extending the built-in table");
  bench_cmd->add_option("--format", bench_format, "csv, md or json")->check(CLI::IsMember({"csv", "md", "json"}));
  bench_cmd->add_option("--workers", bench_workers, "Concurrent anneals")->default_val(1);
  bench_cmd->add_option("--out,-o", bench_out, "Report path (default stdout)");
  bench_cmd->add_flag("--summary", bench_summary, "Print mean/max Dif% of the highest order to stderr");
  bench_cmd->add_option("--min-machines", bench_min_machines, "Machine threshold of the filtered summary")
      ->default_val(10);
  add_sa_flags(bench_cmd, bench_sa);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*solve) {
      if (order < 1) throw cjsp::Error(cjsp::ErrorKind::OrderZero, "--order must be >= 1");
      const cjsp::SAConfig cfg = [&] {
        cjsp::SAConfig c = build_config(sa).for_order(order);
        c.record_trace = !trace_path.empty();
        c.check();
        return c;
      }();
      const cjsp::Instance base = load(instance_path, extended);
      const cjsp::CyclicInstance cyclic = cjsp::expand(base, order);
      const cjsp::SAResult result = cjsp::anneal(cyclic.expanded, cfg);
      const cjsp::ScheduleDocument doc{base.name, order, cjsp::decode(cyclic.expanded, result.best_perm)};
      write_output(out_path, cjsp::dump_schedule_json(doc));
      if (!trace_path.empty()) write_output(trace_path, cjsp::trace_csv(result.trace));
      std::cerr << "makespan " << cjsp::format_time(result.best_makespan, base.scale) << " (lower bound "
                << cjsp::format_time(cjsp::lower_bound(cyclic.expanded), base.scale) << ")"
                << (result.timed_out ? " [time limit reached]" : "") << "\n";
      return 0;
    }

    if (*expand_cmd) {
      const cjsp::Instance base = load(expand_path, expand_extended);
      const cjsp::CyclicInstance cyclic = cjsp::expand(base, expand_order);
      const std::string comment = "expanded from " + base.name + " order " + std::to_string(expand_order);
      write_output(expand_out, cjsp::to_extended(cyclic.expanded, comment));
      return 0;
    }

    if (*validate_cmd) {
      const cjsp::Instance base = load(validate_instance, validate_extended);
      const cjsp::ScheduleDocument doc = cjsp::parse_schedule_json(cjsp::read_text_file(validate_schedule));
      const int k = validate_order.value_or(doc.order);
      const cjsp::CyclicInstance cyclic = cjsp::expand(base, k);
      const auto violations = cjsp::validate(cyclic.expanded, doc.schedule);
      for (const auto& v : violations) std::cout << cjsp::to_string(v.kind) << ": " << v.detail << "\n";
      if (!violations.empty()) return kExitViolations;
      std::cout << "ok: " << doc.schedule.entries.size() << " operations, makespan "
                << cjsp::format_time(doc.schedule.makespan, doc.schedule.scale) << "\n";
      return 0;
    }

    if (*gantt_cmd) {
      const cjsp::ScheduleDocument doc = cjsp::parse_schedule_json(cjsp::read_text_file(gantt_schedule));
      const auto format = gantt_ascii || gantt_format == "ascii" ? cjsp::GanttFormat::Ascii : cjsp::GanttFormat::Svg;
      write_output(gantt_out, cjsp::render_gantt(doc.schedule, format));
      return 0;
    }

    if (*bench_cmd) {
      cjsp::BenchOptions options;
      options.orders = parse_orders(bench_orders);
      options.seeds = bench_seeds;
      options.workers = bench_workers;
      options.config = build_config(bench_sa);
      options.config.check();

      cjsp::BestKnownRegistry registry = cjsp::BestKnownRegistry::published();
      std::vector<cjsp::CorpusItem> corpus;
      if (!bench_manifest.empty()) {
        const fs::path manifest(bench_manifest);
        for (auto& [item, best] : cjsp::parse_manifest(cjsp::read_text_file(manifest), manifest.parent_path())) {
          registry.set(item.name, best);
          corpus.push_back(std::move(item));
        }
      }
      if (!bench_dir.empty()) {
        for (auto& item : cjsp::scan_corpus(bench_dir)) corpus.push_back(std::move(item));
      }
      for (const auto& path : bench_instances) corpus.push_back({fs::path(path).stem().string(), path, std::nullopt});
      if (!bench_registry.empty()) {
        const auto extra = cjsp::BestKnownRegistry::parse_csv(cjsp::read_text_file(bench_registry));
        for (const auto& item : corpus)
          if (const auto v = extra.find(item.name)) registry.set(item.name, *v);
      }

      const cjsp::BenchReport report = cjsp::run_benchmark(corpus, options, registry);
      const std::string text = bench_format == "md"     ? cjsp::report_markdown(report)
                               : bench_format == "json" ? cjsp::report_json(report)
                                                        : cjsp::report_csv(report);
      write_output(bench_out, text);
      if (bench_summary && !report.rows.empty()) {
        const auto top = cjsp::rows_for_order(report, report.orders.back());
        try {
          const auto s = cjsp::summarize(top, bench_min_machines);
          std::cerr << "order " << report.orders.back() << ": mean Dif% " << cjsp::format_fixed(s.mean, 2)
                    << ", max " << cjsp::format_fixed(s.max, 2) << "; machines >= " << bench_min_machines
                    << ": mean " << cjsp::format_fixed(s.filtered_mean, 2) << " over " << s.filtered_count
                    << " instances\n";
        } catch (const cjsp::Error& e) {
          std::cerr << "summary: " << e.what() << "\n";
        }
      }
      return 0;
    }
  } catch (const cjsp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return 0;
}
