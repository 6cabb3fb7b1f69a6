#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cjsp/error.hpp"
#include "cjsp/instance.hpp"
#include "cjsp/schedule.hpp"

namespace cjsp {

inline constexpr long long kDefaultSteps = 3000;
inline constexpr long long kLongSteps = 6000;
inline constexpr int kLongStepsFromOrder = 6;

struct SAConfig {
  double initial_temperature = 1.0;
  // Unset step counts resolve to 3000, or 6000 for orders >= 6 (see for_order).
  std::optional<long long> cooling_steps;
  double cooling_fraction = 0.97;
  std::optional<long long> steps_per_temp;
  double kt = 0.01;
  std::uint64_t seed = 1;
  std::optional<double> time_limit;  // wall-clock seconds
  bool record_trace = false;

  long long outer_steps() const { return cooling_steps.value_or(kDefaultSteps); }
  long long inner_steps() const { return steps_per_temp.value_or(kDefaultSteps); }

  // Fills unset step counts with the defaults for a cyclic problem of order k.
  SAConfig for_order(int k) const {
    SAConfig out = *this;
    const long long steps = k >= kLongStepsFromOrder ? kLongSteps : kDefaultSteps;
    if (!out.cooling_steps) out.cooling_steps = steps;
    if (!out.steps_per_temp) out.steps_per_temp = steps;
    return out;
  }

  void check() const {
    auto fail = [](const std::string& what) { throw Error(ErrorKind::InvalidConfig, what); };
    if (!(initial_temperature > 0) || !std::isfinite(initial_temperature)) fail("initial_temperature must be > 0");
    if (!(cooling_fraction > 0 && cooling_fraction < 1)) fail("cooling_fraction must lie in (0, 1)");
    if (!(kt > 0) || !std::isfinite(kt)) fail("kt must be > 0");
    if (outer_steps() < 1) fail("cooling_steps must be >= 1");
    if (inner_steps() < 1) fail("steps_per_temp must be >= 1");
    if (time_limit && !(*time_limit > 0)) fail("time_limit must be > 0");
  }
};

struct TracePoint {
  long long step = 0;
  double temperature = 0;
  Time current = 0;
  Time best = 0;
};

struct SAResult {
  OperationPermutation best_perm;
  Time best_makespan = 0;
  Time initial_makespan = 0;
  Time final_makespan = 0;
  long long evaluations = 0;
  std::vector<TracePoint> trace;
  double elapsed = 0;
  bool timed_out = false;
};

// exp((-delta / current) / (kt * temperature)); never above 1 for delta >= 0.
inline double acceptance_probability(Time delta, Time current_value, double temperature, double kt) {
  if (current_value <= 0 || !(temperature > 0) || !(kt > 0)) {
    throw Error(ErrorKind::NonPositiveDenominator, "current_value, temperature and kt must be positive");
  }
  const double p =
      std::exp((-static_cast<double>(delta) / static_cast<double>(current_value)) / (kt * temperature));
  return delta >= 0 ? std::clamp(p, 0.0, 1.0) : p;
}

inline std::string trace_csv(const std::vector<TracePoint>& trace) {
  std::string out = "step,temperature,current,best\n";
  char buf[128];
  for (const auto& t : trace) {
    std::snprintf(buf, sizeof buf, "%lld,%.9g,%lld,%lld\n", t.step, t.temperature,
                  static_cast<long long>(t.current), static_cast<long long>(t.best));
    out += buf;
  }
  return out;
}

// Simulated annealing over operation permutations.
//
// Outer loop of cooling_steps iterations: cool by cooling_fraction, then run
// steps_per_temp swap moves. A move that shortens the schedule is kept; any
// other move is kept when exp((-delta/current)/(kt*T)) beats a uniform draw
// from [0, 1), otherwise it is swapped back. If the inner loop ended below the
// value it started from, the cooling of that iteration is undone. The best
// permutation ever visited is returned. Everything random comes from cfg.seed.
inline SAResult anneal(const Instance& inst, const SAConfig& cfg) {
  cfg.check();
  check_instance(inst);
  const auto started = std::chrono::steady_clock::now();
  const auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  };

  std::mt19937_64 rng(cfg.seed);
  Decoder decoder(inst);

  OperationPermutation solution = canonical_permutation(inst);
  solution.shuffle(rng);
  Time current_value = decoder.makespan(solution.view());

  SAResult result;
  result.initial_makespan = current_value;
  result.best_perm = solution;
  result.best_makespan = current_value;

  const std::size_t length = solution.size();
  std::uniform_int_distribution<std::size_t> pick(0, length - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  double temperature = cfg.initial_temperature;
  const long long outer = cfg.outer_steps();
  const long long inner = cfg.inner_steps();

  for (long long step = 0; step < outer && !result.timed_out; ++step) {
    temperature *= cfg.cooling_fraction;
    const Time start_value = current_value;

    for (long long i = 0; i < inner; ++i) {
      if (cfg.time_limit && (result.evaluations & 255) == 0 && elapsed() >= *cfg.time_limit) {
        result.timed_out = true;
        break;
      }
      const std::size_t r1 = pick(rng);
      std::size_t r2 = pick(rng);
      while (length > 1 && r2 == r1) r2 = pick(rng);

      solution.swap_positions(r1, r2);
      const Time new_value = decoder.makespan(solution.view());
      ++result.evaluations;
      const Time delta = new_value - current_value;

      if (delta < 0) {
        current_value = new_value;
      } else {
        const double ex = current_value > 0 ? acceptance_probability(delta, current_value, temperature, cfg.kt)
                                            : (delta == 0 ? 1.0 : 0.0);
        if (ex > unit(rng)) {
          current_value = new_value;
        } else {
          solution.swap_positions(r2, r1);
        }
      }
      if (current_value < result.best_makespan) {
        result.best_makespan = current_value;
        result.best_perm = solution;
      }
    }

    if (current_value < start_value) temperature /= cfg.cooling_fraction;

    if (cfg.record_trace) result.trace.push_back({step, temperature, current_value, result.best_makespan});
  }

  result.final_makespan = current_value;
  result.elapsed = elapsed();
  return result;
}

}  // namespace cjsp
