#pragma once

// Test-only helpers: random instance generators and reference oracles that
// share no code with the library's decoder or annealer.

#include <algorithm>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "cjsp.hpp"

#ifndef CJSP_DATA_DIR
#error "CJSP_DATA_DIR must point at the bundled corpus"
#endif

namespace cjsp::testing {

inline Instance corpus(const std::string& name) {
  return load_instance(std::string(CJSP_DATA_DIR) + "/orlib/" + name + ".jss");
}

inline Instance make_instance(int machines, std::vector<std::vector<std::pair<int, Time>>> routes) {
  Instance inst;
  inst.machines = machines;
  for (const auto& route : routes) {
    Job job;
    for (const auto& [m, d] : route) job.ops.push_back({m, d});
    inst.jobs.push_back(std::move(job));
  }
  return inst;
}

// Random instance with variable-length routes; machines may repeat within a job.
inline Instance random_instance(std::mt19937_64& rng, int max_jobs, int max_machines, int max_route,
                                Time max_duration, int max_total_ops = std::numeric_limits<int>::max()) {
  std::uniform_int_distribution<int> jobs_dist(1, max_jobs);
  std::uniform_int_distribution<int> machines_dist(1, max_machines);
  Instance inst;
  inst.machines = machines_dist(rng);
  const int n = jobs_dist(rng);
  std::uniform_int_distribution<int> machine(0, inst.machines - 1);
  std::uniform_int_distribution<Time> duration(0, max_duration);
  int budget = max_total_ops;
  for (int j = 0; j < n && budget > 0; ++j) {
    const int cap = std::max(1, std::min(max_route, budget - (n - j - 1)));
    std::uniform_int_distribution<int> route(1, cap);
    Job job;
    const int len = route(rng);
    for (int r = 0; r < len; ++r) job.ops.push_back({machine(rng), duration(rng)});
    budget -= len;
    inst.jobs.push_back(std::move(job));
  }
  return inst;
}

inline OperationPermutation random_permutation(const Instance& inst, std::mt19937_64& rng) {
  std::vector<int> seq = canonical_permutation(inst).values();
  std::shuffle(seq.begin(), seq.end(), rng);
  return OperationPermutation(std::move(seq));
}

// Straight-line restatement of the greedy semi-active rule: the op index is
// recounted from the prefix, machine and job readiness are recomputed from
// every earlier placement. Quadratic on purpose.
inline std::vector<ScheduledOp> reference_decode(const Instance& inst, const std::vector<int>& seq) {
  std::vector<ScheduledOp> placed;
  for (std::size_t pos = 0; pos < seq.size(); ++pos) {
    const int j = seq[pos];
    const int r = static_cast<int>(std::count(seq.begin(), seq.begin() + pos, j));
    const OperationSpec& spec = inst.jobs[j].ops[r];
    Time start = 0;
    for (const auto& p : placed) {
      if (p.job == j && p.op == r - 1) start = std::max(start, p.end);
      if (p.machine == spec.machine) start = std::max(start, p.end);
    }
    placed.push_back({j, r, spec.machine, start, start + spec.duration});
  }
  return placed;
}

inline Time reference_makespan(const Instance& inst, const std::vector<int>& seq) {
  Time ms = 0;
  for (const auto& p : reference_decode(inst, seq)) ms = std::max(ms, p.end);
  return ms;
}

// Exhaustive optimum over every distinct permutation with repetition.
inline Time brute_force_optimum(const Instance& inst, std::size_t* visited = nullptr) {
  std::vector<int> seq = canonical_permutation(inst).values();
  std::sort(seq.begin(), seq.end());
  Time best = std::numeric_limits<Time>::max();
  std::size_t count = 0;
  do {
    best = std::min(best, reference_makespan(inst, seq));
    ++count;
  } while (std::next_permutation(seq.begin(), seq.end()));
  if (visited) *visited = count;
  return best;
}

}  // namespace cjsp::testing
