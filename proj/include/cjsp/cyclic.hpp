#pragma once

#include <utility>

#include "cjsp/error.hpp"
#include "cjsp/instance.hpp"

namespace cjsp {

struct CopyRef {
  int base_job = 0;
  int copy = 0;

  friend bool operator==(const CopyRef&, const CopyRef&) = default;
};

// The cyclic job-shop problem of order k: every base job is produced k times.
// Expanded jobs are copy-major, so expanded index = base_job * k + copy.
// Copies carry no precedence between each other.
struct CyclicInstance {
  Instance base;
  int order = 1;
  Instance expanded;

  CopyRef copy_of(int expanded_job) const noexcept { return {expanded_job / order, expanded_job % order}; }
  int expanded_index(int base_job, int copy) const noexcept { return base_job * order + copy; }
};

inline CyclicInstance expand(const Instance& inst, int k) {
  if (k < 1) throw Error(ErrorKind::OrderZero, "order must be at least 1, got " + std::to_string(k));
  CyclicInstance cyclic;
  cyclic.base = inst;
  cyclic.order = k;
  cyclic.expanded.name = inst.name;
  cyclic.expanded.machines = inst.machines;
  cyclic.expanded.scale = inst.scale;
  cyclic.expanded.jobs.reserve(inst.jobs.size() * static_cast<std::size_t>(k));
  for (const auto& job : inst.jobs)
    for (int c = 0; c < k; ++c) cyclic.expanded.jobs.push_back(job);
  return cyclic;
}

}  // namespace cjsp
