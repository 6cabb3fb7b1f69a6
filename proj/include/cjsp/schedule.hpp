#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cjsp/cyclic.hpp"
#include "cjsp/error.hpp"
#include "cjsp/instance.hpp"

namespace cjsp {

// Operation-based permutation with repetition: job j appears once per
// operation of its route, and the r-th occurrence stands for its r-th
// operation. Any exchange of two positions yields another valid encoding.
class OperationPermutation {
 public:
  OperationPermutation() = default;
  explicit OperationPermutation(std::vector<int> seq) : seq_(std::move(seq)) {}

  std::size_t size() const noexcept { return seq_.size(); }
  int operator[](std::size_t i) const { return seq_[i]; }
  std::span<const int> view() const noexcept { return seq_; }
  const std::vector<int>& values() const noexcept { return seq_; }

  // In-place exchange, used by the annealer on its own working copy.
  void swap_positions(std::size_t r1, std::size_t r2) {
    if (r1 >= seq_.size() || r2 >= seq_.size()) {
      throw Error(ErrorKind::IndexOutOfRange, "swap index outside [0, " + std::to_string(seq_.size()) + ")");
    }
    std::swap(seq_[r1], seq_[r2]);
  }

  template <typename Rng>
  void shuffle(Rng& rng) {
    std::shuffle(seq_.begin(), seq_.end(), rng);
  }

  friend bool operator==(const OperationPermutation&, const OperationPermutation&) = default;

 private:
  std::vector<int> seq_;
};

struct ScheduledOp {
  int job = 0;
  int op = 0;
  int machine = 0;
  Time start = 0;
  Time end = 0;

  friend bool operator==(const ScheduledOp&, const ScheduledOp&) = default;
};

struct Schedule {
  std::vector<ScheduledOp> entries;
  Time makespan = 0;
  int scale = 1;

  friend bool operator==(const Schedule&, const Schedule&) = default;
};

inline OperationPermutation canonical_permutation(const Instance& inst) {
  std::vector<int> seq;
  seq.reserve(inst.total_ops());
  for (int j = 0; j < inst.job_count(); ++j) seq.insert(seq.end(), inst.jobs[j].ops.size(), j);
  return OperationPermutation(std::move(seq));
}

inline void check_permutation(const Instance& inst, const OperationPermutation& perm) {
  std::vector<std::size_t> seen(inst.jobs.size(), 0);
  for (int j : perm.view()) {
    if (j < 0 || j >= inst.job_count()) {
      throw Error(ErrorKind::PermutationMismatch, "job index " + std::to_string(j) + " not in instance");
    }
    ++seen[j];
  }
  for (std::size_t j = 0; j < seen.size(); ++j) {
    if (seen[j] != inst.jobs[j].ops.size()) {
      throw Error(ErrorKind::PermutationMismatch,
                  "job " + std::to_string(j) + " appears " + std::to_string(seen[j]) + " times, route has " +
                      std::to_string(inst.jobs[j].ops.size()) + " operations");
    }
  }
}

inline OperationPermutation swap(const OperationPermutation& perm, std::size_t r1, std::size_t r2) {
  OperationPermutation out = perm;
  out.swap_positions(r1, r2);
  return out;
}

// Semi-active greedy decoder. Each operation starts at the later of its job
// predecessor's end and its machine's frontier; earlier idle gaps are never
// back-filled. Owns scratch buffers, so one Decoder per thread.
class Decoder {
 public:
  explicit Decoder(const Instance& inst) : inst_(&inst) {
    offsets_.reserve(inst.jobs.size() + 1);
    offsets_.push_back(0);
    for (const auto& job : inst.jobs) {
      for (const auto& op : job.ops) {
        machine_of_.push_back(op.machine);
        duration_of_.push_back(op.duration);
      }
      offsets_.push_back(offsets_.back() + job.ops.size());
    }
    next_op_.resize(inst.jobs.size());
    job_ready_.resize(inst.jobs.size());
    machine_ready_.resize(inst.machines);
  }

  // Makespan only; the annealer's evaluation path.
  Time makespan(std::span<const int> seq) {
    reset();
    Time makespan = 0;
    for (int j : seq) {
      const std::size_t flat = flat_index(j);
      const int machine = machine_of_[flat];
      const Time end = std::max(job_ready_[j], machine_ready_[machine]) + duration_of_[flat];
      job_ready_[j] = end;
      machine_ready_[machine] = end;
      makespan = std::max(makespan, end);
    }
    return makespan;
  }

  // Entries come back indexed by (job, op) in route order.
  Schedule decode(std::span<const int> seq) {
    reset();
    Schedule schedule;
    schedule.scale = inst_->scale;
    schedule.entries.resize(machine_of_.size());
    for (int j : seq) {
      const int op = static_cast<int>(next_op_[j]);
      const std::size_t flat = flat_index(j);
      const int machine = machine_of_[flat];
      const Time start = std::max(job_ready_[j], machine_ready_[machine]);
      const Time end = start + duration_of_[flat];
      job_ready_[j] = end;
      machine_ready_[machine] = end;
      schedule.entries[flat] = ScheduledOp{j, op, machine, start, end};
      schedule.makespan = std::max(schedule.makespan, end);
    }
    return schedule;
  }

 private:
  void reset() {
    std::fill(next_op_.begin(), next_op_.end(), 0);
    std::fill(job_ready_.begin(), job_ready_.end(), 0);
    std::fill(machine_ready_.begin(), machine_ready_.end(), 0);
  }

  std::size_t flat_index(int j) {
    const std::size_t r = next_op_[j]++;
    const std::size_t flat = offsets_[j] + r;
    if (flat >= offsets_[j + 1]) {
      throw Error(ErrorKind::PermutationMismatch, "job " + std::to_string(j) + " occurs too often");
    }
    return flat;
  }

  const Instance* inst_;
  std::vector<std::size_t> offsets_;
  std::vector<int> machine_of_;
  std::vector<Time> duration_of_;
  std::vector<std::size_t> next_op_;
  std::vector<Time> job_ready_;
  std::vector<Time> machine_ready_;
};

inline Schedule decode(const Instance& inst, const OperationPermutation& perm) {
  check_permutation(inst, perm);
  Decoder decoder(inst);
  return decoder.decode(perm.view());
}

inline Time makespan_of(const Instance& inst, const OperationPermutation& perm) {
  check_permutation(inst, perm);
  Decoder decoder(inst);
  return decoder.makespan(perm.view());
}

// The repetition baseline: k back-to-back copies of an order-1 permutation,
// block c using copy c of every job.
inline OperationPermutation replicate(const OperationPermutation& perm, int k) {
  if (k < 1) throw Error(ErrorKind::OrderZero, "order must be at least 1");
  std::vector<int> seq;
  seq.reserve(perm.size() * static_cast<std::size_t>(k));
  for (int c = 0; c < k; ++c)
    for (int j : perm.view()) seq.push_back(j * k + c);
  return OperationPermutation(std::move(seq));
}

enum class ViolationKind { Reference, Duration, Precedence, MachineOverlap, Completeness, Makespan };

inline std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::Reference: return "reference";
    case ViolationKind::Duration: return "duration";
    case ViolationKind::Precedence: return "precedence";
    case ViolationKind::MachineOverlap: return "machine-overlap";
    case ViolationKind::Completeness: return "completeness";
    case ViolationKind::Makespan: return "makespan";
  }
  return "unknown";
}

struct Violation {
  ViolationKind kind;
  std::string detail;
};

namespace detail {
inline std::string op_name(const ScheduledOp& e) {
  return "J" + std::to_string(e.job) + ".op" + std::to_string(e.op);
}
}  // namespace detail

// Checks a schedule against the job-shop constraints. An empty result means
// the schedule is feasible for `inst`.
inline std::vector<Violation> validate(const Instance& inst, const Schedule& sched) {
  std::vector<Violation> out;
  std::vector<std::vector<const ScheduledOp*>> by_job(inst.jobs.size());
  for (std::size_t j = 0; j < inst.jobs.size(); ++j) by_job[j].assign(inst.jobs[j].ops.size(), nullptr);
  std::vector<std::vector<const ScheduledOp*>> by_machine(inst.machines);

  Time latest_end = 0;
  for (const auto& e : sched.entries) {
    latest_end = std::max(latest_end, e.end);
    if (e.job < 0 || e.job >= inst.job_count() || e.op < 0 ||
        e.op >= static_cast<int>(inst.jobs[e.job].ops.size())) {
      out.push_back({ViolationKind::Reference, detail::op_name(e) + " does not exist in the instance"});
      continue;
    }
    const OperationSpec& spec = inst.jobs[e.job].ops[e.op];
    if (e.machine != spec.machine) {
      out.push_back({ViolationKind::Reference, detail::op_name(e) + " is on machine " + std::to_string(e.machine) +
                                                   ", route says " + std::to_string(spec.machine)});
    }
    if (e.end - e.start != spec.duration || e.start < 0) {
      out.push_back({ViolationKind::Duration, detail::op_name(e) + " spans [" + std::to_string(e.start) + "," +
                                                  std::to_string(e.end) + "), duration is " +
                                                  std::to_string(spec.duration)});
    }
    auto& slot = by_job[e.job][e.op];
    if (slot != nullptr) {
      out.push_back({ViolationKind::Completeness, detail::op_name(e) + " is scheduled more than once"});
      continue;
    }
    slot = &e;
    by_machine[spec.machine].push_back(&e);
  }

  for (std::size_t j = 0; j < by_job.size(); ++j) {
    for (std::size_t r = 0; r < by_job[j].size(); ++r) {
      if (by_job[j][r] == nullptr) {
        out.push_back({ViolationKind::Completeness,
                       "J" + std::to_string(j) + ".op" + std::to_string(r) + " is missing"});
      }
    }
    for (std::size_t r = 0; r + 1 < by_job[j].size(); ++r) {
      const ScheduledOp* prev = by_job[j][r];
      const ScheduledOp* next = by_job[j][r + 1];
      if (prev && next && next->start < prev->end) {
        out.push_back({ViolationKind::Precedence, detail::op_name(*next) + " starts at " +
                                                      std::to_string(next->start) + " before " +
                                                      detail::op_name(*prev) + " ends at " +
                                                      std::to_string(prev->end)});
      }
    }
  }

  for (std::size_t m = 0; m < by_machine.size(); ++m) {
    auto& ops = by_machine[m];
    std::sort(ops.begin(), ops.end(), [](const ScheduledOp* a, const ScheduledOp* b) {
      return a->start != b->start ? a->start < b->start : a->end < b->end;
    });
    const ScheduledOp* reach = nullptr;  // entry with the furthest end so far
    for (const ScheduledOp* e : ops) {
      if (e->end <= e->start) continue;  // empty open interval
      if (reach && e->start < reach->end) {
        out.push_back({ViolationKind::MachineOverlap, "machine " + std::to_string(m) + ": " +
                                                          detail::op_name(*reach) + " [" +
                                                          std::to_string(reach->start) + "," +
                                                          std::to_string(reach->end) + ") overlaps " +
                                                          detail::op_name(*e) + " [" + std::to_string(e->start) +
                                                          "," + std::to_string(e->end) + ")"});
      }
      if (!reach || e->end > reach->end) reach = e;
    }
  }

  if (!sched.entries.empty() && sched.makespan != latest_end) {
    out.push_back({ViolationKind::Makespan, "makespan " + std::to_string(sched.makespan) +
                                                " differs from the latest end " + std::to_string(latest_end)});
  }
  return out;
}

}  // namespace cjsp
