#pragma once

#include "pap/load.hpp"
#include "pap/types.hpp"

namespace pap {

// Successor permutation over dense task indices (the arc set M): next[i] is
// the task performed after task i by the same worker. Self-arcs are legal.
struct Assignment {
  std::vector<std::size_t> next;
};

// Throws input_error unless `assignment` is a bijection on [0, n).
void validate_permutation(const Assignment& assignment, std::size_t task_count);

// Orbits of the successor map. Every cycle closes after an exact integer
// number of periods; that integer is the cycle's worker count.
struct CycleDecomposition {
  std::vector<std::vector<std::size_t>> cycles;  // dense indices, orbit order
  std::vector<std::int64_t> workers;             // per-cycle worker count
  std::vector<Time> transition;                  // per-cycle transition time
};

CycleDecomposition decompose(const Assignment& assignment,
                             const Instance& instance);

// Solver output bundle shared by all solvers and oracles.
struct SolveReport {
  Assignment assignment;
  Time total_transition = 0;    // c(M)
  std::int64_t workers = 0;     // (c(I) + c(M)) / T
  std::size_t cycle_count = 0;
  bool fair = false;            // cycle_count == 1
  std::int64_t load = 0;        // L
};

// Derives all report fields from the assignment.
SolveReport make_report(Assignment assignment, const Instance& instance);

// Count M(.) of transition arcs covering each region of `profile`. Arcs are
// closed intervals [end_i, start_next(i)]; a zero-cost arc covers exactly the
// single point where it lives.
struct TransitionProfile {
  std::vector<std::int64_t> point_count;
  std::vector<std::int64_t> gap_count;
};

TransitionProfile transition_profile(const Assignment& assignment,
                                     const Instance& instance,
                                     const LoadProfile& profile);

}  // namespace pap
