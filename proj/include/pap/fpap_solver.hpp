#pragma once

#include "pap/pap_solver.hpp"

namespace pap {

// Maximal closed circular interval on which the load stays strictly below L.
// May wrap the origin; start == end denotes a single point. Interval starts
// coincide with task end times, interval ends with task start times.
struct IdleInterval {
  Time start = 0;
  Time end = 0;
};

inline Time idle_length(const IdleInterval& interval, Time period) {
  return mod_period(interval.end - interval.start, period);
}

// Directed multigraph over idle intervals with one arc per task, from the
// interval holding the task's start time to the interval holding its end
// time. Weak connectivity characterizes fair feasibility with L workers.
struct IdleIntervalGraph {
  struct Arc {
    std::size_t task = 0;  // dense task index
    std::size_t tail = 0;  // interval holding the task's start
    std::size_t head = 0;  // interval holding the task's end
  };
  std::vector<IdleInterval> nodes;  // sorted by start time
  std::vector<Arc> arcs;            // exactly one per task
};

std::vector<IdleInterval> idle_intervals(const Instance& instance);
std::vector<IdleInterval> idle_intervals(const Instance& instance,
                                         const LoadProfile& profile);

// Binary search over interval boundaries; npos when t lies in no interval.
std::size_t locate_idle_interval(const std::vector<IdleInterval>& intervals,
                                 Time t, Time period);
inline constexpr std::size_t interval_npos = static_cast<std::size_t>(-1);

IdleIntervalGraph idle_interval_graph(const Instance& instance);
IdleIntervalGraph idle_interval_graph(const Instance& instance,
                                      const LoadProfile& profile);

std::size_t weak_component_count(const IdleIntervalGraph& graph);

// True iff some fair assignment needs no more than L workers.
bool is_fair_feasible_at_L(const Instance& instance);

// Classical nearest neighbor tour over the transition metric: the closest
// unvisited task is the one whose start time follows the current end time
// first on the circle. Always fair, never more than L+1 workers.
SolveReport nearest_neighbor(const Instance& instance);
SolveReport nearest_neighbor(const Instance& instance, TaskId start);

// Disjoint-set registry over tasks: two tasks share a representative iff
// they currently lie on the same cycle of the evolving assignment.
class CycleRegistry {
 public:
  CycleRegistry(const CycleDecomposition& decomposition,
                std::size_t task_count);
  std::size_t find(std::size_t task) const;
  bool merge(std::size_t a, std::size_t b);
  std::size_t cycle_count() const { return components_; }

 private:
  mutable std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::size_t components_ = 0;
};

struct PatchingStats {
  std::size_t initial_cycles = 0;
  std::size_t exchanges = 0;
  bool fell_back_to_nearest_neighbor = false;
};

// Exact fair solver: starts from the efficient assignment, merges disjoint
// cycles by exchanging the heads of overlapping transition arcs (cost is
// conserved by every exchange), and falls back to nearest neighbor when the
// idle interval graph is disconnected. O(n log n).
SolveReport patching(const Instance& instance, PatchingStats* stats = nullptr);

struct PriceOfFairness {
  std::int64_t load = 0;
  std::int64_t fair_workers = 0;
  std::int64_t delta = 0;      // fair_workers - load, always 0 or 1
  std::int64_t ratio_num = 0;  // delta / load in lowest terms
  std::int64_t ratio_den = 1;
};

PriceOfFairness price_of_fairness(const Instance& instance);

}  // namespace pap
