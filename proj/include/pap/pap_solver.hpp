#pragma once

#include "pap/assignment.hpp"

namespace pap {

struct Event {
  Time time = 0;
  bool is_start = false;
  std::size_t task = 0;
};

// All 2n task events sorted by (time, ends before starts, task id). `cut`
// indexes the first event processed after rotating the circular order so the
// sweep begins inside a maximal-load gap; `origin` is that event's time and
// serves as the linearization reference (no matched arc crosses it).
struct EventSequence {
  std::vector<Event> events;
  std::size_t cut = 0;
  Time origin = 0;
};

EventSequence build_event_sequence(const Instance& instance,
                                   const LoadProfile& profile);

// Exact O(n log n) solution of the periodic assignment problem. The result
// always uses exactly L workers and leaves the cut region free of transition
// arcs.
SolveReport shift_sort_and_match(const Instance& instance);

// Independent evaluation of the optimality conditions for a feasible
// assignment. An assignment is optimal exactly when any of them holds:
// total busy plus transition time equals L*T, the region-wise sum I + M is
// L everywhere, or some region carries no transition arc. Optimality itself
// is reported as a cost comparison against a caller-supplied oracle optimum,
// or marked not_evaluated when none is given.
struct OptimalityVerdict {
  enum class Optimality { not_evaluated, matches_oracle, differs_from_oracle };
  Optimality optimal = Optimality::not_evaluated;
  bool cost_equals_load_bound = false;
  bool profile_constant_at_load = false;
  bool has_transition_free_region = false;

  bool structural_conditions_hold() const {
    return cost_equals_load_bound && profile_constant_at_load &&
           has_transition_free_region;
  }
};

OptimalityVerdict verify_optimality(const SolveReport& report,
                                    const Instance& instance);
OptimalityVerdict verify_optimality(const SolveReport& report,
                                    const Instance& instance, Time oracle_cost);

namespace detail {

// Stack loop over the rotated event order. `direct_match_branch` toggles the
// end-followed-by-start shortcut; both settings produce identical matchings
// (asserted by tests) since the stack is LIFO.
Assignment match_events(const Instance& instance, const LoadProfile& profile,
                        const EventSequence& sequence,
                        bool direct_match_branch);

struct SsmOutcome {
  Assignment assignment;
  Time origin = 0;  // linearization reference: no arc crosses this position
};

SsmOutcome solve_ssm(const Instance& instance, const LoadProfile& profile);

}  // namespace detail

}  // namespace pap
