#include "pap/pap_solver.hpp"

#include <algorithm>
#include <limits>
#include <tuple>

namespace pap {

EventSequence build_event_sequence(const Instance& instance,
                                   const LoadProfile& profile) {
  EventSequence sequence;
  sequence.events.reserve(2 * instance.size());
  for (std::size_t i = 0; i < instance.size(); ++i) {
    sequence.events.push_back({instance.task(i).start, true, i});
    sequence.events.push_back({instance.task(i).end, false, i});
  }
  std::sort(sequence.events.begin(), sequence.events.end(),
            [&](const Event& a, const Event& b) {
              return std::tuple(a.time, a.is_start, instance.task(a.task).id) <
                     std::tuple(b.time, b.is_start, instance.task(b.task).id);
            });

  // Start processing at the event point closing the witness gap, so the
  // virtual time zero sits inside a maximal-load region.
  const std::size_t m = profile.points.size();
  sequence.origin = profile.points[(profile.witness_gap + 1) % m];
  auto cut = std::lower_bound(
      sequence.events.begin(), sequence.events.end(), sequence.origin,
      [](const Event& e, Time t) { return e.time < t; });
  if (cut == sequence.events.end() || cut->time != sequence.origin) {
    throw internal_error("cut does not land on an event point");
  }
  sequence.cut = static_cast<std::size_t>(cut - sequence.events.begin());
  return sequence;
}

namespace detail {

Assignment match_events(const Instance& instance, const LoadProfile& profile,
                        const EventSequence& sequence,
                        bool direct_match_branch) {
  const std::size_t total = sequence.events.size();
  Assignment assignment;
  assignment.next.assign(instance.size(), std::numeric_limits<std::size_t>::max());

  std::vector<std::size_t> pending_ends;
  pending_ends.reserve(instance.size());
  std::int64_t level = profile.load;  // region level entering the cut

  auto at = [&](std::size_t i) -> const Event& {
    return sequence.events[(sequence.cut + i) % total];
  };

  std::size_t i = 0;
  while (i < total) {
    if (static_cast<std::int64_t>(pending_ends.size()) != profile.load - level) {
      throw internal_error("stack size diverged from L - I(t)");
    }
    const Event& event = at(i);
    if (event.is_start) {
      if (pending_ends.empty()) {
        throw internal_error("start event with no pending end to match");
      }
      assignment.next[pending_ends.back()] = event.task;
      pending_ends.pop_back();
      ++level;
      ++i;
    } else if (direct_match_branch && i + 1 < total && at(i + 1).is_start) {
      assignment.next[event.task] = at(i + 1).task;
      i += 2;  // level drops then rises; net zero
    } else {
      pending_ends.push_back(event.task);
      --level;
      ++i;
    }
    if (level < 0 || level > profile.load) {
      throw internal_error("level left [0, L] during the sweep");
    }
  }
  if (!pending_ends.empty() || level != profile.load) {
    throw internal_error("sweep finished with unmatched ends");
  }
  for (std::size_t v : assignment.next) {
    if (v == std::numeric_limits<std::size_t>::max()) {
      throw internal_error("sweep finished with unmatched starts");
    }
  }
  return assignment;
}

SsmOutcome solve_ssm(const Instance& instance, const LoadProfile& profile) {
  EventSequence sequence = build_event_sequence(instance, profile);
  SsmOutcome outcome;
  outcome.assignment = match_events(instance, profile, sequence, true);
  outcome.origin = sequence.origin;

  // Every arc matches an earlier event to a later one in rotated order, so
  // nothing crosses the cut.
  const Time period = instance.period();
  for (std::size_t i = 0; i < instance.size(); ++i) {
    Time b = mod_period(instance.task(i).end - outcome.origin, period);
    Time a = mod_period(
        instance.task(outcome.assignment.next[i]).start - outcome.origin, period);
    if (b > a) {
      throw internal_error("matched arc crosses the cut");
    }
  }
  return outcome;
}

}  // namespace detail

SolveReport shift_sort_and_match(const Instance& instance) {
  LoadProfile profile = load_profile(instance);
  detail::SsmOutcome outcome = detail::solve_ssm(instance, profile);
  SolveReport report = make_report(std::move(outcome.assignment), instance);
  if (report.workers != profile.load) {
    throw internal_error("matching uses " + std::to_string(report.workers) +
                         " workers instead of the load " +
                         std::to_string(profile.load));
  }
  return report;
}

namespace {

OptimalityVerdict verify_impl(const SolveReport& report,
                              const Instance& instance,
                              const Time* oracle_cost) {
  validate_permutation(report.assignment, instance.size());

  Time recomputed = 0;
  for (std::size_t i = 0; i < instance.size(); ++i) {
    recomputed += instance.transition(i, report.assignment.next[i]);
  }
  if (recomputed != report.total_transition) {
    throw input_error("report total_transition " +
                      std::to_string(report.total_transition) +
                      " does not match its assignment (" +
                      std::to_string(recomputed) + ")");
  }

  LoadProfile profile = load_profile(instance);
  TransitionProfile arcs = transition_profile(report.assignment, instance, profile);

  OptimalityVerdict verdict;
  verdict.cost_equals_load_bound =
      instance.total_duration() + recomputed == profile.load * instance.period();

  verdict.profile_constant_at_load = true;
  verdict.has_transition_free_region = false;
  for (std::size_t k = 0; k < profile.points.size(); ++k) {
    if (profile.point_level[k] + arcs.point_count[k] != profile.load ||
        profile.gap_level[k] + arcs.gap_count[k] != profile.load) {
      verdict.profile_constant_at_load = false;
    }
    if (arcs.point_count[k] == 0 || arcs.gap_count[k] == 0) {
      verdict.has_transition_free_region = true;
    }
  }

  if (oracle_cost != nullptr) {
    verdict.optimal = recomputed == *oracle_cost
                          ? OptimalityVerdict::Optimality::matches_oracle
                          : OptimalityVerdict::Optimality::differs_from_oracle;
  }
  return verdict;
}

}  // namespace

OptimalityVerdict verify_optimality(const SolveReport& report,
                                    const Instance& instance) {
  return verify_impl(report, instance, nullptr);
}

OptimalityVerdict verify_optimality(const SolveReport& report,
                                    const Instance& instance, Time oracle_cost) {
  return verify_impl(report, instance, &oracle_cost);
}

}  // namespace pap
