#include "pap/oracle.hpp"
#include "pap/pap_solver.hpp"

#include <set>

#include "doctest.h"
#include "test_helpers.hpp"

using namespace pap;
using test_helpers::four_layer;
using test_helpers::seeded;
using test_helpers::single_task;
using test_helpers::two_task;

namespace {

std::set<std::set<TaskId>> cycle_sets(const SolveReport& report,
                                      const Instance& instance) {
  std::set<std::set<TaskId>> result;
  for (const auto& cycle : decompose(report.assignment, instance).cycles) {
    std::set<TaskId> ids;
    for (std::size_t index : cycle) ids.insert(instance.task(index).id);
    result.insert(std::move(ids));
  }
  return result;
}

}  // namespace

TEST_SUITE("pap_solver") {

TEST_CASE("four-layer instance solves at zero transition cost") {
  Instance instance = four_layer();
  SolveReport report = shift_sort_and_match(instance);
  CHECK(report.total_transition == 0);
  CHECK(report.workers == 2);
  CHECK(cycle_sets(report, instance) ==
        std::set<std::set<TaskId>>{{1, 2}, {3, 4}});
}

TEST_CASE("single task gets its self-arc") {
  Instance instance = single_task();
  SolveReport report = shift_sort_and_match(instance);
  CHECK(report.assignment.next == std::vector<std::size_t>{0});
  CHECK(report.total_transition == 5);
  CHECK(report.workers == 1);
}

TEST_CASE("two-task instance chains the tasks") {
  Instance instance = two_task();
  SolveReport report = shift_sort_and_match(instance);
  CHECK(report.assignment.next == std::vector<std::size_t>{1, 0});
  CHECK(report.total_transition == 4);
  CHECK(report.workers == 1);
  CHECK(report.fair);
}

TEST_CASE("event sequence cuts inside a maximal-load gap") {
  Instance instance = two_task();
  LoadProfile profile = load_profile(instance);
  EventSequence sequence = build_event_sequence(instance, profile);
  CHECK(sequence.events.size() == 4);
  CHECK(profile.gap_level[profile.witness_gap] == profile.load);
  CHECK(sequence.events[sequence.cut].time == sequence.origin);
  // Ends sort before starts at equal times.
  Instance tied(10, {{1, 0, 5}, {2, 5, 0}});
  EventSequence tied_sequence =
      build_event_sequence(tied, load_profile(tied));
  for (std::size_t i = 1; i < tied_sequence.events.size(); ++i) {
    const Event& a = tied_sequence.events[i - 1];
    const Event& b = tied_sequence.events[i];
    CHECK((a.time < b.time || (a.time == b.time && a.is_start <= b.is_start)));
  }
}

TEST_CASE("matching cost equals the permutation oracle") {
  for (std::uint64_t seed = 0; seed < 250; ++seed) {
    Instance instance = seeded(seed, 7);
    SolveReport report = shift_sort_and_match(instance);
    CHECK(report.total_transition == pap_bruteforce_cost(instance));
    CHECK(report.workers == report.load);
  }
}

TEST_CASE("direct-match branch is equivalent to the pure stack loop") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    Instance instance = seeded(seed);
    LoadProfile profile = load_profile(instance);
    EventSequence sequence = build_event_sequence(instance, profile);
    Assignment with_branch =
        detail::match_events(instance, profile, sequence, true);
    Assignment without_branch =
        detail::match_events(instance, profile, sequence, false);
    CHECK(with_branch.next == without_branch.next);
  }
}

TEST_CASE("solver output is deterministic") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Instance instance = seeded(seed);
    CHECK(shift_sort_and_match(instance).assignment.next ==
          shift_sort_and_match(instance).assignment.next);
  }
}

TEST_CASE("optimality conditions hold on every solver output") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Instance instance = seeded(seed);
    SolveReport report = shift_sort_and_match(instance);
    OptimalityVerdict verdict = verify_optimality(report, instance);
    CHECK(verdict.cost_equals_load_bound);
    CHECK(verdict.profile_constant_at_load);
    CHECK(verdict.has_transition_free_region);
    CHECK(verdict.optimal == OptimalityVerdict::Optimality::not_evaluated);
  }
}

TEST_CASE("the three-worker fair tour misses the load bound") {
  Instance instance = four_layer();
  SolveReport tour = make_report(Assignment{{1, 2, 3, 0}}, instance);
  OptimalityVerdict verdict = verify_optimality(tour, instance);
  // c(I) + c(M) = 24 + 12 = 36, while L*T = 24.
  CHECK_FALSE(verdict.cost_equals_load_bound);
  CHECK_FALSE(verdict.profile_constant_at_load);
}

TEST_CASE("self-loop keeps the region total at the load") {
  Instance instance = single_task();
  SolveReport report = shift_sort_and_match(instance);
  OptimalityVerdict verdict = verify_optimality(report, instance);
  CHECK(verdict.profile_constant_at_load);
}

TEST_CASE("optimality is judged against a supplied oracle cost") {
  Instance instance = two_task();
  SolveReport report = shift_sort_and_match(instance);
  CHECK(verify_optimality(report, instance, 4).optimal ==
        OptimalityVerdict::Optimality::matches_oracle);
  CHECK(verify_optimality(report, instance, 3).optimal ==
        OptimalityVerdict::Optimality::differs_from_oracle);
}

TEST_CASE("verifier rejects reports with inconsistent totals") {
  Instance instance = two_task();
  SolveReport report = shift_sort_and_match(instance);
  report.total_transition += 1;
  CHECK_THROWS_AS(verify_optimality(report, instance), input_error);
}

}  // TEST_SUITE
