#include "pap/fpap_solver.hpp"
#include "pap/generator.hpp"
#include "pap/io.hpp"
#include "pap/render.hpp"

#include <algorithm>

#include "doctest.h"
#include "test_helpers.hpp"

using namespace pap;
using test_helpers::four_layer;
using test_helpers::same_tasks;
using test_helpers::seeded;
using test_helpers::single_task;
using test_helpers::two_task;

namespace {

const char* kGoldenTwoTask =
    "{\n"
    "  \"period\": 12,\n"
    "  \"tasks\": [\n"
    "    {\n"
    "      \"id\": 1,\n"
    "      \"start\": 0,\n"
    "      \"end\": 4\n"
    "    },\n"
    "    {\n"
    "      \"id\": 2,\n"
    "      \"start\": 5,\n"
    "      \"end\": 9\n"
    "    }\n"
    "  ]\n"
    "}\n";

std::size_t count_lines_with(const std::string& text, const std::string& needle) {
  std::size_t count = 0;
  std::size_t pos = 0;
  while ((pos = text.find(needle, pos)) != std::string::npos) {
    ++count;
    pos += needle.size();
  }
  return count;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("golden instance file round-trips byte for byte") {
  Instance parsed = parse_instance(kGoldenTwoTask);
  CHECK(same_tasks(parsed, two_task()));
  CHECK(emit_instance(parsed) == kGoldenTwoTask);
}

TEST_CASE("parse inverts emit on generated instances") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Instance instance = seeded(seed);
    CHECK(same_tasks(parse_instance(emit_instance(instance)), instance));
  }
}

TEST_CASE("instance parse errors carry a diagnostic") {
  CHECK_THROWS_AS(parse_instance("not json"), input_error);
  CHECK_THROWS_AS(parse_instance("[]"), input_error);
  CHECK_THROWS_AS(parse_instance("{\"period\": 10}"), input_error);
  CHECK_THROWS_AS(parse_instance("{\"period\": 10, \"tasks\": [{\"id\": 1}]}"),
                  input_error);
  CHECK_THROWS_AS(
      parse_instance(
          "{\"period\": 10, \"tasks\": [{\"id\": 1, \"start\": 2, \"end\": \"x\"}]}"),
      input_error);

  // Zero-duration task: the rejection names the task.
  try {
    parse_instance(
        "{\"period\": 10, \"tasks\": [{\"id\": 5, \"start\": 2, \"end\": 2}]}");
    FAIL("expected input_error");
  } catch (const input_error& e) {
    CHECK(std::string(e.what()).find("task 5") != std::string::npos);
  }
}

TEST_CASE("solution files round-trip and verify") {
  Instance instance = four_layer();
  SolveReport report = patching(instance);
  SolutionFile solution = to_solution_file(report, instance);

  SolutionFile reparsed = parse_solution(emit_solution(solution));
  CHECK(reparsed.digest == solution.digest);
  CHECK(reparsed.workers == solution.workers);
  CHECK(reparsed.total_transition == solution.total_transition);
  CHECK(reparsed.cycles == solution.cycles);
  CHECK(check_solution(instance, reparsed).empty());
}

TEST_CASE("verification re-derives every numeric field") {
  Instance instance = two_task();
  SolutionFile good = to_solution_file(shift_sort_and_match(instance), instance);
  CHECK(check_solution(instance, good).empty());

  SUBCASE("tampered arc cost") {
    SolutionFile bad = good;
    bad.successors[0].cost += 1;
    bad.total_transition += 1;
    CHECK_FALSE(check_solution(instance, bad).empty());
  }
  SUBCASE("tampered worker count") {
    SolutionFile bad = good;
    bad.workers = 7;
    CHECK_FALSE(check_solution(instance, bad).empty());
  }
  SUBCASE("successor list that is not a permutation") {
    SolutionFile bad = good;
    bad.successors[1].to = bad.successors[0].to;
    bad.successors[1].cost =
        transition_cost(instance.task(1), instance.task(0), instance.period());
    CHECK_FALSE(check_solution(instance, bad).empty());
  }
  SUBCASE("solution for a different instance is refused") {
    Instance other = four_layer();
    SolutionFile bad = to_solution_file(shift_sort_and_match(other), other);
    auto problems = check_solution(instance, bad);
    REQUIRE(!problems.empty());
    CHECK(problems.front().find("digest") != std::string::npos);
  }
}

TEST_CASE("generators are deterministic") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    CHECK(same_tasks(test_helpers::uniform(9, 30, seed),
                     test_helpers::uniform(9, 30, seed)));
  }
}

TEST_CASE("layered-disconnected builds k components at load k") {
  for (std::size_t k = 1; k <= 5; ++k) {
    GeneratorSpec spec;
    spec.family = Family::layered_disconnected;
    spec.period = static_cast<Time>(12 * k);
    spec.layers = k;
    Instance instance = generate(spec);
    CHECK(instance.size() == 2 * k);
    CHECK(load_profile(instance).load == static_cast<std::int64_t>(k));
    CHECK(weak_component_count(idle_interval_graph(instance)) == k);
  }
}

TEST_CASE("the canonical four-layer instance is layered-disconnected k=2") {
  GeneratorSpec spec;
  spec.family = Family::layered_disconnected;
  spec.period = 12;
  spec.layers = 2;
  CHECK(same_tasks(generate(spec), four_layer()));
}

TEST_CASE("layered-connected keeps the load but bridges the components") {
  for (std::size_t k = 2; k <= 5; ++k) {
    GeneratorSpec spec;
    spec.family = Family::layered_connected;
    spec.period = static_cast<Time>(12 * k);
    spec.layers = k;
    Instance instance = generate(spec);
    CHECK(load_profile(instance).load == static_cast<std::int64_t>(k));
    CHECK(weak_component_count(idle_interval_graph(instance)) == 1);
    CHECK(is_fair_feasible_at_L(instance));
  }
}

TEST_CASE("generator refusals") {
  GeneratorSpec empty;
  empty.family = Family::uniform;
  empty.n = 0;
  empty.period = 10;
  CHECK_THROWS_AS(generate(empty), input_error);

  GeneratorSpec bad_period;
  bad_period.family = Family::layered_disconnected;
  bad_period.layers = 3;
  bad_period.period = 5;  // below 2k
  CHECK_THROWS_AS(generate(bad_period), input_error);

  GeneratorSpec indivisible;
  indivisible.family = Family::layered_disconnected;
  indivisible.layers = 2;
  indivisible.period = 10;  // not a multiple of 2k
  CHECK_THROWS_AS(generate(indivisible), input_error);

  CHECK_THROWS_AS(parse_family("nonsense"), input_error);
}

TEST_CASE("schedule rendering prints one line per worker") {
  Instance one = single_task();
  std::string single = render_schedule(shift_sort_and_match(one), one);
  CHECK(count_lines_with(single, "worker ") == 1);
  CHECK(single.find("task 1") != std::string::npos);
  CHECK(single.find("idle 5") != std::string::npos);

  Instance four = four_layer();
  std::string efficient = render_schedule(shift_sort_and_match(four), four);
  CHECK(count_lines_with(efficient, "worker ") == 2);

  std::string fair = render_schedule(patching(four), four);
  CHECK(count_lines_with(fair, "worker ") == 3);
  CHECK(fair.find("span 3T") != std::string::npos);
  CHECK(fair.find("workers 3") != std::string::npos);
  CHECK(fair.find("transition 12") != std::string::npos);
}

TEST_CASE("digest distinguishes instances") {
  CHECK(instance_digest(two_task()) == instance_digest(two_task()));
  CHECK(instance_digest(two_task()) != instance_digest(four_layer()));
}

}  // TEST_SUITE
