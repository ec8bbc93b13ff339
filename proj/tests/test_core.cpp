#include "pap/assignment.hpp"
#include "pap/load.hpp"
#include "pap/oracle.hpp"
#include "pap/types.hpp"

#include <algorithm>
#include <random>

#include "doctest.h"
#include "test_helpers.hpp"

using namespace pap;
using test_helpers::four_layer;
using test_helpers::seeded;
using test_helpers::single_task;
using test_helpers::two_task;

TEST_SUITE("core") {

TEST_CASE("mod_period maps into [0, T)") {
  CHECK(mod_period(7, 12) == 7);
  CHECK(mod_period(-9, 12) == 3);
  CHECK(mod_period(24, 12) == 0);
  CHECK(mod_period(-12, 12) == 0);
  CHECK(mod_period(-1, 12) == 11);
}

TEST_CASE("duration handles wrap-around") {
  CHECK(duration({1, 2, 7}, 10) == 5);
  CHECK(duration({1, 9, 3}, 12) == 6);
  CHECK(duration({1, 0, 6}, 12) == 6);
}

TEST_CASE("transition cost is the circular gap between end and start") {
  Task a{1, 0, 4};
  Task b{2, 5, 9};
  CHECK(transition_cost(a, b, 12) == 1);
  CHECK(transition_cost(b, a, 12) == 3);
  Task c{1, 2, 7};
  CHECK(transition_cost(c, c, 10) == 5);  // T - duration
}

TEST_CASE("instance validation rejects malformed input") {
  CHECK_THROWS_AS(Instance(0, {{1, 0, 1}}), input_error);
  CHECK_THROWS_AS(Instance(10, {}), input_error);
  CHECK_THROWS_AS(Instance(10, {{1, 3, 3}}), input_error);
  CHECK_THROWS_AS(Instance(10, {{1, 0, 12}}), input_error);
  CHECK_THROWS_AS(Instance(10, {{1, -1, 3}}), input_error);
  CHECK_THROWS_AS(Instance(10, {{1, 0, 3}, {1, 4, 6}}), input_error);
  CHECK_THROWS_AS(Instance(10, {{-3, 0, 3}}), input_error);

  // The diagnostic names the offending task.
  try {
    Instance(10, {{7, 3, 3}});
    FAIL("expected input_error");
  } catch (const input_error& e) {
    CHECK(std::string(e.what()).find("task 7") != std::string::npos);
  }
}

TEST_CASE("duplicate task shapes are legal, identity is by id") {
  Instance instance(10, {{1, 2, 7}, {2, 2, 7}});
  CHECK(instance.size() == 2);
  CHECK(load_profile(instance).load == 2);
}

TEST_CASE("load profile of the four-layer instance") {
  LoadProfile profile = load_profile(four_layer());
  CHECK(profile.load == 2);
  REQUIRE(profile.points == std::vector<Time>{0, 3, 6, 9});
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(profile.point_level[k] == 1);
    CHECK(profile.gap_level[k] == 2);
  }
}

TEST_CASE("load profile of the two-task instance") {
  LoadProfile profile = load_profile(two_task());
  CHECK(profile.load == 1);
  REQUIRE(profile.points == std::vector<Time>{0, 4, 5, 9});
  CHECK(profile.gap_level == std::vector<std::int64_t>{1, 0, 1, 0});
  CHECK(profile.point_level == std::vector<std::int64_t>{0, 0, 0, 0});
}

TEST_CASE("load profile of a single task") {
  LoadProfile profile = load_profile(single_task());
  CHECK(profile.load == 1);
  REQUIRE(profile.points == std::vector<Time>{2, 7});
  CHECK(profile.gap_level[0] == 1);   // inside (2, 7)
  CHECK(profile.gap_level[1] == 0);   // inside (7, 2)
  CHECK(profile.witness_gap == 0);
}

TEST_CASE("load profile agrees with the quadratic oracle") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Instance instance = seeded(seed);
    LoadProfile fast = load_profile(instance);
    LoadProfile slow = load_oracle(instance);
    REQUIRE(fast.points == slow.points);
    REQUIRE(fast.point_level == slow.point_level);
    REQUIRE(fast.gap_level == slow.gap_level);
    REQUIRE(fast.load == slow.load);
    REQUIRE(fast.witness_gap == slow.witness_gap);
  }
}

TEST_CASE("open endpoints keep task boundary levels below the load") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Instance instance = seeded(seed);
    LoadProfile profile = load_profile(instance);
    for (const Task& task : instance.tasks()) {
      CHECK(profile.point_level[profile.point_index(task.start)] <=
            profile.load - 1);
      CHECK(profile.point_level[profile.point_index(task.end)] <=
            profile.load - 1);
    }
  }
}

TEST_CASE("decompose splits orbits and accounts workers") {
  Instance instance = four_layer();

  SUBCASE("two swaps give two cycles") {
    Assignment pairing{{1, 0, 3, 2}};
    CycleDecomposition d = decompose(pairing, instance);
    REQUIRE(d.cycles.size() == 2);
    CHECK(d.workers[0] == 1);
    CHECK(d.workers[1] == 1);
  }

  SUBCASE("the full tour is one cycle with three workers") {
    Assignment tour{{1, 2, 3, 0}};
    CycleDecomposition d = decompose(tour, instance);
    REQUIRE(d.cycles.size() == 1);
    CHECK(d.transition[0] == 12);  // 0 + 3 + 0 + 9
    CHECK(d.workers[0] == 3);
  }
}

TEST_CASE("single task self-loop uses one worker") {
  Instance instance = single_task();
  CycleDecomposition d = decompose(Assignment{{0}}, instance);
  REQUIRE(d.cycles.size() == 1);
  CHECK(d.workers[0] == 1);  // (5 + 5) / 10
}

TEST_CASE("decompose rejects non-permutations") {
  Instance instance = four_layer();
  CHECK_THROWS_AS(decompose(Assignment{{0, 0, 3, 2}}, instance), input_error);
  CHECK_THROWS_AS(decompose(Assignment{{0, 1}}, instance), input_error);
  CHECK_THROWS_AS(decompose(Assignment{{0, 1, 2, 9}}, instance), input_error);
}

TEST_CASE("transition profile of a self-loop covers exactly [end, start]") {
  Instance instance = single_task();
  LoadProfile profile = load_profile(instance);
  TransitionProfile arcs = transition_profile(Assignment{{0}}, instance, profile);
  // points are {2, 7}; the arc [7, 2] covers point 7, the wrap gap and point 2.
  CHECK(arcs.point_count == std::vector<std::int64_t>{1, 1});
  CHECK(arcs.gap_count == std::vector<std::int64_t>{0, 1});
}

TEST_CASE("transition profile sees the long arcs of the fair tour") {
  Instance instance = four_layer();
  LoadProfile profile = load_profile(instance);
  TransitionProfile arcs =
      transition_profile(Assignment{{1, 2, 3, 0}}, instance, profile);
  // The cost-3 arc [0, 3] covers point 0, gap (0,3) and point 3.
  CHECK(arcs.point_count[0] >= 1);
  CHECK(arcs.gap_count[0] >= 1);
  CHECK(arcs.point_count[1] >= 1);
}

TEST_CASE("workers equal the constant region total for any assignment") {
  std::mt19937_64 rng(42);
  for (int round = 0; round < 200; ++round) {
    Instance instance = seeded(rng());
    std::vector<std::size_t> perm(instance.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);

    SolveReport report = make_report(Assignment{perm}, instance);
    CHECK(report.workers * instance.period() ==
          instance.total_duration() + report.total_transition);
    CHECK(report.fair == (report.cycle_count == 1));

    LoadProfile profile = load_profile(instance);
    TransitionProfile arcs =
        transition_profile(report.assignment, instance, profile);
    for (std::size_t k = 0; k < profile.points.size(); ++k) {
      CHECK(profile.point_level[k] + arcs.point_count[k] == report.workers);
      CHECK(profile.gap_level[k] + arcs.gap_count[k] == report.workers);
    }
  }
}

}  // TEST_SUITE
