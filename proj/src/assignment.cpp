#include "pap/assignment.hpp"

#include <algorithm>

namespace pap {

void validate_permutation(const Assignment& assignment,
                          std::size_t task_count) {
  if (assignment.next.size() != task_count) {
    throw input_error("assignment covers " +
                      std::to_string(assignment.next.size()) + " tasks, expected " +
                      std::to_string(task_count));
  }
  std::vector<char> seen(task_count, 0);
  for (std::size_t v : assignment.next) {
    if (v >= task_count) {
      throw input_error("assignment successor index out of range");
    }
    if (seen[v]) {
      throw input_error("assignment is not a permutation: task index " +
                        std::to_string(v) + " has two predecessors");
    }
    seen[v] = 1;
  }
}

CycleDecomposition decompose(const Assignment& assignment,
                             const Instance& instance) {
  const std::size_t n = instance.size();
  validate_permutation(assignment, n);

  CycleDecomposition result;
  std::vector<char> visited(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (visited[i]) continue;
    std::vector<std::size_t> cycle;
    Time task_time = 0;
    Time transition_time = 0;
    std::size_t cur = i;
    do {
      visited[cur] = 1;
      cycle.push_back(cur);
      task_time += instance.duration_of(cur);
      transition_time += instance.transition(cur, assignment.next[cur]);
      cur = assignment.next[cur];
    } while (cur != i);

    const Time total = task_time + transition_time;
    if (total <= 0 || total % instance.period() != 0) {
      throw internal_error("cycle length " + std::to_string(total) +
                           " is not a positive multiple of the period");
    }
    result.cycles.push_back(std::move(cycle));
    result.workers.push_back(total / instance.period());
    result.transition.push_back(transition_time);
  }
  return result;
}

SolveReport make_report(Assignment assignment, const Instance& instance) {
  CycleDecomposition decomposition = decompose(assignment, instance);

  SolveReport report;
  report.assignment = std::move(assignment);
  report.cycle_count = decomposition.cycles.size();
  report.fair = report.cycle_count == 1;
  for (std::size_t c = 0; c < decomposition.cycles.size(); ++c) {
    report.total_transition += decomposition.transition[c];
    report.workers += decomposition.workers[c];
  }
  report.load = load_profile(instance).load;

  if (report.workers * instance.period() !=
      instance.total_duration() + report.total_transition) {
    throw internal_error("worker accounting does not balance");
  }
  return report;
}

TransitionProfile transition_profile(const Assignment& assignment,
                                     const Instance& instance,
                                     const LoadProfile& profile) {
  validate_permutation(assignment, instance.size());

  const std::size_t m = profile.points.size();
  const std::size_t regions = 2 * m;
  // Region r = 2k is points[k]; region r = 2k+1 is the gap after it. Arc
  // endpoints are event points, so each arc covers a contiguous circular
  // range of regions; accumulate with a difference array.
  std::vector<std::int64_t> diff(regions + 1, 0);
  for (std::size_t i = 0; i < instance.size(); ++i) {
    const Task& from = instance.task(i);
    const Task& to = instance.task(assignment.next[i]);
    std::size_t rb = 2 * profile.point_index(from.end);
    std::size_t ra = 2 * profile.point_index(to.start);
    if (rb <= ra) {
      ++diff[rb];
      --diff[ra + 1];
    } else {
      ++diff[rb];
      --diff[regions];
      ++diff[0];
      --diff[ra + 1];
    }
  }

  TransitionProfile counts;
  counts.point_count.assign(m, 0);
  counts.gap_count.assign(m, 0);
  std::int64_t running = 0;
  for (std::size_t r = 0; r < regions; ++r) {
    running += diff[r];
    if (r % 2 == 0) {
      counts.point_count[r / 2] = running;
    } else {
      counts.gap_count[r / 2] = running;
    }
  }
  return counts;
}

}  // namespace pap
