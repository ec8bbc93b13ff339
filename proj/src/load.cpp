#include "pap/load.hpp"

#include <algorithm>

namespace pap {

bool task_covers_point(const Task& task, Time point, Time period) {
  Time offset = mod_period(point - task.start, period);
  return offset > 0 && offset < duration(task, period);
}

bool task_covers_gap_after(const Task& task, Time gap_start, Time period) {
  // The gap right after an event point is inside (a, b) iff the point itself
  // is at a or strictly inside.
  return mod_period(gap_start - task.start, period) < duration(task, period);
}

std::size_t LoadProfile::point_index(Time t) const {
  auto it = std::lower_bound(points.begin(), points.end(), t);
  if (it == points.end() || *it != t) {
    throw internal_error("time " + std::to_string(t) +
                         " is not an event point");
  }
  return static_cast<std::size_t>(it - points.begin());
}

LoadProfile load_profile(const Instance& instance) {
  const Time period = instance.period();
  const auto& tasks = instance.tasks();

  LoadProfile profile;
  profile.points.reserve(2 * tasks.size());
  for (const Task& t : tasks) {
    profile.points.push_back(t.start);
    profile.points.push_back(t.end);
  }
  std::sort(profile.points.begin(), profile.points.end());
  profile.points.erase(
      std::unique(profile.points.begin(), profile.points.end()),
      profile.points.end());

  const std::size_t m = profile.points.size();
  std::vector<std::int64_t> starts_at(m, 0);
  std::vector<std::int64_t> ends_at(m, 0);
  for (const Task& t : tasks) {
    ++starts_at[profile.point_index(t.start)];
    ++ends_at[profile.point_index(t.end)];
  }

  // Seed the sweep with the exact level at the first event point, then walk
  // the circle: a task leaves at its end point and joins on the gap after its
  // start point.
  std::int64_t level = 0;
  for (const Task& t : tasks) {
    if (task_covers_point(t, profile.points[0], period)) ++level;
  }

  profile.point_level.assign(m, 0);
  profile.gap_level.assign(m, 0);
  profile.point_level[0] = level;
  profile.gap_level[0] = level + starts_at[0];
  for (std::size_t k = 1; k < m; ++k) {
    profile.point_level[k] = profile.gap_level[k - 1] - ends_at[k];
    profile.gap_level[k] = profile.point_level[k] + starts_at[k];
  }
  if (profile.gap_level[m - 1] - ends_at[0] != profile.point_level[0]) {
    throw internal_error("load sweep failed to close circularly");
  }
  for (std::size_t k = 0; k < m; ++k) {
    if (profile.point_level[k] < 0 || profile.gap_level[k] < 0) {
      throw internal_error("negative level in load sweep");
    }
  }

  std::int64_t max_point =
      *std::max_element(profile.point_level.begin(), profile.point_level.end());
  std::int64_t max_gap =
      *std::max_element(profile.gap_level.begin(), profile.gap_level.end());
  profile.load = std::max(max_point, max_gap);

  auto witness = std::find(profile.gap_level.begin(), profile.gap_level.end(),
                           profile.load);
  if (witness == profile.gap_level.end()) {
    // Point levels never exceed the adjacent gap levels, so the maximum must
    // show up on a gap.
    throw internal_error("no gap attains the maximum load");
  }
  profile.witness_gap = static_cast<std::size_t>(witness - profile.gap_level.begin());
  return profile;
}

}  // namespace pap
