#pragma once

#include "pap/types.hpp"

namespace pap {

// Piecewise-constant circular load profile I(.) over the alternating region
// sequence point[0], gap[0], point[1], gap[1], ..., where gap[k] is the open
// interval (points[k], points[k+1 mod m]). Open task intervals change value
// only at event points, so each region carries a single level. The maximum L
// is always attained on some gap: crossing an event point never raises the
// level above the neighbouring gaps.
struct LoadProfile {
  std::vector<Time> points;               // sorted distinct task start/end times
  std::vector<std::int64_t> point_level;  // active tasks at points[k]
  std::vector<std::int64_t> gap_level;    // active tasks inside gap k
  std::int64_t load = 0;                  // L
  std::size_t witness_gap = 0;            // first gap with gap_level == load

  // Index of an event point; throws internal_error when t is not one.
  std::size_t point_index(Time t) const;
  std::size_t region_count() const { return 2 * points.size(); }
};

// Circular sweep over the 2n events: O(n log n), exact integer arithmetic.
LoadProfile load_profile(const Instance& instance);

// Open-interval coverage tests for a single region.
bool task_covers_point(const Task& task, Time point, Time period);
bool task_covers_gap_after(const Task& task, Time gap_start, Time period);

}  // namespace pap
