#include "pap/fpap_solver.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <tuple>
#include <unordered_set>

namespace pap {

namespace {

// Region index helpers: region r = 2k is points[k], r = 2k+1 the gap after it.
std::int64_t region_level(const LoadProfile& profile, std::size_t region) {
  return region % 2 == 0 ? profile.point_level[region / 2]
                         : profile.gap_level[region / 2];
}

struct IdleScan {
  std::vector<IdleInterval> intervals;          // sorted by start time
  std::vector<std::size_t> interval_of_point;   // point index -> interval or npos
};

IdleScan scan_idle_intervals(const Instance& instance,
                             const LoadProfile& profile) {
  const std::size_t m = profile.points.size();
  const std::size_t regions = 2 * m;

  // The sweep origin must sit at full load; the witness gap qualifies.
  const std::size_t anchor = 2 * profile.witness_gap + 1;
  if (region_level(profile, anchor) != profile.load) {
    throw internal_error("witness gap does not attain the load");
  }

  struct Run {
    std::size_t first_region;
    std::size_t last_region;
  };
  std::vector<Run> runs;
  bool open = false;
  for (std::size_t step = 1; step <= regions; ++step) {
    std::size_t r = (anchor + step) % regions;
    bool below = region_level(profile, r) < profile.load;
    if (below && !open) {
      runs.push_back({r, r});
      open = true;
    } else if (below) {
      runs.back().last_region = r;
    } else {
      open = false;
    }
  }
  if (runs.empty()) {
    // Impossible: every task start point sits strictly below the load.
    throw internal_error("load never dips below its maximum");
  }
  for (const Run& run : runs) {
    // A gap bounding a sub-load point is itself sub-load only if its bounding
    // points are, so maximal runs open and close on event points.
    if (run.first_region % 2 != 0 || run.last_region % 2 != 0) {
      throw internal_error("idle run does not close on event points");
    }
  }
  std::sort(runs.begin(), runs.end(), [&](const Run& a, const Run& b) {
    return profile.points[a.first_region / 2] < profile.points[b.first_region / 2];
  });

  IdleScan scan;
  scan.interval_of_point.assign(m, interval_npos);
  scan.intervals.reserve(runs.size());
  for (std::size_t id = 0; id < runs.size(); ++id) {
    const Run& run = runs[id];
    scan.intervals.push_back({profile.points[run.first_region / 2],
                              profile.points[run.last_region / 2]});
    for (std::size_t r = run.first_region;; r = (r + 2) % regions) {
      scan.interval_of_point[r / 2] = id;
      if (r == run.last_region) break;
    }
  }
  if (scan.intervals.size() > instance.size()) {
    throw internal_error("more idle intervals than tasks");
  }
  return scan;
}

}  // namespace

std::vector<IdleInterval> idle_intervals(const Instance& instance,
                                         const LoadProfile& profile) {
  return scan_idle_intervals(instance, profile).intervals;
}

std::vector<IdleInterval> idle_intervals(const Instance& instance) {
  LoadProfile profile = load_profile(instance);
  return idle_intervals(instance, profile);
}

std::size_t locate_idle_interval(const std::vector<IdleInterval>& intervals,
                                 Time t, Time period) {
  if (intervals.empty()) return interval_npos;
  auto contains = [&](const IdleInterval& interval) {
    return mod_period(t - interval.start, period) <=
           idle_length(interval, period);
  };
  auto it = std::upper_bound(
      intervals.begin(), intervals.end(), t,
      [](Time value, const IdleInterval& interval) { return value < interval.start; });
  if (it != intervals.begin() && contains(*std::prev(it))) {
    return static_cast<std::size_t>(std::prev(it) - intervals.begin());
  }
  // The last interval may wrap past the origin and cover small t.
  if (intervals.back().start > t && contains(intervals.back())) {
    return intervals.size() - 1;
  }
  return interval_npos;
}

IdleIntervalGraph idle_interval_graph(const Instance& instance,
                                      const LoadProfile& profile) {
  IdleScan scan = scan_idle_intervals(instance, profile);

  IdleIntervalGraph graph;
  graph.nodes = std::move(scan.intervals);
  graph.arcs.reserve(instance.size());
  for (std::size_t i = 0; i < instance.size(); ++i) {
    const Task& task = instance.task(i);
    std::size_t tail = scan.interval_of_point[profile.point_index(task.start)];
    std::size_t head = scan.interval_of_point[profile.point_index(task.end)];
    if (tail == interval_npos || head == interval_npos) {
      throw internal_error("task " + std::to_string(task.id) +
                           " has an endpoint outside every idle interval");
    }
    graph.arcs.push_back({i, tail, head});
  }
  return graph;
}

IdleIntervalGraph idle_interval_graph(const Instance& instance) {
  LoadProfile profile = load_profile(instance);
  return idle_interval_graph(instance, profile);
}

std::size_t weak_component_count(const IdleIntervalGraph& graph) {
  std::vector<std::size_t> parent(graph.nodes.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::size_t components = graph.nodes.size();
  for (const auto& arc : graph.arcs) {
    std::size_t a = find(arc.tail);
    std::size_t b = find(arc.head);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components;
}

bool is_fair_feasible_at_L(const Instance& instance) {
  return weak_component_count(idle_interval_graph(instance)) == 1;
}

SolveReport nearest_neighbor(const Instance& instance) {
  TaskId lowest = instance.task(0).id;
  for (const Task& t : instance.tasks()) lowest = std::min(lowest, t.id);
  return nearest_neighbor(instance, lowest);
}

SolveReport nearest_neighbor(const Instance& instance, TaskId start) {
  const std::size_t n = instance.size();
  const std::size_t origin = instance.index_of(start);

  Assignment assignment;
  assignment.next.assign(n, 0);

  // Unvisited tasks keyed by start time: the closest task from end time b is
  // the first start at or after b, wrapping circularly; ties break on id.
  std::set<std::pair<Time, TaskId>> unvisited;
  for (std::size_t i = 0; i < n; ++i) {
    if (i != origin) {
      unvisited.insert({instance.task(i).start, instance.task(i).id});
    }
  }

  std::size_t current = origin;
  while (!unvisited.empty()) {
    Time from = instance.task(current).end;
    auto it = unvisited.lower_bound({from, std::numeric_limits<TaskId>::min()});
    if (it == unvisited.end()) it = unvisited.begin();
    std::size_t next = instance.index_of(it->second);
    assignment.next[current] = next;
    unvisited.erase(it);
    current = next;
  }
  assignment.next[current] = origin;

  SolveReport report = make_report(std::move(assignment), instance);
  if (report.workers > report.load + 1) {
    throw internal_error("nearest neighbor exceeded L+1 workers");
  }
  return report;
}

CycleRegistry::CycleRegistry(const CycleDecomposition& decomposition,
                             std::size_t task_count)
    : parent_(task_count), size_(task_count, 1),
      components_(decomposition.cycles.size()) {
  std::iota(parent_.begin(), parent_.end(), 0);
  for (const auto& cycle : decomposition.cycles) {
    for (std::size_t task : cycle) {
      parent_[task] = cycle.front();
    }
    size_[cycle.front()] = cycle.size();
  }
}

std::size_t CycleRegistry::find(std::size_t task) const {
  std::size_t root = task;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[task] != root) {
    std::size_t up = parent_[task];
    parent_[task] = root;
    task = up;
  }
  return root;
}

bool CycleRegistry::merge(std::size_t a, std::size_t b) {
  std::size_t ra = find(a);
  std::size_t rb = find(b);
  if (ra == rb) return false;
  if (size_[ra] < size_[rb]) std::swap(ra, rb);
  parent_[rb] = ra;
  size_[ra] += size_[rb];
  --components_;
  return true;
}

SolveReport patching(const Instance& instance, PatchingStats* stats) {
  const std::size_t n = instance.size();
  const Time period = instance.period();

  LoadProfile profile = load_profile(instance);
  detail::SsmOutcome efficient = detail::solve_ssm(instance, profile);
  std::vector<std::size_t>& next = efficient.assignment.next;

  CycleDecomposition decomposition = decompose(efficient.assignment, instance);
  const Time efficient_cost =
      std::accumulate(decomposition.transition.begin(),
                      decomposition.transition.end(), Time{0});
  CycleRegistry registry(decomposition, n);
  if (stats != nullptr) {
    *stats = {};
    stats->initial_cycles = decomposition.cycles.size();
  }

  // Work in coordinates linearized at the cut: the efficient assignment has
  // no arc across it, so every arc interval [b, a] satisfies b <= a.
  auto lin = [&](Time t) { return mod_period(t - efficient.origin, period); };

  struct ArcRecord {
    Time b = 0;  // linearized start of the arc interval (task end time)
    Time a = 0;  // linearized end of the arc interval (successor start time)
    std::size_t tail = 0;
  };
  std::vector<ArcRecord> arcs(n);
  for (std::size_t i = 0; i < n; ++i) {
    Time b = lin(instance.task(i).end);
    arcs[i] = {b, b + instance.transition(i, next[i]), i};
  }
  std::sort(arcs.begin(), arcs.end(),
            [&](const ArcRecord& x, const ArcRecord& y) {
              return std::tuple(x.b, x.a, instance.task(x.tail).id) <
                     std::tuple(y.b, y.a, instance.task(y.tail).id);
            });

  // The linearization already rotates the arc order to open at an idle
  // interval start; verify instead of trusting it.
  std::vector<IdleInterval> intervals = idle_intervals(instance, profile);
  std::unordered_set<Time> interval_starts;
  for (const IdleInterval& interval : intervals) {
    interval_starts.insert(lin(interval.start));
  }
  if (interval_starts.count(arcs.front().b) == 0) {
    throw internal_error("first processed arc does not open an idle interval");
  }

  // Patching arc state: the processed arc with the latest end time inside the
  // current idle interval.
  std::size_t patch_tail = arcs.front().tail;
  Time patch_a = arcs.front().a;
  Time max_end_seen = patch_a;

  for (std::size_t m = 1; m < n; ++m) {
    const Time b = arcs[m].b;
    const Time a = arcs[m].a;
    const std::size_t k = arcs[m].tail;

    if (b > patch_a) {
      // Gap after the patching arc: a new idle interval begins here.
      patch_tail = k;
      patch_a = a;
      max_end_seen = a;
      continue;
    }
    max_end_seen = std::max(max_end_seen, a);

    if (registry.find(k) != registry.find(patch_tail)) {
      // Overlapping arcs on disjoint cycles: exchange heads. The overlap
      // [max(b_i, b_k), min(a_j, a_l)] is nonempty because b <= patch_a.
      std::size_t j = next[patch_tail];
      std::size_t l = next[k];
      if (instance.transition(patch_tail, l) + instance.transition(k, j) !=
          instance.transition(patch_tail, j) + instance.transition(k, l)) {
        throw internal_error("endpoint exchange changed the transition cost");
      }
      std::swap(next[patch_tail], next[k]);
      if (!registry.merge(patch_tail, k)) {
        throw internal_error("exchange failed to merge two cycles");
      }
      if (stats != nullptr) ++stats->exchanges;
      if (patch_a > a) {
        // New arc (k, j) ends last; it inherits interval [b, patch_a].
        patch_tail = k;
      } else {
        // New arc (patch_tail, l) ends last (ties keep it as well).
        patch_a = a;
      }
    } else if (a > patch_a) {
      patch_tail = k;
      patch_a = a;
    }
    if (patch_a != max_end_seen) {
      throw internal_error("patching arc lost the maximum end time");
    }
  }

  if (stats != nullptr &&
      stats->initial_cycles - stats->exchanges != registry.cycle_count()) {
    throw internal_error("exchange count does not match merged cycles");
  }

  if (registry.cycle_count() == 1) {
    SolveReport report = make_report(std::move(efficient.assignment), instance);
    if (report.total_transition != efficient_cost) {
      throw internal_error("patching changed the total transition cost");
    }
    if (report.workers != profile.load) {
      throw internal_error("patched fair assignment does not use L workers");
    }
    return report;
  }

  // Cycles remain, so the idle interval graph is disconnected and every fair
  // assignment needs L+1 workers; nearest neighbor attains that exactly.
  if (is_fair_feasible_at_L(instance)) {
    throw internal_error("cycles left unpatched on a connected idle graph");
  }
  if (stats != nullptr) stats->fell_back_to_nearest_neighbor = true;
  SolveReport report = nearest_neighbor(instance);
  if (report.workers != profile.load + 1) {
    throw internal_error("fallback fair assignment does not use L+1 workers");
  }
  return report;
}

PriceOfFairness price_of_fairness(const Instance& instance) {
  SolveReport fair = patching(instance);

  PriceOfFairness result;
  result.load = fair.load;
  result.fair_workers = fair.workers;
  result.delta = fair.workers - fair.load;
  if (result.delta != 0 && result.delta != 1) {
    throw internal_error("price of fairness delta outside {0, 1}");
  }
  if ((result.delta == 0) != is_fair_feasible_at_L(instance)) {
    throw internal_error("fair worker count contradicts graph connectivity");
  }
  std::int64_t g = std::gcd(result.delta, result.load);
  result.ratio_num = result.delta / g;
  result.ratio_den = result.load / g;
  return result;
}

}  // namespace pap
