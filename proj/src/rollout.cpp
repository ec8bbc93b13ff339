#include "pap/rollout.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace pap {

namespace {

struct ArcShape {
  std::size_t tail_interval = 0;
  std::size_t head_interval = 0;
  // Copy-label displacement of an occurrence starting in period p: the tail
  // copy is p + tail_shift, the head copy p + head_shift.
  std::int64_t tail_shift = 0;
  std::int64_t head_shift = 0;
};

// Membership and period arithmetic for one task against the periodic idle
// intervals. A point in the wrapped tail of an interval belongs to the copy
// that started one period earlier.
std::vector<ArcShape> arc_shapes(const Instance& instance,
                                 const std::vector<IdleInterval>& intervals) {
  const Time period = instance.period();
  std::vector<ArcShape> shapes(instance.size());
  for (std::size_t i = 0; i < instance.size(); ++i) {
    const Task& task = instance.task(i);
    std::size_t k = locate_idle_interval(intervals, task.start, period);
    std::size_t l = locate_idle_interval(intervals, task.end, period);
    if (k == interval_npos || l == interval_npos) {
      throw internal_error("task " + std::to_string(task.id) +
                           " has an endpoint outside every idle interval");
    }
    ArcShape& shape = shapes[i];
    shape.tail_interval = k;
    shape.head_interval = l;
    shape.tail_shift = task.start < intervals[k].start ? -1 : 0;
    shape.head_shift = (task.end < task.start ? 1 : 0) -
                       (task.end < intervals[l].start ? 1 : 0);
  }
  return shapes;
}

}  // namespace

RolledOutGraph build_rollout(const Instance& instance, std::int64_t periods) {
  if (periods < 1) {
    throw input_error("rollout window must span at least one period");
  }
  const Time period = instance.period();
  LoadProfile profile = load_profile(instance);
  std::vector<IdleInterval> intervals = idle_intervals(instance, profile);
  std::vector<ArcShape> shapes = arc_shapes(instance, intervals);

  RolledOutGraph graph;
  graph.periods = periods;
  graph.interval_count = intervals.size();
  graph.nodes.reserve(intervals.size() * periods);
  for (std::int64_t p = 0; p < periods; ++p) {
    for (std::size_t k = 0; k < intervals.size(); ++k) {
      Time start = intervals[k].start + p * period;
      graph.nodes.push_back(
          {k, p, start, start + idle_length(intervals[k], period)});
    }
  }

  auto in_window = [&](std::int64_t p) { return p >= 0 && p < periods; };
  graph.arcs.reserve(instance.size() * periods);
  for (std::int64_t p = 0; p < periods; ++p) {
    for (std::size_t i = 0; i < instance.size(); ++i) {
      const ArcShape& shape = shapes[i];
      RolledArc arc;
      arc.task = i;
      arc.occurrence = p;
      arc.tail_interval = shape.tail_interval;
      arc.head_interval = shape.head_interval;
      arc.tail_period = p + shape.tail_shift;
      arc.head_period = p + shape.head_shift;
      arc.tail = in_window(arc.tail_period)
                     ? graph.node_index(shape.tail_interval, arc.tail_period)
                     : node_npos;
      arc.head = in_window(arc.head_period)
                     ? graph.node_index(shape.head_interval, arc.head_period)
                     : node_npos;
      arc.dangling = arc.tail == node_npos || arc.head == node_npos;
      graph.arcs.push_back(arc);
    }
  }
  return graph;
}

bool quotient_matches(const RolledOutGraph& rolled,
                      const IdleIntervalGraph& periodic, Time period) {
  const std::size_t K = periodic.nodes.size();
  const std::int64_t r = rolled.periods;
  if (rolled.interval_count != K) return false;
  if (rolled.nodes.size() != K * static_cast<std::size_t>(r)) return false;
  if (rolled.arcs.size() != periodic.arcs.size() * static_cast<std::size_t>(r)) {
    return false;
  }

  for (const RolledNode& node : rolled.nodes) {
    if (node.interval >= K) return false;
    const IdleInterval& base = periodic.nodes[node.interval];
    if (node.start != base.start + node.period * period) return false;
    if (node.end - node.start != idle_length(base, period)) return false;
  }

  // Each periodic arc must appear exactly once per window period.
  std::map<std::pair<std::size_t, std::int64_t>, std::size_t> seen;
  for (const RolledArc& arc : rolled.arcs) {
    if (arc.task >= periodic.arcs.size()) return false;
    const auto& base = periodic.arcs[arc.task];
    if (base.task != arc.task) return false;
    if (arc.tail_interval != base.tail || arc.head_interval != base.head) {
      return false;
    }
    ++seen[{arc.task, arc.occurrence}];
  }
  for (std::size_t task = 0; task < periodic.arcs.size(); ++task) {
    for (std::int64_t p = 0; p < r; ++p) {
      auto it = seen.find({task, p});
      if (it == seen.end() || it->second != 1) return false;
    }
  }
  return true;
}

namespace {

Time absolute_copy_start(const Instance& instance,
                         const std::vector<IdleInterval>& intervals,
                         std::size_t interval, std::int64_t copy_period) {
  return intervals[interval].start + copy_period * instance.period();
}

}  // namespace

bool has_backward_arc(const RolledOutGraph& rolled, const Instance& instance) {
  std::vector<IdleInterval> intervals = idle_intervals(instance);
  for (const RolledArc& arc : rolled.arcs) {
    Time tail_start =
        absolute_copy_start(instance, intervals, arc.tail_interval, arc.tail_period);
    Time head_start =
        absolute_copy_start(instance, intervals, arc.head_interval, arc.head_period);
    if (head_start < tail_start) return true;
  }
  return false;
}

bool is_acyclic(const RolledOutGraph& rolled, const Instance& instance) {
  if (has_backward_arc(rolled, instance)) return false;
  // Forward arcs strictly increase the copy start time except between a node
  // and itself, so self loops are the only possible cycles.
  for (const RolledArc& arc : rolled.arcs) {
    if (arc.tail_interval == arc.head_interval &&
        arc.tail_period == arc.head_period) {
      return false;
    }
  }
  return true;
}

bool check_connectivity_equivalence(const Instance& instance,
                                    std::int64_t periods) {
  if (periods < 2) {
    throw input_error("connectivity probe needs a window of at least two periods");
  }
  LoadProfile profile = load_profile(instance);
  IdleIntervalGraph periodic = idle_interval_graph(instance, profile);

  const std::size_t K = periodic.nodes.size();
  std::vector<ArcShape> shapes = arc_shapes(instance, periodic.nodes);

  // Component label per periodic interval.
  std::vector<std::size_t> periodic_comp(K);
  std::iota(periodic_comp.begin(), periodic_comp.end(), 0);
  auto periodic_find = [&](std::size_t x) {
    while (periodic_comp[x] != x) x = periodic_comp[x] = periodic_comp[periodic_comp[x]];
    return x;
  };
  for (const auto& arc : periodic.arcs) {
    std::size_t a = periodic_find(arc.tail);
    std::size_t b = periodic_find(arc.head);
    if (a != b) periodic_comp[a] = b;
  }

  auto in_window = [&](std::int64_t p) { return p >= 0 && p < periods; };
  auto node_id = [&](std::size_t k, std::int64_t p) {
    return static_cast<std::size_t>(p) * K + k;
  };

  // Occurrences one period beyond both window edges cover every arc incident
  // to a window node.
  struct Edge {
    std::size_t a, b;
  };
  std::vector<Edge> edges;
  std::vector<char> boundary(K * static_cast<std::size_t>(periods), 0);
  for (std::int64_t p = -1; p <= periods; ++p) {
    for (const ArcShape& shape : shapes) {
      std::int64_t tp = p + shape.tail_shift;
      std::int64_t hp = p + shape.head_shift;
      bool tin = in_window(tp);
      bool hin = in_window(hp);
      if (tin && hin) {
        edges.push_back({node_id(shape.tail_interval, tp),
                         node_id(shape.head_interval, hp)});
      } else if (tin) {
        boundary[node_id(shape.tail_interval, tp)] = 1;
      } else if (hin) {
        boundary[node_id(shape.head_interval, hp)] = 1;
      }
    }
  }

  // Interior nodes have their full neighbourhoods visible; they are the only
  // sound witnesses at finite scale. Agreement means the window partitions
  // them exactly as the periodic components do: interior copies of one
  // component stay connected inside the window (paths may pass through
  // boundary nodes), and copies of different components never meet. A
  // component with no interior copy is invisible at this window and is
  // compared vacuously, matching the single-task behaviour at r = 2.
  std::vector<std::size_t> parent(boundary.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const Edge& edge : edges) {
    std::size_t ra = find(edge.a);
    std::size_t rb = find(edge.b);
    if (ra != rb) parent[ra] = rb;
  }

  std::map<std::size_t, std::size_t> root_of_comp;
  std::map<std::size_t, std::size_t> comp_of_root;
  for (std::size_t node = 0; node < boundary.size(); ++node) {
    if (boundary[node]) continue;
    std::size_t comp = periodic_find(node % K);
    std::size_t root = find(node);
    auto [by_comp, comp_inserted] = root_of_comp.emplace(comp, root);
    if (!comp_inserted && by_comp->second != root) {
      return false;  // one periodic component split across window components
    }
    auto [by_root, root_inserted] = comp_of_root.emplace(root, comp);
    if (!root_inserted && by_root->second != comp) {
      return false;  // two periodic components merged inside the window
    }
  }
  return true;
}

std::int64_t balanced_min_workers(const Instance& instance) {
  LoadProfile profile = load_profile(instance);
  IdleIntervalGraph graph = idle_interval_graph(instance, profile);
  return weak_component_count(graph) == 1 ? profile.load : profile.load + 1;
}

}  // namespace pap
