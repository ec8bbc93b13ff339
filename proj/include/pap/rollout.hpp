#pragma once

#include "pap/fpap_solver.hpp"

namespace pap {

// Finite window of the rolled-out idle interval graph: every periodic idle
// interval is replicated once per period in [0, r*T), and every task
// occurrence starting in the window contributes one arc. A wrapping entity
// belongs to the period of its start, which makes the quotient map a
// bijection per period. Arcs referencing a copy outside the window are
// marked dangling.
struct RolledNode {
  std::size_t interval = 0;     // periodic idle interval index
  std::int64_t period = 0;      // copy index in [0, r)
  Time start = 0;               // absolute: interval.start + period * T
  Time end = 0;                 // absolute: start + interval length
};

struct RolledArc {
  std::size_t task = 0;          // dense task index
  std::int64_t occurrence = 0;   // period of the occurrence's start, in [0, r)
  std::size_t tail_interval = 0;
  std::size_t head_interval = 0;
  std::int64_t tail_period = 0;  // copy label; may fall outside [0, r)
  std::int64_t head_period = 0;
  std::size_t tail = 0;          // node index, or node_npos when outside
  std::size_t head = 0;
  bool dangling = false;
};

inline constexpr std::size_t node_npos = static_cast<std::size_t>(-1);

struct RolledOutGraph {
  std::int64_t periods = 0;          // r
  std::size_t interval_count = 0;    // periodic idle interval count K
  std::vector<RolledNode> nodes;     // node (k, p) at index p*K + k
  std::vector<RolledArc> arcs;       // n*r arcs

  std::size_t node_index(std::size_t interval, std::int64_t period) const {
    return static_cast<std::size_t>(period) * interval_count + interval;
  }
};

RolledOutGraph build_rollout(const Instance& instance, std::int64_t periods);

// True when quotienting nodes and arcs by the period map reproduces the
// periodic idle interval graph exactly, each node and arc appearing once per
// window period.
bool quotient_matches(const RolledOutGraph& rolled,
                      const IdleIntervalGraph& periodic, Time period);

// Every arc moves forward in time; any directed cycle is therefore a self
// loop, which arises exactly when a task starts and ends inside the same
// idle interval copy.
bool has_backward_arc(const RolledOutGraph& rolled, const Instance& instance);
bool is_acyclic(const RolledOutGraph& rolled, const Instance& instance);

// Finite-scale probe of the equivalence between rolled-out and periodic
// connectivity. Interior nodes (those whose full in/out neighbourhoods lie
// inside the window) are the only sound witnesses a finite window offers;
// the probe succeeds iff the window's weak components partition them exactly
// as the periodic components do. Periodic components with no interior copy
// at this window are compared vacuously, consistent with the single-task
// window at r = 2, which has no interior at all. Requires r >= 2.
bool check_connectivity_equivalence(const Instance& instance,
                                    std::int64_t periods);

// L when the periodic idle interval graph is weakly connected, else L+1;
// equals the fair periodic optimum.
std::int64_t balanced_min_workers(const Instance& instance);

}  // namespace pap
