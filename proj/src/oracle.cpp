#include "pap/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace pap {

namespace {

// The oracles keep their own arithmetic so a shared bug cannot confirm
// itself: nothing here calls the library's cost or cycle helpers.

Time wrap(Time x, Time period) {
  Time r = x % period;
  if (r < 0) r += period;
  return r;
}

std::vector<std::vector<Time>> cost_matrix(const Instance& instance) {
  const std::size_t n = instance.size();
  std::vector<std::vector<Time>> cost(n, std::vector<Time>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      cost[i][j] =
          wrap(instance.task(j).start - instance.task(i).end, instance.period());
    }
  }
  return cost;
}

SolveReport report_from_successors(const Instance& instance,
                                   std::vector<std::size_t> successors,
                                   Time total_cost) {
  const std::size_t n = instance.size();
  const Time period = instance.period();

  Time busy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    busy += wrap(instance.task(i).end - instance.task(i).start, period);
  }

  std::size_t cycles = 0;
  std::vector<char> visited(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (visited[i]) continue;
    ++cycles;
    for (std::size_t cur = i; !visited[cur]; cur = successors[cur]) {
      visited[cur] = 1;
    }
  }

  SolveReport report;
  report.assignment.next = std::move(successors);
  report.total_transition = total_cost;
  if ((busy + total_cost) % period != 0) {
    throw internal_error("oracle accounting: schedule is not period-aligned");
  }
  report.workers = (busy + total_cost) / period;
  report.cycle_count = cycles;
  report.fair = cycles == 1;
  report.load = load_oracle(instance).load;
  return report;
}

// Shortest-augmenting-path assignment solver with potentials, O(n^3).
std::pair<Time, std::vector<std::size_t>> solve_assignment_problem(
    const std::vector<std::vector<Time>>& cost) {
  const int n = static_cast<int>(cost.size());
  const Time kInf = std::numeric_limits<Time>::max() / 4;

  std::vector<Time> u(n + 1, 0), v(n + 1, 0);
  std::vector<int> matched_row(n + 1, 0);  // column -> row (1-based)
  std::vector<int> way(n + 1, 0);

  for (int i = 1; i <= n; ++i) {
    matched_row[0] = i;
    int j0 = 0;
    std::vector<Time> minv(n + 1, kInf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      int i0 = matched_row[j0];
      int j1 = -1;
      Time delta = kInf;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        Time cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[matched_row[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (matched_row[j0] != 0);
    do {
      int j1 = way[j0];
      matched_row[j0] = matched_row[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  std::vector<std::size_t> successor(n, 0);
  Time total = 0;
  for (int j = 1; j <= n; ++j) {
    successor[matched_row[j] - 1] = static_cast<std::size_t>(j - 1);
    total += cost[matched_row[j] - 1][j - 1];
  }
  return {total, successor};
}

}  // namespace

Time pap_bruteforce_cost(const Instance& instance, std::size_t cap) {
  const std::size_t n = instance.size();
  if (n > cap) {
    throw input_error("permutation oracle refuses " + std::to_string(n) +
                      " tasks (cap " + std::to_string(cap) + ")");
  }
  auto cost = cost_matrix(instance);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Time best = std::numeric_limits<Time>::max();
  do {
    Time total = 0;
    for (std::size_t i = 0; i < n; ++i) total += cost[i][perm[i]];
    best = std::min(best, total);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

SolveReport pap_oracle(const Instance& instance, const OracleCaps& caps) {
  const std::size_t n = instance.size();
  if (n > caps.pap) {
    throw input_error("pap oracle refuses " + std::to_string(n) +
                      " tasks (cap " + std::to_string(caps.pap) + ")");
  }
  auto cost = cost_matrix(instance);
  auto [total, successor] = solve_assignment_problem(cost);
  if (n <= caps.pap_crosscheck &&
      total != pap_bruteforce_cost(instance, caps.pap_crosscheck)) {
    throw internal_error(
        "assignment solver disagrees with exhaustive enumeration");
  }
  return report_from_successors(instance, std::move(successor), total);
}

SolveReport fpap_oracle(const Instance& instance, const OracleCaps& caps) {
  const std::size_t n = instance.size();
  if (n > caps.fpap) {
    throw input_error("fpap oracle refuses " + std::to_string(n) +
                      " tasks (cap " + std::to_string(caps.fpap) + ")");
  }
  auto cost = cost_matrix(instance);
  if (n == 1) {
    return report_from_successors(instance, {0}, cost[0][0]);
  }

  const Time kInf = std::numeric_limits<Time>::max() / 4;
  const std::size_t full = std::size_t{1} << n;
  // dp[mask][i]: cheapest path from task 0 through mask, ending at i.
  std::vector<std::vector<Time>> dp(full, std::vector<Time>(n, kInf));
  std::vector<std::vector<std::int16_t>> parent(
      full, std::vector<std::int16_t>(n, -1));
  dp[1][0] = 0;
  for (std::size_t mask = 1; mask < full; ++mask) {
    if (!(mask & 1)) continue;
    for (std::size_t i = 0; i < n; ++i) {
      if (dp[mask][i] == kInf || !(mask & (std::size_t{1} << i))) continue;
      for (std::size_t j = 1; j < n; ++j) {
        if (mask & (std::size_t{1} << j)) continue;
        std::size_t next_mask = mask | (std::size_t{1} << j);
        Time candidate = dp[mask][i] + cost[i][j];
        if (candidate < dp[next_mask][j]) {
          dp[next_mask][j] = candidate;
          parent[next_mask][j] = static_cast<std::int16_t>(i);
        }
      }
    }
  }

  Time best = kInf;
  std::size_t last = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (dp[full - 1][i] == kInf) continue;
    Time candidate = dp[full - 1][i] + cost[i][0];
    if (candidate < best) {
      best = candidate;
      last = i;
    }
  }
  if (best == kInf) {
    throw internal_error("held-karp found no hamiltonian cycle");
  }

  std::vector<std::size_t> successor(n, 0);
  std::size_t mask = full - 1;
  std::size_t cur = last;
  successor[last] = 0;
  while (cur != 0) {
    std::size_t prev = static_cast<std::size_t>(parent[mask][cur]);
    successor[prev] = cur;
    mask &= ~(std::size_t{1} << cur);
    cur = prev;
  }
  return report_from_successors(instance, std::move(successor), best);
}

LoadProfile load_oracle(const Instance& instance) {
  LoadProfile profile;
  for (const Task& t : instance.tasks()) {
    profile.points.push_back(t.start);
    profile.points.push_back(t.end);
  }
  std::sort(profile.points.begin(), profile.points.end());
  profile.points.erase(
      std::unique(profile.points.begin(), profile.points.end()),
      profile.points.end());

  const std::size_t m = profile.points.size();
  profile.point_level.assign(m, 0);
  profile.gap_level.assign(m, 0);

  // Direct case analysis per (task, region) pair, written independently of
  // the sweep: a wrapping task (b < a) is active on (a, T) and [0, b).
  auto active_at_point = [&](const Task& t, Time p) {
    if (t.start < t.end) return t.start < p && p < t.end;
    return p > t.start || p < t.end;
  };
  auto active_on_gap = [&](const Task& t, Time gap_start) {
    if (t.start < t.end) return t.start <= gap_start && gap_start < t.end;
    return gap_start >= t.start || gap_start < t.end;
  };

  for (std::size_t k = 0; k < m; ++k) {
    for (const Task& t : instance.tasks()) {
      if (active_at_point(t, profile.points[k])) ++profile.point_level[k];
      if (active_on_gap(t, profile.points[k])) ++profile.gap_level[k];
    }
  }

  profile.load = 0;
  for (std::size_t k = 0; k < m; ++k) {
    profile.load = std::max({profile.load, profile.point_level[k],
                             profile.gap_level[k]});
  }
  auto witness = std::find(profile.gap_level.begin(), profile.gap_level.end(),
                           profile.load);
  if (witness == profile.gap_level.end()) {
    throw internal_error("load oracle: no gap attains the maximum");
  }
  profile.witness_gap =
      static_cast<std::size_t>(witness - profile.gap_level.begin());
  return profile;
}

}  // namespace pap
