#include "pap/io.hpp"

#include "pap/fpap_solver.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace pap {

namespace {

using ordered_json = nlohmann::ordered_json;

std::int64_t require_integer(const ordered_json& object, const char* field,
                             const std::string& where) {
  auto it = object.find(field);
  if (it == object.end()) {
    throw input_error(where + ": missing field \"" + field + "\"");
  }
  if (!it->is_number_integer()) {
    throw input_error(where + ": field \"" + field + "\" must be an integer");
  }
  return it->get<std::int64_t>();
}

ordered_json parse_json(const std::string& text, const char* what) {
  try {
    return ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw input_error(std::string(what) + ": " + e.what());
  }
}

}  // namespace

Instance parse_instance(const std::string& text) {
  ordered_json j = parse_json(text, "instance parse error");
  if (!j.is_object()) {
    throw input_error("instance file: top level must be an object");
  }
  Time period = require_integer(j, "period", "instance file");
  auto tasks_it = j.find("tasks");
  if (tasks_it == j.end() || !tasks_it->is_array()) {
    throw input_error("instance file: missing \"tasks\" array");
  }
  std::vector<Task> tasks;
  tasks.reserve(tasks_it->size());
  std::size_t position = 0;
  for (const auto& entry : *tasks_it) {
    const std::string where = "task entry " + std::to_string(position++);
    if (!entry.is_object()) {
      throw input_error(where + ": must be an object");
    }
    Task task;
    task.id = require_integer(entry, "id", where);
    task.start = require_integer(entry, "start", where);
    task.end = require_integer(entry, "end", where);
    tasks.push_back(task);
  }
  return Instance(period, std::move(tasks));
}

std::string emit_instance(const Instance& instance) {
  ordered_json j;
  j["period"] = instance.period();
  j["tasks"] = ordered_json::array();
  for (const Task& task : instance.tasks()) {
    ordered_json entry;
    entry["id"] = task.id;
    entry["start"] = task.start;
    entry["end"] = task.end;
    j["tasks"].push_back(entry);
  }
  return j.dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw input_error("cannot open file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw input_error("cannot write file: " + path);
  }
  out << content;
}

Instance load_instance_file(const std::string& path) {
  return parse_instance(read_text_file(path));
}

std::string instance_digest(const Instance& instance) {
  std::string canonical = std::to_string(instance.period());
  for (const Task& task : instance.tasks()) {
    canonical += '|';
    canonical += std::to_string(task.id);
    canonical += ':';
    canonical += std::to_string(task.start);
    canonical += ':';
    canonical += std::to_string(task.end);
  }
  std::uint64_t hash = 1469598103934665603ULL;
  for (unsigned char c : canonical) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  char out[17];
  std::snprintf(out, sizeof(out), "%016llx",
                static_cast<unsigned long long>(hash));
  return std::string(out);
}

SolutionFile to_solution_file(const SolveReport& report,
                              const Instance& instance) {
  CycleDecomposition decomposition = decompose(report.assignment, instance);

  SolutionFile solution;
  solution.digest = instance_digest(instance);
  solution.load = report.load;
  solution.workers = report.workers;
  solution.cycle_count = static_cast<std::int64_t>(report.cycle_count);
  solution.total_transition = report.total_transition;
  solution.fair = report.fair;
  solution.fairness_feasible_at_L = is_fair_feasible_at_L(instance);

  for (std::size_t i = 0; i < instance.size(); ++i) {
    std::size_t j = report.assignment.next[i];
    solution.successors.push_back({instance.task(i).id, instance.task(j).id,
                                   instance.transition(i, j)});
  }
  std::sort(solution.successors.begin(), solution.successors.end(),
            [](const auto& a, const auto& b) { return a.from < b.from; });

  for (const auto& cycle : decomposition.cycles) {
    std::vector<TaskId> ids;
    ids.reserve(cycle.size());
    for (std::size_t index : cycle) ids.push_back(instance.task(index).id);
    auto lowest = std::min_element(ids.begin(), ids.end());
    std::rotate(ids.begin(), lowest, ids.end());
    solution.cycles.push_back(std::move(ids));
  }
  std::sort(solution.cycles.begin(), solution.cycles.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return solution;
}

std::string emit_solution(const SolutionFile& solution) {
  ordered_json j;
  j["instance_digest"] = solution.digest;
  j["load"] = solution.load;
  j["workers"] = solution.workers;
  j["total_transition"] = solution.total_transition;
  j["cycle_count"] = solution.cycle_count;
  j["fair"] = solution.fair;
  j["fairness_feasible_at_L"] = solution.fairness_feasible_at_L;
  j["successors"] = ordered_json::array();
  for (const auto& arc : solution.successors) {
    ordered_json entry;
    entry["from"] = arc.from;
    entry["to"] = arc.to;
    entry["cost"] = arc.cost;
    j["successors"].push_back(entry);
  }
  j["cycles"] = solution.cycles;
  return j.dump(2) + "\n";
}

SolutionFile parse_solution(const std::string& text) {
  ordered_json j = parse_json(text, "solution parse error");
  if (!j.is_object()) {
    throw input_error("solution file: top level must be an object");
  }
  SolutionFile solution;
  auto digest_it = j.find("instance_digest");
  if (digest_it == j.end() || !digest_it->is_string()) {
    throw input_error("solution file: missing \"instance_digest\" string");
  }
  solution.digest = digest_it->get<std::string>();
  solution.load = require_integer(j, "load", "solution file");
  solution.workers = require_integer(j, "workers", "solution file");
  solution.total_transition =
      require_integer(j, "total_transition", "solution file");
  solution.cycle_count = require_integer(j, "cycle_count", "solution file");
  auto flag = [&](const char* field) {
    auto it = j.find(field);
    if (it == j.end() || !it->is_boolean()) {
      throw input_error(std::string("solution file: missing boolean \"") +
                        field + "\"");
    }
    return it->get<bool>();
  };
  solution.fair = flag("fair");
  solution.fairness_feasible_at_L = flag("fairness_feasible_at_L");

  auto successors_it = j.find("successors");
  if (successors_it == j.end() || !successors_it->is_array()) {
    throw input_error("solution file: missing \"successors\" array");
  }
  std::size_t position = 0;
  for (const auto& entry : *successors_it) {
    const std::string where = "successor entry " + std::to_string(position++);
    if (!entry.is_object()) {
      throw input_error(where + ": must be an object");
    }
    SolutionFile::ArcRecord arc;
    arc.from = require_integer(entry, "from", where);
    arc.to = require_integer(entry, "to", where);
    arc.cost = require_integer(entry, "cost", where);
    solution.successors.push_back(arc);
  }

  auto cycles_it = j.find("cycles");
  if (cycles_it == j.end() || !cycles_it->is_array()) {
    throw input_error("solution file: missing \"cycles\" array");
  }
  for (const auto& cycle : *cycles_it) {
    if (!cycle.is_array()) {
      throw input_error("solution file: cycles must be arrays of task ids");
    }
    std::vector<TaskId> ids;
    for (const auto& id : cycle) {
      if (!id.is_number_integer()) {
        throw input_error("solution file: cycle entries must be integers");
      }
      ids.push_back(id.get<TaskId>());
    }
    solution.cycles.push_back(std::move(ids));
  }
  return solution;
}

std::vector<std::string> check_solution(const Instance& instance,
                                        const SolutionFile& solution) {
  std::vector<std::string> problems;
  auto complain = [&](const std::string& message) {
    problems.push_back(message);
  };

  if (solution.digest != instance_digest(instance)) {
    complain("instance digest mismatch: solution belongs to a different instance");
    return problems;
  }
  if (solution.successors.size() != instance.size()) {
    complain("successor list covers " +
             std::to_string(solution.successors.size()) + " tasks, expected " +
             std::to_string(instance.size()));
    return problems;
  }

  Assignment assignment;
  assignment.next.assign(instance.size(), 0);
  std::vector<char> has_arc(instance.size(), 0);
  for (const auto& arc : solution.successors) {
    if (!instance.has_task(arc.from) || !instance.has_task(arc.to)) {
      complain("successor arc references unknown task id");
      return problems;
    }
    std::size_t from = instance.index_of(arc.from);
    if (has_arc[from]) {
      complain("task " + std::to_string(arc.from) + " has two outgoing arcs");
      return problems;
    }
    has_arc[from] = 1;
    assignment.next[from] = instance.index_of(arc.to);
  }
  try {
    validate_permutation(assignment, instance.size());
  } catch (const input_error& e) {
    complain(e.what());
    return problems;
  }

  for (const auto& arc : solution.successors) {
    Time cost = instance.transition(instance.index_of(arc.from),
                                    instance.index_of(arc.to));
    if (cost != arc.cost) {
      complain("arc " + std::to_string(arc.from) + " -> " +
               std::to_string(arc.to) + ": cost " + std::to_string(arc.cost) +
               " should be " + std::to_string(cost));
    }
  }

  SolveReport recomputed = make_report(assignment, instance);
  SolutionFile expected = to_solution_file(recomputed, instance);
  if (solution.total_transition != expected.total_transition) {
    complain("total_transition " + std::to_string(solution.total_transition) +
             " should be " + std::to_string(expected.total_transition));
  }
  if (solution.workers != expected.workers) {
    complain("workers " + std::to_string(solution.workers) + " should be " +
             std::to_string(expected.workers));
  }
  if (solution.cycle_count != expected.cycle_count) {
    complain("cycle_count " + std::to_string(solution.cycle_count) +
             " should be " + std::to_string(expected.cycle_count));
  }
  if (solution.fair != expected.fair) {
    complain("fair flag should be " + std::string(expected.fair ? "true" : "false"));
  }
  if (solution.load != expected.load) {
    complain("load " + std::to_string(solution.load) + " should be " +
             std::to_string(expected.load));
  }
  if (solution.fairness_feasible_at_L != expected.fairness_feasible_at_L) {
    complain("fairness_feasible_at_L flag should be " +
             std::string(expected.fairness_feasible_at_L ? "true" : "false"));
  }
  if (solution.cycles != expected.cycles) {
    complain("cycle listing does not match the successor map");
  }
  return problems;
}

}  // namespace pap
