#pragma once

#include "pap/assignment.hpp"

#include <string>

namespace pap {

// Instance files are JSON objects with "period" and "tasks" keys; tasks carry
// id, start and end. Parsing reports the offending task and field.
Instance parse_instance(const std::string& text);
std::string emit_instance(const Instance& instance);

Instance load_instance_file(const std::string& path);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// FNV-1a over the canonical serialization; guards solution files against
// verification with the wrong instance.
std::string instance_digest(const Instance& instance);

struct SolutionFile {
  std::string digest;
  std::int64_t load = 0;
  std::int64_t workers = 0;
  std::int64_t cycle_count = 0;
  Time total_transition = 0;
  bool fair = false;
  bool fairness_feasible_at_L = false;
  struct ArcRecord {
    TaskId from = 0;
    TaskId to = 0;
    Time cost = 0;
  };
  std::vector<ArcRecord> successors;       // sorted by from id
  std::vector<std::vector<TaskId>> cycles;  // each rotated to its lowest id
};

SolutionFile to_solution_file(const SolveReport& report,
                              const Instance& instance);
std::string emit_solution(const SolutionFile& solution);
SolutionFile parse_solution(const std::string& text);

// Re-derives every numeric field from the instance and returns the list of
// discrepancies; empty means the file verifies.
std::vector<std::string> check_solution(const Instance& instance,
                                        const SolutionFile& solution);

}  // namespace pap
