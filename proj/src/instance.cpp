#include "pap/types.hpp"

namespace pap {

Instance::Instance(Time period, std::vector<Task> tasks)
    : period_(period), tasks_(std::move(tasks)) {
  if (period_ < 1) {
    throw input_error("period must be a positive integer, got " +
                      std::to_string(period_));
  }
  if (tasks_.empty()) {
    throw input_error("instance must contain at least one task");
  }
  index_.reserve(tasks_.size());
  for (std::size_t i = 0; i < tasks_.size(); ++i) {
    const Task& t = tasks_[i];
    const std::string where = "task " + std::to_string(t.id);
    if (t.id < 0) {
      throw input_error(where + ": id must be non-negative");
    }
    if (t.start < 0 || t.start >= period_) {
      throw input_error(where + ": start " + std::to_string(t.start) +
                        " outside [0, " + std::to_string(period_) + ")");
    }
    if (t.end < 0 || t.end >= period_) {
      throw input_error(where + ": end " + std::to_string(t.end) +
                        " outside [0, " + std::to_string(period_) + ")");
    }
    if (t.start == t.end) {
      throw input_error(where + ": start equals end; tasks must have positive "
                        "duration shorter than the period");
    }
    if (!index_.emplace(t.id, i).second) {
      throw input_error(where + ": duplicate id");
    }
    total_duration_ += duration(t, period_);
  }
}

std::size_t Instance::index_of(TaskId id) const {
  auto it = index_.find(id);
  if (it == index_.end()) {
    throw input_error("unknown task id " + std::to_string(id));
  }
  return it->second;
}

}  // namespace pap
