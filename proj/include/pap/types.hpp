#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace pap {

// All times live on a circle of integer circumference T (the period).
using Time = std::int64_t;
using TaskId = std::int64_t;

// Invalid caller input: malformed files, bad instances, unknown ids, caps.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A violated internal invariant. Indicates a bug, never a user mistake.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

// Canonical representative of x in [0, period); total for negative x.
inline Time mod_period(Time x, Time period) {
  Time r = x % period;
  return r < 0 ? r + period : r;
}

// One T-periodic open interval (start, end); wraps the origin when end < start.
struct Task {
  TaskId id = 0;
  Time start = 0;
  Time end = 0;
};

// Time a worker spends performing the task, in (0, T).
inline Time duration(const Task& task, Time period) {
  return mod_period(task.end - task.start, period);
}

// Time a worker idles between finishing `from` and starting `to`, in [0, T).
inline Time transition_cost(const Task& from, const Task& to, Time period) {
  return mod_period(to.start - from.end, period);
}

// A period plus the tasks repeating inside it. Immutable after construction;
// the constructor rejects anything violating the model (empty instance,
// endpoints outside [0, T), zero-duration tasks, duplicate ids).
class Instance {
 public:
  Instance(Time period, std::vector<Task> tasks);

  Time period() const { return period_; }
  const std::vector<Task>& tasks() const { return tasks_; }
  std::size_t size() const { return tasks_.size(); }
  const Task& task(std::size_t index) const { return tasks_[index]; }

  // Dense index of the task with the given id; throws input_error if unknown.
  std::size_t index_of(TaskId id) const;
  bool has_task(TaskId id) const { return index_.count(id) != 0; }

  Time duration_of(std::size_t index) const {
    return duration(tasks_[index], period_);
  }
  Time transition(std::size_t from, std::size_t to) const {
    return transition_cost(tasks_[from], tasks_[to], period_);
  }

  // c(I), the summed duration of all tasks.
  Time total_duration() const { return total_duration_; }

 private:
  Time period_ = 1;
  std::vector<Task> tasks_;
  Time total_duration_ = 0;
  std::unordered_map<TaskId, std::size_t> index_;
};

}  // namespace pap
