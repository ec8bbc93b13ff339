#include "pap/render.hpp"

#include <sstream>

namespace pap {

std::string render_schedule(const SolveReport& report,
                            const Instance& instance) {
  const Time period = instance.period();
  CycleDecomposition decomposition = decompose(report.assignment, instance);

  std::ostringstream out;
  std::int64_t worker_label = 1;
  for (std::size_t c = 0; c < decomposition.cycles.size(); ++c) {
    const auto& cycle = decomposition.cycles[c];
    const std::int64_t workers = decomposition.workers[c];
    const Time span = workers * period;

    out << "cycle " << (c + 1) << ": tasks " << cycle.size() << ", span "
        << workers << "T, transition " << decomposition.transition[c] << "\n";

    // Absolute itinerary of one rotation, starting at the cycle's first task.
    struct Leg {
      std::size_t task;
      Time begin;
      Time end;
      Time idle_after;
    };
    std::vector<Leg> legs;
    legs.reserve(cycle.size());
    Time clock = instance.task(cycle.front()).start;
    for (std::size_t step = 0; step < cycle.size(); ++step) {
      std::size_t task = cycle[step];
      Time begin = clock;
      Time end = begin + instance.duration_of(task);
      Time idle = instance.transition(task, report.assignment.next[task]);
      legs.push_back({task, begin, end, idle});
      clock = end + idle;
    }
    if (clock != instance.task(cycle.front()).start + span) {
      throw internal_error("rendered itinerary does not close after its span");
    }

    // Worker w follows the same itinerary shifted w periods; print each
    // worker's view with times reduced to [0, span).
    for (std::int64_t w = 0; w < workers; ++w) {
      out << "  worker " << worker_label++ << ":";
      Time shift = w * period;
      for (const Leg& leg : legs) {
        Time begin = mod_period(leg.begin + shift, span);
        out << " task " << instance.task(leg.task).id << " [" << begin << ".."
            << begin + (leg.end - leg.begin) << ")";
        out << " idle " << leg.idle_after << " ->";
      }
      out << " repeat\n";
    }
  }

  out << "total: period " << period << ", load " << report.load << ", workers "
      << report.workers << ", transition " << report.total_transition
      << ", cycles " << report.cycle_count << ", fair "
      << (report.fair ? "yes" : "no") << "\n";
  return out.str();
}

}  // namespace pap
