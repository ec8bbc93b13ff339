#pragma once

#include "pap/assignment.hpp"

#include <string>

namespace pap {

// Plain-text schedule: one line per worker, each walking its cycle's full
// rotation (cycle workers * T time units) from that worker's phase offset,
// listing task occurrences and the transitions between them. Ends with a
// totals line matching the report fields.
std::string render_schedule(const SolveReport& report,
                            const Instance& instance);

}  // namespace pap
