#include "pap/generator.hpp"

#include <random>

namespace pap {

namespace {

// Bounded draw via modulo: biased by at most 2^-59 for our ranges, and
// deterministic across platforms, unlike std::uniform_int_distribution.
Time draw(std::mt19937_64& rng, Time bound) {
  return static_cast<Time>(rng() % static_cast<std::uint64_t>(bound));
}

Instance generate_uniform(const GeneratorSpec& spec) {
  if (spec.n == 0) {
    throw input_error("uniform family: need at least one task");
  }
  if (spec.period < 2) {
    throw input_error("uniform family: period must be at least 2");
  }
  std::mt19937_64 rng(spec.seed);
  std::vector<Task> tasks;
  tasks.reserve(spec.n);
  for (std::size_t i = 0; i < spec.n; ++i) {
    Time start = draw(rng, spec.period);
    Time length = 1 + draw(rng, spec.period - 1);
    tasks.push_back({static_cast<TaskId>(i + 1), start,
                     mod_period(start + length, spec.period)});
  }
  return Instance(spec.period, std::move(tasks));
}

Instance generate_layered(const GeneratorSpec& spec, bool connected) {
  const std::size_t k = spec.layers;
  if (k == 0) {
    throw input_error("layered family: need at least one layer");
  }
  if (spec.period < static_cast<Time>(2 * k) ||
      spec.period % static_cast<Time>(2 * k) != 0) {
    throw input_error("layered family: period must be a positive multiple of " +
                      std::to_string(2 * k));
  }
  const Time T = spec.period;
  const Time half = T / 2;
  const Time step = T / static_cast<Time>(2 * k);

  // Layer j holds tasks (phase, phase+half) and (phase+half, phase): together
  // they tile the whole circle, so the load is exactly k and the idle
  // intervals degenerate to the 2k phase points.
  std::vector<Task> tasks;
  tasks.reserve(2 * k);
  for (std::size_t j = 0; j < k; ++j) {
    const Time phase = static_cast<Time>(j) * step;
    const TaskId base = static_cast<TaskId>(2 * j);
    tasks.push_back({base + 1, phase, mod_period(phase + half, T)});
    tasks.push_back({base + 2, mod_period(phase + half, T), phase});
  }

  if (connected) {
    // Rotate the wrapping tasks' end times one layer onward. The growths and
    // the single shrink cancel pointwise, so the load profile is unchanged,
    // while the rotated arcs now chain all 2k idle points into one component.
    for (std::size_t j = 0; j < k; ++j) {
      const Time next_phase = static_cast<Time>((j + 1) % k) * step;
      tasks[2 * j + 1].end = next_phase;
    }
  }
  return Instance(T, std::move(tasks));
}

}  // namespace

Instance generate(const GeneratorSpec& spec) {
  switch (spec.family) {
    case Family::uniform:
      return generate_uniform(spec);
    case Family::layered_disconnected:
      return generate_layered(spec, false);
    case Family::layered_connected:
      return generate_layered(spec, true);
  }
  throw input_error("unknown generator family");
}

Family parse_family(const std::string& name) {
  if (name == "uniform") return Family::uniform;
  if (name == "layered-disconnected") return Family::layered_disconnected;
  if (name == "layered-connected") return Family::layered_connected;
  throw input_error("unknown generator family: " + name);
}

std::string family_name(Family family) {
  switch (family) {
    case Family::uniform: return "uniform";
    case Family::layered_disconnected: return "layered-disconnected";
    case Family::layered_connected: return "layered-connected";
  }
  return "unknown";
}

}  // namespace pap
