#pragma once

#include "pap/types.hpp"

namespace pap {

// Seeded instance families for tests and benchmarks. Output is a pure
// function of the spec.
//
//   uniform               n independent (start, length) draws
//   layered_disconnected  k phase-shifted layers, each a pair of tasks tiling
//                         the period; the idle interval graph has exactly k
//                         weak components and the load is k
//   layered_connected     same layers with the wrapping tasks' end times
//                         rotated one layer onward, bridging all components
//                         while leaving the load profile untouched
enum class Family { uniform, layered_disconnected, layered_connected };

struct GeneratorSpec {
  Family family = Family::uniform;
  std::size_t n = 0;          // uniform only
  Time period = 0;
  std::uint64_t seed = 0;     // uniform only
  std::size_t layers = 0;     // layered families only
};

Instance generate(const GeneratorSpec& spec);

Family parse_family(const std::string& name);
std::string family_name(Family family);

}  // namespace pap
