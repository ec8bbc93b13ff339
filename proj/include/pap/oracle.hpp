#pragma once

#include "pap/assignment.hpp"

namespace pap {

// Brute-force reference solvers for testing and the `oracle` CLI verb. They
// share no solver logic with the fast path: costs, cycles and loads are all
// recomputed with independent arithmetic.
struct OracleCaps {
  std::size_t pap = 64;             // cubic assignment-problem method
  std::size_t pap_crosscheck = 8;   // exhaustive permutation cross-check
  std::size_t fpap = 15;            // Held-Karp subset dynamic program
};

// Exact minimum-cost successor permutation via an O(n^3) assignment-problem
// solver; instances small enough are additionally cross-checked against
// exhaustive permutation enumeration. Throws input_error beyond the cap.
SolveReport pap_oracle(const Instance& instance, const OracleCaps& caps = {});

// Minimum transition cost over all successor permutations by enumerating
// every permutation. Exponential; refuses instances beyond the cap.
Time pap_bruteforce_cost(const Instance& instance, std::size_t cap = 8);

// Exact minimum-cost Hamiltonian cycle by Held-Karp dynamic programming.
SolveReport fpap_oracle(const Instance& instance, const OracleCaps& caps = {});

// O(n^2) recomputation of the region levels by testing every task against
// every region; must agree with load_profile everywhere.
LoadProfile load_oracle(const Instance& instance);

}  // namespace pap
