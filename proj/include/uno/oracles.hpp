#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "uno/core.hpp"

namespace uno {

// Caps for the exponential-time oracles.
struct OracleBudget {
  int max_vertices = 24;
  int max_cards = 12;
  uint64_t max_nodes = 500'000'000;
};

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exhaustive Hamiltonian path search over plain adjacency lists. Returns a
// path (honoring fixed_start when given) or nullopt after trying everything.
std::optional<std::vector<int>> hamiltonian_path_bruteforce(
    int n, const std::vector<std::vector<int>>& adj,
    std::optional<int> fixed_start = std::nullopt,
    const OracleBudget& budget = {});

// Full game-tree evaluation of an instance under the core move rules.
// Uncoop2: winner = last player able to play. Coop2/Uno1: player1_success
// iff some cooperative line empties hand 1 first. The line is the
// lexicographically first optimal play under occurrence order.
struct MinimaxVerdict {
  bool player1_success = false;
  int winner = 0;  // Uncoop2 only
  PlayingSequence line;
};

MinimaxVerdict uno_minimax(const Instance& inst, GameMode mode,
                           const OracleBudget& budget = {});

}  // namespace uno
