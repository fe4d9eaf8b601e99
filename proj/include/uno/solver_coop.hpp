#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "uno/core.hpp"

namespace uno {

struct SolveOptions {
  bool use_heuristic = true;              // fewest-onward-matches move ordering
  std::size_t memo_budget_bytes = 64u << 20;  // dead-state table cap
  uint64_t node_limit = UINT64_MAX;
};

// Answer plus a witness: when yes, `sequence` is a feasible winning play
// (self-checked against the rules before returning).
struct Certificate {
  bool yes = false;
  std::optional<PlayingSequence> sequence;
  uint64_t nodes_expanded = 0;
};

// Exact backtracking decider for UNO-1: can one player discard every card?
// Equivalent to Hamiltonian path in the UNO-1 graph.
Certificate solve_uno1_exact(const std::vector<Card>& cards,
                             const SolveOptions& opts = {});

// Exact decider for cooperative UNO-2 under the skip rule: both players
// branch, a compelled player must play but chooses the card.
Certificate solve_uno2_coop(const Instance& inst, const SolveOptions& opts = {});

// The search-order heuristic, exposed for tests: playable occurrences of
// `remaining_mask` against `last`, ordered by ascending forward degree
// (number of remaining onward matches), ties by occurrence index. Never
// drops a legal move.
std::vector<int> order_playable_moves(const std::vector<Card>& cards,
                                      uint64_t remaining_mask,
                                      std::optional<int> last);

}  // namespace uno
