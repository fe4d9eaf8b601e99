#pragma once

#include <optional>
#include <vector>

#include "uno/core.hpp"
#include "uno/graph.hpp"
#include "uno/oracles.hpp"

namespace uno {

struct Matching {
  std::vector<int> mate;  // -1 = unmatched
  int size = 0;
};

// Maximum-cardinality matching via augmenting paths with alternating-BFS
// layering. Rejects non-bipartite input.
Matching max_matching(const UnoGraph& g);

// Vertices missed by at least one maximum matching: unmatched in m, or
// reachable from an unmatched vertex by an even-length alternating path.
// Precondition: m is maximum.
std::vector<bool> avoidable_vertices(const UnoGraph& g, const Matching& m);

// Baseline definition for cross-checking: v is avoidable iff deleting it
// leaves the matching number unchanged.
std::vector<bool> avoidable_vertices_by_deletion(const UnoGraph& g);

struct UvgVerdict {
  bool mover_wins = false;
  std::optional<int> winning_move;  // a neighbor that wins, when mover_wins
};

// Undirected vertex geography: token on `start`, each move slides the token
// to a neighbor and deletes the vertex it left; first player unable to move
// loses. The mover wins iff `start` is in every maximum matching.
UvgVerdict solve_uvg(const UnoGraph& g, int start);

// Exhaustive game-tree oracle for the same game (at most 20 vertices).
UvgVerdict uvg_minimax(const UnoGraph& g, int start, const OracleBudget& budget = {});

struct UncoopVerdict {
  int winner = 0;                    // 1 or 2
  std::optional<Card> opening_move;  // set when player 1 wins
  std::optional<int> opening_vertex;
  PlayingSequence principal_line;   // engine-vs-engine playout
};

// Uncooperative UNO-2 in polynomial time: player 1 wins iff some card of
// hand 1 is avoidable in the UNO-2 graph. Empty hand 1 loses immediately.
UncoopVerdict solve_uno2_uncoop(const Instance& inst);

// Equivalent formulation used for cross-checks: a virtual start vertex
// adjacent to all of hand 1; player 1 wins iff the mover wins from it.
bool uno2_uncoop_by_virtual_start(const Instance& inst);

// Engine move with the token on `token` and `removed` vertices gone. When
// winning, returns a neighbor whose removal-successor position loses for the
// opponent; when losing, the highest-degree legal neighbor; nullopt when
// stuck.
std::optional<int> best_move(const UnoGraph& g, const std::vector<bool>& removed,
                             int token);

}  // namespace uno
