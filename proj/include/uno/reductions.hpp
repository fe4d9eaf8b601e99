#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "uno/core.hpp"

namespace uno {

// Undirected simple graph: no loops, no parallel edges, 0-based vertices.
struct SimpleGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // normalized i < j, unique

  std::vector<std::vector<int>> adjacency() const;
  std::vector<int> degrees() const;
  void validate() const;
};

// Graph file format: 'graph 1' header, 'v <count>', then 'e <i> <j>' lines,
// 1-based; '#' comments and blank lines ignored.
SimpleGraph parse_graph(const std::string& text);
std::string serialize_graph(const SimpleGraph& g);

bool is_connected(const SimpleGraph& g);

// The Hamiltonian-path reduction assumes a connected non-tree input; the
// construction is total regardless, so this is a lint, not an error.
std::optional<std::string> hp_reduction_lint(const SimpleGraph& g);

// Hamiltonian path -> cooperative UNO-2: hand 1 holds a (i,i) card per
// vertex, hand 2 an (i,j) card per edge; c = b = |V|.
Instance hp_to_uno2(const SimpleGraph& g);

// Equal-hand padding: add |C2|-|C1| cards (n+2,n+2) and one (n+2,n+1) to
// hand 1, one (start,n+1) to hand 2; colors/numbers extend to n+2. The
// padded instance is solvable iff the graph has a Hamiltonian path starting
// (or ending) at `start_vertex`. Requires |C1| <= |C2|; returns the instance
// unchanged when hands are already equal.
Instance pad_equal_hands(const Instance& inst, int start_vertex_1based);

// Hamiltonian path on cubic graphs -> UNO-1: one (vertex, edge) card per
// incidence; edge ids follow sorted-edge order, 1-based. Rejects non-cubic
// input.
std::vector<Card> hpc_to_uno1(const SimpleGraph& g);
Instance hpc_to_uno1_instance(const SimpleGraph& g);

enum class ReductionTag { Thm1, Thm3 };

// Turn a Hamiltonian path of the source graph into the witness sequence the
// corresponding reduction prescribes (vertex/edge interleaving for Thm1,
// node-gadget triangle traversal for Thm3). Path is 0-based vertices.
PlayingSequence map_hp_to_sequence(const SimpleGraph& g,
                                   const std::vector<int>& path,
                                   ReductionTag tag);

// Recover a Hamiltonian path of the source graph from a full feasible
// sequence of the reduced instance; Thm3 first normalizes non-consecutive
// gadget visits by relocating endpoint gadget vertices.
std::vector<int> map_sequence_to_hp(const SimpleGraph& g,
                                    const PlayingSequence& seq,
                                    ReductionTag tag);

}  // namespace uno
