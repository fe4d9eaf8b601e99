#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "uno/core.hpp"

namespace uno {

struct VertexLabel {
  Card card;
  int player = 1;      // 1-based
  int occurrence = 0;  // index within the player's hand (or edge index)
  friend bool operator==(const VertexLabel&, const VertexLabel&) = default;
};

// Undirected graph over card occurrences. Adjacency lists are sorted and
// loop-free; every edge appears in both endpoint lists.
struct UnoGraph {
  std::vector<VertexLabel> labels;
  std::vector<std::vector<int>> adj;

  int vertex_count() const { return static_cast<int>(adj.size()); }
  std::size_t edge_count() const;
  bool has_edge(int u, int v) const;
};

// Plain graph constructor for tests and geography suites; labels are synthetic.
UnoGraph make_graph(int n, const std::vector<std::pair<int, int>>& edges);

// Vertex per card occurrence, edge per matching pair. No self-loops;
// duplicate cards are distinct vertices joined by an edge.
UnoGraph build_uno1_graph(const std::vector<Card>& cards);

// Vertices are hand 1's occurrences then hand 2's; edges only between
// different hands (the hand partition is a bipartition). Requires p = 2.
UnoGraph build_uno2_graph(const Instance& inst);

// Bipartite multigraph: colors present on the left, numbers present on the
// right, one (parallel-allowed) edge per card occurrence.
struct Bigraph {
  std::vector<int> left_names;   // distinct colors, ascending
  std::vector<int> right_names;  // distinct numbers, ascending
  std::vector<std::pair<int, int>> edges;  // (left index, right index) per card
};

Bigraph incidence_bigraph(const std::vector<Card>& cards);

// Vertex per edge of g, adjacent iff the edges share an endpoint (parallel
// edges are adjacent). Labels carry the (color, number) of each edge.
UnoGraph line_graph(const Bigraph& g);

struct BipartitionCheck {
  bool bipartite = false;
  std::vector<int> side;       // 0/1 per vertex when bipartite
  std::vector<int> odd_cycle;  // odd-length vertex cycle when not
};

BipartitionCheck is_bipartite(const UnoGraph& g);

// DOT text with deterministic vertex names p<i>_c<x>n<y>_<k> (k = occurrence
// index among identical (player, card) labels); edges emitted once in
// lexicographic name order.
std::string export_dot(const UnoGraph& g);

// Canonical form for graphs up to 64 vertices: two graphs are isomorphic iff
// their canonical forms are equal. Color-refinement plus individualization;
// throws std::invalid_argument beyond the size cap.
std::vector<uint64_t> canonical_form(const UnoGraph& g);
bool isomorphic(const UnoGraph& a, const UnoGraph& b);

}  // namespace uno
