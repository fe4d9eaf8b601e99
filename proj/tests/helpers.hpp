#pragma once

// Shared fixtures and random generators for the test suites.

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "uno/core.hpp"
#include "uno/graph.hpp"
#include "uno/oracles.hpp"
#include "uno/reductions.hpp"

namespace testutil {

using Rng = std::mt19937_64;

inline int rand_int(Rng& rng, int lo, int hi) {  // inclusive
  return lo + static_cast<int>(rng() % static_cast<uint64_t>(hi - lo + 1));
}

// The nine-card fixture from the worked single-player example: answer yes.
inline std::vector<uno::Card> example1_cards() {
  return {{1, 3}, {2, 2}, {2, 3}, {2, 3}, {2, 4}, {3, 2}, {3, 4}, {4, 1}, {4, 3}};
}

inline uno::Instance example1_instance() {
  uno::Instance inst;
  inst.players = 1;
  inst.colors = 4;
  inst.numbers = 4;
  inst.hands = {example1_cards()};
  return inst;
}

// The known full discard order for the fixture.
inline std::vector<uno::Card> example1_solution_cards() {
  return {{1, 3}, {2, 3}, {2, 4}, {3, 4}, {3, 2}, {2, 2}, {2, 3}, {4, 3}, {4, 1}};
}

inline std::vector<uno::Card> random_cards(Rng& rng, int n, int colors,
                                           int numbers) {
  std::vector<uno::Card> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i)
    out.push_back({rand_int(rng, 1, colors), rand_int(rng, 1, numbers)});
  return out;
}

inline uno::Instance random_instance2(Rng& rng, int max_hand, int colors,
                                      int numbers) {
  uno::Instance inst;
  inst.players = 2;
  inst.colors = colors;
  inst.numbers = numbers;
  inst.hands.push_back(random_cards(rng, rand_int(rng, 1, max_hand), colors, numbers));
  inst.hands.push_back(random_cards(rng, rand_int(rng, 1, max_hand), colors, numbers));
  return inst;
}

// Random bipartite graph on a+b vertices (sides 0..a-1 and a..a+b-1).
inline uno::UnoGraph random_bipartite_graph(Rng& rng, int max_total) {
  int a = rand_int(rng, 1, max_total - 1);
  int b = rand_int(rng, 1, max_total - a);
  int density = rand_int(rng, 2, 7);  // edge probability density/10
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v)
      if (rand_int(rng, 1, 10) <= density) edges.emplace_back(u, a + v);
  return uno::make_graph(a + b, edges);
}

inline uno::SimpleGraph graph_from_mask(int n, uint64_t mask) {
  uno::SimpleGraph g;
  g.n = n;
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if (mask & (uint64_t{1} << bit)) g.edges.emplace_back(i, j);
  return g;
}

inline int pair_count(int n) { return n * (n - 1) / 2; }

// Every labeled connected non-tree graph on n vertices.
inline std::vector<uno::SimpleGraph> all_connected_nontree_graphs(int n) {
  std::vector<uno::SimpleGraph> out;
  for (uint64_t mask = 0; mask < (uint64_t{1} << pair_count(n)); ++mask) {
    uno::SimpleGraph g = graph_from_mask(n, mask);
    if (static_cast<int>(g.edges.size()) < n) continue;  // tree or worse
    if (!uno::is_connected(g)) continue;
    out.push_back(std::move(g));
  }
  return out;
}

inline uno::SimpleGraph random_connected_nontree(Rng& rng, int n) {
  for (;;) {
    int m = rand_int(rng, n, std::min(pair_count(n), n + rand_int(rng, 0, n)));
    std::set<std::pair<int, int>> edges;
    // Random spanning tree first, then extra edges.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    for (int i = 1; i < n; ++i) {
      int j = rand_int(rng, 0, i - 1);
      int a = order[i], b = order[j];
      edges.insert({std::min(a, b), std::max(a, b)});
    }
    while (static_cast<int>(edges.size()) < m) {
      int a = rand_int(rng, 0, n - 1), b = rand_int(rng, 0, n - 1);
      if (a == b) continue;
      edges.insert({std::min(a, b), std::max(a, b)});
    }
    uno::SimpleGraph g;
    g.n = n;
    g.edges.assign(edges.begin(), edges.end());
    if (static_cast<int>(g.edges.size()) >= n) return g;
  }
}

// Random simple cubic graph via the pairing model; n must be even and >= 4.
inline uno::SimpleGraph random_cubic(Rng& rng, int n) {
  for (;;) {
    std::vector<int> stubs;
    for (int v = 0; v < n; ++v)
      for (int k = 0; k < 3; ++k) stubs.push_back(v);
    std::shuffle(stubs.begin(), stubs.end(), rng);
    std::set<std::pair<int, int>> edges;
    bool ok = true;
    for (size_t i = 0; i + 1 < stubs.size() && ok; i += 2) {
      int a = stubs[i], b = stubs[i + 1];
      if (a == b) ok = false;
      else if (!edges.insert({std::min(a, b), std::max(a, b)}).second) ok = false;
    }
    if (!ok) continue;
    uno::SimpleGraph g;
    g.n = n;
    g.edges.assign(edges.begin(), edges.end());
    return g;
  }
}

inline std::optional<std::vector<int>> hp_of(const uno::SimpleGraph& g,
                                             std::optional<int> start = {}) {
  return uno::hamiltonian_path_bruteforce(g.n, g.adjacency(), start);
}

// All Hamiltonian paths of a small graph, as vertex sequences.
inline std::vector<std::vector<int>> all_hamiltonian_paths(const uno::SimpleGraph& g) {
  auto adj = g.adjacency();
  std::vector<std::vector<int>> out;
  std::vector<int> path;
  std::vector<char> used(g.n, 0);
  auto rec = [&](auto&& self, int v) -> void {
    used[v] = 1;
    path.push_back(v);
    if (static_cast<int>(path.size()) == g.n) out.push_back(path);
    else
      for (int w : adj[v])
        if (!used[w]) self(self, w);
    used[v] = 0;
    path.pop_back();
  };
  for (int v = 0; v < g.n; ++v) rec(rec, v);
  return out;
}

inline uno::SimpleGraph k4() {
  return {4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
}

inline uno::SimpleGraph k33() {
  return {6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}}};
}

inline uno::SimpleGraph prism() {
  return {6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}}};
}

inline uno::SimpleGraph petersen() {
  return {10,
          {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},          // outer cycle
           {5, 7}, {7, 9}, {6, 9}, {6, 8}, {5, 8},          // inner pentagram
           {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}}};        // spokes
}

inline uno::SimpleGraph star_k13() {
  return {4, {{0, 1}, {0, 2}, {0, 3}}};
}

inline uno::SimpleGraph two_k4s() {
  uno::SimpleGraph g;
  g.n = 8;
  for (int base : {0, 4})
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) g.edges.emplace_back(base + i, base + j);
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

}  // namespace testutil
