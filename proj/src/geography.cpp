#include "uno/geography.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <unordered_map>

namespace uno {

namespace {

// Matching on an induced subgraph: vertices with alive[v] == 0 are gone.
// Augmenting-path search from each free left vertex, guided by alternating
// BFS layers (Hopcroft-Karp layering, one augmentation per DFS).
struct MatchCtx {
  const std::vector<std::vector<int>>& adj;
  const std::vector<char>& alive;
  const std::vector<int>& side;
  std::vector<int> mate;
  std::vector<int> layer;
  std::vector<char> visited;

  MatchCtx(const std::vector<std::vector<int>>& a, const std::vector<char>& al,
           const std::vector<int>& s)
      : adj(a), alive(al), side(s), mate(a.size(), -1), layer(a.size()),
        visited(a.size()) {}

  void bfs_layers() {
    std::fill(layer.begin(), layer.end(), -1);
    std::queue<int> q;
    for (size_t v = 0; v < adj.size(); ++v)
      if (alive[v] && side[v] == 0 && mate[v] == -1) {
        layer[v] = 0;
        q.push(static_cast<int>(v));
      }
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : adj[u]) {
        if (!alive[w]) continue;
        int m = mate[w];
        if (m != -1 && layer[m] == -1) {
          layer[m] = layer[u] + 1;
          q.push(m);
        }
      }
    }
  }

  bool augment(int u) {
    visited[u] = 1;
    for (int w : adj[u]) {
      if (!alive[w]) continue;
      int m = mate[w];
      if (m == -1 ||
          (!visited[m] && layer[m] == layer[u] + 1 && augment(m))) {
        mate[u] = w;
        mate[w] = u;
        return true;
      }
    }
    return false;
  }

  int run() {
    int total = 0;
    for (;;) {
      bfs_layers();
      std::fill(visited.begin(), visited.end(), 0);
      int found = 0;
      for (size_t v = 0; v < adj.size(); ++v)
        if (alive[v] && side[v] == 0 && mate[v] == -1 &&
            augment(static_cast<int>(v)))
          ++found;
      if (found == 0) return total;
      total += found;
    }
  }
};

}  // namespace

Matching max_matching(const UnoGraph& g) {
  auto part = is_bipartite(g);
  if (!part.bipartite)
    throw std::invalid_argument("max_matching: graph is not bipartite");
  std::vector<char> alive(g.vertex_count(), 1);
  MatchCtx ctx(g.adj, alive, part.side);
  Matching m;
  m.size = ctx.run();
  m.mate = std::move(ctx.mate);
  return m;
}

namespace {

// Alternating BFS from every exposed vertex. State A = reachable by an
// even-length alternating path (swappable to become exposed); from A follow
// non-matching edges to B, from B the matching edge back to A.
std::vector<bool> avoidable_on(const std::vector<std::vector<int>>& adj,
                               const std::vector<char>& alive,
                               const std::vector<int>& mate) {
  size_t n = adj.size();
  std::vector<bool> in_a(n, false), in_b(n, false);
  std::queue<int> qa;
  for (size_t v = 0; v < n; ++v)
    if (alive[v] && mate[v] == -1) {
      in_a[v] = true;
      qa.push(static_cast<int>(v));
    }
  while (!qa.empty()) {
    int v = qa.front();
    qa.pop();
    for (int w : adj[v]) {
      if (!alive[w] || w == mate[v] || in_b[w]) continue;
      in_b[w] = true;
      int m = mate[w];
      if (m != -1 && !in_a[m]) {
        in_a[m] = true;
        qa.push(m);
      }
    }
  }
  std::vector<bool> out(n, false);
  for (size_t v = 0; v < n; ++v) out[v] = alive[v] && in_a[v];
  return out;
}

Matching matching_on_subgraph(const UnoGraph& g, const std::vector<char>& alive) {
  // Bipartition of the induced subgraph; recompute sides on the full graph
  // (a valid 2-coloring of g stays valid on any induced subgraph).
  auto part = is_bipartite(g);
  if (!part.bipartite)
    throw std::invalid_argument("geography: graph is not bipartite");
  MatchCtx ctx(g.adj, alive, part.side);
  Matching m;
  m.size = ctx.run();
  m.mate = std::move(ctx.mate);
  return m;
}

}  // namespace

std::vector<bool> avoidable_vertices(const UnoGraph& g, const Matching& m) {
  std::vector<char> alive(g.vertex_count(), 1);
  return avoidable_on(g.adj, alive, m.mate);
}

std::vector<bool> avoidable_vertices_by_deletion(const UnoGraph& g) {
  int n = g.vertex_count();
  std::vector<char> alive(n, 1);
  int full = matching_on_subgraph(g, alive).size;
  std::vector<bool> out(n, false);
  for (int v = 0; v < n; ++v) {
    alive[v] = 0;
    out[v] = matching_on_subgraph(g, alive).size == full;
    alive[v] = 1;
  }
  return out;
}

UvgVerdict solve_uvg(const UnoGraph& g, int start) {
  if (start < 0 || start >= g.vertex_count())
    throw std::invalid_argument("solve_uvg: start vertex out of range");
  Matching m = max_matching(g);
  auto avoid = avoidable_vertices(g, m);
  UvgVerdict out;
  out.mover_wins = !avoid[start];
  if (out.mover_wins) out.winning_move = m.mate[start];
  return out;
}

namespace {

struct UvgTree {
  const UnoGraph& g;
  std::unordered_map<uint64_t, bool> memo;

  explicit UvgTree(const UnoGraph& graph) : g(graph) {}

  bool mover_wins(uint64_t mask, int token) {
    uint64_t key = (mask << 6) | static_cast<uint64_t>(token);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    bool win = false;
    uint64_t next_mask = mask & ~(uint64_t{1} << token);
    for (int w : g.adj[token]) {
      if (!(mask & (uint64_t{1} << w))) continue;
      if (!mover_wins(next_mask, w)) {
        win = true;
        break;
      }
    }
    memo[key] = win;
    return win;
  }
};

}  // namespace

UvgVerdict uvg_minimax(const UnoGraph& g, int start, const OracleBudget& budget) {
  int n = g.vertex_count();
  if (n > budget.max_vertices || n > 20)
    throw BudgetExceeded("uvg_minimax: too many vertices");
  if (start < 0 || start >= n)
    throw std::invalid_argument("uvg_minimax: start vertex out of range");
  UvgTree tree(g);
  uint64_t full = (uint64_t{1} << n) - 1;
  UvgVerdict out;
  uint64_t next_mask = full & ~(uint64_t{1} << start);
  for (int w : g.adj[start]) {
    if (!tree.mover_wins(next_mask, w)) {
      out.mover_wins = true;
      out.winning_move = w;
      break;
    }
  }
  return out;
}

std::optional<int> best_move(const UnoGraph& g, const std::vector<bool>& removed,
                             int token) {
  std::vector<int> candidates;
  for (int w : g.adj[token])
    if (!removed[w]) candidates.push_back(w);
  if (candidates.empty()) return std::nullopt;

  // Opponent faces the graph without the token vertex; a winning reply is a
  // neighbor some maximum matching of that graph misses.
  std::vector<char> alive(g.vertex_count(), 1);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (removed[v]) alive[v] = 0;
  alive[token] = 0;
  Matching sub = matching_on_subgraph(g, alive);
  auto avoid = avoidable_on(g.adj, alive, sub.mate);
  for (int w : candidates)
    if (avoid[w]) return w;

  // Losing anyway: keep the game long, prefer the highest remaining degree.
  int best = candidates[0], best_deg = -1;
  for (int w : candidates) {
    int deg = 0;
    for (int x : g.adj[w])
      if (alive[x] && x != w) ++deg;
    if (deg > best_deg) {
      best = w;
      best_deg = deg;
    }
  }
  return best;
}

UncoopVerdict solve_uno2_uncoop(const Instance& inst) {
  inst.validate();
  if (inst.players != 2)
    throw std::invalid_argument("solve_uno2_uncoop requires exactly 2 players");

  UncoopVerdict out;
  int n1 = static_cast<int>(inst.hands[0].size());
  if (n1 == 0) {  // player 1 cannot make the first play
    out.winner = 2;
    return out;
  }

  UnoGraph g = build_uno2_graph(inst);
  Matching m = max_matching(g);
  auto avoid = avoidable_vertices(g, m);

  out.winner = 2;
  for (int v = 0; v < n1; ++v)
    if (avoid[v]) {
      out.winner = 1;
      out.opening_vertex = v;
      out.opening_move = g.labels[v].card;
      break;
    }

  // Engine-vs-engine playout for the principal line.
  std::vector<bool> removed(g.vertex_count(), false);
  int token = out.opening_vertex ? *out.opening_vertex : 0;
  if (!out.opening_vertex) {
    // Losing opening: highest-degree card of hand 1.
    int best_deg = -1;
    for (int v = 0; v < n1; ++v) {
      int deg = static_cast<int>(g.adj[v].size());
      if (deg > best_deg) {
        best_deg = deg;
        token = v;
      }
    }
  }
  out.principal_line.moves.push_back(
      {g.labels[token].card, g.labels[token].player, g.labels[token].occurrence});
  while (true) {
    auto mv = best_move(g, removed, token);
    if (!mv) break;
    removed[token] = true;
    token = *mv;
    out.principal_line.moves.push_back(
        {g.labels[token].card, g.labels[token].player, g.labels[token].occurrence});
  }
  return out;
}

bool uno2_uncoop_by_virtual_start(const Instance& inst) {
  inst.validate();
  if (inst.players != 2)
    throw std::invalid_argument("uno2_uncoop_by_virtual_start requires 2 players");
  UnoGraph g = build_uno2_graph(inst);
  int n = g.vertex_count();
  int n1 = static_cast<int>(inst.hands[0].size());
  UnoGraph h = g;
  h.labels.push_back({Card{1, 1}, 2, -1});  // virtual vertex on player 2's side
  h.adj.emplace_back();
  for (int v = 0; v < n1; ++v) {
    h.adj[n].push_back(v);
    h.adj[v].push_back(n);
    std::sort(h.adj[v].begin(), h.adj[v].end());
  }
  return solve_uvg(h, n).mover_wins;
}

}  // namespace uno
