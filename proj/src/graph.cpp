#include "uno/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace uno {

std::size_t UnoGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& nb : adj) twice += nb.size();
  return twice / 2;
}

bool UnoGraph::has_edge(int u, int v) const {
  const auto& nb = adj[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

namespace {

void finalize_adj(UnoGraph& g) {
  for (auto& nb : g.adj) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
}

}  // namespace

UnoGraph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  UnoGraph g;
  g.adj.resize(n);
  g.labels.resize(n);
  for (int v = 0; v < n; ++v) g.labels[v] = {Card{v + 1, 1}, 1, v};
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v)
      throw std::invalid_argument("make_graph: bad edge");
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  finalize_adj(g);
  return g;
}

UnoGraph build_uno1_graph(const std::vector<Card>& cards) {
  UnoGraph g;
  int n = static_cast<int>(cards.size());
  g.adj.resize(n);
  g.labels.reserve(n);
  for (int i = 0; i < n; ++i) g.labels.push_back({cards[i], 1, i});
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (matches(cards[i], cards[j])) {
        g.adj[i].push_back(j);
        g.adj[j].push_back(i);
      }
  finalize_adj(g);
  return g;
}

UnoGraph build_uno2_graph(const Instance& inst) {
  if (inst.players != 2)
    throw std::invalid_argument("build_uno2_graph requires exactly 2 players");
  inst.validate();
  UnoGraph g;
  int n1 = static_cast<int>(inst.hands[0].size());
  int n2 = static_cast<int>(inst.hands[1].size());
  g.adj.resize(n1 + n2);
  for (int i = 0; i < n1; ++i) g.labels.push_back({inst.hands[0][i], 1, i});
  for (int j = 0; j < n2; ++j) g.labels.push_back({inst.hands[1][j], 2, j});
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j)
      if (matches(inst.hands[0][i], inst.hands[1][j])) {
        g.adj[i].push_back(n1 + j);
        g.adj[n1 + j].push_back(i);
      }
  finalize_adj(g);
  return g;
}

Bigraph incidence_bigraph(const std::vector<Card>& cards) {
  Bigraph g;
  for (const Card& c : cards) {
    g.left_names.push_back(c.color);
    g.right_names.push_back(c.number);
  }
  auto dedup = [](std::vector<int>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  dedup(g.left_names);
  dedup(g.right_names);
  for (const Card& c : cards) {
    int li = static_cast<int>(
        std::lower_bound(g.left_names.begin(), g.left_names.end(), c.color) -
        g.left_names.begin());
    int ri = static_cast<int>(
        std::lower_bound(g.right_names.begin(), g.right_names.end(), c.number) -
        g.right_names.begin());
    g.edges.emplace_back(li, ri);
  }
  return g;
}

UnoGraph line_graph(const Bigraph& g) {
  UnoGraph out;
  int m = static_cast<int>(g.edges.size());
  out.adj.resize(m);
  for (int e = 0; e < m; ++e) {
    Card c{g.left_names[g.edges[e].first], g.right_names[g.edges[e].second]};
    out.labels.push_back({c, 1, e});
  }
  for (int e = 0; e < m; ++e)
    for (int f = e + 1; f < m; ++f)
      if (g.edges[e].first == g.edges[f].first ||
          g.edges[e].second == g.edges[f].second) {
        out.adj[e].push_back(f);
        out.adj[f].push_back(e);
      }
  finalize_adj(out);
  return out;
}

BipartitionCheck is_bipartite(const UnoGraph& g) {
  int n = g.vertex_count();
  BipartitionCheck out;
  out.side.assign(n, -1);
  std::vector<int> parent(n, -1);
  for (int root = 0; root < n; ++root) {
    if (out.side[root] != -1) continue;
    out.side[root] = 0;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : g.adj[u]) {
        if (out.side[v] == -1) {
          out.side[v] = 1 - out.side[u];
          parent[v] = u;
          q.push(v);
        } else if (out.side[v] == out.side[u]) {
          // Walk both vertices up to their common ancestor: the two legs plus
          // the offending edge form an odd cycle.
          std::vector<int> pu{u}, pv{v};
          auto depth = [&](int x) {
            int d = 0;
            for (; parent[x] != -1; x = parent[x]) ++d;
            return d;
          };
          int du = depth(u), dv = depth(v);
          int a = u, b = v;
          while (du > dv) { a = parent[a]; pu.push_back(a); --du; }
          while (dv > du) { b = parent[b]; pv.push_back(b); --dv; }
          while (a != b) {
            a = parent[a]; pu.push_back(a);
            b = parent[b]; pv.push_back(b);
          }
          out.odd_cycle = pu;
          for (auto it = pv.rbegin() + 1; it != pv.rend(); ++it)
            out.odd_cycle.push_back(*it);
          out.bipartite = false;
          return out;
        }
      }
    }
  }
  out.bipartite = true;
  return out;
}

std::string export_dot(const UnoGraph& g) {
  int n = g.vertex_count();
  std::vector<std::string> names(n);
  std::map<std::tuple<int, int, int>, int> dup_counter;
  for (int v = 0; v < n; ++v) {
    const VertexLabel& l = g.labels[v];
    int k = dup_counter[{l.player, l.card.color, l.card.number}]++;
    names[v] = "p" + std::to_string(l.player) + "_c" +
               std::to_string(l.card.color) + "n" +
               std::to_string(l.card.number) + "_" + std::to_string(k);
  }
  std::vector<std::string> node_lines(names);
  std::sort(node_lines.begin(), node_lines.end());
  std::vector<std::pair<std::string, std::string>> edge_lines;
  for (int u = 0; u < n; ++u)
    for (int v : g.adj[u])
      if (u < v) {
        auto a = names[u], b = names[v];
        if (b < a) std::swap(a, b);
        edge_lines.emplace_back(a, b);
      }
  std::sort(edge_lines.begin(), edge_lines.end());

  std::ostringstream out;
  out << "graph uno {\n";
  for (const auto& s : node_lines) out << "  " << s << ";\n";
  for (const auto& [a, b] : edge_lines) out << "  " << a << " -- " << b << ";\n";
  out << "}\n";
  return out.str();
}

namespace {

// -- canonical labeling ------------------------------------------------------
//
// Color refinement to an equitable partition, then individualization on the
// first non-singleton cell, taking the lexicographically smallest adjacency
// encoding over all branches. When the partition is equitable and adjacency
// is uniform between (and inside) every pair of cells, any within-cell order
// yields the same encoding, so the search stops there; this keeps cliques,
// independent sets and twin-heavy line graphs cheap.

struct Canon {
  int n;
  std::vector<uint64_t> adj_bits;  // n x n bitmask rows
  std::vector<uint64_t> best;
  bool have_best = false;
  long nodes = 0;

  explicit Canon(const UnoGraph& g) : n(g.vertex_count()), adj_bits(n, 0) {
    for (int u = 0; u < n; ++u)
      for (int v : g.adj[u]) adj_bits[u] |= uint64_t{1} << v;
  }

  bool edge(int u, int v) const { return (adj_bits[u] >> v) & 1; }

  // Refine colors to a fixpoint. Signatures are (old color, sorted multiset
  // of neighbor colors); new color ids follow signature order, so they are
  // invariant across isomorphic graphs.
  void refine(std::vector<int>& color) const {
    for (;;) {
      std::vector<std::pair<std::vector<int>, int>> sig(n);
      for (int v = 0; v < n; ++v) {
        std::vector<int> s;
        s.push_back(color[v]);
        for (int u = 0; u < n; ++u)
          if (edge(v, u)) s.push_back(color[u]);
        std::sort(s.begin() + 1, s.end());
        sig[v] = {std::move(s), v};
      }
      std::vector<std::pair<std::vector<int>, int>> sorted = sig;
      std::sort(sorted.begin(), sorted.end());
      std::vector<int> next(n);
      int classes = 0;
      for (int i = 0; i < n; ++i) {
        if (i > 0 && sorted[i].first != sorted[i - 1].first) ++classes;
        next[sorted[i].second] = classes;
      }
      bool stable = true;
      for (int v = 0; v < n && stable; ++v) stable = (next[v] == color[v]);
      if (stable) return;
      color = std::move(next);
      if (classes + 1 == n) return;  // discrete
    }
  }

  std::vector<std::vector<int>> cells(const std::vector<int>& color) const {
    int classes = *std::max_element(color.begin(), color.end()) + 1;
    std::vector<std::vector<int>> out(classes);
    for (int v = 0; v < n; ++v) out[color[v]].push_back(v);
    return out;
  }

  // Uniform adjacency inside every cell and between every pair of cells.
  bool homogeneous(const std::vector<std::vector<int>>& cs) const {
    for (size_t a = 0; a < cs.size(); ++a) {
      for (size_t b = a; b < cs.size(); ++b) {
        int seen = -1;
        for (int u : cs[a])
          for (int v : cs[b]) {
            if (u == v) continue;
            int e = edge(u, v) ? 1 : 0;
            if (seen == -1) seen = e;
            if (e != seen) return false;
          }
      }
    }
    return true;
  }

  std::vector<uint64_t> encode(const std::vector<int>& order) const {
    std::vector<uint64_t> bits((static_cast<size_t>(n) * n + 63) / 64 + 1, 0);
    bits[0] = static_cast<uint64_t>(n);
    size_t pos = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j, ++pos)
        if (edge(order[i], order[j])) bits[1 + pos / 64] |= uint64_t{1} << (pos % 64);
    return bits;
  }

  void consider(const std::vector<int>& order) {
    auto e = encode(order);
    if (!have_best || e < best) {
      best = std::move(e);
      have_best = true;
    }
  }

  void search(std::vector<int> color) {
    if (++nodes > 500000)
      throw std::invalid_argument("canonical_form: search budget exceeded");
    refine(color);
    auto cs = cells(color);
    int target = -1;
    for (size_t i = 0; i < cs.size(); ++i)
      if (cs[i].size() > 1) { target = static_cast<int>(i); break; }
    if (target == -1 || homogeneous(cs)) {
      std::vector<int> order;
      for (const auto& cell : cs) order.insert(order.end(), cell.begin(), cell.end());
      consider(order);
      return;
    }
    for (int v : cs[target]) {
      std::vector<int> next(n);
      // Individualize v: everything keeps its color rank, cells after the
      // target shift, v gets the slot just before the rest of its cell.
      for (int u = 0; u < n; ++u)
        next[u] = 2 * color[u] + (color[u] == target && u != v ? 1 : 0);
      search(std::move(next));
    }
  }
};

}  // namespace

std::vector<uint64_t> canonical_form(const UnoGraph& g) {
  if (g.vertex_count() > 64)
    throw std::invalid_argument("canonical_form supports at most 64 vertices");
  if (g.vertex_count() == 0) return {0};
  Canon c(g);
  c.search(std::vector<int>(g.vertex_count(), 0));
  return c.best;
}

bool isomorphic(const UnoGraph& a, const UnoGraph& b) {
  if (a.vertex_count() != b.vertex_count()) return false;
  if (a.edge_count() != b.edge_count()) return false;
  std::vector<size_t> da, db;
  for (const auto& nb : a.adj) da.push_back(nb.size());
  for (const auto& nb : b.adj) db.push_back(nb.size());
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace uno
