#include "uno/reductions.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace uno {

std::vector<std::vector<int>> SimpleGraph::adjacency() const {
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& nb : adj) std::sort(nb.begin(), nb.end());
  return adj;
}

std::vector<int> SimpleGraph::degrees() const {
  std::vector<int> deg(n, 0);
  for (auto [a, b] : edges) {
    ++deg[a];
    ++deg[b];
  }
  return deg;
}

void SimpleGraph::validate() const {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  std::vector<std::pair<int, int>> seen;
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw std::invalid_argument("graph: edge endpoint out of range");
    if (a == b) throw std::invalid_argument("graph: self loop");
    if (a > b) throw std::invalid_argument("graph: edge not normalized");
    seen.emplace_back(a, b);
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    throw std::invalid_argument("graph: duplicate edge");
}

namespace {

std::vector<std::pair<int, std::string>> graph_lines(const std::string& text) {
  std::vector<std::pair<int, std::string>> out;
  std::istringstream in(text);
  std::string raw;
  int no = 0;
  while (std::getline(in, raw)) {
    ++no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    size_t a = raw.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    size_t b = raw.find_last_not_of(" \t\r");
    out.emplace_back(no, raw.substr(a, b - a + 1));
  }
  return out;
}

}  // namespace

SimpleGraph parse_graph(const std::string& text) {
  auto lines = graph_lines(text);
  if (lines.empty()) throw ParseError(1, "empty graph file");
  if (lines[0].second != "graph 1")
    throw ParseError(lines[0].first, "expected header 'graph 1'");
  SimpleGraph g;
  size_t idx = 1;
  {
    if (idx >= lines.size()) throw ParseError(lines[0].first, "missing 'v <count>'");
    std::istringstream in(lines[idx].second);
    std::string key;
    in >> key >> g.n;
    if (key != "v" || in.fail() || g.n < 0)
      throw ParseError(lines[idx].first, "expected 'v <count>'");
    ++idx;
  }
  for (; idx < lines.size(); ++idx) {
    std::istringstream in(lines[idx].second);
    std::string key;
    int a = 0, b = 0;
    in >> key >> a >> b;
    if (key != "e" || in.fail())
      throw ParseError(lines[idx].first, "expected 'e <i> <j>'");
    if (a < 1 || b < 1 || a > g.n || b > g.n)
      throw ParseError(lines[idx].first, "edge endpoint out of range");
    if (a == b) throw ParseError(lines[idx].first, "self loop");
    int u = std::min(a, b) - 1, v = std::max(a, b) - 1;
    g.edges.emplace_back(u, v);
  }
  std::sort(g.edges.begin(), g.edges.end());
  if (std::adjacent_find(g.edges.begin(), g.edges.end()) != g.edges.end())
    throw ParseError(1, "duplicate edge");
  g.validate();
  return g;
}

std::string serialize_graph(const SimpleGraph& g) {
  std::ostringstream out;
  out << "graph 1\n";
  out << "v " << g.n << "\n";
  for (auto [a, b] : g.edges) out << "e " << (a + 1) << " " << (b + 1) << "\n";
  return out.str();
}

bool is_connected(const SimpleGraph& g) {
  if (g.n <= 1) return true;
  auto adj = g.adjacency();
  std::vector<char> seen(g.n, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int count = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        q.push(w);
      }
  }
  return count == g.n;
}

std::optional<std::string> hp_reduction_lint(const SimpleGraph& g) {
  if (!is_connected(g)) return "input graph is not connected";
  if (static_cast<int>(g.edges.size()) < g.n)
    return "input graph is a tree (fewer edges than vertices)";
  return std::nullopt;
}

Instance hp_to_uno2(const SimpleGraph& g) {
  g.validate();
  Instance inst;
  inst.players = 2;
  inst.colors = std::max(1, g.n);
  inst.numbers = std::max(1, g.n);
  inst.hands.resize(2);
  for (int v = 0; v < g.n; ++v)
    inst.hands[0].push_back({v + 1, v + 1});
  for (auto [a, b] : g.edges)
    inst.hands[1].push_back({a + 1, b + 1});
  inst.validate();
  return inst;
}

Instance pad_equal_hands(const Instance& inst, int start_vertex_1based) {
  inst.validate();
  if (inst.players != 2)
    throw std::invalid_argument("pad_equal_hands requires exactly 2 players");
  size_t n1 = inst.hands[0].size(), n2 = inst.hands[1].size();
  if (n1 > n2)
    throw std::invalid_argument("pad_equal_hands requires |C1| <= |C2|");
  if (n1 == n2) return inst;
  int n = inst.colors;  // |V| for reduction outputs
  if (start_vertex_1based < 1 || start_vertex_1based > n)
    throw std::invalid_argument("pad_equal_hands: start vertex out of range");
  Instance out = inst;
  out.colors = n + 2;
  out.numbers = n + 2;
  for (size_t k = 0; k < n2 - n1; ++k)
    out.hands[0].push_back({n + 2, n + 2});
  out.hands[0].push_back({n + 2, n + 1});
  out.hands[1].push_back({start_vertex_1based, n + 1});
  out.validate();
  return out;
}

namespace {

// Edge ids in sorted-edge order, 1-based.
std::map<std::pair<int, int>, int> edge_ids(const SimpleGraph& g) {
  std::vector<std::pair<int, int>> sorted = g.edges;
  std::sort(sorted.begin(), sorted.end());
  std::map<std::pair<int, int>, int> ids;
  for (size_t e = 0; e < sorted.size(); ++e)
    ids[sorted[e]] = static_cast<int>(e + 1);
  return ids;
}

int edge_id_of(const std::map<std::pair<int, int>, int>& ids, int a, int b) {
  auto it = ids.find({std::min(a, b), std::max(a, b)});
  if (it == ids.end()) throw std::invalid_argument("edge not in graph");
  return it->second;
}

}  // namespace

std::vector<Card> hpc_to_uno1(const SimpleGraph& g) {
  g.validate();
  auto deg = g.degrees();
  for (int v = 0; v < g.n; ++v)
    if (deg[v] != 3)
      throw std::invalid_argument("hpc_to_uno1 requires a cubic graph");
  auto ids = edge_ids(g);
  std::vector<Card> cards;
  for (int v = 0; v < g.n; ++v)
    for (auto [a, b] : g.edges)
      if (a == v || b == v) cards.push_back({v + 1, edge_id_of(ids, a, b)});
  return cards;
}

Instance hpc_to_uno1_instance(const SimpleGraph& g) {
  Instance inst;
  inst.players = 1;
  inst.colors = std::max(1, g.n);
  inst.numbers = std::max<int>(1, static_cast<int>(g.edges.size()));
  inst.hands.push_back(hpc_to_uno1(g));
  inst.validate();
  return inst;
}

namespace {

bool has_edge(const SimpleGraph& g, int a, int b) {
  auto p = std::make_pair(std::min(a, b), std::max(a, b));
  return std::binary_search(g.edges.begin(), g.edges.end(), p);
}

void require_hamiltonian(const SimpleGraph& g, const std::vector<int>& path) {
  if (static_cast<int>(path.size()) != g.n)
    throw std::invalid_argument("path does not visit every vertex");
  std::vector<char> seen(g.n, 0);
  for (int v : path) {
    if (v < 0 || v >= g.n) throw std::invalid_argument("path vertex out of range");
    if (seen[v]) throw std::invalid_argument("path repeats a vertex");
    seen[v] = 1;
  }
  for (size_t i = 1; i < path.size(); ++i)
    if (!has_edge(g, path[i - 1], path[i]))
      throw std::invalid_argument("path uses a missing edge");
}

}  // namespace

PlayingSequence map_hp_to_sequence(const SimpleGraph& g,
                                   const std::vector<int>& path,
                                   ReductionTag tag) {
  require_hamiltonian(g, path);
  PlayingSequence seq;

  if (tag == ReductionTag::Thm1) {
    // (i1,i1)_1, (i1,i2)_2, (i2,i2)_1, ..., (i_{n-1},i_n)_2, (i_n,i_n)_1.
    Instance inst = hp_to_uno2(g);
    std::vector<char> used(inst.hands[1].size(), 0);
    auto edge_occ = [&](int a, int b) {
      Card want{std::min(a, b) + 1, std::max(a, b) + 1};
      for (size_t k = 0; k < inst.hands[1].size(); ++k)
        if (!used[k] && inst.hands[1][k] == want) {
          used[k] = 1;
          return static_cast<int>(k);
        }
      throw std::logic_error("edge card missing");
    };
    for (size_t i = 0; i < path.size(); ++i) {
      int v = path[i];
      seq.moves.push_back({Card{v + 1, v + 1}, 1, v});
      if (i + 1 < path.size()) {
        int w = path[i + 1];
        int occ = edge_occ(v, w);
        Card c{std::min(v, w) + 1, std::max(v, w) + 1};
        seq.moves.push_back({c, 2, occ});
      }
    }
    return seq;
  }

  // Thm3: expand each vertex into its node-gadget triangle. Interior vertex:
  // (v, e_prev), (v, e_third), (v, e_next); the first and last vertices play
  // their two off-path edges first / last.
  auto ids = edge_ids(g);
  auto adj = g.adjacency();
  std::vector<Card> cards = hpc_to_uno1(g);
  std::vector<char> used(cards.size(), 0);
  auto occ_of = [&](Card want) {
    for (size_t k = 0; k < cards.size(); ++k)
      if (!used[k] && cards[k] == want) {
        used[k] = 1;
        return static_cast<int>(k);
      }
    throw std::logic_error("gadget card missing");
  };
  auto push = [&](int v, int eid) {
    Card c{v + 1, eid};
    seq.moves.push_back({c, 1, occ_of(c)});
  };
  int n = g.n;
  for (int i = 0; i < n; ++i) {
    int v = path[i];
    std::vector<int> inc;
    for (int w : adj[v]) inc.push_back(edge_id_of(ids, v, w));
    std::sort(inc.begin(), inc.end());
    if (i == 0) {
      int e_next = edge_id_of(ids, v, path[1]);
      for (int e : inc)
        if (e != e_next) push(v, e);
      push(v, e_next);
    } else if (i == n - 1) {
      int e_prev = edge_id_of(ids, v, path[i - 1]);
      push(v, e_prev);
      for (int e : inc)
        if (e != e_prev) push(v, e);
    } else {
      int e_prev = edge_id_of(ids, v, path[i - 1]);
      int e_next = edge_id_of(ids, v, path[i + 1]);
      int e_third = -1;
      for (int e : inc)
        if (e != e_prev && e != e_next) e_third = e;
      if (e_third < 0) throw std::logic_error("cubic vertex lacks a third edge");
      push(v, e_prev);
      push(v, e_third);
      push(v, e_next);
    }
  }
  return seq;
}

namespace {

// Fig.-4-style normalization: while some gadget's three members are not
// consecutive, one of them is a path endpoint; relocate it next to its
// siblings. Removing a path endpoint and reinserting a vertex between (or
// just outside) two adjacent gadget siblings keeps the walk a Hamiltonian
// path and never breaks another gadget's consecutiveness.
std::vector<std::pair<int, int>> normalize_gadget_path(
    std::vector<std::pair<int, int>> p, int n_vertices) {
  auto positions_of = [&](int v) {
    std::vector<int> pos;
    for (size_t i = 0; i < p.size(); ++i)
      if (p[i].first == v) pos.push_back(static_cast<int>(i));
    return pos;
  };
  auto nonconsecutive = [&]() {
    for (int v = 0; v < n_vertices; ++v) {
      auto pos = positions_of(v);
      if (pos.size() != 3) throw std::invalid_argument("gadget visit count != 3");
      if (pos[2] - pos[0] != 2) return v;
    }
    return -1;
  };

  for (int guard = 0; guard <= n_vertices; ++guard) {
    int v = nonconsecutive();
    if (v < 0) return p;
    bool repaired = false;
    for (int end : {0, 1}) {  // 0 = front, 1 = back
      size_t end_idx = end == 0 ? 0 : p.size() - 1;
      if (p[end_idx].first != v) continue;
      auto q = p;
      auto moved = q[end_idx];
      q.erase(q.begin() + end_idx);
      // Find the two remaining members; they must now be path-adjacent.
      std::vector<int> pos;
      for (size_t i = 0; i < q.size(); ++i)
        if (q[i].first == v) pos.push_back(static_cast<int>(i));
      if (pos.size() != 2 || pos[1] != pos[0] + 1) continue;
      if (pos[0] == 0)
        q.insert(q.begin(), moved);
      else if (pos[1] == static_cast<int>(q.size()) - 1)
        q.push_back(moved);
      else
        q.insert(q.begin() + pos[1], moved);
      p = std::move(q);
      repaired = true;
      break;
    }
    if (!repaired)
      throw std::invalid_argument(
          "sequence cannot be normalized to consecutive gadget visits");
  }
  throw std::invalid_argument("gadget normalization did not terminate");
}

}  // namespace

std::vector<int> map_sequence_to_hp(const SimpleGraph& g,
                                    const PlayingSequence& seq,
                                    ReductionTag tag) {
  if (tag == ReductionTag::Thm1) {
    Instance inst = hp_to_uno2(g);
    SequenceCheck check = check_sequence(inst, seq, GameMode::Coop2);
    if (!check.feasible)
      throw std::invalid_argument("sequence not feasible: " + check.diagnostic);
    std::vector<int> path;
    for (const Move& m : seq.moves)
      if (m.player == 1) path.push_back(m.card.color - 1);
    if (static_cast<int>(path.size()) != g.n)
      throw std::invalid_argument("sequence does not play out hand 1");
    require_hamiltonian(g, path);
    return path;
  }

  // Thm3: the sequence is a Hamiltonian path of the gadget graph; check
  // feasibility, normalize consecutiveness, then contract triples.
  std::vector<Card> cards = hpc_to_uno1(g);
  Instance inst = hpc_to_uno1_instance(g);
  SequenceCheck check = check_sequence(inst, seq, GameMode::Uno1);
  if (!check.feasible)
    throw std::invalid_argument("sequence not feasible: " + check.diagnostic);
  if (seq.moves.size() != cards.size())
    throw std::invalid_argument("sequence does not use every card");

  std::vector<std::pair<int, int>> walk;  // (vertex, edge id)
  for (const Move& m : seq.moves)
    walk.emplace_back(m.card.color - 1, m.card.number);
  walk = normalize_gadget_path(std::move(walk), g.n);

  std::vector<int> path;
  for (size_t i = 0; i < walk.size(); i += 3) {
    if (walk[i].first != walk[i + 1].first || walk[i].first != walk[i + 2].first)
      throw std::logic_error("normalization left a split gadget");
    path.push_back(walk[i].first);
  }
  require_hamiltonian(g, path);
  return path;
}

}  // namespace uno
