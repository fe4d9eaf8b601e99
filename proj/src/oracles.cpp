#include "uno/oracles.hpp"

#include <unordered_map>

namespace uno {

namespace {

struct HpSearch {
  int n;
  const std::vector<std::vector<int>>& adj;
  uint64_t nodes = 0;
  uint64_t max_nodes;
  std::vector<int> path;
  std::vector<char> visited;

  HpSearch(int n_, const std::vector<std::vector<int>>& a, uint64_t cap)
      : n(n_), adj(a), max_nodes(cap), visited(n_, 0) {}

  bool extend(int v) {
    if (++nodes > max_nodes)
      throw BudgetExceeded("hamiltonian_path_bruteforce: node budget exceeded");
    visited[v] = 1;
    path.push_back(v);
    if (static_cast<int>(path.size()) == n) return true;
    for (int w : adj[v])
      if (!visited[w] && extend(w)) return true;
    visited[v] = 0;
    path.pop_back();
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> hamiltonian_path_bruteforce(
    int n, const std::vector<std::vector<int>>& adj,
    std::optional<int> fixed_start, const OracleBudget& budget) {
  if (n > budget.max_vertices)
    throw BudgetExceeded("hamiltonian_path_bruteforce: too many vertices");
  if (n == 0) return std::vector<int>{};
  HpSearch s(n, adj, budget.max_nodes);
  if (fixed_start) {
    if (*fixed_start < 0 || *fixed_start >= n)
      throw std::invalid_argument("fixed start vertex out of range");
    if (s.extend(*fixed_start)) return s.path;
    return std::nullopt;
  }
  for (int v = 0; v < n; ++v)
    if (s.extend(v)) return s.path;
  return std::nullopt;
}

namespace {

// Shared flat view of an instance: occurrences of hand 1 then hand 2.
struct FlatCards {
  std::vector<Card> card;
  std::vector<int> player;      // 1-based
  std::vector<int> occurrence;  // within-hand index
  int n1 = 0;

  explicit FlatCards(const Instance& inst) {
    for (size_t p = 0; p < inst.hands.size(); ++p)
      for (size_t k = 0; k < inst.hands[p].size(); ++k) {
        card.push_back(inst.hands[p][k]);
        player.push_back(static_cast<int>(p + 1));
        occurrence.push_back(static_cast<int>(k));
      }
    n1 = static_cast<int>(inst.hands[0].size());
  }
  int total() const { return static_cast<int>(card.size()); }
};

// Exact packed key; callers guarantee at most 57 occurrences.
uint64_t state_key(uint64_t mask, int last) {
  return (mask << 7) | static_cast<uint64_t>(last + 1);
}

// Uncooperative 2-player game tree. State: remaining occurrence mask plus the
// last occurrence played (-1 at the root). The mover is forced by strict
// alternation; a mover with no playable card loses.
struct UncoopTree {
  const FlatCards& fc;
  std::unordered_map<uint64_t, bool> memo;  // mover_wins

  explicit UncoopTree(const FlatCards& f) : fc(f) {}

  int mover(int last) const {
    return last < 0 ? 1 : 3 - fc.player[last];
  }

  bool playable(int i, int last) const {
    return last < 0 || matches(fc.card[i], fc.card[last]);
  }

  bool mover_wins(uint64_t mask, int last) {
    uint64_t key = state_key(mask, last);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    int who = mover(last);
    bool win = false;
    for (int i = 0; i < fc.total() && !win; ++i) {
      if (!(mask & (uint64_t{1} << i))) continue;
      if (fc.player[i] != who) continue;
      if (!playable(i, last)) continue;
      win = !mover_wins(mask & ~(uint64_t{1} << i), i);
    }
    memo[key] = win;
    return win;
  }

  // First move (occurrence order) consistent with the state value.
  std::optional<int> pick(uint64_t mask, int last) {
    int who = mover(last);
    std::optional<int> fallback;
    for (int i = 0; i < fc.total(); ++i) {
      if (!(mask & (uint64_t{1} << i))) continue;
      if (fc.player[i] != who) continue;
      if (!playable(i, last)) continue;
      if (!fallback) fallback = i;
      if (!mover_wins(mask & ~(uint64_t{1} << i), i)) return i;
    }
    return fallback;
  }
};

// Cooperative search: both players steer toward emptying hand 1 strictly
// before hand 2 (the game ends when either player goes out). The compelled
// player is forced by the skip rule but chooses which card to play.
struct CoopTree {
  const FlatCards& fc;
  int players;
  std::unordered_map<uint64_t, bool> memo;

  CoopTree(const FlatCards& f, int p) : fc(f), players(p) {}

  bool playable(int i, int last) const {
    return last < 0 || matches(fc.card[i], fc.card[last]);
  }

  bool hand_empty(uint64_t mask, int player) const {
    for (int i = 0; i < fc.total(); ++i)
      if (fc.player[i] == player && (mask & (uint64_t{1} << i))) return false;
    return true;
  }

  bool can_play(uint64_t mask, int last, int player) const {
    for (int i = 0; i < fc.total(); ++i)
      if (fc.player[i] == player && (mask & (uint64_t{1} << i)) &&
          playable(i, last))
        return true;
    return false;
  }

  int compelled(uint64_t mask, int last) const {
    if (players == 1) return can_play(mask, last, 1) ? 1 : 0;
    if (last < 0) {
      if (can_play(mask, last, 1)) return 1;
      if (can_play(mask, last, 2)) return 2;
      return 0;
    }
    int nxt = 3 - fc.player[last];
    if (can_play(mask, last, nxt)) return nxt;
    if (can_play(mask, last, 3 - nxt)) return 3 - nxt;
    return 0;
  }

  bool reachable_win(uint64_t mask, int last) {
    if (hand_empty(mask, 1)) return true;
    if (players == 2 && hand_empty(mask, 2)) return false;  // player 2 went out
    uint64_t key = state_key(mask, last);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    int who = compelled(mask, last);
    bool win = false;
    if (who != 0) {
      for (int i = 0; i < fc.total() && !win; ++i) {
        if (!(mask & (uint64_t{1} << i))) continue;
        if (fc.player[i] != who) continue;
        if (!playable(i, last)) continue;
        win = reachable_win(mask & ~(uint64_t{1} << i), i);
      }
    }
    memo[key] = win;
    return win;
  }
};

}  // namespace

MinimaxVerdict uno_minimax(const Instance& inst, GameMode mode,
                           const OracleBudget& budget) {
  inst.validate();
  if (mode != GameMode::Uno1 && inst.players != 2)
    throw std::invalid_argument("uno_minimax: mode requires 2 players");
  if (mode == GameMode::Uno1 && inst.players != 1)
    throw std::invalid_argument("uno_minimax: uno1 requires 1 player");
  if (inst.total_cards() > budget.max_cards)
    throw BudgetExceeded("uno_minimax: too many cards for the budget");
  if (inst.total_cards() > 57)
    throw BudgetExceeded("uno_minimax: at most 57 cards supported");

  FlatCards fc(inst);
  uint64_t full = fc.total() == 64 ? ~uint64_t{0}
                                   : (uint64_t{1} << fc.total()) - 1;
  MinimaxVerdict out;

  if (mode == GameMode::Uncoop2) {
    UncoopTree tree(fc);
    uint64_t mask = full;
    int last = -1;
    while (true) {
      auto mv = tree.pick(mask, last);
      if (!mv) break;
      out.line.moves.push_back(
          {fc.card[*mv], fc.player[*mv], fc.occurrence[*mv]});
      mask &= ~(uint64_t{1} << *mv);
      last = *mv;
    }
    out.winner = last < 0 ? 2 : fc.player[last];
    out.player1_success = (out.winner == 1);
    return out;
  }

  CoopTree tree(fc, inst.players);
  out.player1_success = tree.reachable_win(full, -1);
  if (out.player1_success) {
    // Walk the memoized tree from the root, always taking the first winning
    // move in occurrence order, until hand 1 is empty.
    uint64_t mask = full;
    int last = -1;
    while (!tree.hand_empty(mask, 1)) {
      int who = tree.compelled(mask, last);
      bool advanced = false;
      for (int i = 0; i < fc.total() && !advanced; ++i) {
        if (!(mask & (uint64_t{1} << i))) continue;
        if (fc.player[i] != who) continue;
        if (!tree.playable(i, last)) continue;
        if (tree.reachable_win(mask & ~(uint64_t{1} << i), i)) {
          out.line.moves.push_back({fc.card[i], fc.player[i], fc.occurrence[i]});
          mask &= ~(uint64_t{1} << i);
          last = i;
          advanced = true;
        }
      }
      if (!advanced)
        throw std::logic_error("uno_minimax: winning line reconstruction failed");
    }
  }
  return out;
}

}  // namespace uno
