#include "uno/solver_coop.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace uno {

namespace {

constexpr int kMaxOccurrences = 57;  // packed memo key: 57 mask bits + 7

uint64_t bit(int i) { return uint64_t{1} << i; }

struct DeadSet {
  std::unordered_set<uint64_t> set;
  std::size_t cap;

  explicit DeadSet(std::size_t budget_bytes) {
    // unordered_set node overhead is roughly 32-48 bytes per entry.
    cap = budget_bytes / 48;
  }
  bool contains(uint64_t mask, int last) const {
    return set.count((mask << 7) | static_cast<uint64_t>(last + 1)) != 0;
  }
  void insert(uint64_t mask, int last) {
    if (set.size() < cap) set.insert((mask << 7) | static_cast<uint64_t>(last + 1));
  }
};

}  // namespace

std::vector<int> order_playable_moves(const std::vector<Card>& cards,
                                      uint64_t remaining_mask,
                                      std::optional<int> last) {
  std::vector<int> moves;
  int n = static_cast<int>(cards.size());
  for (int i = 0; i < n; ++i) {
    if (!(remaining_mask & bit(i))) continue;
    if (last && !matches(cards[i], cards[*last])) continue;
    moves.push_back(i);
  }
  std::vector<int> forward(n, 0);
  for (int i : moves) {
    int deg = 0;
    for (int j = 0; j < n; ++j)
      if (j != i && (remaining_mask & bit(j)) && matches(cards[j], cards[i]))
        ++deg;
    forward[i] = deg;
  }
  std::stable_sort(moves.begin(), moves.end(),
                   [&](int a, int b) { return forward[a] < forward[b]; });
  return moves;
}

namespace {

struct Uno1Search {
  const std::vector<Card>& cards;
  const SolveOptions& opts;
  DeadSet dead;
  uint64_t nodes = 0;
  std::vector<int> stack;

  Uno1Search(const std::vector<Card>& c, const SolveOptions& o)
      : cards(c), opts(o), dead(o.memo_budget_bytes) {}

  bool dfs(uint64_t mask, int last) {
    if (++nodes > opts.node_limit)
      throw std::runtime_error("solve_uno1_exact: node limit exceeded");
    if (mask == 0) return true;
    if (dead.contains(mask, last)) return false;

    std::vector<int> moves;
    if (opts.use_heuristic) {
      moves = order_playable_moves(
          cards, mask, last < 0 ? std::nullopt : std::optional<int>(last));
    } else {
      for (int i = 0; i < static_cast<int>(cards.size()); ++i)
        if ((mask & bit(i)) && (last < 0 || matches(cards[i], cards[last])))
          moves.push_back(i);
    }
    for (int i : moves) {
      stack.push_back(i);
      if (dfs(mask & ~bit(i), i)) return true;
      stack.pop_back();
    }
    dead.insert(mask, last);
    return false;
  }
};

}  // namespace

Certificate solve_uno1_exact(const std::vector<Card>& cards,
                             const SolveOptions& opts) {
  int n = static_cast<int>(cards.size());
  if (n > kMaxOccurrences)
    throw std::invalid_argument("solve_uno1_exact: too many cards");
  Certificate cert;
  if (n == 0) {
    cert.yes = true;
    cert.sequence = PlayingSequence{};
    return cert;
  }
  Uno1Search s(cards, opts);
  uint64_t full = (uint64_t{1} << n) - 1;
  cert.yes = s.dfs(full, -1);
  cert.nodes_expanded = s.nodes;
  if (cert.yes) {
    PlayingSequence seq;
    for (int i : s.stack) seq.moves.push_back({cards[i], 1, i});
    Instance inst;
    inst.players = 1;
    inst.hands = {cards};
    for (const Card& c : cards) {
      inst.colors = std::max(inst.colors, c.color);
      inst.numbers = std::max(inst.numbers, c.number);
    }
    if (!player_one_wins(inst, seq, GameMode::Uno1))
      throw std::logic_error("solve_uno1_exact: produced witness fails check");
    cert.sequence = std::move(seq);
  }
  return cert;
}

namespace {

struct CoopSearch {
  const Instance& inst;
  const SolveOptions& opts;
  std::vector<Card> card;       // hand 1 then hand 2
  std::vector<int> player, occ;
  int n1 = 0, n = 0;
  DeadSet dead;
  uint64_t nodes = 0;
  std::vector<int> stack;

  CoopSearch(const Instance& i, const SolveOptions& o)
      : inst(i), opts(o), dead(o.memo_budget_bytes) {
    for (int p = 0; p < 2; ++p)
      for (size_t k = 0; k < inst.hands[p].size(); ++k) {
        card.push_back(inst.hands[p][k]);
        player.push_back(p + 1);
        occ.push_back(static_cast<int>(k));
      }
    n1 = static_cast<int>(inst.hands[0].size());
    n = static_cast<int>(card.size());
  }

  bool hand_mask_empty(uint64_t mask, int who) const {
    for (int i = 0; i < n; ++i)
      if (player[i] == who && (mask & bit(i))) return false;
    return true;
  }

  bool can_play(uint64_t mask, int last, int who) const {
    for (int i = 0; i < n; ++i)
      if (player[i] == who && (mask & bit(i)) &&
          (last < 0 || matches(card[i], card[last])))
        return true;
    return false;
  }

  int compelled(uint64_t mask, int last) const {
    if (last < 0)
      return can_play(mask, last, 1) ? 1 : (can_play(mask, last, 2) ? 2 : 0);
    int nxt = 3 - player[last];
    if (can_play(mask, last, nxt)) return nxt;
    if (can_play(mask, last, 3 - nxt)) return 3 - nxt;
    return 0;
  }

  bool dfs(uint64_t mask, int last) {
    if (++nodes > opts.node_limit)
      throw std::runtime_error("solve_uno2_coop: node limit exceeded");
    if (hand_mask_empty(mask, 1)) return true;   // player 1 went out first
    if (hand_mask_empty(mask, 2)) return false;  // player 2 went out first
    if (dead.contains(mask, last)) return false;

    int who = compelled(mask, last);
    if (who != 0) {
      std::vector<int> moves;
      for (int i = 0; i < n; ++i)
        if (player[i] == who && (mask & bit(i)) &&
            (last < 0 || matches(card[i], card[last])))
          moves.push_back(i);
      if (opts.use_heuristic) {
        std::vector<int> forward(n, 0);
        for (int i : moves) {
          int deg = 0;
          for (int j = 0; j < n; ++j)
            if (j != i && (mask & bit(j)) && matches(card[j], card[i])) ++deg;
          forward[i] = deg;
        }
        std::stable_sort(moves.begin(), moves.end(),
                         [&](int a, int b) { return forward[a] < forward[b]; });
      }
      for (int i : moves) {
        stack.push_back(i);
        if (dfs(mask & ~bit(i), i)) return true;
        stack.pop_back();
      }
    }
    dead.insert(mask, last);
    return false;
  }
};

}  // namespace

Certificate solve_uno2_coop(const Instance& inst, const SolveOptions& opts) {
  inst.validate();
  if (inst.players != 2)
    throw std::invalid_argument("solve_uno2_coop requires exactly 2 players");
  if (inst.total_cards() > kMaxOccurrences)
    throw std::invalid_argument("solve_uno2_coop: too many cards");

  CoopSearch s(inst, opts);
  uint64_t full = s.n == 0 ? 0 : (uint64_t{1} << s.n) - 1;
  Certificate cert;
  cert.yes = s.dfs(full, -1);
  cert.nodes_expanded = s.nodes;
  if (cert.yes) {
    PlayingSequence seq;
    for (int i : s.stack) seq.moves.push_back({s.card[i], s.player[i], s.occ[i]});
    if (!player_one_wins(inst, seq, GameMode::Coop2))
      throw std::logic_error("solve_uno2_coop: produced witness fails check");
    cert.sequence = std::move(seq);
  }
  return cert;
}

}  // namespace uno
