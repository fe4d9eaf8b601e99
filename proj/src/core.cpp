#include "uno/core.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <sstream>

namespace uno {

std::string to_string(const Card& c) {
  return std::to_string(c.color) + "," + std::to_string(c.number);
}

std::string to_string(GameMode mode) {
  switch (mode) {
    case GameMode::Uno1: return "uno1";
    case GameMode::Coop2: return "coop2";
    case GameMode::Uncoop2: return "uncoop2";
  }
  return "?";
}

std::optional<GameMode> mode_from_string(const std::string& s) {
  if (s == "uno1") return GameMode::Uno1;
  if (s == "coop2") return GameMode::Coop2;
  if (s == "uncoop2") return GameMode::Uncoop2;
  return std::nullopt;
}

int Instance::total_cards() const {
  int n = 0;
  for (const auto& h : hands) n += static_cast<int>(h.size());
  return n;
}

void Instance::validate() const {
  if (players < 1) throw std::invalid_argument("players must be >= 1");
  if (colors < 1) throw std::invalid_argument("colors must be >= 1");
  if (numbers < 1) throw std::invalid_argument("numbers must be >= 1");
  if (static_cast<int>(hands.size()) != players)
    throw std::invalid_argument("hand count does not equal player count");
  for (const auto& h : hands)
    for (const Card& c : h) {
      if (c.color < 1 || c.color > colors)
        throw std::invalid_argument("card color out of range: " + to_string(c));
      if (c.number < 1 || c.number > numbers)
        throw std::invalid_argument("card number out of range: " + to_string(c));
    }
}

namespace {

struct SeqState {
  const Instance& inst;
  std::vector<std::vector<char>> consumed;
  std::vector<int> left;  // unconsumed cards per hand

  explicit SeqState(const Instance& i) : inst(i), left(i.players) {
    consumed.resize(i.hands.size());
    for (size_t p = 0; p < i.hands.size(); ++p) {
      consumed[p].assign(i.hands[p].size(), 0);
      left[p] = static_cast<int>(i.hands[p].size());
    }
  }

  // A player can play when holding any unconsumed card that matches `last`
  // (or any card at all before the first move).
  bool can_play(int player, const std::optional<Card>& last) const {
    const auto& hand = inst.hands[player - 1];
    for (size_t k = 0; k < hand.size(); ++k) {
      if (consumed[player - 1][k]) continue;
      if (!last || matches(hand[k], *last)) return true;
    }
    return false;
  }

  void consume(const Move& m) {
    consumed[m.player - 1][m.occurrence] = 1;
    --left[m.player - 1];
  }
};

std::string move_err(size_t idx, const std::string& what) {
  return "move " + std::to_string(idx + 1) + ": " + what;
}

// Turn owner in Coop2 given who played last: the other player if they can
// play, else the same player again (skip rule), else nobody (game stuck).
int coop2_compelled(const SeqState& st, const std::optional<Card>& last,
                    int last_player) {
  if (!last) return st.can_play(1, last) ? 1 : (st.can_play(2, last) ? 2 : 0);
  int nxt = 3 - last_player;
  if (st.can_play(nxt, last)) return nxt;
  if (st.can_play(last_player, last)) return last_player;
  return 0;
}

}  // namespace

SequenceCheck check_sequence(const Instance& inst, const PlayingSequence& seq,
                             GameMode mode) {
  inst.validate();
  SequenceCheck out;
  if (mode != GameMode::Uno1 && inst.players != 2) {
    out.structurally_valid = false;
    out.feasible = false;
    out.diagnostic = to_string(mode) + " requires exactly 2 players";
    return out;
  }

  SeqState st(inst);
  std::optional<Card> last;
  int last_player = 0;
  // Move index (1-based) at which each hand empties; 0 = empty from the
  // start, INT_MAX = never within this sequence.
  constexpr int kNever = std::numeric_limits<int>::max();
  int t1 = inst.hands[0].empty() ? 0 : kNever;
  int t2 = inst.players >= 2 ? (inst.hands[1].empty() ? 0 : kNever) : kNever;

  for (size_t j = 0; j < seq.moves.size(); ++j) {
    const Move& m = seq.moves[j];
    if (m.player < 1 || m.player > inst.players) {
      out.structurally_valid = false;
      out.feasible = false;
      out.diagnostic = move_err(j, "player index out of range");
      return out;
    }
    const auto& hand = inst.hands[m.player - 1];
    if (m.occurrence < 0 || m.occurrence >= static_cast<int>(hand.size()) ||
        hand[m.occurrence] != m.card) {
      out.structurally_valid = false;
      out.feasible = false;
      out.diagnostic = move_err(j, "card " + to_string(m.card) +
                                       " is not occurrence " +
                                       std::to_string(m.occurrence) +
                                       " of hand " + std::to_string(m.player));
      return out;
    }
    if (st.consumed[m.player - 1][m.occurrence]) {
      out.structurally_valid = false;
      out.feasible = false;
      out.diagnostic = move_err(j, "occurrence already consumed");
      return out;
    }

    if (out.feasible) {
      if (last && !matches(m.card, *last)) {
        out.feasible = false;
        out.diagnostic = move_err(j, to_string(m.card) + " does not match " +
                                         to_string(*last));
      }
      switch (mode) {
        case GameMode::Uno1:
          if (m.player != 1) {
            out.feasible = false;
            out.diagnostic = move_err(j, "uno1 moves must be by player 1");
          }
          break;
        case GameMode::Uncoop2: {
          int expect = 1 + static_cast<int>(j % 2);
          if (m.player != expect) {
            out.feasible = false;
            out.diagnostic =
                move_err(j, "player " + std::to_string(expect) + " must move");
          }
          break;
        }
        case GameMode::Coop2: {
          int cp = coop2_compelled(st, last, last_player);
          if (cp == 0) {
            out.feasible = false;
            out.diagnostic = move_err(j, "no player can play; game is over");
          } else if (m.player != cp) {
            out.feasible = false;
            out.diagnostic =
                move_err(j, "player " + std::to_string(cp) +
                                " is compelled to play (skip rule)");
          }
          break;
        }
      }
    }

    st.consume(m);
    last = m.card;
    last_player = m.player;
    if (st.left[0] == 0 && t1 == kNever) t1 = static_cast<int>(j + 1);
    if (inst.players >= 2 && st.left[1] == 0 && t2 == kNever)
      t2 = static_cast<int>(j + 1);
  }

  if (!out.feasible) return out;

  switch (mode) {
    case GameMode::Uno1:
      out.maximal = !st.can_play(1, last);
      out.player1_success = (st.left[0] == 0);
      break;
    case GameMode::Coop2: {
      out.maximal = (coop2_compelled(st, last, last_player) == 0);
      // The game ends the moment a hand empties: player 1 must finish
      // strictly first. Both hands empty at deal time counts as a success.
      out.player1_success = (t1 == 0 && t2 == 0) || t1 < t2;
      break;
    }
    case GameMode::Uncoop2: {
      int to_move = seq.moves.empty() ? 1 : 3 - last_player;
      out.maximal = !st.can_play(to_move, last);
      if (out.maximal) {
        out.winner = seq.moves.empty() ? 2 : last_player;
        out.player1_success = (out.winner == 1);
      } else {
        out.diagnostic = "game is not over (a legal move remains)";
      }
      break;
    }
  }
  return out;
}

bool is_feasible(const Instance& inst, const PlayingSequence& seq, GameMode mode) {
  return check_sequence(inst, seq, mode).feasible;
}

bool player_one_wins(const Instance& inst, const PlayingSequence& seq,
                     GameMode mode) {
  SequenceCheck c = check_sequence(inst, seq, mode);
  if (!c.feasible)
    throw std::invalid_argument("player_one_wins on infeasible sequence: " +
                                c.diagnostic);
  return c.player1_success;
}

Instance transpose(const Instance& inst) {
  Instance out = inst;
  std::swap(out.colors, out.numbers);
  for (auto& h : out.hands)
    for (Card& c : h) std::swap(c.color, c.number);
  return out;
}

std::vector<Card> transpose(const std::vector<Card>& cards) {
  std::vector<Card> out = cards;
  for (Card& c : out) std::swap(c.color, c.number);
  return out;
}

ParseError::ParseError(int line_no, const std::string& msg)
    : std::runtime_error("line " + std::to_string(line_no) + ": " + msg),
      line(line_no) {}

namespace {

// Lines with their 1-based numbers, comments stripped, blanks dropped.
std::vector<std::pair<int, std::string>> logical_lines(const std::string& text) {
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

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

int parse_int(const std::string& tok, int line, const std::string& what) {
  size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError(line, "expected integer for " + what + ", got '" + tok + "'");
  }
  if (pos != tok.size())
    throw ParseError(line, "expected integer for " + what + ", got '" + tok + "'");
  return v;
}

Card parse_card_token(const std::string& tok, int line) {
  auto comma = tok.find(',');
  if (comma == std::string::npos || comma == 0 || comma + 1 >= tok.size())
    throw ParseError(line, "expected card '<x>,<y>', got '" + tok + "'");
  Card c;
  c.color = parse_int(tok.substr(0, comma), line, "card color");
  c.number = parse_int(tok.substr(comma + 1), line, "card number");
  return c;
}

int expect_kv(const std::vector<std::pair<int, std::string>>& lines, size_t idx,
              const std::string& key) {
  if (idx >= lines.size())
    throw ParseError(lines.empty() ? 1 : lines.back().first,
                     "missing '" + key + "' line");
  auto [no, line] = lines[idx];
  auto toks = split_ws(line);
  if (toks.size() != 2 || toks[0] != key)
    throw ParseError(no, "expected '" + key + " <value>', got '" + line + "'");
  return parse_int(toks[1], no, key);
}

}  // namespace

Instance parse_instance(const std::string& text) {
  auto lines = logical_lines(text);
  if (lines.empty()) throw ParseError(1, "empty instance file");
  if (lines[0].second != "uno 1")
    throw ParseError(lines[0].first, "expected header 'uno 1'");

  Instance inst;
  inst.players = expect_kv(lines, 1, "players");
  inst.colors = expect_kv(lines, 2, "colors");
  inst.numbers = expect_kv(lines, 3, "numbers");
  if (inst.players < 1) throw ParseError(lines[1].first, "players must be >= 1");
  if (inst.colors < 1) throw ParseError(lines[2].first, "colors must be >= 1");
  if (inst.numbers < 1) throw ParseError(lines[3].first, "numbers must be >= 1");

  size_t idx = 4;
  for (int p = 1; p <= inst.players; ++p, ++idx) {
    if (idx >= lines.size())
      throw ParseError(lines.back().first,
                       "wrong hand count: missing hand " + std::to_string(p));
    auto [no, line] = lines[idx];
    auto colon = line.find(':');
    if (colon == std::string::npos)
      throw ParseError(no, "expected 'hand " + std::to_string(p) + ": ...'");
    auto head = split_ws(line.substr(0, colon));
    if (head.size() != 2 || head[0] != "hand" ||
        parse_int(head[1], no, "hand index") != p)
      throw ParseError(no, "expected 'hand " + std::to_string(p) + ":'");
    std::vector<Card> hand;
    for (const auto& tok : split_ws(line.substr(colon + 1))) {
      Card c = parse_card_token(tok, no);
      if (c.color < 1 || c.color > inst.colors)
        throw ParseError(no, "color out of range: " + to_string(c));
      if (c.number < 1 || c.number > inst.numbers)
        throw ParseError(no, "number out of range: " + to_string(c));
      hand.push_back(c);
    }
    inst.hands.push_back(std::move(hand));
  }
  if (idx < lines.size())
    throw ParseError(lines[idx].first,
                     "wrong hand count: unexpected trailing content");
  inst.validate();
  return inst;
}

std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  out << "uno 1\n";
  out << "players " << inst.players << "\n";
  out << "colors " << inst.colors << "\n";
  out << "numbers " << inst.numbers << "\n";
  for (size_t p = 0; p < inst.hands.size(); ++p) {
    out << "hand " << (p + 1) << ":";
    for (const Card& c : inst.hands[p]) out << " " << to_string(c);
    out << "\n";
  }
  return out.str();
}

PlayingSequence parse_sequence(const std::string& text, const Instance& inst) {
  PlayingSequence seq;
  std::vector<std::vector<char>> used(inst.hands.size());
  for (size_t p = 0; p < inst.hands.size(); ++p)
    used[p].assign(inst.hands[p].size(), 0);

  for (auto& [no, line] : logical_lines(text)) {
    auto toks = split_ws(line);
    if (toks.size() != 2)
      throw ParseError(no, "expected '<player> <x>,<y>', got '" + line + "'");
    Move m;
    m.player = parse_int(toks[0], no, "player");
    if (m.player < 1 || m.player > inst.players)
      throw ParseError(no, "player index out of range");
    m.card = parse_card_token(toks[1], no);
    const auto& hand = inst.hands[m.player - 1];
    int occ = -1;
    for (size_t k = 0; k < hand.size(); ++k)
      if (!used[m.player - 1][k] && hand[k] == m.card) {
        occ = static_cast<int>(k);
        break;
      }
    if (occ < 0)
      throw ParseError(no, "card " + to_string(m.card) + " not in hand " +
                               std::to_string(m.player) +
                               " (or already consumed)");
    used[m.player - 1][occ] = 1;
    m.occurrence = occ;
    seq.moves.push_back(m);
  }
  return seq;
}

std::string serialize_sequence(const PlayingSequence& seq) {
  std::ostringstream out;
  for (const Move& m : seq.moves)
    out << m.player << " " << to_string(m.card) << "\n";
  return out.str();
}

Instance generate_random(int players, const std::vector<int>& hand_sizes,
                         int colors, int numbers, uint64_t seed) {
  if (players < 1 || colors < 1 || numbers < 1)
    throw std::invalid_argument("generate_random: parameters must be >= 1");
  if (static_cast<int>(hand_sizes.size()) != players)
    throw std::invalid_argument("generate_random: need one hand size per player");
  std::mt19937_64 rng(seed);
  Instance inst;
  inst.players = players;
  inst.colors = colors;
  inst.numbers = numbers;
  for (int p = 0; p < players; ++p) {
    if (hand_sizes[p] < 0)
      throw std::invalid_argument("generate_random: negative hand size");
    std::vector<Card> hand;
    hand.reserve(hand_sizes[p]);
    for (int k = 0; k < hand_sizes[p]; ++k) {
      Card c;
      c.color = 1 + static_cast<int>(rng() % static_cast<uint64_t>(colors));
      c.number = 1 + static_cast<int>(rng() % static_cast<uint64_t>(numbers));
      hand.push_back(c);
    }
    inst.hands.push_back(std::move(hand));
  }
  inst.validate();
  return inst;
}

}  // namespace uno
