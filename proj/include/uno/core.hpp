#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace uno {

// A card is a (color, number) pair, both 1-based. Color ranges over 1..c and
// number over 1..b of the enclosing instance.
struct Card {
  int color = 0;
  int number = 0;
  friend bool operator==(const Card&, const Card&) = default;
  friend auto operator<=>(const Card&, const Card&) = default;
};

std::string to_string(const Card& c);  // "x,y"

// Two cards match when they share a color or a number. Symmetric.
inline bool matches(const Card& t, const Card& u) {
  return t.color == u.color || t.number == u.number;
}

// A dealt game: p players, c colors, b numbers, one card multiset per player.
// Hands keep input order; duplicates are distinct occurrences.
struct Instance {
  int players = 1;
  int colors = 1;
  int numbers = 1;
  std::vector<std::vector<Card>> hands;

  int total_cards() const;
  void validate() const;  // throws std::invalid_argument on a broken invariant
};

enum class GameMode { Uno1, Coop2, Uncoop2 };

std::string to_string(GameMode mode);
std::optional<GameMode> mode_from_string(const std::string& s);

// One discard. `occurrence` pins which multiset occurrence of the card in
// hands[player-1] is consumed, so duplicate cards stay distinguishable.
struct Move {
  Card card;
  int player = 1;      // 1-based
  int occurrence = 0;  // index into hands[player-1]
  friend bool operator==(const Move&, const Move&) = default;
};

struct PlayingSequence {
  std::vector<Move> moves;
};

// Full legality report for a sequence under a mode.
//
// structurally_valid: player indices in range, every occurrence exists and is
//   consumed at most once. A structural break also clears `feasible`.
// feasible: consecutive cards match and the turn discipline of the mode holds
//   (Uno1: every move by player 1; Coop2: compelled-player alternation with
//   skips; Uncoop2: strict alternation starting with player 1).
// maximal: no legal continuation exists after the last move.
// player1_success: the mode's goal for player 1 (Uno1/Coop2: hand 1 emptied,
//   for Coop2 strictly before hand 2 would be; Uncoop2: sequence is maximal
//   and player 1 made the last move).
// winner: Uncoop2 only; 1 or 2 when maximal, 0 when the game is unfinished.
struct SequenceCheck {
  bool structurally_valid = true;
  bool feasible = true;
  bool maximal = false;
  bool player1_success = false;
  int winner = 0;
  std::string diagnostic;
};

SequenceCheck check_sequence(const Instance& inst, const PlayingSequence& seq,
                             GameMode mode);
bool is_feasible(const Instance& inst, const PlayingSequence& seq, GameMode mode);
// Precondition: the sequence is feasible (throws std::invalid_argument otherwise).
bool player_one_wins(const Instance& inst, const PlayingSequence& seq, GameMode mode);

// Swap the roles of colors and numbers: every (x,y) becomes (y,x), c and b swap.
Instance transpose(const Instance& inst);
std::vector<Card> transpose(const std::vector<Card>& cards);

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_no, const std::string& msg);
};

// Instance file format (line-oriented, '#' comments, blank lines ignored):
//   uno 1
//   players <p>
//   colors <c>
//   numbers <b>
//   hand <i>: <x>,<y> <x>,<y> ...     (exactly p lines, i = 1..p in order)
Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& inst);

// Sequence file format: one move per line, "<player> <x>,<y>".
// Occurrences are resolved in file order: each move consumes the lowest
// unconsumed occurrence of that card in the named hand.
PlayingSequence parse_sequence(const std::string& text, const Instance& inst);
std::string serialize_sequence(const PlayingSequence& seq);

// Deterministic for a fixed seed; cards drawn uniformly with replacement
// from [1..colors] x [1..numbers].
Instance generate_random(int players, const std::vector<int>& hand_sizes,
                         int colors, int numbers, uint64_t seed);

}  // namespace uno
