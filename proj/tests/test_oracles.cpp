#include <doctest.h>

#include "helpers.hpp"
#include "uno/graph.hpp"
#include "uno/oracles.hpp"

using namespace uno;

TEST_CASE("hamiltonian path on tiny graphs") {
  SimpleGraph k3{3, {{0, 1}, {0, 2}, {1, 2}}};
  auto p = testutil::hp_of(k3);
  REQUIRE(p.has_value());
  CHECK(p->size() == 3);

  // A 3-leaf star has none: two leaves would need the center twice.
  CHECK_FALSE(testutil::hp_of(testutil::star_k13()).has_value());

  SimpleGraph empty{0, {}};
  CHECK(testutil::hp_of(empty).has_value());
}

TEST_CASE("fixed-start search honors the start vertex") {
  // Path graph 0-1-2: a Hamiltonian path from 1 does not exist.
  SimpleGraph path{3, {{0, 1}, {1, 2}}};
  CHECK(testutil::hp_of(path, 0).has_value());
  CHECK(testutil::hp_of(path, 2).has_value());
  CHECK_FALSE(testutil::hp_of(path, 1).has_value());
  auto p = testutil::hp_of(path, 2);
  CHECK(p->front() == 2);
}

TEST_CASE("budget violations throw") {
  SimpleGraph big{30, {}};
  CHECK_THROWS_AS(testutil::hp_of(big), BudgetExceeded);
}

TEST_CASE("uncoop2 minimax on forced lines") {
  Instance inst;
  inst.players = 2;
  inst.colors = 2;
  inst.numbers = 2;
  inst.hands = {{{1, 1}}, {{1, 2}}};
  auto v = uno_minimax(inst, GameMode::Uncoop2);
  CHECK(v.winner == 2);
  CHECK_FALSE(v.player1_success);
  REQUIRE(v.line.moves.size() == 2);
  CHECK(check_sequence(inst, v.line, GameMode::Uncoop2).winner == 2);

  inst.hands = {{{1, 1}}, {{2, 2}}};
  auto w = uno_minimax(inst, GameMode::Uncoop2);
  CHECK(w.winner == 1);
  CHECK(w.line.moves.size() == 1);
}

TEST_CASE("uncoop2 minimax principal line is maximal and consistent") {
  testutil::Rng rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    Instance inst = testutil::random_instance2(rng, 4, 3, 3);
    auto v = uno_minimax(inst, GameMode::Uncoop2);
    auto check = check_sequence(inst, v.line, GameMode::Uncoop2);
    REQUIRE(check.feasible);
    CHECK(check.maximal);
    CHECK(check.winner == v.winner);
  }
}

TEST_CASE("coop2 minimax matches hand-checked cases") {
  // Triangle reduction: 3 vertex cards vs 3 edge cards, winnable.
  Instance inst;
  inst.players = 2;
  inst.colors = 3;
  inst.numbers = 3;
  inst.hands = {{{1, 1}, {2, 2}, {3, 3}}, {{1, 2}, {1, 3}, {2, 3}}};
  auto v = uno_minimax(inst, GameMode::Coop2);
  CHECK(v.player1_success);
  CHECK(player_one_wins(inst, v.line, GameMode::Coop2));

  // Player 2 never has to play; player 1 just discards and goes out first.
  Instance quick;
  quick.players = 2;
  quick.colors = 2;
  quick.numbers = 2;
  quick.hands = {{{1, 1}}, {{2, 2}}};
  auto w = uno_minimax(quick, GameMode::Coop2);
  CHECK(w.player1_success);
  CHECK(w.line.moves.size() == 1);

  // Forcing player 2's lone card out first loses the game for player 1.
  Instance edge;
  edge.players = 2;
  edge.colors = 2;
  edge.numbers = 2;
  edge.hands = {{{1, 1}, {2, 2}}, {{1, 2}}};
  CHECK_FALSE(uno_minimax(edge, GameMode::Coop2).player1_success);
}

TEST_CASE("coop2 conventions for empty hands") {
  Instance both_empty;
  both_empty.players = 2;
  both_empty.hands = {{}, {}};
  CHECK(uno_minimax(both_empty, GameMode::Coop2).player1_success);

  Instance c1_empty;
  c1_empty.players = 2;
  c1_empty.hands = {{}, {{1, 1}}};
  CHECK(uno_minimax(c1_empty, GameMode::Coop2).player1_success);

  // Player 2 empty from the start counts as player 2 already out.
  Instance c2_empty;
  c2_empty.players = 2;
  c2_empty.colors = 2;
  c2_empty.numbers = 2;
  c2_empty.hands = {{{1, 1}, {1, 2}}, {}};
  CHECK_FALSE(uno_minimax(c2_empty, GameMode::Coop2).player1_success);

  Instance c1_empty_uncoop;
  c1_empty_uncoop.players = 2;
  c1_empty_uncoop.hands = {{}, {{1, 1}}};
  CHECK(uno_minimax(c1_empty_uncoop, GameMode::Uncoop2).winner == 2);
}

TEST_CASE("uno1 minimax agrees with hamiltonian path via the match graph") {
  testutil::Rng rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    int n = testutil::rand_int(rng, 1, 8);
    auto cards = testutil::random_cards(rng, n, 3, 3);
    Instance inst;
    inst.players = 1;
    inst.colors = 3;
    inst.numbers = 3;
    inst.hands = {cards};
    UnoGraph g = build_uno1_graph(cards);
    bool hp = testutil::hp_of({g.vertex_count(), [&] {
                                 std::vector<std::pair<int, int>> es;
                                 for (int u = 0; u < g.vertex_count(); ++u)
                                   for (int v : g.adj[u])
                                     if (u < v) es.emplace_back(u, v);
                                 return es;
                               }()})
                  .has_value();
    CHECK(uno_minimax(inst, GameMode::Uno1).player1_success == hp);
  }
}

TEST_CASE("minimax is deterministic") {
  testutil::Rng rng(47);
  Instance inst = testutil::random_instance2(rng, 5, 3, 3);
  auto a = uno_minimax(inst, GameMode::Uncoop2);
  auto b = uno_minimax(inst, GameMode::Uncoop2);
  CHECK(a.winner == b.winner);
  REQUIRE(a.line.moves.size() == b.line.moves.size());
  for (size_t i = 0; i < a.line.moves.size(); ++i)
    CHECK(a.line.moves[i] == b.line.moves[i]);
}

TEST_CASE("card budget is enforced") {
  Instance inst;
  inst.players = 2;
  inst.colors = 1;
  inst.numbers = 1;
  inst.hands = {std::vector<Card>(8, {1, 1}), std::vector<Card>(8, {1, 1})};
  CHECK_THROWS_AS(uno_minimax(inst, GameMode::Uncoop2, OracleBudget{.max_cards = 12}),
                  BudgetExceeded);
}
