#include <doctest.h>

#include "helpers.hpp"
#include "uno/graph.hpp"
#include "uno/oracles.hpp"
#include "uno/reductions.hpp"
#include "uno/solver_coop.hpp"

using namespace uno;

TEST_CASE("uno1 exact solver on the nine-card fixture") {
  auto cert = solve_uno1_exact(testutil::example1_cards());
  CHECK(cert.yes);
  REQUIRE(cert.sequence.has_value());
  CHECK(cert.sequence->moves.size() == 9);
  // The known discard order is also accepted as a witness.
  Instance inst = testutil::example1_instance();
  PlayingSequence paper = parse_sequence(
      "1 1,3\n1 2,3\n1 2,4\n1 3,4\n1 3,2\n1 2,2\n1 2,3\n1 4,3\n1 4,1\n", inst);
  CHECK(player_one_wins(inst, paper, GameMode::Uno1));
}

TEST_CASE("uno1 exact solver trivialities") {
  CHECK(solve_uno1_exact({{1, 1}}).yes);
  CHECK_FALSE(solve_uno1_exact({{1, 1}, {2, 2}}).yes);
  CHECK(solve_uno1_exact({}).yes);
}

TEST_CASE("uno1 answers agree with the hamiltonian path oracle") {
  testutil::Rng rng(51);
  for (int trial = 0; trial < 200; ++trial) {
    int n = testutil::rand_int(rng, 1, 10);
    auto cards = testutil::random_cards(rng, n, testutil::rand_int(rng, 1, 4),
                                        testutil::rand_int(rng, 1, 4));
    UnoGraph g = build_uno1_graph(cards);
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < g.vertex_count(); ++u)
      for (int v : g.adj[u])
        if (u < v) es.emplace_back(u, v);
    bool hp = testutil::hp_of({n, es}).has_value();
    CHECK(solve_uno1_exact(cards).yes == hp);
  }
}

TEST_CASE("uno1 answer is invariant under transpose and hand order") {
  testutil::Rng rng(53);
  for (int trial = 0; trial < 50; ++trial) {
    auto cards = testutil::random_cards(rng, testutil::rand_int(rng, 1, 9), 3, 3);
    bool ans = solve_uno1_exact(cards).yes;
    CHECK(solve_uno1_exact(transpose(cards)).yes == ans);
    auto shuffled = cards;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(solve_uno1_exact(shuffled).yes == ans);
  }
}

TEST_CASE("move ordering heuristic") {
  std::vector<Card> cards = {{1, 1}, {1, 2}, {2, 2}, {3, 3}};
  // Only (1,2) and (2,2) are playable after (1,1)... (1,2) shares color 1,
  // (2,2) shares nothing with (1,1): check the playable set first.
  uint64_t mask = 0b1110;
  auto moves = order_playable_moves(cards, mask, 0);
  REQUIRE(moves.size() == 1);
  CHECK(moves[0] == 1);

  // With no last card everything is playable; fewest onward matches first.
  auto all = order_playable_moves(cards, 0b1111, std::nullopt);
  CHECK(all.size() == 4);
  CHECK(all.front() == 3);  // (3,3) matches nothing else
}

TEST_CASE("heuristic never changes answers and usually saves nodes") {
  testutil::Rng rng(57);
  int saved = 0, total = 0;
  for (int trial = 0; trial < 200; ++trial) {
    auto cards = testutil::random_cards(rng, testutil::rand_int(rng, 4, 10),
                                        testutil::rand_int(rng, 1, 4),
                                        testutil::rand_int(rng, 1, 4));
    SolveOptions with, without;
    without.use_heuristic = false;
    auto a = solve_uno1_exact(cards, with);
    auto b = solve_uno1_exact(cards, without);
    CHECK(a.yes == b.yes);
    ++total;
    if (a.nodes_expanded <= b.nodes_expanded) ++saved;
  }
  CHECK(saved * 100 >= total * 80);
}

TEST_CASE("coop2 solver on reduction-shaped instances") {
  // Triangle reduced: player 1 holds the vertex cards, player 2 the edges.
  // One winning line: (1,1) (1,2) (2,2) (2,3) (3,3).
  Instance inst = hp_to_uno2(SimpleGraph{3, {{0, 1}, {0, 2}, {1, 2}}});
  auto cert = solve_uno2_coop(inst);
  CHECK(cert.yes);
  REQUIRE(cert.sequence.has_value());
  CHECK(cert.sequence->moves.size() == 5);

  // First move may already empty hand 1.
  Instance quick;
  quick.players = 2;
  quick.colors = 2;
  quick.numbers = 2;
  quick.hands = {{{1, 1}}, {{2, 2}}};
  auto q = solve_uno2_coop(quick);
  CHECK(q.yes);
  CHECK(q.sequence->moves.size() == 1);

  // The game ends the moment a hand empties. On the reduced single edge
  // (a tree, outside the reduction's non-tree assumption) player 2's lone
  // card would go out first, so the answer is no.
  Instance edge;
  edge.players = 2;
  edge.colors = 2;
  edge.numbers = 2;
  edge.hands = {{{1, 1}, {2, 2}}, {{1, 2}}};
  CHECK_FALSE(solve_uno2_coop(edge).yes);

  // The 3-leaf star reduction has no Hamiltonian path, so no.
  Instance star = hp_to_uno2(testutil::star_k13());
  CHECK_FALSE(solve_uno2_coop(star).yes);
}

TEST_CASE("coop2 solver agrees with the game-tree oracle") {
  testutil::Rng rng(59);
  for (int trial = 0; trial < 150; ++trial) {
    Instance inst = testutil::random_instance2(rng, 5, 3, 3);
    CHECK(solve_uno2_coop(inst).yes ==
          uno_minimax(inst, GameMode::Coop2).player1_success);
  }
}

TEST_CASE("coop2 empty-hand conventions match the oracle") {
  Instance c1_empty;
  c1_empty.players = 2;
  c1_empty.hands = {{}, {{1, 1}}};
  CHECK(solve_uno2_coop(c1_empty).yes);

  // Player 2 starts without cards, so player 2 is already out.
  Instance c2_empty;
  c2_empty.players = 2;
  c2_empty.colors = 2;
  c2_empty.numbers = 2;
  c2_empty.hands = {{{1, 1}, {1, 2}}, {}};
  CHECK_FALSE(solve_uno2_coop(c2_empty).yes);

  Instance none;
  none.players = 2;
  none.hands = {{}, {}};
  CHECK(solve_uno2_coop(none).yes);
}

TEST_CASE("yes-certificates always verify") {
  testutil::Rng rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    auto cards = testutil::random_cards(rng, testutil::rand_int(rng, 1, 9), 3, 3);
    auto cert = solve_uno1_exact(cards);
    if (cert.yes) {
      Instance inst;
      inst.players = 1;
      inst.colors = 3;
      inst.numbers = 3;
      inst.hands = {cards};
      CHECK(player_one_wins(inst, *cert.sequence, GameMode::Uno1));
    }
    Instance inst2 = testutil::random_instance2(rng, 4, 3, 3);
    auto cert2 = solve_uno2_coop(inst2);
    if (cert2.yes)
      CHECK(player_one_wins(inst2, *cert2.sequence, GameMode::Coop2));
  }
}
