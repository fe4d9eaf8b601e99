#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "helpers.hpp"
#include "uno/graph.hpp"

using namespace uno;
using testutil::example1_cards;

TEST_CASE("uno1 graph of the nine-card fixture") {
  auto cards = example1_cards();
  UnoGraph g = build_uno1_graph(cards);
  CHECK(g.vertex_count() == 9);

  // Degrees must equal a direct pairwise match scan.
  for (int i = 0; i < 9; ++i) {
    int expect = 0;
    for (int j = 0; j < 9; ++j)
      if (i != j && matches(cards[i], cards[j])) ++expect;
    CHECK(static_cast<int>(g.adj[i].size()) == expect);
  }
  // (4,1) matches only (4,3).
  int v41 = -1;
  for (int i = 0; i < 9; ++i)
    if (cards[i] == Card{4, 1}) v41 = i;
  REQUIRE(v41 >= 0);
  CHECK(g.adj[v41].size() == 1);
  CHECK(g.labels[g.adj[v41][0]].card == Card{4, 3});
}

TEST_CASE("single card and duplicate cards") {
  UnoGraph one = build_uno1_graph({{1, 1}});
  CHECK(one.vertex_count() == 1);
  CHECK(one.edge_count() == 0);

  UnoGraph dup = build_uno1_graph({{2, 3}, {2, 3}});
  CHECK(dup.vertex_count() == 2);
  CHECK(dup.edge_count() == 1);
}

TEST_CASE("fixed color or fixed number induces a clique") {
  testutil::Rng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    auto cards = testutil::random_cards(rng, 8, 3, 3);
    UnoGraph g = build_uno1_graph(cards);
    for (int i = 0; i < 8; ++i)
      for (int j = i + 1; j < 8; ++j) {
        if (cards[i].color == cards[j].color) CHECK(g.has_edge(i, j));
        if (cards[i].number == cards[j].number) CHECK(g.has_edge(i, j));
      }
  }
}

TEST_CASE("uno2 graph edges only cross hands and form a bipartition") {
  Instance inst;
  inst.players = 2;
  inst.colors = 2;
  inst.numbers = 2;
  inst.hands = {{{1, 1}, {2, 2}}, {{1, 2}}};
  UnoGraph g = build_uno2_graph(inst);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(0, 2));  // (1,1)-(1,2)
  CHECK(g.has_edge(1, 2));  // (2,2)-(1,2)
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v : g.adj[u])
      CHECK(g.labels[u].player != g.labels[v].player);

  auto part = is_bipartite(g);
  REQUIRE(part.bipartite);
  for (int v = 0; v < g.vertex_count(); ++v)
    CHECK(part.side[v] == g.labels[v].player - 1);

  Instance one;
  one.players = 1;
  one.hands = {{}};
  CHECK_THROWS_AS(build_uno2_graph(one), std::invalid_argument);
}

TEST_CASE("hands without cross matches give an edgeless bipartite graph") {
  Instance inst;
  inst.players = 2;
  inst.colors = 4;
  inst.numbers = 4;
  inst.hands = {{{1, 1}, {2, 2}}, {{3, 3}, {4, 4}}};
  UnoGraph g = build_uno2_graph(inst);
  CHECK(g.edge_count() == 0);
  CHECK(is_bipartite(g).bipartite);
}

TEST_CASE("incidence bigraph counts") {
  auto cards = example1_cards();
  Bigraph bg = incidence_bigraph(cards);
  CHECK(bg.left_names.size() == 4);
  CHECK(bg.right_names.size() == 4);
  CHECK(bg.edges.size() == 9);

  Bigraph single = incidence_bigraph({{1, 1}});
  CHECK(single.left_names.size() == 1);
  CHECK(single.right_names.size() == 1);
  CHECK(single.edges.size() == 1);

  Bigraph dup = incidence_bigraph({{2, 3}, {2, 3}});
  CHECK(dup.edges.size() == 2);
  CHECK(dup.edges[0] == dup.edges[1]);  // parallel edges kept
}

TEST_CASE("line graph basics") {
  // A single edge contracts to a single vertex.
  Bigraph single;
  single.left_names = {1};
  single.right_names = {1};
  single.edges = {{0, 0}};
  CHECK(line_graph(single).vertex_count() == 1);

  // A 3-edge star becomes a triangle.
  Bigraph star;
  star.left_names = {1};
  star.right_names = {1, 2, 3};
  star.edges = {{0, 0}, {0, 1}, {0, 2}};
  UnoGraph lg = line_graph(star);
  CHECK(lg.vertex_count() == 3);
  CHECK(lg.edge_count() == 3);

  // Parallel edges are adjacent in the line graph.
  Bigraph par;
  par.left_names = {2};
  par.right_names = {3};
  par.edges = {{0, 0}, {0, 0}};
  CHECK(line_graph(par).edge_count() == 1);
}

TEST_CASE("line graph of the incidence bigraph is the uno1 graph") {
  testutil::Rng rng(29);
  auto check_one = [&](const std::vector<Card>& cards) {
    UnoGraph direct = build_uno1_graph(cards);
    UnoGraph via = line_graph(incidence_bigraph(cards));
    REQUIRE(direct.vertex_count() == via.vertex_count());
    CHECK(direct.adj == via.adj);  // same construction order: equal outright
    // And again as unlabeled graphs after a random relabel.
    int n = via.vertex_count();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int v : via.adj[u])
        if (u < v) edges.emplace_back(perm[u], perm[v]);
    UnoGraph shuffled = make_graph(n, edges);
    CHECK(isomorphic(direct, shuffled));
  };
  check_one(example1_cards());
  for (int trial = 0; trial < 30; ++trial)
    check_one(testutil::random_cards(rng, testutil::rand_int(rng, 1, 10), 3, 4));
}

TEST_CASE("line graphs of random bipartite multigraphs are uno1 graphs") {
  testutil::Rng rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    Bigraph bg;
    int a = testutil::rand_int(rng, 1, 4), b = testutil::rand_int(rng, 1, 4);
    for (int i = 0; i < a; ++i) bg.left_names.push_back(i + 1);
    for (int j = 0; j < b; ++j) bg.right_names.push_back(j + 1);
    int m = testutil::rand_int(rng, 1, 10);
    for (int e = 0; e < m; ++e)
      bg.edges.emplace_back(testutil::rand_int(rng, 0, a - 1),
                            testutil::rand_int(rng, 0, b - 1));
    // Edge-derived cards reproduce the line graph as a uno1 graph.
    std::vector<Card> cards;
    for (auto [li, ri] : bg.edges)
      cards.push_back({bg.left_names[li], bg.right_names[ri]});
    CHECK(isomorphic(line_graph(bg), build_uno1_graph(cards)));
  }
}

TEST_CASE("odd cycles are caught with a witness") {
  UnoGraph tri = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
  auto res = is_bipartite(tri);
  CHECK_FALSE(res.bipartite);
  CHECK(res.odd_cycle.size() == 3);

  UnoGraph empty = make_graph(0, {});
  CHECK(is_bipartite(empty).bipartite);
}

TEST_CASE("dot export is deterministic and well formed") {
  UnoGraph one = build_uno1_graph({{1, 2}});
  std::string dot = export_dot(one);
  CHECK(dot == "graph uno {\n  p1_c1n2_0;\n}\n");

  auto cards = example1_cards();
  UnoGraph g = build_uno1_graph(cards);
  std::string a = export_dot(g);
  std::string b = export_dot(build_uno1_graph(cards));
  CHECK(a == b);

  // Re-parse: count node and edge statements.
  std::istringstream in(a);
  std::string line;
  int nodes = 0, edges = 0;
  while (std::getline(in, line)) {
    if (line.find("--") != std::string::npos) ++edges;
    else if (line.find(';') != std::string::npos) ++nodes;
  }
  CHECK(nodes == g.vertex_count());
  CHECK(edges == static_cast<int>(g.edge_count()));

  // Duplicate cards get distinct occurrence suffixes.
  std::string dup = export_dot(build_uno1_graph({{2, 3}, {2, 3}}));
  CHECK(dup.find("p1_c2n3_0") != std::string::npos);
  CHECK(dup.find("p1_c2n3_1") != std::string::npos);
}

TEST_CASE("canonical form distinguishes and identifies small graphs") {
  UnoGraph path = make_graph(3, {{0, 1}, {1, 2}});
  UnoGraph path_relabeled = make_graph(3, {{2, 1}, {0, 1}});
  UnoGraph tri = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(canonical_form(path) == canonical_form(path_relabeled));
  CHECK(canonical_form(path) != canonical_form(tri));
  CHECK(isomorphic(path, path_relabeled));
  CHECK_FALSE(isomorphic(path, tri));

  // Complete and empty graphs exercise the homogeneous shortcut.
  std::vector<std::pair<int, int>> kedges;
  for (int i = 0; i < 12; ++i)
    for (int j = i + 1; j < 12; ++j) kedges.emplace_back(i, j);
  UnoGraph k12 = make_graph(12, kedges);
  UnoGraph k12b = make_graph(12, kedges);
  CHECK(canonical_form(k12) == canonical_form(k12b));
  UnoGraph e12 = make_graph(12, {});
  CHECK_FALSE(isomorphic(k12, e12));

  // C6 vs two triangles: same degree sequence, not isomorphic.
  UnoGraph c6 = make_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
  UnoGraph tt = make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK_FALSE(isomorphic(c6, tt));
}

TEST_CASE("canonical form is invariant under random relabeling") {
  testutil::Rng rng(37);
  for (int trial = 0; trial < 40; ++trial) {
    int n = testutil::rand_int(rng, 1, 9);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (testutil::rand_int(rng, 0, 1)) edges.emplace_back(i, j);
    UnoGraph g = make_graph(n, edges);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::pair<int, int>> redges;
    for (auto [u, v] : edges) redges.emplace_back(perm[u], perm[v]);
    UnoGraph h = make_graph(n, redges);
    CHECK(canonical_form(g) == canonical_form(h));
  }
}
