// Command-line front end: solve / verify / generate / reduce / graph / play
// over the instance, sequence and graph file formats.
//
// Exit codes: 0 = yes / player 1 wins, 1 = no / player 1 loses,
// 2 = usage or input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "uno/core.hpp"
#include "uno/dp_uno1.hpp"
#include "uno/geography.hpp"
#include "uno/graph.hpp"
#include "uno/oracles.hpp"
#include "uno/reductions.hpp"
#include "uno/solver_coop.hpp"

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int run_solve(const std::string& file, const std::string& mode_str,
              const std::string& algo, int dp_threshold, bool dump_dp) {
  auto mode = uno::mode_from_string(mode_str);
  if (!mode) throw UsageError("unknown mode: " + mode_str);
  uno::Instance inst = uno::parse_instance(read_file(file));

  if (*mode == uno::GameMode::Uno1) {
    if (inst.players != 1)
      throw UsageError("mode uno1 requires a 1-player instance");
    std::string pick = algo;
    if (pick == "auto")
      pick = inst.colors <= dp_threshold ? "dp" : "backtracking";
    if (pick == "matching")
      throw UsageError("algo matching only applies to mode uncoop2");
    if (pick == "dp") {
      auto res = uno::dp_decide(inst.hands[0], inst.colors);
      if (dump_dp)
        for (const auto& [sig, count] : res.final_table)
          std::cerr << sig.to_string() << " " << count << "\n";
      if (!res.yes) {
        std::cout << "NO\n";
        return kExitNo;
      }
      // The DP is decision-only; pull the witness from the exact solver.
      auto cert = uno::solve_uno1_exact(inst.hands[0]);
      std::cout << "YES\n# witness\n" << uno::serialize_sequence(*cert.sequence);
      return kExitYes;
    }
    auto cert = uno::solve_uno1_exact(inst.hands[0]);
    if (!cert.yes) {
      std::cout << "NO\n";
      return kExitNo;
    }
    std::cout << "YES\n# witness\n" << uno::serialize_sequence(*cert.sequence);
    return kExitYes;
  }

  if (*mode == uno::GameMode::Coop2) {
    if (algo == "dp" || algo == "matching")
      throw UsageError("algo " + algo + " does not apply to mode coop2");
    auto cert = uno::solve_uno2_coop(inst);
    if (!cert.yes) {
      std::cout << "NO\n";
      return kExitNo;
    }
    std::cout << "YES\n# witness\n" << uno::serialize_sequence(*cert.sequence);
    return kExitYes;
  }

  // uncoop2
  if (algo == "dp") throw UsageError("algo dp does not apply to mode uncoop2");
  if (inst.players != 2) throw UsageError("mode uncoop2 requires 2 players");
  if (algo == "backtracking") {
    auto v = uno::uno_minimax(inst, uno::GameMode::Uncoop2,
                              uno::OracleBudget{.max_cards = 24});
    std::cout << "PLAYER " << v.winner << " WINS\n";
    if (v.winner == 1 && !v.line.moves.empty())
      std::cout << "opening: " << uno::to_string(v.line.moves[0].card) << "\n";
    std::cout << "# principal line\n" << uno::serialize_sequence(v.line);
    return v.winner == 1 ? kExitYes : kExitNo;
  }
  auto v = uno::solve_uno2_uncoop(inst);
  std::cout << "PLAYER " << v.winner << " WINS\n";
  if (v.opening_move)
    std::cout << "opening: " << uno::to_string(*v.opening_move) << "\n";
  std::cout << "# principal line\n" << uno::serialize_sequence(v.principal_line);
  return v.winner == 1 ? kExitYes : kExitNo;
}

int run_verify(const std::string& file, const std::string& seq_file,
               const std::string& mode_str) {
  auto mode = uno::mode_from_string(mode_str);
  if (!mode) throw UsageError("unknown mode: " + mode_str);
  uno::Instance inst = uno::parse_instance(read_file(file));
  uno::PlayingSequence seq = uno::parse_sequence(read_file(seq_file), inst);
  uno::SequenceCheck check = uno::check_sequence(inst, seq, *mode);
  if (!check.structurally_valid) throw UsageError(check.diagnostic);
  std::cout << "feasible: " << (check.feasible ? "yes" : "no") << "\n";
  if (!check.feasible) {
    std::cerr << check.diagnostic << "\n";
    return kExitNo;
  }
  if (*mode == uno::GameMode::Uncoop2) {
    if (check.winner != 0)
      std::cout << "winner: player " << check.winner << "\n";
    else
      std::cout << "winner: undecided (game not over)\n";
  } else {
    std::cout << "goal: " << (check.player1_success ? "achieved" : "not achieved")
              << "\n";
  }
  return check.player1_success ? kExitYes : kExitNo;
}

int run_generate(int players, int colors, int numbers,
                 const std::string& cards_csv, uint64_t seed) {
  std::vector<int> sizes;
  std::stringstream ss(cards_csv);
  std::string tok;
  while (std::getline(ss, tok, ','))
    sizes.push_back(std::stoi(tok));
  if (static_cast<int>(sizes.size()) != players)
    throw UsageError("--cards must list one hand size per player");
  uno::Instance inst =
      uno::generate_random(players, sizes, colors, numbers, seed);
  std::cout << uno::serialize_instance(inst);
  return kExitYes;
}

int run_reduce(const std::string& graph_file, const std::string& from,
               const std::string& to, bool equal_hands,
               std::optional<int> start) {
  uno::SimpleGraph g = uno::parse_graph(read_file(graph_file));
  if (from == "hp" && to == "uno2") {
    if (auto warn = uno::hp_reduction_lint(g))
      std::cerr << "warning: " << *warn << "\n";
    uno::Instance inst = uno::hp_to_uno2(g);
    if (equal_hands) {
      if (!start) throw UsageError("--equal-hands requires --start");
      inst = uno::pad_equal_hands(inst, *start);
    }
    std::cout << uno::serialize_instance(inst);
    return kExitYes;
  }
  if (from == "hpc" && to == "uno1") {
    if (equal_hands) throw UsageError("--equal-hands only applies to hp->uno2");
    std::cout << uno::serialize_instance(uno::hpc_to_uno1_instance(g));
    return kExitYes;
  }
  throw UsageError("unsupported reduction " + from + " -> " + to);
}

int run_graph(const std::string& file, const std::string& out_format) {
  if (out_format != "dot") throw UsageError("unsupported output: " + out_format);
  uno::Instance inst = uno::parse_instance(read_file(file));
  uno::UnoGraph g;
  if (inst.players == 1)
    g = uno::build_uno1_graph(inst.hands[0]);
  else if (inst.players == 2)
    g = uno::build_uno2_graph(inst);
  else
    throw UsageError("graph export supports 1- or 2-player instances");
  std::cout << uno::export_dot(g);
  return kExitYes;
}

int run_play(const std::string& file, int human) {
  uno::Instance inst = uno::parse_instance(read_file(file));
  if (inst.players != 2) throw UsageError("play requires a 2-player instance");
  if (human != 1 && human != 2) throw UsageError("--human must be 1 or 2");

  auto pre = uno::solve_uno2_uncoop(inst);
  uno::UnoGraph g = uno::build_uno2_graph(inst);
  std::vector<bool> removed(g.vertex_count(), false);
  int n1 = static_cast<int>(inst.hands[0].size());
  int token = -1;  // last played vertex
  int last_player = 0;

  auto show_hands = [&]() {
    for (int p = 1; p <= 2; ++p) {
      std::cout << "hand " << p << ":";
      for (int v = 0; v < g.vertex_count(); ++v)
        if (!removed[v] && g.labels[v].player == p)
          std::cout << " " << uno::to_string(g.labels[v].card);
      std::cout << "\n";
    }
  };
  auto legal_moves = [&](int player) {
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (removed[v] || g.labels[v].player != player) continue;
      if (token >= 0 && !uno::matches(g.labels[v].card, g.labels[token].card))
        continue;
      out.push_back(v);
    }
    return out;
  };
  auto play_vertex = [&](int v) {
    if (token >= 0) removed[token] = true;
    token = v;
    last_player = g.labels[v].player;
  };
  auto finish = [&](int winner) {
    std::cout << "player " << winner << " wins (last to play)\n";
    std::cout << "pre-game verdict: player " << pre.winner << " wins\n";
    return winner == 1 ? kExitYes : kExitNo;
  };

  for (int mover = 1;; mover = 3 - mover) {
    auto legal = legal_moves(mover);
    if (legal.empty())
      return finish(mover == 1 ? 2 : 1);
    show_hands();
    std::cout << "last: "
              << (token >= 0 ? uno::to_string(g.labels[token].card)
                             : std::string("none"))
              << "\n";
    if (mover == human) {
      while (true) {
        std::cout << "your move (x,y or quit): " << std::flush;
        std::string line;
        if (!std::getline(std::cin, line)) {
          std::cerr << "input closed, aborting\n";
          return kExitError;
        }
        if (line == "quit") {
          std::cerr << "aborted\n";
          return kExitError;
        }
        int chosen = -1;
        try {
          uno::PlayingSequence probe = uno::parse_sequence(
              std::to_string(mover) + " " + line, inst);
          for (int v : legal)
            if (g.labels[v].card == probe.moves.at(0).card) {
              chosen = v;
              break;
            }
        } catch (const std::exception&) {
          chosen = -1;
        }
        if (chosen >= 0) {
          play_vertex(chosen);
          break;
        }
        std::cout << "illegal move; legal cards:";
        for (int v : legal) std::cout << " " << uno::to_string(g.labels[v].card);
        std::cout << "\n";
      }
    } else {
      int v;
      if (token < 0) {
        v = pre.opening_vertex ? *pre.opening_vertex : legal[0];
        if (!pre.opening_vertex) {
          int best_deg = -1;
          for (int cand = 0; cand < n1; ++cand) {
            int deg = static_cast<int>(g.adj[cand].size());
            if (deg > best_deg) {
              best_deg = deg;
              v = cand;
            }
          }
        }
      } else {
        auto mv = uno::best_move(g, removed, token);
        if (!mv) return finish(3 - mover);
        v = *mv;
      }
      std::cout << "engine (player " << mover << ") plays "
                << uno::to_string(g.labels[v].card) << "\n";
      play_vertex(v);
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Solvers and tools for mathematical UNO"};
  app.require_subcommand(1);

  std::string file, seq_file, mode = "uno1", algo = "auto";
  int dp_threshold = 3;
  bool dump_dp = false;

  auto* solve = app.add_subcommand("solve", "decide an instance");
  solve->add_option("--mode", mode, "uno1|coop2|uncoop2")->required();
  solve->add_option("--algo", algo, "auto|backtracking|dp|matching");
  solve->add_option("--dp-threshold", dp_threshold,
                    "max colors for auto to pick dp");
  solve->add_flag("--dump-dp", dump_dp, "dump the final DP table to stderr");
  solve->add_option("file", file, "instance file")->required();

  auto* verify = app.add_subcommand("verify", "check a sequence");
  verify->add_option("--mode", mode, "uno1|coop2|uncoop2")->required();
  verify->add_option("--sequence", seq_file, "sequence file")->required();
  verify->add_option("file", file, "instance file")->required();

  int players = 1, colors = 1, numbers = 1;
  std::string cards_csv;
  uint64_t seed = 0;
  auto* generate = app.add_subcommand("generate", "random instance");
  generate->add_option("--players", players)->required();
  generate->add_option("--colors", colors)->required();
  generate->add_option("--numbers", numbers)->required();
  generate->add_option("--cards", cards_csv, "hand sizes, comma separated")
      ->required();
  generate->add_option("--seed", seed)->required();

  std::string from, to;
  bool equal_hands = false;
  int start = 0;
  auto* reduce = app.add_subcommand("reduce", "graph hardness reductions");
  reduce->add_option("--from", from, "hp|hpc")->required();
  reduce->add_option("--to", to, "uno2|uno1")->required();
  reduce->add_flag("--equal-hands", equal_hands, "apply equal-hand padding");
  auto* start_opt = reduce->add_option("--start", start, "start vertex (1-based)");
  reduce->add_option("file", file, "graph file")->required();

  std::string out_format = "dot";
  auto* graph = app.add_subcommand("graph", "export the match graph");
  graph->add_option("--out", out_format, "dot")->required();
  graph->add_option("file", file, "instance file")->required();

  int human = 1;
  auto* play = app.add_subcommand("play", "interactive uncooperative game");
  play->add_option("--human", human, "1|2")->required();
  play->add_option("file", file, "instance file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (solve->parsed()) return run_solve(file, mode, algo, dp_threshold, dump_dp);
    if (verify->parsed()) return run_verify(file, seq_file, mode);
    if (generate->parsed())
      return run_generate(players, colors, numbers, cards_csv, seed);
    if (reduce->parsed())
      return run_reduce(file, from, to, equal_hands,
                        start_opt->count() ? std::optional<int>(start)
                                           : std::nullopt);
    if (graph->parsed()) return run_graph(file, out_format);
    if (play->parsed()) return run_play(file, human);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
