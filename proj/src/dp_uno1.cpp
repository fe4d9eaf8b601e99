#include "uno/dp_uno1.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace uno {

OrderedPoints order_points(const std::vector<Card>& cards) {
  OrderedPoints out;
  out.original_index.resize(cards.size());
  std::iota(out.original_index.begin(), out.original_index.end(), 0);
  std::stable_sort(out.original_index.begin(), out.original_index.end(),
                   [&](int a, int b) {
                     if (cards[a].number != cards[b].number)
                       return cards[a].number < cards[b].number;
                     return cards[a].color < cards[b].color;
                   });
  out.points.reserve(cards.size());
  for (int i : out.original_index) out.points.push_back(cards[i]);
  return out;
}

namespace {

int tri_index(int c, int i, int j) {
  if (i > j) std::swap(i, j);
  return i * c - i * (i - 1) / 2 + (j - i);
}

}  // namespace

Signature Signature::zero(int colors) {
  Signature s;
  s.colors = colors;
  s.h.assign(colors * (colors + 1) / 2, 0);
  s.v.assign(colors * colors, 0);
  s.d.assign(colors * (colors + 1) / 2, 0);
  return s;
}

int& Signature::h_at(int i, int j) { return h[tri_index(colors, i, j)]; }
int& Signature::v_at(int i, int j) { return v[i * colors + j]; }
int& Signature::d_at(int i, int j) { return d[tri_index(colors, i, j)]; }
int Signature::h_at(int i, int j) const { return h[tri_index(colors, i, j)]; }
int Signature::v_at(int i, int j) const { return v[i * colors + j]; }
int Signature::d_at(int i, int j) const { return d[tri_index(colors, i, j)]; }

int Signature::total_paths() const {
  int t = 0;
  for (int x : h) t += x;
  for (int x : v) t += x;
  for (int x : d) t += x;
  return t;
}

std::string Signature::to_string() const {
  std::ostringstream out;
  bool first = true;
  auto emit = [&](const std::string& s) {
    if (!first) out << " ";
    out << s;
    first = false;
  };
  for (int i = 0; i < colors; ++i)
    for (int j = i; j < colors; ++j)
      if (int x = h_at(i, j))
        emit("h{" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
             "}=" + std::to_string(x));
  for (int i = 0; i < colors; ++i)
    for (int j = 0; j < colors; ++j)
      if (int x = v_at(i, j))
        emit("v(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
             ")=" + std::to_string(x));
  for (int i = 0; i < colors; ++i)
    for (int j = i; j < colors; ++j)
      if (int x = d_at(i, j))
        emit("d{" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
             "}=" + std::to_string(x));
  if (first) out << "empty";
  return out.str();
}

Signature signature_of(const std::vector<std::vector<int>>& paths, int ell,
                       const OrderedPoints& pts, int colors) {
  if (ell < 1 || ell > static_cast<int>(pts.points.size()))
    throw std::invalid_argument("signature_of: ell out of range");
  std::vector<char> seen(ell, 0);
  int covered = 0;
  int row_y = pts.points[ell - 1].number;
  Signature sig = Signature::zero(colors);
  for (const auto& path : paths) {
    if (path.empty()) throw std::invalid_argument("signature_of: empty path");
    for (size_t k = 0; k < path.size(); ++k) {
      int v = path[k];
      if (v < 0 || v >= ell)
        throw std::invalid_argument("signature_of: vertex out of range");
      if (seen[v]) throw std::invalid_argument("signature_of: paths not disjoint");
      seen[v] = 1;
      ++covered;
      if (k > 0 && !matches(pts.points[path[k - 1]], pts.points[v]))
        throw std::invalid_argument("signature_of: consecutive cards do not match");
    }
    const Card& a = pts.points[path.front()];
    const Card& b = pts.points[path.back()];
    bool a_row = a.number == row_y, b_row = b.number == row_y;
    if (a_row && b_row)
      sig.h_at(a.color - 1, b.color - 1) += 1;
    else if (!a_row && !b_row)
      sig.d_at(a.color - 1, b.color - 1) += 1;
    else if (a_row)
      sig.v_at(a.color - 1, b.color - 1) += 1;
    else
      sig.v_at(b.color - 1, a.color - 1) += 1;
  }
  if (covered != ell)
    throw std::invalid_argument("signature_of: paths do not span the prefix");
  return sig;
}

namespace {

// ---------------------------------------------------------------------------
// Internal DP state.
//
// The paper-level signature alone cannot support exact counting: attaching
// the new point to a path whose both endpoints sit in the same column offers
// two endpoint choices when the path has two or more vertices but only one
// when it is a single vertex, and path sets with the same signature can mix
// those cases in different proportions. The engine therefore splits the
// diagonal classes by triviality:
//
//   H1[i]     single-vertex paths on the current row, column i
//   H2{i,j}   multi-vertex paths with both endpoints on the row
//   V(i,j)    paths with the row endpoint in column i, below endpoint in j
//   D1[i]     single-vertex paths below the row
//   D2{i,j}   multi-vertex paths with both endpoints below
//
// Projection h{i,i} = H1[i] + H2{i,i} (and likewise for d) recovers the
// paper's vector exactly.

struct FineLayout {
  int c, T;
  int h1o, d1o, h2o, vo, d2o, size;

  explicit FineLayout(int colors) : c(colors), T(colors * (colors + 1) / 2) {
    h1o = 0;
    d1o = c;
    h2o = 2 * c;
    vo = 2 * c + T;
    d2o = 2 * c + T + c * c;
    size = 2 * c + 2 * T + c * c;
  }
  int h1(int i) const { return h1o + i; }
  int d1(int i) const { return d1o + i; }
  int h2(int i, int j) const { return h2o + tri_index(c, i, j); }
  int v(int i, int j) const { return vo + i * c + j; }
  int d2(int i, int j) const { return d2o + tri_index(c, i, j); }
};

using FineState = std::string;  // one byte per class count

struct Place {
  bool on_row;
  int col;
};

// One way-class of attachable endpoints: `count` paths in class `cls`, each
// offering `per_path` equivalent endpoints; `other` is where the far end of
// such a path sits (for a single-vertex path, the vertex itself).
struct AttachOpt {
  int cls;
  int count;
  int per_path;
  Place other;
};

struct Engine {
  FineLayout L;

  explicit Engine(int colors) : L(colors) {}

  FineState empty_state() const { return FineState(L.size, '\0'); }

  FineState rebase(const FineState& s) const {
    FineState t(L.size, '\0');
    for (int i = 0; i < L.c; ++i)
      t[L.d1(i)] = static_cast<char>(s[L.d1(i)] + s[L.h1(i)]);
    for (int i = 0; i < L.c; ++i)
      for (int j = i; j < L.c; ++j)
        t[L.d2(i, j)] =
            static_cast<char>(s[L.d2(i, j)] + s[L.h2(i, j)]);
    for (int i = 0; i < L.c; ++i)
      for (int j = 0; j < L.c; ++j)
        t[L.d2(std::min(i, j), std::max(i, j))] =
            static_cast<char>(t[L.d2(std::min(i, j), std::max(i, j))] +
                              s[L.v(i, j)]);
    return t;
  }

  std::vector<AttachOpt> attach_options(const FineState& s, int k) const {
    std::vector<AttachOpt> opts;
    // Endpoints on the current row: adjacent to the new point via the row.
    for (int i = 0; i < L.c; ++i)
      if (int m = s[L.h1(i)])
        opts.push_back({L.h1(i), m, 1, {true, i}});
    for (int i = 0; i < L.c; ++i)
      for (int j = i; j < L.c; ++j)
        if (int m = s[L.h2(i, j)]) {
          if (i == j) {
            opts.push_back({L.h2(i, j), m, 2, {true, i}});
          } else {
            opts.push_back({L.h2(i, j), m, 1, {true, j}});  // attach at i end
            opts.push_back({L.h2(i, j), m, 1, {true, i}});  // attach at j end
          }
        }
    for (int i = 0; i < L.c; ++i)
      for (int j = 0; j < L.c; ++j)
        if (int m = s[L.v(i, j)])
          opts.push_back({L.v(i, j), m, 1, {false, j}});  // row-end attach
    // Endpoints below the row in column k: adjacent via the column.
    for (int i = 0; i < L.c; ++i)
      if (int m = s[L.v(i, k)])
        opts.push_back({L.v(i, k), m, 1, {true, i}});  // below-end attach
    if (int m = s[L.d1(k)])
      opts.push_back({L.d1(k), m, 1, {false, k}});
    for (int j = 0; j < L.c; ++j)
      if (int m = s[L.d2(std::min(j, k), std::max(j, k))]) {
        if (j == k)
          opts.push_back({L.d2(k, k), m, 2, {false, k}});
        else
          opts.push_back({L.d2(std::min(j, k), std::max(j, k)), m, 1, {false, j}});
      }
    return opts;
  }

  int merged_class(const Place& p, const Place& q) const {
    if (p.on_row && q.on_row) return L.h2(std::min(p.col, q.col), std::max(p.col, q.col));
    if (p.on_row) return L.v(p.col, q.col);
    if (q.on_row) return L.v(q.col, p.col);
    return L.d2(std::min(p.col, q.col), std::max(p.col, q.col));
  }

  // All successors of s when the new point lands in column k. `fn` receives
  // the successor state and the exact number of distinct path sets each
  // predecessor path set expands into along that option.
  template <typename Fn>
  void for_each_successor(const FineState& s, int k, Fn&& fn) const {
    {  // the new point stays isolated
      FineState t = s;
      ++t[L.h1(k)];
      fn(t, uint64_t{1});
    }
    auto opts = attach_options(s, k);
    Place self{true, k};
    for (const AttachOpt& a : opts) {  // extend one path by the new point
      FineState t = s;
      --t[a.cls];
      ++t[merged_class(self, a.other)];
      fn(t, static_cast<uint64_t>(a.count) * a.per_path);
    }
    // Join two distinct paths through the new point.
    for (size_t x = 0; x < opts.size(); ++x) {
      for (size_t y = x; y < opts.size(); ++y) {
        const AttachOpt& a = opts[x];
        const AttachOpt& b = opts[y];
        uint64_t ways;
        if (x == y) {
          uint64_t m = a.count;
          ways = (a.per_path == 2) ? 2 * m * (m - 1) : m * (m - 1) / 2;
        } else if (a.cls == b.cls) {
          // Two different endpoint roles of the same class; exclude pairing
          // a path with itself.
          uint64_t m = a.count;
          ways = m * (m - 1);
        } else {
          ways = static_cast<uint64_t>(a.count) * a.per_path *
                 static_cast<uint64_t>(b.count) * b.per_path;
        }
        if (ways == 0) continue;
        FineState t = s;
        --t[a.cls];
        --t[b.cls];
        ++t[merged_class(a.other, b.other)];
        fn(t, ways);
      }
    }
  }

  int total_paths(const FineState& s) const {
    int t = 0;
    for (char c : s) t += static_cast<unsigned char>(c);
    return t;
  }

  Signature project(const FineState& s) const {
    Signature sig = Signature::zero(L.c);
    for (int i = 0; i < L.c; ++i) {
      sig.h_at(i, i) += static_cast<unsigned char>(s[L.h1(i)]);
      sig.d_at(i, i) += static_cast<unsigned char>(s[L.d1(i)]);
      for (int j = i; j < L.c; ++j) {
        sig.h_at(i, j) += static_cast<unsigned char>(s[L.h2(i, j)]);
        sig.d_at(i, j) += static_cast<unsigned char>(s[L.d2(i, j)]);
      }
      for (int j = 0; j < L.c; ++j)
        sig.v_at(i, j) += static_cast<unsigned char>(s[L.v(i, j)]);
    }
    return sig;
  }

  // Below-row endpoints in column j can only ever be absorbed by future
  // points of column j (two per point); at most two endpoints survive to the
  // final single path. States over that budget are dead.
  bool dead(const FineState& s, const std::vector<int>& rem) const {
    int excess = 0;
    for (int j = 0; j < L.c; ++j) {
      int ends = s[L.d1(j)] + 2 * s[L.d2(j, j)];
      for (int i = 0; i < L.c; ++i) {
        if (i != j) ends += s[L.d2(std::min(i, j), std::max(i, j))];
        ends += s[L.v(i, j)];
      }
      excess += std::max(0, ends - 2 * rem[j]);
      if (excess > 2) return true;
    }
    return false;
  }
};

}  // namespace

DpResult dp_decide(const std::vector<Card>& cards, int colors,
                   const DpOptions& opts) {
  if (colors < 1) throw std::invalid_argument("dp_decide: colors must be >= 1");
  for (const Card& c : cards)
    if (c.color < 1 || c.color > colors)
      throw std::invalid_argument("dp_decide: card color out of range: " +
                                  to_string(c));
  int n = static_cast<int>(cards.size());
  if (n > 120) throw std::invalid_argument("dp_decide: too many cards");

  DpResult out;
  if (n == 0) {  // nothing to play; the empty sequence already succeeds
    out.yes = true;
    return out;
  }

  OrderedPoints pts = order_points(cards);
  Engine eng(colors);

  // Future point count per column, used by the decision-mode dead filter.
  std::vector<std::vector<int>> rem_after(n + 1, std::vector<int>(colors, 0));
  for (int ell = n - 1; ell >= 1; --ell) {
    rem_after[ell] = rem_after[ell + 1];
    rem_after[ell][pts.points[ell].color - 1] += 1;
  }

  std::unordered_map<FineState, DpCount> cur;
  cur.emplace(eng.empty_state(), 1);

  for (int ell = 1; ell <= n; ++ell) {
    int k = pts.points[ell - 1].color - 1;
    bool row_changed =
        ell == 1 || pts.points[ell - 1].number > pts.points[ell - 2].number;

    std::unordered_map<FineState, DpCount> next;
    next.reserve(cur.size() * 2);
    for (const auto& [state, count] : cur) {
      FineState base = row_changed ? eng.rebase(state) : state;
      eng.for_each_successor(base, k, [&](const FineState& t, uint64_t ways) {
        if (!opts.exact_counts && eng.dead(t, rem_after[ell])) return;
        if (opts.exact_counts)
          next[t] += count * ways;
        else
          next.emplace(t, 1);
      });
    }
    cur = std::move(next);
    out.peak_states = std::max(out.peak_states, static_cast<uint64_t>(cur.size()));
    if (out.peak_states > opts.max_states)
      throw std::runtime_error("dp_decide: state cap exceeded");

    if (opts.exact_counts && (opts.keep_layers || ell == n)) {
      std::map<Signature, DpCount> table;
      for (const auto& [state, count] : cur) table[eng.project(state)] += count;
      if (opts.keep_layers) out.layers.push_back(table);
      if (ell == n) out.final_table = std::move(table);
    }
  }

  for (const auto& [state, count] : cur)
    if (eng.total_paths(state) == 1) {
      out.yes = true;
      break;
    }
  return out;
}

std::map<Signature, DpCount> enumerate_pathsets(const std::vector<Card>& cards,
                                                int colors, int ell) {
  int n = static_cast<int>(cards.size());
  if (ell < 1 || ell > n)
    throw std::invalid_argument("enumerate_pathsets: ell out of range");
  if (ell > 12)
    throw std::invalid_argument("enumerate_pathsets: size cap exceeded");
  for (const Card& c : cards)
    if (c.color < 1 || c.color > colors)
      throw std::invalid_argument("enumerate_pathsets: card color out of range");

  OrderedPoints pts = order_points(cards);

  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < ell; ++i)
    for (int j = i + 1; j < ell; ++j)
      if (matches(pts.points[i], pts.points[j])) edges.emplace_back(i, j);

  std::map<Signature, DpCount> tally;
  std::vector<int> deg(ell, 0);
  std::vector<int> parent(ell);
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<std::pair<int, int>> chosen;

  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };

  // Every acyclic, degree-<=2 edge subset is exactly one spanning path set
  // (components are paths; isolated vertices are single-vertex paths).
  auto classify = [&]() {
    std::vector<std::vector<int>> nbr(ell);
    for (auto [a, b] : chosen) {
      nbr[a].push_back(b);
      nbr[b].push_back(a);
    }
    Signature sig = Signature::zero(colors);
    int row_y = pts.points[ell - 1].number;
    std::vector<char> seen(ell, 0);
    for (int v = 0; v < ell; ++v) {
      if (seen[v] || nbr[v].size() > 1) continue;  // start from an endpoint
      // Walk the path from v to its far end.
      int prev = -1, cur = v;
      seen[v] = 1;
      while (true) {
        int nxt = -1;
        for (int w : nbr[cur])
          if (w != prev) nxt = w;
        if (nxt == -1) break;
        prev = cur;
        cur = nxt;
        seen[cur] = 1;
      }
      const Card& a = pts.points[v];
      const Card& b = pts.points[cur];
      bool a_row = a.number == row_y, b_row = b.number == row_y;
      if (a_row && b_row)
        sig.h_at(a.color - 1, b.color - 1) += 1;
      else if (!a_row && !b_row)
        sig.d_at(a.color - 1, b.color - 1) += 1;
      else if (a_row)
        sig.v_at(a.color - 1, b.color - 1) += 1;
      else
        sig.v_at(b.color - 1, a.color - 1) += 1;
    }
    tally[sig] += 1;
  };

  auto rec = [&](auto&& self, size_t idx) -> void {
    if (idx == edges.size()) {
      classify();
      return;
    }
    self(self, idx + 1);  // exclude
    auto [a, b] = edges[idx];
    if (deg[a] < 2 && deg[b] < 2) {
      int ra = find(a), rb = find(b);
      if (ra != rb) {
        ++deg[a];
        ++deg[b];
        parent[ra] = rb;
        chosen.push_back(edges[idx]);
        self(self, idx + 1);
        chosen.pop_back();
        parent[ra] = ra;
        --deg[a];
        --deg[b];
      }
    }
  };
  rec(rec, 0);
  return tally;
}

}  // namespace uno
