#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "uno/core.hpp"

namespace uno {

using DpCount = boost::multiprecision::cpp_int;

// Cards as lattice points (x = color, y = number), sorted by the total order
// y first, then x, duplicate ties broken by input occurrence index.
struct OrderedPoints {
  std::vector<Card> points;
  std::vector<int> original_index;  // points[i] == cards[original_index[i]]
};

OrderedPoints order_points(const std::vector<Card>& cards);

// Endpoint-class vector of a spanning path set relative to the current row:
// h counts paths with both endpoints on the row (unordered column pair, the
// diagonal includes single-vertex paths), v paths with exactly one endpoint
// on the row (ordered: row column first), d paths with both endpoints below.
struct Signature {
  int colors = 0;
  std::vector<int> h;  // c(c+1)/2 entries, triangular order
  std::vector<int> v;  // c*c entries, row-major
  std::vector<int> d;  // c(c+1)/2 entries

  static Signature zero(int colors);

  int& h_at(int i, int j);  // 0-based columns, unordered
  int& v_at(int i, int j);  // 0-based, (row column, below column)
  int& d_at(int i, int j);
  int h_at(int i, int j) const;
  int v_at(int i, int j) const;
  int d_at(int i, int j) const;

  int total_paths() const;

  friend bool operator==(const Signature&, const Signature&) = default;
  friend auto operator<=>(const Signature&, const Signature&) = default;

  std::string to_string() const;  // sparse, 1-based, e.g. "h{1,2}=1 v(2,3)=1"
};

// Classify an explicit path set (lists of vertex indices into the first ell
// ordered points). Rejects sets that are not vertex-disjoint, not spanning,
// or not paths of the induced match graph.
Signature signature_of(const std::vector<std::vector<int>>& paths, int ell,
                       const OrderedPoints& pts, int colors);

struct DpOptions {
  bool exact_counts = true;   // false: reachability only (no tables)
  bool keep_layers = false;   // retain the projected table of every layer
  uint64_t max_states = 100'000'000;  // safety cap on live states
};

struct DpResult {
  bool yes = false;
  std::map<Signature, DpCount> final_table;
  std::vector<std::map<Signature, DpCount>> layers;  // layers[ell-1]
  uint64_t peak_states = 0;
};

// Layer-by-layer count of spanning path sets of each prefix, grouped by
// endpoint signature; yes iff some full-size path set is a single path.
// Exact counting is the default; decision mode only tracks reachability.
DpResult dp_decide(const std::vector<Card>& cards, int colors,
                   const DpOptions& opts = {});

// Independent ground truth: enumerate every spanning path set of the first
// ell points outright (as acyclic degree-<=2 edge subsets) and tally
// signatures. Exponential; capped at 12 points.
std::map<Signature, DpCount> enumerate_pathsets(const std::vector<Card>& cards,
                                                int colors, int ell);

}  // namespace uno
