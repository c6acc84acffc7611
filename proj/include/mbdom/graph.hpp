#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mbdom/errors.hpp"

namespace mbdom {

// Vertex sets are 64-bit masks over vertices 0..n-1. The cap of 62 leaves the
// two top bits free for packing turn/pass flags into solver memo keys.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 62;

constexpr VertexSet vbit(int v) { return VertexSet{1} << v; }
constexpr bool vcontains(VertexSet s, int v) { return (s >> v) & VertexSet{1}; }

// Calls f(v) for each set bit, low to high.
template <typename F>
void for_each_vertex(VertexSet s, F&& f) {
  while (s) {
    f(std::countr_zero(s));
    s &= s - 1;
  }
}

// Simple undirected graph on 0..n-1, adjacency stored as one mask per vertex.
// Labels are optional metadata (generator landmarks); no algorithm reads them.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int n() const { return n_; }
  int edge_count() const;
  VertexSet vertex_mask() const {
    return n_ == 0 ? VertexSet{0} : (~VertexSet{0} >> (64 - n_));
  }

  void add_edge(int u, int v);  // idempotent; rejects self-loops and bad indices
  bool has_edge(int u, int v) const;
  VertexSet adjacency(int v) const;
  VertexSet closed_neighborhood(int v) const;
  int degree(int v) const { return std::popcount(adjacency(v)); }

  const std::string& label(int v) const;
  void set_label(int v, std::string label);
  std::optional<int> find_label(std::string_view label) const;

  std::vector<std::pair<int, int>> edges() const;  // (u,v) with u<v, sorted
  bool is_connected() const;                       // vacuously true for n<=1

  // Subgraph induced on `keep`; vertices are reindexed ascending. When
  // original_index is non-null it receives the new->old index map.
  Graph induced(VertexSet keep, std::vector<int>* original_index = nullptr) const;

  // "n m" header plus one "u v" line per edge; parse_edge_list round-trips it.
  std::string to_edge_list() const;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<std::string> labels_;
};

Graph disjoint_union(const Graph& a, const Graph& b);

// Text format: optional '#' comments and blank lines anywhere; first data line
// is "n m"; then exactly m lines "u v". Duplicate edges collapse. Errors carry
// the 1-based line number.
Graph parse_edge_list(std::string_view text);

// True iff the closed neighborhoods of `s` cover every vertex. Bits outside
// the vertex range are ignored.
bool is_dominating(const Graph& g, VertexSet s);

struct DomStats {
  int gamma = 0;                      // domination number
  std::uint64_t num_gamma_sets = 0;   // count of minimum dominating sets
  VertexSet one_witness_set = 0;      // numerically smallest such set
};

// Exhaustive by subset size, ascending. Refuses n > cap.
DomStats domination_stats(const Graph& g, int cap = 20);

bool has_perfect_matching(const Graph& g);
std::uint64_t count_perfect_matchings(const Graph& g);

// Exact isomorphism test by backtracking with degree pruning. Refuses
// inputs larger than cap vertices.
bool are_isomorphic(const Graph& a, const Graph& b, int cap = 12);

}  // namespace mbdom
