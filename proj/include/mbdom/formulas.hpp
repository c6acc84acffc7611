#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mbdom/engine.hpp"
#include "mbdom/game_value.hpp"
#include "mbdom/graph.hpp"

namespace mbdom {

struct Pairing {
  std::vector<std::pair<int, int>> pairs;  // each (min,max), list sorted
  bool is_matching = false;                // every pair an edge of the checked graph
};

// Validates ranges and disjointness (invalid_argument otherwise), normalizes
// pair order, and fills is_matching against g.
Pairing make_pairing(const Graph& g, std::vector<std::pair<int, int>> pairs);

// True iff the pairwise closed-neighborhood intersections of the pairs cover
// every vertex: then any choice of one vertex per pair is a dominating set.
bool pairing_check(const Graph& g, const Pairing& x);

// Searches for vertex-disjoint edges forming a pairing that passes
// pairing_check. Branches on the lowest uncovered vertex, candidate edges in
// lexicographic order; deterministic. Refuses n > cap.
std::optional<Pairing> find_dominating_matching(const Graph& g, int cap = 18);

// Exact (Dominator-start, Staller-start) values for a tree, via its residual:
// perfect matching -> (n/2, n/2); residual K1 -> ((n-1)/2, inf); residual
// K_{1,k} with k >= 3 -> ((n-k+1)/2, inf); otherwise (inf, inf). The single
// vertex is the one boundary case: (1, inf).
std::pair<GameValue, GameValue> tree_values(const Graph& tree);

// Cycles: both values equal floor(n/2) for n >= 3.
std::pair<GameValue, GameValue> cycle_values(int n);

struct UnionBounds {
  GameValue dgame_low;   // dG + dH
  GameValue dgame_high;  // min(sG + dH, dG + sH)
  GameValue sgame_low;   // max(sG + dH, dG + sH)
  GameValue sgame_high;  // sG + sH
};

// Bounds for a disjoint union from the component values; saturating.
UnionBounds union_bounds(GameValue d_g, GameValue s_g, GameValue d_h, GameValue s_h);

// For graphs with domination number exactly 2 (domain_error otherwise):
// lowest-indexed vertex lying in at least two minimum dominating sets, if any.
// Such a vertex exists iff the Dominator-start value is 2.
std::optional<int> gamma2_witness(const Graph& g, int cap = 20);

// True iff the count of minimum dominating sets is below 2^(gamma-1); then
// the Dominator-start value exceeds gamma (potential-function argument over
// the minimum dominating sets as a hypergraph).
bool erdos_selfridge_check(const Graph& g, int cap = 20);

}  // namespace mbdom
