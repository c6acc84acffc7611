#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mbdom/engine.hpp"
#include "mbdom/graph.hpp"

namespace mbdom {

struct ResidualDecomposition {
  Graph residual;                                 // reindexed to 0..k-1
  std::vector<int> residual_to_original;          // size residual.n()
  std::vector<std::pair<int, int>> removed_pairs; // (leaf, support), original indices, removal order
  int original_n = 0;

  VertexSet removed_mask() const;  // original indices
};

// Repeatedly removes a pendant P2: a leaf x whose unique neighbor y has degree
// exactly 2 (lowest-indexed qualifying leaf first). When the entire remaining
// graph is a single P2 it is removed as well. Deterministic.
ResidualDecomposition residual_decompose(const Graph& g);

// Same reduction but picking a random qualifying leaf at each step; used to
// exercise order-independence of the residual up to isomorphism.
ResidualDecomposition residual_decompose_seeded(const Graph& g, std::uint64_t seed);

// True iff g is empty, a single vertex, or every support vertex has degree
// at least 3 -- exactly the graphs the reduction leaves untouched.
bool is_residual_fixpoint(const Graph& g);

struct ReducedValues {
  GameValue sgame_exact;  // h/2 + gmb_prime(residual)
  GameValue dgame_low;    // max(h/2 + gmb(residual) - 1, h/2, 1) when finite
  GameValue dgame_high;   // h/2 + gmb(residual)
};

// h counts removed vertices; the Staller-start value is exact and the
// Dominator-start value is sandwiched in [dgame_low, dgame_high].
ReducedValues reduce_and_solve(const Graph& g, const SolveOptions& options = {});

// Perfect-matching transfer: the input has a perfect matching iff its
// residual does. Returns the result of that comparison.
bool check_matching_transfer(const Graph& g);

}  // namespace mbdom
