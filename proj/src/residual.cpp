#include "mbdom/residual.hpp"

#include <algorithm>
#include <functional>

namespace mbdom {

VertexSet ResidualDecomposition::removed_mask() const {
  VertexSet out = 0;
  for (auto [x, y] : removed_pairs) out |= vbit(x) | vbit(y);
  return out;
}

namespace {

struct Reduction {
  const Graph& g;
  VertexSet alive;
  std::vector<std::pair<int, int>> pairs;

  int deg(int v) const { return std::popcount(g.adjacency(v) & alive); }

  // All leaves whose unique live neighbor has degree exactly 2, with supports.
  std::vector<std::pair<int, int>> candidates() const {
    std::vector<std::pair<int, int>> out;
    for_each_vertex(alive, [&](int v) {
      const VertexSet nb = g.adjacency(v) & alive;
      if (std::popcount(nb) != 1) return;
      const int y = std::countr_zero(nb);
      if (deg(y) == 2) out.emplace_back(v, y);
    });
    return out;
  }

  bool whole_graph_is_p2() const {
    if (std::popcount(alive) != 2) return false;
    const int a = std::countr_zero(alive);
    const int b = std::countr_zero(alive & (alive - 1));
    return g.has_edge(a, b);
  }

  void remove(std::pair<int, int> pair) {
    alive &= ~(vbit(pair.first) | vbit(pair.second));
    pairs.push_back(pair);
  }
};

ResidualDecomposition run_reduction(const Graph& g,
                                    const std::function<std::size_t(std::size_t)>& pick) {
  Reduction red{g, g.vertex_mask(), {}};
  while (true) {
    auto cands = red.candidates();
    if (!cands.empty()) {
      red.remove(cands[pick(cands.size())]);
      continue;
    }
    if (red.whole_graph_is_p2()) {
      const int a = std::countr_zero(red.alive);
      const int b = std::countr_zero(red.alive & (red.alive - 1));
      red.remove({a, b});
      continue;
    }
    break;
  }

  ResidualDecomposition out;
  out.original_n = g.n();
  out.removed_pairs = std::move(red.pairs);
  out.residual = g.induced(red.alive, &out.residual_to_original);
  return out;
}

}  // namespace

ResidualDecomposition residual_decompose(const Graph& g) {
  return run_reduction(g, [](std::size_t) { return std::size_t{0}; });
}

ResidualDecomposition residual_decompose_seeded(const Graph& g, std::uint64_t seed) {
  std::uint64_t state = seed + 0x9e3779b97f4a7c15ULL;
  auto next = [&state]() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t x = state;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  };
  return run_reduction(g, [&next](std::size_t count) { return next() % count; });
}

bool is_residual_fixpoint(const Graph& g) {
  if (g.n() <= 1) return true;
  for (int v = 0; v < g.n(); ++v) {
    if (g.degree(v) != 1) continue;
    const int support = std::countr_zero(g.adjacency(v));
    if (g.degree(support) < 3) return false;
  }
  return true;
}

ReducedValues reduce_and_solve(const Graph& g, const SolveOptions& options) {
  const auto dec = residual_decompose(g);
  const int h = dec.original_n - dec.residual.n();
  const int half = h / 2;

  const GameValue r_sgame = gmb_prime(dec.residual, options);
  const GameValue r_dgame = gmb(dec.residual, options);

  ReducedValues out;
  out.sgame_exact = r_sgame.plus(half);
  out.dgame_high = r_dgame.plus(half);
  if (!r_dgame.is_finite()) {
    out.dgame_low = GameValue::infinite();
  } else if (g.n() == 0) {
    out.dgame_low = GameValue::finite(0);
  } else {
    const int raw = half + r_dgame.moves() - 1;
    out.dgame_low = GameValue::finite(std::max({raw, half, 1}));
  }
  return out;
}

bool check_matching_transfer(const Graph& g) {
  const auto dec = residual_decompose(g);
  return has_perfect_matching(g) == has_perfect_matching(dec.residual);
}

}  // namespace mbdom
