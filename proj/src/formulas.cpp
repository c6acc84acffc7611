#include "mbdom/formulas.hpp"

#include <algorithm>

#include "mbdom/residual.hpp"

namespace mbdom {

Pairing make_pairing(const Graph& g, std::vector<std::pair<int, int>> pairs) {
  VertexSet used = 0;
  for (auto& [u, v] : pairs) {
    if (u < 0 || u >= g.n() || v < 0 || v >= g.n())
      throw std::invalid_argument("pairing: vertex out of range");
    if (u == v) throw std::invalid_argument("pairing: pair with identical vertices");
    if (u > v) std::swap(u, v);
    const VertexSet both = vbit(u) | vbit(v);
    if (used & both) throw std::invalid_argument("pairing: overlapping pairs");
    used |= both;
  }
  std::sort(pairs.begin(), pairs.end());
  Pairing out{std::move(pairs), true};
  for (auto [u, v] : out.pairs)
    if (!g.has_edge(u, v)) {
      out.is_matching = false;
      break;
    }
  return out;
}

bool pairing_check(const Graph& g, const Pairing& x) {
  VertexSet used = 0;
  VertexSet covered = 0;
  for (auto [u, v] : x.pairs) {
    if (u < 0 || u >= g.n() || v < 0 || v >= g.n())
      throw std::invalid_argument("pairing_check: vertex out of range");
    const VertexSet both = vbit(u) | vbit(v);
    if (u == v || (used & both))
      throw std::invalid_argument("pairing_check: overlapping pairs");
    used |= both;
    covered |= g.closed_neighborhood(u) & g.closed_neighborhood(v);
  }
  return covered == g.vertex_mask();
}

namespace {

// Any pairing that dominates must cover the lowest uncovered vertex w with a
// pair whose closed neighborhoods both contain w, i.e. an edge inside N[w].
bool dm_search(const Graph& g, const std::vector<VertexSet>& cn, VertexSet covered,
               VertexSet used, std::vector<std::pair<int, int>>& chosen) {
  const VertexSet full = g.vertex_mask();
  if (covered == full) return true;
  const int w = std::countr_zero(~covered & full);
  const VertexSet cands = cn[static_cast<std::size_t>(w)] & ~used;
  for (VertexSet us = cands; us; us &= us - 1) {
    const int u = std::countr_zero(us);
    for (VertexSet vs = us & (us - 1); vs; vs &= vs - 1) {
      const int v = std::countr_zero(vs);
      if (!g.has_edge(u, v)) continue;
      chosen.emplace_back(u, v);
      if (dm_search(g, cn, covered | (cn[static_cast<std::size_t>(u)] & cn[static_cast<std::size_t>(v)]),
                    used | vbit(u) | vbit(v), chosen))
        return true;
      chosen.pop_back();
    }
  }
  return false;
}

}  // namespace

std::optional<Pairing> find_dominating_matching(const Graph& g, int cap) {
  if (g.n() > cap)
    throw resource_error("find_dominating_matching: n=" + std::to_string(g.n()) +
                         " exceeds cap of " + std::to_string(cap));
  std::vector<VertexSet> cn(static_cast<std::size_t>(g.n()));
  for (int v = 0; v < g.n(); ++v) cn[static_cast<std::size_t>(v)] = g.closed_neighborhood(v);
  std::vector<std::pair<int, int>> chosen;
  if (!dm_search(g, cn, 0, 0, chosen)) return std::nullopt;
  return make_pairing(g, std::move(chosen));
}

std::pair<GameValue, GameValue> tree_values(const Graph& tree) {
  const int n = tree.n();
  if (n < 1 || tree.edge_count() != n - 1 || !tree.is_connected())
    throw std::invalid_argument("tree_values: input is not a tree");
  // Lone vertex: Dominator must take it himself, Staller steals it first.
  if (n == 1) return {GameValue::finite(1), GameValue::infinite()};

  const auto dec = residual_decompose(tree);
  const Graph& r = dec.residual;
  if (r.n() == 0)  // perfect matching
    return {GameValue::finite(n / 2), GameValue::finite(n / 2)};
  if (r.n() == 1) return {GameValue::finite((n - 1) / 2), GameValue::infinite()};

  // Star residual K_{1,k}, k >= 3: one hub adjacent to every other vertex.
  const int k = r.n() - 1;
  if (k >= 3) {
    for (int hub = 0; hub < r.n(); ++hub) {
      if (r.degree(hub) != k) continue;
      bool star = true;
      for (int v = 0; v < r.n() && star; ++v)
        if (v != hub && r.degree(v) != 1) star = false;
      if (star) return {GameValue::finite((n - k + 1) / 2), GameValue::infinite()};
      break;  // at most one vertex can have full degree in a tree with n >= 3
    }
  }
  return {GameValue::infinite(), GameValue::infinite()};
}

std::pair<GameValue, GameValue> cycle_values(int n) {
  if (n < 3) throw std::invalid_argument("cycle_values: n must be >= 3");
  return {GameValue::finite(n / 2), GameValue::finite(n / 2)};
}

UnionBounds union_bounds(GameValue d_g, GameValue s_g, GameValue d_h, GameValue s_h) {
  if (d_g > s_g || d_h > s_h)
    throw std::invalid_argument("union_bounds: component has gmb > gmb'");
  UnionBounds out;
  out.dgame_low = d_g + d_h;
  out.dgame_high = std::min(s_g + d_h, d_g + s_h);
  out.sgame_low = std::max(s_g + d_h, d_g + s_h);
  out.sgame_high = s_g + s_h;
  return out;
}

std::optional<int> gamma2_witness(const Graph& g, int cap) {
  const auto stats = domination_stats(g, cap);
  if (stats.gamma != 2)
    throw std::domain_error("gamma2_witness: domination number is " +
                            std::to_string(stats.gamma) + ", not 2");
  std::vector<int> hits(static_cast<std::size_t>(g.n()), 0);
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (is_dominating(g, vbit(u) | vbit(v))) {
        ++hits[static_cast<std::size_t>(u)];
        ++hits[static_cast<std::size_t>(v)];
      }
  for (int v = 0; v < g.n(); ++v)
    if (hits[static_cast<std::size_t>(v)] >= 2) return v;
  return std::nullopt;
}

bool erdos_selfridge_check(const Graph& g, int cap) {
  if (g.n() == 0) return false;
  const auto stats = domination_stats(g, cap);
  return stats.num_gamma_sets < (std::uint64_t{1} << (stats.gamma - 1));
}

}  // namespace mbdom
