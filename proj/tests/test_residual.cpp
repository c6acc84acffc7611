#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mbdom/engine.hpp"
#include "mbdom/families.hpp"
#include "mbdom/residual.hpp"

using namespace mbdom;

namespace {
GameValue F(int k) { return GameValue::finite(k); }
const GameValue INF = GameValue::infinite();
}  // namespace

TEST_CASE("paths reduce to the expected cores") {
  const ResidualDecomposition p4 = residual_decompose(path_graph(4));
  CHECK(p4.residual.n() == 0);
  CHECK(p4.removed_pairs == std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});
  CHECK(p4.removed_mask() == path_graph(4).vertex_mask());

  const ResidualDecomposition p5 = residual_decompose(path_graph(5));
  CHECK(p5.residual.n() == 1);
  CHECK(p5.removed_pairs.size() == 2);

  const ResidualDecomposition p2 = residual_decompose(path_graph(2));
  CHECK(p2.residual.n() == 0);  // whole graph is a pendant pair
  CHECK(p2.removed_pairs.size() == 1);
}

TEST_CASE("stars and deep supports are already reduced") {
  const ResidualDecomposition star = residual_decompose(star_graph(3));
  CHECK(star.residual.n() == 4);
  CHECK(star.removed_pairs.empty());

  // supports of degree >= 3 block removal
  const ResidualDecomposition ds = residual_decompose(double_star_graph(2, 2));
  CHECK(ds.residual.n() == 6);
  CHECK(is_residual_fixpoint(ds.residual));
}

TEST_CASE("fixpoint predicate matches the support degree rule") {
  CHECK(is_residual_fixpoint(Graph(0)));
  CHECK(is_residual_fixpoint(complete_graph(1)));
  CHECK(is_residual_fixpoint(star_graph(3)));
  CHECK(is_residual_fixpoint(cycle_graph(5)));
  CHECK_FALSE(is_residual_fixpoint(path_graph(4)));
  CHECK_FALSE(is_residual_fixpoint(path_graph(2)));
}

TEST_CASE("residual to original index map is consistent") {
  const Graph p5 = path_graph(5);
  const ResidualDecomposition dec = residual_decompose(p5);
  REQUIRE(dec.residual.n() == 1);
  const int orig = dec.residual_to_original[0];
  CHECK((dec.removed_mask() & vbit(orig)) == 0);
  CHECK(orig >= 0);
  CHECK(orig < 5);
}

TEST_CASE("reduction preserves the s game exactly and sandwiches the d game") {
  const ReducedValues p4 = reduce_and_solve(path_graph(4));
  CHECK(p4.sgame_exact == F(2));
  CHECK(p4.dgame_low == F(2));
  CHECK(p4.dgame_high == F(2));

  const ReducedValues p5 = reduce_and_solve(path_graph(5));
  CHECK(p5.sgame_exact == INF);
  CHECK(p5.dgame_low == F(2));
  CHECK(p5.dgame_high == F(3));
  CHECK(gmb(path_graph(5)) == F(2));  // the lower end is the truth here

  // fixpoint input: reduction is the identity, bounds collapse to the search
  const ReducedValues f4 = reduce_and_solve(fig4_graph());
  CHECK(f4.sgame_exact == gmb_prime(fig4_graph()));
  CHECK(f4.dgame_high == gmb(fig4_graph()));
}

TEST_CASE("both ends of the d game sandwich are attained") {
  // P4: value sits at the top of the bracket
  const ReducedValues top = reduce_and_solve(path_graph(4));
  CHECK(gmb(path_graph(4)) == top.dgame_high);

  // P5: value sits at the bottom
  const ReducedValues bot = reduce_and_solve(path_graph(5));
  CHECK(gmb(path_graph(5)) == bot.dgame_low);
}

TEST_CASE("matching transfer holds for named graphs") {
  CHECK(check_matching_transfer(path_graph(4)));
  CHECK(check_matching_transfer(path_graph(5)));
  CHECK(check_matching_transfer(star_graph(3)));
  CHECK(check_matching_transfer(cycle_graph(6)));
  CHECK(check_matching_transfer(double_star_graph(2, 2)));
}

TEST_CASE("removal order does not change the core up to isomorphism") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 25; ++i) {
    const Graph t = random_tree(9, rng);
    const Graph base = residual_decompose(t).residual;
    for (std::uint64_t seed = 0; seed < 5; ++seed)
      CHECK(are_isomorphic(base, residual_decompose_seeded(t, seed).residual));
  }
}

TEST_CASE("removed pairs induce a forest with that unique perfect matching") {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 25; ++i) {
    const Graph g = random_connected_graph(10, rng);
    const ResidualDecomposition dec = residual_decompose(g);
    const VertexSet removed = dec.removed_mask();
    CHECK(std::popcount(removed) == 2 * static_cast<int>(dec.removed_pairs.size()));
    VertexSet seen = 0;
    for (auto [a, b] : dec.removed_pairs) {
      CHECK(g.has_edge(a, b));
      CHECK((seen & (vbit(a) | vbit(b))) == 0);
      seen |= vbit(a) | vbit(b);
    }
    if (removed) {
      const Graph h = g.induced(removed, nullptr);
      CHECK(count_perfect_matchings(h) == 1);
      CHECK(h.edge_count() <= h.n() - 1);  // forest: no component has a cycle
    }
  }
}

TEST_CASE("reduction values agree with direct search on random trees") {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 40; ++i) {
    std::uniform_int_distribution<int> size(2, 10);
    const Graph t = random_tree(size(rng), rng);
    const ReducedValues rv = reduce_and_solve(t);
    CHECK(rv.sgame_exact == gmb_prime(t));
    const GameValue d = gmb(t);
    CHECK(rv.dgame_low <= d);
    CHECK(d <= rv.dgame_high);
  }
}
