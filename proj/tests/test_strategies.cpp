#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mbdom/families.hpp"
#include "mbdom/formulas.hpp"
#include "mbdom/residual.hpp"
#include "mbdom/strategies.hpp"

using namespace mbdom;

namespace {

// path 0-1-2-3 with one pendant leaf per spine vertex; perfect matching
// pairs each spine vertex with its leaf
Graph caterpillar8() {
  Graph g(8);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  for (int i = 0; i < 4; ++i) g.add_edge(i, i + 4);
  return g;
}

GameConfig dgame(const Graph& g) {
  GameConfig c;
  c.graph = g;
  return c;
}

GameConfig sgame(const Graph& g) {
  GameConfig c;
  c.graph = g;
  c.first = Player::Staller;
  return c;
}

}  // namespace

TEST_CASE("record serialization") {
  GameRecord rec;
  rec.moves = {{Player::Dominator, 0}, {Player::Staller, 2}, {Player::Dominator, 1}};
  rec.winner = Player::Dominator;
  rec.dominator_moves = 2;
  const std::string s = rec.serialize();
  CHECK(s == "D 0\nS 2\nD 1\nWINNER D 2\n");

  GameRecord loss;
  loss.forfeit = true;
  loss.diagnostic = "bad";
  CHECK(loss.serialize() == "# forfeit: bad\nWINNER S\n");
}

TEST_CASE("pairing strategy wins within the pair count") {
  const Graph c6 = cycle_graph(6);
  const Pairing x = *find_dominating_matching(c6);
  const GameConfig cfg = dgame(c6);

  auto dom = pairing_dominator_strategy(x);
  auto sta = optimal_strategy(cfg);
  const GameRecord rec = simulate(cfg, *dom, *sta);
  CHECK(rec.winner == Player::Dominator);
  CHECK(rec.dominator_moves <= static_cast<int>(x.pairs.size()));
  CHECK(rec.dominator_moves == 3);  // optimal play needs 3 here too

  // staller-start games as well
  const GameConfig scfg = sgame(c6);
  auto dom2 = pairing_dominator_strategy(x);
  auto sta2 = optimal_strategy(scfg);
  const GameRecord rec2 = simulate(scfg, *dom2, *sta2);
  CHECK(rec2.winner == Player::Dominator);
  CHECK(rec2.dominator_moves <= 3);
}

TEST_CASE("pairing strategy answers inside the touched pair") {
  const Graph c4 = cycle_graph(4);
  const Pairing x = make_pairing(c4, {{0, 1}, {2, 3}});
  const GameConfig cfg = sgame(c4);
  auto dom = pairing_dominator_strategy(x);
  auto sta = random_strategy(99);
  const GameRecord rec = simulate(cfg, *dom, *sta);
  CHECK(rec.winner == Player::Dominator);
  // whatever Staller opened with, the reply stays in that pair
  const int s0 = rec.moves[0].vertex;
  const int d0 = rec.moves[1].vertex;
  CHECK((s0 / 2) == (d0 / 2));
}

TEST_CASE("pairing strategy rejects a non dominating pairing") {
  const Graph c6 = cycle_graph(6);
  const Pairing bad = make_pairing(c6, {{0, 1}, {2, 3}});
  auto dom = pairing_dominator_strategy(bad);
  auto sta = random_strategy(1);
  CHECK_THROWS_AS(simulate(dgame(c6), *dom, *sta), std::invalid_argument);
}

TEST_CASE("pairing strategy beats many random stallers") {
  std::mt19937_64 rng(31);
  const Graph g = grst_graph(2, 2, 3);
  const auto x = find_dominating_matching(g);
  REQUIRE(x.has_value());
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto dom = pairing_dominator_strategy(*x);
    auto sta = random_strategy(seed);
    const GameRecord rec = simulate(sgame(g), *dom, *sta);
    CHECK(rec.winner == Player::Dominator);
    CHECK(rec.dominator_moves <= static_cast<int>(x->pairs.size()));
  }
}

TEST_CASE("tree strategy forces half the vertices and ends on the target") {
  for (const Graph& t :
       {path_graph(2), path_graph(4), path_graph(6), caterpillar8()}) {
    REQUIRE(residual_decompose(t).residual.n() == 0);
    for (int v = 0; v < t.n(); ++v) {
      const GameConfig cfg = sgame(t);
      auto sta = staller_tree_strategy(t, v);
      auto dom = optimal_strategy(cfg);
      const GameRecord rec = simulate(cfg, *dom, *sta);
      CHECK(rec.winner == Player::Dominator);
      CHECK(rec.dominator_moves == t.n() / 2);
      // Staller's last move is the chosen vertex
      int last_staller = -1;
      for (const Move& m : rec.moves)
        if (m.player == Player::Staller) last_staller = m.vertex;
      CHECK(last_staller == v);
    }
  }
}

TEST_CASE("tree strategy punishes a deviating dominator") {
  const Graph p4 = path_graph(4);
  // Dominator who always grabs the lowest vertex deviates from the forced reply
  struct Lowest final : Strategy {
    Lowest() : Strategy("lowest") {}
    StrategyMove next_move(const GameConfig&, const GameState& st,
                           const std::vector<Move>&) override {
      return {std::countr_zero(st.available), false};
    }
  } dom;
  auto sta = staller_tree_strategy(p4, 0);
  const GameRecord rec = simulate(sgame(p4), dom, *sta);
  CHECK(rec.winner == Player::Staller);
}

TEST_CASE("tree strategy validates its input") {
  CHECK_THROWS_AS(staller_tree_strategy(cycle_graph(4), 0), std::invalid_argument);
  CHECK_THROWS_AS(staller_tree_strategy(path_graph(5), 0), std::invalid_argument);
  CHECK_THROWS_AS(staller_tree_strategy(path_graph(4), 9), std::invalid_argument);
}

TEST_CASE("cycle strategy holds the floor in both games") {
  for (int n = 3; n <= 12; ++n) {
    const Graph c = cycle_graph(n);

    const GameConfig sd = sgame(c);
    auto sta = staller_cycle_strategy(n, Player::Staller);
    auto dom = optimal_strategy(sd);
    const GameRecord rec = simulate(sd, *dom, *sta);
    CHECK(rec.winner == Player::Dominator);
    CHECK(rec.dominator_moves >= n / 2);

    const GameConfig dd = dgame(c);
    auto sta2 = staller_cycle_strategy(n, Player::Dominator);
    auto dom2 = optimal_strategy(dd);
    const GameRecord rec2 = simulate(dd, *dom2, *sta2);
    CHECK(rec2.winner == Player::Dominator);
    CHECK(rec2.dominator_moves >= n / 2);
  }
}

TEST_CASE("optimal strategies realize the game value") {
  const Graph c5 = cycle_graph(5);
  auto dom = optimal_strategy(dgame(c5));
  auto sta = optimal_strategy(dgame(c5));
  const GameRecord rec = simulate(dgame(c5), *dom, *sta);
  CHECK(rec.winner == Player::Dominator);
  CHECK(rec.dominator_moves == 2);
  CHECK(rec.final_dominated == c5.vertex_mask());

  // Staller start on P3: center steal wins outright
  const Graph p3 = path_graph(3);
  auto dom2 = optimal_strategy(sgame(p3));
  auto sta2 = optimal_strategy(sgame(p3));
  const GameRecord rec2 = simulate(sgame(p3), *dom2, *sta2);
  CHECK(rec2.winner == Player::Staller);

  const Graph ds = double_star_graph(2, 2);
  auto dom3 = optimal_strategy(dgame(ds));
  auto sta3 = optimal_strategy(dgame(ds));
  CHECK(simulate(dgame(ds), *dom3, *sta3).winner == Player::Staller);
}

TEST_CASE("referee counts moves and flags forfeits") {
  struct Cheat final : Strategy {
    Cheat() : Strategy("cheat") {}
    StrategyMove next_move(const GameConfig&, const GameState&,
                           const std::vector<Move>&) override {
      return {-1, false};
    }
  } cheat;
  auto sta = random_strategy(1);
  const GameRecord rec = simulate(dgame(path_graph(3)), cheat, *sta);
  CHECK(rec.forfeit);
  CHECK(rec.winner == Player::Staller);
  CHECK(rec.diagnostic.find("cheat") != std::string::npos);
}

TEST_CASE("random strategy is deterministic per seed") {
  const Graph c6 = cycle_graph(6);
  auto a1 = random_strategy(5);
  auto a2 = random_strategy(5);
  auto b = random_strategy(6);
  const GameState st = initial_state(dgame(c6));
  const int m1 = a1->next_move(dgame(c6), st, {}).vertex;
  const int m2 = a2->next_move(dgame(c6), st, {}).vertex;
  CHECK(m1 == m2);
  (void)b;
}
