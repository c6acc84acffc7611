#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mbdom/engine.hpp"
#include "mbdom/errors.hpp"
#include "mbdom/families.hpp"

using namespace mbdom;

namespace {
GameValue F(int k) { return GameValue::finite(k); }
const GameValue INF = GameValue::infinite();
}  // namespace

TEST_CASE("game values order and add with saturation") {
  CHECK(F(0) < F(1));
  CHECK(F(3) < INF);
  CHECK(INF == INF);
  CHECK((F(2) + F(3)) == F(5));
  CHECK((F(2) + INF) == INF);
  CHECK(F(4).plus(1) == F(5));
  CHECK(INF.plus(7) == INF);
  CHECK(F(3).str() == "3");
  CHECK(INF.str() == "inf");
  CHECK_THROWS_AS(GameValue::finite(-1), std::invalid_argument);
  CHECK_THROWS_AS(INF.moves(), std::logic_error);
}

TEST_CASE("solver handles the trivial positions") {
  CHECK(gmb(Graph(0)) == F(0));
  CHECK(gmb_prime(Graph(0)) == F(0));
  CHECK(gmb(complete_graph(1)) == F(1));
  CHECK(gmb_prime(complete_graph(1)) == INF);
  CHECK(gmb(complete_graph(2)) == F(1));
  CHECK(gmb_prime(complete_graph(2)) == F(1));
}

TEST_CASE("solver reproduces worked examples") {
  CHECK(gmb(cycle_graph(5)) == F(2));
  CHECK(gmb_prime(path_graph(3)) == INF);
  CHECK(gmb(path_graph(3)) == F(1));
  CHECK(gmb(fig4_graph()) == F(2));
  CHECK(gmb_prime(fig4_graph()) == F(2));

  // one pendant triangle per extra unit: d-game ignores them, s-game pays
  for (int t = 1; t <= 3; ++t) {
    CHECK(gmb(gt_graph(t)) == F(1));
    CHECK(gmb_prime(gt_graph(t)) == F(t));
  }

  CHECK(gmb(grst_graph(2, 2, 3)) == F(2));
  CHECK(gmb_prime(grst_graph(2, 2, 3)) == F(3));
}

TEST_CASE("pre dominated vertices shrink the job") {
  const Graph f = fig4_graph();
  const int u = *f.find_label("u");
  GameConfig cfg;
  cfg.graph = f;
  cfg.first = Player::Staller;
  cfg.pre_dominated = vbit(u);
  CHECK(solve(cfg) == F(1));

  GameConfig bad;
  bad.graph = path_graph(2);
  bad.pre_dominated = vbit(5);
  CHECK_THROWS_AS(initial_state(bad), std::invalid_argument);
}

TEST_CASE("apply move validates and dominates") {
  const Graph p3 = path_graph(3);
  GameConfig cfg;
  cfg.graph = p3;
  GameState st = initial_state(cfg);
  st = apply_move(p3, st, 1);
  CHECK(st.dominated == p3.vertex_mask());
  CHECK(st.turn == Player::Staller);
  CHECK_THROWS_AS(apply_move(p3, st, 1), std::invalid_argument);
}

TEST_CASE("best move picks the winning vertex") {
  const Graph p3 = path_graph(3);
  GameConfig cfg;
  cfg.graph = p3;
  Solver s(cfg);
  CHECK(s.best_move(initial_state(cfg)) == 1);

  const Graph star = star_graph(5);
  GameConfig cs;
  cs.graph = star;
  Solver s2(cs);
  CHECK(s2.best_move(initial_state(cs)) == 0);

  // C5 after D0, S3: vertex 2 closes 1,2,3 and wins next turn either way
  const Graph c5 = cycle_graph(5);
  GameConfig cc;
  cc.graph = c5;
  Solver s3(cc);
  GameState st = initial_state(cc);
  st = apply_move(c5, st, 0);
  st = apply_move(c5, st, 3);
  CHECK(s3.best_move(st) == 2);
}

TEST_CASE("vertex cap guards runaway inputs") {
  SolveOptions tight;
  tight.max_n = 4;
  CHECK_THROWS_AS(gmb(cycle_graph(5), tight), resource_error);
  tight.allow_large = true;
  CHECK(gmb(cycle_graph(5), tight) == F(2));
}

TEST_CASE("bounds report spots the documented examples") {
  const Graph g =
      disjoint_union(complete_graph(1), disjoint_union(complete_graph(2), complete_graph(2)));
  const BoundsReport rep = verify_basic_bounds(g);
  CHECK(rep.all_ok());
  CHECK(rep.gmb == F(3));  // = ceil(5/2), the d-game bound is tight
  CHECK(rep.gmb_prime == INF);

  const BoundsReport c6 = verify_basic_bounds(cycle_graph(6));
  CHECK(c6.all_ok());
  CHECK(c6.gamma == 2);
  CHECK(c6.gmb == F(3));
  CHECK(c6.gmb_prime == F(3));
}

TEST_CASE("memoized and unmemoized search agree on random graphs") {
  std::mt19937_64 rng(42);
  SolveOptions no_memo;
  no_memo.use_memo = false;
  for (int i = 0; i < 50; ++i) {
    std::uniform_int_distribution<int> size(1, 8);
    std::uniform_real_distribution<double> prob(0.2, 0.8);
    const Graph g = random_graph(size(rng), prob(rng), rng);
    for (Player p : {Player::Dominator, Player::Staller}) {
      GameConfig cfg;
      cfg.graph = g;
      cfg.first = p;
      CHECK(solve(cfg) == solve(cfg, no_memo));
    }
  }
}

TEST_CASE("parallel root split agrees with serial search") {
  SolveOptions par;
  par.jobs = 4;
  for (int n : {7, 9, 11}) {
    const Graph g = cycle_graph(n);
    CHECK(gmb(g, par) == gmb(g));
    CHECK(gmb_prime(g, par) == gmb_prime(g));
  }
}

TEST_CASE("dominating earlier never hurts") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 30; ++i) {
    const Graph g = random_connected_graph(7, rng);
    const VertexSet full = g.vertex_mask();
    std::uniform_int_distribution<std::uint64_t> bits;
    const VertexSet b = bits(rng) & full;
    const VertexSet a = (b | bits(rng)) & full;
    for (Player p : {Player::Dominator, Player::Staller}) {
      GameConfig ca{g, p, a, false, false};
      GameConfig cb{g, p, b, false, false};
      CHECK(solve(ca) <= solve(cb));
    }
  }
}

TEST_CASE("memo limit trips as a resource error") {
  SolveOptions tiny;
  tiny.memo_limit = 4;
  CHECK_THROWS_AS(gmb(cycle_graph(9), tiny), resource_error);
}
