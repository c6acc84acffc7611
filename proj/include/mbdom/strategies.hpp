#pragma once

#include <memory>
#include <string>
#include <vector>

#include "mbdom/engine.hpp"
#include "mbdom/formulas.hpp"
#include "mbdom/graph.hpp"

namespace mbdom {

struct Move {
  Player player;
  int vertex;
};

struct GameRecord {
  std::vector<Move> moves;
  Player winner = Player::Staller;
  int dominator_moves = 0;  // meaningful when winner is Dominator
  VertexSet final_dominated = 0;
  bool forfeit = false;            // loser returned an unavailable vertex
  std::string diagnostic;          // forfeit details
  std::vector<int> fallback_moves; // indices into moves played via engine fallback

  // One "D v" / "S v" line per move, then "WINNER D <moves>" or "WINNER S".
  // Fallback/forfeit notes appear as '#' comment lines before the winner.
  std::string serialize() const;
};

struct StrategyMove {
  int vertex = -1;
  bool fallback = false;  // move came from an engine fallback, not the pattern
};

// Deterministic given (config, state, history); instantiated per game.
class Strategy {
 public:
  explicit Strategy(std::string name) : name_(std::move(name)) {}
  virtual ~Strategy() = default;

  virtual StrategyMove next_move(const GameConfig& config, const GameState& state,
                                 const std::vector<Move>& history) = 0;

  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

// Dominator answers inside the pairs of x: if Staller just hit a pair with no
// Dominator vertex, take the partner; otherwise seed the lowest pair without
// a Dominator vertex. Wins within |pairs| moves once pairing_check holds.
std::unique_ptr<Strategy> pairing_dominator_strategy(Pairing x);

// Staller-start play on a tree with a perfect matching forcing n/2 Dominator
// moves, with Staller's own last move on v. Repeatedly takes the support of a
// deepest leaf (BFS from the lowest-indexed remaining vertex, ties to the
// lowest index), expecting Dominator's forced reply on the leaf.
std::unique_ptr<Strategy> staller_tree_strategy(const Graph& tree, int v);

// Cycle play forcing floor(n/2) Dominator moves. Staller-start: open at 0,
// then every second vertex walking away from Dominator's first reply.
// Dominator-start: answer at distance 3, laddering to every-second when
// Dominator answers on the trailing neighbor; positions outside the pattern
// fall back to the engine-optimal move and are flagged in the record.
std::unique_ptr<Strategy> staller_cycle_strategy(int n, Player first);

// Plays engine.best_move; owns one Solver so repeated calls in a game share
// a memo.
std::unique_ptr<Strategy> optimal_strategy(const GameConfig& config,
                                           const SolveOptions& options = {});

// Uniform choice among available vertices, derived by hashing (seed, position);
// pure in the history, so games replay identically.
std::unique_ptr<Strategy> random_strategy(std::uint64_t seed);

// Referee: alternates turns from config.first, applies moves, stops when the
// Dominator picks dominate everything or the pool runs dry. An unavailable
// vertex forfeits the game for the strategy that produced it.
GameRecord simulate(const GameConfig& config, Strategy& dominator, Strategy& staller);

}  // namespace mbdom
