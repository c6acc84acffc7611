#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>

#include "mbdom/game_value.hpp"
#include "mbdom/graph.hpp"

namespace mbdom {

enum class Player { Dominator, Staller };

constexpr Player opponent(Player p) {
  return p == Player::Dominator ? Player::Staller : Player::Dominator;
}

struct GameConfig {
  Graph graph;
  Player first = Player::Dominator;
  VertexSet pre_dominated = 0;  // vertices counted as dominated from the start
  bool staller_may_pass = false;
  bool dominator_may_pass = false;
};

// Sufficient statistic of a position: the move sequence itself is irrelevant,
// and the running move count is not part of the state (values are "additional
// Dominator moves needed from here").
struct GameState {
  VertexSet available = 0;  // vertices not yet chosen by either player
  VertexSet dominated = 0;
  Player turn = Player::Dominator;
};

GameState initial_state(const GameConfig& config);

// Picks v for the player to move; Dominator's pick also dominates N[v].
GameState apply_move(const Graph& g, const GameState& state, int v);

struct SolveOptions {
  int max_n = 24;          // refuse larger graphs unless allow_large
  bool allow_large = false;
  std::size_t memo_limit = std::size_t{1} << 26;  // entries; fail fast, no eviction
  bool use_memo = true;
  int jobs = 1;            // >1 evaluates root moves on worker threads
};

// Exhaustive minimax over (available, dominated, turn) with memoization.
// One Solver owns one memo; reuse an instance to share work across queries
// on the same configuration (e.g. repeated best_move calls in one game).
class Solver {
 public:
  explicit Solver(const GameConfig& config, SolveOptions options = {});

  GameValue solve();                       // value of the initial position
  GameValue value(const GameState& state);

  // Lowest-indexed vertex achieving the mover's optimal value.
  int best_move(const GameState& state);

  std::size_t memo_entries() const { return memo_.size(); }

 private:
  struct Key {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const;
  };

  GameValue eval(VertexSet avail, VertexSet dominated, Player turn, bool last_was_pass);
  void check_state(const GameState& state) const;

  std::vector<VertexSet> cn_;  // closed neighborhoods
  VertexSet full_ = 0;
  GameState init_;
  bool staller_may_pass_ = false;
  bool dominator_may_pass_ = false;
  SolveOptions opt_;
  std::unordered_map<Key, int, KeyHash> memo_;  // value encoded, -1 = infinite
};

GameValue solve(const GameConfig& config, const SolveOptions& options = {});
GameValue gmb(const Graph& g, const SolveOptions& options = {});        // Dominator-start game
GameValue gmb_prime(const Graph& g, const SolveOptions& options = {});  // Staller-start game

int optimal_move(const GameConfig& config, const GameState& state,
                 const SolveOptions& options = {});

struct BoundsReport {
  int n = 0;
  int gamma = -1;  // -1 when not computed (n above the domination_stats cap)
  GameValue gmb;
  GameValue gmb_prime;
  bool dgame_bound_ok = true;  // finite => 1 <= gmb <= ceil(n/2)
  bool sgame_bound_ok = true;  // finite => 1 <= gmb' <= floor(n/2)
  bool chain_ok = true;        // gamma <= gmb <= gmb'

  bool all_ok() const { return dgame_bound_ok && sgame_bound_ok && chain_ok; }
};

BoundsReport verify_basic_bounds(const Graph& g, const SolveOptions& options = {});

}  // namespace mbdom
