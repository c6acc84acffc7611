#include "mbdom/strategies.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "mbdom/residual.hpp"

namespace mbdom {

std::string GameRecord::serialize() const {
  std::ostringstream out;
  for (const Move& m : moves)
    out << (m.player == Player::Dominator ? 'D' : 'S') << ' ' << m.vertex << '\n';
  if (!fallback_moves.empty()) {
    out << "# fallback moves:";
    for (int i : fallback_moves) out << ' ' << i;
    out << '\n';
  }
  if (forfeit) out << "# forfeit: " << diagnostic << '\n';
  if (winner == Player::Dominator)
    out << "WINNER D " << dominator_moves << '\n';
  else
    out << "WINNER S\n";
  return out.str();
}

namespace {

int lowest_available(const GameState& state) {
  return std::countr_zero(state.available);
}

class PairingDominatorStrategy final : public Strategy {
 public:
  explicit PairingDominatorStrategy(Pairing x)
      : Strategy("pairing"), x_(std::move(x)) {}

  StrategyMove next_move(const GameConfig& config, const GameState& state,
                         const std::vector<Move>& history) override {
    if (!checked_) {
      if (!pairing_check(config.graph, x_))
        throw std::invalid_argument("pairing strategy: pairing does not dominate the graph");
      checked_ = true;
    }

    VertexSet dom_held = 0;
    for (const Move& m : history)
      if (m.player == Player::Dominator) dom_held |= vbit(m.vertex);

    // Answer the partner when Staller just entered an untouched pair.
    if (!history.empty() && history.back().player == Player::Staller) {
      const int s = history.back().vertex;
      for (auto [u, v] : x_.pairs) {
        if (s != u && s != v) continue;
        if ((dom_held & (vbit(u) | vbit(v))) == 0) {
          const int partner = (s == u) ? v : u;
          if (vcontains(state.available, partner)) return {partner, false};
        }
        break;
      }
    }

    for (auto [u, v] : x_.pairs) {
      if (dom_held & (vbit(u) | vbit(v))) continue;
      if (vcontains(state.available, u)) return {u, false};
      if (vcontains(state.available, v)) return {v, false};
    }
    return {lowest_available(state), false};
  }

 private:
  Pairing x_;
  bool checked_ = false;
};

// One planned exchange: Staller's move and the reply Dominator is forced to
// make (the other vertex of the matched pair).
struct PlanStep {
  int staller = -1;
  int reply = -1;
};

class StallerTreeStrategy final : public Strategy {
 public:
  StallerTreeStrategy(const Graph& tree, int v) : Strategy("tree"), tree_(tree) {
    const int n = tree.n();
    if (n < 2 || tree.edge_count() != n - 1 || !tree.is_connected())
      throw std::invalid_argument("tree strategy: input is not a tree with n >= 2");
    if (v < 0 || v >= n)
      throw std::invalid_argument("tree strategy: target vertex out of range");
    if (residual_decompose(tree).residual.n() != 0)
      throw std::invalid_argument("tree strategy: tree has no perfect matching");
    build_plan(tree.vertex_mask(), v);
  }

  StrategyMove next_move(const GameConfig& config, const GameState& state,
                         const std::vector<Move>& history) override {
    if (config.first != Player::Staller)
      throw std::invalid_argument("tree strategy: requires a Staller-start game");

    // Replay the forced line; a Dominator deviation lets Staller grab the
    // expected reply vertex, leaving its pair undominatable.
    std::size_t step = 0;
    std::optional<int> punish;
    for (const Move& m : history) {
      if (m.player == Player::Staller) continue;
      if (step >= plan_.size()) break;
      if (m.vertex != plan_[step].reply) {
        punish = plan_[step].reply;
        break;
      }
      ++step;
    }

    if (punish) {
      if (vcontains(state.available, *punish)) return {*punish, false};
      return {lowest_available(state), false};
    }
    if (step < plan_.size() && vcontains(state.available, plan_[step].staller))
      return {plan_[step].staller, false};
    return {lowest_available(state), false};
  }

 private:
  // Recursion from the matching-tree argument: take the support y of a
  // deepest leaf x (forcing the reply x) and continue on T - {x,y}; when the
  // target sits in {x,y}, finish that pair last, retargeting the recursion at
  // y's other neighbor z.
  void build_plan(VertexSet alive, int target) {
    if (std::popcount(alive) == 2) {
      const int a = std::countr_zero(alive);
      const int b = std::countr_zero(alive & (alive - 1));
      plan_.push_back({target, target == a ? b : a});
      return;
    }

    const auto [x, y] = deepest_leaf_pair(alive);
    if (target != x && target != y) {
      plan_.push_back({y, x});
      build_plan(alive & ~(vbit(x) | vbit(y)), target);
      return;
    }
    const VertexSet rest = tree_.adjacency(y) & alive & ~vbit(x);
    const int z = std::countr_zero(rest);
    build_plan(alive & ~(vbit(x) | vbit(y)), z);
    plan_.push_back({target, target == x ? y : x});
  }

  // BFS from the lowest live vertex; returns (deepest leaf, its support).
  // Ties go to the lowest index. The support has degree 2 because the live
  // subtree keeps a perfect matching throughout.
  std::pair<int, int> deepest_leaf_pair(VertexSet alive) const {
    const int root = std::countr_zero(alive);
    VertexSet frontier = vbit(root);
    VertexSet seen = vbit(root);
    int deepest = root;
    while (frontier) {
      VertexSet next = 0;
      for_each_vertex(frontier, [&](int v) { next |= tree_.adjacency(v) & alive; });
      next &= ~seen;
      if (!next) break;
      deepest = std::countr_zero(next);
      seen |= next;
      frontier = next;
    }
    const int x = deepest;
    const VertexSet nb = tree_.adjacency(x) & alive;
    const int y = std::countr_zero(nb);
    if (std::popcount(tree_.adjacency(y) & alive) != 2)
      throw std::logic_error("tree strategy: support degree is not 2");
    return {x, y};
  }

  Graph tree_;
  std::vector<PlanStep> plan_;
};

class StallerCycleStrategy final : public Strategy {
 public:
  StallerCycleStrategy(int n, Player first)
      : Strategy("cycle"), n_(n), first_(first) {
    if (n < 3) throw std::invalid_argument("cycle strategy: n must be >= 3");
  }

  StrategyMove next_move(const GameConfig& config, const GameState& state,
                         const std::vector<Move>& history) override {
    if (config.graph.n() != n_ || config.first != first_)
      throw std::invalid_argument("cycle strategy: config mismatch");
    const std::optional<int> target = first_ == Player::Staller
                                          ? sgame_target(history)
                                          : dgame_target(history);
    if (target && vcontains(state.available, *target)) return {*target, false};
    return {fallback(config, state), true};
  }

 private:
  int mod(int v) const { return ((v % n_) + n_) % n_; }

  // Open at 0; walk every second vertex away from Dominator's first reply.
  std::optional<int> sgame_target(const std::vector<Move>& history) const {
    if (history.empty()) return 0;
    if (history.size() < 2) return std::nullopt;
    const int first_reply = history[1].vertex;
    const int step = (first_reply == 1) ? -2 : 2;
    int expected = 0;
    // own moves sit at even indices; verify the walk is intact
    for (std::size_t i = 0; i < history.size(); i += 2) {
      if (history[i].vertex != expected) return std::nullopt;
      expected = mod(expected + step);
    }
    return expected;
  }

  // Answer Dominator's opener at distance 3; keep jumping 3 past his
  // new-territory replies; switch to every-second once he answers on the
  // trailing neighbor. Anything else is out of pattern.
  std::optional<int> dgame_target(const std::vector<Move>& history) const {
    if (history.empty() || n_ < 7) return std::nullopt;
    const int opener = history[0].vertex;
    if (history.size() == 1) return mod(opener + 3);

    enum class Mode { Advance, Ladder };
    Mode mode = Mode::Advance;
    int pos = mod(opener + 3);  // expected own move at index 1
    std::size_t i = 1;
    while (true) {
      if (history[i].vertex != pos) return std::nullopt;
      if (i + 1 >= history.size()) break;
      const int reply = history[i + 1].vertex;
      int next;
      if (mode == Mode::Advance && reply == mod(pos + 1)) {
        next = mod(reply + 3);
      } else if (reply == mod(pos - 1)) {
        mode = Mode::Ladder;
        next = mod(pos + 2);
      } else {
        return std::nullopt;
      }
      pos = next;
      i += 2;
    }
    return pos;
  }

  int fallback(const GameConfig& config, const GameState& state) {
    if (!solver_) solver_.emplace(config, SolveOptions{});
    return solver_->best_move(state);
  }

  int n_;
  Player first_;
  std::optional<Solver> solver_;
};

class OptimalStrategy final : public Strategy {
 public:
  OptimalStrategy(const GameConfig& config, const SolveOptions& options)
      : Strategy("optimal"), solver_(config, options) {}

  StrategyMove next_move(const GameConfig&, const GameState& state,
                         const std::vector<Move>&) override {
    return {solver_.best_move(state), false};
  }

 private:
  Solver solver_;
};

class RandomStrategy final : public Strategy {
 public:
  explicit RandomStrategy(std::uint64_t seed) : Strategy("random"), seed_(seed) {}

  StrategyMove next_move(const GameConfig&, const GameState& state,
                         const std::vector<Move>& history) override {
    auto mix = [](std::uint64_t x) {
      x += 0x9e3779b97f4a7c15ULL;
      x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
      x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
      return x ^ (x >> 31);
    };
    const int count = std::popcount(state.available);
    const std::uint64_t h =
        mix(seed_ ^ mix(state.available ^ mix(history.size())));
    int idx = static_cast<int>(h % static_cast<std::uint64_t>(count));
    VertexSet rest = state.available;
    while (idx-- > 0) rest &= rest - 1;
    return {std::countr_zero(rest), false};
  }

 private:
  std::uint64_t seed_;
};

}  // namespace

std::unique_ptr<Strategy> pairing_dominator_strategy(Pairing x) {
  return std::make_unique<PairingDominatorStrategy>(std::move(x));
}

std::unique_ptr<Strategy> staller_tree_strategy(const Graph& tree, int v) {
  return std::make_unique<StallerTreeStrategy>(tree, v);
}

std::unique_ptr<Strategy> staller_cycle_strategy(int n, Player first) {
  return std::make_unique<StallerCycleStrategy>(n, first);
}

std::unique_ptr<Strategy> optimal_strategy(const GameConfig& config,
                                           const SolveOptions& options) {
  return std::make_unique<OptimalStrategy>(config, options);
}

std::unique_ptr<Strategy> random_strategy(std::uint64_t seed) {
  return std::make_unique<RandomStrategy>(seed);
}

GameRecord simulate(const GameConfig& config, Strategy& dominator, Strategy& staller) {
  GameRecord record;
  GameState state = initial_state(config);
  const VertexSet full = config.graph.vertex_mask();
  int dom_moves = 0;

  while (true) {
    if (state.dominated == full) {
      record.winner = Player::Dominator;
      record.dominator_moves = dom_moves;
      break;
    }
    if (state.available == 0) {
      record.winner = Player::Staller;
      break;
    }

    Strategy& mover = (state.turn == Player::Dominator) ? dominator : staller;
    const StrategyMove mv = mover.next_move(config, state, record.moves);
    if (mv.vertex < 0 || mv.vertex >= config.graph.n() ||
        !vcontains(state.available, mv.vertex)) {
      record.winner = opponent(state.turn);
      record.forfeit = true;
      record.diagnostic = mover.name() + " returned unavailable vertex " +
                          std::to_string(mv.vertex);
      break;
    }

    if (mv.fallback) record.fallback_moves.push_back(static_cast<int>(record.moves.size()));
    record.moves.push_back({state.turn, mv.vertex});
    if (state.turn == Player::Dominator) ++dom_moves;
    state = apply_move(config.graph, state, mv.vertex);
  }

  record.final_dominated = state.dominated;
  return record;
}

}  // namespace mbdom
