#include "mbdom/engine.hpp"

#include <algorithm>
#include <thread>

namespace mbdom {

GameState initial_state(const GameConfig& config) {
  const VertexSet mask = config.graph.vertex_mask();
  if (config.pre_dominated & ~mask)
    throw std::invalid_argument("initial_state: pre_dominated contains vertices out of range");
  return GameState{mask, config.pre_dominated, config.first};
}

GameState apply_move(const Graph& g, const GameState& state, int v) {
  if (v < 0 || v >= g.n() || !vcontains(state.available, v))
    throw std::invalid_argument("apply_move: vertex " + std::to_string(v) + " not available");
  GameState next = state;
  next.available &= ~vbit(v);
  if (state.turn == Player::Dominator) next.dominated |= g.closed_neighborhood(v);
  next.turn = opponent(state.turn);
  return next;
}

std::size_t Solver::KeyHash::operator()(const Key& k) const {
  auto mix = [](std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  };
  return static_cast<std::size_t>(mix(k.a ^ mix(k.b)));
}

Solver::Solver(const GameConfig& config, SolveOptions options) : opt_(options) {
  const Graph& g = config.graph;
  if (g.n() > opt_.max_n && !opt_.allow_large)
    throw resource_error("solver: n=" + std::to_string(g.n()) + " exceeds cap of " +
                         std::to_string(opt_.max_n) + " (set allow_large to override)");
  full_ = g.vertex_mask();
  if (config.pre_dominated & ~full_)
    throw std::invalid_argument("solver: pre_dominated contains vertices out of range");
  init_ = GameState{full_, config.pre_dominated, config.first};
  staller_may_pass_ = config.staller_may_pass;
  dominator_may_pass_ = config.dominator_may_pass;
  cn_.resize(static_cast<std::size_t>(g.n()));
  for (int v = 0; v < g.n(); ++v) cn_[static_cast<std::size_t>(v)] = g.closed_neighborhood(v);
}

void Solver::check_state(const GameState& state) const {
  if ((state.available | state.dominated) & ~full_)
    throw std::invalid_argument("solver: state contains vertices out of range");
}

GameValue Solver::eval(VertexSet avail, VertexSet dominated, Player turn, bool last_was_pass) {
  if (dominated == full_) return GameValue::finite(0);
  // Both players draw from the same pool, so an empty pool ends the game;
  // only Dominator moves extend coverage, hence no coverage means no win.
  if (avail == 0) return GameValue::infinite();

  const bool dominator = (turn == Player::Dominator);
  Key key{avail, dominated | (dominator ? 0 : VertexSet{1} << 62) |
                     (last_was_pass ? VertexSet{1} << 63 : 0)};
  if (opt_.use_memo) {
    auto it = memo_.find(key);
    if (it != memo_.end())
      return it->second < 0 ? GameValue::infinite() : GameValue::finite(it->second);
  }

  GameValue result;
  if (dominator) {
    // Finishing in one beats anything else; no need to expand further.
    bool one = false;
    for (VertexSet rest = avail; rest; rest &= rest - 1) {
      if ((dominated | cn_[static_cast<std::size_t>(std::countr_zero(rest))]) == full_) {
        one = true;
        break;
      }
    }
    if (one) {
      result = GameValue::finite(1);
    } else {
      GameValue best = GameValue::infinite();
      // Consecutive passes would revisit an identical position, so a pass is
      // only offered when the previous move was not itself a pass.
      if (dominator_may_pass_ && !last_was_pass)
        best = std::min(best, eval(avail, dominated, Player::Staller, true));
      for (VertexSet rest = avail; rest; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        const GameValue child =
            eval(avail & ~vbit(v), dominated | cn_[static_cast<std::size_t>(v)],
                 Player::Staller, false)
                .plus(1);
        best = std::min(best, child);
      }
      result = best;
    }
  } else {
    GameValue worst = GameValue::finite(0);
    bool first = true;
    if (staller_may_pass_ && !last_was_pass) {
      worst = eval(avail, dominated, Player::Dominator, true);
      first = false;
    }
    for (VertexSet rest = avail; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const GameValue child = eval(avail & ~vbit(v), dominated, Player::Dominator, false);
      worst = first ? child : std::max(worst, child);
      first = false;
      if (!worst.is_finite()) break;  // cannot get worse for Dominator
    }
    result = worst;
  }

  if (opt_.use_memo) {
    if (memo_.size() >= opt_.memo_limit)
      throw resource_error("solver: memo limit of " + std::to_string(opt_.memo_limit) +
                           " entries exceeded");
    memo_.emplace(key, result.is_finite() ? result.moves() : -1);
  }
  return result;
}

GameValue Solver::value(const GameState& state) {
  check_state(state);
  return eval(state.available, state.dominated, state.turn, false);
}

GameValue Solver::solve() {
  return eval(init_.available, init_.dominated, init_.turn, false);
}

int Solver::best_move(const GameState& state) {
  check_state(state);
  if (state.available == 0) throw std::invalid_argument("best_move: no available vertex");

  if (state.turn == Player::Dominator) {
    for (VertexSet rest = state.available; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if ((state.dominated | cn_[static_cast<std::size_t>(v)]) == full_) return v;
    }
    GameValue best = GameValue::infinite();
    int best_v = std::countr_zero(state.available);
    for (VertexSet rest = state.available; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const GameValue child =
          eval(state.available & ~vbit(v),
               state.dominated | cn_[static_cast<std::size_t>(v)], Player::Staller, false)
              .plus(1);
      if (child < best) {
        best = child;
        best_v = v;
      }
    }
    return best_v;
  }

  GameValue worst = GameValue::finite(0);
  int worst_v = std::countr_zero(state.available);
  bool first = true;
  for (VertexSet rest = state.available; rest; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    const GameValue child = eval(state.available & ~vbit(v), state.dominated,
                                 Player::Dominator, false);
    if (first || child > worst) {
      worst = child;
      worst_v = v;
    }
    first = false;
    if (!worst.is_finite()) break;
  }
  return worst_v;
}

namespace {

// Root-level parallelism: each worker owns a Solver, so recomputation across
// workers is possible but results are identical; the combine is serial.
GameValue solve_root_parallel(const GameConfig& config, const SolveOptions& options) {
  Solver probe(config, options);  // validates caps and config
  const GameState root = initial_state(config);
  if (root.dominated == config.graph.vertex_mask()) return GameValue::finite(0);
  if (root.available == 0) return GameValue::infinite();

  std::vector<int> moves;
  for_each_vertex(root.available, [&](int v) { moves.push_back(v); });
  std::vector<GameValue> child(moves.size());

  const int jobs = std::max(1, std::min<int>(options.jobs, static_cast<int>(moves.size())));
  std::vector<std::thread> workers;
  workers.reserve(static_cast<std::size_t>(jobs));
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w]() {
      SolveOptions local = options;
      local.jobs = 1;
      for (std::size_t i = static_cast<std::size_t>(w); i < moves.size();
           i += static_cast<std::size_t>(jobs)) {
        Solver solver(config, local);
        child[i] = solver.value(apply_move(config.graph, root, moves[i]));
      }
    });
  }
  for (auto& t : workers) t.join();

  if (root.turn == Player::Dominator) {
    GameValue best = GameValue::infinite();
    for (auto v : child) best = std::min(best, v.plus(1));
    return best;
  }
  GameValue worst = child.front();
  for (auto v : child) worst = std::max(worst, v);
  return worst;
}

}  // namespace

GameValue solve(const GameConfig& config, const SolveOptions& options) {
  // Pass rules interact with root splitting (the root pass branch would need
  // its own treatment), so parallelism only kicks in for plain games.
  if (options.jobs > 1 && !config.staller_may_pass && !config.dominator_may_pass)
    return solve_root_parallel(config, options);
  Solver solver(config, options);
  return solver.value(initial_state(config));
}

GameValue gmb(const Graph& g, const SolveOptions& options) {
  return solve(GameConfig{g, Player::Dominator, 0, false, false}, options);
}

GameValue gmb_prime(const Graph& g, const SolveOptions& options) {
  return solve(GameConfig{g, Player::Staller, 0, false, false}, options);
}

int optimal_move(const GameConfig& config, const GameState& state,
                 const SolveOptions& options) {
  Solver solver(config, options);
  return solver.best_move(state);
}

BoundsReport verify_basic_bounds(const Graph& g, const SolveOptions& options) {
  BoundsReport report;
  report.n = g.n();
  report.gmb = gmb(g, options);
  report.gmb_prime = gmb_prime(g, options);

  if (g.n() >= 1) {
    if (report.gmb.is_finite())
      report.dgame_bound_ok = 1 <= report.gmb.moves() && report.gmb.moves() <= (g.n() + 1) / 2;
    if (report.gmb_prime.is_finite())
      report.sgame_bound_ok =
          1 <= report.gmb_prime.moves() && report.gmb_prime.moves() <= g.n() / 2;
  }

  report.chain_ok = report.gmb <= report.gmb_prime;
  if (g.n() <= 20) {
    report.gamma = domination_stats(g).gamma;
    report.chain_ok = report.chain_ok && GameValue::finite(report.gamma) <= report.gmb;
  }
  return report;
}

}  // namespace mbdom
