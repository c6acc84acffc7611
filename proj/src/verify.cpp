#include "mbdom/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "mbdom/families.hpp"
#include "mbdom/formulas.hpp"
#include "mbdom/residual.hpp"

namespace mbdom::verify {

bool SuiteReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

namespace {

std::string one_line(const Graph& g) {
  std::string s = g.to_edge_list();
  std::replace(s.begin(), s.end(), '\n', ';');
  if (!s.empty() && s.back() == ';') s.pop_back();
  return s;
}

// Accumulates one named property over many instances, keeping the first
// counterexample only.
struct Check {
  CheckResult result;

  explicit Check(std::string name) { result.name = std::move(name); }

  bool note(bool ok, const Graph& g, const std::string& extra = "") {
    ++result.instances;
    if (!ok && result.passed) {
      result.passed = false;
      result.detail = one_line(g);
      if (!extra.empty()) result.detail += " | " + extra;
    }
    return ok;
  }
};

std::vector<Graph> tree_pool(int max_n) {
  std::vector<Graph> pool;
  for (int n = 1; n <= max_n; ++n)
    for (Graph& t : all_trees(n)) pool.push_back(std::move(t));
  return pool;
}

std::vector<Graph> random_pool(int count, int min_n, int max_n,
                               std::mt19937_64& rng, bool connected) {
  std::vector<Graph> pool;
  std::uniform_int_distribution<int> size(min_n, max_n);
  std::uniform_real_distribution<double> prob(0.15, 0.75);
  pool.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const int n = size(rng);
    pool.push_back(connected ? random_connected_graph(n, rng)
                             : random_graph(n, prob(rng), rng));
  }
  return pool;
}

SuiteReport suite_bounds(const Options& opt) {
  SuiteReport rep{"bounds", {}};
  const int max_n = opt.max_n > 0 ? opt.max_n : 10;
  std::mt19937_64 rng(opt.seed);

  Check c("bounds_trees");
  for (const Graph& t : tree_pool(std::min(max_n, 8)))
    if (!c.note(verify_basic_bounds(t, opt.solve).all_ok(), t)) break;
  rep.checks.push_back(c.result);

  Check r("bounds_random");
  for (const Graph& g : random_pool(50, 1, max_n, rng, false))
    if (!r.note(verify_basic_bounds(g, opt.solve).all_ok(), g)) break;
  rep.checks.push_back(r.result);

  Check named("bounds_named");
  std::vector<Graph> specials;
  specials.push_back(disjoint_union(complete_graph(1),
                                    disjoint_union(complete_graph(2), complete_graph(2))));
  specials.push_back(cycle_graph(6));
  specials.push_back(complete_graph(1));
  for (const Graph& g : specials)
    if (!named.note(verify_basic_bounds(g, opt.solve).all_ok(), g)) break;
  rep.checks.push_back(named.result);
  return rep;
}

SuiteReport suite_trees(const Options& opt) {
  SuiteReport rep{"trees", {}};
  const int max_n = opt.max_n > 0 ? opt.max_n : 10;

  Check c("tree_formula_matches_search");
  for (const Graph& t : tree_pool(max_n)) {
    const auto [d, s] = tree_values(t);
    const GameValue ed = gmb(t, opt.solve);
    const GameValue es = gmb_prime(t, opt.solve);
    if (!c.note(d == ed && s == es, t,
                "formula=(" + d.str() + "," + s.str() + ") search=(" + ed.str() +
                    "," + es.str() + ")"))
      break;
  }
  rep.checks.push_back(c.result);
  return rep;
}

SuiteReport suite_cycles(const Options& opt) {
  SuiteReport rep{"cycles", {}};
  const int max_n = opt.max_n > 0 ? opt.max_n : 14;

  Check c("cycle_formula_matches_search");
  for (int n = 3; n <= max_n; ++n) {
    const Graph g = cycle_graph(n);
    const auto [d, s] = cycle_values(n);
    const GameValue want = GameValue::finite(n / 2);
    if (!c.note(d == want && s == want && gmb(g, opt.solve) == want &&
                    gmb_prime(g, opt.solve) == want,
                g))
      break;
  }
  rep.checks.push_back(c.result);
  return rep;
}

SuiteReport suite_residual(const Options& opt) {
  SuiteReport rep{"residual", {}};
  const int max_tree = opt.max_n > 0 ? opt.max_n : 10;
  std::mt19937_64 rng(opt.seed);

  std::vector<Graph> pool = tree_pool(max_tree);
  for (Graph& g : random_pool(30, 2, std::min(max_tree + 1, 11), rng, true))
    pool.push_back(std::move(g));

  Check sg("sgame_reduction_exact");
  Check dg("dgame_reduction_sandwich");
  Check tr("matching_transfer");
  Check fx("residual_is_fixpoint");
  for (const Graph& g : pool) {
    const ResidualDecomposition dec = residual_decompose(g);
    const ReducedValues rv = reduce_and_solve(g, opt.solve);
    const GameValue s = gmb_prime(g, opt.solve);
    const GameValue d = gmb(g, opt.solve);
    sg.note(rv.sgame_exact == s, g,
            "reduced=" + rv.sgame_exact.str() + " search=" + s.str());
    dg.note(rv.dgame_low <= d && d <= rv.dgame_high, g,
            "search=" + d.str() + " range=[" + rv.dgame_low.str() + "," +
                rv.dgame_high.str() + "]");
    tr.note(check_matching_transfer(g), g);
    fx.note(is_residual_fixpoint(dec.residual) &&
                residual_decompose(dec.residual).removed_pairs.empty(),
            g);
  }
  rep.checks.push_back(sg.result);
  rep.checks.push_back(dg.result);
  rep.checks.push_back(tr.result);
  rep.checks.push_back(fx.result);

  // Removal order must not matter: compare the default order against seeded
  // random orders up to isomorphism.
  Check uq("residual_unique_up_to_iso");
  for (const Graph& g : pool) {
    if (g.n() > 11) continue;
    const Graph base = residual_decompose(g).residual;
    bool ok = true;
    for (std::uint64_t k = 0; k < 6 && ok; ++k)
      ok = are_isomorphic(base, residual_decompose_seeded(g, opt.seed + k).residual);
    if (!uq.note(ok, g)) break;
  }
  rep.checks.push_back(uq.result);

  // The removed vertices induce a forest whose unique perfect matching is
  // exactly the removed pair list.
  Check pm("removed_pairs_unique_matching");
  for (const Graph& g : pool) {
    const ResidualDecomposition dec = residual_decompose(g);
    const VertexSet removed = dec.removed_mask();
    if (std::popcount(removed) > 12) continue;
    std::vector<int> orig;
    const Graph h = g.induced(removed, &orig);
    bool ok = std::popcount(removed) ==
              2 * static_cast<int>(dec.removed_pairs.size());
    VertexSet seen = 0;
    for (auto [a, b] : dec.removed_pairs) {
      ok = ok && g.has_edge(a, b) && !(seen & vbit(a)) && !(seen & vbit(b));
      seen |= vbit(a) | vbit(b);
    }
    ok = ok && seen == removed;
    if (h.n() > 0) ok = ok && count_perfect_matchings(h) == 1;
    if (!pm.note(ok, g)) break;
  }
  rep.checks.push_back(pm.result);
  return rep;
}

SuiteReport suite_union(const Options& opt) {
  SuiteReport rep{"union", {}};
  const int max_n = opt.max_n > 0 ? opt.max_n : 7;
  std::mt19937_64 rng(opt.seed);

  Check c("union_bounds_bracket_search");
  for (int i = 0; i < 30; ++i) {
    std::uniform_int_distribution<int> size(1, max_n);
    std::uniform_real_distribution<double> prob(0.2, 0.8);
    const Graph g = random_graph(size(rng), prob(rng), rng);
    const Graph h = random_graph(size(rng), prob(rng), rng);
    const Graph u = disjoint_union(g, h);
    const UnionBounds ub = union_bounds(gmb(g, opt.solve), gmb_prime(g, opt.solve),
                                        gmb(h, opt.solve), gmb_prime(h, opt.solve));
    const GameValue d = gmb(u, opt.solve);
    const GameValue s = gmb_prime(u, opt.solve);
    if (!c.note(ub.dgame_low <= d && d <= ub.dgame_high && ub.sgame_low <= s &&
                    s <= ub.sgame_high,
                u,
                "d=" + d.str() + " in [" + ub.dgame_low.str() + "," +
                    ub.dgame_high.str() + "] s=" + s.str() + " in [" +
                    ub.sgame_low.str() + "," + ub.sgame_high.str() + "]"))
      break;
  }
  rep.checks.push_back(c.result);

  Check sharp("union_bounds_sharp_families");
  for (int k = 1; k <= 3; ++k) {
    // t pendant triangles at one hub: d-game 1, s-game t. Unions of these
    // realize both ends of the bracket.
    const Graph a = gt_graph(k);
    const Graph b = gt_graph(k + 1);
    const Graph u = disjoint_union(a, b);
    const UnionBounds ub =
        union_bounds(gmb(a, opt.solve), gmb_prime(a, opt.solve), gmb(b, opt.solve),
                     gmb_prime(b, opt.solve));
    const GameValue d = gmb(u, opt.solve);
    const GameValue s = gmb_prime(u, opt.solve);
    if (!sharp.note(ub.dgame_low <= d && d <= ub.dgame_high && ub.sgame_low <= s &&
                        s <= ub.sgame_high,
                    u))
      break;
  }
  rep.checks.push_back(sharp.result);
  return rep;
}

SuiteReport suite_lemmas(const Options& opt) {
  SuiteReport rep{"lemmas", {}};
  const int max_n = opt.max_n > 0 ? opt.max_n : 10;
  std::mt19937_64 rng(opt.seed);

  // Dominating more vertices up front never hurts Dominator.
  Check cont("continuation_monotone");
  for (const Graph& g : random_pool(50, 1, std::min(max_n + 2, 12), rng, false)) {
    const VertexSet full = g.vertex_mask();
    std::uniform_int_distribution<std::uint64_t> bits;
    const VertexSet b = bits(rng) & full;
    const VertexSet a = (b | bits(rng)) & full;
    bool ok = true;
    for (Player p : {Player::Dominator, Player::Staller}) {
      GameConfig ca{g, p, a, false, false};
      GameConfig cb{g, p, b, false, false};
      ok = ok && solve(ca, opt.solve) <= solve(cb, opt.solve);
    }
    if (!cont.note(ok, g)) break;
  }
  rep.checks.push_back(cont.result);

  // Letting either player pass changes nothing.
  Check skip("pass_moves_are_worthless");
  {
    std::vector<Graph> pool = tree_pool(std::min(max_n, 8));
    for (Graph& g : random_pool(50, 1, max_n, rng, false)) pool.push_back(std::move(g));
    for (const Graph& g : pool) {
      bool ok = true;
      for (Player p : {Player::Dominator, Player::Staller}) {
        const GameValue base = solve({g, p, 0, false, false}, opt.solve);
        ok = ok && solve({g, p, 0, true, false}, opt.solve) == base;
        ok = ok && solve({g, p, 0, false, true}, opt.solve) == base;
        ok = ok && solve({g, p, 0, true, true}, opt.solve) == base;
      }
      if (!skip.note(ok, g)) break;
    }
  }
  rep.checks.push_back(skip.result);

  // A pair list dominates in the game sense iff every one-per-pair
  // transversal is a dominating set.
  Check pair("pairing_equals_transversals");
  for (int i = 0; i < 60; ++i) {
    std::uniform_int_distribution<int> size(2, max_n);
    std::uniform_real_distribution<double> prob(0.3, 0.9);
    const Graph g = random_graph(size(rng), prob(rng), rng);
    std::vector<int> perm(static_cast<std::size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) perm[static_cast<std::size_t>(v)] = v;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::uniform_int_distribution<int> kd(1, std::max(1, g.n() / 2));
    const int k = kd(rng);
    std::vector<std::pair<int, int>> pairs;
    for (int j = 0; j + 1 < 2 * k && j + 1 < g.n(); j += 2)
      pairs.emplace_back(perm[static_cast<std::size_t>(j)],
                         perm[static_cast<std::size_t>(j + 1)]);
    if (pairs.empty()) continue;
    const Pairing x = make_pairing(g, pairs);
    bool oracle = true;
    for (std::uint64_t mask = 0; mask < (1ULL << pairs.size()) && oracle; ++mask) {
      VertexSet chosen = 0;
      for (std::size_t j = 0; j < pairs.size(); ++j)
        chosen |= vbit((mask >> j) & 1 ? pairs[j].second : pairs[j].first);
      oracle = is_dominating(g, chosen);
    }
    if (!pair.note(pairing_check(g, x) == oracle, g)) break;
  }
  rep.checks.push_back(pair.result);

  // A dominating matching of k edges caps both game values at k.
  Check dm("dominating_matching_caps_values");
  for (const Graph& g : random_pool(60, 1, max_n, rng, false)) {
    const auto x = find_dominating_matching(g);
    bool ok = true;
    if (x) {
      const GameValue cap = GameValue::finite(static_cast<int>(x->pairs.size()));
      ok = gmb(g, opt.solve) <= cap && gmb_prime(g, opt.solve) <= cap;
    }
    if (!dm.note(ok, g)) break;
  }
  rep.checks.push_back(dm.result);

  Check chain("dgame_bounds_sgame");
  for (const Graph& g : random_pool(50, 1, max_n, rng, false))
    if (!chain.note(verify_basic_bounds(g, opt.solve).all_ok(), g)) break;
  rep.checks.push_back(chain.result);

  // For domination number 2: game value stays 2 exactly when some vertex
  // lies in two different minimum dominating sets.
  Check g2("two_sets_witness_iff_value_two");
  {
    int seen = 0;
    std::vector<Graph> pool;
    pool.push_back(cycle_graph(4));
    pool.push_back(cycle_graph(6));
    pool.push_back(path_graph(5));
    while (seen < 500 && pool.size() < 60) {
      ++seen;
      std::uniform_int_distribution<int> size(3, std::min(max_n, 9));
      std::uniform_real_distribution<double> prob(0.2, 0.7);
      Graph g = random_graph(size(rng), prob(rng), rng);
      if (domination_stats(g).gamma == 2) pool.push_back(std::move(g));
    }
    for (const Graph& g : pool) {
      const bool witness = gamma2_witness(g).has_value();
      const bool value2 = gmb(g, opt.solve) == GameValue::finite(2);
      if (!g2.note(witness == value2, g)) break;
    }
  }
  rep.checks.push_back(g2.result);

  // Too few minimum dominating sets force the game value above gamma.
  Check es("scarce_minimum_sets_raise_value");
  {
    std::vector<Graph> pool = random_pool(50, 1, max_n, rng, false);
    pool.push_back(cycle_graph(14));
    pool.push_back(cycle_graph(8));
    for (const Graph& g : pool) {
      bool ok = true;
      if (g.n() > 0 && erdos_selfridge_check(g)) {
        const DomStats st = domination_stats(g);
        const GameValue d = gmb(g, opt.solve);
        ok = !d.is_finite() || d.moves() > st.gamma;
      }
      if (!es.note(ok, g)) break;
    }
  }
  rep.checks.push_back(es.result);
  return rep;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"bounds", "trees", "cycles", "residual", "union", "lemmas"};
}

SuiteReport run_suite(const std::string& suite, const Options& opt) {
  if (suite == "bounds") return suite_bounds(opt);
  if (suite == "trees") return suite_trees(opt);
  if (suite == "cycles") return suite_cycles(opt);
  if (suite == "residual") return suite_residual(opt);
  if (suite == "union") return suite_union(opt);
  if (suite == "lemmas") return suite_lemmas(opt);
  throw std::invalid_argument("unknown verification suite: " + suite);
}

}  // namespace mbdom::verify
