#pragma once

#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "mbdom/graph.hpp"

namespace mbdom {

enum class Family {
  Path,
  Cycle,
  Star,
  Complete,
  Spider,
  DoubleStar,
  Grst,
  Gt,
  Xnm,
  Yk,
  Fig4,
};

Family family_from_name(std::string_view name);  // parse_error on unknown name
Graph generate(Family family, const std::vector<int>& params);

// "cycle:9", "grst:2,2,3", "fig4" -- the CLI strips a leading "gen:" first.
Graph generate(std::string_view spec);

Graph path_graph(int n);
Graph cycle_graph(int n);                               // n >= 3
Graph star_graph(int leaves);                           // K_{1,k}, n = k+1
Graph complete_graph(int n);
Graph spider_graph(const std::vector<int>& leg_lengths);
Graph double_star_graph(int a, int b);                  // adjacent centers, a+b leaves

// Path x1..xr with t-r+1 pendant triangles at x1, s-r+1 at x2, and a pendant
// leaf at each xi for i >= 3. Requires 2 <= r <= s <= t.
Graph grst_graph(int r, int s, int t);

Graph gt_graph(int t);          // t triangles sharing one center vertex
Graph xnm_graph(int n, int m);  // adjacent hubs x1,x2 with n resp. m pendant triangles, 1 <= m <= n
Graph yk_graph(int k);          // same shape as gt_graph; separate name kept for the union families
Graph fig4_graph();             // diamond 0,1,2,3 (missing 03) plus pendant u at 3

Graph tree_from_prufer(const std::vector<int>& code);  // n = code.size()+2

// Canonical string for a free tree (center-rooted AHU encoding); two trees get
// the same string iff they are isomorphic.
std::string tree_canonical_form(const Graph& tree);

// All non-isomorphic free trees of order exactly n, grown by leaf extension
// and deduplicated with tree_canonical_form.
std::vector<Graph> all_trees(int n);

Graph random_tree(int n, std::mt19937_64& rng);
Graph random_graph(int n, double edge_prob, std::mt19937_64& rng);
Graph random_connected_graph(int n, std::mt19937_64& rng);

}  // namespace mbdom
