#include "mbdom/families.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <unordered_set>

namespace mbdom {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

// Two fresh vertices adjacent to each other and to `at`.
void attach_triangle(Graph& g, int at, int& next) {
  const int a = next++;
  const int b = next++;
  g.add_edge(at, a);
  g.add_edge(at, b);
  g.add_edge(a, b);
}

Graph triangles_at_center(int count, const std::string& msg) {
  require(count >= 1, msg);
  Graph g(1 + 2 * count);
  g.set_label(0, "c");
  int next = 1;
  for (int i = 0; i < count; ++i) attach_triangle(g, 0, next);
  return g;
}

}  // namespace

Graph path_graph(int n) {
  require(n >= 0, "path_graph: n must be >= 0");
  Graph g(n);
  for (int v = 0; v < n; ++v) {
    g.set_label(v, "x" + std::to_string(v + 1));
    if (v + 1 < n) g.add_edge(v, v + 1);
  }
  return g;
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle_graph: n must be >= 3");
  Graph g(n);
  for (int v = 0; v < n; ++v) {
    g.set_label(v, "x" + std::to_string(v + 1));
    g.add_edge(v, (v + 1) % n);
  }
  return g;
}

Graph star_graph(int leaves) {
  require(leaves >= 0, "star_graph: leaf count must be >= 0");
  Graph g(leaves + 1);
  g.set_label(0, "c");
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph complete_graph(int n) {
  require(n >= 0, "complete_graph: n must be >= 0");
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph spider_graph(const std::vector<int>& leg_lengths) {
  require(!leg_lengths.empty(), "spider_graph: need at least one leg");
  int total = 1;
  for (int len : leg_lengths) {
    require(len >= 1, "spider_graph: leg lengths must be >= 1");
    total += len;
  }
  Graph g(total);
  g.set_label(0, "c");
  int next = 1;
  for (int len : leg_lengths) {
    int prev = 0;
    for (int i = 0; i < len; ++i) {
      g.add_edge(prev, next);
      prev = next++;
    }
  }
  return g;
}

Graph double_star_graph(int a, int b) {
  require(a >= 0 && b >= 0, "double_star_graph: leaf counts must be >= 0");
  Graph g(a + b + 2);
  g.set_label(0, "c1");
  g.set_label(1, "c2");
  g.add_edge(0, 1);
  int next = 2;
  for (int i = 0; i < a; ++i) g.add_edge(0, next++);
  for (int i = 0; i < b; ++i) g.add_edge(1, next++);
  return g;
}

Graph grst_graph(int r, int s, int t) {
  require(2 <= r && r <= s && s <= t, "grst_graph: need 2 <= r <= s <= t");
  const int leaves = r - 2;
  const int n = r + leaves + 2 * (t - r + 1) + 2 * (s - r + 1);
  Graph g(n);
  for (int i = 0; i < r; ++i) {
    g.set_label(i, "x" + std::to_string(i + 1));
    if (i + 1 < r) g.add_edge(i, i + 1);
  }
  int next = r;
  for (int i = 0; i < t - r + 1; ++i) attach_triangle(g, 0, next);
  for (int i = 0; i < s - r + 1; ++i) attach_triangle(g, 1, next);
  for (int i = 2; i < r; ++i) {
    g.set_label(next, "y" + std::to_string(i + 1));
    g.add_edge(i, next++);
  }
  return g;
}

Graph gt_graph(int t) { return triangles_at_center(t, "gt_graph: t must be >= 1"); }

Graph yk_graph(int k) { return triangles_at_center(k, "yk_graph: k must be >= 1"); }

Graph xnm_graph(int n, int m) {
  require(1 <= m && m <= n, "xnm_graph: need 1 <= m <= n");
  Graph g(2 + 2 * n + 2 * m);
  g.set_label(0, "x1");
  g.set_label(1, "x2");
  g.add_edge(0, 1);
  int next = 2;
  for (int i = 0; i < n; ++i) attach_triangle(g, 0, next);
  for (int i = 0; i < m; ++i) attach_triangle(g, 1, next);
  return g;
}

Graph fig4_graph() {
  Graph g(5);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  g.add_edge(1, 3);
  g.add_edge(2, 3);
  g.add_edge(3, 4);
  g.set_label(4, "u");
  return g;
}

Family family_from_name(std::string_view name) {
  if (name == "path") return Family::Path;
  if (name == "cycle") return Family::Cycle;
  if (name == "star") return Family::Star;
  if (name == "complete") return Family::Complete;
  if (name == "spider") return Family::Spider;
  if (name == "double_star") return Family::DoubleStar;
  if (name == "grst") return Family::Grst;
  if (name == "gt") return Family::Gt;
  if (name == "xnm") return Family::Xnm;
  if (name == "yk") return Family::Yk;
  if (name == "fig4") return Family::Fig4;
  throw parse_error("unknown graph family '" + std::string(name) + "'");
}

namespace {

void need_params(const std::vector<int>& params, std::size_t count, const char* family) {
  if (params.size() != count)
    throw parse_error(std::string(family) + ": expected " + std::to_string(count) +
                      " parameter(s), got " + std::to_string(params.size()));
}

}  // namespace

Graph generate(Family family, const std::vector<int>& params) {
  switch (family) {
    case Family::Path:
      need_params(params, 1, "path");
      return path_graph(params[0]);
    case Family::Cycle:
      need_params(params, 1, "cycle");
      return cycle_graph(params[0]);
    case Family::Star:
      need_params(params, 1, "star");
      return star_graph(params[0]);
    case Family::Complete:
      need_params(params, 1, "complete");
      return complete_graph(params[0]);
    case Family::Spider:
      if (params.empty()) throw parse_error("spider: expected at least one leg length");
      return spider_graph(params);
    case Family::DoubleStar:
      need_params(params, 2, "double_star");
      return double_star_graph(params[0], params[1]);
    case Family::Grst:
      need_params(params, 3, "grst");
      return grst_graph(params[0], params[1], params[2]);
    case Family::Gt:
      need_params(params, 1, "gt");
      return gt_graph(params[0]);
    case Family::Xnm:
      need_params(params, 2, "xnm");
      return xnm_graph(params[0], params[1]);
    case Family::Yk:
      need_params(params, 1, "yk");
      return yk_graph(params[0]);
    case Family::Fig4:
      need_params(params, 0, "fig4");
      return fig4_graph();
  }
  throw parse_error("unknown graph family");
}

Graph generate(std::string_view spec) {
  std::string_view name = spec;
  std::vector<int> params;
  if (auto colon = spec.find(':'); colon != std::string_view::npos) {
    name = spec.substr(0, colon);
    std::string_view rest = spec.substr(colon + 1);
    while (!rest.empty()) {
      auto comma = rest.find(',');
      std::string_view tok = rest.substr(0, comma);
      try {
        std::size_t used = 0;
        std::string t(tok);
        int value = std::stoi(t, &used);
        if (used != t.size()) throw std::invalid_argument(t);
        params.push_back(value);
      } catch (const std::exception&) {
        throw parse_error("bad generator parameter '" + std::string(tok) + "' in '" +
                          std::string(spec) + "'");
      }
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  }
  return generate(family_from_name(name), params);
}

Graph tree_from_prufer(const std::vector<int>& code) {
  const int n = static_cast<int>(code.size()) + 2;
  Graph g(n);
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int c : code) {
    require(0 <= c && c < n, "tree_from_prufer: code entry out of range");
    ++degree[static_cast<std::size_t>(c)];
  }
  for (int c : code) {
    for (int leaf = 0; leaf < n; ++leaf) {
      if (degree[static_cast<std::size_t>(leaf)] == 1) {
        g.add_edge(leaf, c);
        --degree[static_cast<std::size_t>(leaf)];
        --degree[static_cast<std::size_t>(c)];
        break;
      }
    }
  }
  int u = -1;
  for (int v = 0; v < n; ++v)
    if (degree[static_cast<std::size_t>(v)] == 1) {
      if (u < 0)
        u = v;
      else
        g.add_edge(u, v);
    }
  return g;
}

namespace {

std::string ahu_code(const Graph& t, int v, int parent) {
  std::vector<std::string> child_codes;
  for_each_vertex(t.adjacency(v) & ~(parent >= 0 ? vbit(parent) : VertexSet{0}),
                  [&](int c) { child_codes.push_back(ahu_code(t, c, v)); });
  std::sort(child_codes.begin(), child_codes.end());
  std::string out = "(";
  for (const auto& c : child_codes) out += c;
  out += ")";
  return out;
}

std::vector<int> tree_centers(const Graph& t) {
  const int n = t.n();
  std::vector<int> deg(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = t.degree(v);
  std::vector<int> layer;
  std::vector<bool> removed(static_cast<std::size_t>(n), false);
  for (int v = 0; v < n; ++v)
    if (deg[static_cast<std::size_t>(v)] <= 1) layer.push_back(v);
  int remaining = n;
  while (remaining > 2) {
    std::vector<int> next;
    for (int v : layer) {
      removed[static_cast<std::size_t>(v)] = true;
      --remaining;
      for_each_vertex(t.adjacency(v), [&](int u) {
        if (!removed[static_cast<std::size_t>(u)] && --deg[static_cast<std::size_t>(u)] == 1)
          next.push_back(u);
      });
    }
    layer = std::move(next);
  }
  std::vector<int> centers;
  for (int v = 0; v < n; ++v)
    if (!removed[static_cast<std::size_t>(v)]) centers.push_back(v);
  return centers;
}

}  // namespace

std::string tree_canonical_form(const Graph& tree) {
  const int n = tree.n();
  if (n == 0) return "0:";
  if (n == 1) return "1:()";
  auto centers = tree_centers(tree);
  if (centers.size() == 1) return "1:" + ahu_code(tree, centers[0], -1);
  std::string a = ahu_code(tree, centers[0], centers[1]);
  std::string b = ahu_code(tree, centers[1], centers[0]);
  if (b < a) std::swap(a, b);
  return "2:(" + a + b + ")";
}

std::vector<Graph> all_trees(int n) {
  if (n <= 0) return {};
  std::vector<Graph> cur{Graph(1)};
  for (int k = 2; k <= n; ++k) {
    std::vector<Graph> next;
    std::unordered_set<std::string> seen;
    for (const Graph& t : cur) {
      for (int v = 0; v < t.n(); ++v) {
        Graph e(k);
        for (auto [x, y] : t.edges()) e.add_edge(x, y);
        e.add_edge(v, k - 1);
        if (seen.insert(tree_canonical_form(e)).second) next.push_back(std::move(e));
      }
    }
    cur = std::move(next);
  }
  return cur;
}

Graph random_tree(int n, std::mt19937_64& rng) {
  require(n >= 1, "random_tree: n must be >= 1");
  if (n == 1) return Graph(1);
  if (n == 2) {
    Graph g(2);
    g.add_edge(0, 1);
    return g;
  }
  std::vector<int> code(static_cast<std::size_t>(n - 2));
  for (auto& c : code) c = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
  return tree_from_prufer(code);
}

Graph random_graph(int n, double edge_prob, std::mt19937_64& rng) {
  require(n >= 0, "random_graph: n must be >= 0");
  Graph g(n);
  // 53-bit uniform in [0,1); avoids distribution objects for portability
  auto coin = [&]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53 < edge_prob; };
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin()) g.add_edge(u, v);
  return g;
}

Graph random_connected_graph(int n, std::mt19937_64& rng) {
  require(n >= 1, "random_connected_graph: n must be >= 1");
  Graph g = random_tree(n, rng);
  const double extra = 0.05 + 0.30 * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v)) continue;
      if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < extra) g.add_edge(u, v);
    }
  return g;
}

}  // namespace mbdom
