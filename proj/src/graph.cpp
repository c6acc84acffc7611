#include "mbdom/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace mbdom {

Graph::Graph(int n) {
  if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
  if (n > kMaxVertices)
    throw std::invalid_argument("Graph: vertex count " + std::to_string(n) +
                                " exceeds cap of " + std::to_string(kMaxVertices));
  n_ = n;
  adj_.assign(static_cast<std::size_t>(n), 0);
  labels_.assign(static_cast<std::size_t>(n), std::string());
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw std::out_of_range("Graph: vertex " + std::to_string(v) + " out of range [0," +
                            std::to_string(n_) + ")");
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
  return twice / 2;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(u));
  adj_[u] |= vbit(v);
  adj_[v] |= vbit(u);
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return vcontains(adj_[u], v);
}

VertexSet Graph::adjacency(int v) const {
  check_vertex(v);
  return adj_[v];
}

VertexSet Graph::closed_neighborhood(int v) const {
  check_vertex(v);
  return adj_[v] | vbit(v);
}

const std::string& Graph::label(int v) const {
  check_vertex(v);
  return labels_[v];
}

void Graph::set_label(int v, std::string label) {
  check_vertex(v);
  labels_[v] = std::move(label);
}

std::optional<int> Graph::find_label(std::string_view label) const {
  for (int v = 0; v < n_; ++v)
    if (labels_[v] == label) return v;
  return std::nullopt;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for_each_vertex(adj_[u] & ~(vbit(u) | (vbit(u) - 1)), [&](int v) { out.emplace_back(u, v); });
  return out;
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  VertexSet seen = vbit(0);
  VertexSet frontier = vbit(0);
  while (frontier) {
    VertexSet next = 0;
    for_each_vertex(frontier, [&](int v) { next |= adj_[v]; });
    frontier = next & ~seen;
    seen |= frontier;
  }
  return seen == vertex_mask();
}

Graph Graph::induced(VertexSet keep, std::vector<int>* original_index) const {
  keep &= vertex_mask();
  std::vector<int> old_of;
  old_of.reserve(static_cast<std::size_t>(std::popcount(keep)));
  for_each_vertex(keep, [&](int v) { old_of.push_back(v); });

  Graph out(static_cast<int>(old_of.size()));
  for (int i = 0; i < out.n(); ++i) {
    out.labels_[i] = labels_[old_of[i]];
    for (int j = i + 1; j < out.n(); ++j)
      if (vcontains(adj_[old_of[i]], old_of[j])) out.add_edge(i, j);
  }
  if (original_index) *original_index = std::move(old_of);
  return out;
}

std::string Graph::to_edge_list() const {
  auto es = edges();
  std::ostringstream out;
  out << n_ << ' ' << es.size() << '\n';
  for (auto [u, v] : es) out << u << ' ' << v << '\n';
  return out.str();
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph out(a.n() + b.n());
  for (int v = 0; v < a.n(); ++v)
    if (!a.label(v).empty()) out.set_label(v, a.label(v));
  for (int v = 0; v < b.n(); ++v)
    if (!b.label(v).empty()) out.set_label(a.n() + v, b.label(v));
  for (auto [u, v] : a.edges()) out.add_edge(u, v);
  for (auto [u, v] : b.edges()) out.add_edge(a.n() + u, a.n() + v);
  return out;
}

namespace {

// Whole-token integer parse; rejects trailing junk like "1x".
bool parse_int(std::string_view tok, long& out) {
  const char* b = tok.data();
  const char* e = b + tok.size();
  auto res = std::from_chars(b, e, out);
  return res.ec == std::errc() && res.ptr == e;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> toks;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) toks.push_back(line.substr(i, j - i));
    i = j;
  }
  return toks;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  long n = -1, m = -1, edges_read = 0;
  Graph g;

  auto fail = [&](const std::string& msg) -> void {
    throw parse_error("line " + std::to_string(lineno) + ": " + msg);
  };

  while (std::getline(in, line)) {
    ++lineno;
    auto toks = split_ws(line);
    if (toks.empty() || toks[0].front() == '#') continue;

    if (n < 0) {
      if (toks.size() != 2) fail("expected header 'n m'");
      long hn, hm;
      if (!parse_int(toks[0], hn) || !parse_int(toks[1], hm)) fail("malformed header 'n m'");
      if (hn < 0 || hm < 0) fail("negative count in header");
      if (hn > kMaxVertices)
        fail("vertex count " + std::to_string(hn) + " exceeds cap of " +
             std::to_string(kMaxVertices));
      n = hn;
      m = hm;
      g = Graph(static_cast<int>(n));
      continue;
    }

    if (edges_read >= m) fail("unexpected line after " + std::to_string(m) + " edges");
    if (toks.size() != 2) fail("expected edge 'u v'");
    long u, v;
    if (!parse_int(toks[0], u) || !parse_int(toks[1], v)) fail("malformed edge 'u v'");
    if (u < 0 || u >= n || v < 0 || v >= n)
      fail("vertex out of range [0," + std::to_string(n) + ")");
    if (u == v) fail("self-loop at vertex " + std::to_string(u));
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
    ++edges_read;
  }

  if (n < 0) throw parse_error("missing 'n m' header");
  if (edges_read != m)
    throw parse_error("expected " + std::to_string(m) + " edges, got " +
                      std::to_string(edges_read));
  return g;
}

bool is_dominating(const Graph& g, VertexSet s) {
  s &= g.vertex_mask();
  VertexSet covered = 0;
  for_each_vertex(s, [&](int v) { covered |= g.closed_neighborhood(v); });
  return covered == g.vertex_mask();
}

DomStats domination_stats(const Graph& g, int cap) {
  const int n = g.n();
  if (n > cap)
    throw resource_error("domination_stats: n=" + std::to_string(n) + " exceeds cap of " +
                         std::to_string(cap));
  if (n == 0) return DomStats{0, 1, 0};

  const VertexSet full = g.vertex_mask();
  std::vector<VertexSet> cn(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) cn[static_cast<std::size_t>(v)] = g.closed_neighborhood(v);

  const VertexSet limit = full;  // all-ones for n vertices
  for (int k = 1; k <= n; ++k) {
    std::uint64_t count = 0;
    VertexSet witness = 0;
    VertexSet s = vbit(k) - 1;  // lowest k bits; Gosper's hack walks ascending
    while (true) {
      VertexSet covered = 0;
      for (VertexSet rest = s; rest; rest &= rest - 1)
        covered |= cn[static_cast<std::size_t>(std::countr_zero(rest))];
      if (covered == full) {
        if (count == 0) witness = s;
        ++count;
      }
      const VertexSet c = s & (~s + 1);
      const VertexSet r = s + c;
      if (r > limit) break;  // s was the top k-bit subset
      s = (((r ^ s) >> 2) / c) | r;
      if (s > limit) break;
    }
    if (count > 0) return DomStats{k, count, witness};
  }
  return DomStats{n, 1, full};  // unreachable: the full set dominates
}

namespace {

bool pm_search(const std::vector<VertexSet>& adj, VertexSet mask,
               std::unordered_set<VertexSet>& dead) {
  if (mask == 0) return true;
  if (dead.contains(mask)) return false;
  const int v = std::countr_zero(mask);
  VertexSet cands = adj[static_cast<std::size_t>(v)] & mask;
  while (cands) {
    const int u = std::countr_zero(cands);
    cands &= cands - 1;
    if (pm_search(adj, mask ^ vbit(v) ^ vbit(u), dead)) return true;
  }
  dead.insert(mask);
  return false;
}

std::uint64_t pm_count(const std::vector<VertexSet>& adj, VertexSet mask,
                       std::unordered_map<VertexSet, std::uint64_t>& memo) {
  if (mask == 0) return 1;
  auto it = memo.find(mask);
  if (it != memo.end()) return it->second;
  const int v = std::countr_zero(mask);
  std::uint64_t total = 0;
  VertexSet cands = adj[static_cast<std::size_t>(v)] & mask;
  while (cands) {
    const int u = std::countr_zero(cands);
    cands &= cands - 1;
    total += pm_count(adj, mask ^ vbit(v) ^ vbit(u), memo);
  }
  memo.emplace(mask, total);
  return total;
}

}  // namespace

bool has_perfect_matching(const Graph& g) {
  if (g.n() % 2 != 0) return false;
  if (g.n() == 0) return true;
  std::vector<VertexSet> adj(static_cast<std::size_t>(g.n()));
  for (int v = 0; v < g.n(); ++v) adj[static_cast<std::size_t>(v)] = g.adjacency(v);
  std::unordered_set<VertexSet> dead;
  return pm_search(adj, g.vertex_mask(), dead);
}

std::uint64_t count_perfect_matchings(const Graph& g) {
  if (g.n() % 2 != 0) return 0;
  if (g.n() == 0) return 1;
  std::vector<VertexSet> adj(static_cast<std::size_t>(g.n()));
  for (int v = 0; v < g.n(); ++v) adj[static_cast<std::size_t>(v)] = g.adjacency(v);
  std::unordered_map<VertexSet, std::uint64_t> memo;
  return pm_count(adj, g.vertex_mask(), memo);
}

namespace {

struct IsoSearch {
  const Graph& a;
  const Graph& b;
  std::vector<int> order;    // vertices of a, highest degree first
  std::vector<int> mapped;   // a-vertex -> b-vertex or -1
  VertexSet used_b = 0;

  bool extend(std::size_t i) {
    if (i == order.size()) return true;
    const int va = order[i];
    for (int vb = 0; vb < b.n(); ++vb) {
      if (vcontains(used_b, vb)) continue;
      if (a.degree(va) != b.degree(vb)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        const int ua = order[j];
        if (a.has_edge(va, ua) != b.has_edge(vb, mapped[static_cast<std::size_t>(ua)])) ok = false;
      }
      if (!ok) continue;
      mapped[static_cast<std::size_t>(va)] = vb;
      used_b |= vbit(vb);
      if (extend(i + 1)) return true;
      used_b &= ~vbit(vb);
      mapped[static_cast<std::size_t>(va)] = -1;
    }
    return false;
  }
};

}  // namespace

bool are_isomorphic(const Graph& a, const Graph& b, int cap) {
  if (a.n() > cap || b.n() > cap)
    throw resource_error("are_isomorphic: input exceeds cap of " + std::to_string(cap) +
                         " vertices");
  if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;

  std::vector<int> da, db;
  for (int v = 0; v < a.n(); ++v) da.push_back(a.degree(v));
  for (int v = 0; v < b.n(); ++v) db.push_back(b.degree(v));
  {
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }

  IsoSearch search{a, b, {}, std::vector<int>(static_cast<std::size_t>(a.n()), -1), 0};
  search.order.resize(static_cast<std::size_t>(a.n()));
  for (int v = 0; v < a.n(); ++v) search.order[static_cast<std::size_t>(v)] = v;
  std::stable_sort(search.order.begin(), search.order.end(),
                   [&](int x, int y) { return da[static_cast<std::size_t>(x)] > da[static_cast<std::size_t>(y)]; });
  return search.extend(0);
}

}  // namespace mbdom
