#include "incalg/comparability.hpp"

#include <algorithm>
#include <queue>

#include "incalg/mult.hpp"

namespace incalg {

ComparabilityGraph::ComparabilityGraph(const QuotientPoset& q)
    : poset_(q), adjacency_(q.size()), edge_index_(q.size() * q.size(), -1) {
  const std::size_t n = q.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (q.less(x, y)) edges_.push_back({x, y});
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return std::pair{std::min(a.lower, a.upper), std::max(a.lower, a.upper)} <
           std::pair{std::min(b.lower, b.upper), std::max(b.lower, b.upper)};
  });
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    auto [x, y] = edges_[e];
    edge_index_[x * n + y] = edge_index_[y * n + x] = static_cast<long>(e);
    adjacency_[x].push_back(y);
    adjacency_[y].push_back(x);
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
  components_ = q.connected_components().size();
}

std::size_t ComparabilityGraph::cyclomatic_number() const {
  return edge_count() + component_count() - vertex_count();
}

std::optional<std::size_t> ComparabilityGraph::edge_between(std::size_t u, std::size_t v) const {
  long e = edge_index_.at(u * vertex_count() + v);
  if (e < 0) return std::nullopt;
  return static_cast<std::size_t>(e);
}

std::string ComparabilityGraph::edge_name(std::size_t e) const {
  const Edge& edge = edges_.at(e);
  return label(edge.lower) + "-" + label(edge.upper);
}

bool SpanningTreeData::is_tree_edge(std::size_t e) const {
  return std::binary_search(tree_edges.begin(), tree_edges.end(), e);
}

SpanningTreeData spanning_tree(const ComparabilityGraph& g, std::size_t root) {
  const std::size_t n = g.vertex_count();
  if (root >= n) throw std::out_of_range("spanning_tree: root is not a vertex");
  if (!g.is_connected()) throw ConnectivityError("spanning_tree: comparability graph is disconnected");
  SpanningTreeData t;
  t.root = root;
  t.parent.assign(n, std::nullopt);
  t.parent_edge.assign(n, std::nullopt);
  t.depth.assign(n, 0);
  std::vector<bool> seen(n, false);
  std::queue<std::size_t> q;
  q.push(root);
  seen[root] = true;
  while (!q.empty()) {
    auto x = q.front();
    q.pop();
    t.order.push_back(x);
    for (auto y : g.neighbours(x)) {
      if (seen[y]) continue;
      seen[y] = true;
      t.parent[y] = x;
      t.parent_edge[y] = *g.edge_between(x, y);
      t.depth[y] = t.depth[x] + 1;
      t.tree_edges.push_back(*t.parent_edge[y]);
      q.push(y);
    }
  }
  std::sort(t.tree_edges.begin(), t.tree_edges.end());
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    if (!t.is_tree_edge(e)) t.non_tree_edges.push_back(e);
  return t;
}

SemiPath tree_path(const SpanningTreeData& t, std::size_t x, std::size_t y) {
  SemiPath up, down;
  while (t.depth[x] > t.depth[y]) {
    up.push_back(x);
    x = *t.parent[x];
  }
  while (t.depth[y] > t.depth[x]) {
    down.push_back(y);
    y = *t.parent[y];
  }
  while (x != y) {
    up.push_back(x);
    down.push_back(y);
    x = *t.parent[x];
    y = *t.parent[y];
  }
  up.push_back(x);
  up.insert(up.end(), down.rbegin(), down.rend());
  return up;
}

std::vector<FundamentalCycle> fundamental_cycles(const ComparabilityGraph& g, const SpanningTreeData& t) {
  std::vector<FundamentalCycle> out;
  for (auto e : t.non_tree_edges) {
    auto [x, y] = g.edges()[e];
    auto from = std::min(x, y), to = std::max(x, y);
    FundamentalCycle c{e, {from}};
    auto back = tree_path(t, to, from);
    c.vertices.insert(c.vertices.end(), back.begin(), back.end());
    out.push_back(std::move(c));
  }
  return out;
}

std::string format_path(const ComparabilityGraph& g, const SemiPath& path) {
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += "-";
    out += g.label(path[i]);
  }
  return out;
}

bool is_semi_path(const ComparabilityGraph& g, const SemiPath& path) {
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    if (!g.edge_between(path[i], path[i + 1])) return false;
  return true;
}

std::vector<SemiPath> simple_paths(const ComparabilityGraph& g, std::size_t x, std::size_t y) {
  std::vector<SemiPath> out;
  SemiPath cur{x};
  std::vector<bool> on_path(g.vertex_count(), false);
  on_path[x] = true;
  auto dfs = [&](auto&& self, std::size_t v) -> void {
    if (v == y) {
      out.push_back(cur);
      return;
    }
    for (auto w : g.neighbours(v)) {
      if (on_path[w]) continue;
      on_path[w] = true;
      cur.push_back(w);
      self(self, w);
      cur.pop_back();
      on_path[w] = false;
    }
  };
  dfs(dfs, x);
  return out;
}

CentralUnit path_weight(const WeightSystem& ws, const SemiPath& path) {
  const Ring& ring = ws.ring();
  const QuotientPoset& q = ws.poset();
  CentralUnit w = ring.unit_one();
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    auto a = path[i], b = path[i + 1];
    if (q.less(a, b))
      w = ring.mul(w, ws.value(a, b));
    else if (q.less(b, a))
      w = ring.mul(w, ring.inverse(ws.value(b, a)));
    else
      throw std::invalid_argument("path_weight: '" + q.representative(a) + "' and '" + q.representative(b) +
                                  "' are not strictly comparable");
  }
  return w;
}

}  // namespace incalg
