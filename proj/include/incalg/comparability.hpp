#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "incalg/preorder.hpp"
#include "incalg/ring.hpp"

namespace incalg {

class ConnectivityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A strictly comparable pair of classes, lower < upper.
struct Edge {
  std::size_t lower = 0;
  std::size_t upper = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Vertices are the classes of the quotient poset; one edge per strictly
/// comparable pair (not just covering pairs).
class ComparabilityGraph {
 public:
  explicit ComparabilityGraph(const QuotientPoset& q);

  const QuotientPoset& poset() const { return poset_; }
  std::size_t vertex_count() const { return poset_.size(); }
  /// Sorted by (lower, upper) vertex index, i.e. lexicographically by label.
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t component_count() const { return components_; }
  bool is_connected() const { return components_ <= 1; }
  /// Cyclomatic number m - n + (number of components).
  std::size_t cyclomatic_number() const;

  /// Neighbours in increasing vertex order.
  const std::vector<std::size_t>& neighbours(std::size_t v) const { return adjacency_.at(v); }
  /// Index of the edge joining u and v (either order), if any.
  std::optional<std::size_t> edge_between(std::size_t u, std::size_t v) const;
  const std::string& label(std::size_t v) const { return poset_.representative(v); }
  std::string edge_name(std::size_t e) const;

 private:
  QuotientPoset poset_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<long> edge_index_;
  std::size_t components_ = 0;
};

using SemiPath = std::vector<std::size_t>;

struct SpanningTreeData {
  std::size_t root = 0;
  /// Parent vertex and the edge to it; empty for the root.
  std::vector<std::optional<std::size_t>> parent;
  std::vector<std::optional<std::size_t>> parent_edge;
  std::vector<std::size_t> depth;
  /// Vertices in breadth-first discovery order.
  std::vector<std::size_t> order;
  std::vector<std::size_t> tree_edges;
  std::vector<std::size_t> non_tree_edges;

  bool is_tree_edge(std::size_t e) const;
};

/// Breadth-first tree, neighbours visited in label order. Throws
/// ConnectivityError for a disconnected graph.
SpanningTreeData spanning_tree(const ComparabilityGraph& g, std::size_t root);

/// The unique semi-path x -> y inside the tree.
SemiPath tree_path(const SpanningTreeData& t, std::size_t x, std::size_t y);

struct FundamentalCycle {
  std::size_t edge = 0;
  /// Closed walk: the non-tree edge taken from its lexicographically smaller
  /// endpoint, then the tree path back to that endpoint.
  SemiPath vertices;
};

std::vector<FundamentalCycle> fundamental_cycles(const ComparabilityGraph& g, const SpanningTreeData& t);

/// Vertex labels joined by '-'.
std::string format_path(const ComparabilityGraph& g, const SemiPath& path);

/// True when consecutive vertices are joined by an edge.
bool is_semi_path(const ComparabilityGraph& g, const SemiPath& path);

/// Every simple semi-path from x to y (x == y yields the trivial path only).
std::vector<SemiPath> simple_paths(const ComparabilityGraph& g, std::size_t x, std::size_t y);

class WeightSystem;

/// Product of edge weights along the path: c_xy forward, c_yx^-1 backward.
/// Throws std::invalid_argument if two consecutive vertices are incomparable.
CentralUnit path_weight(const WeightSystem& ws, const SemiPath& path);

}  // namespace incalg
