#pragma once

// Multiplicative automorphisms of I(X, R) as weight systems on the quotient
// poset: a central unit c_xy for every x < y with c_xy = c_xz c_zy whenever
// x < z < y. The automorphism fixes the L-part and multiplies each entry
// f(s, t) with [s] < [t] by c_[s][t].

#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "incalg/comparability.hpp"
#include "incalg/incidence.hpp"
#include "incalg/ring.hpp"

namespace incalg {

class WeightSystem {
 public:
  /// The identity system (all weights 1).
  WeightSystem(std::shared_ptr<const ComparabilityGraph> graph, Ring ring);

  const ComparabilityGraph& graph() const { return *graph_; }
  std::shared_ptr<const ComparabilityGraph> graph_ptr() const { return graph_; }
  const QuotientPoset& poset() const { return graph_->poset(); }
  const Ring& ring() const { return ring_; }

  /// c_xy for classes x < y; throws std::invalid_argument otherwise.
  const CentralUnit& value(std::size_t x, std::size_t y) const;
  const CentralUnit& edge_value(std::size_t e) const { return values_.at(e); }
  void set(std::size_t x, std::size_t y, CentralUnit c);
  void set_edge(std::size_t e, CentralUnit c) { values_.at(e) = std::move(c); }
  const std::vector<CentralUnit>& values() const { return values_; }

  bool same_carrier(const WeightSystem& other) const;

  friend bool operator==(const WeightSystem& a, const WeightSystem& b) {
    return a.same_carrier(b) && a.values_ == b.values_;
  }
  /// Orders systems on one carrier by their value vectors.
  friend bool operator<(const WeightSystem& a, const WeightSystem& b) { return a.values_ < b.values_; }

 private:
  std::shared_ptr<const ComparabilityGraph> graph_;
  Ring ring_;
  std::vector<CentralUnit> values_;
};

std::shared_ptr<const ComparabilityGraph> make_graph(const Preorder& p);

struct Potential {
  std::vector<CentralUnit> values;  // indexed by class

  friend bool operator==(const Potential&, const Potential&) = default;
};

/// A triple x < z < y with c_xy != c_xz c_zy.
struct CocycleViolation {
  std::size_t x, z, y;
  friend bool operator==(const CocycleViolation&, const CocycleViolation&) = default;
};

/// Empty when every triple satisfies the cocycle identity.
std::vector<CocycleViolation> validate(const WeightSystem& ws);
inline bool is_valid(const WeightSystem& ws) { return validate(ws).empty(); }

WeightSystem identity_like(const WeightSystem& ws);
WeightSystem compose(const WeightSystem& a, const WeightSystem& b);
WeightSystem inverse(const WeightSystem& ws);

/// Tree-edge values extended to every pair along tree paths.
/// Throws std::invalid_argument if a tree edge has no value.
WeightSystem from_tree(std::shared_ptr<const ComparabilityGraph> graph, const Ring& ring,
                       const SpanningTreeData& tree, const std::vector<std::optional<CentralUnit>>& edge_values);

/// c_xy = v_x^-1 v_y.
WeightSystem from_potential(std::shared_ptr<const ComparabilityGraph> graph, const Ring& ring, const Potential& v);

/// Propagates v_root = 1 along the tree: v_child = v_parent w(parent, child).
Potential propagate_potential(const WeightSystem& ws, const SpanningTreeData& tree);

struct CycleWeight {
  FundamentalCycle cycle;
  CentralUnit weight;
};

struct NotInner {
  CycleWeight witness;
};

/// A potential realising ws, or a fundamental cycle of nontrivial weight.
std::variant<Potential, NotInner> find_potential(const WeightSystem& ws, std::size_t root);

struct Decomposition {
  WeightSystem trivial_on_tree;  // in Mult_1: 1 on every tree edge
  WeightSystem inner;            // in Mult_0
  Potential potential;           // realises `inner`
};
/// ws = trivial_on_tree * inner, unique for the given tree.
Decomposition decompose(const WeightSystem& ws, const SpanningTreeData& tree);

struct CycleReport {
  bool inner = true;
  std::vector<CycleWeight> cycles;
};
/// Inner iff every fundamental cycle of the tree has weight 1.
CycleReport is_inner_cycles(const WeightSystem& ws, const SpanningTreeData& tree);

/// True when ws lives on the quotient of f's preorder.
bool acts_on(const WeightSystem& ws, const IncidenceAlgebra& a);

/// Fixes the L-part and scales every f(s, t), [s] < [t], by c_[s][t] on the left.
IncidenceFunction apply(const WeightSystem& ws, const IncidenceFunction& f);

/// m(x, x) = 1, m(x, y) = c_xy on the quotient viewed as a poset.
IncidenceFunction to_mult_function(const WeightSystem& ws);
/// The same function pulled back to the preorder of `a`: m(s, t) = c_[s][t], 1 on classes.
IncidenceFunction lift_mult_function(const WeightSystem& ws, const IncidenceAlgebra& a);
/// m_q(x, y) = q(x)^-1 q(y) on comparable pairs of the quotient.
IncidenceFunction from_point_map(std::shared_ptr<const ComparabilityGraph> graph, const Ring& ring,
                                 const Potential& q);
/// Inverse of to_mult_function. m must live on a poset; throws
/// std::invalid_argument for non-central-unit values or broken multiplicativity.
WeightSystem from_mult_function(const IncidenceFunction& m);

}  // namespace incalg
