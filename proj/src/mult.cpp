#include "incalg/mult.hpp"

#include <stdexcept>

namespace incalg {

namespace {

bool same_quotient(const QuotientPoset& a, const QuotientPoset& b) {
  if (a.representatives() != b.representatives()) return false;
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < a.size(); ++y)
      if (a.leq(x, y) != b.leq(x, y)) return false;
  return true;
}

void require_same(const WeightSystem& a, const WeightSystem& b, const char* op) {
  if (!a.same_carrier(b)) throw IncompatibleError(std::string(op) + ": weight systems on different carriers");
}

}  // namespace

WeightSystem::WeightSystem(std::shared_ptr<const ComparabilityGraph> graph, Ring ring)
    : graph_(std::move(graph)), ring_(std::move(ring)), values_(graph_->edge_count(), ring_.unit_one()) {}

const CentralUnit& WeightSystem::value(std::size_t x, std::size_t y) const {
  auto e = graph_->edge_between(x, y);
  if (!e || !poset().less(x, y))
    throw std::invalid_argument("no weight for (" + poset().representative(x) + "," + poset().representative(y) +
                                "): not a strictly comparable pair");
  return values_[*e];
}

void WeightSystem::set(std::size_t x, std::size_t y, CentralUnit c) {
  auto e = graph_->edge_between(x, y);
  if (!e || !poset().less(x, y))
    throw std::invalid_argument("cannot weight (" + poset().representative(x) + "," + poset().representative(y) +
                                "): not a strictly comparable pair");
  values_[*e] = std::move(c);
}

bool WeightSystem::same_carrier(const WeightSystem& other) const {
  if (!(ring_ == other.ring_)) return false;
  return graph_ == other.graph_ || same_quotient(poset(), other.poset());
}

std::shared_ptr<const ComparabilityGraph> make_graph(const Preorder& p) {
  return std::make_shared<const ComparabilityGraph>(QuotientPoset(p));
}

std::vector<CocycleViolation> validate(const WeightSystem& ws) {
  std::vector<CocycleViolation> out;
  const auto& q = ws.poset();
  const auto& ring = ws.ring();
  const std::size_t n = q.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t z = 0; z < n; ++z) {
      if (!q.less(x, z)) continue;
      for (std::size_t y = 0; y < n; ++y)
        if (q.less(z, y) && ws.value(x, y) != ring.mul(ws.value(x, z), ws.value(z, y))) out.push_back({x, z, y});
    }
  return out;
}

WeightSystem identity_like(const WeightSystem& ws) { return WeightSystem(ws.graph_ptr(), ws.ring()); }

WeightSystem compose(const WeightSystem& a, const WeightSystem& b) {
  require_same(a, b, "compose");
  WeightSystem out = a;
  for (std::size_t e = 0; e < a.values().size(); ++e) out.set_edge(e, a.ring().mul(a.edge_value(e), b.edge_value(e)));
  return out;
}

WeightSystem inverse(const WeightSystem& ws) {
  WeightSystem out = ws;
  for (std::size_t e = 0; e < ws.values().size(); ++e) out.set_edge(e, ws.ring().inverse(ws.edge_value(e)));
  return out;
}

WeightSystem from_tree(std::shared_ptr<const ComparabilityGraph> graph, const Ring& ring,
                       const SpanningTreeData& tree, const std::vector<std::optional<CentralUnit>>& edge_values) {
  WeightSystem ws(graph, ring);
  for (auto e : tree.tree_edges) {
    if (e >= edge_values.size() || !edge_values[e])
      throw std::invalid_argument("from_tree: no value for tree edge " + graph->edge_name(e));
    ws.set_edge(e, *edge_values[e]);
  }
  // Tree paths only cross tree edges, whose weights are already final.
  for (auto e : tree.non_tree_edges) {
    auto [x, y] = graph->edges()[e];
    ws.set_edge(e, path_weight(ws, tree_path(tree, x, y)));
  }
  return ws;
}

WeightSystem from_potential(std::shared_ptr<const ComparabilityGraph> graph, const Ring& ring, const Potential& v) {
  if (v.values.size() != graph->vertex_count()) throw std::invalid_argument("from_potential: potential is not total");
  WeightSystem ws(graph, ring);
  for (std::size_t e = 0; e < graph->edge_count(); ++e) {
    auto [x, y] = graph->edges()[e];
    ws.set_edge(e, ring.mul(ring.inverse(v.values[x]), v.values[y]));
  }
  return ws;
}

Potential propagate_potential(const WeightSystem& ws, const SpanningTreeData& tree) {
  const auto& ring = ws.ring();
  Potential v{std::vector<CentralUnit>(ws.graph().vertex_count(), ring.unit_one())};
  for (auto x : tree.order) {
    if (!tree.parent[x]) continue;
    auto p = *tree.parent[x];
    v.values[x] = ring.mul(v.values[p], path_weight(ws, {p, x}));
  }
  return v;
}

CycleReport is_inner_cycles(const WeightSystem& ws, const SpanningTreeData& tree) {
  CycleReport report;
  for (auto& c : fundamental_cycles(ws.graph(), tree)) {
    CentralUnit w = path_weight(ws, c.vertices);
    if (!ws.ring().is_one(w.element())) report.inner = false;
    report.cycles.push_back({std::move(c), std::move(w)});
  }
  return report;
}

std::variant<Potential, NotInner> find_potential(const WeightSystem& ws, std::size_t root) {
  auto tree = spanning_tree(ws.graph(), root);
  Potential v = propagate_potential(ws, tree);
  const auto& ring = ws.ring();
  for (auto e : tree.non_tree_edges) {
    auto [x, y] = ws.graph().edges()[e];
    if (ws.edge_value(e) == ring.mul(ring.inverse(v.values[x]), v.values[y])) continue;
    for (auto& c : fundamental_cycles(ws.graph(), tree))
      if (c.edge == e) {
        CentralUnit w = path_weight(ws, c.vertices);
        return NotInner{{std::move(c), std::move(w)}};
      }
  }
  return v;
}

Decomposition decompose(const WeightSystem& ws, const SpanningTreeData& tree) {
  if (auto bad = validate(ws); !bad.empty())
    throw std::invalid_argument("decompose: weight system violates the cocycle identity");
  Potential v = propagate_potential(ws, tree);
  WeightSystem inner = from_potential(ws.graph_ptr(), ws.ring(), v);
  WeightSystem rest = compose(ws, inverse(inner));
  return {std::move(rest), std::move(inner), std::move(v)};
}

bool acts_on(const WeightSystem& ws, const IncidenceAlgebra& a) {
  return ws.ring() == a.ring() && same_quotient(ws.poset(), a.quotient());
}

IncidenceFunction apply(const WeightSystem& ws, const IncidenceFunction& f) {
  if (!acts_on(ws, f.algebra())) throw IncompatibleError("apply: weight system does not act on this algebra");
  const auto& p = f.preorder();
  const auto& q = f.algebra().quotient();
  IncidenceFunction out = f;
  for (std::size_t s = 0; s < p.size(); ++s)
    for (std::size_t t = 0; t < p.size(); ++t) {
      auto cs = q.class_of(s), ct = q.class_of(t);
      if (q.less(cs, ct)) out.set(s, t, ws.ring().mul(ws.value(cs, ct).element(), f.at(s, t)));
    }
  return out;
}

IncidenceFunction lift_mult_function(const WeightSystem& ws, const IncidenceAlgebra& a) {
  if (!acts_on(ws, a)) throw IncompatibleError("lift_mult_function: weight system does not act on this algebra");
  const auto& p = a.preorder();
  const auto& q = a.quotient();
  IncidenceFunction m(a);
  for (std::size_t s = 0; s < p.size(); ++s)
    for (std::size_t t = 0; t < p.size(); ++t) {
      if (!p.leq(s, t)) continue;
      auto cs = q.class_of(s), ct = q.class_of(t);
      m.set(s, t, cs == ct ? a.ring().one() : ws.value(cs, ct).element());
    }
  return m;
}

IncidenceFunction to_mult_function(const WeightSystem& ws) {
  return lift_mult_function(ws, IncidenceAlgebra(ws.poset().as_preorder(), ws.ring()));
}

IncidenceFunction from_point_map(std::shared_ptr<const ComparabilityGraph> graph, const Ring& ring,
                                 const Potential& q) {
  return to_mult_function(from_potential(std::move(graph), ring, q));
}

WeightSystem from_mult_function(const IncidenceFunction& m) {
  const auto& p = m.preorder();
  const auto& ring = m.ring();
  if (!p.is_partial_order()) throw std::invalid_argument("from_mult_function: needs a function on a poset");
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y) {
      if (!p.leq(x, y)) continue;
      const auto& v = m.at(x, y);
      if (!ring.is_unit(v) || !ring.is_central(v))
        throw std::invalid_argument("from_mult_function: m(" + p.label(x) + "," + p.label(y) +
                                    ") is not an invertible central element");
      for (std::size_t z = 0; z < p.size(); ++z)
        if (p.leq(x, z) && p.leq(z, y) && v != ring.mul(m.at(x, z), m.at(z, y)))
          throw std::invalid_argument("from_mult_function: m(" + p.label(x) + "," + p.label(y) + ") != m(" +
                                      p.label(x) + "," + p.label(z) + ") m(" + p.label(z) + "," + p.label(y) + ")");
    }
  auto graph = make_graph(p);
  WeightSystem ws(graph, ring);
  const auto& q = graph->poset();
  for (std::size_t e = 0; e < graph->edge_count(); ++e) {
    auto [x, y] = graph->edges()[e];
    ws.set_edge(e, ring.as_central_unit(m.at(q.members(x)[0], q.members(y)[0])));
  }
  return ws;
}

}  // namespace incalg
