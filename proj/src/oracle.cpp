#include "incalg/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <thread>

#include "incalg/io.hpp"
#include "json.hpp"

namespace incalg {

using json = nlohmann::ordered_json;

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > UINT64_MAX / base) return UINT64_MAX;
    r *= base;
  }
  return r;
}

namespace {

void check_guard(std::uint64_t candidates, const EnumerationLimits& limits, const std::string& what) {
  if (!limits.force && candidates > limits.max_candidates)
    throw GuardExceeded(what + ": " + (candidates == UINT64_MAX ? std::string("more than 2^64") : std::to_string(candidates)) +
                        " candidates exceed the guard of " + std::to_string(limits.max_candidates) +
                        " (use force to override)");
}

// C(U(R)) as indices with a Cayley table.
struct UnitGroup {
  std::vector<CentralUnit> units;
  std::vector<std::vector<std::uint16_t>> mul;
  std::vector<std::uint16_t> inv;
  std::uint16_t one = 0;

  explicit UnitGroup(const Ring& ring) : units(ring.central_units()) {
    if (units.size() > 65535) throw GuardExceeded("central unit group too large");
    auto index_of = [&](const CentralUnit& c) {
      return static_cast<std::uint16_t>(std::lower_bound(units.begin(), units.end(), c) - units.begin());
    };
    const std::size_t g = units.size();
    mul.assign(g, std::vector<std::uint16_t>(g));
    inv.resize(g);
    for (std::size_t i = 0; i < g; ++i) {
      for (std::size_t j = 0; j < g; ++j) mul[i][j] = index_of(ring.mul(units[i], units[j]));
      inv[i] = index_of(ring.inverse(units[i]));
    }
    one = index_of(ring.unit_one());
  }
  std::size_t size() const { return units.size(); }
};

using Assignment = std::vector<std::uint16_t>;

WeightSystem to_system(const std::shared_ptr<const ComparabilityGraph>& graph, const Ring& ring, const UnitGroup& g,
                       const Assignment& a) {
  WeightSystem ws(graph, ring);
  for (std::size_t e = 0; e < a.size(); ++e) ws.set_edge(e, g.units[a[e]]);
  return ws;
}

struct Triple {
  std::size_t xz, zy, xy;
};

// Triples x < z < y grouped by the largest edge index they mention, so a
// depth-first assignment can test each one as soon as it is fully assigned.
std::vector<std::vector<Triple>> triples_by_last_edge(const ComparabilityGraph& graph) {
  const auto& q = graph.poset();
  std::vector<std::vector<Triple>> out(graph.edge_count());
  for (std::size_t x = 0; x < q.size(); ++x)
    for (std::size_t z = 0; z < q.size(); ++z)
      for (std::size_t y = 0; y < q.size(); ++y)
        if (q.less(x, z) && q.less(z, y)) {
          Triple t{*graph.edge_between(x, z), *graph.edge_between(z, y), *graph.edge_between(x, y)};
          out[std::max({t.xz, t.zy, t.xy})].push_back(t);
        }
  return out;
}

void enumerate_from(std::size_t pos, Assignment& cur, const UnitGroup& g, const std::vector<std::vector<Triple>>& triples,
                    std::vector<Assignment>& out) {
  if (pos == cur.size()) {
    out.push_back(cur);
    return;
  }
  for (std::uint16_t v = 0; v < g.size(); ++v) {
    cur[pos] = v;
    bool ok = true;
    for (const auto& t : triples[pos])
      if (cur[t.xy] != g.mul[cur[t.xz]][cur[t.zy]]) {
        ok = false;
        break;
      }
    if (ok) enumerate_from(pos + 1, cur, g, triples, out);
  }
}

std::vector<Assignment> enumerate_mult_assignments(const ComparabilityGraph& graph, const UnitGroup& g,
                                                   const EnumerationLimits& limits) {
  const std::size_t m = graph.edge_count();
  check_guard(saturating_pow(g.size(), m), limits, "enumerate_mult");
  if (m == 0) return {Assignment{}};
  auto triples = triples_by_last_edge(graph);

  // Partition on the value of the first edge; merge in partition order.
  std::vector<std::vector<Assignment>> parts(g.size());
  auto work = [&](std::uint16_t first) {
    Assignment cur(m, 0);
    cur[0] = first;
    enumerate_from(1, cur, g, triples, parts[first]);
  };
  unsigned threads = limits.threads ? limits.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(g.size()));
  if (threads <= 1) {
    for (std::uint16_t v = 0; v < g.size(); ++v) work(v);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        for (std::size_t v = t; v < g.size(); v += threads) work(static_cast<std::uint16_t>(v));
      });
    for (auto& th : pool) th.join();
  }
  std::vector<Assignment> out;
  for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(out));
  return out;
}

std::vector<Assignment> enumerate_inner_assignments(const ComparabilityGraph& graph, const UnitGroup& g,
                                                    const EnumerationLimits& limits) {
  const std::size_t n = graph.vertex_count();
  check_guard(saturating_pow(g.size(), n), limits, "enumerate_inner");
  std::set<Assignment> found;
  std::vector<std::uint16_t> v(n, 0);
  while (true) {
    Assignment a(graph.edge_count());
    for (std::size_t e = 0; e < a.size(); ++e) {
      auto [x, y] = graph.edges()[e];
      a[e] = g.mul[g.inv[v[x]]][v[y]];
    }
    found.insert(std::move(a));
    std::size_t i = n;
    while (i > 0 && ++v[i - 1] == g.size()) v[--i] = 0;
    if (i == 0) break;
  }
  return {found.begin(), found.end()};
}

std::string weights_payload(const WeightSystem& ws) { return write_weights_json(ws); }

std::string pair_payload(const IncidenceFunction& f, const IncidenceFunction& g) {
  json doc{{"f", json::parse(write_function_json(f))}, {"g", json::parse(write_function_json(g))}};
  return doc.dump();
}

}  // namespace

std::vector<WeightSystem> enumerate_mult(std::shared_ptr<const ComparabilityGraph> graph, const Ring& ring,
                                         const EnumerationLimits& limits) {
  UnitGroup g(ring);
  std::vector<WeightSystem> out;
  for (const auto& a : enumerate_mult_assignments(*graph, g, limits)) out.push_back(to_system(graph, ring, g, a));
  return out;
}

std::vector<WeightSystem> enumerate_inner(std::shared_ptr<const ComparabilityGraph> graph, const Ring& ring,
                                          const EnumerationLimits& limits) {
  UnitGroup g(ring);
  std::vector<WeightSystem> out;
  for (const auto& a : enumerate_inner_assignments(*graph, g, limits)) out.push_back(to_system(graph, ring, g, a));
  return out;
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

void VerificationReport::add(std::string name, bool ok, std::string detail, std::string counterexample) {
  checks.push_back({std::move(name), ok, std::move(detail), std::move(counterexample)});
}

void VerificationReport::merge(const VerificationReport& other, const std::string& prefix) {
  for (const auto& c : other.checks) checks.push_back({prefix + c.name, c.passed, c.detail, c.counterexample});
  for (const auto& s : other.skipped) skipped.push_back(prefix + s);
}

VerificationReport verify_structure(std::shared_ptr<const ComparabilityGraph> graph, const Ring& ring,
                                    const EnumerationLimits& limits, std::optional<std::size_t> root) {
  VerificationReport report;
  report.poset = write_preorder(graph->poset().as_preorder());
  report.ring = ring.spec().to_string();

  const std::size_t n = graph->vertex_count();
  if (!graph->is_connected()) {
    report.add("connected", false, "comparability graph has " + std::to_string(graph->component_count()) + " components");
    return report;
  }

  UnitGroup g(ring);
  auto mult = enumerate_mult(graph, ring, limits);
  auto inner = enumerate_inner(graph, ring, limits);
  std::set<WeightSystem> inner_set(inner.begin(), inner.end());
  const WeightSystem identity(graph, ring);

  auto tree = spanning_tree(*graph, root.value_or(0));
  auto other_tree = spanning_tree(*graph, n - 1);
  auto trivial_on = [&](const WeightSystem& ws, const SpanningTreeData& t) {
    return std::all_of(t.tree_edges.begin(), t.tree_edges.end(),
                       [&](std::size_t e) { return ring.is_one(ws.edge_value(e).element()); });
  };

  std::vector<WeightSystem> mult1;
  for (const auto& ws : mult)
    if (trivial_on(ws, tree)) mult1.push_back(ws);

  report.mult_count = mult.size();
  report.inner_count = inner.size();
  report.trivial_on_tree_count = mult1.size();

  {
    std::string bad;
    for (const auto& ws : mult)
      if (!is_valid(ws)) {
        bad = weights_payload(ws);
        break;
      }
    report.add("enumerated_systems_valid", bad.empty(), "", bad);
  }
  {
    std::string bad;
    for (const auto& ws : inner)
      if (!std::binary_search(mult.begin(), mult.end(), ws)) {
        bad = weights_payload(ws);
        break;
      }
    report.add("inner_subset_of_mult", bad.empty(), "", bad);
  }
  {
    // (i) every system splits as (1 on tree edges) x (inner)
    std::string bad, why;
    for (const auto& ws : mult) {
      auto d = decompose(ws, tree);
      if (!(compose(d.trivial_on_tree, d.inner) == ws)) why = "recomposition differs";
      else if (!trivial_on(d.trivial_on_tree, tree)) why = "first factor is not 1 on tree edges";
      else if (!inner_set.count(d.inner)) why = "second factor is not inner";
      else if (!is_valid(d.trivial_on_tree)) why = "first factor violates the cocycle identity";
      else if (!(from_potential(graph, ring, d.potential) == d.inner)) why = "potential does not realise the inner factor";
      if (!why.empty()) {
        bad = weights_payload(ws);
        break;
      }
    }
    report.add("decomposition", bad.empty(), why, bad);
  }
  {
    // (ii) Mult_1 ∩ Mult_0 = {1}
    std::vector<WeightSystem> both;
    for (const auto& ws : mult1)
      if (inner_set.count(ws)) both.push_back(ws);
    bool ok = both.size() == 1 && both[0] == identity;
    report.add("intersection_trivial", ok, std::to_string(both.size()) + " systems in the intersection",
               ok ? "" : weights_payload(both.size() > 1 && both[0] == identity ? both[1] : both.empty() ? identity : both[0]));
  }
  {
    // (iii) |Mult_0| = |G|^(m - λ)
    auto expected = saturating_pow(g.size(), graph->edge_count() - graph->cyclomatic_number());
    report.add("inner_count", inner.size() == expected,
               "|Mult0| = " + std::to_string(inner.size()) + ", |G|^(m-lambda) = " + std::to_string(expected));
  }
  {
    // (iv) |Mult| = |Mult_1| |Mult_0|
    bool ok = mult.size() == mult1.size() * inner.size();
    report.add("order_product", ok,
               std::to_string(mult.size()) + " = " + std::to_string(mult1.size()) + " * " + std::to_string(inner.size()));
  }
  {
    // (v) cycle test, potential search, and enumeration agree, for two trees
    std::string bad, why;
    for (const auto& ws : mult) {
      bool member = inner_set.count(ws) != 0;
      bool by_cycles = is_inner_cycles(ws, tree).inner;
      bool by_cycles2 = is_inner_cycles(ws, other_tree).inner;
      auto found = find_potential(ws, tree.root);
      bool by_potential = std::holds_alternative<Potential>(found);
      bool by_potential2 = std::holds_alternative<Potential>(find_potential(ws, other_tree.root));
      if (by_cycles != member || by_cycles2 != member || by_potential != member || by_potential2 != member) {
        why = "enumeration says " + std::string(member ? "inner" : "not inner");
      } else if (by_potential && !(from_potential(graph, ring, std::get<Potential>(found)) == ws)) {
        why = "found potential does not realise the system";
      } else if (!by_potential && ring.is_one(std::get<NotInner>(found).witness.weight.element())) {
        why = "witness cycle has weight 1";
      }
      if (!why.empty()) {
        bad = weights_payload(ws);
        break;
      }
    }
    report.add("innerness_tests_agree", bad.empty(), why, bad);
  }
  {
    // (vi) Mult = Mult_0 iff |Mult_1| = 1
    bool ok = (mult.size() == inner.size()) == (mult1.size() == 1);
    report.add("all_inner_iff_mult1_trivial", ok);
  }
  if (n <= 6) {
    // Semi-path weights between two vertices coincide exactly for inner systems.
    std::vector<std::vector<std::vector<SemiPath>>> paths(n, std::vector<std::vector<SemiPath>>(n));
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) paths[x][y] = simple_paths(*graph, x, y);
    std::string bad;
    for (const auto& ws : mult) {
      bool coincide = true;
      for (std::size_t x = 0; x < n && coincide; ++x)
        for (std::size_t y = 0; y < n && coincide; ++y) {
          auto first = path_weight(ws, paths[x][y].front());
          for (const auto& p : paths[x][y])
            if (!(path_weight(ws, p) == first)) {
              coincide = false;
              break;
            }
        }
      if (coincide != (inner_set.count(ws) != 0)) {
        bad = weights_payload(ws);
        break;
      }
    }
    report.add("path_weights_iff_inner", bad.empty(), "", bad);
  }
  return report;
}

VerificationReport verify_prop31(const IncidenceAlgebra& a, const EnumerationLimits& limits) {
  VerificationReport report;
  report.poset = write_preorder(a.preorder());
  report.ring = a.ring().spec().to_string();
  const auto& p = a.preorder();
  const auto& q = a.quotient();
  const auto& ring = a.ring();

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y)
      if (p.leq(x, y)) pairs.emplace_back(x, y);
  EnumerationLimits guard = limits;
  guard.max_candidates = std::min<std::uint64_t>(limits.max_candidates, 1'000'000);
  check_guard(saturating_pow(ring.order(), pairs.size()), guard, "verify_prop31");

  auto graph = std::make_shared<const ComparabilityGraph>(q);
  auto elements = ring.elements();
  auto units = ring.central_units();

  // Additive generators of A: one residue digit set at one comparable pair.
  struct Generator {
    std::size_t s, t;
    IncidenceFunction f;
    RingElement r;
  };
  std::vector<Generator> gens;
  for (auto [s, t] : pairs)
    for (std::size_t d = 0; d < ring.width(); ++d) {
      RingElement r = ring.zero();
      r.digits[d] = 1;
      gens.push_back({s, t, a.unit(s, t, r), r});
    }

  std::set<WeightSystem> induced;
  std::uint64_t unit_count = 0, multiplicative = 0;
  std::vector<std::size_t> choice(pairs.size(), 0);
  while (true) {
    IncidenceFunction u(a);
    for (std::size_t i = 0; i < pairs.size(); ++i) u.set(pairs[i].first, pairs[i].second, elements[choice[i]]);
    if (is_unit(u)) {
      ++unit_count;
      IncidenceFunction u_inv = invert(u);
      // c for each class pair, fixed by the first generator that meets it
      std::map<std::pair<std::size_t, std::size_t>, CentralUnit> scale;
      bool is_mult = true;
      for (const auto& gen : gens) {
        IncidenceFunction image = convolve(convolve(u_inv, gen.f), u);
        auto cs = q.class_of(gen.s), ct = q.class_of(gen.t);
        if (cs == ct) {
          if (!(image == gen.f)) is_mult = false;
        } else {
          auto key = std::pair{cs, ct};
          auto it = scale.find(key);
          if (it != scale.end()) {
            if (!(image == a.unit(gen.s, gen.t, ring.mul(it->second.element(), gen.r)))) is_mult = false;
          } else {
            is_mult = false;
            for (const auto& c : units)
              if (image == a.unit(gen.s, gen.t, ring.mul(c.element(), gen.r))) {
                scale.emplace(key, c);
                is_mult = true;
                break;
              }
          }
        }
        if (!is_mult) break;
      }
      if (is_mult) {
        ++multiplicative;
        WeightSystem ws(graph, ring);
        for (std::size_t e = 0; e < graph->edge_count(); ++e) {
          auto [x, y] = graph->edges()[e];
          ws.set_edge(e, scale.at({x, y}));
        }
        induced.insert(std::move(ws));
      }
    }
    std::size_t i = pairs.size();
    while (i > 0 && ++choice[i - 1] == elements.size()) choice[--i] = 0;
    if (i == 0) break;
  }

  auto inner = enumerate_inner(graph, ring, limits);
  std::set<WeightSystem> inner_set(inner.begin(), inner.end());
  report.inner_count = inner.size();
  std::string bad;
  for (const auto& ws : induced)
    if (!inner_set.count(ws)) bad = weights_payload(ws);
  for (const auto& ws : inner_set)
    if (bad.empty() && !induced.count(ws)) bad = weights_payload(ws);
  report.add("induced_equals_inner", induced == inner_set,
             std::to_string(unit_count) + " units, " + std::to_string(multiplicative) + " multiplicative, " +
                 std::to_string(induced.size()) + " induced systems, " + std::to_string(inner.size()) + " inner systems",
             bad);
  return report;
}

namespace {

// V = M(n x m, R) as the additive group ⊕_p Z/mod_p over flat digit positions.
struct Prop32Space {
  const Ring& ring;
  std::size_t rows, cols;
  std::vector<std::int64_t> moduli;  // per flat digit of V

  Prop32Space(const Ring& r, std::size_t n, std::size_t m) : ring(r), rows(n), cols(m) {
    for (std::size_t i = 0; i < n * m; ++i)
      moduli.insert(moduli.end(), r.digit_moduli().begin(), r.digit_moduli().end());
  }
  std::size_t dim() const { return moduli.size(); }

  using Vec = std::vector<std::int64_t>;

  RingMatrix to_matrix(const Vec& v, std::size_t r, std::size_t c) const {
    const std::size_t w = ring.width();
    RingMatrix m(r, std::vector<RingElement>(c));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        m[i][j].digits.assign(v.begin() + static_cast<long>((i * c + j) * w),
                              v.begin() + static_cast<long>((i * c + j + 1) * w));
    return m;
  }
  static Vec from_matrix(const RingMatrix& m) {
    Vec v;
    for (const auto& row : m)
      for (const auto& e : row) v.insert(v.end(), e.digits.begin(), e.digits.end());
    return v;
  }
  Vec add_scaled(Vec acc, const Vec& v, std::int64_t t) const {
    for (std::size_t i = 0; i < dim(); ++i) acc[i] = (acc[i] + t % moduli[i] * v[i]) % moduli[i];
    return acc;
  }
  // phi given by images of the unit digit vectors.
  Vec apply(const std::vector<Vec>& images, const Vec& v) const {
    Vec out(dim(), 0);
    for (std::size_t i = 0; i < dim(); ++i)
      if (v[i]) out = add_scaled(std::move(out), images[i], v[i]);
    return out;
  }
  Vec unit_vector(std::size_t i) const {
    Vec v(dim(), 0);
    v[i] = 1;
    return v;
  }
  // Elements whose order divides mod.
  std::vector<Vec> killed_by(std::int64_t mod) const {
    std::vector<Vec> out;
    Vec v(dim(), 0);
    while (true) {
      bool ok = true;
      for (std::size_t i = 0; i < dim() && ok; ++i) ok = (mod % moduli[i]) * v[i] % moduli[i] == 0;
      if (ok) out.push_back(v);
      std::size_t i = dim();
      while (i > 0 && ++v[i - 1] == moduli[i - 1]) v[--i] = 0;
      if (i == 0) break;
    }
    return out;
  }
};

struct Prop32Result {
  std::set<std::vector<Prop32Space::Vec>> endomorphisms;
  std::set<std::vector<Prop32Space::Vec>> automorphisms;
  std::set<std::vector<Prop32Space::Vec>> expected_endo;
  std::set<std::vector<Prop32Space::Vec>> expected_auto;
};

Prop32Result run_prop32(std::size_t n, std::size_t m, const Ring& ring, const EnumerationLimits& limits) {
  Prop32Space V(ring, n, m);
  const std::size_t dim = V.dim();
  const std::uint64_t v_order = saturating_pow(ring.order(), n * m);
  EnumerationLimits guard = limits;
  guard.max_candidates = std::min<std::uint64_t>(limits.max_candidates, 1'000'000);
  check_guard(saturating_pow(v_order, dim), guard, "verify_prop32");

  std::vector<std::vector<Prop32Space::Vec>> choices;
  for (std::size_t i = 0; i < dim; ++i) choices.push_back(V.killed_by(V.moduli[i]));

  // Additive generators of the acting rings P = M(n, R) and Q = M(m, R).
  auto ring_gens = [&](std::size_t k) {
    std::vector<RingMatrix> out;
    Prop32Space S(ring, k, k);
    for (std::size_t i = 0; i < S.dim(); ++i) out.push_back(S.to_matrix(S.unit_vector(i), k, k));
    return out;
  };
  auto left = ring_gens(n), right = ring_gens(m);
  std::vector<RingMatrix> basis;
  for (std::size_t i = 0; i < dim; ++i) basis.push_back(V.to_matrix(V.unit_vector(i), n, m));

  std::vector<Prop32Space::Vec> all_v;
  {
    Prop32Space::Vec v(dim, 0);
    while (true) {
      all_v.push_back(v);
      std::size_t i = dim;
      while (i > 0 && ++v[i - 1] == V.moduli[i - 1]) v[--i] = 0;
      if (i == 0) break;
    }
  }

  Prop32Result res;
  std::vector<std::size_t> pick(dim, 0);
  std::vector<Prop32Space::Vec> images(dim);
  while (true) {
    for (std::size_t i = 0; i < dim; ++i) images[i] = choices[i][pick[i]];
    bool commutes = true;
    for (std::size_t b = 0; b < dim && commutes; ++b) {
      RingMatrix phi_b = V.to_matrix(images[b], n, m);
      for (const auto& pm : left) {
        auto lhs = V.apply(images, Prop32Space::from_matrix(matrix_mul(ring, pm, basis[b])));
        if (lhs != Prop32Space::from_matrix(matrix_mul(ring, pm, phi_b))) {
          commutes = false;
          break;
        }
      }
      for (const auto& qm : right) {
        if (!commutes) break;
        auto lhs = V.apply(images, Prop32Space::from_matrix(matrix_mul(ring, basis[b], qm)));
        if (lhs != Prop32Space::from_matrix(matrix_mul(ring, phi_b, qm))) commutes = false;
      }
    }
    if (commutes) {
      res.endomorphisms.insert(images);
      std::set<Prop32Space::Vec> range;
      for (const auto& v : all_v) range.insert(V.apply(images, v));
      if (range.size() == all_v.size()) res.automorphisms.insert(images);
    }
    std::size_t i = dim;
    while (i > 0 && ++pick[i - 1] == choices[i - 1].size()) pick[--i] = 0;
    if (i == 0) break;
  }

  auto scalar_map = [&](const RingElement& c) {
    std::vector<Prop32Space::Vec> imgs;
    for (const auto& b : basis) {
      RingMatrix scaled = b;
      for (auto& row : scaled)
        for (auto& e : row) e = ring.mul(c, e);
      imgs.push_back(Prop32Space::from_matrix(scaled));
    }
    return imgs;
  };
  for (const auto& c : ring.center()) res.expected_endo.insert(scalar_map(c));
  for (const auto& c : ring.central_units()) res.expected_auto.insert(scalar_map(c.element()));
  return res;
}

}  // namespace

Prop32Counts prop32_counts(std::size_t n, std::size_t m, const Ring& ring, const EnumerationLimits& limits) {
  auto res = run_prop32(n, m, ring, limits);
  return {res.endomorphisms.size(), res.automorphisms.size()};
}

VerificationReport verify_prop32(std::size_t n, std::size_t m, const Ring& ring, const EnumerationLimits& limits) {
  VerificationReport report;
  report.poset = "bimodule M(" + std::to_string(n) + "x" + std::to_string(m) + ")";
  report.ring = ring.spec().to_string();
  auto res = run_prop32(n, m, ring, limits);
  report.add("endomorphisms_are_central_multiplications", res.endomorphisms == res.expected_endo,
             std::to_string(res.endomorphisms.size()) + " commuting additive maps, " +
                 std::to_string(res.expected_endo.size()) + " central elements");
  report.add("automorphisms_are_central_unit_multiplications", res.automorphisms == res.expected_auto,
             std::to_string(res.automorphisms.size()) + " bijective commuting maps, " +
                 std::to_string(res.expected_auto.size()) + " central units");
  return report;
}

std::vector<std::size_t> linear_extension(const Preorder& p) {
  QuotientPoset q(p);
  std::vector<std::size_t> done_order;
  std::vector<bool> done(q.size(), false);
  // Kahn's algorithm, always taking the available class with the least label.
  for (std::size_t step = 0; step < q.size(); ++step)
    for (std::size_t c = 0; c < q.size(); ++c) {
      if (done[c]) continue;
      bool ready = true;
      for (std::size_t d = 0; d < q.size() && ready; ++d)
        if (!done[d] && q.less(d, c)) ready = false;
      if (ready) {
        done[c] = true;
        done_order.push_back(c);
        break;
      }
    }
  std::vector<std::size_t> out;
  for (auto c : done_order) out.insert(out.end(), q.members(c).begin(), q.members(c).end());
  return out;
}

RingMatrix embed_matrix(const IncidenceFunction& f) {
  auto order = linear_extension(f.preorder());
  const auto& ring = f.ring();
  RingMatrix m(order.size(), std::vector<RingElement>(order.size(), ring.zero()));
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = 0; j < order.size(); ++j)
      if (f.preorder().leq(order[i], order[j])) m[i][j] = f.at(order[i], order[j]);
  return m;
}

bool matrix_oracle(const IncidenceFunction& f, const IncidenceFunction& g) {
  return matrix_mul(f.ring(), embed_matrix(f), embed_matrix(g)) == embed_matrix(convolve(f, g));
}

VerificationReport automorphism_check(const WeightSystem& ws, const IncidenceAlgebra& a, std::size_t trials,
                                      std::uint64_t seed) {
  VerificationReport report;
  report.poset = write_preorder(a.preorder());
  report.ring = a.ring().spec().to_string();
  report.seed = seed;

  IncidenceFunction mask = lift_mult_function(ws, a);
  auto check_pair = [&](const IncidenceFunction& f, const IncidenceFunction& g) -> std::string {
    if (!(apply(ws, convolve(f, g)) == convolve(apply(ws, f), apply(ws, g)))) return "apply(fg) != apply(f) apply(g)";
    if (!(split_LM(apply(ws, f)).l == split_LM(f).l)) return "L-part of f not fixed";
    if (!(apply(ws, f) == hadamard(mask, f))) return "apply(f) differs from the Hadamard product";
    return {};
  };

  std::string why, witness;
  // Single-entry functions first: they expose a broken cocycle identity directly.
  const auto& p = a.preorder();
  std::vector<IncidenceFunction> singles;
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y)
      if (p.leq(x, y)) singles.push_back(a.unit(x, y, a.ring().one()));
  for (std::size_t i = 0; i < singles.size() && why.empty(); ++i)
    for (std::size_t j = 0; j < singles.size() && why.empty(); ++j)
      if (why = check_pair(singles[i], singles[j]); !why.empty()) witness = pair_payload(singles[i], singles[j]);
  report.add("single_entry_pairs", why.empty(), why, witness);

  why.clear();
  witness.clear();
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials && why.empty(); ++t) {
    auto f = random_function(a, rng), g = random_function(a, rng);
    if (why = check_pair(f, g); !why.empty()) witness = pair_payload(f, g);
  }
  report.add("random_pairs", why.empty(), std::to_string(trials) + " trials" + (why.empty() ? "" : ": " + why), witness);
  return report;
}

VerificationReport verify_algebra_laws(const IncidenceAlgebra& a, std::size_t trials, std::uint64_t seed) {
  VerificationReport report;
  report.poset = write_preorder(a.preorder());
  report.ring = a.ring().spec().to_string();
  report.seed = seed;
  std::mt19937_64 rng(seed);
  const auto delta = a.delta();

  std::string assoc, ident, oracle;
  for (std::size_t t = 0; t < trials; ++t) {
    auto f = random_function(a, rng), g = random_function(a, rng), h = random_function(a, rng);
    if (assoc.empty() && !(convolve(convolve(f, g), h) == convolve(f, convolve(g, h)))) assoc = pair_payload(f, g);
    if (ident.empty() && !(convolve(delta, f) == f && convolve(f, delta) == f)) ident = write_function_json(f);
    if (oracle.empty() && !matrix_oracle(f, g)) oracle = pair_payload(f, g);
  }
  report.add("associativity", assoc.empty(), std::to_string(trials) + " triples", assoc);
  report.add("delta_identity", ident.empty(), "", ident);
  report.add("matrix_oracle", oracle.empty(), "", oracle);

  const bool can_invert = a.ring().is_commutative() ||
                          [&] {
                            for (std::size_t c = 0; c < a.quotient().size(); ++c)
                              if (a.quotient().members(c).size() > 1) return false;
                            return true;
                          }();
  if (!can_invert) return report;

  std::string inv, dec, radical;
  for (std::size_t t = 0; t < trials / 4; ++t) {
    auto u = random_unit(a, rng);
    auto ui = invert(u);
    if (inv.empty() && !(convolve(u, ui) == delta && convolve(ui, u) == delta)) inv = write_function_json(u);
    auto parts = unit_decompose(u);
    if (dec.empty() && !(convolve(add(delta, parts.d), parts.v) == u && parts.d.in_M() && parts.v.in_L()))
      dec = write_function_json(u);
    auto d = random_radical(a, rng);
    auto one_plus_d = add(delta, d);
    if (radical.empty() && !(is_unit(one_plus_d) && convolve(one_plus_d, invert(one_plus_d)) == delta))
      radical = write_function_json(d);
  }
  report.add("inverse", inv.empty(), std::to_string(trials / 4) + " units", inv);
  report.add("unit_decompose", dec.empty(), "", dec);
  report.add("one_plus_radical_invertible", radical.empty(), "", radical);
  return report;
}

std::vector<Preorder> connected_posets(std::size_t max_size) {
  std::vector<Preorder> out;
  for (auto& p : generate_preorders(max_size, true))
    if (QuotientPoset(p).is_connected()) out.push_back(std::move(p));
  return out;
}

}  // namespace incalg
