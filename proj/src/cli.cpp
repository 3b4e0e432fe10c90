#include "incalg/cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "incalg/io.hpp"
#include "incalg/oracle.hpp"

namespace incalg {

namespace {

struct CommandConfig {
  std::string poset;
  std::string ring;
  std::string weights;
  std::vector<std::string> functions;
  std::string root;
  std::uint64_t seed = 0;
  bool force = false;
  std::string out;
  bool expect_inner = false;
  std::size_t trials = 100;
};

class Runner {
 public:
  Runner(const CommandConfig& cfg, std::ostream& out, std::ostream& err) : cfg_(cfg), out_(out), err_(err) {}

  int info() {
    Preorder p = preorder();
    auto graph = make_graph(p);
    const auto& q = graph->poset();
    std::ostringstream s;
    s << "elements=" << p.size() << "\n";
    s << "n=" << q.size() << "\n";
    s << "m=" << graph->edge_count() << "\n";
    s << "lambda=" << graph->cyclomatic_number() << "\n";
    s << "components=" << graph->component_count() << "\n";
    s << "connected=" << (graph->is_connected() ? "yes" : "no") << "\n";
    s << "height=" << q.height() << "\n";
    s << "classes=";
    for (std::size_t c = 0; c < q.size(); ++c) {
      s << (c ? " " : "");
      if (q.members(c).size() == 1) {
        s << q.representative(c);
      } else {
        s << "{";
        for (std::size_t i = 0; i < q.members(c).size(); ++i) s << (i ? "," : "") << p.label(q.members(c)[i]);
        s << "}";
      }
    }
    s << "\n";
    emit(s.str());
    return 0;
  }

  int check() {
    auto ws = weights(make_graph(preorder()));
    bool ok = report_violations(ws);
    if (ok) out_ << "valid\n";
    if (ok && cfg_.expect_inner) ok = print_innerness(ws);
    return ok ? 0 : 1;
  }

  int is_inner() {
    auto ws = weights(make_graph(preorder()));
    if (!report_violations(ws)) return 1;
    return print_innerness(ws) ? 0 : 1;
  }

  int decompose_cmd() {
    auto ws = weights(make_graph(preorder()));
    if (!report_violations(ws)) return 1;
    auto tree = spanning_tree(ws.graph(), root(ws.graph()));
    auto d = decompose(ws, tree);
    if (cfg_.out.empty()) {
      out_ << "# w1\n" << write_weights_json(d.trivial_on_tree);
      out_ << "# w0\n" << write_weights_json(d.inner);
      out_ << "# potential\n" << write_potential_json(d.potential, ws.graph(), ws.ring());
    } else {
      write_text_file(cfg_.out + ".w1.json", write_weights_json(d.trivial_on_tree));
      write_text_file(cfg_.out + ".w0.json", write_weights_json(d.inner));
      write_text_file(cfg_.out + ".potential.json", write_potential_json(d.potential, ws.graph(), ws.ring()));
      out_ << "wrote " << cfg_.out << ".w1.json " << cfg_.out << ".w0.json " << cfg_.out << ".potential.json\n";
    }
    bool inner = d.trivial_on_tree == identity_like(ws);
    if (cfg_.expect_inner && !inner) {
      err_ << "weight system is not inner: w1 is not the identity\n";
      return 1;
    }
    return 0;
  }

  int enumerate() {
    auto graph = make_graph(preorder());
    Ring r = ring();
    auto mult = enumerate_mult(graph, r, limits());
    auto inner = enumerate_inner(graph, r, limits());
    std::ostringstream s;
    s << "mult=" << mult.size() << "\n" << "mult0=" << inner.size() << "\n";
    if (graph->is_connected()) {
      auto tree = spanning_tree(*graph, root(*graph));
      auto trivial = std::count_if(mult.begin(), mult.end(), [&](const WeightSystem& ws) {
        return std::all_of(tree.tree_edges.begin(), tree.tree_edges.end(),
                           [&](std::size_t e) { return r.is_one(ws.edge_value(e).element()); });
      });
      s << "mult1=" << trivial << "\n";
    }
    emit(s.str());
    return 0;
  }

  int verify() {
    Preorder p = preorder();
    Ring r = ring();
    auto graph = make_graph(p);
    IncidenceAlgebra a(p, r);
    VerificationReport report;
    report.poset = write_preorder(p);
    report.ring = r.spec().to_string();
    report.seed = cfg_.seed;

    std::optional<std::size_t> rt;
    if (!cfg_.root.empty()) rt = root(*graph);
    auto structure = verify_structure(graph, r, limits(), rt);
    report.mult_count = structure.mult_count;
    report.inner_count = structure.inner_count;
    report.trivial_on_tree_count = structure.trivial_on_tree_count;
    report.merge(structure, "structure.");

    std::size_t pairs = 0;
    for (std::size_t x = 0; x < p.size(); ++x)
      for (std::size_t y = 0; y < p.size(); ++y) pairs += p.leq(x, y);
    EnumerationLimits unit_limits = limits();
    unit_limits.max_candidates = 1'000'000;
    if (unit_limits.force || saturating_pow(r.order(), pairs) <= unit_limits.max_candidates)
      report.merge(verify_prop31(a, unit_limits), "inner_automorphisms.");
    else
      report.skipped.push_back("inner_automorphisms: unit group enumeration exceeds the guard");

    report.merge(verify_algebra_laws(a, 2 * cfg_.trials, cfg_.seed), "algebra.");

    if (graph->is_connected()) {
      auto mult = enumerate_mult(graph, r, limits());
      const std::size_t sample = std::min<std::size_t>(20, mult.size());
      for (std::size_t i = 0; i < sample; ++i) {
        const auto& ws = mult[i * mult.size() / sample];
        report.merge(automorphism_check(ws, a, cfg_.trials, cfg_.seed + i), "action[" + std::to_string(i) + "].");
      }
    }
    if (!cfg_.weights.empty()) {
      auto ws = weights(graph);
      auto bad = validate(ws);
      std::string detail;
      if (!bad.empty()) detail = violation_text(ws, bad.front());
      report.add("input.cocycle_identity", bad.empty(), detail, bad.empty() ? "" : write_weights_json(ws));
      report.merge(automorphism_check(ws, a, cfg_.trials, cfg_.seed), "input.action.");
    }

    emit(write_report_json(report));
    for (const auto& c : report.checks)
      if (!c.passed) err_ << "FAIL " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    return report.passed() ? 0 : 1;
  }

  int apply_cmd() {
    Preorder p = preorder();
    IncidenceAlgebra a(p, ring());
    auto ws = weights(make_graph(p));
    if (!report_violations(ws)) return 1;
    emit(write_function_json(apply(ws, function(a, 0))));
    return 0;
  }

  int convolve_cmd() {
    IncidenceAlgebra a(preorder(), ring());
    emit(write_function_json(convolve(function(a, 0), function(a, 1))));
    return 0;
  }

  int invert_cmd() {
    IncidenceAlgebra a(preorder(), ring());
    emit(write_function_json(invert(function(a, 0))));
    return 0;
  }

 private:
  Preorder preorder() const { return read_preorder_file(cfg_.poset); }

  Ring ring() const {
    if (cfg_.ring.empty()) throw InputError("--ring is required");
    try {
      return Ring::parse(cfg_.ring);
    } catch (const ParseError& e) {
      throw InputError(std::string("--ring: ") + e.what());
    }
  }

  EnumerationLimits limits() const {
    EnumerationLimits l;
    l.force = cfg_.force;
    return l;
  }

  WeightSystem weights(std::shared_ptr<const ComparabilityGraph> graph) const {
    if (cfg_.weights.empty()) throw InputError("--weights is required");
    std::optional<Ring> r;
    if (!cfg_.ring.empty()) r = ring();
    try {
      return read_weights_json(read_text_file(cfg_.weights), std::move(graph), r);
    } catch (const InputError& e) {
      throw InputError(cfg_.weights + ": " + e.what());
    }
  }

  IncidenceFunction function(const IncidenceAlgebra& a, std::size_t i) const {
    if (i >= cfg_.functions.size()) throw InputError("missing function argument " + std::to_string(i + 1));
    const auto& name = cfg_.functions[i];
    if (name == "zeta") return a.zeta();
    if (name == "delta") return a.delta();
    try {
      return read_function_json(read_text_file(name), a);
    } catch (const InputError& e) {
      throw InputError(name + ": " + e.what());
    } catch (const SupportError& e) {
      throw InputError(name + ": " + e.what());
    }
  }

  std::size_t root(const ComparabilityGraph& g) const {
    if (cfg_.root.empty()) return 0;
    if (!g.poset().source().contains(cfg_.root)) throw InputError("--root: unknown element '" + cfg_.root + "'");
    return g.poset().class_of_label(cfg_.root);
  }

  static std::string violation_text(const WeightSystem& ws, const CocycleViolation& v) {
    const auto& g = ws.graph();
    std::string xy = g.label(v.x) + g.label(v.y), xz = g.label(v.x) + g.label(v.z), zy = g.label(v.z) + g.label(v.y);
    const auto& r = ws.ring();
    return "c_" + xy + " = " + r.format(ws.value(v.x, v.y).element()) + " but c_" + xz + " c_" + zy + " = " +
           r.format(r.mul(ws.value(v.x, v.z), ws.value(v.z, v.y)).element()) + " (triple " + g.label(v.x) + " < " +
           g.label(v.z) + " < " + g.label(v.y) + ")";
  }

  bool report_violations(const WeightSystem& ws) const {
    auto bad = validate(ws);
    for (const auto& v : bad) err_ << cfg_.weights << ": " << violation_text(ws, v) << "\n";
    if (!bad.empty()) out_ << "invalid\n";
    return bad.empty();
  }

  bool print_innerness(const WeightSystem& ws) {
    auto result = find_potential(ws, root(ws.graph()));
    const auto& g = ws.graph();
    if (auto* v = std::get_if<Potential>(&result)) {
      out_ << "inner\npotential";
      for (std::size_t x = 0; x < v->values.size(); ++x)
        out_ << " " << g.label(x) << "=" << ws.ring().format(v->values[x].element());
      out_ << "\n";
      if (!cfg_.out.empty()) write_text_file(cfg_.out, write_potential_json(*v, g, ws.ring()));
      return true;
    }
    const auto& w = std::get<NotInner>(result).witness;
    out_ << "not inner\nwitness cycle " << format_path(g, w.cycle.vertices) << " weight "
         << ws.ring().format(w.weight.element()) << "\n";
    return false;
  }

  void emit(const std::string& text) {
    if (cfg_.out.empty())
      out_ << text;
    else
      write_text_file(cfg_.out, text);
  }

  const CommandConfig& cfg_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CommandConfig cfg;
  CLI::App app{"Incidence algebras of finite preorders and their multiplicative automorphisms", "incalg"};
  app.require_subcommand(1);
  app.add_option("--seed", cfg.seed, "Seed for random trials");
  app.add_flag("--force", cfg.force, "Ignore enumeration guards");
  app.add_option("--out", cfg.out, "Output path (prefix for decompose)");

  auto add_poset = [&](CLI::App* sub) { sub->add_option("--poset", cfg.poset, "Preorder file")->required(); };
  auto add_ring = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--ring", cfg.ring, "Coefficient ring, e.g. Z/12 or Z/2xZ/3 or M(2,Z/2)");
    if (required) o->required();
  };
  auto add_weights = [&](CLI::App* sub) { sub->add_option("--weights", cfg.weights, "Weight system file")->required(); };
  auto add_root = [&](CLI::App* sub) { sub->add_option("--root", cfg.root, "Spanning tree root element"); };
  auto add_globals = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "Seed for random trials");
    sub->add_flag("--force", cfg.force, "Ignore enumeration guards");
    sub->add_option("--out", cfg.out, "Output path (prefix for decompose)");
  };

  auto* info = app.add_subcommand("info", "Classes, pair count, cyclomatic number, connectivity, height");
  add_poset(info);

  auto* check = app.add_subcommand("check", "Validate a weight system");
  add_poset(check);
  add_ring(check, false);
  add_weights(check);
  add_root(check);
  check->add_flag("--expect-inner", cfg.expect_inner, "Also fail unless the system is inner");

  auto* is_inner = app.add_subcommand("is-inner", "Find a potential or a witness cycle");
  add_poset(is_inner);
  add_ring(is_inner, false);
  add_weights(is_inner);
  add_root(is_inner);

  auto* decomp = app.add_subcommand("decompose", "Split into a tree-trivial and an inner factor");
  add_poset(decomp);
  add_ring(decomp, false);
  add_weights(decomp);
  add_root(decomp);
  decomp->add_flag("--expect-inner", cfg.expect_inner, "Fail unless the tree-trivial factor is the identity");

  auto* enumerate = app.add_subcommand("enumerate", "Count all and inner weight systems by brute force");
  add_poset(enumerate);
  add_ring(enumerate, true);
  add_root(enumerate);

  auto* verify = app.add_subcommand("verify", "Run the brute-force verification suite");
  add_poset(verify);
  add_ring(verify, true);
  add_root(verify);
  verify->add_option("--weights", cfg.weights, "Also check this weight system");
  verify->add_option("--trials", cfg.trials, "Random pairs per automorphism check")->check(CLI::Range(1, 100000));

  auto* apply = app.add_subcommand("apply", "Apply a weight system to a function");
  add_poset(apply);
  add_ring(apply, true);
  add_weights(apply);
  apply->add_option("function", cfg.functions, "Function file, zeta or delta")->required()->expected(1);

  auto* conv = app.add_subcommand("convolve", "Convolution product of two functions");
  add_poset(conv);
  add_ring(conv, true);
  conv->add_option("functions", cfg.functions, "Two function files (or zeta, delta)")->required()->expected(2);

  auto* inv = app.add_subcommand("invert", "Inverse of a unit");
  add_poset(inv);
  add_ring(inv, true);
  inv->add_option("function", cfg.functions, "Function file, zeta or delta")->required()->expected(1);

  for (auto* sub : app.get_subcommands({})) add_globals(sub);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Runner runner(cfg, out, err);
  try {
    if (*info) return runner.info();
    if (*check) return runner.check();
    if (*is_inner) return runner.is_inner();
    if (*decomp) return runner.decompose_cmd();
    if (*enumerate) return runner.enumerate();
    if (*verify) return runner.verify();
    if (*apply) return runner.apply_cmd();
    if (*conv) return runner.convolve_cmd();
    if (*inv) return runner.invert_cmd();
  } catch (const std::exception& e) {
    // Input, parse, guard, support and non-unit errors alike.
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace incalg
