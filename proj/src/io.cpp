#include "incalg/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace incalg {

using json = nlohmann::ordered_json;

namespace {

json parse_json(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
}

const json& field(const json& obj, const char* key, const char* what) {
  if (!obj.is_object() || !obj.contains(key)) throw InputError(std::string(what) + ": missing field '" + key + "'");
  return obj.at(key);
}

std::string string_field(const json& obj, const char* key, const char* what) {
  const json& v = field(obj, key, what);
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw InputError(std::string(what) + ": field '" + key + "' must be a string");
}

RingElement parse_value(const Ring& ring, const std::string& text, const std::string& where) {
  try {
    return ring.parse_element(text);
  } catch (const ParseError& e) {
    throw InputError(where + ": bad value '" + text + "': " + e.what());
  }
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

std::string write_function_json(const IncidenceFunction& f) {
  json entries = json::array();
  const auto& p = f.preorder();
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y)
      if (!f.ring().is_zero(f.at(x, y)))
        entries.push_back({{"from", p.label(x)}, {"to", p.label(y)}, {"value", f.ring().format(f.at(x, y))}});
  return json{{"entries", entries}}.dump(2) + "\n";
}

IncidenceFunction read_function_json(const std::string& text, const IncidenceAlgebra& a) {
  const char* what = "function file";
  json doc = parse_json(text, what);
  const json& entries = field(doc, "entries", what);
  if (!entries.is_array()) throw InputError("function file: 'entries' must be an array");
  std::vector<IncidenceAlgebra::Entry> list;
  std::set<std::pair<std::string, std::string>> seen;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    std::string where = "function file: entry " + std::to_string(i);
    auto from = string_field(entries[i], "from", what);
    auto to = string_field(entries[i], "to", what);
    if (!a.preorder().contains(from) || !a.preorder().contains(to))
      throw InputError(where + ": unknown element in (" + from + "," + to + ")");
    if (!seen.emplace(from, to).second) throw InputError(where + ": duplicate pair (" + from + "," + to + ")");
    list.push_back({from, to, parse_value(a.ring(), string_field(entries[i], "value", what), where)});
  }
  return a.from_entries(list);
}

std::string write_weights_json(const WeightSystem& ws) {
  json weights = json::array();
  const auto& g = ws.graph();
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    auto [x, y] = g.edges()[e];
    weights.push_back({{"from", g.label(x)}, {"to", g.label(y)}, {"value", ws.ring().format(ws.edge_value(e).element())}});
  }
  return json{{"ring", ws.ring().spec().to_string()}, {"weights", weights}}.dump(2) + "\n";
}

WeightSystem read_weights_json(const std::string& text, std::shared_ptr<const ComparabilityGraph> graph,
                               const std::optional<Ring>& ring) {
  const char* what = "weights file";
  json doc = parse_json(text, what);
  Ring file_ring = [&] {
    try {
      return Ring::parse(string_field(doc, "ring", what));
    } catch (const ParseError& e) {
      throw InputError(std::string("weights file: bad ring: ") + e.what());
    }
  }();
  if (ring && !(*ring == file_ring))
    throw InputError("weights file: ring " + file_ring.spec().to_string() + " does not match " +
                     ring->spec().to_string());
  const json& weights = field(doc, "weights", what);
  if (!weights.is_array()) throw InputError("weights file: 'weights' must be an array");

  const auto& q = graph->poset();
  WeightSystem ws(graph, file_ring);
  std::vector<bool> seen(graph->edge_count(), false);
  for (std::size_t i = 0; i < weights.size(); ++i) {
    std::string where = "weights file: record " + std::to_string(i);
    auto from = string_field(weights[i], "from", what);
    auto to = string_field(weights[i], "to", what);
    std::size_t x, y;
    try {
      x = q.class_index(from);
      y = q.class_index(to);
    } catch (const InputError& e) {
      throw InputError(where + ": " + e.what());
    }
    auto e = graph->edge_between(x, y);
    if (!e || !q.less(x, y)) throw InputError(where + ": (" + from + "," + to + ") is not a pair " + from + " < " + to);
    if (seen[*e]) throw InputError(where + ": duplicate pair (" + from + "," + to + ")");
    seen[*e] = true;
    auto value = parse_value(file_ring, string_field(weights[i], "value", what), where);
    try {
      ws.set_edge(*e, file_ring.as_central_unit(value));
    } catch (const NonUnitError& err) {
      throw InputError(where + ": " + err.what());
    }
  }
  for (std::size_t e = 0; e < seen.size(); ++e)
    if (!seen[e]) throw InputError("weights file: missing weight for pair (" + graph->label(graph->edges()[e].lower) +
                                   "," + graph->label(graph->edges()[e].upper) + ")");
  return ws;
}

std::string write_potential_json(const Potential& v, const ComparabilityGraph& graph, const Ring& ring) {
  json values = json::array();
  for (std::size_t x = 0; x < v.values.size(); ++x)
    values.push_back({{"vertex", graph.label(x)}, {"value", ring.format(v.values[x].element())}});
  return json{{"ring", ring.spec().to_string()}, {"potential", values}}.dump(2) + "\n";
}

Potential read_potential_json(const std::string& text, const ComparabilityGraph& graph, const Ring& ring) {
  const char* what = "potential file";
  json doc = parse_json(text, what);
  const json& values = field(doc, "potential", what);
  if (!values.is_array()) throw InputError("potential file: 'potential' must be an array");
  std::vector<std::optional<CentralUnit>> slots(graph.vertex_count());
  for (std::size_t i = 0; i < values.size(); ++i) {
    std::string where = "potential file: record " + std::to_string(i);
    std::size_t x;
    try {
      x = graph.poset().class_index(string_field(values[i], "vertex", what));
    } catch (const InputError& e) {
      throw InputError(where + ": " + e.what());
    }
    if (slots[x]) throw InputError(where + ": duplicate vertex");
    try {
      slots[x] = ring.as_central_unit(parse_value(ring, string_field(values[i], "value", what), where));
    } catch (const NonUnitError& err) {
      throw InputError(where + ": " + err.what());
    }
  }
  Potential v;
  for (std::size_t x = 0; x < slots.size(); ++x) {
    if (!slots[x]) throw InputError("potential file: missing vertex '" + graph.label(x) + "'");
    v.values.push_back(*slots[x]);
  }
  return v;
}

std::string write_report_json(const VerificationReport& report) {
  json doc;
  doc["instance"] = {{"poset", report.poset}, {"ring", report.ring}};
  doc["seed"] = report.seed ? json(*report.seed) : json(nullptr);
  json counts = json::object();
  if (report.mult_count) counts["mult"] = *report.mult_count;
  if (report.inner_count) counts["mult0"] = *report.inner_count;
  if (report.trivial_on_tree_count) counts["mult1"] = *report.trivial_on_tree_count;
  doc["counts"] = counts;
  json checks = json::array();
  for (const auto& c : report.checks) {
    json item = {{"name", c.name}, {"status", c.passed ? "pass" : "fail"}};
    if (!c.detail.empty()) item["detail"] = c.detail;
    if (!c.counterexample.empty()) item["counterexample"] = json::parse(c.counterexample);
    checks.push_back(std::move(item));
  }
  doc["checks"] = checks;
  doc["skipped"] = report.skipped;
  doc["passed"] = report.passed();
  return doc.dump(2) + "\n";
}

}  // namespace incalg
