// Acceptance harness: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "incalg/cli.hpp"
#include "incalg/io.hpp"
#include "incalg/oracle.hpp"

using namespace incalg;

namespace {

const std::vector<std::string> kRings = {"Z/2", "Z/3", "Z/4", "Z/5", "Z/12"};
const std::string kData = INCALG_DATA_DIR;

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

struct Instance {
  Preorder poset;
  std::string ring;
  VerificationReport report;
};

std::vector<Instance>& sweep() {
  static std::vector<Instance> instances;
  return instances;
}

std::size_t skipped_instances = 0;

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

std::string describe(const Instance& in) {
  std::string s = in.ring + " on {";
  for (const auto& l : in.poset.labels()) s += l;
  return s + "} " + std::to_string(in.poset.size()) + " points";
}

const CheckResult* find_check(const VerificationReport& rep, const std::string& name) {
  for (const auto& c : rep.checks)
    if (c.name == name) return &c;
  return nullptr;
}

Outcome criterion1() {
  Outcome o;
  std::size_t instances = 0;
  for (const auto& p : connected_posets(5))
    for (const auto& ring : kRings) {
      auto graph = make_graph(p);
      Ring R = Ring::parse(ring);
      if (saturating_pow(R.central_units().size(), graph->edge_count()) > EnumerationLimits{}.max_candidates) {
        ++skipped_instances;
        continue;
      }
      auto rep = verify_structure(graph, R);
      ++instances;
      for (const char* name : {"enumerated_systems_valid", "decomposition", "intersection_trivial",
                               "order_product"}) {
        const auto* c = find_check(rep, name);
        if (!c) o.fail(std::string("missing check ") + name);
        else if (!c->passed) o.fail(std::string(name) + " failed on " + write_preorder(p) + " / " + ring);
      }
      if (!rep.passed()) o.fail("report failed on " + write_preorder(p) + " / " + ring);
      sweep().push_back({p, ring, std::move(rep)});
    }
  if (o.ok)
    o.detail = std::to_string(instances) + " instances, " + std::to_string(skipped_instances) + " beyond guard";
  return o;
}

Outcome criterion2() {
  Outcome o;
  for (const auto& in : sweep()) {
    QuotientPoset q(in.poset);
    std::uint64_t m = 0;
    for (std::size_t a = 0; a < q.size(); ++a)
      for (std::size_t b = 0; b < q.size(); ++b) m += q.less(a, b);
    std::uint64_t lambda = m - q.size() + q.connected_components().size();
    std::uint64_t g = Ring::parse(in.ring).central_units().size();
    if (!in.report.inner_count || *in.report.inner_count != ipow(g, m - lambda))
      o.fail("inner count mismatch on " + describe(in));
  }
  auto inner = [](const Preorder& p, const char* ring) {
    return enumerate_inner(make_graph(p), Ring::parse(ring)).size();
  };
  auto mult = [](const Preorder& p, const char* ring) { return enumerate_mult(make_graph(p), Ring::parse(ring)).size(); };
  if (inner(shapes::crown(), "Z/5") != 64) o.fail("crown/Z/5 inner != 64");
  if (inner(shapes::diamond(), "Z/5") != 64) o.fail("diamond/Z/5 inner != 64");
  if (inner(shapes::chain(3), "Z/12") != 16) o.fail("3-chain/Z/12 inner != 16");
  // the diamond and chain are tree-like in the sense that Mult = Mult0
  if (mult(shapes::diamond(), "Z/5") != 64 || mult(shapes::chain(3), "Z/12") != 16) o.fail("Mult != Mult0 on a tree case");
  if (o.ok) o.detail = "crown/Z/5 64, diamond/Z/5 64, 3-chain/Z/12 16";
  return o;
}

Outcome criterion3() {
  Outcome o;
  for (const auto& in : sweep())
    for (const char* name : {"inner_subset_of_mult", "innerness_tests_agree", "all_inner_iff_mult1_trivial",
                             "path_weights_iff_inner"}) {
      const auto* c = find_check(in.report, name);
      bool optional = std::string(name) == "path_weights_iff_inner" && in.poset.size() > 6;
      if (!c && !optional) o.fail(std::string("missing check ") + name + " on " + describe(in));
      else if (c && !c->passed) o.fail(std::string(name) + " failed on " + describe(in) + ": " + c->detail);
    }
  if (o.ok) o.detail = "0 disagreements over " + std::to_string(sweep().size()) + " instances";
  return o;
}

Outcome criterion4() {
  Outcome o;
  for (std::size_t n : {2u, 3u})
    for (const char* ring : {"Z/2", "Z/3"}) {
      auto rep = verify_prop31(IncidenceAlgebra(shapes::chain(n), Ring::parse(ring)));
      if (!rep.passed()) o.fail(std::to_string(n) + "-chain over " + ring + ": " + rep.checks.at(0).detail);
    }
  if (o.ok) o.detail = "4 instances";
  return o;
}

Outcome criterion5() {
  Outcome o;
  for (auto [n, m, ring] : std::vector<std::tuple<std::size_t, std::size_t, const char*>>{
           {1, 1, "Z/2"}, {1, 1, "Z/3"}, {2, 1, "Z/2"}, {1, 2, "Z/2"}}) {
    auto rep = verify_prop32(n, m, Ring::parse(ring));
    if (!rep.passed()) o.fail("(" + std::to_string(n) + "," + std::to_string(m) + "," + ring + ")");
  }
  if (o.ok) o.detail = "4 cases";
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::vector<std::pair<Preorder, const char*>> instances = {
      {shapes::chain(3), "Z/5"},
      {shapes::crown(), "Z/12"},
      {shapes::diamond(), "Z/4"},
      {shapes::antichain(3), "Z/6"},
      {Preorder::close({"a", "b", "c"}, {{"a", "b"}, {"b", "a"}, {"a", "c"}}), "Z/12"},
      {Preorder::close({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "a"}, {"c", "d"}, {"d", "c"}, {"a", "c"}}), "Z/8"},
      {shapes::chain(4), "Z/2 x Z/3"},
      {shapes::crown(), "M(2,Z/3)"},
      {shapes::diamond(), "Z/9"},
      {Preorder::close({"a", "b", "c", "d", "e"}, {{"a", "c"}, {"b", "c"}, {"c", "d"}, {"c", "e"}}), "Z/3"},
  };
  std::uint64_t seed = 1;
  for (const auto& [p, ring] : instances) {
    auto rep = verify_algebra_laws(IncidenceAlgebra(p, Ring::parse(ring)), 200, seed++);
    if (rep.checks.size() != 6) o.fail(std::string("inversion checks missing for ") + ring);
    for (const auto& c : rep.checks)
      if (!c.passed) o.fail(c.name + " failed over " + ring + ": " + c.detail);
  }
  if (o.ok) o.detail = "10 instances x 200 triples, 50 units, 50 radicals";
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::vector<std::pair<Preorder, const char*>> instances = {
      {shapes::crown(), "Z/5"}, {shapes::diamond(), "Z/5"}, {shapes::chain(3), "Z/12"},
      {Preorder::close({"a", "b", "c"}, {{"a", "b"}, {"b", "a"}, {"a", "c"}}), "Z/12"}, {shapes::crown(), "Z/2 x Z/3"}};
  std::size_t systems = 0;
  std::uint64_t seed = 100;
  for (const auto& [p, ring] : instances) {
    auto graph = make_graph(p);
    Ring R = Ring::parse(ring);
    IncidenceAlgebra a(p, R);
    auto all = enumerate_mult(graph, R);
    std::size_t take = std::min<std::size_t>(20, all.size());
    for (std::size_t i = 0; i < take; ++i) {
      const auto& ws = all[i * all.size() / take];
      auto rep = automorphism_check(ws, a, 100, seed++);
      ++systems;
      for (const auto& c : rep.checks)
        if (!c.passed) o.fail(c.name + " failed over " + ring + ": " + c.detail);
    }
  }
  if (o.ok) o.detail = std::to_string(systems) + " systems x 100 pairs";
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::size_t count = 0;
  for (const auto& p : generate_preorders(6, false)) {
    ++count;
    QuotientPoset q(p);
    const std::size_t n = p.size();
    for (std::size_t x = 0; x < n; ++x) {
      std::vector<std::size_t> cls;
      for (std::size_t y = 0; y < n; ++y)
        if (p.leq(x, y) && p.leq(y, x)) cls.push_back(y);
      for (auto y : cls)
        for (auto z : cls)
          if (p.interval(y, z) != cls) o.fail("(a) fails on " + write_preorder(p));
    }
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t t = 0; t < n; ++t)
        if (q.less(q.class_of(s), q.class_of(t)) != (p.leq(s, t) && !p.leq(t, s)))
          o.fail("(b) fails on " + write_preorder(p));
    if (p.is_partial_order() && QuotientPoset(p).as_preorder() != p) o.fail("quotient changed poset " + write_preorder(p));
  }
  if (o.ok) o.detail = std::to_string(count) + " preorders";
  return o;
}

Outcome criterion9() {
  Outcome o;
  auto run = [](std::vector<std::string> args, std::string& out) {
    std::ostringstream os, es;
    int code = run_command(args, os, es);
    out = os.str();
    return code;
  };
  std::string first, second, bad;
  std::vector<std::string> args = {"verify", "--poset", kData + "/crown.txt", "--ring", "Z/5", "--seed", "7"};
  int c1 = run(args, first), c2 = run(args, second);
  if (c1 != 0 || c2 != 0) o.fail("verify on a valid input exited nonzero");
  if (first != second || first.empty()) o.fail("reports differ between runs");
  int c3 = run({"verify", "--poset", kData + "/chain3.txt", "--ring", "Z/5", "--weights", kData + "/chain3_corrupt_z5.json", "--trials", "10"},
               bad);
  if (c3 != 1) o.fail("verify on a corrupted system exited " + std::to_string(c3));
  if (o.ok) o.detail = "identical reports, exit codes 0/1";
  return o;
}

}  // namespace

int main() {
  std::vector<std::pair<int, std::function<Outcome()>>> criteria = {
      {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4}, {5, criterion5},
      {6, criterion6}, {7, criterion7}, {8, criterion8}, {9, criterion9}};
  bool all = true;
  for (const auto& [id, fn] : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && o.ok;
    std::cout << "criterion " << id << ": " << (o.ok ? "PASS" : "FAIL") << " (" << std::fixed;
    std::cout.precision(2);
    std::cout << secs << " s) " << o.detail << std::endl;
  }
  return all ? 0 : 1;
}
