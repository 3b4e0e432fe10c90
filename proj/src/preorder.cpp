#include "incalg/preorder.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace incalg {

namespace {

void warshall(std::vector<std::uint8_t>& r, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (r[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (r[k * n + j]) r[i * n + j] = 1;
}

}  // namespace

Preorder::Preorder(std::vector<std::string> labels, std::vector<std::uint8_t> leq)
    : labels_(std::move(labels)), leq_(std::move(leq)) {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    const auto& l = labels_[i];
    if (l.empty() || std::any_of(l.begin(), l.end(), [](unsigned char c) { return std::isspace(c); }))
      throw InputError("invalid label '" + l + "'");
    if (!index_.emplace(l, i).second) throw InputError("duplicate element '" + l + "'");
  }
}

Preorder Preorder::close(std::vector<std::string> elements,
                         const std::vector<std::pair<std::string, std::string>>& generators) {
  const std::size_t n = elements.size();
  Preorder p(std::move(elements), std::vector<std::uint8_t>(n * n, 0));
  for (std::size_t i = 0; i < n; ++i) p.leq_[i * n + i] = 1;
  for (const auto& [x, y] : generators) p.leq_[p.index(x) * n + p.index(y)] = 1;
  warshall(p.leq_, n);
  return p;
}

Preorder Preorder::from_matrix(std::vector<std::string> elements, std::vector<std::uint8_t> leq) {
  const std::size_t n = elements.size();
  if (leq.size() != n * n) throw InputError("relation matrix has the wrong size");
  for (auto& v : leq) v = v ? 1 : 0;
  auto closed = leq;
  for (std::size_t i = 0; i < n; ++i) closed[i * n + i] = 1;
  warshall(closed, n);
  if (closed != leq) throw InputError("relation is not reflexive and transitive");
  return Preorder(std::move(elements), std::move(leq));
}

std::size_t Preorder::index(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw InputError("unknown element '" + label + "'");
  return it->second;
}

bool Preorder::is_partial_order() const {
  for (std::size_t x = 0; x < size(); ++x)
    for (std::size_t y = x + 1; y < size(); ++y)
      if (equivalent(x, y)) return false;
  return true;
}

std::vector<std::size_t> Preorder::interval(std::size_t x, std::size_t y) const {
  std::vector<std::size_t> out;
  if (!leq(x, y)) return out;
  for (std::size_t z = 0; z < size(); ++z)
    if (leq(x, z) && leq(z, y)) out.push_back(z);
  return out;
}

std::vector<std::string> Preorder::interval(const std::string& x, const std::string& y) const {
  std::vector<std::string> out;
  for (auto z : interval(index(x), index(y))) out.push_back(labels_[z]);
  return out;
}

QuotientPoset::QuotientPoset(const Preorder& p)
    : source_(std::make_shared<const Preorder>(p)), class_of_(p.size()), position_(p.size()) {
  const std::size_t n = p.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return p.label(a) < p.label(b); });

  std::vector<bool> seen(n, false);
  for (auto x : order) {
    if (seen[x]) continue;
    std::vector<std::size_t> cls;
    for (auto y : order)
      if (p.equivalent(x, y)) {
        cls.push_back(y);
        seen[y] = true;
      }
    for (std::size_t i = 0; i < cls.size(); ++i) {
      class_of_[cls[i]] = classes_.size();
      position_[cls[i]] = i;
    }
    reps_.push_back(p.label(cls.front()));
    classes_.push_back(std::move(cls));
  }

  const std::size_t k = classes_.size();
  leq_.assign(k * k, 0);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) leq_[a * k + b] = p.leq(classes_[a][0], classes_[b][0]) ? 1 : 0;
}

std::size_t QuotientPoset::class_index(const std::string& representative) const {
  auto it = std::find(reps_.begin(), reps_.end(), representative);
  if (it == reps_.end()) throw InputError("'" + representative + "' is not a class representative");
  return static_cast<std::size_t>(it - reps_.begin());
}

std::size_t QuotientPoset::class_of_label(const std::string& label) const {
  return class_of(source_->index(label));
}

std::size_t QuotientPoset::interval_length(std::size_t a, std::size_t b) const {
  if (!leq(a, b)) throw std::domain_error("interval_length: first class is not below the second");
  // Longest path a -> b in the strict order; classes are few, so plain memoised DFS.
  std::vector<long> best(size(), -1);
  auto go = [&](auto&& self, std::size_t x) -> long {
    if (x == b) return 0;
    if (best[x] != -1) return best[x];
    long r = -2;
    for (std::size_t z = 0; z < size(); ++z)
      if (less(x, z) && leq(z, b)) {
        long sub = self(self, z);
        if (sub >= 0) r = std::max(r, sub + 1);
      }
    return best[x] = r;
  };
  return static_cast<std::size_t>(go(go, a));
}

std::size_t QuotientPoset::height() const {
  std::size_t h = 0;
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = 0; b < size(); ++b)
      if (leq(a, b)) h = std::max(h, interval_length(a, b));
  return h;
}

std::vector<std::vector<std::size_t>> QuotientPoset::connected_components() const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(size(), false);
  for (std::size_t s = 0; s < size(); ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp;
    std::queue<std::size_t> q;
    q.push(s);
    seen[s] = true;
    while (!q.empty()) {
      auto x = q.front();
      q.pop();
      comp.push_back(x);
      for (std::size_t y = 0; y < size(); ++y)
        if (!seen[y] && (less(x, y) || less(y, x))) {
          seen[y] = true;
          q.push(y);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

Preorder QuotientPoset::as_preorder() const { return Preorder::from_matrix(reps_, leq_); }

Preorder read_preorder(std::istream& in, const std::string& source_name) {
  std::optional<std::vector<std::string>> elements;
  std::vector<std::pair<std::string, std::string>> rels;
  std::vector<std::size_t> rel_lines;
  std::string line;
  std::size_t lineno = 0;
  auto where = [&] { return source_name + ":" + std::to_string(lineno) + ": "; };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string keyword;
    if (!(ls >> keyword)) continue;
    if (keyword == "elements") {
      if (elements) throw InputError(where() + "second 'elements' line");
      elements.emplace();
      for (std::string l; ls >> l;) elements->push_back(l);
      if (elements->empty()) throw InputError(where() + "'elements' line lists no elements");
    } else if (keyword == "rel") {
      std::string x, y, extra;
      if (!(ls >> x >> y) || (ls >> extra)) throw InputError(where() + "expected 'rel <x> <y>'");
      rels.emplace_back(x, y);
      rel_lines.push_back(lineno);
    } else {
      throw InputError(where() + "unknown keyword '" + keyword + "'");
    }
  }
  if (!elements) throw InputError(source_name + ": missing 'elements' line");
  std::set<std::string> declared(elements->begin(), elements->end());
  if (declared.size() != elements->size()) throw InputError(source_name + ": duplicate element label");
  for (std::size_t i = 0; i < rels.size(); ++i)
    for (const auto& l : {rels[i].first, rels[i].second})
      if (!declared.count(l))
        throw InputError(source_name + ":" + std::to_string(rel_lines[i]) + ": undeclared element '" + l + "'");
  return Preorder::close(std::move(*elements), rels);
}

Preorder read_preorder_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open poset file '" + path + "'");
  return read_preorder(in, path);
}

Preorder parse_preorder(const std::string& text) {
  std::istringstream in(text);
  return read_preorder(in);
}

std::string write_preorder(const Preorder& p) {
  std::string out = "elements";
  for (const auto& l : p.labels()) out += " " + l;
  out += "\n";
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y)
      if (x != y && p.leq(x, y)) out += "rel " + p.label(x) + " " + p.label(y) + "\n";
  return out;
}

namespace {

using Relation = std::vector<std::uint8_t>;

std::uint64_t encode(const Relation& r, std::size_t n, const std::vector<std::size_t>& perm) {
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) code = (code << 1) | r[perm[i] * n + perm[j]];
  return code;
}

// Lexicographically largest encoding over all relabellings, plus the relabelled relation.
std::pair<std::uint64_t, Relation> canonical(const Relation& r, std::size_t n) {
  std::vector<std::size_t> perm(n), best_perm;
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = 0;
  bool first = true;
  do {
    auto c = encode(r, n, perm);
    if (first || c > best) {
      best = c;
      best_perm = perm;
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  Relation out(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i * n + j] = r[best_perm[i] * n + best_perm[j]];
  return {best, out};
}

std::vector<std::string> letter_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::string(1, static_cast<char>('a' + i)));
  return out;
}

// Unlabelled posets on exactly n points, as canonical relations.
std::vector<std::vector<Relation>> posets_by_size(std::size_t max_n) {
  std::vector<std::vector<Relation>> by_size(max_n + 1);
  by_size[0].push_back({});
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::set<std::uint64_t> seen;
    const std::size_t m = n - 1;
    for (const auto& base : by_size[m]) {
      // The new point n-1 is maximal; its strict down-set is any order ideal.
      for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        bool ideal = true;
        for (std::size_t y = 0; y < m && ideal; ++y)
          if (mask >> y & 1)
            for (std::size_t x = 0; x < m; ++x)
              if (base[x * m + y] && !(mask >> x & 1)) ideal = false;
        if (!ideal) continue;
        Relation r(n * n, 0);
        for (std::size_t x = 0; x < m; ++x)
          for (std::size_t y = 0; y < m; ++y) r[x * n + y] = base[x * m + y];
        for (std::size_t x = 0; x < m; ++x) r[x * n + m] = mask >> x & 1;
        r[m * n + m] = 1;
        auto [code, canon] = canonical(r, n);
        if (seen.insert(code).second) by_size[n].push_back(std::move(canon));
      }
    }
  }
  return by_size;
}

void compositions(std::size_t parts, std::size_t max_total, std::vector<std::size_t>& cur,
                  std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == parts) {
    out.push_back(cur);
    return;
  }
  std::size_t used = std::accumulate(cur.begin(), cur.end(), std::size_t{0});
  std::size_t remaining_parts = parts - cur.size() - 1;
  for (std::size_t s = 1; used + s + remaining_parts <= max_total; ++s) {
    cur.push_back(s);
    compositions(parts, max_total, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Preorder> generate_preorders(std::size_t max_size, bool posets_only) {
  if (max_size > 7) throw std::invalid_argument("generate_preorders: at most 7 points");
  auto posets = posets_by_size(max_size);
  std::set<std::pair<std::size_t, std::uint64_t>> seen;
  std::vector<std::tuple<std::size_t, std::uint64_t, Relation>> found;
  for (std::size_t k = 1; k <= max_size; ++k) {
    for (const auto& q : posets[k]) {
      std::vector<std::vector<std::size_t>> sizes;
      if (posets_only) {
        sizes.push_back(std::vector<std::size_t>(k, 1));
      } else {
        std::vector<std::size_t> cur;
        compositions(k, max_size, cur, sizes);
      }
      for (const auto& sz : sizes) {
        std::size_t n = std::accumulate(sz.begin(), sz.end(), std::size_t{0});
        std::vector<std::size_t> owner;
        for (std::size_t c = 0; c < k; ++c) owner.insert(owner.end(), sz[c], c);
        Relation r(n * n);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) r[i * n + j] = q[owner[i] * k + owner[j]];
        auto [code, canon] = canonical(r, n);
        if (seen.emplace(n, code).second) found.emplace_back(n, code, std::move(canon));
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
    return std::get<1>(a) > std::get<1>(b);
  });
  std::vector<Preorder> out;
  for (auto& [n, code, rel] : found) out.push_back(Preorder::from_matrix(letter_labels(n), std::move(rel)));
  return out;
}

namespace shapes {

Preorder chain(std::size_t n) {
  auto labels = letter_labels(n);
  std::vector<std::pair<std::string, std::string>> gens;
  for (std::size_t i = 0; i + 1 < n; ++i) gens.emplace_back(labels[i], labels[i + 1]);
  return Preorder::close(labels, gens);
}

Preorder antichain(std::size_t n) { return Preorder::close(letter_labels(n), {}); }

Preorder crown() {
  return Preorder::close({"a", "b", "c", "d"}, {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}});
}

Preorder diamond() {
  return Preorder::close({"a", "b", "c", "d"}, {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}});
}

}  // namespace shapes

}  // namespace incalg
