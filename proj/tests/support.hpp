#pragma once

// Independent reference computations for tests. These work on plain integer
// residues and dense arrays and never call the library's algorithms, only
// its accessors.

#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "incalg/incidence.hpp"
#include "incalg/preorder.hpp"
#include "incalg/ring.hpp"

namespace testsupport {

inline incalg::RingElement r(std::int64_t v) { return incalg::RingElement{{v}}; }

inline std::vector<std::int64_t> units_mod(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t u = 1; u < n; ++u)
    if (std::gcd(u, n) == 1) out.push_back(u);
  if (n == 1) out.push_back(0);
  return out;
}

inline std::int64_t inverse_mod(std::int64_t u, std::int64_t n) {
  for (std::int64_t y = 1; y < n; ++y)
    if (u * y % n == 1) return y;
  return -1;
}

// Strict pairs of a poset given by its leq matrix, in (x, y) index order.
struct StrictPairs {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
};

inline StrictPairs strict_pairs(const incalg::QuotientPoset& q) {
  StrictPairs sp;
  for (std::size_t x = 0; x < q.size(); ++x)
    for (std::size_t y = 0; y < q.size(); ++y)
      if (x != y && q.leq(x, y)) {
        sp.index[{x, y}] = sp.pairs.size();
        sp.pairs.emplace_back(x, y);
      }
  return sp;
}

// All assignments of units of Z/n to strict pairs obeying c_xy = c_xz c_zy,
// by plain odometer over every candidate vector.
inline std::set<std::map<std::pair<std::size_t, std::size_t>, std::int64_t>> naive_mult(const incalg::QuotientPoset& q,
                                                                                        std::int64_t n) {
  auto sp = strict_pairs(q);
  auto units = units_mod(n);
  std::set<std::map<std::pair<std::size_t, std::size_t>, std::int64_t>> out;
  std::vector<std::size_t> pick(sp.pairs.size(), 0);
  while (true) {
    std::map<std::pair<std::size_t, std::size_t>, std::int64_t> c;
    for (std::size_t i = 0; i < sp.pairs.size(); ++i) c[sp.pairs[i]] = units[pick[i]];
    bool ok = true;
    for (auto [xz, a] : c)
      for (auto [zy, b] : c)
        if (xz.second == zy.first && c.at({xz.first, zy.second}) != a * b % n) ok = false;
    if (ok) out.insert(c);
    std::size_t i = pick.size();
    while (i > 0 && ++pick[i - 1] == units.size()) pick[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

// { v_x^-1 v_y } over every potential v.
inline std::set<std::map<std::pair<std::size_t, std::size_t>, std::int64_t>> naive_inner(const incalg::QuotientPoset& q,
                                                                                         std::int64_t n) {
  auto sp = strict_pairs(q);
  auto units = units_mod(n);
  std::set<std::map<std::pair<std::size_t, std::size_t>, std::int64_t>> out;
  std::vector<std::size_t> pick(q.size(), 0);
  while (true) {
    std::map<std::pair<std::size_t, std::size_t>, std::int64_t> c;
    for (auto [x, y] : sp.pairs) c[{x, y}] = inverse_mod(units[pick[x]], n) * units[pick[y]] % n;
    out.insert(c);
    std::size_t i = pick.size();
    while (i > 0 && ++pick[i - 1] == units.size()) pick[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

// Dense n x n residue matrix of a function over Z/n.
inline std::vector<std::vector<std::int64_t>> dense(const incalg::IncidenceFunction& f) {
  const auto n = f.preorder().size();
  std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) m[x][y] = f.at(x, y).digits.at(0);
  return m;
}

// Plain matrix product mod n, summing over every middle index.
inline std::vector<std::vector<std::int64_t>> dense_mul(const std::vector<std::vector<std::int64_t>>& a,
                                                        const std::vector<std::vector<std::int64_t>>& b,
                                                        std::int64_t mod) {
  const auto n = a.size();
  std::vector<std::vector<std::int64_t>> c(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] = (c[i][j] + a[i][k] * b[k][j]) % mod;
  return c;
}

inline incalg::Preorder poset(const std::string& text) { return incalg::parse_preorder(text); }

}  // namespace testsupport
