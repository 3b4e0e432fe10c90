#include <gtest/gtest.h>

#include <random>

#include "incalg/incidence.hpp"
#include "support.hpp"

using namespace incalg;
using testsupport::r;

namespace {

IncidenceAlgebra chain_alg(std::size_t n, const char* ring) { return IncidenceAlgebra(shapes::chain(n), Ring::parse(ring)); }

Preorder pq_class() { return Preorder::close({"p", "q", "r"}, {{"p", "q"}, {"q", "p"}, {"p", "r"}}); }

IncidenceFunction fn(const IncidenceAlgebra& a, std::initializer_list<std::tuple<const char*, const char*, std::int64_t>> es) {
  std::vector<IncidenceAlgebra::Entry> list;
  for (auto [x, y, v] : es) list.push_back({x, y, r(v)});
  return a.from_entries(list);
}

// Instances for randomized law checks: shapes and preorders with nontrivial classes.
std::vector<IncidenceAlgebra> instances() {
  std::vector<IncidenceAlgebra> out;
  out.emplace_back(shapes::chain(3), Ring::parse("Z/5"));
  out.emplace_back(shapes::crown(), Ring::parse("Z/12"));
  out.emplace_back(shapes::diamond(), Ring::parse("Z/4"));
  out.emplace_back(pq_class(), Ring::parse("Z/12"));
  out.emplace_back(Preorder::close({"a", "b", "c", "d", "e"}, {{"a", "b"}, {"b", "a"}, {"b", "c"}, {"c", "d"}, {"d", "c"}, {"a", "e"}}),
                   Ring::parse("Z/6"));
  out.emplace_back(shapes::chain(4), Ring::parse("Z/2 x Z/3"));
  out.emplace_back(shapes::diamond(), Ring::parse("M(2,Z/2)"));
  out.emplace_back(Preorder::close({"a", "b", "c"}, {{"a", "b"}, {"b", "a"}, {"a", "c"}}), Ring::parse("Z/9"));
  out.emplace_back(shapes::antichain(3), Ring::parse("Z/3"));
  out.emplace_back(shapes::crown(), Ring::parse("M(2,Z/3)"));
  return out;
}

bool single_entry_blocks(const IncidenceAlgebra& a) {
  for (std::size_t c = 0; c < a.quotient().size(); ++c)
    if (a.quotient().members(c).size() > 1) return false;
  return true;
}

}  // namespace

TEST(FromEntries, Examples) {
  auto a = chain_alg(3, "Z/5");
  auto f = fn(a, {{"a", "b", 1}});
  EXPECT_EQ(f, a.matrix_unit(0, 1));
  EXPECT_THROW(fn(a, {{"c", "a", 1}}), SupportError);
  try {
    fn(a, {{"c", "a", 1}});
  } catch (const SupportError& e) {
    EXPECT_NE(std::string(e.what()).find("(c,a)"), std::string::npos) << e.what();
  }
  IncidenceAlgebra pq(pq_class(), Ring::parse("Z/5"));
  EXPECT_NO_THROW(fn(pq, {{"p", "q", 2}}));
  // listing a pair outside the order is rejected even with value zero
  EXPECT_THROW(fn(a, {{"c", "a", 0}}), SupportError);
}

TEST(SpecialFunctions, MatrixUnitsAndIdempotents) {
  auto a = chain_alg(3, "Z/5");
  EXPECT_EQ(convolve(a.matrix_unit(0, 1), a.matrix_unit(1, 2)), a.matrix_unit(0, 2));
  EXPECT_TRUE(convolve(a.idempotent(0), a.idempotent(1)).is_zero());
  EXPECT_EQ(convolve(a.delta(), a.zeta()), a.zeta());
  EXPECT_THROW(a.matrix_unit(1, 0), std::invalid_argument);
  EXPECT_THROW(a.matrix_unit(1, 1), std::invalid_argument);
}

TEST(SpecialFunctions, IdempotentsOrthogonalAndCentralInL) {
  std::mt19937_64 rng(5);
  for (const auto& a : instances()) {
    const auto& q = a.quotient();
    IncidenceFunction sum(a);
    for (std::size_t x = 0; x < q.size(); ++x) {
      auto ex = a.idempotent(x);
      EXPECT_EQ(convolve(ex, ex), ex);
      sum = add(sum, ex);
      for (std::size_t y = 0; y < q.size(); ++y)
        if (x != y) EXPECT_TRUE(convolve(ex, a.idempotent(y)).is_zero());
      for (int t = 0; t < 100; ++t) {
        auto l = split_LM(random_function(a, rng)).l;
        ASSERT_EQ(convolve(ex, l), convolve(l, ex));
      }
    }
    EXPECT_EQ(sum, a.delta());
  }
}

TEST(Convolve, ChainZetaSquared) {
  auto a = chain_alg(3, "Z/5");
  auto z2 = convolve(a.zeta(), a.zeta());
  EXPECT_EQ(z2.at("a", "c"), r(3));
  EXPECT_EQ(z2.at("a", "b"), r(2));
  EXPECT_EQ(z2.at("a", "a"), r(1));
}

TEST(Convolve, MismatchedCarriers) {
  auto a = chain_alg(3, "Z/5"), b = chain_alg(3, "Z/7");
  EXPECT_THROW(convolve(a.zeta(), b.zeta()), IncompatibleError);
  EXPECT_THROW(add(a.zeta(), chain_alg(2, "Z/5").zeta()), IncompatibleError);
}

TEST(Convolve, MatchesDenseMatrixProduct) {
  std::mt19937_64 rng(17);
  for (const char* ring : {"Z/5", "Z/12", "Z/4"})
    for (const auto& p : generate_preorders(4, false)) {
      IncidenceAlgebra a(p, Ring::parse(ring));
      auto mod = a.ring().spec().modulus();
      for (int t = 0; t < 5; ++t) {
        auto f = random_function(a, rng), g = random_function(a, rng);
        ASSERT_EQ(testsupport::dense(convolve(f, g)),
                  testsupport::dense_mul(testsupport::dense(f), testsupport::dense(g), mod));
      }
    }
}

TEST(SplitLM, Examples) {
  auto a = chain_alg(3, "Z/5");
  auto parts = split_LM(add(a.delta(), a.matrix_unit(0, 1)));
  EXPECT_EQ(parts.l, a.delta());
  EXPECT_EQ(parts.m, a.matrix_unit(0, 1));

  IncidenceAlgebra pq(pq_class(), Ring::parse("Z/5"));
  auto f = fn(pq, {{"p", "q", 2}});
  EXPECT_EQ(split_LM(f).l, f);
  EXPECT_TRUE(split_LM(f).m.is_zero());

  auto m = a.matrix_unit(1, 2);
  EXPECT_TRUE(split_LM(m).l.is_zero());
  EXPECT_EQ(split_LM(m).m, m);
}

TEST(SplitLM, PartsAreDisjointAndSum) {
  std::mt19937_64 rng(23);
  for (const auto& a : instances())
    for (int t = 0; t < 20; ++t) {
      auto f = random_function(a, rng);
      auto [l, m] = split_LM(f);
      EXPECT_TRUE(l.in_L());
      EXPECT_TRUE(m.in_M());
      EXPECT_EQ(add(l, m), f);
    }
}

TEST(Block, Examples) {
  IncidenceAlgebra pq(pq_class(), Ring::parse("Z/5"));
  auto f = fn(pq, {{"p", "q", 2}});
  EXPECT_EQ(block(f, 0, 0), (RingMatrix{{r(0), r(2)}, {r(0), r(0)}}));
  EXPECT_EQ(block(pq.delta(), 0, 0), matrix_identity(pq.ring(), 2));
  EXPECT_EQ(block(pq.zeta(), 1, 0), (RingMatrix{{r(0), r(0)}}));
}

TEST(Block, Multiplicative) {
  std::mt19937_64 rng(29);
  for (const auto& a : instances()) {
    const auto& q = a.quotient();
    for (int t = 0; t < 10; ++t) {
      auto f = random_function(a, rng), g = random_function(a, rng);
      auto fg = convolve(f, g);
      for (std::size_t x = 0; x < q.size(); ++x)
        for (std::size_t y = 0; y < q.size(); ++y) {
          RingMatrix sum(q.members(x).size(), std::vector<RingElement>(q.members(y).size(), a.ring().zero()));
          for (std::size_t z = 0; z < q.size(); ++z) {
            if (!q.leq(x, z) || !q.leq(z, y)) continue;
            auto prod = matrix_mul(a.ring(), block(f, x, z), block(g, z, y));
            for (std::size_t i = 0; i < sum.size(); ++i)
              for (std::size_t j = 0; j < sum[i].size(); ++j) sum[i][j] = a.ring().add(sum[i][j], prod[i][j]);
          }
          ASSERT_EQ(block(fg, x, y), sum);
        }
    }
  }
}

TEST(Invert, Examples) {
  auto a = chain_alg(3, "Z/5");
  EXPECT_EQ(invert(a.delta()), a.delta());
  auto mu = invert(a.zeta());
  EXPECT_EQ(mu.at("a", "b"), r(4));
  EXPECT_EQ(mu.at("b", "c"), r(4));
  EXPECT_EQ(mu.at("a", "c"), r(0));
  EXPECT_EQ(mu.at("a", "a"), r(1));
  EXPECT_EQ(convolve(a.zeta(), mu), a.delta());

  auto bad = a.zeta();
  bad.set(0, 0, r(0));
  EXPECT_FALSE(is_unit(bad));
  try {
    invert(bad);
    FAIL();
  } catch (const NonUnitError& e) {
    EXPECT_NE(std::string(e.what()).find("[a]"), std::string::npos) << e.what();
  }
}

TEST(Invert, ClassBlockNeedsNoUnitPivot) {
  // Block [[3,1],[4,1]] over Z/12 is invertible although no entry of its first column is a unit.
  IncidenceAlgebra a(pq_class(), Ring::parse("Z/12"));
  auto u = fn(a, {{"p", "p", 3}, {"p", "q", 1}, {"q", "p", 4}, {"q", "q", 1}, {"r", "r", 5}, {"p", "r", 7}});
  ASSERT_TRUE(is_unit(u));
  auto ui = invert(u);
  EXPECT_EQ(convolve(u, ui), a.delta());
  EXPECT_EQ(convolve(ui, u), a.delta());
}

TEST(Invert, RandomUnits) {
  std::mt19937_64 rng(31);
  for (const auto& a : instances()) {
    if (!a.ring().is_commutative() && !single_entry_blocks(a)) continue;
    for (int t = 0; t < 50; ++t) {
      auto u = random_unit(a, rng);
      auto ui = invert(u);
      ASSERT_EQ(convolve(u, ui), a.delta());
      ASSERT_EQ(convolve(ui, u), a.delta());
    }
  }
}

TEST(Invert, UnitCriterionMatchesBruteForce) {
  // Over a tiny algebra: is_unit iff some g has fg = gf = delta.
  IncidenceAlgebra a(Preorder::close({"a", "b"}, {{"a", "b"}, {"b", "a"}}), Ring::parse("Z/2"));
  auto els = a.ring().elements();
  std::vector<IncidenceFunction> all;
  for (int code = 0; code < 16; ++code) {
    IncidenceFunction f(a);
    for (int i = 0; i < 4; ++i) f.set(i / 2, i % 2, r((code >> i) & 1));
    all.push_back(f);
  }
  for (const auto& f : all) {
    bool brute = false;
    for (const auto& g : all) brute = brute || (convolve(f, g) == a.delta() && convolve(g, f) == a.delta());
    EXPECT_EQ(is_unit(f), brute);
  }
}

TEST(Invert, OnePlusRadicalAlwaysInvertible) {
  std::mt19937_64 rng(37);
  for (const auto& a : instances()) {
    if (!a.ring().is_commutative() && !single_entry_blocks(a)) continue;
    for (int t = 0; t < 50; ++t) {
      auto d = random_radical(a, rng);
      ASSERT_TRUE(d.in_M());
      auto u = add(a.delta(), d);
      ASSERT_TRUE(is_unit(u));
      ASSERT_EQ(convolve(u, invert(u)), a.delta());
    }
  }
}

TEST(Invert, NoncommutativeClassBlocksUnsupported) {
  IncidenceAlgebra a(pq_class(), Ring::parse("M(2,Z/2)"));
  EXPECT_THROW(is_unit(a.delta()), IncompatibleError);
  EXPECT_THROW(invert(a.delta()), IncompatibleError);
}

TEST(UnitDecompose, Examples) {
  auto a = chain_alg(2, "Z/5");
  auto d0 = unit_decompose(a.delta());
  EXPECT_TRUE(d0.d.is_zero());
  EXPECT_EQ(d0.v, a.delta());

  auto u1 = add(a.delta(), a.matrix_unit(0, 1));
  auto d1 = unit_decompose(u1);
  EXPECT_EQ(d1.d, a.matrix_unit(0, 1));
  EXPECT_EQ(d1.v, a.delta());

  auto u = fn(a, {{"a", "a", 2}, {"b", "b", 3}, {"a", "b", 4}});
  auto d2 = unit_decompose(u);
  EXPECT_EQ(d2.d, fn(a, {{"a", "b", 3}}));
  EXPECT_EQ(d2.v, fn(a, {{"a", "a", 2}, {"b", "b", 3}}));
  EXPECT_EQ(convolve(add(a.delta(), d2.d), d2.v), u);
}

TEST(UnitDecompose, RecomposesExactly) {
  std::mt19937_64 rng(41);
  for (const auto& a : instances()) {
    if (!a.ring().is_commutative() && !single_entry_blocks(a)) continue;
    for (int t = 0; t < 30; ++t) {
      auto u = random_unit(a, rng);
      auto [d, v] = unit_decompose(u);
      ASSERT_TRUE(d.in_M());
      ASSERT_TRUE(v.in_L());
      ASSERT_EQ(convolve(add(a.delta(), d), v), u);
    }
  }
}

TEST(Conjugate, Examples) {
  auto a = chain_alg(2, "Z/5");
  auto f = a.matrix_unit(0, 1);
  EXPECT_EQ(conjugate(f, a.delta()), f);
  auto u = fn(a, {{"a", "a", 1}, {"b", "b", 2}});
  EXPECT_EQ(conjugate(f, u), scale(f, 2));
  auto w = add(a.delta(), a.matrix_unit(0, 1));
  EXPECT_EQ(conjugate(a.idempotent(1), w), add(a.idempotent(1), scale(a.matrix_unit(0, 1), 4)));
  auto nonunit = fn(a, {{"a", "b", 1}});
  EXPECT_THROW(conjugate(f, nonunit), NonUnitError);
}

TEST(Hadamard, Examples) {
  auto a = chain_alg(3, "Z/5");
  auto f = fn(a, {{"a", "b", 4}, {"b", "c", 2}, {"a", "a", 3}});
  EXPECT_EQ(hadamard(a.zeta(), f), f);
  auto m = fn(a, {{"a", "a", 1}, {"b", "b", 1}, {"c", "c", 1}, {"a", "b", 2}, {"b", "c", 3}, {"a", "c", 1}});
  EXPECT_EQ(hadamard(m, a.zeta()).at("a", "b"), r(2));
  EXPECT_TRUE(hadamard(m, a.zero()).is_zero());
  EXPECT_THROW(hadamard(m, chain_alg(3, "Z/7").zeta()), IncompatibleError);
}

TEST(AlgebraLaws, AssociativityAndIdentity) {
  std::mt19937_64 rng(43);
  for (const auto& a : instances())
    for (int t = 0; t < 200; ++t) {
      auto f = random_function(a, rng), g = random_function(a, rng), h = random_function(a, rng);
      ASSERT_EQ(convolve(convolve(f, g), h), convolve(f, convolve(g, h)));
      ASSERT_EQ(convolve(a.delta(), f), f);
      ASSERT_EQ(convolve(f, a.delta()), f);
      ASSERT_EQ(convolve(f, add(g, h)), add(convolve(f, g), convolve(f, h)));
    }
}
