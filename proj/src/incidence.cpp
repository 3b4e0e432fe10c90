#include "incalg/incidence.hpp"

namespace incalg {

namespace {

void require_same(const IncidenceFunction& f, const IncidenceFunction& g, const char* op) {
  if (!(f.algebra() == g.algebra()))
    throw IncompatibleError(std::string(op) + ": functions live in different incidence algebras");
}

IncidenceFunction from_blocks(const IncidenceAlgebra& a, const std::vector<RingMatrix>& blocks) {
  IncidenceFunction f(a);
  const auto& q = a.quotient();
  for (std::size_t c = 0; c < q.size(); ++c) {
    const auto& mem = q.members(c);
    for (std::size_t i = 0; i < mem.size(); ++i)
      for (std::size_t j = 0; j < mem.size(); ++j) f.set(mem[i], mem[j], blocks[c][i][j]);
  }
  return f;
}

}  // namespace

IncidenceAlgebra::IncidenceAlgebra(Preorder p, Ring ring) {
  QuotientPoset q(p);
  std::size_t h = q.height();
  data_ = std::make_shared<const Data>(Data{std::move(p), std::move(q), std::move(ring), h});
}

IncidenceFunction IncidenceAlgebra::zero() const { return IncidenceFunction(*this); }

IncidenceFunction IncidenceAlgebra::delta() const {
  IncidenceFunction f(*this);
  for (std::size_t x = 0; x < size(); ++x) f.set(x, x, ring().one());
  return f;
}

IncidenceFunction IncidenceAlgebra::zeta() const {
  IncidenceFunction f(*this);
  for (std::size_t x = 0; x < size(); ++x)
    for (std::size_t y = 0; y < size(); ++y)
      if (preorder().leq(x, y)) f.set(x, y, ring().one());
  return f;
}

IncidenceFunction IncidenceAlgebra::idempotent(std::size_t cls) const {
  IncidenceFunction f(*this);
  for (auto t : quotient().members(cls)) f.set(t, t, ring().one());
  return f;
}

IncidenceFunction IncidenceAlgebra::unit(std::size_t x, std::size_t y, const RingElement& r) const {
  IncidenceFunction f(*this);
  if (!preorder().leq(x, y))
    throw SupportError("(" + preorder().label(x) + "," + preorder().label(y) + ") is not a comparable pair");
  f.set(x, y, r);
  return f;
}

IncidenceFunction IncidenceAlgebra::matrix_unit(std::size_t x, std::size_t y) const {
  if (!preorder().less(x, y))
    throw SupportError("e_xy needs " + preorder().label(x) + " < " + preorder().label(y));
  return unit(x, y, ring().one());
}

IncidenceFunction IncidenceAlgebra::from_entries(const std::vector<Entry>& entries) const {
  IncidenceFunction f(*this);
  for (const auto& e : entries) {
    ring().require(e.value);
    auto x = preorder().index(e.from), y = preorder().index(e.to);
    if (!preorder().leq(x, y)) throw SupportError("entry (" + e.from + "," + e.to + ") violates the support condition");
    f.set(x, y, e.value);
  }
  return f;
}

IncidenceFunction::IncidenceFunction(IncidenceAlgebra algebra)
    : algebra_(std::move(algebra)), entries_(algebra_.size() * algebra_.size(), algebra_.ring().zero()) {}

const RingElement& IncidenceFunction::at(const std::string& x, const std::string& y) const {
  return at(preorder().index(x), preorder().index(y));
}

void IncidenceFunction::set(std::size_t x, std::size_t y, RingElement value) {
  ring().require(value);
  if (!preorder().leq(x, y) && !ring().is_zero(value))
    throw SupportError("(" + preorder().label(x) + "," + preorder().label(y) + ") violates the support condition");
  entries_[x * preorder().size() + y] = std::move(value);
}

void IncidenceFunction::set(const std::string& x, const std::string& y, RingElement value) {
  set(preorder().index(x), preorder().index(y), std::move(value));
}

bool IncidenceFunction::is_zero() const {
  for (const auto& e : entries_)
    if (!ring().is_zero(e)) return false;
  return true;
}

bool IncidenceFunction::in_L() const {
  const auto& p = preorder();
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y)
      if (!p.equivalent(x, y) && !ring().is_zero(at(x, y))) return false;
  return true;
}

bool IncidenceFunction::in_M() const {
  const auto& p = preorder();
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y)
      if (p.equivalent(x, y) && !ring().is_zero(at(x, y))) return false;
  return true;
}

IncidenceFunction add(const IncidenceFunction& f, const IncidenceFunction& g) {
  require_same(f, g, "add");
  IncidenceFunction h(f.algebra());
  const std::size_t n = f.preorder().size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) h.set(x, y, f.ring().add(f.at(x, y), g.at(x, y)));
  return h;
}

IncidenceFunction sub(const IncidenceFunction& f, const IncidenceFunction& g) {
  return add(f, scale(g, -1));
}

IncidenceFunction scale(const IncidenceFunction& f, std::int64_t t) {
  IncidenceFunction h(f.algebra());
  const std::size_t n = f.preorder().size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) h.set(x, y, f.ring().int_scale(f.at(x, y), t));
  return h;
}

IncidenceFunction convolve(const IncidenceFunction& f, const IncidenceFunction& g) {
  require_same(f, g, "convolve");
  const auto& p = f.preorder();
  const auto& ring = f.ring();
  IncidenceFunction h(f.algebra());
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y) {
      if (!p.leq(x, y)) continue;
      RingElement s = ring.zero();
      for (auto z : p.interval(x, y)) {
        if (ring.is_zero(f.at(x, z)) || ring.is_zero(g.at(z, y))) continue;
        s = ring.add(s, ring.mul(f.at(x, z), g.at(z, y)));
      }
      h.set(x, y, std::move(s));
    }
  return h;
}

LMParts split_LM(const IncidenceFunction& f) {
  LMParts parts{IncidenceFunction(f.algebra()), IncidenceFunction(f.algebra())};
  const auto& p = f.preorder();
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y) {
      if (!p.leq(x, y)) continue;
      (p.equivalent(x, y) ? parts.l : parts.m).set(x, y, f.at(x, y));
    }
  return parts;
}

RingMatrix block(const IncidenceFunction& f, std::size_t x_cls, std::size_t y_cls) {
  const auto& q = f.algebra().quotient();
  const auto& xs = q.members(x_cls);
  const auto& ys = q.members(y_cls);
  RingMatrix m(xs.size(), std::vector<RingElement>(ys.size()));
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < ys.size(); ++j) m[i][j] = f.at(xs[i], ys[j]);
  return m;
}

bool is_unit(const IncidenceFunction& f) {
  const auto& q = f.algebra().quotient();
  const auto& ring = f.ring();
  for (std::size_t c = 0; c < q.size(); ++c) {
    auto b = block(f, c, c);
    if (b.size() == 1) {
      if (!ring.is_unit(b[0][0])) return false;
    } else if (!ring.is_commutative()) {
      throw IncompatibleError("unit test for blocks over the noncommutative ring " + ring.spec().to_string() +
                              " is limited to 1x1 blocks");
    } else if (!ring.is_unit(matrix_det(ring, b))) {
      return false;
    }
  }
  return true;
}

namespace {

// Inverse of the L-part of f, block by block.
IncidenceFunction invert_L(const IncidenceFunction& f) {
  const auto& a = f.algebra();
  const auto& q = a.quotient();
  std::vector<RingMatrix> blocks;
  for (std::size_t c = 0; c < q.size(); ++c) {
    try {
      blocks.push_back(matrix_inverse(a.ring(), block(f, c, c)));
    } catch (const NonUnitError&) {
      throw NonUnitError("diagonal block of class [" + q.representative(c) + "] is not invertible");
    }
  }
  return from_blocks(a, blocks);
}

}  // namespace

IncidenceFunction invert(const IncidenceFunction& f) {
  const auto& a = f.algebra();
  auto [l, m] = split_LM(f);
  IncidenceFunction l_inv = invert_L(l);
  IncidenceFunction d = convolve(m, l_inv);
  // (1 + d)^-1 = 1 - d + d^2 - ...; d is nilpotent.
  IncidenceFunction series = a.delta();
  IncidenceFunction power = a.delta();
  for (std::size_t k = 1; k < a.nilpotency_bound(); ++k) {
    power = convolve(power, d);
    series = k % 2 == 1 ? sub(series, power) : add(series, power);
  }
  return convolve(l_inv, series);
}

UnitDecomposition unit_decompose(const IncidenceFunction& u) {
  auto [l, m] = split_LM(u);
  IncidenceFunction l_inv = invert_L(l);
  return {convolve(m, l_inv), l};
}

IncidenceFunction conjugate(const IncidenceFunction& f, const IncidenceFunction& u) {
  require_same(f, u, "conjugate");
  return convolve(convolve(invert(u), f), u);
}

IncidenceFunction hadamard(const IncidenceFunction& m, const IncidenceFunction& f) {
  require_same(m, f, "hadamard");
  IncidenceFunction h(f.algebra());
  const std::size_t n = f.preorder().size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) h.set(x, y, f.ring().mul(m.at(x, y), f.at(x, y)));
  return h;
}

RingElement random_element(const Ring& ring, std::mt19937_64& rng) {
  RingElement e = ring.zero();
  for (std::size_t i = 0; i < ring.width(); ++i)
    e.digits[i] = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(ring.digit_moduli()[i]));
  return e;
}

IncidenceFunction random_function(const IncidenceAlgebra& a, std::mt19937_64& rng) {
  IncidenceFunction f(a);
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < a.size(); ++y)
      if (a.preorder().leq(x, y)) f.set(x, y, random_element(a.ring(), rng));
  return f;
}

IncidenceFunction random_radical(const IncidenceAlgebra& a, std::mt19937_64& rng) {
  return split_LM(random_function(a, rng)).m;
}

IncidenceFunction random_unit(const IncidenceAlgebra& a, std::mt19937_64& rng) {
  const auto& q = a.quotient();
  const auto& ring = a.ring();
  std::vector<RingMatrix> blocks;
  for (std::size_t c = 0; c < q.size(); ++c) {
    const std::size_t k = q.members(c).size();
    RingMatrix b(k, std::vector<RingElement>(k, ring.zero()));
    if (k > 1 && !ring.is_commutative())
      throw IncompatibleError("random_unit: class blocks over a noncommutative ring must be 1x1");
    do {
      for (auto& row : b)
        for (auto& e : row) e = random_element(ring, rng);
    } while (k == 1 ? !ring.is_unit(b[0][0]) : !ring.is_unit(matrix_det(ring, b)));
    blocks.push_back(std::move(b));
  }
  return add(from_blocks(a, blocks), random_radical(a, rng));
}

}  // namespace incalg
