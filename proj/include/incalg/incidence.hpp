#pragma once

#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "incalg/preorder.hpp"
#include "incalg/ring.hpp"

namespace incalg {

class SupportError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IncidenceFunction;

/// I(X, R) for a finite preorder X and finite ring R. Copies share state.
class IncidenceAlgebra {
 public:
  IncidenceAlgebra(Preorder p, Ring ring);

  const Preorder& preorder() const { return data_->preorder; }
  const QuotientPoset& quotient() const { return data_->quotient; }
  const Ring& ring() const { return data_->ring; }
  std::size_t size() const { return preorder().size(); }
  /// d^k = 0 for every d in M once k exceeds this.
  std::size_t nilpotency_bound() const { return data_->height + 1; }

  IncidenceFunction zero() const;
  IncidenceFunction delta() const;
  IncidenceFunction zeta() const;
  /// e_[x]: ones on the diagonal of the class.
  IncidenceFunction idempotent(std::size_t cls) const;
  /// The single-entry function with value r at (x, y); requires x <= y.
  IncidenceFunction unit(std::size_t x, std::size_t y, const RingElement& r) const;
  /// e_xy; requires x < y.
  IncidenceFunction matrix_unit(std::size_t x, std::size_t y) const;

  struct Entry {
    std::string from, to;
    RingElement value;
  };
  /// Throws SupportError for an entry with from not <= to.
  IncidenceFunction from_entries(const std::vector<Entry>& entries) const;

  friend bool operator==(const IncidenceAlgebra& a, const IncidenceAlgebra& b) {
    return a.data_ == b.data_ || (a.preorder() == b.preorder() && a.ring() == b.ring());
  }

 private:
  struct Data {
    Preorder preorder;
    QuotientPoset quotient;
    Ring ring;
    std::size_t height;
  };
  std::shared_ptr<const Data> data_;
};

/// An element of I(X, R): values on pairs x <= y, zero elsewhere.
class IncidenceFunction {
 public:
  explicit IncidenceFunction(IncidenceAlgebra algebra);

  const IncidenceAlgebra& algebra() const { return algebra_; }
  const Ring& ring() const { return algebra_.ring(); }
  const Preorder& preorder() const { return algebra_.preorder(); }

  const RingElement& at(std::size_t x, std::size_t y) const { return entries_[x * preorder().size() + y]; }
  const RingElement& at(const std::string& x, const std::string& y) const;
  /// Throws SupportError if x is not <= y and value is nonzero.
  void set(std::size_t x, std::size_t y, RingElement value);
  void set(const std::string& x, const std::string& y, RingElement value);

  bool is_zero() const;
  /// Supported on x ~ y only.
  bool in_L() const;
  /// Supported on x !~ y only.
  bool in_M() const;

  friend bool operator==(const IncidenceFunction& a, const IncidenceFunction& b) {
    return a.algebra_ == b.algebra_ && a.entries_ == b.entries_;
  }

 private:
  IncidenceAlgebra algebra_;
  std::vector<RingElement> entries_;
};

IncidenceFunction add(const IncidenceFunction& f, const IncidenceFunction& g);
IncidenceFunction sub(const IncidenceFunction& f, const IncidenceFunction& g);
IncidenceFunction scale(const IncidenceFunction& f, std::int64_t t);

/// (fg)(x, y) = sum over x <= z <= y of f(x, z) g(z, y).
IncidenceFunction convolve(const IncidenceFunction& f, const IncidenceFunction& g);

struct LMParts {
  IncidenceFunction l;
  IncidenceFunction m;
};
LMParts split_LM(const IncidenceFunction& f);

/// Matrix (f(x_i, y_j)) over the lexicographic numbering of both classes.
RingMatrix block(const IncidenceFunction& f, std::size_t x_cls, std::size_t y_cls);

/// True when every diagonal block is invertible over R.
bool is_unit(const IncidenceFunction& f);

/// Two-sided inverse. Throws NonUnitError naming the class whose diagonal
/// block is singular.
IncidenceFunction invert(const IncidenceFunction& f);

struct UnitDecomposition {
  IncidenceFunction d;  // in M
  IncidenceFunction v;  // unit of L
};
/// u = (1 + d) v with v the L-part of u.
UnitDecomposition unit_decompose(const IncidenceFunction& u);

/// u^-1 f u.
IncidenceFunction conjugate(const IncidenceFunction& f, const IncidenceFunction& u);

/// Pointwise product m(x, y) f(x, y).
IncidenceFunction hadamard(const IncidenceFunction& m, const IncidenceFunction& f);

RingElement random_element(const Ring& ring, std::mt19937_64& rng);
IncidenceFunction random_function(const IncidenceAlgebra& a, std::mt19937_64& rng);
/// Random element of M.
IncidenceFunction random_radical(const IncidenceAlgebra& a, std::mt19937_64& rng);
/// Random unit: invertible diagonal blocks plus a random M-part.
IncidenceFunction random_unit(const IncidenceAlgebra& a, std::mt19937_64& rng);

}  // namespace incalg
