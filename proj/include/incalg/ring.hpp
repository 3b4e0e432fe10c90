#pragma once

// Finite coefficient rings: Z/n, direct products, and M(k, Z/n).
//
// Every element is stored as a flat vector of residues ("digits"). The ring
// spec fixes the layout: one residue for Z/n, the concatenated component
// layouts for a product, and k*k row-major residues for a matrix ring. Each
// digit position has its own modulus, so the additive group of any supported
// ring is the direct sum of the cyclic groups Z/m_p over the positions p.

#include <compare>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace incalg {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IncompatibleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NonUnitError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class RingSpec {
 public:
  enum class Kind { Modular, Product, Matrix };

  static RingSpec modular(std::int64_t n);
  static RingSpec product(RingSpec left, RingSpec right);
  static RingSpec matrix(std::int64_t k, std::int64_t n);

  Kind kind() const { return kind_; }
  std::int64_t modulus() const { return modulus_; }
  std::int64_t size() const { return size_; }
  const RingSpec& left() const { return *factors_.at(0); }
  const RingSpec& right() const { return *factors_.at(1); }

  /// Number of residues in the flat encoding.
  std::size_t width() const;
  /// Modulus of every digit position, in encoding order.
  std::vector<std::int64_t> digit_moduli() const;
  bool is_commutative() const;

  /// Canonical text form, re-parseable by parse_ring_spec.
  std::string to_string() const;

  friend bool operator==(const RingSpec& a, const RingSpec& b);

 private:
  RingSpec() = default;

  Kind kind_ = Kind::Modular;
  std::int64_t modulus_ = 2;
  std::int64_t size_ = 1;
  std::vector<std::shared_ptr<const RingSpec>> factors_;
};

/// Grammar: `Z/<n>` | `M(<k>,Z/<n>)` | `<spec> x <spec>` (left-associative).
/// Parentheses may group a product on the right-hand side.
RingSpec parse_ring_spec(std::string_view text);

struct RingElement {
  std::vector<std::int64_t> digits;

  friend bool operator==(const RingElement&, const RingElement&) = default;
  friend auto operator<=>(const RingElement&, const RingElement&) = default;
};

class Ring;

/// An element of U(R) ∩ C(R). Only Ring can vouch for one.
class CentralUnit {
 public:
  const RingElement& element() const { return element_; }

  friend bool operator==(const CentralUnit&, const CentralUnit&) = default;
  friend auto operator<=>(const CentralUnit&, const CentralUnit&) = default;

 private:
  friend class Ring;
  explicit CentralUnit(RingElement e) : element_(std::move(e)) {}
  RingElement element_;
};

class Ring {
 public:
  explicit Ring(RingSpec spec);
  static Ring parse(std::string_view text) { return Ring(parse_ring_spec(text)); }

  const RingSpec& spec() const { return *spec_; }
  std::size_t width() const { return moduli_.size(); }
  const std::vector<std::int64_t>& digit_moduli() const { return moduli_; }
  std::uint64_t order() const;
  bool is_commutative() const { return spec_->is_commutative(); }

  bool contains(const RingElement& x) const;
  /// Throws IncompatibleError unless x is a canonical element of this ring.
  void require(const RingElement& x) const;

  const RingElement& zero() const { return zero_; }
  const RingElement& one() const { return one_; }
  RingElement add(const RingElement& a, const RingElement& b) const;
  RingElement sub(const RingElement& a, const RingElement& b) const;
  RingElement neg(const RingElement& a) const;
  RingElement mul(const RingElement& a, const RingElement& b) const;
  RingElement int_scale(const RingElement& a, std::int64_t t) const;
  /// The image of the integer t under Z -> R.
  RingElement from_int(std::int64_t t) const { return int_scale(one(), t); }

  bool is_zero(const RingElement& a) const;
  bool is_one(const RingElement& a) const;
  bool is_unit(const RingElement& a) const;
  /// Two-sided inverse; throws NonUnitError for non-units.
  RingElement inverse(const RingElement& a) const;
  bool is_central(const RingElement& a) const;

  /// Every element, in lexicographic order of encodings.
  std::vector<RingElement> elements() const;
  /// C(R), computed structurally from the spec.
  std::vector<RingElement> center() const;
  /// U(R) ∩ C(R), sorted by encoding; always contains one().
  std::vector<CentralUnit> central_units() const;
  /// Checks membership in U(R) ∩ C(R); throws NonUnitError otherwise.
  CentralUnit as_central_unit(const RingElement& a) const;
  CentralUnit unit_one() const { return CentralUnit(one()); }
  CentralUnit mul(const CentralUnit& a, const CentralUnit& b) const;
  CentralUnit inverse(const CentralUnit& a) const;

  /// Text encodings: `7`, `(a,b)`, `[[r,r],[r,r]]`.
  std::string format(const RingElement& a) const;
  RingElement parse_element(std::string_view text) const;

  friend bool operator==(const Ring& a, const Ring& b) { return *a.spec_ == *b.spec_; }

 private:
  std::shared_ptr<const RingSpec> spec_;
  std::vector<std::int64_t> moduli_;
  RingElement zero_;
  RingElement one_;
};

/// Square matrices over a ring, used for class blocks of incidence functions.
using RingMatrix = std::vector<std::vector<RingElement>>;

RingMatrix matrix_mul(const Ring& ring, const RingMatrix& a, const RingMatrix& b);
RingMatrix matrix_identity(const Ring& ring, std::size_t n);
/// Inverse of a square matrix over a commutative ring via the adjugate.
/// Throws NonUnitError when the determinant is not a unit.
RingMatrix matrix_inverse(const Ring& ring, const RingMatrix& m);
RingElement matrix_det(const Ring& ring, const RingMatrix& m);

}  // namespace incalg
