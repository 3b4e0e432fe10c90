#include "incalg/ring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <span>

namespace incalg {

namespace {

constexpr std::int64_t kMaxModulus = std::int64_t{1} << 31;

std::int64_t mod(std::int64_t a, std::int64_t n) {
  a %= n;
  return a < 0 ? a + n : a;
}

// Inverse of a modulo n via extended Euclid; 0 when gcd(a, n) != 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t n) {
  std::int64_t r0 = n, r1 = mod(a, n), s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
    std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
  }
  if (r0 != 1) return 0;
  return mod(s0, n);
}

using Digits = std::span<std::int64_t>;
using CDigits = std::span<const std::int64_t>;

std::int64_t residue_det(std::vector<std::int64_t> m, std::size_t k, std::int64_t n) {
  if (k == 1) return mod(m[0], n);
  std::int64_t det = 0;
  for (std::size_t col = 0; col < k; ++col) {
    if (m[col] == 0) continue;
    std::vector<std::int64_t> minor;
    minor.reserve((k - 1) * (k - 1));
    for (std::size_t r = 1; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c)
        if (c != col) minor.push_back(m[r * k + c]);
    std::int64_t term = mod(m[col] * residue_det(std::move(minor), k - 1, n), n);
    det = mod(col % 2 == 0 ? det + term : det - term, n);
  }
  return det;
}

void mul_into(const RingSpec& spec, CDigits a, CDigits b, Digits out) {
  switch (spec.kind()) {
    case RingSpec::Kind::Modular:
      out[0] = (a[0] * b[0]) % spec.modulus();
      return;
    case RingSpec::Kind::Product: {
      std::size_t w = spec.left().width();
      mul_into(spec.left(), a.first(w), b.first(w), out.first(w));
      mul_into(spec.right(), a.subspan(w), b.subspan(w), out.subspan(w));
      return;
    }
    case RingSpec::Kind::Matrix: {
      auto k = static_cast<std::size_t>(spec.size());
      std::int64_t n = spec.modulus();
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
          std::int64_t s = 0;
          for (std::size_t l = 0; l < k; ++l) s = (s + a[i * k + l] * b[l * k + j]) % n;
          out[i * k + j] = s;
        }
      return;
    }
  }
}

// Returns false when a is not a unit; out is then unspecified.
bool inverse_into(const RingSpec& spec, CDigits a, Digits out) {
  switch (spec.kind()) {
    case RingSpec::Kind::Modular:
      out[0] = mod_inverse(a[0], spec.modulus());
      return out[0] != 0 || spec.modulus() == 1;
    case RingSpec::Kind::Product: {
      std::size_t w = spec.left().width();
      return inverse_into(spec.left(), a.first(w), out.first(w)) &&
             inverse_into(spec.right(), a.subspan(w), out.subspan(w));
    }
    case RingSpec::Kind::Matrix: {
      auto k = static_cast<std::size_t>(spec.size());
      std::int64_t n = spec.modulus();
      std::vector<std::int64_t> m(a.begin(), a.end());
      std::int64_t det_inv = mod_inverse(residue_det(m, k, n), n);
      if (det_inv == 0) return false;
      if (k == 1) {
        out[0] = det_inv;
        return true;
      }
      // adj(m)[i][j] = (-1)^(i+j) * det(minor with row j and column i removed)
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
          std::vector<std::int64_t> minor;
          for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < k; ++c)
              if (r != j && c != i) minor.push_back(m[r * k + c]);
          std::int64_t cof = residue_det(std::move(minor), k - 1, n);
          if ((i + j) % 2 == 1) cof = mod(-cof, n);
          out[i * k + j] = cof * det_inv % n;
        }
      return true;
    }
  }
  return false;
}

bool is_central_digits(const RingSpec& spec, CDigits a) {
  switch (spec.kind()) {
    case RingSpec::Kind::Modular:
      return true;
    case RingSpec::Kind::Product: {
      std::size_t w = spec.left().width();
      return is_central_digits(spec.left(), a.first(w)) &&
             is_central_digits(spec.right(), a.subspan(w));
    }
    case RingSpec::Kind::Matrix: {
      auto k = static_cast<std::size_t>(spec.size());
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
          if ((i == j && a[i * k + j] != a[0]) || (i != j && a[i * k + j] != 0)) return false;
      return true;
    }
  }
  return false;
}

// Central elements (units only, when units_only) as digit vectors.
std::vector<std::vector<std::int64_t>> central_digits(const RingSpec& spec, bool units_only) {
  std::vector<std::vector<std::int64_t>> out;
  switch (spec.kind()) {
    case RingSpec::Kind::Modular:
    case RingSpec::Kind::Matrix: {
      std::int64_t n = spec.modulus();
      auto k = spec.kind() == RingSpec::Kind::Matrix ? static_cast<std::size_t>(spec.size()) : 1;
      for (std::int64_t r = 0; r < n; ++r) {
        if (units_only && std::gcd(r, n) != 1) continue;
        std::vector<std::int64_t> d(k * k, 0);
        for (std::size_t i = 0; i < k; ++i) d[i * k + i] = r;
        out.push_back(std::move(d));
      }
      return out;
    }
    case RingSpec::Kind::Product: {
      auto ls = central_digits(spec.left(), units_only);
      auto rs = central_digits(spec.right(), units_only);
      for (const auto& l : ls)
        for (const auto& r : rs) {
          auto d = l;
          d.insert(d.end(), r.begin(), r.end());
          out.push_back(std::move(d));
        }
      return out;
    }
  }
  return out;
}

std::string format_digits(const RingSpec& spec, CDigits a) {
  switch (spec.kind()) {
    case RingSpec::Kind::Modular:
      return std::to_string(a[0]);
    case RingSpec::Kind::Product: {
      std::size_t w = spec.left().width();
      return "(" + format_digits(spec.left(), a.first(w)) + "," +
             format_digits(spec.right(), a.subspan(w)) + ")";
    }
    case RingSpec::Kind::Matrix: {
      auto k = static_cast<std::size_t>(spec.size());
      std::string s = "[";
      for (std::size_t i = 0; i < k; ++i) {
        s += i ? ",[" : "[";
        for (std::size_t j = 0; j < k; ++j) {
          if (j) s += ",";
          s += std::to_string(a[i * k + j]);
        }
        s += "]";
      }
      return s + "]";
    }
  }
  return {};
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  bool peek_word(std::string_view w) {
    skip_ws();
    return text_.substr(pos_, w.size()) == w;
  }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  std::int64_t number() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a decimal number");
    auto token = text_.substr(start, pos_ - start);
    if (token.size() > 12) fail("number too large '" + std::string(token) + "'");
    return std::stoll(std::string(token));
  }
  [[noreturn]] void fail(const std::string& what) const {
    std::string rest(text_.substr(std::min(pos_, text_.size())));
    if (rest.size() > 16) rest = rest.substr(0, 16) + "...";
    throw ParseError(what + " at offset " + std::to_string(pos_) + " near '" + rest + "' in '" +
                     std::string(text_) + "'");
  }
  std::size_t pos() const { return pos_; }
  void advance(std::size_t n) { pos_ += n; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::int64_t checked_modulus(Cursor& cur) {
  std::size_t at = cur.pos();
  std::int64_t n = cur.number();
  if (n < 2) throw ParseError("modulus '" + std::to_string(n) + "' at offset " + std::to_string(at) + " is below 2");
  if (n >= kMaxModulus) throw ParseError("modulus '" + std::to_string(n) + "' is too large");
  return n;
}

RingSpec parse_atom(Cursor& cur) {
  if (cur.peek('(')) {
    cur.expect('(');
    RingSpec inner = parse_atom(cur);
    while (cur.peek('x')) {
      cur.advance(1);
      inner = RingSpec::product(std::move(inner), parse_atom(cur));
    }
    cur.expect(')');
    return inner;
  }
  if (cur.peek_word("Z/")) {
    cur.advance(2);
    return RingSpec::modular(checked_modulus(cur));
  }
  if (cur.peek_word("M(")) {
    cur.advance(2);
    std::size_t at = cur.pos();
    std::int64_t k = cur.number();
    if (k < 1) throw ParseError("matrix size '" + std::to_string(k) + "' at offset " + std::to_string(at) + " is below 1");
    if (k > 8) throw ParseError("matrix size '" + std::to_string(k) + "' is too large");
    cur.expect(',');
    if (!cur.peek_word("Z/")) cur.fail("expected 'Z/<n>' inside M(...)");
    cur.advance(2);
    std::int64_t n = checked_modulus(cur);
    cur.expect(')');
    return RingSpec::matrix(k, n);
  }
  cur.fail("expected 'Z/<n>', 'M(<k>,Z/<n>)' or '('");
}

RingElement parse_element_digits(const RingSpec& spec, Cursor& cur) {
  RingElement out;
  switch (spec.kind()) {
    case RingSpec::Kind::Modular: {
      std::int64_t r = cur.number();
      if (r >= spec.modulus()) cur.fail("residue " + std::to_string(r) + " out of range for " + spec.to_string());
      out.digits.push_back(r);
      return out;
    }
    case RingSpec::Kind::Product: {
      cur.expect('(');
      auto l = parse_element_digits(spec.left(), cur);
      cur.expect(',');
      auto r = parse_element_digits(spec.right(), cur);
      cur.expect(')');
      out.digits = std::move(l.digits);
      out.digits.insert(out.digits.end(), r.digits.begin(), r.digits.end());
      return out;
    }
    case RingSpec::Kind::Matrix: {
      cur.expect('[');
      for (std::int64_t i = 0; i < spec.size(); ++i) {
        if (i) cur.expect(',');
        cur.expect('[');
        for (std::int64_t j = 0; j < spec.size(); ++j) {
          if (j) cur.expect(',');
          std::int64_t r = cur.number();
          if (r >= spec.modulus()) cur.fail("residue " + std::to_string(r) + " out of range");
          out.digits.push_back(r);
        }
        cur.expect(']');
      }
      cur.expect(']');
      return out;
    }
  }
  return out;
}

}  // namespace

RingSpec RingSpec::modular(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("modulus must be at least 2");
  RingSpec s;
  s.kind_ = Kind::Modular;
  s.modulus_ = n;
  return s;
}

RingSpec RingSpec::product(RingSpec left, RingSpec right) {
  RingSpec s;
  s.kind_ = Kind::Product;
  s.factors_ = {std::make_shared<const RingSpec>(std::move(left)),
                std::make_shared<const RingSpec>(std::move(right))};
  return s;
}

RingSpec RingSpec::matrix(std::int64_t k, std::int64_t n) {
  if (k < 1) throw std::invalid_argument("matrix size must be at least 1");
  if (n < 2) throw std::invalid_argument("modulus must be at least 2");
  RingSpec s;
  s.kind_ = Kind::Matrix;
  s.size_ = k;
  s.modulus_ = n;
  return s;
}

std::size_t RingSpec::width() const {
  switch (kind_) {
    case Kind::Modular: return 1;
    case Kind::Product: return left().width() + right().width();
    case Kind::Matrix: return static_cast<std::size_t>(size_ * size_);
  }
  return 0;
}

std::vector<std::int64_t> RingSpec::digit_moduli() const {
  if (kind_ == Kind::Product) {
    auto l = left().digit_moduli();
    auto r = right().digit_moduli();
    l.insert(l.end(), r.begin(), r.end());
    return l;
  }
  return std::vector<std::int64_t>(width(), modulus_);
}

bool RingSpec::is_commutative() const {
  switch (kind_) {
    case Kind::Modular: return true;
    case Kind::Product: return left().is_commutative() && right().is_commutative();
    case Kind::Matrix: return size_ == 1;
  }
  return false;
}

std::string RingSpec::to_string() const {
  switch (kind_) {
    case Kind::Modular: return "Z/" + std::to_string(modulus_);
    case Kind::Matrix: return "M(" + std::to_string(size_) + ",Z/" + std::to_string(modulus_) + ")";
    case Kind::Product: {
      std::string r = right().to_string();
      if (right().kind() == Kind::Product) r = "(" + r + ")";
      return left().to_string() + " x " + r;
    }
  }
  return {};
}

bool operator==(const RingSpec& a, const RingSpec& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case RingSpec::Kind::Modular: return a.modulus_ == b.modulus_;
    case RingSpec::Kind::Matrix: return a.modulus_ == b.modulus_ && a.size_ == b.size_;
    case RingSpec::Kind::Product: return a.left() == b.left() && a.right() == b.right();
  }
  return false;
}

RingSpec parse_ring_spec(std::string_view text) {
  Cursor cur(text);
  RingSpec spec = parse_atom(cur);
  while (!cur.at_end()) {
    if (!cur.peek('x')) cur.fail("expected ' x ' or end of input");
    cur.advance(1);
    spec = RingSpec::product(std::move(spec), parse_atom(cur));
  }
  return spec;
}

Ring::Ring(RingSpec spec)
    : spec_(std::make_shared<const RingSpec>(std::move(spec))),
      moduli_(spec_->digit_moduli()),
      zero_{std::vector<std::int64_t>(moduli_.size(), 0)},
      one_{central_digits(*spec_, true).front()} {}  // scalar 1 is the least unit encoding

std::uint64_t Ring::order() const {
  std::uint64_t n = 1;
  for (auto m : moduli_) n *= static_cast<std::uint64_t>(m);
  return n;
}

bool Ring::contains(const RingElement& x) const {
  if (x.digits.size() != moduli_.size()) return false;
  for (std::size_t i = 0; i < moduli_.size(); ++i)
    if (x.digits[i] < 0 || x.digits[i] >= moduli_[i]) return false;
  return true;
}

void Ring::require(const RingElement& x) const {
  if (!contains(x)) throw IncompatibleError("element is not a canonical element of " + spec_->to_string());
}

RingElement Ring::add(const RingElement& a, const RingElement& b) const {
  require(a);
  require(b);
  RingElement r = a;
  for (std::size_t i = 0; i < width(); ++i) r.digits[i] = (r.digits[i] + b.digits[i]) % moduli_[i];
  return r;
}

RingElement Ring::neg(const RingElement& a) const {
  require(a);
  RingElement r = a;
  for (std::size_t i = 0; i < width(); ++i) r.digits[i] = (moduli_[i] - r.digits[i]) % moduli_[i];
  return r;
}

RingElement Ring::sub(const RingElement& a, const RingElement& b) const { return add(a, neg(b)); }

RingElement Ring::mul(const RingElement& a, const RingElement& b) const {
  require(a);
  require(b);
  RingElement r = zero();
  mul_into(*spec_, a.digits, b.digits, r.digits);
  return r;
}

RingElement Ring::int_scale(const RingElement& a, std::int64_t t) const {
  require(a);
  RingElement r = a;
  for (std::size_t i = 0; i < width(); ++i) r.digits[i] = mod(mod(t, moduli_[i]) * r.digits[i], moduli_[i]);
  return r;
}

bool Ring::is_zero(const RingElement& a) const { return a == zero(); }
bool Ring::is_one(const RingElement& a) const { return a == one(); }

bool Ring::is_unit(const RingElement& a) const {
  require(a);
  RingElement tmp = zero();
  return inverse_into(*spec_, a.digits, tmp.digits);
}

RingElement Ring::inverse(const RingElement& a) const {
  require(a);
  RingElement r = zero();
  if (!inverse_into(*spec_, a.digits, r.digits))
    throw NonUnitError(format(a) + " is not a unit of " + spec_->to_string());
  return r;
}

bool Ring::is_central(const RingElement& a) const {
  require(a);
  return is_central_digits(*spec_, a.digits);
}

std::vector<RingElement> Ring::elements() const {
  std::vector<RingElement> out;
  out.reserve(order());
  RingElement cur = zero();
  while (true) {
    out.push_back(cur);
    std::size_t i = width();
    while (i > 0) {
      --i;
      if (++cur.digits[i] < moduli_[i]) break;
      cur.digits[i] = 0;
      if (i == 0) return out;
    }
  }
}

std::vector<RingElement> Ring::center() const {
  std::vector<RingElement> out;
  for (auto& d : central_digits(*spec_, false)) out.push_back(RingElement{std::move(d)});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CentralUnit> Ring::central_units() const {
  std::vector<CentralUnit> out;
  for (auto& d : central_digits(*spec_, true)) out.push_back(CentralUnit(RingElement{std::move(d)}));
  std::sort(out.begin(), out.end());
  return out;
}

CentralUnit Ring::as_central_unit(const RingElement& a) const {
  if (!is_unit(a) || !is_central(a))
    throw NonUnitError(format(a) + " is not an invertible central element of " + spec_->to_string());
  return CentralUnit(a);
}

CentralUnit Ring::mul(const CentralUnit& a, const CentralUnit& b) const {
  return CentralUnit(mul(a.element(), b.element()));
}

CentralUnit Ring::inverse(const CentralUnit& a) const { return CentralUnit(inverse(a.element())); }

std::string Ring::format(const RingElement& a) const {
  require(a);
  return format_digits(*spec_, a.digits);
}

RingElement Ring::parse_element(std::string_view text) const {
  Cursor cur(text);
  RingElement e = parse_element_digits(*spec_, cur);
  if (!cur.at_end()) cur.fail("trailing characters in element");
  return e;
}

RingMatrix matrix_identity(const Ring& ring, std::size_t n) {
  RingMatrix m(n, std::vector<RingElement>(n, ring.zero()));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = ring.one();
  return m;
}

RingMatrix matrix_mul(const Ring& ring, const RingMatrix& a, const RingMatrix& b) {
  std::size_t rows = a.size(), inner = b.size(), cols = b.empty() ? 0 : b[0].size();
  RingMatrix m(rows, std::vector<RingElement>(cols, ring.zero()));
  for (std::size_t i = 0; i < rows; ++i) {
    if (a[i].size() != inner) throw IncompatibleError("matrix dimensions do not match");
    for (std::size_t j = 0; j < cols; ++j)
      for (std::size_t l = 0; l < inner; ++l) m[i][j] = ring.add(m[i][j], ring.mul(a[i][l], b[l][j]));
  }
  return m;
}

namespace {

RingMatrix minor_of(const RingMatrix& m, std::size_t row, std::size_t col) {
  RingMatrix out;
  for (std::size_t r = 0; r < m.size(); ++r) {
    if (r == row) continue;
    std::vector<RingElement> line;
    for (std::size_t c = 0; c < m.size(); ++c)
      if (c != col) line.push_back(m[r][c]);
    out.push_back(std::move(line));
  }
  return out;
}

}  // namespace

RingElement matrix_det(const Ring& ring, const RingMatrix& m) {
  if (!ring.is_commutative()) throw IncompatibleError("determinant needs a commutative ring");
  if (m.empty()) return ring.one();
  if (m.size() == 1) return m[0][0];
  RingElement det = ring.zero();
  for (std::size_t c = 0; c < m.size(); ++c) {
    if (ring.is_zero(m[0][c])) continue;
    RingElement term = ring.mul(m[0][c], matrix_det(ring, minor_of(m, 0, c)));
    det = c % 2 == 0 ? ring.add(det, term) : ring.sub(det, term);
  }
  return det;
}

RingMatrix matrix_inverse(const Ring& ring, const RingMatrix& m) {
  std::size_t n = m.size();
  if (n == 1) return {{ring.inverse(m[0][0])}};
  if (!ring.is_commutative())
    throw IncompatibleError("block inversion over the noncommutative ring " + ring.spec().to_string() +
                            " is limited to 1x1 blocks");
  RingElement det_inv = ring.inverse(matrix_det(ring, m));
  RingMatrix inv(n, std::vector<RingElement>(n, ring.zero()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      RingElement cof = matrix_det(ring, minor_of(m, j, i));
      if ((i + j) % 2 == 1) cof = ring.neg(cof);
      inv[i][j] = ring.mul(cof, det_inv);
    }
  return inv;
}

}  // namespace incalg
