#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace incalg {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A finite reflexive-transitive relation on labelled points.
class Preorder {
 public:
  /// Reflexive-transitive closure of the generating pairs (x <= y).
  static Preorder close(std::vector<std::string> elements,
                        const std::vector<std::pair<std::string, std::string>>& generators);
  /// Takes an n*n row-major relation; throws InputError unless it is a preorder.
  static Preorder from_matrix(std::vector<std::string> elements, std::vector<std::uint8_t> leq);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  /// Throws InputError for unknown labels.
  std::size_t index(const std::string& label) const;
  bool contains(const std::string& label) const { return index_.count(label) != 0; }

  bool leq(std::size_t x, std::size_t y) const { return leq_[x * size() + y] != 0; }
  bool less(std::size_t x, std::size_t y) const { return leq(x, y) && !leq(y, x); }
  bool equivalent(std::size_t x, std::size_t y) const { return leq(x, y) && leq(y, x); }
  bool is_partial_order() const;
  const std::vector<std::uint8_t>& relation() const { return leq_; }

  /// {z | x <= z <= y}, in element order.
  std::vector<std::size_t> interval(std::size_t x, std::size_t y) const;
  std::vector<std::string> interval(const std::string& x, const std::string& y) const;

  friend bool operator==(const Preorder&, const Preorder&) = default;

 private:
  Preorder(std::vector<std::string> labels, std::vector<std::uint8_t> leq);

  std::vector<std::string> labels_;
  std::vector<std::uint8_t> leq_;
  std::map<std::string, std::size_t> index_;
};

/// X modulo x ~ y (x <= y and y <= x), with the induced partial order.
///
/// Classes are numbered in lexicographic order of their representatives, and
/// each class lists its members lexicographically; the representative is the
/// first member.
class QuotientPoset {
 public:
  explicit QuotientPoset(const Preorder& p);

  std::size_t size() const { return classes_.size(); }
  const std::vector<std::size_t>& members(std::size_t c) const { return classes_.at(c); }
  const std::string& representative(std::size_t c) const { return reps_.at(c); }
  const std::vector<std::string>& representatives() const { return reps_; }
  std::size_t class_of(std::size_t element) const { return class_of_.at(element); }
  /// Class whose representative is the given label.
  std::size_t class_index(const std::string& representative) const;
  /// Class containing the element with the given label.
  std::size_t class_of_label(const std::string& label) const;
  /// Position of an element inside its class numbering.
  std::size_t position_in_class(std::size_t element) const { return position_.at(element); }

  bool leq(std::size_t a, std::size_t b) const { return leq_[a * size() + b] != 0; }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }

  /// Length of the longest chain a = z0 < ... < zk = b; throws std::domain_error if a is not <= b.
  std::size_t interval_length(std::size_t a, std::size_t b) const;
  /// Longest strict chain length in the whole poset.
  std::size_t height() const;
  /// Components of the comparability graph, each sorted, ordered by least member.
  std::vector<std::vector<std::size_t>> connected_components() const;
  bool is_connected() const { return connected_components().size() <= 1; }

  /// The quotient as a poset in its own right, labelled by representatives.
  Preorder as_preorder() const;
  const Preorder& source() const { return *source_; }

 private:
  std::shared_ptr<const Preorder> source_;
  std::vector<std::vector<std::size_t>> classes_;
  std::vector<std::string> reps_;
  std::vector<std::size_t> class_of_;
  std::vector<std::size_t> position_;
  std::vector<std::uint8_t> leq_;
};

/// Reads the `elements` / `rel` / `#` text format.
Preorder read_preorder(std::istream& in, const std::string& source_name = "<input>");
Preorder read_preorder_file(const std::string& path);
Preorder parse_preorder(const std::string& text);
std::string write_preorder(const Preorder& p);

/// Every preorder on at most max_size points, one per isomorphism class,
/// labelled a, b, c, ... Posets only when posets_only is set.
std::vector<Preorder> generate_preorders(std::size_t max_size, bool posets_only);

/// Named instances used throughout the tests and examples.
namespace shapes {
Preorder chain(std::size_t n);
Preorder antichain(std::size_t n);
/// a, b < c, d
Preorder crown();
/// a < b < d, a < c < d
Preorder diamond();
}  // namespace shapes

}  // namespace incalg
