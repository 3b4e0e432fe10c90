#pragma once

// Brute-force ground truth for small instances. Nothing here relies on the
// tree/potential machinery being correct: enumerations filter raw
// assignments, and the verification routines compare the structured
// algorithms against those enumerations.

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "incalg/comparability.hpp"
#include "incalg/incidence.hpp"
#include "incalg/mult.hpp"
#include "incalg/ring.hpp"

namespace incalg {

class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EnumerationLimits {
  std::uint64_t max_candidates = 10'000'000;
  bool force = false;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// base^exp, saturating at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp);

/// Every total assignment of central units to strictly comparable pairs that
/// satisfies the cocycle identity. Ordered lexicographically by value vector
/// (edge order), independent of the thread count.
std::vector<WeightSystem> enumerate_mult(std::shared_ptr<const ComparabilityGraph> graph, const Ring& ring,
                                         const EnumerationLimits& limits = {});

/// { from_potential(v) | v in G^n }, deduplicated and sorted.
std::vector<WeightSystem> enumerate_inner(std::shared_ptr<const ComparabilityGraph> graph, const Ring& ring,
                                          const EnumerationLimits& limits = {});

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
  /// JSON text in the weight-system or function file encoding; empty when passed.
  std::string counterexample;
};

struct VerificationReport {
  std::string poset;  // preorder file text
  std::string ring;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> mult_count;
  std::optional<std::uint64_t> inner_count;
  std::optional<std::uint64_t> trivial_on_tree_count;
  std::vector<CheckResult> checks;
  /// Checks not run, with the reason (e.g. an enumeration guard).
  std::vector<std::string> skipped;

  bool passed() const;
  void add(std::string name, bool ok, std::string detail = {}, std::string counterexample = {});
  /// Appends another report's checks, prefixing their names.
  void merge(const VerificationReport& other, const std::string& prefix);
};

/// Decomposition, intersection, counting, and innerness-equivalence checks
/// over the full enumeration. root defaults to class 0; a second tree rooted
/// at the last class checks independence from the tree.
VerificationReport verify_structure(std::shared_ptr<const ComparabilityGraph> graph, const Ring& ring,
                                    const EnumerationLimits& limits = {}, std::optional<std::size_t> root = {});

/// The two proposition checks cap the guard at 10^6 candidates.
/// Enumerates U(A) and collects the weight systems of those inner
/// automorphisms that are multiplicative; they must equal enumerate_inner.
VerificationReport verify_prop31(const IncidenceAlgebra& a, const EnumerationLimits& limits = {});

/// Additive endomorphisms of V = M(n x m, R) commuting with the left M(n, R)
/// and right M(m, R) actions must be exactly v -> c v, c in C(R); the
/// bijective ones exactly c in U(R) ∩ C(R).
VerificationReport verify_prop32(std::size_t n, std::size_t m, const Ring& ring, const EnumerationLimits& limits = {});

struct Prop32Counts {
  std::uint64_t endomorphisms = 0;
  std::uint64_t automorphisms = 0;
};
Prop32Counts prop32_counts(std::size_t n, std::size_t m, const Ring& ring, const EnumerationLimits& limits = {});

/// Elements sorted by a topological order of the classes (ties broken by
/// label), members of a class consecutive and in label order.
std::vector<std::size_t> linear_extension(const Preorder& p);
/// f as a |X| x |X| matrix under linear_extension.
RingMatrix embed_matrix(const IncidenceFunction& f);
/// convolve(f, g) agrees with the product of the embedded matrices.
bool matrix_oracle(const IncidenceFunction& f, const IncidenceFunction& g);

/// Sweeps every pair of single-entry functions, then `trials` random pairs,
/// checking multiplicativity, that L is fixed, and the Hadamard form.
VerificationReport automorphism_check(const WeightSystem& ws, const IncidenceAlgebra& a, std::size_t trials,
                                      std::uint64_t seed);

/// Random-sample checks of the ring axioms of I(X, R): `trials` triples for
/// associativity, delta identity and matrix_oracle; trials / 4 units for
/// inversion and unit_decompose; trials / 4 radicals d for 1 + d.
VerificationReport verify_algebra_laws(const IncidenceAlgebra& a, std::size_t trials, std::uint64_t seed);

/// Connected posets with 1..max_size points, one per isomorphism class.
std::vector<Preorder> connected_posets(std::size_t max_size);

}  // namespace incalg
