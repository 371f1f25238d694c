#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace adm {

using Element = std::uint16_t;

// Raw operation tables of an algebra on the carrier 0..size-1, row-major
// (entry a*size+b holds op(a, b)). No laws are assumed.
struct HeytingTables {
  std::size_t size = 0;
  Element bot = 0;
  Element top = 0;
  std::vector<Element> meet;
  std::vector<Element> join;
  std::vector<Element> imp;
};

// A finite Heyting algebra. Instances are obtained from validate() or from
// the trusted constructions in this header, so the lattice, distributivity
// and residuation laws always hold.
class FiniteHeytingAlgebra {
 public:
  std::size_t size() const noexcept { return t_.size; }
  Element bot() const noexcept { return t_.bot; }
  Element top() const noexcept { return t_.top; }

  Element meet(Element a, Element b) const noexcept { return t_.meet[a * t_.size + b]; }
  Element join(Element a, Element b) const noexcept { return t_.join[a * t_.size + b]; }
  Element imp(Element a, Element b) const noexcept { return t_.imp[a * t_.size + b]; }
  Element neg(Element a) const noexcept { return imp(a, t_.bot); }
  bool leq(Element a, Element b) const noexcept { return meet(a, b) == a; }

  bool is_degenerate() const noexcept { return t_.size == 1; }

  const HeytingTables& tables() const noexcept { return t_; }

  // Skips validation. Callers must guarantee the Heyting laws.
  static FiniteHeytingAlgebra assume_valid(HeytingTables t);

  friend bool operator==(const FiniteHeytingAlgebra& a, const FiniteHeytingAlgebra& b);

 private:
  explicit FiniteHeytingAlgebra(HeytingTables t) : t_(std::move(t)) {}
  HeytingTables t_;
};

enum class Law { Shape, NotALattice, NonDistributive, Residuation };

std::string to_string(Law law);

struct LawViolation {
  Law law;
  std::string detail;
  std::vector<Element> witness;
};

struct Validation {
  std::optional<FiniteHeytingAlgebra> algebra;
  std::vector<LawViolation> violations;

  bool ok() const noexcept { return algebra.has_value(); }
  bool violates(Law law) const;
};

// Checks the bounded-lattice laws, distributivity and residuation
// (meet(a,c) <= b iff c <= imp(a,b)). One witness is reported per law family.
Validation validate(HeytingTables tables);

// Strict partial order on 0..size-1 (size <= 64).
class Poset {
 public:
  Poset() = default;
  // Takes the transitive closure of `less`; throws Error if it has a cycle.
  static Poset from_relations(std::size_t size, std::span<const std::pair<std::size_t, std::size_t>> less);

  std::size_t size() const noexcept { return below_.size(); }
  bool less(std::size_t a, std::size_t b) const noexcept { return (below_[b] >> a) & 1U; }
  // Bitmask of the elements strictly below `a`.
  std::uint64_t below(std::size_t a) const noexcept { return below_[a]; }
  std::vector<std::pair<std::size_t, std::size_t>> strict_pairs() const;

  // Adds a new maximal element whose strict down-set is `downset`.
  Poset with_maximal(std::uint64_t downset) const;

  // All down-closed subsets, sorted by (popcount, mask).
  std::vector<std::uint64_t> downsets() const;

 private:
  std::vector<std::uint64_t> below_;
};

inline constexpr std::size_t kDefaultProductCap = 4096;

// Algebra of down-sets ordered by inclusion; empty set is 0, full set is size-1.
// Throws CapExceeded when the number of down-sets exceeds `cap`.
FiniteHeytingAlgebra from_poset(const Poset& p, std::size_t cap = kDefaultProductCap);

// Pair (x, y) is encoded as x + |a| * y.
FiniteHeytingAlgebra direct_product(const FiniteHeytingAlgebra& a, const FiniteHeytingAlgebra& b,
                                    std::size_t cap = kDefaultProductCap);
inline Element product_element(const FiniteHeytingAlgebra& a, Element x, Element y) {
  return static_cast<Element>(x + a.size() * y);
}

struct WellConnectedness {
  bool well_connected = true;
  // Two non-top elements whose join is top.
  std::optional<std::pair<Element, Element>> witness;

  explicit operator bool() const noexcept { return well_connected; }
};

WellConnectedness is_well_connected(const FiniteHeytingAlgebra& a);

// relabel[old] = new. The image is again a Heyting algebra.
FiniteHeytingAlgebra relabel(const FiniteHeytingAlgebra& a, std::span<const Element> relabel);

// Canonical key: lexicographically least order matrix, read column by column,
// over all relabelings that are linear extensions of the order. Two algebras
// are isomorphic iff their keys are equal. Requires size <= 64.
struct CanonicalForm {
  std::vector<std::uint64_t> key;
  std::vector<Element> relabel;  // relabel[old] = canonical label
};

CanonicalForm canonical_form(const FiniteHeytingAlgebra& a);
FiniteHeytingAlgebra canonical_presentation(const FiniteHeytingAlgebra& a);

bool is_isomorphic(const FiniteHeytingAlgebra& a, const FiniteHeytingAlgebra& b);

inline constexpr std::size_t kDefaultEnumerationCap = 12;

struct EnumerateOptions {
  bool include_degenerate = false;
  std::size_t cap = kDefaultEnumerationCap;
};

// One canonical representative per isomorphism class of size 1..n_max,
// ordered by size and then by canonical key. Throws CapExceeded if n_max > cap.
std::vector<FiniteHeytingAlgebra> enumerate(std::size_t n_max, EnumerateOptions options = {});

// Named small algebras used throughout the tests and the CLI.
FiniteHeytingAlgebra boolean2();
FiniteHeytingAlgebra chain(std::size_t n);

}  // namespace adm
