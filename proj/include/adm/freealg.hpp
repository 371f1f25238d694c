#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "adm/algebra.hpp"
#include "adm/formula.hpp"
#include "adm/rule.hpp"
#include "adm/semantics.hpp"

namespace adm {

struct FreeAlgebraLimits {
  // Bound on prod_{A in K} |A|^(|A|^k), the size of the ambient product.
  double product_cap = 2e6;
  // Bound on the number of generated elements (dense tables are n x n).
  std::size_t element_cap = 4096;
};

// Rank-k free algebra of the variety generated by K, realised as the
// subalgebra of prod_{A in K} A^(A^k) generated by the k projection tuples.
// Element i is described by tuple(i): for each A in K (in order) and each
// k-tuple over A (lexicographic, first coordinate most significant) the
// value of the element at that point.
class FreeAlgebra {
 public:
  const FiniteHeytingAlgebra& algebra() const noexcept { return algebra_; }
  std::size_t size() const noexcept { return algebra_.size(); }
  std::size_t rank() const noexcept { return generators_.size(); }
  const std::vector<Element>& generators() const noexcept { return generators_; }
  const std::vector<FiniteHeytingAlgebra>& sources() const noexcept { return sources_; }

  std::span<const Element> tuple(Element x) const;
  // A formula over the generator names denoting x; the earliest one generated.
  const Formula& trace(Element x) const { return traces_.at(x); }
  // Generator names x1..xk.
  std::vector<std::string> generator_names() const;

  friend FreeAlgebra free_algebra(std::span<const FiniteHeytingAlgebra>, std::size_t, FreeAlgebraLimits);

 private:
  FreeAlgebra() = default;

  FiniteHeytingAlgebra algebra_ = chain(1);
  std::vector<Element> generators_;
  std::vector<FiniteHeytingAlgebra> sources_;
  std::size_t width_ = 0;
  std::vector<Element> tuples_;  // size() * width_
  std::vector<Formula> traces_;
};

std::string generator_name(std::size_t i);  // 0-based: x1, x2, ...

// Throws CapExceeded when either limit is hit (with the required size, or a
// lower bound on it when the closure is cut short).
FreeAlgebra free_algebra(std::span<const FiniteHeytingAlgebra> k_algebras, std::size_t rank,
                         FreeAlgebraLimits limits = {});

// prod |A|^(|A|^rank) as a double.
double ambient_product_size(std::span<const FiniteHeytingAlgebra> k_algebras, std::size_t rank);

struct AdmissibilityVerdict {
  enum class Kind { NotAdmissible, AdmissibleUpToRank };
  Kind kind = Kind::AdmissibleUpToRank;
  // Rank of the refuting free algebra, or the highest rank checked.
  std::size_t rank = 0;
  // NotAdmissible: a substitution into formulas over x1..x<rank> making every
  // premise valid and every conclusion invalid in the variety.
  std::optional<Substitution> witness;
  std::optional<Refutation> refutation;
  // Set when the requested rank bound could not be reached within the caps.
  bool stopped_by_cap = false;
  std::size_t requested_rank = 0;

  bool admissible_up_to_rank() const noexcept { return kind == Kind::AdmissibleUpToRank; }
};

std::size_t default_rank_bound(const MRule& r);

// Checks validity of r in the free algebras of rank |vars(r)| .. n_max.
// A refutation is definitive; otherwise the claim is bounded by `rank`.
// Throws CapExceeded if not even the first rank can be built.
AdmissibilityVerdict check_admissible_bounded(const MRule& r, std::span<const FiniteHeytingAlgebra> k_algebras,
                                              std::size_t n_max, FreeAlgebraLimits limits = {},
                                              std::uint64_t budget = kDefaultBudget);

// First pool member validating every rule of `rules` and refuting r. Its
// existence shows rules do not derive r; absence is inconclusive.
PoolSearch refute_derivability(std::span<const MRule> rules, const MRule& r,
                               std::span<const FiniteHeytingAlgebra> pool, std::uint64_t budget = kDefaultBudget);

}  // namespace adm
