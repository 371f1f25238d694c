#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "adm/algebra.hpp"
#include "adm/formula.hpp"
#include "adm/rule.hpp"

namespace adm {

struct Valuation {
  std::map<std::string, Element> values;

  // Throws UnboundVariable.
  Element at(const std::string& var) const;
  friend bool operator==(const Valuation&, const Valuation&) = default;
};

std::string to_string(const Valuation& v);

// Structural fold over the operation tables. Throws UnboundVariable.
Element eval(const FiniteHeytingAlgebra& a, const Valuation& v, const Formula& f);

// A valuation under which every premise is top and no conclusion is.
struct Refutation {
  Valuation valuation;
  std::vector<Element> premise_values;
  std::vector<Element> conclusion_values;
};

enum class Outcome { Valid, Refuted, BudgetExceeded };

std::string to_string(Outcome o);

struct Verdict {
  Outcome outcome = Outcome::Valid;
  std::optional<Refutation> refutation;
  std::uint64_t valuations = 0;  // valuations examined

  bool valid() const noexcept { return outcome == Outcome::Valid; }
  bool refuted() const noexcept { return outcome == Outcome::Refuted; }
};

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

// Exhaustive search over valuations of the sorted variable list, first
// variable most significant. The returned refutation is the lexicographically
// least one. When |A|^|vars| exceeds `budget` nothing is evaluated and the
// outcome is BudgetExceeded.
Verdict models_formula(const FiniteHeytingAlgebra& a, const Formula& f, std::uint64_t budget = kDefaultBudget);
Verdict models_mrule(const FiniteHeytingAlgebra& a, const MRule& r, std::uint64_t budget = kDefaultBudget);

// Valid iff every rule is valid; the first refuted rule decides.
Verdict models_all(const FiniteHeytingAlgebra& a, std::span<const MRule> rules,
                   std::uint64_t budget = kDefaultBudget);

// Re-evaluates the refutation from scratch.
bool replays(const FiniteHeytingAlgebra& a, const MRule& r, const Refutation& ref);

struct PoolWitness {
  std::size_t index;  // position in the pool
  FiniteHeytingAlgebra algebra;
  Refutation refutation;
};

struct PoolSearch {
  std::optional<PoolWitness> witness;
  std::size_t skipped = 0;  // pool members skipped for exceeding the budget

  bool found() const noexcept { return witness.has_value(); }
};

// First pool member (in pool order) refuting the rule or formula.
PoolSearch find_refuting_algebra(const MRule& r, std::span<const FiniteHeytingAlgebra> pool,
                                 std::uint64_t budget = kDefaultBudget);
PoolSearch find_refuting_algebra(const Formula& f, std::span<const FiniteHeytingAlgebra> pool,
                                 std::uint64_t budget = kDefaultBudget);

// A formula read as the rule "/ f".
MRule as_rule(const Formula& f);

}  // namespace adm
