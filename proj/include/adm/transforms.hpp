#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "adm/algebra.hpp"
#include "adm/rule.hpp"
#include "adm/semantics.hpp"

namespace adm {

// big_and(premises) / big_or(conclusions), with the empty conjunction 1 and
// the empty disjunction 0. Purely syntactic.
MRule reduce(const MRule& r);

// big_and(premises) | q / big_or(conclusions) | q. Throws Error if q occurs in r.
MRule q_reduce(const MRule& r, const std::string& q);

// p | q / p, q
MRule dp_rule();

enum class BasisKind { Single, Multiple };

std::string to_string(BasisKind k);

// A finite set of rules with set semantics (order of first insertion kept,
// duplicates dropped). Single-conclusion bases hold only single-conclusion rules.
class Basis {
 public:
  Basis(BasisKind kind, std::vector<MRule> rules, std::string description = {});

  BasisKind kind() const noexcept { return kind_; }
  const std::vector<MRule>& rules() const noexcept { return rules_; }
  const std::string& description() const noexcept { return description_; }
  bool contains(const MRule& r) const;

 private:
  BasisKind kind_;
  std::vector<MRule> rules_;
  std::string description_;
};

// rules ∪ {DP}. Throws KindMismatch unless b is single-conclusion.
Basis m_basis_from_s_basis(const Basis& b);

struct QReducedBasis {
  Basis basis;
  std::string q;  // the one variable shared by every reduced rule
};

// {r^q : r in b} for a single q fresh for all of b. Throws KindMismatch
// unless b is a multiple-conclusion basis.
QReducedBasis s_basis_from_m_basis(const Basis& b);

// Searches the well-connected members of `pool` for an algebra validating
// (rules \ {r}) ∪ {DP} and refuting r. Throws Error if r is not in rules.
PoolSearch find_independence_witness(std::span<const MRule> rules, const MRule& r,
                                     std::span<const FiniteHeytingAlgebra> pool,
                                     std::uint64_t budget = kDefaultBudget);

}  // namespace adm
