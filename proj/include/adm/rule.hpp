#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "adm/formula.hpp"

namespace adm {

// Multiple-conclusion rule premises / conclusions. Both sides are kept as
// canonical sets (sorted by printed form, no syntactic duplicates).
class MRule {
 public:
  MRule() = default;
  MRule(std::vector<Formula> premises, std::vector<Formula> conclusions);

  const std::vector<Formula>& premises() const noexcept { return premises_; }
  const std::vector<Formula>& conclusions() const noexcept { return conclusions_; }

  bool is_single_conclusion() const noexcept { return conclusions_.size() == 1; }
  // The sole conclusion of a single-conclusion rule.
  const Formula& conclusion() const;

  friend bool operator==(const MRule&, const MRule&) = default;

 private:
  std::vector<Formula> premises_;
  std::vector<Formula> conclusions_;
};

std::vector<std::string> vars(const MRule& r);
std::vector<std::string> vars(std::span<const MRule> rules);

// "p | q / p, q"; empty sides print as nothing ("/ 0", "p /", "/").
std::string to_string(const MRule& r);

// Variables outside the map are left fixed.
using Substitution = std::map<std::string, Formula>;

Formula apply_substitution(const Substitution& sigma, const Formula& f);
MRule apply_substitution(const Substitution& sigma, const MRule& r);

// "first, then second": applying compose(a, b) equals applying a, then b.
Substitution compose(const Substitution& first, const Substitution& second);

std::string to_string(const Substitution& sigma);

// First name in the reserved family q0, q1, ... that does not occur in the input.
std::string fresh_variable(const MRule& r);
std::string fresh_variable(std::span<const MRule> rules);

}  // namespace adm
