#include "adm/transforms.hpp"

#include <algorithm>

#include "adm/errors.hpp"
#include "adm/parse.hpp"

namespace adm {

MRule reduce(const MRule& r) { return MRule({big_and(r.premises())}, {big_or(r.conclusions())}); }

MRule q_reduce(const MRule& r, const std::string& q) {
  const auto used = vars(r);
  if (std::binary_search(used.begin(), used.end(), q))
    throw Error("variable '" + q + "' occurs in " + to_string(r));
  const Formula fq = Formula::var(q);
  return MRule({big_and(r.premises()) | fq}, {big_or(r.conclusions()) | fq});
}

MRule dp_rule() {
  const Formula p = Formula::var("p");
  const Formula q = Formula::var("q");
  return MRule({p | q}, {p, q});
}

std::string to_string(BasisKind k) { return k == BasisKind::Single ? "s" : "m"; }

Basis::Basis(BasisKind kind, std::vector<MRule> rules, std::string description)
    : kind_(kind), description_(std::move(description)) {
  for (auto& r : rules) {
    if (kind == BasisKind::Single && !r.is_single_conclusion())
      throw KindMismatch("s-basis contains the multiple-conclusion rule " + to_string(r));
    if (!contains(r)) rules_.push_back(std::move(r));
  }
}

bool Basis::contains(const MRule& r) const { return std::find(rules_.begin(), rules_.end(), r) != rules_.end(); }

Basis m_basis_from_s_basis(const Basis& b) {
  if (b.kind() != BasisKind::Single) throw KindMismatch("expected an s-basis");
  std::vector<MRule> rules = b.rules();
  rules.push_back(dp_rule());
  return Basis(BasisKind::Multiple, std::move(rules), b.description());
}

QReducedBasis s_basis_from_m_basis(const Basis& b) {
  if (b.kind() != BasisKind::Multiple) throw KindMismatch("expected an m-basis");
  const std::string q = fresh_variable(b.rules());
  std::vector<MRule> rules;
  for (const auto& r : b.rules()) rules.push_back(q_reduce(r, q));
  return {Basis(BasisKind::Single, std::move(rules), b.description()), q};
}

PoolSearch find_independence_witness(std::span<const MRule> rules, const MRule& r,
                                     std::span<const FiniteHeytingAlgebra> pool, std::uint64_t budget) {
  if (std::find(rules.begin(), rules.end(), r) == rules.end())
    throw Error("rule " + to_string(r) + " is not in the rule set");
  std::vector<MRule> others;
  for (const auto& s : rules)
    if (!(s == r)) others.push_back(s);
  others.push_back(dp_rule());

  PoolSearch out;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (!is_well_connected(pool[i])) continue;
    Verdict target = models_mrule(pool[i], r, budget);
    if (target.outcome == Outcome::BudgetExceeded) {
      ++out.skipped;
      continue;
    }
    if (!target.refuted()) continue;
    Verdict base = models_all(pool[i], others, budget);
    if (base.outcome == Outcome::BudgetExceeded) {
      ++out.skipped;
      continue;
    }
    if (base.valid()) {
      out.witness = PoolWitness{i, pool[i], std::move(*target.refutation)};
      return out;
    }
  }
  return out;
}

}  // namespace adm
