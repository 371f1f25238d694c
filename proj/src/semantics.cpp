#include "adm/semantics.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "adm/errors.hpp"

namespace adm {

Element Valuation::at(const std::string& var) const {
  auto it = values.find(var);
  if (it == values.end()) throw UnboundVariable(var);
  return it->second;
}

std::string to_string(const Valuation& v) {
  std::string out = "{";
  bool first = true;
  for (const auto& [name, value] : v.values) {
    if (!first) out += ", ";
    first = false;
    out += name + " = " + std::to_string(value);
  }
  return out + "}";
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Valid: return "valid";
    case Outcome::Refuted: return "refuted";
    case Outcome::BudgetExceeded: return "budget-exceeded";
  }
  return "?";
}

Element eval(const FiniteHeytingAlgebra& a, const Valuation& v, const Formula& f) {
  switch (f.op()) {
    case Op::Var: {
      const Element x = v.at(f.name());
      if (x >= a.size()) throw Error("valuation of '" + f.name() + "' is outside the carrier");
      return x;
    }
    case Op::Bot: return a.bot();
    case Op::Top: return a.top();
    case Op::Not: return a.neg(eval(a, v, f.lhs()));
    case Op::And: return a.meet(eval(a, v, f.lhs()), eval(a, v, f.rhs()));
    case Op::Or: return a.join(eval(a, v, f.lhs()), eval(a, v, f.rhs()));
    case Op::Imp: return a.imp(eval(a, v, f.lhs()), eval(a, v, f.rhs()));
  }
  return a.bot();
}

MRule as_rule(const Formula& f) { return MRule({}, {f}); }

namespace {

// Straight-line program for a rule, shared subterms evaluated once.
class CompiledRule {
 public:
  explicit CompiledRule(const MRule& r) : variables_(vars(r)) {
    for (const auto& f : r.premises()) premises_.push_back(emit(f));
    for (const auto& f : r.conclusions()) conclusions_.push_back(emit(f));
    regs_.resize(code_.size());
  }

  const std::vector<std::string>& variables() const { return variables_; }

  // Returns true when the valuation refutes the rule.
  bool refutes(const FiniteHeytingAlgebra& a, const std::vector<Element>& val) {
    for (std::size_t i = 0; i < code_.size(); ++i) {
      const Instr& in = code_[i];
      switch (in.op) {
        case Op::Var: regs_[i] = val[in.a]; break;
        case Op::Bot: regs_[i] = a.bot(); break;
        case Op::Top: regs_[i] = a.top(); break;
        case Op::Not: regs_[i] = a.neg(regs_[in.a]); break;
        case Op::And: regs_[i] = a.meet(regs_[in.a], regs_[in.b]); break;
        case Op::Or: regs_[i] = a.join(regs_[in.a], regs_[in.b]); break;
        case Op::Imp: regs_[i] = a.imp(regs_[in.a], regs_[in.b]); break;
      }
    }
    for (auto p : premises_)
      if (regs_[p] != a.top()) return false;
    for (auto c : conclusions_)
      if (regs_[c] == a.top()) return false;
    return true;
  }

  Refutation witness(const std::vector<Element>& val) const {
    Refutation ref;
    for (std::size_t i = 0; i < variables_.size(); ++i) ref.valuation.values.emplace(variables_[i], val[i]);
    for (auto p : premises_) ref.premise_values.push_back(regs_[p]);
    for (auto c : conclusions_) ref.conclusion_values.push_back(regs_[c]);
    return ref;
  }

 private:
  struct Instr {
    Op op;
    std::uint32_t a = 0;
    std::uint32_t b = 0;
  };

  std::uint32_t emit(const Formula& f) {
    if (auto it = memo_.find(f); it != memo_.end()) return it->second;
    Instr in{f.op()};
    switch (f.op()) {
      case Op::Var:
        in.a = static_cast<std::uint32_t>(
            std::lower_bound(variables_.begin(), variables_.end(), f.name()) - variables_.begin());
        break;
      case Op::Bot:
      case Op::Top: break;
      case Op::Not: in.a = emit(f.lhs()); break;
      default:
        in.a = emit(f.lhs());
        in.b = emit(f.rhs());
    }
    const auto idx = static_cast<std::uint32_t>(code_.size());
    code_.push_back(in);
    memo_.emplace(f, idx);
    return idx;
  }

  std::vector<std::string> variables_;
  std::vector<Instr> code_;
  std::vector<std::uint32_t> premises_;
  std::vector<std::uint32_t> conclusions_;
  std::vector<Element> regs_;
  std::unordered_map<Formula, std::uint32_t, FormulaHash> memo_;
};

}  // namespace

Verdict models_mrule(const FiniteHeytingAlgebra& a, const MRule& r, std::uint64_t budget) {
  CompiledRule prog(r);
  const std::size_t k = prog.variables().size();
  const std::size_t n = a.size();
  Verdict out;
  if (std::pow(static_cast<double>(n), static_cast<double>(k)) > static_cast<double>(budget)) {
    out.outcome = Outcome::BudgetExceeded;
    return out;
  }
  std::vector<Element> val(k, 0);
  while (true) {
    ++out.valuations;
    if (prog.refutes(a, val)) {
      out.outcome = Outcome::Refuted;
      out.refutation = prog.witness(val);
      return out;
    }
    std::size_t i = k;
    while (i > 0 && ++val[i - 1] == n) val[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

Verdict models_formula(const FiniteHeytingAlgebra& a, const Formula& f, std::uint64_t budget) {
  return models_mrule(a, as_rule(f), budget);
}

Verdict models_all(const FiniteHeytingAlgebra& a, std::span<const MRule> rules, std::uint64_t budget) {
  Verdict out;
  for (const auto& r : rules) {
    Verdict v = models_mrule(a, r, budget);
    out.valuations += v.valuations;
    if (v.outcome == Outcome::Refuted) {
      out.outcome = Outcome::Refuted;
      out.refutation = std::move(v.refutation);
      return out;
    }
    if (v.outcome == Outcome::BudgetExceeded) out.outcome = Outcome::BudgetExceeded;
  }
  return out;
}

bool replays(const FiniteHeytingAlgebra& a, const MRule& r, const Refutation& ref) {
  std::vector<Element> prem;
  std::vector<Element> concl;
  for (const auto& f : r.premises()) {
    prem.push_back(eval(a, ref.valuation, f));
    if (prem.back() != a.top()) return false;
  }
  for (const auto& f : r.conclusions()) {
    concl.push_back(eval(a, ref.valuation, f));
    if (concl.back() == a.top()) return false;
  }
  return prem == ref.premise_values && concl == ref.conclusion_values;
}

PoolSearch find_refuting_algebra(const MRule& r, std::span<const FiniteHeytingAlgebra> pool, std::uint64_t budget) {
  PoolSearch out;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    Verdict v = models_mrule(pool[i], r, budget);
    if (v.outcome == Outcome::BudgetExceeded) {
      ++out.skipped;
    } else if (v.refuted()) {
      out.witness = PoolWitness{i, pool[i], std::move(*v.refutation)};
      return out;
    }
  }
  return out;
}

PoolSearch find_refuting_algebra(const Formula& f, std::span<const FiniteHeytingAlgebra> pool, std::uint64_t budget) {
  return find_refuting_algebra(as_rule(f), pool, budget);
}

}  // namespace adm
