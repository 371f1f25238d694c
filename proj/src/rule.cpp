#include "adm/rule.hpp"

#include <algorithm>

#include "adm/errors.hpp"

namespace adm {

MRule::MRule(std::vector<Formula> premises, std::vector<Formula> conclusions)
    : premises_(canonical_set(std::move(premises))),
      conclusions_(canonical_set(std::move(conclusions))) {}

const Formula& MRule::conclusion() const {
  if (!is_single_conclusion()) throw Error("rule " + to_string(*this) + " is not single-conclusion");
  return conclusions_.front();
}

std::vector<std::string> vars(const MRule& r) { return vars(std::span<const MRule>(&r, 1)); }

std::vector<std::string> vars(std::span<const MRule> rules) {
  std::vector<std::string> out;
  for (const auto& r : rules) {
    for (const auto& f : r.premises()) collect_vars(f, out);
    for (const auto& f : r.conclusions()) collect_vars(f, out);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

std::string join(const std::vector<Formula>& fs) {
  std::string out;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i) out += ", ";
    out += to_string(fs[i]);
  }
  return out;
}

}  // namespace

std::string to_string(const MRule& r) {
  std::string out = join(r.premises());
  if (!out.empty()) out += ' ';
  out += '/';
  if (!r.conclusions().empty()) out += ' ' + join(r.conclusions());
  return out;
}

Formula apply_substitution(const Substitution& sigma, const Formula& f) {
  switch (f.op()) {
    case Op::Var: {
      auto it = sigma.find(f.name());
      return it == sigma.end() ? f : it->second;
    }
    case Op::Bot:
    case Op::Top: return f;
    case Op::Not: return ~apply_substitution(sigma, f.lhs());
    case Op::And: return apply_substitution(sigma, f.lhs()) & apply_substitution(sigma, f.rhs());
    case Op::Or: return apply_substitution(sigma, f.lhs()) | apply_substitution(sigma, f.rhs());
    case Op::Imp: return implies(apply_substitution(sigma, f.lhs()), apply_substitution(sigma, f.rhs()));
  }
  return f;
}

MRule apply_substitution(const Substitution& sigma, const MRule& r) {
  std::vector<Formula> premises;
  std::vector<Formula> conclusions;
  for (const auto& f : r.premises()) premises.push_back(apply_substitution(sigma, f));
  for (const auto& f : r.conclusions()) conclusions.push_back(apply_substitution(sigma, f));
  return MRule(std::move(premises), std::move(conclusions));
}

Substitution compose(const Substitution& first, const Substitution& second) {
  Substitution out;
  for (const auto& [v, f] : first) out.emplace(v, apply_substitution(second, f));
  for (const auto& [v, f] : second) out.emplace(v, f);  // no-op where first already maps v
  return out;
}

std::string to_string(const Substitution& sigma) {
  std::string out = "{";
  bool first = true;
  for (const auto& [v, f] : sigma) {
    if (!first) out += ", ";
    first = false;
    out += v + " := " + to_string(f);
  }
  return out + "}";
}

std::string fresh_variable(const MRule& r) { return fresh_variable(std::span<const MRule>(&r, 1)); }

std::string fresh_variable(std::span<const MRule> rules) {
  const auto used = vars(rules);
  for (std::size_t i = 0;; ++i) {
    std::string name = "q" + std::to_string(i);
    if (!std::binary_search(used.begin(), used.end(), name)) return name;
  }
}

}  // namespace adm
