#include "adm/corpus.hpp"

#include "adm/parse.hpp"

namespace adm::corpus {

namespace {

std::vector<MRule> parse_all(std::initializer_list<const char*> lines) {
  std::vector<MRule> out;
  for (const char* line : lines) out.push_back(parse_rule(line));
  return out;
}

constexpr const char* kHarrop = "~p -> (q | r) / (~p -> q) | (~p -> r)";
constexpr const char* kKuznetsov = "(~~p -> p) -> (p | ~p) / ((~~p -> p) -> ~p) | ((~~p -> p) -> ~~p)";
constexpr const char* kMints = "(p -> q) -> (p | r) / ((p -> q) -> p) | ((p -> q) -> r)";

}  // namespace

MRule harrop() { return parse_rule(kHarrop); }
MRule kuznetsov() { return parse_rule(kKuznetsov); }
MRule mints() { return parse_rule(kMints); }

const std::vector<MRule>& single_rules() {
  static const std::vector<MRule> rules = parse_all({
      kHarrop,
      kKuznetsov,
      kMints,
      "p / p",
      "p, p -> q / q",
      "p & q / p",
      "p, q / p & q",
      "p / p | q",
      "p | q / q | p",
      "p -> q, q -> r / p -> r",
      "~~p / p",
      "p | ~p / p",
      "~p / ~~~p",
      "p | q, ~p / q",
      "p -> q, ~q / ~p",
      "~p -> q | r / (~p -> q) | r",
      "p | q / p",
      "(p -> q) | (q -> p) / p | ~p",
      "~p | ~~p / p | ~p",
      "((p -> q) -> p) -> p / p | ~p",
      "~~p -> p / p | ~p",
      "1 / p | ~p",
      "1 / ~p | ~~p",
      "1 / (p -> q) | (q -> p)",
      "/ 0",
      "0 / p",
      "p / 1",
      "p, ~p / q",
      "p -> q, q -> p / (p -> q) & (q -> p)",
      "~(p & q) / ~p | ~q",
      "~(p | q) / ~p & ~q",
      "~p & ~q / ~(p | q)",
      "p -> q / ~q -> ~p",
      "~q -> ~p / p -> q",
      "~~(p -> q) / ~~p -> ~~q",
      "~~p -> ~~q / ~~(p -> q)",
      "(p -> q) -> r / (~p -> r) & (q -> r)",
      "(~p -> r) & (q -> r) / (p -> q) -> r",
      "p -> q | r / (p -> q) | (p -> r)",
      "~p -> q / ~~q | q",
      "~p | q / p -> q",
      "p -> q / ~p | q",
      "(p -> q) -> p / p",
      "~~p & ~~q / ~~(p & q)",
      "~~(p | q) / ~~p | ~~q",
      "(p -> q) -> q, (q -> p) -> p / p | q",
      "~(p -> q) / p",
      "~(p -> q) / ~q",
      "~~(p | ~p) -> p / p",
      "(p -> r) & (q -> r) / p | q -> r",
  });
  return rules;
}

const std::vector<MRule>& m_rules() {
  static const std::vector<MRule> rules = parse_all({
      "p | q / p, q",
      "~p -> (q | r) / ~p -> q, ~p -> r",
      "(~~p -> p) -> (p | ~p) / (~~p -> p) -> ~p, (~~p -> p) -> ~~p",
      "(p -> q) -> (p | r) / (p -> q) -> p, (p -> q) -> r",
      "p | ~p / p, ~p",
      "~p | ~~p / ~p, ~~p",
      "(p -> q) | (q -> p) / p -> q, q -> p",
      "1 / p, ~p",
      "/ p, q",
      "/",
      "p /",
      "p, ~p /",
      "~~p /",
      "p | q, ~q / p, r",
      "p / p, q",
      "p & q / p, q",
      "p | q | r / p, q, r",
      "p | q / p | q",
      "~~p / p, ~p",
      "(p -> q) -> p / p, q",
  });
  return rules;
}

std::vector<MRule> all_rules() {
  std::vector<MRule> out = single_rules();
  out.insert(out.end(), m_rules().begin(), m_rules().end());
  return out;
}

const std::vector<Formula>& curated_non_theorems() {
  static const std::vector<Formula> formulas = [] {
    std::vector<Formula> out;
    for (const char* text : {
             "p | ~p",
             "~~p -> p",
             "((p -> q) -> p) -> p",
             "(~p -> (q | r)) -> ((~p -> q) | (~p -> r))",
             "((~~p -> p) -> (p | ~p)) -> (((~~p -> p) -> ~p) | ((~~p -> p) -> ~~p))",
             "((p -> q) -> (p | r)) -> (((p -> q) -> p) | ((p -> q) -> r))",
             "~p | ~~p",
             "(p -> q) | (q -> p)",
             "~(p & q) -> (~p | ~q)",
             "(p -> q) -> (~p | q)",
             "(~q -> ~p) -> (p -> q)",
             "(~p -> q) -> (~q -> p)",
             "~~p | ~p | p",
             "p | (p -> q)",
             "(p -> (q | r)) -> ((p -> q) | (p -> r))",
             "((p -> q) -> q) -> (p | q)",
             "~~(p | q) -> (~~p | ~~q)",
             "p | q",
             "(p -> q) -> p",
             "(~p -> p) -> p",
         })
      out.push_back(parse_formula(text));
    return out;
  }();
  return formulas;
}

FormulaGenerator::FormulaGenerator(std::uint64_t seed, RandomFormulaOptions options)
    : rng_(seed), options_(options) {}

Formula FormulaGenerator::next() { return grow(options_.max_depth); }

Formula FormulaGenerator::grow(std::size_t depth) {
  // Leaves get likelier as depth runs out.
  const std::uint64_t pick = draw(depth == 0 ? 1 : 8);
  if (depth == 0 || pick < 2) {
    const std::uint64_t leaf = draw(options_.variables + 1);
    if (leaf == options_.variables) return draw(2) == 0 ? Formula::bot() : Formula::top();
    return Formula::var(std::string(1, static_cast<char>('p' + leaf)));
  }
  switch (pick) {
    case 2: return ~grow(depth - 1);
    case 3:
    case 4: {
      Formula l = grow(depth - 1);
      return l & grow(depth - 1);
    }
    case 5: {
      Formula l = grow(depth - 1);
      return l | grow(depth - 1);
    }
    default: {
      Formula l = grow(depth - 1);
      return implies(l, grow(depth - 1));
    }
  }
}

std::vector<Formula> random_formulas(std::uint64_t seed, std::size_t count, RandomFormulaOptions options) {
  FormulaGenerator gen(seed, options);
  std::vector<Formula> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(gen.next());
  return out;
}

}  // namespace adm::corpus
