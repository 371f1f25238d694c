#include <doctest.h>

#include <algorithm>

#include "adm/corpus.hpp"
#include "adm/errors.hpp"
#include "adm/parse.hpp"
#include "adm/rule.hpp"

using namespace adm;

namespace {
Formula v(const char* n) { return Formula::var(n); }
}  // namespace

TEST_CASE("formulas parse with the expected trees") {
  CHECK(parse_formula("p | q") == (v("p") | v("q")));
  CHECK(parse_formula("~p -> (q | r)") == implies(~v("p"), v("q") | v("r")));
  CHECK(parse_formula("p -> q -> r") == implies(v("p"), implies(v("q"), v("r"))));
  CHECK(parse_formula("p & q | r") == ((v("p") & v("q")) | v("r")));
  CHECK(parse_formula("~~p") == ~~v("p"));
  CHECK(parse_formula("0 -> 1") == implies(Formula::bot(), Formula::top()));
  CHECK(parse_formula(" x_1 & Y2 ") == (v("x_1") & v("Y2")));
  CHECK(parse_formula("p | q | r") == ((v("p") | v("q")) | v("r")));
}

TEST_CASE("syntax errors carry a column") {
  auto column_of = [](const char* text) -> std::size_t {
    try {
      parse_formula(text);
    } catch (const ParseError& e) {
      return e.column();
    }
    return 0;
  };
  CHECK(column_of("p & & q") == 5);
  CHECK(column_of("(p | q") == 7);
  CHECK(column_of("p q") == 3);
  CHECK(column_of("") == 1);
  CHECK(column_of("p $ q") == 3);
  CHECK_THROWS_AS(parse_formula("p -> "), ParseError);
}

TEST_CASE("rules parse on both sides of the slash") {
  const MRule dp = parse_rule("p | q / p, q");
  CHECK(dp.premises() == std::vector<Formula>{v("p") | v("q")});
  CHECK(dp.conclusions() == std::vector<Formula>{v("p"), v("q")});
  CHECK_FALSE(dp.is_single_conclusion());

  const MRule harrop = parse_rule("~p -> (q|r) / (~p -> q) | (~p -> r)");
  CHECK(harrop.is_single_conclusion());
  CHECK(harrop.conclusion() == (implies(~v("p"), v("q")) | implies(~v("p"), v("r"))));

  const MRule bot = parse_rule("/ 0");
  CHECK(bot.premises().empty());
  CHECK(bot.conclusions() == std::vector<Formula>{Formula::bot()});

  const MRule empty = parse_rule("/");
  CHECK(empty.premises().empty());
  CHECK(empty.conclusions().empty());

  CHECK(parse_rule("q, p, q / p").premises().size() == 2);
  CHECK(parse_rule("q, p / r") == parse_rule("p, q / r"));
}

TEST_CASE("malformed rules are rejected") {
  CHECK_THROWS_AS(parse_rule("p, q"), ParseError);
  CHECK_THROWS_AS(parse_rule("p / q / r"), ParseError);
  CHECK_THROWS_AS(parse_rule("p, / q"), ParseError);
  CHECK_THROWS_AS(parse_rule("p / q,"), ParseError);
}

TEST_CASE("rule files skip comments and report lines") {
  const auto rules = parse_rules("# a basis\n\np / p   # reflexivity\np | q / p, q\n");
  REQUIRE(rules.size() == 2);
  CHECK(rules[1] == parse_rule("p | q / p, q"));
  try {
    parse_rules("p / p\n\np | / q\n");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 5);
  }
}

TEST_CASE("printing") {
  CHECK(to_string(parse_formula("(p -> q) -> r")) == "(p -> q) -> r");
  CHECK(to_string(parse_formula("p -> (q -> r)")) == "p -> q -> r");
  CHECK(to_string(parse_formula("p | (q | r)")) == "p | (q | r)");
  CHECK(to_string(parse_formula("~(p & q)")) == "~(p & q)");
  CHECK(to_string(parse_rule("p | q / p, q")) == "p | q / p, q");
  CHECK(to_string(parse_rule("/ 0")) == "/ 0");
  CHECK(to_string(parse_rule("p /")) == "p /");
}

TEST_CASE("print then parse is the identity") {
  for (const auto& f : corpus::random_formulas(7, 400, {.variables = 3, .max_depth = 5})) CHECK(parse_formula(to_string(f)) == f);
  for (const auto& r : corpus::all_rules()) CHECK(parse_rule(to_string(r)) == r);
}

TEST_CASE("big conjunctions and disjunctions fold canonically") {
  CHECK(big_and({}) == Formula::top());
  CHECK(big_or({}) == Formula::bot());
  const std::vector<Formula> fs{v("q"), v("p"), v("r")};
  CHECK(big_and(fs) == ((v("p") & v("q")) & v("r")));
  std::vector<Formula> rev(fs.rbegin(), fs.rend());
  CHECK(big_or(rev) == big_or(fs));
}

TEST_CASE("substitution") {
  const MRule rq = parse_rule("a & b | q / c | d | q");
  CHECK(apply_substitution(Substitution{{"q", Formula::bot()}}, rq) == parse_rule("a & b | 0 / c | d | 0"));

  const Formula f = parse_formula("~(p -> q) & r");
  CHECK(apply_substitution(Substitution{}, f) == f);

  const Substitution s1{{"p", v("q")}}, s2{{"q", v("r")}};
  const Formula pq = v("p") & v("q");
  CHECK(apply_substitution(s2, apply_substitution(s1, pq)) == (v("r") & v("r")));
  CHECK(apply_substitution(compose(s1, s2), pq) == (v("r") & v("r")));
  CHECK(compose(s1, s2) == Substitution{{"p", v("r")}, {"q", v("r")}});
}

TEST_CASE("substitution composes and stays within the expected variables") {
  const auto images = corpus::random_formulas(11, 300, {.variables = 3, .max_depth = 2});
  const auto targets = corpus::random_formulas(12, 100);
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const Substitution a{{"p", images[3 * i]}, {"r", images[3 * i + 1]}};
    const Substitution b{{"q", images[3 * i + 2]}, {"p", v("s")}};
    const Formula& x = targets[i];
    CHECK(apply_substitution(compose(a, b), x) == apply_substitution(b, apply_substitution(a, x)));

    // vars(a(x)) within vars of the images plus the untouched variables
    std::vector<std::string> allowed;
    for (const auto& name : vars(x)) {
      if (auto it = a.find(name); it != a.end())
        collect_vars(it->second, allowed);
      else
        allowed.push_back(name);
    }
    std::sort(allowed.begin(), allowed.end());
    for (const auto& name : vars(apply_substitution(a, x))) CHECK(std::binary_search(allowed.begin(), allowed.end(), name));
  }
}

TEST_CASE("fresh variables") {
  CHECK(fresh_variable(parse_rule("p | q / p, q")) == "q0");
  CHECK(fresh_variable(parse_rule("q0, q1, q2 / q3 & q4 | q5")) == "q6");
  CHECK(fresh_variable(parse_rule("/")) == "q0");
  CHECK(fresh_variable(parse_rule("q1 / q0")) == "q2");
  const std::vector<MRule> two{parse_rule("q0 / p"), parse_rule("q1 / q")};
  CHECK(fresh_variable(two) == "q2");

  const auto fs = corpus::random_formulas(5, 200);
  const Substitution rename{{"p", v("q0")}, {"q", v("q1")}, {"r", v("q3")}};
  for (std::size_t i = 0; i + 1 < fs.size(); i += 2) {
    const MRule r({apply_substitution(rename, fs[i])}, {fs[i + 1]});
    const auto vs = vars(r);
    CHECK_FALSE(std::binary_search(vs.begin(), vs.end(), fresh_variable(r)));
  }
}
