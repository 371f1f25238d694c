#include <doctest.h>

#include "adm/corpus.hpp"
#include "adm/parse.hpp"
#include "adm/prover.hpp"
#include "adm/semantics.hpp"

using namespace adm;

namespace {
bool thm(const char* s) { return is_theorem(parse_formula(s)); }
}  // namespace

TEST_CASE("theorems") {
  CHECK(thm("p -> (q -> p)"));
  CHECK(thm("(p -> q -> r) -> (p -> q) -> p -> r"));
  CHECK(thm("p & q -> q & p"));
  CHECK(thm("p | q -> q | p"));
  CHECK(thm("~~(p | ~p)"));
  CHECK(thm("~~~p -> ~p"));
  CHECK(thm("(p -> q) -> ~q -> ~p"));
  CHECK(thm("~(p | q) -> ~p & ~q"));
  CHECK(thm("0 -> p"));
  CHECK(thm("1"));
  CHECK(thm("((p -> q) -> r) -> ((p -> q) -> r)"));
  CHECK(thm("(((p -> q) -> p) -> p) -> ((p -> q) -> q) -> (q -> p) -> p | ~p -> p | ~p"));
}

TEST_CASE("non-theorems") {
  CHECK_FALSE(thm("p | ~p"));
  CHECK_FALSE(thm("((p -> q) -> p) -> p"));
  CHECK_FALSE(thm("~~p -> p"));
  CHECK_FALSE(thm("(p -> q) | (q -> p)"));
  CHECK_FALSE(thm("0"));
  CHECK_FALSE(thm("p"));
  for (const auto& f : corpus::curated_non_theorems()) CHECK_FALSE(is_theorem(f));
}

TEST_CASE("rejections have 3-chain countermodels where expected") {
  const FiniteHeytingAlgebra c3 = chain(3);
  const Verdict lem = models_formula(c3, parse_formula("p | ~p"));
  CHECK(lem.refuted());
  const Verdict peirce = models_formula(c3, parse_formula("((p -> q) -> p) -> p"));
  REQUIRE(peirce.refuted());
  CHECK(peirce.refutation->valuation == Valuation{{{"p", 1}, {"q", 0}}});
}

TEST_CASE("derivability from hypotheses") {
  const std::vector<Formula> mp{parse_formula("p"), parse_formula("p -> q")};
  CHECK(proves(mp, parse_formula("q")));
  const std::vector<Formula> gamma{parse_formula("p | r"), parse_formula("~q"), parse_formula("s")};
  CHECK(proves(gamma, big_and(gamma)));
  const std::vector<Formula> disj{parse_formula("p | q")};
  CHECK_FALSE(proves(disj, parse_formula("p")));
  // and B2 with p = 0, q = 1 shows why
  CHECK(eval(boolean2(), Valuation{{{"p", 0}, {"q", 1}}}, parse_formula("(p | q) -> p")) == 0);
}

TEST_CASE("equivalence") {
  CHECK(equivalent(parse_formula("p -> q -> r"), parse_formula("p & q -> r")));
  CHECK(equivalent(parse_formula("~(p | q)"), parse_formula("~p & ~q")));
  CHECK_FALSE(equivalent(parse_formula("~(p & q)"), parse_formula("~p | ~q")));
  for (const auto& r : corpus::all_rules()) {
    const Formula d = big_or(r.conclusions());
    CHECK(equivalent(d | Formula::bot(), d));
  }
}

TEST_CASE("accepted formulas hold in every small algebra") {
  const auto pool = enumerate(8);
  std::size_t accepted = 0;
  for (const auto& f : corpus::random_formulas(99, 400)) {
    if (!is_theorem(f)) continue;
    ++accepted;
    CHECK_FALSE(find_refuting_algebra(f, pool).found());
  }
  CHECK(accepted > 20);
}

TEST_CASE("rejected formulas of the corpus have countermodels") {
  // Two-valued truth tables as a classical oracle: classical non-theorems are rejected.
  const FiniteHeytingAlgebra b2 = boolean2();
  for (const auto& f : corpus::random_formulas(100, 400))
    if (!models_formula(b2, f).valid()) CHECK_FALSE(is_theorem(f));
  const auto pool = enumerate(10);
  for (const auto& f : corpus::curated_non_theorems()) CHECK(find_refuting_algebra(f, pool).found());
}
