#include <doctest.h>

#include <cstdlib>

#include "adm/config.hpp"
#include "adm/corpus.hpp"
#include "adm/errors.hpp"
#include "adm/suite.hpp"

using namespace adm;

TEST_CASE("corpus shape") {
  CHECK(corpus::single_rules().size() == 50);
  for (const auto& r : corpus::single_rules()) {
    CHECK(r.is_single_conclusion());
    CHECK(vars(r).size() <= 3);
  }
  CHECK(corpus::m_rules().size() == 20);
  CHECK(corpus::curated_non_theorems().size() == 20);
  const auto& s = corpus::single_rules();
  for (const MRule& named : {corpus::harrop(), corpus::kuznetsov(), corpus::mints()})
    CHECK(std::find(s.begin(), s.end(), named) != s.end());
}

TEST_CASE("random formulas are reproducible and bounded") {
  const auto a = corpus::random_formulas(42, 200);
  CHECK(a == corpus::random_formulas(42, 200));
  CHECK(a != corpus::random_formulas(43, 200));
  for (const auto& f : a) {
    CHECK(f.depth() <= 4);
    CHECK(vars(f).size() <= 3);
  }
  // first draws pinned across platforms
  CHECK(to_string(corpus::random_formulas(1, 1)[0]) == "r");
}

TEST_CASE("environment overrides") {
  Config c;
  ::setenv("ADM_BUDGET", "12345", 1);
  ::setenv("ADM_ENUM_CAP", "9", 1);
  apply_environment(c);
  CHECK(c.budget == 12345);
  CHECK(c.enumeration_cap == 9);
  ::setenv("ADM_BUDGET", "12x", 1);
  CHECK_THROWS_AS(apply_environment(c), Error);
  ::unsetenv("ADM_BUDGET");
  ::unsetenv("ADM_ENUM_CAP");

  Config bad;
  bad.budget = 0;
  CHECK_THROWS_AS(bad.check(), Error);
  Config window;
  window.sizes_max = 20;
  CHECK_THROWS_AS(window.check(), Error);
}

TEST_CASE("suites individually") {
  CHECK(suite::dp_product().status() == suite::Status::Pass);
  const auto counts = suite::enumeration_counts(1, 6, 12);
  CHECK(counts.status() == suite::Status::Pass);
  CHECK(counts.notes == std::vector<std::string>{"counts 1..6: 1 1 1 2 3 5"});
  CHECK(suite::enumeration_counts(1, 13, 12).status() == suite::Status::Skip);

  const auto sabotaged = suite::validation(5, true);
  CHECK(sabotaged.status() == suite::Status::Fail);
  REQUIRE(sabotaged.counterexample);
  CHECK(sabotaged.counterexample->find("residuation") != std::string::npos);
  CHECK(suite::validation(5, false).status() == suite::Status::Pass);

  const auto intuitionistic = suite::dp_admissibility(suite::WitnessJudge::Intuitionistic, {}, kDefaultBudget);
  CHECK(intuitionistic.status() == suite::Status::Fail);
  CHECK(suite::dp_admissibility(suite::WitnessJudge::Variety, {}, kDefaultBudget).status() == suite::Status::Pass);
}

TEST_CASE("verify-suite reports are deterministic") {
  Config c;
  const auto a = suite::run_all(c);
  const auto b = suite::run_all(c);
  CHECK(suite::format_text(a) == suite::format_text(b));
  CHECK(suite::format_json_lines(a) == suite::format_json_lines(b));
  CHECK(suite::all_passed(a));
  for (std::size_t i = 1; i < a.size(); ++i) CHECK(a[i - 1].name < a[i].name);
  c.seed = 7;
  CHECK(suite::all_passed(suite::run_all(c)));
}
