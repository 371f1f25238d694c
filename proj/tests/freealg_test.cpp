#include <doctest.h>

#include <set>

#include "adm/corpus.hpp"
#include "adm/errors.hpp"
#include "adm/freealg.hpp"
#include "adm/parse.hpp"
#include "adm/prover.hpp"
#include "adm/transforms.hpp"

using namespace adm;

namespace {

using Tuple = std::vector<Element>;

// Rank-1 closure over a single algebra, starting from the identity tuple.
std::set<Tuple> closure1(const FiniteHeytingAlgebra& a) {
  const std::size_t n = a.size();
  Tuple id(n), bot(n, a.bot()), top(n, a.top());
  for (std::size_t i = 0; i < n; ++i) id[i] = static_cast<Element>(i);
  std::set<Tuple> s{id, bot, top};
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<Tuple> cur(s.begin(), s.end());
    for (const auto& x : cur)
      for (const auto& y : cur) {
        Tuple m(n), j(n), i(n), ng(n);
        for (std::size_t k = 0; k < n; ++k) {
          m[k] = a.meet(x[k], y[k]);
          j[k] = a.join(x[k], y[k]);
          i[k] = a.imp(x[k], y[k]);
          ng[k] = a.neg(x[k]);
        }
        for (auto* t : {&m, &j, &i, &ng}) grew |= s.insert(*t).second;
      }
  }
  return s;
}

std::vector<FiniteHeytingAlgebra> only(FiniteHeytingAlgebra a) { return {std::move(a)}; }

}  // namespace

TEST_CASE("free algebras of B2 and the 3-chain") {
  const FreeAlgebra f1 = free_algebra(only(boolean2()), 1);
  CHECK(f1.size() == 4);
  CHECK(f1.size() == closure1(boolean2()).size());
  CHECK(free_algebra(only(boolean2()), 2).size() == 16);
  CHECK(free_algebra(only(boolean2()), 0).size() == 2);

  const FreeAlgebra c = free_algebra(only(chain(3)), 1);
  REQUIRE(c.size() == 6);
  CHECK(closure1(chain(3)).size() == 6);
  // 0, g, ~g, ~~g, g | ~g, 1 as functions on 0 < a < 1
  std::set<Tuple> got;
  for (Element x = 0; x < c.size(); ++x) got.emplace(c.tuple(x).begin(), c.tuple(x).end());
  const std::set<Tuple> expected{{0, 0, 0}, {0, 1, 2}, {2, 0, 0}, {0, 2, 2}, {2, 1, 2}, {2, 2, 2}};
  CHECK(got == expected);
  CHECK_FALSE(is_well_connected(c.algebra()));

  for (const FreeAlgebra* f : {&f1, &c}) {
    CHECK(validate(f->algebra().tables()).ok());
    REQUIRE(f->rank() == 1);
    CHECK(f->generator_names() == std::vector<std::string>{"x1"});
    for (Element x = 0; x < f->size(); ++x) {
      const Formula& t = f->trace(x);
      CHECK(eval(f->algebra(), Valuation{{{"x1", f->generators()[0]}}}, t) == x);
    }
  }
}

TEST_CASE("free algebra of several algebras") {
  const std::vector<FiniteHeytingAlgebra> ks{boolean2(), chain(3)};
  const FreeAlgebra f = free_algebra(ks, 1);
  // the variety of C3 already contains B2
  CHECK(f.size() == 6);
  CHECK(f.tuple(0).size() == 5);
}

TEST_CASE("evaluation at a point is the homomorphism extending the point") {
  const FreeAlgebra f = free_algebra(only(boolean2()), 1);
  const auto& a = f.algebra();
  const FiniteHeytingAlgebra b2 = boolean2();
  for (std::size_t point = 0; point < 2; ++point) {
    CHECK(f.tuple(f.generators()[0])[point] == point);
    for (Element x = 0; x < a.size(); ++x)
      for (Element y = 0; y < a.size(); ++y) {
        CHECK(f.tuple(a.meet(x, y))[point] == b2.meet(f.tuple(x)[point], f.tuple(y)[point]));
        CHECK(f.tuple(a.join(x, y))[point] == b2.join(f.tuple(x)[point], f.tuple(y)[point]));
        CHECK(f.tuple(a.imp(x, y))[point] == b2.imp(f.tuple(x)[point], f.tuple(y)[point]));
      }
  }
}

TEST_CASE("a formula holds in the free algebra iff it holds in the generators") {
  const FreeAlgebra f = free_algebra(only(chain(3)), 2);
  const Substitution rename{{"p", Formula::var("x1")}, {"q", Formula::var("x2")}};
  for (const auto& phi : corpus::random_formulas(8, 150, {.variables = 2, .max_depth = 4}))
    CHECK(models_formula(f.algebra(), apply_substitution(rename, phi)).valid() == models_formula(chain(3), phi).valid());
}

TEST_CASE("caps") {
  FreeAlgebraLimits tight;
  tight.product_cap = 100;
  try {
    free_algebra(only(chain(3)), 2, tight);
    FAIL("built");
  } catch (const CapExceeded& e) {
    CHECK(e.required() == doctest::Approx(19683));
  }
  FreeAlgebraLimits few;
  few.element_cap = 10;
  CHECK_THROWS_AS(free_algebra(only(boolean2()), 2, few), CapExceeded);
  CHECK_THROWS_AS(free_algebra({}, 1), Error);
}

TEST_CASE("DP is not admissible over B2") {
  const AdmissibilityVerdict v = check_admissible_bounded(dp_rule(), only(boolean2()), 2);
  REQUIRE_FALSE(v.admissible_up_to_rank());
  CHECK(v.rank == 2);
  REQUIRE(v.witness);
  const Substitution& s = *v.witness;
  CHECK(to_string(s) == "{p := x1, q := ~x1}");
  const FiniteHeytingAlgebra b2 = boolean2();
  CHECK(models_formula(b2, apply_substitution(s, parse_formula("p | q"))).valid());
  CHECK_FALSE(models_formula(b2, apply_substitution(s, parse_formula("p"))).valid());
  CHECK_FALSE(models_formula(b2, apply_substitution(s, parse_formula("q"))).valid());
  // the same witness read intuitionistically: x1 | ~x1 is not a theorem
  CHECK_FALSE(is_theorem(apply_substitution(s, parse_formula("p | q"))));
}

TEST_CASE("trivial admissibility verdicts") {
  for (const auto& k : {only(boolean2()), only(chain(3))}) {
    const auto yes = check_admissible_bounded(parse_rule("p, q / q, p & q"), k, 2);
    CHECK(yes.admissible_up_to_rank());
    const auto no = check_admissible_bounded(parse_rule("1 / 0"), k, 2);
    CHECK_FALSE(no.admissible_up_to_rank());
    CHECK(no.rank == 0);
    CHECK(no.witness->empty());
  }
  CHECK(default_rank_bound(dp_rule()) == 3);
  CHECK(default_rank_bound(parse_rule("a, b, c, d / e")) == 5);
}

TEST_CASE("a refutation persists at higher ranks") {
  for (const auto& r : corpus::m_rules()) {
    if (vars(r).size() > 2) continue;
    const auto v = check_admissible_bounded(r, only(chain(3)), 2);
    if (v.admissible_up_to_rank()) continue;
    for (std::size_t k = v.rank; k <= 2; ++k) CHECK(models_mrule(free_algebra(only(chain(3)), k).algebra(), r).refuted());
  }
}

TEST_CASE("stopping at the cap is reported") {
  FreeAlgebraLimits limits;
  limits.product_cap = 300;
  const auto v = check_admissible_bounded(parse_rule("p / p"), only(boolean2()), 6, limits);
  CHECK(v.admissible_up_to_rank());
  CHECK(v.stopped_by_cap);
  CHECK(v.rank == 3);
  CHECK(v.requested_rank == 6);
  limits.product_cap = 10;
  CHECK_THROWS_AS(check_admissible_bounded(dp_rule(), only(boolean2()), 2, limits), CapExceeded);
}

TEST_CASE("refuting derivability") {
  const FiniteHeytingAlgebra b4 = direct_product(boolean2(), boolean2());
  std::vector<MRule> valid;
  for (const auto& r : corpus::single_rules())
    if (models_mrule(b4, r).valid()) valid.push_back(r);
  const std::vector<FiniteHeytingAlgebra> pool{b4};
  const PoolSearch s = refute_derivability(valid, dp_rule(), pool);
  REQUIRE(s.found());
  CHECK(s.witness->algebra == b4);

  CHECK_FALSE(refute_derivability({}, parse_rule("p / p"), enumerate(6)).found());

  const std::vector<MRule> dp{dp_rule()};
  const PoolSearch h = refute_derivability(dp, corpus::harrop(), enumerate(9));
  REQUIRE(h.found());
  CHECK(is_well_connected(h.witness->algebra));
  CHECK_FALSE(refute_derivability(dp, corpus::harrop(), enumerate(8)).found());
}
