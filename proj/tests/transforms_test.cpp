#include <doctest.h>

#include <algorithm>

#include "adm/corpus.hpp"
#include "adm/errors.hpp"
#include "adm/parse.hpp"
#include "adm/prover.hpp"
#include "adm/transforms.hpp"

using namespace adm;

TEST_CASE("reduction") {
  CHECK(reduce(dp_rule()) == parse_rule("p | q / p | q"));
  CHECK(reduce(parse_rule("/")) == parse_rule("1 / 0"));
  CHECK(reduce(corpus::kuznetsov()) == corpus::kuznetsov());
  CHECK(reduce(parse_rule("b, a / d, c")) == parse_rule("a & b / c | d"));
  for (const auto& r : corpus::all_rules()) CHECK(reduce(r).is_single_conclusion());
}

TEST_CASE("q-reduction") {
  CHECK(q_reduce(dp_rule(), "q0") == parse_rule("(p | q) | q0 / (p | q) | q0"));
  CHECK(q_reduce(parse_rule("a / b1, b2"), "q") == parse_rule("a | q / (b1 | b2) | q"));
  CHECK(q_reduce(parse_rule("/"), "q") == parse_rule("1 | q / 0 | q"));
  CHECK_THROWS_AS(q_reduce(dp_rule(), "q"), Error);
  CHECK_THROWS_AS(q_reduce(dp_rule(), "p"), Error);
}

TEST_CASE("the DP rule") {
  CHECK(dp_rule() == parse_rule("p | q / p, q"));
  CHECK_FALSE(dp_rule().is_single_conclusion());
  CHECK(models_mrule(boolean2(), dp_rule()).valid());
}

TEST_CASE("substituting 0 for q undoes the q-reduction up to equivalence") {
  for (const auto& r : corpus::all_rules()) {
    const std::string q = fresh_variable(r);
    const MRule s = apply_substitution(Substitution{{q, Formula::bot()}}, q_reduce(r, q));
    const MRule o = reduce(r);
    CHECK(equivalent(s.premises()[0], o.premises()[0]));
    CHECK(equivalent(s.conclusion(), o.conclusion()));
  }
}

TEST_CASE("bases") {
  const MRule dp = dp_rule(), h = corpus::harrop();
  CHECK(m_basis_from_s_basis(Basis(BasisKind::Single, {})).rules() == std::vector<MRule>{dp});
  const Basis hm = m_basis_from_s_basis(Basis(BasisKind::Single, {h}, "Harrop"));
  CHECK(hm.kind() == BasisKind::Multiple);
  CHECK(hm.rules() == std::vector<MRule>{h, dp});
  CHECK(hm.description() == "Harrop");
  CHECK(Basis(BasisKind::Multiple, {h, dp, dp, h}).rules() == hm.rules());

  CHECK_THROWS_AS(Basis(BasisKind::Single, {dp}), KindMismatch);
  CHECK_THROWS_AS(m_basis_from_s_basis(hm), KindMismatch);
  CHECK_THROWS_AS(s_basis_from_m_basis(Basis(BasisKind::Single, {h})), KindMismatch);

  const QReducedBasis s = s_basis_from_m_basis(Basis(BasisKind::Multiple, {dp}));
  CHECK(s.q == "q0");
  CHECK(s.basis.kind() == BasisKind::Single);
  CHECK(s.basis.rules() == std::vector<MRule>{parse_rule("(p | q) | q0 / (p | q) | q0")});

  // one q for the whole basis, fresh for every rule
  const QReducedBasis t = s_basis_from_m_basis(Basis(BasisKind::Multiple, {parse_rule("q0 / q1"), dp}));
  CHECK(t.q == "q2");
  for (const auto& r : t.basis.rules()) {
    CHECK(r.is_single_conclusion());
    const auto vs = vars(r);
    CHECK(std::count(vs.begin(), vs.end(), "q2") == 1);
  }

  const QReducedBasis round = s_basis_from_m_basis(m_basis_from_s_basis(Basis(BasisKind::Single, {h})));
  CHECK(round.basis.rules() == std::vector<MRule>{q_reduce(h, "q0"), q_reduce(dp, "q0")});
}

TEST_CASE("q-reduced Gabbay-de Jongh style bodies stay single-conclusion") {
  // bodies supplied as plain inputs
  const auto rules = parse_rules(
      "(p1 -> (p0 | p2)) -> (p1 | p2) / ((p1 -> (p0 | p2)) -> p1) | ((p1 -> (p0 | p2)) -> p2)\n"
      "(p -> q | r) -> (p | q) / ((p -> q | r) -> p) | ((p -> q | r) -> q)\n");
  const QReducedBasis s = s_basis_from_m_basis(Basis(BasisKind::Multiple, rules));
  CHECK(s.basis.rules().size() == 2);
  for (const auto& r : s.basis.rules()) CHECK(r.is_single_conclusion());
}

TEST_CASE("independence witnesses") {
  const MRule dp = dp_rule(), h = corpus::harrop();
  const std::vector<MRule> rules{dp, h};
  const auto pool = enumerate(9);
  const PoolSearch w = find_independence_witness(rules, h, pool);
  REQUIRE(w.found());
  CHECK(is_well_connected(w.witness->algebra));
  CHECK(models_mrule(w.witness->algebra, dp).valid());
  CHECK(replays(w.witness->algebra, h, w.witness->refutation));
  CHECK_FALSE(find_independence_witness(rules, h, enumerate(8)).found());

  const MRule pp = parse_rule("p / p");
  const std::vector<MRule> just{pp};
  CHECK_FALSE(find_independence_witness(just, pp, pool).found());
  CHECK_THROWS_AS(find_independence_witness(just, dp, pool), Error);
}

TEST_CASE("squares validate what their roots validate and refute DP") {
  for (const auto& a : enumerate(5)) {
    const FiniteHeytingAlgebra sq = direct_product(a, a);
    CHECK(models_mrule(sq, dp_rule()).refuted());
    for (const auto& r : corpus::single_rules())
      if (models_mrule(a, r).valid()) CHECK(models_mrule(sq, r).valid());
  }
}
