#include "adm/suite.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <future>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "adm/algebra_io.hpp"
#include "adm/corpus.hpp"
#include "adm/errors.hpp"
#include "adm/freealg.hpp"
#include "adm/parse.hpp"
#include "adm/prover.hpp"
#include "adm/semantics.hpp"
#include "adm/transforms.hpp"

namespace adm::suite {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Skip: return "SKIP";
  }
  return "?";
}

Status Report::status() const noexcept {
  if (counterexample) return Status::Fail;
  if (skipped > 0) return Status::Skip;
  return Status::Pass;
}

namespace {

class Tally {
 public:
  explicit Tally(std::string name) { r_.name = std::move(name); }

  bool expect(bool ok, const std::function<std::string()>& describe) {
    ++r_.checked;
    if (!ok && !r_.counterexample) r_.counterexample = describe();
    return ok;
  }
  void skip() { ++r_.skipped; }
  void note(std::string line) { r_.notes.push_back(std::move(line)); }
  bool failed() const { return r_.counterexample.has_value(); }
  Report done() { return std::move(r_); }

 private:
  Report r_;
};

// nullopt when the valuation budget is exceeded.
std::optional<bool> holds(const FiniteHeytingAlgebra& a, const MRule& r, std::uint64_t budget) {
  Verdict v = models_mrule(a, r, budget);
  if (v.outcome == Outcome::BudgetExceeded) return std::nullopt;
  return v.valid();
}

std::string label(std::size_t i, const FiniteHeytingAlgebra& a) {
  return "#" + std::to_string(i) + " (size " + std::to_string(a.size()) + ")";
}

std::string join(const std::vector<std::size_t>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? " " : "") + std::to_string(xs[i]);
  return out;
}

std::vector<FiniteHeytingAlgebra> pool_with_degenerate(std::size_t n) {
  return enumerate(n, {.include_degenerate = true, .cap = std::max(n, kDefaultEnumerationCap)});
}

std::vector<FiniteHeytingAlgebra> pool_without_degenerate(std::size_t n) {
  return enumerate(n, {.include_degenerate = false, .cap = std::max(n, kDefaultEnumerationCap)});
}

HeytingTables tables_from_order(std::size_t n, const std::vector<std::vector<bool>>& leq) {
  // meet/join by brute force; imp filled with top (laws are checked elsewhere).
  HeytingTables t;
  t.size = n;
  t.bot = 0;
  t.top = static_cast<Element>(n - 1);
  t.meet.assign(n * n, 0);
  t.join.assign(n * n, static_cast<Element>(n - 1));
  t.imp.assign(n * n, static_cast<Element>(n - 1));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (leq[c][a] && leq[c][b] && leq[t.meet[a * n + b]][c]) t.meet[a * n + b] = static_cast<Element>(c);
        if (leq[a][c] && leq[b][c] && leq[c][t.join[a * n + b]]) t.join[a * n + b] = static_cast<Element>(c);
      }
    }
  return t;
}

// 0 < a, b, c < 1 with a, b, c pairwise incomparable.
HeytingTables diamond() {
  std::vector<std::vector<bool>> leq(5, std::vector<bool>(5, false));
  for (std::size_t i = 0; i < 5; ++i) leq[i][i] = leq[0][i] = leq[i][4] = true;
  return tables_from_order(5, leq);
}

// 0 < a < b < 1, 0 < c < 1.
HeytingTables pentagon() {
  std::vector<std::vector<bool>> leq(5, std::vector<bool>(5, false));
  for (std::size_t i = 0; i < 5; ++i) leq[i][i] = leq[0][i] = leq[i][4] = true;
  leq[1][2] = true;
  return tables_from_order(5, leq);
}

// Naive fixpoint closure of the bot, top and projection tuples, for sizes only.
std::size_t naive_closure_size(const std::vector<FiniteHeytingAlgebra>& ks, std::size_t rank) {
  std::vector<std::pair<std::size_t, std::vector<Element>>> points;  // (algebra, point)
  for (std::size_t a = 0; a < ks.size(); ++a) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < rank; ++i) total *= ks[a].size();
    for (std::size_t p = 0; p < total; ++p) {
      std::vector<Element> coords(rank);
      std::size_t rest = p;
      for (std::size_t i = rank; i-- > 0;) {
        coords[i] = static_cast<Element>(rest % ks[a].size());
        rest /= ks[a].size();
      }
      points.emplace_back(a, coords);
    }
  }
  std::set<std::vector<Element>> elems;
  std::vector<Element> bot, top;
  for (const auto& [a, _] : points) {
    bot.push_back(ks[a].bot());
    top.push_back(ks[a].top());
  }
  elems.insert(bot);
  elems.insert(top);
  for (std::size_t g = 0; g < rank; ++g) {
    std::vector<Element> proj;
    for (const auto& [a, coords] : points) proj.push_back(coords[g]);
    elems.insert(proj);
  }
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<std::vector<Element>> current(elems.begin(), elems.end());
    for (const auto& x : current)
      for (const auto& y : current)
        for (int op = 0; op < 4; ++op) {
          std::vector<Element> z(points.size());
          for (std::size_t j = 0; j < points.size(); ++j) {
            const auto& alg = ks[points[j].first];
            z[j] = op == 0 ? alg.meet(x[j], y[j]) : op == 1 ? alg.join(x[j], y[j]) : op == 2 ? alg.imp(x[j], y[j]) : alg.neg(x[j]);
          }
          grew |= elems.insert(std::move(z)).second;
        }
  }
  return elems.size();
}

Formula rename_to(const Formula& f, const std::vector<std::string>& names) {
  Substitution s;
  const std::array<const char*, 3> from{"p", "q", "r"};
  for (std::size_t i = 0; i < names.size() && i < from.size(); ++i) s.emplace(from[i], Formula::var(names[i]));
  return apply_substitution(s, f);
}

}  // namespace

Report dp_product() {
  Tally t("semantics.dp-product");
  const MRule dp = dp_rule();
  const FiniteHeytingAlgebra b2 = boolean2();
  const FiniteHeytingAlgebra b4 = direct_product(b2, b2);
  t.expect(models_mrule(b2, dp).valid(), [] { return std::string("B2 refutes DP"); });
  Verdict v = models_mrule(b4, dp);
  if (t.expect(v.refuted(), [] { return std::string("B2 x B2 validates DP"); })) {
    const Valuation want{{{"p", product_element(b2, b2.top(), b2.bot())}, {"q", product_element(b2, b2.bot(), b2.top())}}};
    t.expect(v.refutation->valuation == want,
             [&] { return "unexpected witness " + to_string(v.refutation->valuation); });
    t.note("witness " + to_string(v.refutation->valuation) + " with (x, y) encoded as x + 2y");
  }
  return t.done();
}

Report product_rules(std::size_t max_size, const std::vector<MRule>& rules, std::uint64_t budget) {
  Tally t("semantics.products");
  const auto pool = pool_with_degenerate(max_size);
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i; j < pool.size(); ++j) {
      ++pairs;
      const FiniteHeytingAlgebra prod = direct_product(pool[i], pool[j]);
      for (const auto& r : rules) {
        const auto a = holds(pool[i], r, budget), b = holds(pool[j], r, budget), ab = holds(prod, r, budget);
        if (!a || !b || !ab) {
          t.skip();
          continue;
        }
        t.expect((*a && *b) == *ab, [&] {
          return label(i, pool[i]) + " x " + label(j, pool[j]) + ": factors " + (*a && *b ? "validate" : "do not both validate") +
                 " but the product " + (*ab ? "validates " : "refutes ") + to_string(r);
        });
      }
    }
  t.note(std::to_string(pool.size()) + " algebras, " + std::to_string(pairs) + " pairs, " + std::to_string(rules.size()) +
         " rules");
  return t.done();
}

Report reductions(std::size_t max_size, const std::vector<MRule>& rules, std::uint64_t budget) {
  Tally t("semantics.reductions");
  const auto pool = pool_without_degenerate(max_size);
  std::size_t connected = 0;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (!is_well_connected(pool[i])) continue;
    ++connected;
    for (const auto& r : rules) {
      const auto a = holds(pool[i], r, budget);
      const auto b = holds(pool[i], reduce(r), budget);
      const auto c = holds(pool[i], q_reduce(r, fresh_variable(r)), budget);
      if (!a || !b || !c) {
        t.skip();
        continue;
      }
      t.expect(*a == *b && *b == *c, [&] {
        return label(i, pool[i]) + " is well-connected but R, R°, R^q give " + std::to_string(*a) + std::to_string(*b) +
               std::to_string(*c) + " for " + to_string(r);
      });
    }
  }
  t.note(std::to_string(connected) + " well-connected algebras of " + std::to_string(pool.size()));

  const FiniteHeytingAlgebra b4 = direct_product(boolean2(), boolean2());
  const MRule dp = dp_rule();
  t.expect(models_mrule(b4, reduce(dp)).valid() && models_mrule(b4, dp).refuted(),
           [] { return std::string("B2 x B2 does not separate DP from its reduction"); });
  return t.done();
}

Report enumeration_counts(std::size_t lo, std::size_t hi, std::size_t cap) {
  static constexpr std::array<std::size_t, 13> kReference{0, 1, 1, 1, 2, 3, 5, 8, 15, 26, 47, 82, 151};
  Tally t("algebra.enumeration");
  std::vector<FiniteHeytingAlgebra> algebras;
  try {
    algebras = enumerate(hi, {.include_degenerate = true, .cap = cap});
  } catch (const CapExceeded& e) {
    t.skip();
    t.note(e.what());
    return t.done();
  }
  std::vector<std::size_t> got(hi + 1, 0);
  for (const auto& a : algebras) ++got[a.size()];

  // Labeled strict orders on fewer than `hi` points, lattices deduplicated by key.
  std::vector<std::set<std::vector<std::uint64_t>>> oracle(hi + 1);
  const bool brute = hi <= 6;
  if (brute) {
    for (std::size_t k = 0; k + 1 <= hi; ++k) {
      std::vector<std::pair<std::size_t, std::size_t>> slots;
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
          if (a != b) slots.emplace_back(a, b);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
        std::vector<std::vector<bool>> lt(k, std::vector<bool>(k, false));
        for (std::size_t s = 0; s < slots.size(); ++s)
          if ((mask >> s) & 1U) lt[slots[s].first][slots[s].second] = true;
        bool order = true;
        for (std::size_t a = 0; a < k && order; ++a)
          for (std::size_t b = 0; b < k && order; ++b) {
            if (lt[a][b] && lt[b][a]) order = false;
            for (std::size_t c = 0; c < k && order; ++c)
              if (lt[a][b] && lt[b][c] && !lt[a][c]) order = false;
          }
        if (!order) continue;
        std::vector<std::pair<std::size_t, std::size_t>> rel;
        for (std::size_t a = 0; a < k; ++a)
          for (std::size_t b = 0; b < k; ++b)
            if (lt[a][b]) rel.emplace_back(a, b);
        const FiniteHeytingAlgebra lattice = from_poset(Poset::from_relations(k, rel));
        if (lattice.size() <= hi) oracle[lattice.size()].insert(canonical_form(lattice).key);
      }
    }
  }

  std::vector<std::size_t> counts;
  for (std::size_t n = lo; n <= hi; ++n) {
    counts.push_back(got[n]);
    if (n < kReference.size())
      t.expect(got[n] == kReference[n], [&] {
        return "size " + std::to_string(n) + ": " + std::to_string(got[n]) + " classes, expected " +
               std::to_string(kReference[n]);
      });
    if (brute)
      t.expect(got[n] == oracle[n].size(), [&] {
        return "size " + std::to_string(n) + ": " + std::to_string(got[n]) + " classes, poset oracle finds " +
               std::to_string(oracle[n].size());
      });
  }
  t.note("counts " + std::to_string(lo) + ".." + std::to_string(hi) + ": " + join(counts));
  return t.done();
}

Report validation(std::size_t max_size, bool sabotage) {
  Tally t("algebra.validate");
  const auto pool = pool_with_degenerate(max_size);
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const auto& a = pool[i];
    t.expect(validate(a.tables()).ok(), [&] { return label(i, a) + " fails validation"; });
    bool brute = true;
    for (Element x = 0; x < a.size(); ++x)
      for (Element y = 0; y < a.size(); ++y)
        if (x != a.top() && y != a.top() && a.join(x, y) == a.top()) brute = false;
    const auto wc = is_well_connected(a);
    t.expect(wc.well_connected == brute, [&] { return label(i, a) + ": well-connectedness disagrees with the pair scan"; });
    if (wc.witness)
      t.expect(a.join(wc.witness->first, wc.witness->second) == a.top() && wc.witness->first != a.top() &&
                   wc.witness->second != a.top(),
               [&] { return label(i, a) + ": bad well-connectedness witness"; });
  }
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i + 1; j < pool.size() && pool[j].size() == pool[i].size(); ++j)
      t.expect(!is_isomorphic(pool[i], pool[j]), [&] { return label(i, pool[i]) + " and " + label(j, pool[j]) + " are isomorphic"; });

  const Validation m3 = validate(diamond());
  t.expect(m3.violates(Law::NonDistributive), [] { return std::string("M3 not rejected as non-distributive"); });
  const Validation n5 = validate(pentagon());
  t.expect(n5.violates(Law::NonDistributive), [] { return std::string("N5 not rejected as non-distributive"); });

  HeytingTables fixture = chain(3).tables();
  if (sabotage) fixture.imp[1 * 3 + 0] = 1;  // a -> 0 := a
  const Validation v = validate(fixture);
  t.expect(v.ok(), [&] {
    std::string out = "3-chain fixture rejected:";
    for (const auto& viol : v.violations) {
      out += " " + to_string(viol.law) + " (" + viol.detail + ") at";
      for (Element w : viol.witness) out += " " + std::to_string(w);
    }
    return out;
  });
  return t.done();
}

Report free_structure(std::uint64_t seed, const FreeAlgebraLimits& limits) {
  Tally t("freealg.structure");
  struct Case {
    std::string name;
    std::vector<FiniteHeytingAlgebra> ks;
    std::size_t rank;
    std::size_t expected;
  };
  const std::vector<Case> cases{{"F_B2(1)", {boolean2()}, 1, 4}, {"F_B2(2)", {boolean2()}, 2, 16}, {"F_C3(1)", {chain(3)}, 1, 6}};
  for (const auto& c : cases) {
    std::optional<FreeAlgebra> f;
    try {
      f.emplace(free_algebra(c.ks, c.rank, limits));
    } catch (const CapExceeded&) {
      t.skip();
      continue;
    }
    t.expect(f->size() == c.expected,
             [&] { return c.name + " has " + std::to_string(f->size()) + " elements, expected " + std::to_string(c.expected); });
    const std::size_t naive = naive_closure_size(c.ks, c.rank);
    t.expect(naive == f->size(), [&] { return c.name + ": closure oracle finds " + std::to_string(naive); });
    t.expect(validate(f->algebra().tables()).ok(), [&] { return c.name + " fails validation"; });

    // Generators generate: closure inside the tables reaches every element.
    const auto& a = f->algebra();
    std::vector<bool> seen(a.size(), false);
    std::vector<Element> reached{a.bot(), a.top()};
    for (Element g : f->generators()) reached.push_back(g);
    for (Element x : reached) seen[x] = true;
    for (std::size_t i = 0; i < reached.size(); ++i)
      for (std::size_t j = 0; j <= i; ++j) {
        const Element x = reached[i], y = reached[j];
        for (Element z : {a.meet(x, y), a.join(x, y), a.imp(x, y), a.imp(y, x), a.neg(x)})
          if (!seen[z]) {
            seen[z] = true;
            reached.push_back(z);
          }
      }
    t.expect(reached.size() == a.size(), [&] { return c.name + ": generators reach only " + std::to_string(reached.size()); });

    // Traces denote their elements.
    for (Element x = 0; x < a.size(); ++x) {
      Valuation v;
      for (std::size_t g = 0; g < f->rank(); ++g) v.values.emplace(generator_name(g), f->generators()[g]);
      t.expect(eval(a, v, f->trace(x)) == x, [&] { return c.name + ": trace " + to_string(f->trace(x)) + " misses its element"; });
    }

    // Evaluation at a point is a homomorphism sending the generators to the point.
    const std::size_t width = f->tuple(0).size();
    for (std::size_t point = 0; point < width; ++point) {
      const auto& k = c.ks[0];
      bool hom = true;
      for (Element x = 0; x < a.size(); ++x)
        for (Element y = 0; y < a.size(); ++y) {
          const Element hx = f->tuple(x)[point], hy = f->tuple(y)[point];
          hom = hom && f->tuple(a.meet(x, y))[point] == k.meet(hx, hy) && f->tuple(a.join(x, y))[point] == k.join(hx, hy) &&
                f->tuple(a.imp(x, y))[point] == k.imp(hx, hy);
        }
      t.expect(hom, [&] { return c.name + ": evaluation at point " + std::to_string(point) + " is not a homomorphism"; });
    }

    // Formula bridge on random formulas in `rank` variables.
    const auto formulas = corpus::random_formulas(seed + c.rank, 60, {.variables = c.rank, .max_depth = 4});
    for (const auto& phi : formulas) {
      const std::vector<std::string> names = f->generator_names();
      const Formula over_gens = rename_to(phi, names);
      bool all = true;
      for (const auto& k : c.ks) all = all && models_formula(k, phi).valid();
      const bool free_holds = models_formula(a, over_gens).valid();
      t.expect(all == free_holds, [&] { return c.name + ": validity of " + to_string(phi) + " differs from K"; });
    }

    // Well-connected free algebras satisfy R iff R^q.
    if (is_well_connected(a))
      for (const auto& r : corpus::m_rules()) {
        const auto x = holds(a, r, kDefaultBudget), y = holds(a, q_reduce(r, fresh_variable(r)), kDefaultBudget);
        if (!x || !y) {
          t.skip();
          continue;
        }
        t.expect(*x == *y, [&] { return c.name + " separates " + to_string(r) + " from its q-reduction"; });
      }
    else
      t.note(c.name + " is not well-connected");
  }
  return t.done();
}

Report prover_soundness(std::uint64_t seed, std::size_t count, std::size_t random_pool, std::size_t curated_pool,
                        std::uint64_t budget) {
  Tally t("prover.soundness");
  const auto pool = pool_without_degenerate(std::max(random_pool, curated_pool));
  std::vector<FiniteHeytingAlgebra> small;
  for (const auto& a : pool)
    if (a.size() <= random_pool) small.push_back(a);
  std::vector<FiniteHeytingAlgebra> curated_algebras;
  for (const auto& a : pool)
    if (a.size() <= curated_pool) curated_algebras.push_back(a);

  std::size_t accepted = 0, rejected = 0, rejected_refuted = 0;
  for (const auto& phi : corpus::random_formulas(seed, count)) {
    if (is_theorem(phi)) {
      ++accepted;
      const PoolSearch s = find_refuting_algebra(phi, small, budget);
      if (s.skipped) t.skip();
      t.expect(!s.found(), [&] {
        return "theorem " + to_string(phi) + " refuted in an algebra of size " + std::to_string(s.witness->algebra.size());
      });
    } else {
      ++rejected;
      if (find_refuting_algebra(phi, small, budget).found()) ++rejected_refuted;
    }
  }
  t.note("random: " + std::to_string(accepted) + " accepted, " + std::to_string(rejected) + " rejected (" +
         std::to_string(rejected_refuted) + " refuted up to size " + std::to_string(random_pool) + ")");

  std::size_t largest = 0;
  for (const auto& phi : corpus::curated_non_theorems()) {
    t.expect(!is_theorem(phi), [&] { return "curated non-theorem " + to_string(phi) + " accepted"; });
    const PoolSearch s = find_refuting_algebra(phi, curated_algebras, budget);
    if (s.skipped) t.skip();
    if (t.expect(s.found(), [&] {
          return "no countermodel up to size " + std::to_string(curated_pool) + " for " + to_string(phi);
        }))
      largest = std::max(largest, s.witness->algebra.size());
  }
  t.note("curated: largest smallest countermodel has " + std::to_string(largest) + " elements");

  t.expect(is_theorem(parse_formula("~~(p | ~p)")), [] { return std::string("~~(p | ~p) rejected"); });
  t.expect(is_theorem(parse_formula("~~(~~p -> p)")), [] { return std::string("~~(~~p -> p) rejected"); });
  for (const auto& r : corpus::all_rules()) {
    const Formula d = big_or(r.conclusions());
    t.expect(equivalent(d | Formula::bot(), d), [&] { return "disjunction with 0 changes " + to_string(d); });
  }
  return t.done();
}

Report dp_admissibility(WitnessJudge judge, const FreeAlgebraLimits& limits, std::uint64_t budget) {
  Tally t(judge == WitnessJudge::Variety ? "freealg.dp-classical" : "freealg.dp-intuitionistic");
  const FiniteHeytingAlgebra b2 = boolean2();
  const std::vector<FiniteHeytingAlgebra> k{b2};
  const MRule dp = dp_rule();
  AdmissibilityVerdict v;
  try {
    v = check_admissible_bounded(dp, k, 2, limits, budget);
  } catch (const CapExceeded& e) {
    t.skip();
    t.note(e.what());
    return t.done();
  }
  if (!t.expect(!v.admissible_up_to_rank() && v.witness.has_value(),
                [] { return std::string("DP not refuted in F_B2(2)"); }))
    return t.done();
  const Substitution& sigma = *v.witness;
  t.note("witness " + to_string(sigma) + " at rank " + std::to_string(v.rank));
  auto theorem = [&](const Formula& f) {
    return judge == WitnessJudge::Variety ? models_formula(b2, f).valid() : is_theorem(f);
  };
  const std::string logic = judge == WitnessJudge::Variety ? "B2" : "the prover";
  const Formula p = Formula::var("p"), q = Formula::var("q");
  t.expect(theorem(apply_substitution(sigma, p | q)), [&] { return logic + " rejects " + to_string(apply_substitution(sigma, p | q)); });
  t.expect(!theorem(apply_substitution(sigma, p)), [&] { return logic + " accepts " + to_string(apply_substitution(sigma, p)); });
  t.expect(!theorem(apply_substitution(sigma, q)), [&] { return logic + " accepts " + to_string(apply_substitution(sigma, q)); });
  return t.done();
}

Report admissibility_oracle(const FreeAlgebraLimits& limits, std::uint64_t budget) {
  Tally t("freealg.admissibility");
  const std::vector<std::vector<FiniteHeytingAlgebra>> varieties{{boolean2()}, {chain(3)}};
  const std::array<const char*, 2> names{"{B2}", "{C3}"};
  const std::array<std::size_t, 2> max_rank{3, 2};  // larger ranks exceed the default caps
  for (std::size_t vi = 0; vi < varieties.size(); ++vi) {
    const auto& k = varieties[vi];
    const std::string nm = names[vi];
    try {
      const auto trivial = check_admissible_bounded(parse_rule("p, q / q, p & q"), k, max_rank[vi], limits, budget);
      t.expect(trivial.admissible_up_to_rank(), [&] { return "p, q / q, p & q refuted over " + nm; });
      const auto absurd = check_admissible_bounded(parse_rule("1 / 0"), k, max_rank[vi], limits, budget);
      t.expect(!absurd.admissible_up_to_rank(), [&] { return "1 / 0 admissible over " + nm; });
    } catch (const CapExceeded&) {
      t.skip();
    }

    std::size_t out_of_range = 0;
    for (const auto& r : corpus::m_rules()) {
      if (vars(r).size() > max_rank[vi]) {
        ++out_of_range;
        continue;
      }
      AdmissibilityVerdict v;
      try {
        v = check_admissible_bounded(r, k, 0, limits, budget);
      } catch (const CapExceeded&) {
        t.skip();
        continue;
      }
      if (v.admissible_up_to_rank()) continue;
      // The witness works in the variety.
      const Substitution& sigma = *v.witness;
      bool premises = true, conclusions = false;
      for (const auto& g : r.premises())
        for (const auto& a : k) premises = premises && models_formula(a, apply_substitution(sigma, g)).valid();
      for (const auto& d : r.conclusions()) {
        bool all = true;
        for (const auto& a : k) all = all && models_formula(a, apply_substitution(sigma, d)).valid();
        conclusions = conclusions || all;
      }
      t.expect(premises && !conclusions, [&] { return "witness " + to_string(sigma) + " fails for " + to_string(r) + " over " + nm; });
      // Refutations persist at higher ranks.
      for (std::size_t rank = v.rank + 1; rank <= max_rank[vi]; ++rank) {
        try {
          const FreeAlgebra f = free_algebra(k, rank, limits);
          const auto h = holds(f.algebra(), r, budget);
          if (!h) {
            t.skip();
            continue;
          }
          t.expect(!*h, [&] { return to_string(r) + " refuted at rank " + std::to_string(v.rank) + " but valid at " + std::to_string(rank) + " over " + nm; });
        } catch (const CapExceeded&) {
          t.skip();
          break;
        }
      }
    }
    if (out_of_range) t.note(std::to_string(out_of_range) + " m-rules over " + nm + " need rank above " + std::to_string(max_rank[vi]));
  }
  return t.done();
}

Report square_mechanism(std::size_t max_size, const std::vector<MRule>& rules, std::uint64_t budget) {
  Tally t("transforms.squares");
  const auto pool = pool_without_degenerate(max_size);
  const MRule dp = dp_rule();
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const FiniteHeytingAlgebra sq = direct_product(pool[i], pool[i]);
    t.expect(models_mrule(sq, dp).refuted(), [&] { return "square of " + label(i, pool[i]) + " validates DP"; });
    for (const auto& r : rules) {
      if (!r.is_single_conclusion()) continue;
      const auto a = holds(pool[i], r, budget);
      if (!a) {
        t.skip();
        continue;
      }
      if (!*a) continue;
      const auto s = holds(sq, r, budget);
      if (!s) {
        t.skip();
        continue;
      }
      t.expect(*s, [&] { return label(i, pool[i]) + " validates " + to_string(r) + " but its square does not"; });
    }
  }
  return t.done();
}

Report bottom_substitution(const std::vector<MRule>& rules) {
  Tally t("transforms.bottom-substitution");
  for (const auto& r : rules) {
    const std::string q = fresh_variable(r);
    const MRule s = apply_substitution(Substitution{{q, Formula::bot()}}, q_reduce(r, q));
    const MRule o = reduce(r);
    t.expect(equivalent(s.premises().front(), o.premises().front()) && equivalent(s.conclusion(), o.conclusion()),
             [&] { return to_string(s) + " is not equivalent to " + to_string(o); });
  }
  return t.done();
}

Report syntax_properties(std::uint64_t seed, std::size_t count) {
  Tally t("syntax.properties");
  const auto fs = corpus::random_formulas(seed, count);
  for (const auto& f : fs) {
    const std::string text = to_string(f);
    t.expect(parse_formula(text) == f, [&] { return "round trip changes " + text; });
  }
  const auto gs = corpus::random_formulas(seed + 1, 3 * count, {.variables = 3, .max_depth = 2});
  for (std::size_t i = 0; i + 2 < gs.size(); i += 3) {
    const Substitution s1{{"p", gs[i]}, {"q", gs[i + 1]}};
    const Substitution s2{{"q", gs[i + 2]}, {"r", gs[i]}};
    const Formula& x = fs[(i / 3) % fs.size()];
    t.expect(apply_substitution(compose(s1, s2), x) == apply_substitution(s2, apply_substitution(s1, x)), [&] { return "composition fails on " + to_string(x); });
  }
  for (std::size_t i = 0; i + 1 < fs.size(); i += 2) {
    const std::vector<std::string> names{"q" + std::to_string(i % 4), "q" + std::to_string((i + 1) % 4), "q0"};
    const MRule r({rename_to(fs[i], names)}, {rename_to(fs[i + 1], {"p", "q1", "q2"})});
    const std::string q = fresh_variable(r);
    const auto vs = vars(r);
    t.expect(!std::binary_search(vs.begin(), vs.end(), q), [&] { return q + " occurs in " + to_string(r); });
  }
  return t.done();
}

Report replay(std::uint64_t seed, std::size_t max_size, const std::vector<MRule>& rules, std::uint64_t budget) {
  Tally t("semantics.replay");
  const auto pool = pool_without_degenerate(max_size);
  const auto images = corpus::random_formulas(seed, 3 * rules.size() * 3, {.variables = 3, .max_depth = 2});
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t ri = 0; ri < rules.size(); ++ri) {
      const MRule& r = rules[ri];
      Verdict v = models_mrule(pool[i], r, budget);
      if (v.outcome == Outcome::BudgetExceeded) {
        t.skip();
        continue;
      }
      if (v.refuted()) {
        t.expect(replays(pool[i], r, *v.refutation), [&] { return label(i, pool[i]) + ": refutation of " + to_string(r) + " does not replay"; });
        continue;
      }
      for (std::size_t k = 0; k < 3; ++k) {
        const std::size_t base = (ri * 3 + k) * 3;
        const Substitution sigma{{"p", images[base]}, {"q", images[base + 1]}, {"r", images[base + 2]}};
        const auto h = holds(pool[i], apply_substitution(sigma, r), budget);
        if (!h) {
          t.skip();
          continue;
        }
        t.expect(*h, [&] { return label(i, pool[i]) + " validates " + to_string(r) + " but not its instance under " + to_string(sigma); });
      }
    }
  return t.done();
}

Report bases(std::size_t pool_size, std::uint64_t budget) {
  Tally t("transforms.bases");
  const MRule dp = dp_rule();
  const MRule harrop = corpus::harrop();

  const Basis empty_m = m_basis_from_s_basis(Basis(BasisKind::Single, {}));
  t.expect(empty_m.rules() == std::vector<MRule>{dp}, [] { return std::string("empty s-basis does not give {DP}"); });
  const Basis hm = m_basis_from_s_basis(Basis(BasisKind::Single, {harrop}));
  t.expect(hm.rules() == std::vector<MRule>{harrop, dp}, [] { return std::string("{Harrop} does not give {Harrop, DP}"); });
  std::vector<MRule> doubled = hm.rules();
  doubled.push_back(dp);
  t.expect(Basis(BasisKind::Multiple, doubled).rules() == hm.rules(), [] { return std::string("DP added twice"); });

  const QReducedBasis dp_s = s_basis_from_m_basis(Basis(BasisKind::Multiple, {dp}));
  t.expect(dp_s.q == "q0" && dp_s.basis.rules() == std::vector<MRule>{parse_rule("(p | q) | q0 / (p | q) | q0")},
           [&] { return "{DP} gives " + (dp_s.basis.rules().empty() ? std::string("{}") : to_string(dp_s.basis.rules()[0])); });

  const auto all = corpus::all_rules();
  const QReducedBasis whole = s_basis_from_m_basis(Basis(BasisKind::Multiple, all));
  const auto used = vars(std::span<const MRule>(all));
  t.expect(!std::binary_search(used.begin(), used.end(), whole.q), [&] { return whole.q + " is not fresh for the corpus"; });
  for (const auto& r : whole.basis.rules())
    t.expect(r.is_single_conclusion(), [&] { return to_string(r) + " is not single-conclusion"; });

  const auto round = s_basis_from_m_basis(m_basis_from_s_basis(Basis(BasisKind::Single, {harrop})));
  t.expect(round.basis.rules().size() == 2 && round.basis.contains(q_reduce(dp, round.q)),
           [] { return std::string("s -> m -> s does not add DP^q exactly once"); });

  const auto pool = pool_without_degenerate(pool_size);
  const PoolSearch harrop_refuter =
      find_refuting_algebra(implies(harrop.premises().front(), harrop.conclusion()), pool, budget);
  if (t.expect(harrop_refuter.found(), [&] { return "no algebra up to size " + std::to_string(pool_size) + " refutes the Harrop implication"; }))
    t.note("smallest algebra refuting the Harrop implication has " + std::to_string(harrop_refuter.witness->algebra.size()) + " elements");

  const std::vector<MRule> dp_harrop{dp, harrop};
  const PoolSearch ind = find_independence_witness(dp_harrop, harrop, pool, budget);
  if (t.expect(ind.found(), [&] { return "no independence witness for Harrop up to size " + std::to_string(pool_size); })) {
    const auto& w = *ind.witness;
    t.expect(is_well_connected(w.algebra) && models_mrule(w.algebra, dp).valid() && replays(w.algebra, harrop, w.refutation),
             [] { return std::string("independence witness for Harrop does not check out"); });
  }
  const PoolSearch der = refute_derivability(std::vector<MRule>{dp}, harrop, pool, budget);
  t.expect(der.found(), [&] { return "no algebra up to size " + std::to_string(pool_size) + " validates DP and refutes Harrop"; });

  const MRule pp = parse_rule("p / p");
  t.expect(!find_independence_witness(std::vector<MRule>{pp}, pp, pool, budget).found(),
           [] { return std::string("p / p has an independence witness"); });
  t.expect(!refute_derivability({}, pp, pool, budget).found(), [] { return std::string("p / p refuted"); });

  const FiniteHeytingAlgebra b4 = direct_product(boolean2(), boolean2());
  std::vector<MRule> valid_in_b4;
  for (const auto& r : corpus::single_rules())
    if (models_mrule(b4, r).valid()) valid_in_b4.push_back(r);
  const std::vector<FiniteHeytingAlgebra> only_b4{b4};
  const PoolSearch b4_witness = refute_derivability(valid_in_b4, dp, only_b4, budget);
  t.expect(b4_witness.found(), [] { return std::string("B2 x B2 does not separate DP from its valid rules"); });
  t.note(std::to_string(valid_in_b4.size()) + " corpus rules valid in B2 x B2 do not derive DP");
  return t.done();
}

std::vector<Report> run_all(const Config& c) {
  c.check();
  const auto all = corpus::all_rules();
  const auto& single = corpus::single_rules();
  const std::size_t big_pool = std::min<std::size_t>(10, c.enumeration_cap);
  std::vector<std::function<Report()>> jobs{
      [&] { return dp_product(); },
      [&] { return product_rules(5, single, c.budget); },
      [&] { return reductions(8, all, c.budget); },
      [&] { return enumeration_counts(c.sizes_min, c.sizes_max, c.enumeration_cap); },
      [&] { return validation(8, c.sabotage); },
      [&] { return free_structure(c.seed, c.free_limits); },
      [&] { return prover_soundness(c.seed, c.random_formulas, 8, big_pool, c.budget); },
      [&] { return dp_admissibility(WitnessJudge::Variety, c.free_limits, c.budget); },
      [&] { return admissibility_oracle(c.free_limits, c.budget); },
      [&] { return square_mechanism(5, single, c.budget); },
      [&] { return bottom_substitution(all); },
      [&] { return syntax_properties(c.seed, c.random_formulas); },
      [&] { return replay(c.seed, 8, all, c.budget); },
      [&] { return bases(big_pool, c.budget); },
  };
  std::vector<std::future<Report>> futures;
  for (auto& job : jobs) futures.push_back(std::async(std::launch::async, job));
  std::vector<Report> out;
  for (auto& f : futures) out.push_back(f.get());
  std::sort(out.begin(), out.end(), [](const Report& a, const Report& b) { return a.name < b.name; });
  return out;
}

std::string format_text(const std::vector<Report>& reports) {
  std::ostringstream out;
  for (const auto& r : reports) {
    out << to_string(r.status()) << ' ' << r.name << " checked=" << r.checked << " skipped=" << r.skipped << '\n';
    for (const auto& n : r.notes) out << "  " << n << '\n';
    if (r.counterexample) out << "  counterexample: " << *r.counterexample << '\n';
  }
  std::size_t passed = 0;
  for (const auto& r : reports) passed += r.status() == Status::Pass;
  out << passed << '/' << reports.size() << " suites passed\n";
  return out.str();
}

std::string format_json_lines(const std::vector<Report>& reports) {
  std::ostringstream out;
  for (const auto& r : reports) {
    nlohmann::json j{{"suite", r.name},
                     {"status", to_string(r.status())},
                     {"checked", r.checked},
                     {"skipped", r.skipped},
                     {"notes", r.notes}};
    j["counterexample"] = r.counterexample ? nlohmann::json(*r.counterexample) : nlohmann::json(nullptr);
    out << j.dump() << '\n';
  }
  return out.str();
}

bool all_passed(const std::vector<Report>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.status() == Status::Pass; });
}

}  // namespace adm::suite
