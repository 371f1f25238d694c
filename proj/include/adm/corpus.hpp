#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "adm/formula.hpp"
#include "adm/rule.hpp"

namespace adm::corpus {

// Named rules used throughout the suites.
MRule harrop();
MRule kuznetsov();
MRule mints();

// 50 single-conclusion rules over at most three variables.
const std::vector<MRule>& single_rules();

// Multiple-conclusion rules, including empty-side corner cases.
const std::vector<MRule>& m_rules();

// Every rule of both lists.
std::vector<MRule> all_rules();

// Non-theorems of intuitionistic logic with known finite countermodels.
const std::vector<Formula>& curated_non_theorems();

struct RandomFormulaOptions {
  std::size_t variables = 3;
  std::size_t max_depth = 4;
};

// Deterministic for a given seed on every platform: the draws use raw
// mt19937_64 output reduced modulo, never the implementation-defined
// distributions.
class FormulaGenerator {
 public:
  explicit FormulaGenerator(std::uint64_t seed, RandomFormulaOptions options = {});
  Formula next();

 private:
  std::uint64_t draw(std::uint64_t bound) { return rng_() % bound; }
  Formula grow(std::size_t depth);

  std::mt19937_64 rng_;
  RandomFormulaOptions options_;
};

std::vector<Formula> random_formulas(std::uint64_t seed, std::size_t count, RandomFormulaOptions options = {});

}  // namespace adm::corpus
