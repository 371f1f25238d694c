#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "adm/algebra.hpp"
#include "adm/freealg.hpp"
#include "adm/semantics.hpp"

namespace adm {

enum class OutputFormat { Text, JsonLines };

struct Config {
  std::size_t enumeration_cap = kDefaultEnumerationCap;
  std::uint64_t budget = kDefaultBudget;
  FreeAlgebraLimits free_limits{};
  std::size_t product_cap = kDefaultProductCap;
  std::size_t rank_bound = 0;  // 0: max(|vars(r)|, 3)
  std::uint64_t seed = 20140601;
  OutputFormat format = OutputFormat::Text;

  // verify-suite knobs
  std::size_t sizes_min = 1, sizes_max = 6;  // enumeration-count window
  std::size_t random_formulas = 500;
  bool sabotage = false;  // corrupt one imp entry of the validate fixture

  void check() const;  // throws Error on non-positive caps
};

// ADM_ENUM_CAP, ADM_BUDGET, ADM_FREE_CAP, ADM_PRODUCT_CAP, ADM_SEED.
// Unset variables leave the field alone; malformed ones throw Error.
void apply_environment(Config& c);

}  // namespace adm
