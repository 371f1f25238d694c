#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "adm/config.hpp"
#include "adm/rule.hpp"

namespace adm::suite {

enum class Status { Pass, Fail, Skip };

std::string to_string(Status s);

struct Report {
  std::string name;
  std::size_t checked = 0;
  std::size_t skipped = 0;  // cases abandoned for budget or cap reasons
  std::vector<std::string> notes;
  std::optional<std::string> counterexample;  // the first one found

  Status status() const noexcept;
};

// B2 validates DP, B2 x B2 refutes it with p=(1,0), q=(0,1).
Report dp_product();

// (A |= r and B |= r) iff A x B |= r over all unordered pairs of the
// enumeration up to `max_size` (degenerate algebra included).
Report product_rules(std::size_t max_size, const std::vector<MRule>& rules, std::uint64_t budget);

// A |= R iff A |= R° iff A |= R^q on every non-degenerate well-connected
// algebra up to `max_size`, plus a non-well-connected separation of R from R°.
Report reductions(std::size_t max_size, const std::vector<MRule>& rules, std::uint64_t budget);

// Isomorphism-class counts of enumerate() against a brute-force poset
// oracle (sizes up to 6) and the reference table beyond.
Report enumeration_counts(std::size_t lo, std::size_t hi, std::size_t cap);

// Every enumerated algebra re-validates, well-connectedness agrees with a
// brute-force scan, M3 and N5 are rejected, and no two outputs are isomorphic.
// `sabotage` corrupts one implication entry of the 3-chain fixture.
Report validation(std::size_t max_size, bool sabotage);

// |F_B2(1)| = 4, |F_B2(2)| = 16, |F_C3(1)| = 6 with closure and generator checks,
// the formula bridge and the universal mapping property for F_B2(1).
Report free_structure(std::uint64_t seed, const FreeAlgebraLimits& limits);

// Random prover-accepted formulas are valid on enumerate(random_pool);
// curated non-theorems are rejected and refuted within enumerate(curated_pool).
Report prover_soundness(std::uint64_t seed, std::size_t count, std::size_t random_pool, std::size_t curated_pool,
                        std::uint64_t budget);

// The DP verdict over {B2} at rank 2 with its substitution witness judged by
// `theorem` (either validity in B2 or intuitionistic provability).
enum class WitnessJudge { Variety, Intuitionistic };
Report dp_admissibility(WitnessJudge judge, const FreeAlgebraLimits& limits, std::uint64_t budget);

// Admissibility oracle sanity: trivial rules, 1/0, monotonicity in the rank.
Report admissibility_oracle(const FreeAlgebraLimits& limits, std::uint64_t budget);

// A |= r implies A x A |= r for single-conclusion r, and A x A refutes DP.
Report square_mechanism(std::size_t max_size, const std::vector<MRule>& rules, std::uint64_t budget);

// {q := 0} applied to R^q is provably equivalent, side by side, to R°.
Report bottom_substitution(const std::vector<MRule>& rules);

// Print/parse round trip, substitution composition, fresh variables.
Report syntax_properties(std::uint64_t seed, std::size_t count);

// Refutation replay and the semantic shadow of substitution closure.
Report replay(std::uint64_t seed, std::size_t max_size, const std::vector<MRule>& rules, std::uint64_t budget);

// Basis transformations and independence witnesses.
Report bases(std::size_t pool_size, std::uint64_t budget);

// Every suite of verify-suite, sorted by name.
std::vector<Report> run_all(const Config& config);

std::string format_text(const std::vector<Report>& reports);
std::string format_json_lines(const std::vector<Report>& reports);

bool all_passed(const std::vector<Report>& reports);

}  // namespace adm::suite
