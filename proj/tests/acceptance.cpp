// Acceptance criteria, one PASS/FAIL line each.
//
//   acceptance [--only N] [--cli PATH]

#include <array>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "adm/corpus.hpp"
#include "adm/suite.hpp"

using namespace adm;

namespace {

struct Result {
  bool pass;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  std::optional<double> limit_seconds;
  std::function<Result()> run;
};

Result from(const suite::Report& r) {
  std::string detail = r.name + " checked=" + std::to_string(r.checked) + " skipped=" + std::to_string(r.skipped);
  if (r.counterexample) detail += "; counterexample: " + *r.counterexample;
  return {r.status() == suite::Status::Pass, detail};
}

std::optional<std::string> capture(const std::string& command) {
  FILE* pipe = ::popen(command.c_str(), "r");
  if (!pipe) return std::nullopt;
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = ::pclose(pipe);
  if (status == -1) return std::nullopt;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  std::string cli;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc)
      only = std::atoi(argv[++i]);
    else if (std::strcmp(argv[i], "--cli") == 0 && i + 1 < argc)
      cli = argv[++i];
    else {
      std::cerr << "usage: acceptance [--only N] [--cli PATH]\n";
      return 2;
    }
  }

  const Config config;
  const auto& single = corpus::single_rules();
  const auto all = corpus::all_rules();

  const std::vector<Criterion> criteria{
      {1, "DP holds in B2 and fails in B2 x B2 with p=(1,0), q=(0,1)", 1.0, [] { return from(suite::dp_product()); }},
      {2, "products: (A |= r and B |= r) iff A x B |= r, sizes <= 5, 50 rules", 60.0,
       [&] {
         if (single.size() != 50) return Result{false, "corpus has " + std::to_string(single.size()) + " rules"};
         return from(suite::product_rules(5, single, config.budget));
       }},
      {3, "well-connected A <= 8: A |= R iff A |= R° iff A |= R^q; B2 x B2 separates DP", 300.0,
       [&] { return from(suite::reductions(8, all, config.budget)); }},
      {4, "enumeration counts 1, 1, 1, 2, 3, 5 for sizes 1..6", std::nullopt,
       [] { return from(suite::enumeration_counts(1, 6, kDefaultEnumerationCap)); }},
      {5, "|F_B2(1)| = 4, |F_B2(2)| = 16, |F_C3(1)| = 6", 10.0,
       [&] { return from(suite::free_structure(config.seed, config.free_limits)); }},
      {6, "prover vs algebras <= 8: 500 random formulas, 20 curated non-theorems", 300.0,
       [&] { return from(suite::prover_soundness(config.seed, 500, 8, 8, config.budget)); }},
      {7, "DP over {B2} at rank 2: prover accepts s(p | q), rejects s(p) and s(q)", std::nullopt,
       [&] { return from(suite::dp_admissibility(suite::WitnessJudge::Intuitionistic, config.free_limits, config.budget)); }},
      {8, "A <= 5 non-degenerate, r valid in A: A x A |= r and A x A refutes DP", std::nullopt,
       [&] { return from(suite::square_mechanism(5, single, config.budget)); }},
      {9, "{q := 0} applied to R^q is provably equivalent to R°", std::nullopt,
       [&] { return from(suite::bottom_substitution(all)); }},
      {10, "verify-suite twice gives byte-identical reports", std::nullopt,
       [&] {
         if (cli.empty()) return Result{false, "no --cli path given"};
         const std::string cmd = "'" + cli + "' verify-suite 2>&1";
         const auto a = capture(cmd), b = capture(cmd);
         if (!a || !b) return Result{false, "could not run " + cli};
         if (a->empty()) return Result{false, "empty report"};
         return Result{*a == *b, std::to_string(a->size()) + " bytes" + (*a == *b ? ", identical" : ", different")};
       }},
  };

  bool ok = true;
  bool ran = false;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    ran = true;
    const auto t0 = std::chrono::steady_clock::now();
    Result o = c.run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_seconds && secs >= *c.limit_seconds) {
      o.pass = false;
      o.detail += "; over the time limit";
    }
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " [" << timing
              << (c.limit_seconds ? " < " + std::to_string(static_cast<int>(*c.limit_seconds)) + "s" : std::string()) << "] "
              << o.detail << '\n';
    ok = ok && o.pass;
  }
  if (!ran) {
    std::cerr << "no criterion " << only << '\n';
    return 2;
  }
  return ok ? 0 : 1;
}
