// adm: admissible rules and m-rules over finite Heyting algebras.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "adm/algebra_io.hpp"
#include "adm/config.hpp"
#include "adm/errors.hpp"
#include "adm/freealg.hpp"
#include "adm/parse.hpp"
#include "adm/prover.hpp"
#include "adm/semantics.hpp"
#include "adm/suite.hpp"
#include "adm/transforms.hpp"

namespace {

using namespace adm;
using nlohmann::json;

enum Exit : int { kPass = 0, kLogical = 1, kUsage = 2, kBudget = 3 };

// Errors raised while reading a named file.
struct FileError {
  std::string path;
  std::string message;
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path);
  if (!in) throw FileError{path, "cannot open"};
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<MRule> read_rule_file(const std::string& path) {
  std::istringstream in(slurp(path));
  try {
    return parse_rules(in);
  } catch (const ParseError& e) {
    throw FileError{path, e.what()};
  }
}

std::vector<FiniteHeytingAlgebra> read_algebra_file(const std::string& path) {
  std::istringstream in(slurp(path));
  try {
    return read_algebras(in);
  } catch (const ParseError& e) {
    throw FileError{path, e.what()};
  } catch (const InvalidAlgebra& e) {
    throw FileError{path, e.what()};
  }
}

MRule rule_argument(const std::string& text) {
  try {
    return parse_rule(text);
  } catch (const ParseError& e) {
    throw FileError{"<argument>", e.what()};
  }
}

struct Pool {
  std::string algebras;
  std::size_t enumerate = 0;

  void add_options(CLI::App* app) {
    auto* f = app->add_option("--algebras", algebras, "algebra file (heyting/poset blocks)");
    auto* e = app->add_option("--enumerate", enumerate, "all algebras up to this size");
    f->excludes(e);
  }
  std::vector<FiniteHeytingAlgebra> load(const Config& c) const {
    if (!algebras.empty()) return read_algebra_file(algebras);
    if (enumerate > 0) return adm::enumerate(enumerate, {.include_degenerate = false, .cap = c.enumeration_cap});
    throw CLI::ValidationError("one of --algebras or --enumerate is required");
  }
};

json refutation_json(const Refutation& r) {
  json vals = json::object();
  for (const auto& [k, v] : r.valuation.values) vals[k] = v;
  return {{"valuation", vals}, {"premise_values", r.premise_values}, {"conclusion_values", r.conclusion_values}};
}

void emit_algebras(const std::string& path, const std::vector<FiniteHeytingAlgebra>& as) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw FileError{path, "cannot write"};
  for (const auto& a : as) write_algebra(out, a);
}

struct Globals {
  Config config;
  bool json = false;
};

int cmd_parse(const Globals& g, const std::string& file, const std::string& formula) {
  if (!formula.empty()) {
    Formula f;
    try {
      f = parse_formula(formula);
    } catch (const ParseError& e) {
      throw FileError{"<argument>", e.what()};
    }
    if (g.json)
      std::cout << json{{"formula", to_string(f)}, {"vars", vars(f)}}.dump() << '\n';
    else
      std::cout << to_string(f) << '\n';
    return kPass;
  }
  for (const auto& r : read_rule_file(file)) {
    if (g.json)
      std::cout << json{{"rule", to_string(r)}, {"single_conclusion", r.is_single_conclusion()}}.dump() << '\n';
    else
      std::cout << to_string(r) << '\n';
  }
  return kPass;
}

int cmd_check(const Globals& g, const std::string& rules_file, const std::string& formula, const Pool& pool,
              const std::string& emit) {
  std::vector<MRule> rules;
  if (!formula.empty()) {
    try {
      rules.push_back(as_rule(parse_formula(formula)));
    } catch (const ParseError& e) {
      throw FileError{"<argument>", e.what()};
    }
  } else {
    rules = read_rule_file(rules_file);
  }
  const auto algebras = pool.load(g.config);
  int status = kPass;
  std::vector<FiniteHeytingAlgebra> refuters;
  for (const auto& r : rules) {
    const PoolSearch s = find_refuting_algebra(r, algebras, g.config.budget);
    std::string verdict = s.found() ? "invalid" : s.skipped ? "budget-exceeded" : "valid";
    if (s.found()) {
      status = std::max<int>(status, kLogical);
      refuters.push_back(s.witness->algebra);
    } else if (s.skipped) {
      status = kBudget;
    }
    if (g.json) {
      json j{{"rule", to_string(r)}, {"verdict", verdict}, {"skipped", s.skipped}};
      if (s.found()) {
        j["algebra_index"] = s.witness->index;
        j["algebra_size"] = s.witness->algebra.size();
        j["refutation"] = refutation_json(s.witness->refutation);
      }
      std::cout << j.dump() << '\n';
    } else {
      std::cout << verdict << ": " << to_string(r) << '\n';
      if (s.found()) {
        std::cout << "  algebra #" << s.witness->index << " (size " << s.witness->algebra.size() << "), "
                  << to_string(s.witness->refutation.valuation) << '\n';
        if (emit.empty()) std::cout << to_text(s.witness->algebra);
      }
      if (s.skipped) std::cout << "  " << s.skipped << " algebras skipped (budget)\n";
    }
  }
  emit_algebras(emit, refuters);
  return status;
}

int cmd_enumerate(const Globals& g, std::size_t n, bool degenerate, bool connected_only, bool counts_only) {
  const auto algebras = adm::enumerate(n, {.include_degenerate = degenerate, .cap = g.config.enumeration_cap});
  std::vector<std::size_t> counts(n + 1, 0);
  for (const auto& a : algebras) {
    const bool wc = static_cast<bool>(is_well_connected(a));
    if (connected_only && !wc) continue;
    ++counts[a.size()];
    if (counts_only) continue;
    if (g.json)
      std::cout << json{{"size", a.size()}, {"well_connected", wc}, {"text", to_text(a)}}.dump() << '\n';
    else
      std::cout << "# size " << a.size() << (wc ? ", well-connected" : "") << '\n' << to_text(a);
  }
  if (counts_only) {
    if (g.json) {
      std::cout << json{{"counts", std::vector<std::size_t>(counts.begin() + 1, counts.end())}}.dump() << '\n';
    } else {
      for (std::size_t i = 1; i <= n; ++i) std::cout << i << ' ' << counts[i] << '\n';
    }
  }
  return kPass;
}

int cmd_free(const Globals& g, const std::string& algebras_file, std::size_t rank, bool tables) {
  const auto ks = read_algebra_file(algebras_file);
  const FreeAlgebra f = free_algebra(ks, rank, g.config.free_limits);
  const bool wc = static_cast<bool>(is_well_connected(f.algebra()));
  if (g.json) {
    json elems = json::array();
    for (Element x = 0; x < f.size(); ++x)
      elems.push_back({{"element", x}, {"trace", to_string(f.trace(x))}});
    std::cout << json{{"rank", rank}, {"size", f.size()}, {"well_connected", wc}, {"generators", f.generators()}, {"elements", elems}}
                     .dump()
              << '\n';
  } else {
    std::cout << "rank " << rank << ", " << f.size() << " elements" << (wc ? ", well-connected" : "") << '\n';
    for (Element x = 0; x < f.size(); ++x) std::cout << "  " << x << ": " << to_string(f.trace(x)) << '\n';
    if (tables) std::cout << to_text(f.algebra());
  }
  return kPass;
}

int cmd_admissible(const Globals& g, const std::string& rules_file, const std::string& algebras_file, std::size_t rank) {
  const auto rules = read_rule_file(rules_file);
  const auto ks = read_algebra_file(algebras_file);
  int status = kPass;
  for (const auto& r : rules) {
    const std::size_t bound = rank ? rank : (g.config.rank_bound ? g.config.rank_bound : default_rank_bound(r));
    const AdmissibilityVerdict v = check_admissible_bounded(r, ks, bound, g.config.free_limits, g.config.budget);
    const std::string verdict = v.admissible_up_to_rank() ? "admissible-up-to-rank" : "not-admissible";
    if (!v.admissible_up_to_rank()) status = std::max<int>(status, kLogical);
    if (g.json) {
      json j{{"rule", to_string(r)}, {"verdict", verdict}, {"rank", v.rank}, {"requested_rank", v.requested_rank},
             {"stopped_by_cap", v.stopped_by_cap}};
      if (v.witness) j["substitution"] = to_string(*v.witness);
      std::cout << j.dump() << '\n';
    } else {
      std::cout << verdict << ' ' << v.rank << ": " << to_string(r) << '\n';
      if (v.witness) std::cout << "  substitution " << to_string(*v.witness) << '\n';
      if (v.stopped_by_cap) std::cout << "  stopped by cap before rank " << v.requested_rank << '\n';
    }
  }
  return status;
}

int report_pool_search(const Globals& g, const PoolSearch& s, const MRule& r, const std::string& emit) {
  if (g.json) {
    json j{{"rule", to_string(r)}, {"found", s.found()}, {"skipped", s.skipped}};
    if (s.found()) {
      j["algebra_index"] = s.witness->index;
      j["algebra_size"] = s.witness->algebra.size();
      j["refutation"] = refutation_json(s.witness->refutation);
    }
    std::cout << j.dump() << '\n';
  } else if (s.found()) {
    std::cout << "witness: algebra #" << s.witness->index << " (size " << s.witness->algebra.size() << "), "
              << to_string(s.witness->refutation.valuation) << '\n';
    if (emit.empty()) std::cout << to_text(s.witness->algebra);
  } else {
    std::cout << "no witness (inconclusive)" << (s.skipped ? ", " + std::to_string(s.skipped) + " algebras skipped" : "") << '\n';
  }
  if (s.found()) emit_algebras(emit, {s.witness->algebra});
  if (s.found()) return kPass;
  return s.skipped ? kBudget : kLogical;
}

int cmd_refute(const Globals& g, const std::string& basis_file, const std::string& rule, const Pool& pool,
               const std::string& emit) {
  const auto rules = read_rule_file(basis_file);
  const MRule r = rule_argument(rule);
  return report_pool_search(g, refute_derivability(rules, r, pool.load(g.config), g.config.budget), r, emit);
}

int cmd_independence(const Globals& g, const std::string& basis_file, const std::string& rule, const Pool& pool,
                     const std::string& emit) {
  const auto rules = read_rule_file(basis_file);
  const MRule r = rule_argument(rule);
  return report_pool_search(g, find_independence_witness(rules, r, pool.load(g.config), g.config.budget), r, emit);
}

int cmd_transform(const Globals& g, const std::string& to, const std::string& file, const std::string& output) {
  const auto rules = read_rule_file(file);
  std::ostringstream out;
  json meta;
  if (to == "m") {
    const Basis m = m_basis_from_s_basis(Basis(BasisKind::Single, rules));
    out << "# m-basis\n";
    for (const auto& r : m.rules()) out << to_string(r) << '\n';
    meta = {{"kind", "m"}, {"rules", m.rules().size()}};
  } else {
    const QReducedBasis s = s_basis_from_m_basis(Basis(BasisKind::Multiple, rules));
    out << "# s-basis, fresh variable " << s.q << '\n';
    for (const auto& r : s.basis.rules()) out << to_string(r) << '\n';
    meta = {{"kind", "s"}, {"rules", s.basis.rules().size()}, {"q", s.q}};
  }
  if (output.empty()) {
    std::cout << out.str();
  } else {
    std::ofstream f(output);
    if (!f) throw FileError{output, "cannot write"};
    f << out.str();
  }
  if (g.json) std::cerr << meta.dump() << '\n';
  return kPass;
}

int cmd_prove(const Globals& g, const std::string& formula, const std::vector<std::string>& gamma) {
  Formula goal;
  std::vector<Formula> hyps;
  try {
    goal = parse_formula(formula);
    for (const auto& h : gamma) hyps.push_back(parse_formula(h));
  } catch (const ParseError& e) {
    throw FileError{"<argument>", e.what()};
  }
  const bool ok = hyps.empty() ? is_theorem(goal) : proves(hyps, goal);
  if (g.json)
    std::cout << json{{"formula", to_string(goal)}, {"theorem", ok}}.dump() << '\n';
  else
    std::cout << (ok ? "theorem" : "not a theorem") << '\n';
  return ok ? kPass : kLogical;
}

int cmd_verify(Globals& g, const std::string& sizes, bool sabotage) {
  if (!sizes.empty()) {
    const auto dots = sizes.find("..");
    try {
      if (dots == std::string::npos) {
        g.config.sizes_min = 1;
        g.config.sizes_max = std::stoul(sizes);
      } else {
        g.config.sizes_min = std::stoul(sizes.substr(0, dots));
        g.config.sizes_max = std::stoul(sizes.substr(dots + 2));
      }
    } catch (const std::exception&) {
      throw CLI::ValidationError("--sizes expects N or LO..HI");
    }
  }
  g.config.sabotage = sabotage;
  const auto reports = suite::run_all(g.config);
  std::cout << (g.json ? suite::format_json_lines(reports) : suite::format_text(reports));
  if (suite::all_passed(reports)) return kPass;
  for (const auto& r : reports)
    if (r.status() == suite::Status::Fail) return kLogical;
  return kBudget;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"adm: admissible rules and m-rules over finite Heyting algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  try {
    apply_environment(g.config);
  } catch (const Error& e) {
    std::cerr << "adm: " << e.what() << '\n';
    return kUsage;
  }
  app.add_option("--seed", g.config.seed, "random seed");
  app.add_option("--budget", g.config.budget, "valuation budget per check");
  app.add_flag("--json", g.json, "JSON-lines output");

  std::string file, formula, algebras_file, rule, emit, output, to, sizes;
  std::size_t n = 0, rank = 0;
  bool degenerate = false, connected = false, counts = false, tables = false, sabotage = false;
  std::vector<std::string> gamma;
  Pool pool;

  auto* parse = app.add_subcommand("parse", "parse and print rules or a formula");
  parse->add_option("file", file, "rule file ('-' for stdin)");
  parse->add_option("--formula", formula, "a single formula");

  auto* check = app.add_subcommand("check", "validity of rules in algebras");
  check->add_option("rules", file, "rule file");
  check->add_option("--formula", formula, "check a formula instead");
  pool.add_options(check);
  check->add_option("--emit", emit, "write refuting algebras to this file");

  auto* enumerate = app.add_subcommand("enumerate", "finite Heyting algebras up to isomorphism");
  enumerate->add_option("n", n, "maximum size")->required();
  enumerate->add_flag("--degenerate", degenerate, "include the one-element algebra");
  enumerate->add_flag("--well-connected", connected, "only well-connected algebras");
  enumerate->add_flag("--counts", counts, "print counts per size only");

  auto* free = app.add_subcommand("free", "free algebra of the variety generated by some algebras");
  free->add_option("--algebras", algebras_file, "generating algebras")->required();
  free->add_option("--rank", rank, "number of generators")->required();
  free->add_flag("--tables", tables, "also print the operation tables");

  auto* admissible = app.add_subcommand("admissible", "bounded admissibility via free algebras");
  admissible->add_option("rules", file, "rule file")->required();
  admissible->add_option("--algebras", algebras_file, "generating algebras")->required();
  admissible->add_option("--rank", rank, "rank bound (default max(|vars|, 3))");

  auto* refute = app.add_subcommand("refute-derivability", "an algebra validating a rule set and refuting a rule");
  refute->add_option("basis", file, "rule file")->required();
  refute->add_option("--rule", rule, "target rule")->required();
  pool.add_options(refute);
  refute->add_option("--emit", emit, "write the witness algebra to this file");

  auto* transform = app.add_subcommand("transform", "convert between s-bases and m-bases");
  transform->add_option("--to", to, "target kind")->required()->check(CLI::IsMember({"m", "s"}));
  transform->add_option("basis", file, "rule file")->required();
  transform->add_option("-o,--output", output, "output file");

  auto* independence = app.add_subcommand("independence", "well-connected witness that a rule is independent");
  independence->add_option("basis", file, "rule file")->required();
  independence->add_option("--rule", rule, "rule of the basis")->required();
  pool.add_options(independence);
  independence->add_option("--emit", emit, "write the witness algebra to this file");

  auto* prove = app.add_subcommand("prove", "intuitionistic theoremhood");
  prove->add_option("formula", formula, "formula")->required();
  prove->add_option("--from", gamma, "hypotheses");

  auto* verify = app.add_subcommand("verify-suite", "run the property suites");
  verify->add_option("--sizes", sizes, "enumeration-count window, N or LO..HI");
  verify->add_flag("--sabotage", sabotage, "corrupt the validate fixture");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    g.config.check();
    if (*parse) {
      if (file.empty() && formula.empty()) throw CLI::ValidationError("parse needs a file or --formula");
      return cmd_parse(g, file, formula);
    }
    if (*check) {
      if (file.empty() && formula.empty()) throw CLI::ValidationError("check needs a rule file or --formula");
      return cmd_check(g, file, formula, pool, emit);
    }
    if (*enumerate) return cmd_enumerate(g, n, degenerate, connected, counts);
    if (*free) return cmd_free(g, algebras_file, rank, tables);
    if (*admissible) return cmd_admissible(g, file, algebras_file, rank);
    if (*refute) return cmd_refute(g, file, rule, pool, emit);
    if (*transform) return cmd_transform(g, to, file, output);
    if (*independence) return cmd_independence(g, file, rule, pool, emit);
    if (*prove) return cmd_prove(g, formula, gamma);
    if (*verify) return cmd_verify(g, sizes, sabotage);
  } catch (const FileError& e) {
    std::cerr << e.path << ": " << e.message << '\n';
    return kUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "adm: " << e.what() << '\n';
    return kUsage;
  } catch (const CapExceeded& e) {
    std::cerr << "adm: " << e.what() << '\n';
    return kBudget;
  } catch (const Error& e) {
    std::cerr << "adm: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
