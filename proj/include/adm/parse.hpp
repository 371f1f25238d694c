#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "adm/formula.hpp"
#include "adm/rule.hpp"

namespace adm {

// Grammar, loosest to tightest:
//   formula := disj ( "->" formula )?
//   disj    := conj ( "|" conj )*
//   conj    := unary ( "&" unary )*
//   unary   := "~" unary | atom
//   atom    := ident | "0" | "1" | "(" formula ")"
//   ident   := [a-zA-Z][a-zA-Z0-9_]*
// Throws ParseError with a 1-based column.
Formula parse_formula(std::string_view text);

// "F1, ..., Fn / G1, ..., Gm"; either side may be empty.
MRule parse_rule(std::string_view text);

struct NumberedRule {
  std::size_t line;
  MRule rule;
};

// One rule per line; '#' starts a comment, blank lines are skipped.
// ParseError::line() is set on failure.
std::vector<NumberedRule> parse_rule_lines(std::istream& in);
std::vector<MRule> parse_rules(std::istream& in);
std::vector<MRule> parse_rules(std::string_view text);

bool is_reserved_word(std::string_view ident);

}  // namespace adm
