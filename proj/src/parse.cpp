#include "adm/parse.hpp"

#include <array>
#include <cctype>
#include <sstream>

#include "adm/errors.hpp"

namespace adm {

ParseError::ParseError(std::string message, std::size_t column, std::size_t line)
    : Error((line ? "line " + std::to_string(line) + ", " : std::string()) + "column " +
            std::to_string(column) + ": " + message),
      message_(std::move(message)),
      column_(column),
      line_(line) {}

ParseError ParseError::at_line(std::size_t line) const { return ParseError(message_, column_, line); }

bool is_reserved_word(std::string_view ident) {
  static constexpr std::array<std::string_view, 4> reserved{"bot", "false", "top", "true"};
  for (auto w : reserved)
    if (ident == w) return true;
  return false;
}

namespace {

class FormulaParser {
 public:
  FormulaParser(std::string_view text, std::size_t column_offset)
      : text_(text), offset_(column_offset) {}

  Formula parse_all() {
    skip_ws();
    if (at_end()) fail("expected a formula");
    Formula f = implication();
    skip_ws();
    if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return f;
  }

 private:
  Formula implication() {
    Formula lhs = disjunction();
    skip_ws();
    if (accept("->")) return implies(std::move(lhs), implication());
    return lhs;
  }

  Formula disjunction() {
    Formula acc = conjunction();
    for (skip_ws(); accept("|"); skip_ws()) acc = std::move(acc) | conjunction();
    return acc;
  }

  Formula conjunction() {
    Formula acc = unary();
    for (skip_ws(); accept("&"); skip_ws()) acc = std::move(acc) & unary();
    return acc;
  }

  Formula unary() {
    skip_ws();
    if (accept("~")) return ~unary();
    return atom();
  }

  Formula atom() {
    skip_ws();
    if (at_end()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      const std::size_t open = pos_;
      ++pos_;
      Formula f = implication();
      skip_ws();
      if (!accept(")")) {
        if (at_end()) fail("unclosed '(' opened at column " + std::to_string(open + offset_ + 1));
        fail(std::string("expected ')' but found '") + text_[pos_] + "'");
      }
      return f;
    }
    if (c == '0' || c == '1') {
      ++pos_;
      if (!at_end() && std::isalnum(static_cast<unsigned char>(text_[pos_])))
        fail("constants are 0 and 1; identifiers must start with a letter", pos_ - 1);
      return c == '0' ? Formula::bot() : Formula::top();
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string_view ident = text_.substr(start, pos_ - start);
      if (is_reserved_word(ident))
        fail("'" + std::string(ident) + "' is a reserved word; use 0 or 1 for constants", start);
      return Formula::var(std::string(ident));
    }
    fail(std::string("unexpected '") + c + "'");
  }

  bool accept(std::string_view tok) {
    if (text_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }

  [[noreturn]] void fail(const std::string& msg) const { fail(msg, pos_); }
  [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
    throw ParseError(msg, offset_ + at + 1);
  }

  std::string_view text_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

bool blank(std::string_view s) {
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

std::vector<Formula> parse_side(std::string_view text, std::size_t offset) {
  std::vector<Formula> out;
  if (blank(text)) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view piece = text.substr(start, comma == std::string_view::npos ? comma : comma - start);
    if (blank(piece)) throw ParseError("empty formula in list", offset + start + 1);
    out.push_back(FormulaParser(piece, offset + start).parse_all());
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

Formula parse_formula(std::string_view text) { return FormulaParser(text, 0).parse_all(); }

MRule parse_rule(std::string_view text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) throw ParseError("missing '/' between premises and conclusions", text.size() + 1);
  if (const std::size_t second = text.find('/', slash + 1); second != std::string_view::npos)
    throw ParseError("more than one '/'", second + 1);
  return MRule(parse_side(text.substr(0, slash), 0), parse_side(text.substr(slash + 1), slash + 1));
}

std::vector<NumberedRule> parse_rule_lines(std::istream& in) {
  std::vector<NumberedRule> out;
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (blank(line)) continue;
    try {
      out.push_back({number, parse_rule(line)});
    } catch (const ParseError& e) {
      throw e.at_line(number);
    }
  }
  return out;
}

std::vector<MRule> parse_rules(std::istream& in) {
  std::vector<MRule> out;
  for (auto& nr : parse_rule_lines(in)) out.push_back(std::move(nr.rule));
  return out;
}

std::vector<MRule> parse_rules(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_rules(in);
}

}  // namespace adm
