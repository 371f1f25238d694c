#include "adm/algebra_io.hpp"

#include <charconv>
#include <sstream>

#include "adm/errors.hpp"

namespace adm {

namespace {

struct Token {
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::vector<Token> tokenize(std::istream& in) {
  std::vector<Token> out;
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i == line.size()) break;
      const std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      out.push_back({line.substr(start, i - start), number, start + 1});
    }
  }
  return out;
}

class BlockReader {
 public:
  explicit BlockReader(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  std::vector<AlgebraBlock> run() {
    std::vector<AlgebraBlock> out;
    while (pos_ < tokens_.size()) {
      const Token& head = next();
      if (head.text == "heyting") out.push_back({head.line, heyting()});
      else if (head.text == "poset") out.push_back({head.line, poset()});
      else fail(head, "expected 'heyting' or 'poset', found '" + head.text + "'");
    }
    return out;
  }

 private:
  HeytingTables heyting() {
    HeytingTables t;
    t.size = number(1, 65535);
    expect("bot");
    t.bot = static_cast<Element>(number(0, t.size - 1));
    expect("top");
    t.top = static_cast<Element>(number(0, t.size - 1));
    for (auto [label, table] : {std::pair{"meet", &t.meet}, {"join", &t.join}, {"imp", &t.imp}}) {
      expect(label);
      table->reserve(t.size * t.size);
      for (std::size_t i = 0; i < t.size * t.size; ++i) table->push_back(static_cast<Element>(number(0, t.size - 1)));
    }
    return t;
  }

  Poset poset() {
    const std::size_t n = number(0, 64);
    std::vector<std::pair<std::size_t, std::size_t>> less;
    while (pos_ < tokens_.size() && tokens_[pos_].text == "<") {
      ++pos_;
      const std::size_t a = number(0, n == 0 ? 0 : n - 1);
      const std::size_t b = number(0, n == 0 ? 0 : n - 1);
      less.emplace_back(a, b);
    }
    try {
      return Poset::from_relations(n, less);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      const Token& t = tokens_[pos_ - 1];
      throw ParseError(e.what(), t.column, t.line);
    }
  }

  const Token& next() {
    if (pos_ >= tokens_.size()) {
      const std::size_t line = tokens_.empty() ? 1 : tokens_.back().line;
      throw ParseError("unexpected end of input", 1, line);
    }
    return tokens_[pos_++];
  }

  void expect(const std::string& word) {
    const Token& t = next();
    if (t.text != word) fail(t, "expected '" + word + "', found '" + t.text + "'");
  }

  std::size_t number(std::size_t lo, std::size_t hi) {
    const Token& t = next();
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size()) fail(t, "expected a number, found '" + t.text + "'");
    if (value < lo || value > hi)
      fail(t, "number " + t.text + " outside " + std::to_string(lo) + ".." + std::to_string(hi));
    return value;
  }

  [[noreturn]] static void fail(const Token& t, const std::string& msg) { throw ParseError(msg, t.column, t.line); }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

std::string describe(std::size_t line, const std::vector<LawViolation>& vs) {
  std::string out = "invalid algebra at line " + std::to_string(line) + ":";
  for (const auto& v : vs) out += " [" + to_string(v.law) + "] " + v.detail + ";";
  return out;
}

}  // namespace

InvalidAlgebra::InvalidAlgebra(std::size_t line, std::vector<LawViolation> violations)
    : Error(describe(line, violations)), line_(line), violations_(std::move(violations)) {}

std::vector<AlgebraBlock> read_algebra_blocks(std::istream& in) { return BlockReader(tokenize(in)).run(); }

std::vector<FiniteHeytingAlgebra> read_algebras(std::istream& in) {
  std::vector<FiniteHeytingAlgebra> out;
  for (auto& block : read_algebra_blocks(in)) {
    if (auto* p = std::get_if<Poset>(&block.content)) {
      out.push_back(from_poset(*p));
      continue;
    }
    auto v = validate(std::move(std::get<HeytingTables>(block.content)));
    if (!v.ok()) throw InvalidAlgebra(block.line, std::move(v.violations));
    out.push_back(std::move(*v.algebra));
  }
  return out;
}

void write_algebra(std::ostream& out, const FiniteHeytingAlgebra& a) {
  const std::size_t n = a.size();
  out << "heyting " << n << "\nbot " << a.bot() << "\ntop " << a.top() << '\n';
  auto table = [&](const char* label, Element (FiniteHeytingAlgebra::*op)(Element, Element) const noexcept) {
    out << label << '\n';
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) out << (y ? " " : "") << (a.*op)(x, y);
      out << '\n';
    }
  };
  table("meet", &FiniteHeytingAlgebra::meet);
  table("join", &FiniteHeytingAlgebra::join);
  table("imp", &FiniteHeytingAlgebra::imp);
}

void write_poset(std::ostream& out, const Poset& p) {
  out << "poset " << p.size() << '\n';
  for (auto [a, b] : p.strict_pairs()) out << "< " << a << ' ' << b << '\n';
}

std::string to_text(const FiniteHeytingAlgebra& a) {
  std::ostringstream os;
  write_algebra(os, a);
  return os.str();
}

}  // namespace adm
