#pragma once

#include <cstddef>
#include <istream>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "adm/algebra.hpp"
#include "adm/errors.hpp"

namespace adm {

// Text formats, any number of blocks per file, '#' comments:
//
//   heyting <n>             poset <n>
//   bot <i>                 < <i> <j>
//   top <j>                 ...
//   meet  (n rows of n)
//   join  (n rows of n)
//   imp   (n rows of n)
struct AlgebraBlock {
  std::size_t line;  // line of the header
  std::variant<HeytingTables, Poset> content;
};

// Syntax only; throws ParseError with the line number.
std::vector<AlgebraBlock> read_algebra_blocks(std::istream& in);

class InvalidAlgebra : public Error {
 public:
  InvalidAlgebra(std::size_t line, std::vector<LawViolation> violations);
  std::size_t line() const noexcept { return line_; }
  const std::vector<LawViolation>& violations() const noexcept { return violations_; }

 private:
  std::size_t line_;
  std::vector<LawViolation> violations_;
};

// Parses and validates every block; posets become their down-set algebras.
std::vector<FiniteHeytingAlgebra> read_algebras(std::istream& in);

void write_algebra(std::ostream& out, const FiniteHeytingAlgebra& a);
void write_poset(std::ostream& out, const Poset& p);
std::string to_text(const FiniteHeytingAlgebra& a);

}  // namespace adm
