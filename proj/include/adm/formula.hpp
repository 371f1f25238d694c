#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace adm {

enum class Op : std::uint8_t { Var, Bot, Top, Not, And, Or, Imp };

// Immutable propositional formula over {&, |, ->, ~, 0, 1}. Copies share
// structure; equality is syntactic tree equality.
class Formula {
 public:
  struct Node;

  Formula();  // 0

  static Formula var(std::string name);
  static Formula bot();
  static Formula top();

  Op op() const noexcept;
  bool is_var() const noexcept { return op() == Op::Var; }
  // Variable name; empty for non-variables.
  const std::string& name() const noexcept;
  // Children: lhs() is the operand of Not, rhs() is only valid for binary ops.
  const Formula& lhs() const;
  const Formula& rhs() const;

  std::size_t hash() const noexcept;
  std::size_t size() const noexcept;
  std::size_t depth() const noexcept;

  // Structural total order, consistent with ==. Not the printed-form order.
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);
  friend bool operator==(const Formula& a, const Formula& b);

  friend Formula operator~(Formula a);
  friend Formula operator&(Formula a, Formula b);
  friend Formula operator|(Formula a, Formula b);
  friend Formula implies(Formula a, Formula b);
  friend std::strong_ordering compare_nodes(const Node* a, const Node* b);

 private:
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula null();
  static const std::shared_ptr<const Node>& constant(bool top);
  static Formula make(Op op, std::string name, Formula lhs, Formula rhs);

  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const noexcept { return f.hash(); }
};

// Sorted, duplicate-free variable names.
std::vector<std::string> vars(const Formula& f);
void collect_vars(const Formula& f, std::vector<std::string>& out);

// ASCII text form; precedence ~ > & > | > ->, & and | left-assoc, -> right-assoc.
std::string to_string(const Formula& f);

// Canonical n-ary folds: operands sorted by printed form, deduplicated,
// folded left. Empty conjunction is 1, empty disjunction is 0.
Formula big_and(std::span<const Formula> fs);
Formula big_or(std::span<const Formula> fs);

// Sort by printed form and drop syntactic duplicates.
std::vector<Formula> canonical_set(std::vector<Formula> fs);

}  // namespace adm
