#include "adm/formula.hpp"

#include <algorithm>
#include <utility>

#include "adm/errors.hpp"

namespace adm {

struct Formula::Node {
  Op op;
  std::string name;
  Formula lhs;
  Formula rhs;
  std::size_t hash;
  std::size_t size;
  std::size_t depth;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

bool is_binary(Op op) { return op == Op::And || op == Op::Or || op == Op::Imp; }

}  // namespace

const std::shared_ptr<const Formula::Node>& Formula::constant(bool top) {
  static const auto bot_node = std::make_shared<const Node>(
      Node{Op::Bot, {}, null(), null(), mix(0, 1), 1, 0});
  static const auto top_node = std::make_shared<const Node>(
      Node{Op::Top, {}, null(), null(), mix(0, 2), 1, 0});
  return top ? top_node : bot_node;
}

Formula Formula::null() { return Formula(std::shared_ptr<const Node>()); }

Formula::Formula() : node_(constant(false)) {}
Formula Formula::bot() { return Formula(constant(false)); }
Formula Formula::top() { return Formula(constant(true)); }

Formula Formula::var(std::string name) {
  if (name.empty()) throw Error("variable name must be nonempty");
  return make(Op::Var, std::move(name), Formula(), Formula());
}

Formula Formula::make(Op op, std::string name, Formula lhs, Formula rhs) {
  std::size_t h = mix(0, static_cast<std::size_t>(op) + 16);
  std::size_t size = 1;
  std::size_t depth = 0;
  Formula l = null();
  Formula r = null();
  if (op == Op::Var) {
    h = mix(h, std::hash<std::string>{}(name));
  } else {
    l = std::move(lhs);
    h = mix(h, l.hash());
    size += l.size();
    depth = l.depth() + 1;
    if (is_binary(op)) {
      r = std::move(rhs);
      h = mix(h, r.hash());
      size += r.size();
      depth = std::max(depth, r.depth() + 1);
    }
  }
  return Formula(std::make_shared<const Node>(
      Node{op, std::move(name), std::move(l), std::move(r), h, size, depth}));
}

Op Formula::op() const noexcept { return node_->op; }
const std::string& Formula::name() const noexcept { return node_->name; }

const Formula& Formula::lhs() const {
  if (!node_->lhs.node_) throw Error("formula has no left operand");
  return node_->lhs;
}

const Formula& Formula::rhs() const {
  if (!node_->rhs.node_) throw Error("formula has no right operand");
  return node_->rhs;
}

std::size_t Formula::hash() const noexcept { return node_->hash; }
std::size_t Formula::size() const noexcept { return node_->size; }
std::size_t Formula::depth() const noexcept { return node_->depth; }

std::strong_ordering compare_nodes(const Formula::Node* a, const Formula::Node* b) {
  if (a == b) return std::strong_ordering::equal;
  if (auto c = a->hash <=> b->hash; c != 0) return c;
  if (auto c = a->op <=> b->op; c != 0) return c;
  if (a->op == Op::Var) return a->name <=> b->name;
  if (a->op == Op::Bot || a->op == Op::Top) return std::strong_ordering::equal;
  if (auto c = a->lhs <=> b->lhs; c != 0) return c;
  if (a->op == Op::Not) return std::strong_ordering::equal;
  return a->rhs <=> b->rhs;
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  return compare_nodes(a.node_.get(), b.node_.get());
}

bool operator==(const Formula& a, const Formula& b) {
  return compare_nodes(a.node_.get(), b.node_.get()) == 0;
}

Formula operator~(Formula a) { return Formula::make(Op::Not, {}, std::move(a), Formula()); }
Formula operator&(Formula a, Formula b) {
  return Formula::make(Op::And, {}, std::move(a), std::move(b));
}
Formula operator|(Formula a, Formula b) {
  return Formula::make(Op::Or, {}, std::move(a), std::move(b));
}
Formula implies(Formula a, Formula b) {
  return Formula::make(Op::Imp, {}, std::move(a), std::move(b));
}

void collect_vars(const Formula& f, std::vector<std::string>& out) {
  switch (f.op()) {
    case Op::Var: out.push_back(f.name()); return;
    case Op::Bot:
    case Op::Top: return;
    case Op::Not: collect_vars(f.lhs(), out); return;
    default:
      collect_vars(f.lhs(), out);
      collect_vars(f.rhs(), out);
  }
}

std::vector<std::string> vars(const Formula& f) {
  std::vector<std::string> out;
  collect_vars(f, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

int precedence(Op op) {
  switch (op) {
    case Op::Imp: return 1;
    case Op::Or: return 2;
    case Op::And: return 3;
    case Op::Not: return 4;
    default: return 5;
  }
}

void print(const Formula& f, std::string& out) {
  auto operand = [&](const Formula& g, bool parens) {
    if (parens) out += '(';
    print(g, out);
    if (parens) out += ')';
  };
  const int p = precedence(f.op());
  switch (f.op()) {
    case Op::Var: out += f.name(); return;
    case Op::Bot: out += '0'; return;
    case Op::Top: out += '1'; return;
    case Op::Not:
      out += '~';
      operand(f.lhs(), precedence(f.lhs().op()) < p);
      return;
    case Op::And:
    case Op::Or:
      operand(f.lhs(), precedence(f.lhs().op()) < p);
      out += f.op() == Op::And ? " & " : " | ";
      operand(f.rhs(), precedence(f.rhs().op()) <= p);
      return;
    case Op::Imp:
      operand(f.lhs(), precedence(f.lhs().op()) <= p);
      out += " -> ";
      operand(f.rhs(), precedence(f.rhs().op()) < p);
      return;
  }
}

}  // namespace

std::string to_string(const Formula& f) {
  std::string out;
  print(f, out);
  return out;
}

std::vector<Formula> canonical_set(std::vector<Formula> fs) {
  std::vector<std::pair<std::string, Formula>> keyed;
  keyed.reserve(fs.size());
  for (auto& f : fs) keyed.emplace_back(to_string(f), std::move(f));
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  keyed.erase(std::unique(keyed.begin(), keyed.end(),
                          [](const auto& a, const auto& b) { return a.first == b.first; }),
              keyed.end());
  std::vector<Formula> out;
  out.reserve(keyed.size());
  for (auto& [_, f] : keyed) out.push_back(std::move(f));
  return out;
}

namespace {

Formula fold(std::span<const Formula> fs, Formula empty, Formula (*combine)(Formula, Formula)) {
  auto set = canonical_set({fs.begin(), fs.end()});
  if (set.empty()) return empty;
  Formula acc = set.front();
  for (std::size_t i = 1; i < set.size(); ++i) acc = combine(std::move(acc), set[i]);
  return acc;
}

}  // namespace

Formula big_and(std::span<const Formula> fs) {
  return fold(fs, Formula::top(), [](Formula a, Formula b) { return std::move(a) & std::move(b); });
}

Formula big_or(std::span<const Formula> fs) {
  return fold(fs, Formula::bot(), [](Formula a, Formula b) { return std::move(a) | std::move(b); });
}

}  // namespace adm
