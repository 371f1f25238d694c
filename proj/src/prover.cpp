#include "adm/prover.hpp"

#include <algorithm>
#include <unordered_map>
#include <vector>

namespace adm {

namespace {

// Negation and top are rewritten through implication and bottom.
Formula normalize(const Formula& f) {
  switch (f.op()) {
    case Op::Var:
    case Op::Bot: return f;
    case Op::Top: return implies(Formula::bot(), Formula::bot());
    case Op::Not: return implies(normalize(f.lhs()), Formula::bot());
    case Op::And: return normalize(f.lhs()) & normalize(f.rhs());
    case Op::Or: return normalize(f.lhs()) | normalize(f.rhs());
    case Op::Imp: return implies(normalize(f.lhs()), normalize(f.rhs()));
  }
  return f;
}

// Antecedents are sets: contraction is admissible in G4ip.
using Context = std::vector<Formula>;

Context with(Context ctx, std::initializer_list<Formula> add) {
  for (const auto& f : add) {
    auto it = std::lower_bound(ctx.begin(), ctx.end(), f);
    if (it == ctx.end() || *it != f) ctx.insert(it, f);
  }
  return ctx;
}

Context without(const Context& ctx, std::size_t i) {
  Context out = ctx;
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
  return out;
}

bool contains(const Context& ctx, const Formula& f) { return std::binary_search(ctx.begin(), ctx.end(), f); }

struct Sequent {
  Context ctx;
  Formula goal;
  friend bool operator==(const Sequent&, const Sequent&) = default;
};

struct SequentHash {
  std::size_t operator()(const Sequent& s) const noexcept {
    std::size_t h = s.goal.hash();
    for (const auto& f : s.ctx) h = h * 1000003U ^ f.hash();
    return h;
  }
};

class Search {
 public:
  bool prove(const Context& ctx, const Formula& goal) {
    Sequent key{ctx, goal};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const bool result = step(ctx, goal);
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  bool step(const Context& ctx, const Formula& goal) {
    if (contains(ctx, Formula::bot()) || contains(ctx, goal)) return true;

    // Invertible left rules.
    for (std::size_t i = 0; i < ctx.size(); ++i) {
      const Formula& f = ctx[i];
      switch (f.op()) {
        case Op::And: return prove(with(without(ctx, i), {f.lhs(), f.rhs()}), goal);
        case Op::Or:
          return prove(with(without(ctx, i), {f.lhs()}), goal) && prove(with(without(ctx, i), {f.rhs()}), goal);
        case Op::Imp: {
          const Formula& ante = f.lhs();
          const Formula& cons = f.rhs();
          switch (ante.op()) {
            case Op::Bot: return prove(without(ctx, i), goal);
            case Op::Var:
              if (contains(ctx, ante)) return prove(with(without(ctx, i), {cons}), goal);
              break;
            case Op::And:
              return prove(with(without(ctx, i), {implies(ante.lhs(), implies(ante.rhs(), cons))}), goal);
            case Op::Or:
              return prove(with(without(ctx, i), {implies(ante.lhs(), cons), implies(ante.rhs(), cons)}), goal);
            default: break;
          }
          break;
        }
        default: break;
      }
    }

    // Invertible right rules.
    if (goal.op() == Op::And) return prove(ctx, goal.lhs()) && prove(ctx, goal.rhs());
    if (goal.op() == Op::Imp) return prove(with(ctx, {goal.lhs()}), goal.rhs());

    // Non-invertible choices.
    if (goal.op() == Op::Or && (prove(ctx, goal.lhs()) || prove(ctx, goal.rhs()))) return true;
    for (std::size_t i = 0; i < ctx.size(); ++i) {
      const Formula& f = ctx[i];
      if (f.op() != Op::Imp || f.lhs().op() != Op::Imp) continue;
      const Formula& c = f.lhs().lhs();
      const Formula& d = f.lhs().rhs();
      const Formula& b = f.rhs();
      const Context rest = without(ctx, i);
      if (prove(with(rest, {implies(d, b)}), implies(c, d)) && prove(with(rest, {b}), goal)) return true;
    }
    return false;
  }

  std::unordered_map<Sequent, bool, SequentHash> memo_;
};

}  // namespace

bool is_theorem(const Formula& f) { return Search().prove({}, normalize(f)); }

bool proves(std::span<const Formula> gamma, const Formula& b) { return is_theorem(implies(big_and(gamma), b)); }

bool equivalent(const Formula& a, const Formula& b) { return is_theorem(implies(a, b)) && is_theorem(implies(b, a)); }

}  // namespace adm
