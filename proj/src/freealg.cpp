#include "adm/freealg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "adm/errors.hpp"

namespace adm {

std::string generator_name(std::size_t i) { return "x" + std::to_string(i + 1); }

std::span<const Element> FreeAlgebra::tuple(Element x) const {
  if (x >= size()) throw Error("free algebra element out of range");
  return {tuples_.data() + static_cast<std::size_t>(x) * width_, width_};
}

std::vector<std::string> FreeAlgebra::generator_names() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < rank(); ++i) out.push_back(generator_name(i));
  return out;
}

double ambient_product_size(std::span<const FiniteHeytingAlgebra> k_algebras, std::size_t rank) {
  double log_size = 0;
  for (const auto& a : k_algebras) {
    const double n = static_cast<double>(a.size());
    log_size += std::pow(n, static_cast<double>(rank)) * std::log(n);
  }
  return std::exp(log_size);
}

namespace {

class Closure {
 public:
  Closure(std::span<const FiniteHeytingAlgebra> ks, std::size_t rank, FreeAlgebraLimits limits)
      : ks_(ks.begin(), ks.end()), rank_(rank), limits_(limits) {
    for (std::size_t a = 0; a < ks_.size(); ++a) {
      std::size_t points = 1;
      for (std::size_t i = 0; i < rank; ++i) points *= ks_[a].size();
      owner_.insert(owner_.end(), points, a);
    }
    width_ = owner_.size();
  }

  void run() {
    std::vector<Element> bot(width_), top(width_);
    for (std::size_t j = 0; j < width_; ++j) {
      bot[j] = ks_[owner_[j]].bot();
      top[j] = ks_[owner_[j]].top();
    }
    add(bot, Formula::bot());
    add(top, Formula::top());
    for (std::size_t g = 0; g < rank_; ++g) add(projection(g), Formula::var(generator_name(g)));

    std::vector<Element> scratch(width_);
    for (std::size_t i = 0; i < count(); ++i) {
      const auto x = static_cast<Element>(i);
      combine(Op::Not, x, x, scratch);  // so that ~x gets the shortest trace
      meet_.emplace_back();
      join_.emplace_back();
      imp_row_.emplace_back();
      imp_col_.emplace_back();
      for (std::size_t j = 0; j <= i; ++j) {
        const auto y = static_cast<Element>(j);
        meet_[i].push_back(combine(Op::And, x, y, scratch));
        join_[i].push_back(combine(Op::Or, x, y, scratch));
        imp_row_[i].push_back(combine(Op::Imp, x, y, scratch));
        imp_col_[i].push_back(combine(Op::Imp, y, x, scratch));
      }
    }
  }

  std::size_t count() const { return traces_.size(); }
  std::size_t width() const { return width_; }

  HeytingTables tables() const {
    const std::size_t n = count();
    HeytingTables t;
    t.size = n;
    t.bot = 0;
    t.top = index_.at(top_tuple());
    t.meet.resize(n * n);
    t.join.resize(n * n);
    t.imp.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j <= i; ++j) {
        t.meet[i * n + j] = t.meet[j * n + i] = meet_[i][j];
        t.join[i * n + j] = t.join[j * n + i] = join_[i][j];
        t.imp[i * n + j] = imp_row_[i][j];
        t.imp[j * n + i] = imp_col_[i][j];
      }
    return t;
  }

  std::vector<Element> generator_elements() const {
    std::vector<Element> out;
    for (std::size_t g = 0; g < rank_; ++g) out.push_back(index_.at(projection(g)));
    return out;
  }

  std::vector<Element> take_tuples() { return std::move(tuples_); }
  std::vector<Formula> take_traces() { return std::move(traces_); }

 private:
  std::vector<Element> projection(std::size_t g) const {
    std::vector<Element> out(width_);
    std::size_t j = 0;
    for (const auto& a : ks_) {
      std::size_t points = 1;
      for (std::size_t i = 0; i < rank_; ++i) points *= a.size();
      for (std::size_t p = 0; p < points; ++p, ++j) {
        // Coordinate g of point p, first coordinate most significant.
        std::size_t rest = p;
        for (std::size_t skip = rank_ - 1; skip > g; --skip) rest /= a.size();
        out[j] = static_cast<Element>(rest % a.size());
      }
    }
    return out;
  }

  std::vector<Element> top_tuple() const {
    std::vector<Element> out(width_);
    for (std::size_t j = 0; j < width_; ++j) out[j] = ks_[owner_[j]].top();
    return out;
  }

  Element combine(Op op, Element x, Element y, std::vector<Element>& scratch) {
    const Element* tx = tuples_.data() + static_cast<std::size_t>(x) * width_;
    const Element* ty = tuples_.data() + static_cast<std::size_t>(y) * width_;
    for (std::size_t j = 0; j < width_; ++j) {
      const auto& a = ks_[owner_[j]];
      switch (op) {
        case Op::Not: scratch[j] = a.neg(tx[j]); break;
        case Op::And: scratch[j] = a.meet(tx[j], ty[j]); break;
        case Op::Or: scratch[j] = a.join(tx[j], ty[j]); break;
        default: scratch[j] = a.imp(tx[j], ty[j]); break;
      }
    }
    if (auto it = index_.find(scratch); it != index_.end()) return it->second;
    Formula trace;
    switch (op) {
      case Op::Not: trace = ~traces_[x]; break;
      case Op::And: trace = traces_[x] & traces_[y]; break;
      case Op::Or: trace = traces_[x] | traces_[y]; break;
      default: trace = implies(traces_[x], traces_[y]); break;
    }
    return add(scratch, std::move(trace));
  }

  Element add(const std::vector<Element>& tuple, Formula trace) {
    if (auto it = index_.find(tuple); it != index_.end()) return it->second;
    if (count() >= limits_.element_cap)
      throw CapExceeded("free algebra elements", static_cast<double>(count() + 1),
                        static_cast<double>(limits_.element_cap));
    const auto idx = static_cast<Element>(count());
    index_.emplace(tuple, idx);
    tuples_.insert(tuples_.end(), tuple.begin(), tuple.end());
    traces_.push_back(std::move(trace));
    return idx;
  }

  std::vector<FiniteHeytingAlgebra> ks_;
  std::size_t rank_;
  FreeAlgebraLimits limits_;
  std::vector<std::size_t> owner_;
  std::size_t width_ = 0;
  std::map<std::vector<Element>, Element> index_;
  std::vector<Element> tuples_;
  std::vector<Formula> traces_;
  std::vector<std::vector<Element>> meet_, join_, imp_row_, imp_col_;
};

}  // namespace

FreeAlgebra free_algebra(std::span<const FiniteHeytingAlgebra> k_algebras, std::size_t rank, FreeAlgebraLimits limits) {
  if (k_algebras.empty()) throw Error("free algebra needs at least one generating algebra");
  const double ambient = ambient_product_size(k_algebras, rank);
  if (!(ambient <= limits.product_cap)) throw CapExceeded("free algebra ambient product", ambient, limits.product_cap);
  limits.element_cap = std::min<std::size_t>(limits.element_cap, std::numeric_limits<Element>::max());

  Closure closure(k_algebras, rank, limits);
  closure.run();

  FreeAlgebra out;
  out.algebra_ = FiniteHeytingAlgebra::assume_valid(closure.tables());
  out.generators_ = closure.generator_elements();
  out.sources_.assign(k_algebras.begin(), k_algebras.end());
  out.width_ = closure.width();
  out.tuples_ = closure.take_tuples();
  out.traces_ = closure.take_traces();
  return out;
}

std::size_t default_rank_bound(const MRule& r) { return std::max<std::size_t>(vars(r).size(), 3); }

AdmissibilityVerdict check_admissible_bounded(const MRule& r, std::span<const FiniteHeytingAlgebra> k_algebras,
                                              std::size_t n_max, FreeAlgebraLimits limits, std::uint64_t budget) {
  const auto variables = vars(r);
  const std::size_t first = variables.size();
  AdmissibilityVerdict out;
  out.requested_rank = std::max(n_max, first);
  for (std::size_t k = first; k <= out.requested_rank; ++k) {
    std::optional<FreeAlgebra> f;
    try {
      f.emplace(free_algebra(k_algebras, k, limits));
    } catch (const CapExceeded&) {
      if (k == first) throw;
      out.stopped_by_cap = true;
      break;
    }
    Verdict v = models_mrule(f->algebra(), r, budget);
    if (v.outcome == Outcome::BudgetExceeded) {
      if (k == first)
        throw CapExceeded("valuations over the rank-" + std::to_string(k) + " free algebra",
                          std::pow(static_cast<double>(f->size()), static_cast<double>(first)),
                          static_cast<double>(budget));
      out.stopped_by_cap = true;
      break;
    }
    if (v.refuted()) {
      out.kind = AdmissibilityVerdict::Kind::NotAdmissible;
      out.rank = k;
      Substitution sigma;
      for (const auto& [name, value] : v.refutation->valuation.values) sigma.emplace(name, f->trace(value));
      out.witness = std::move(sigma);
      out.refutation = std::move(v.refutation);
      return out;
    }
    out.rank = k;
  }
  return out;
}

PoolSearch refute_derivability(std::span<const MRule> rules, const MRule& r, std::span<const FiniteHeytingAlgebra> pool,
                               std::uint64_t budget) {
  PoolSearch out;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    Verdict target = models_mrule(pool[i], r, budget);
    if (target.outcome == Outcome::BudgetExceeded) {
      ++out.skipped;
      continue;
    }
    if (!target.refuted()) continue;
    Verdict base = models_all(pool[i], rules, budget);
    if (base.outcome == Outcome::BudgetExceeded) {
      ++out.skipped;
      continue;
    }
    if (base.valid()) {
      out.witness = PoolWitness{i, pool[i], std::move(*target.refutation)};
      return out;
    }
  }
  return out;
}

}  // namespace adm
