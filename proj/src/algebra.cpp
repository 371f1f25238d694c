#include "adm/algebra.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <unordered_map>

#include "adm/errors.hpp"

namespace adm {

FiniteHeytingAlgebra FiniteHeytingAlgebra::assume_valid(HeytingTables t) {
  return FiniteHeytingAlgebra(std::move(t));
}

bool operator==(const FiniteHeytingAlgebra& a, const FiniteHeytingAlgebra& b) {
  const auto& x = a.t_;
  const auto& y = b.t_;
  return x.size == y.size && x.bot == y.bot && x.top == y.top && x.meet == y.meet &&
         x.join == y.join && x.imp == y.imp;
}

std::string to_string(Law law) {
  switch (law) {
    case Law::Shape: return "malformed";
    case Law::NotALattice: return "not-a-lattice";
    case Law::NonDistributive: return "non-distributive";
    case Law::Residuation: return "residuation";
  }
  return "?";
}

bool Validation::violates(Law law) const {
  return std::any_of(violations.begin(), violations.end(),
                     [law](const LawViolation& v) { return v.law == law; });
}

namespace {

std::string triple(Element a, Element b, Element c) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
}

std::optional<LawViolation> check_shape(const HeytingTables& t) {
  const std::size_t n = t.size;
  if (n == 0) return LawViolation{Law::Shape, "empty carrier", {}};
  if (n > std::numeric_limits<Element>::max())
    return LawViolation{Law::Shape, "carrier too large", {}};
  for (const auto* table : {&t.meet, &t.join, &t.imp}) {
    if (table->size() != n * n)
      return LawViolation{Law::Shape, "table is not " + std::to_string(n) + "x" + std::to_string(n), {}};
    for (std::size_t i = 0; i < table->size(); ++i)
      if ((*table)[i] >= n) {
        const auto a = static_cast<Element>(i / n);
        const auto b = static_cast<Element>(i % n);
        return LawViolation{Law::Shape, "entry out of carrier at (" + std::to_string(a) + ", " + std::to_string(b) + ")",
                            {a, b}};
      }
  }
  if (t.bot >= n || t.top >= n) return LawViolation{Law::Shape, "bot/top outside carrier", {}};
  if (n > 1 && t.bot == t.top) return LawViolation{Law::Shape, "bot equals top in a nontrivial carrier", {}};
  return std::nullopt;
}

std::optional<LawViolation> check_lattice(const HeytingTables& t) {
  const std::size_t n = t.size;
  auto meet = [&](std::size_t a, std::size_t b) { return t.meet[a * n + b]; };
  auto join = [&](std::size_t a, std::size_t b) { return t.join[a * n + b]; };
  auto fail = [](std::string what, std::vector<Element> w) {
    return LawViolation{Law::NotALattice, std::move(what), std::move(w)};
  };
  for (Element a = 0; a < n; ++a) {
    if (meet(a, a) != a || join(a, a) != a) return fail("idempotence fails at " + std::to_string(a), {a});
    if (meet(a, t.bot) != t.bot || join(a, t.top) != t.top || meet(a, t.top) != a || join(a, t.bot) != a)
      return fail("bounds fail at " + std::to_string(a), {a});
    for (Element b = 0; b < n; ++b) {
      if (meet(a, b) != meet(b, a) || join(a, b) != join(b, a))
        return fail("commutativity fails at (" + std::to_string(a) + ", " + std::to_string(b) + ")", {a, b});
      if (meet(a, join(a, b)) != a || join(a, meet(a, b)) != a)
        return fail("absorption fails at (" + std::to_string(a) + ", " + std::to_string(b) + ")", {a, b});
    }
  }
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (meet(meet(a, b), c) != meet(a, meet(b, c)) || join(join(a, b), c) != join(a, join(b, c)))
          return fail("associativity fails at " + triple(a, b, c), {a, b, c});
  return std::nullopt;
}

std::optional<LawViolation> check_distributive(const HeytingTables& t) {
  const std::size_t n = t.size;
  auto meet = [&](std::size_t a, std::size_t b) { return t.meet[a * n + b]; };
  auto join = [&](std::size_t a, std::size_t b) { return t.join[a * n + b]; };
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (meet(a, join(b, c)) != join(meet(a, b), meet(a, c)))
          return LawViolation{Law::NonDistributive,
                              "a & (b | c) != (a & b) | (a & c) at " + triple(a, b, c), {a, b, c}};
  return std::nullopt;
}

std::optional<LawViolation> check_residuation(const HeytingTables& t) {
  const std::size_t n = t.size;
  auto leq = [&](std::size_t a, std::size_t b) { return t.meet[a * n + b] == a; };
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (leq(t.meet[a * n + c], b) != leq(c, t.imp[a * n + b]))
          return LawViolation{Law::Residuation,
                              "a & c <= b disagrees with c <= (a -> b) at (a, b, c) = " + triple(a, b, c),
                              {a, b, c}};
  return std::nullopt;
}

}  // namespace

Validation validate(HeytingTables tables) {
  Validation out;
  if (auto v = check_shape(tables)) {
    out.violations.push_back(std::move(*v));
    return out;
  }
  if (auto v = check_lattice(tables)) {
    out.violations.push_back(std::move(*v));
    return out;
  }
  if (auto v = check_distributive(tables)) out.violations.push_back(std::move(*v));
  if (auto v = check_residuation(tables)) out.violations.push_back(std::move(*v));
  if (out.violations.empty()) out.algebra = FiniteHeytingAlgebra::assume_valid(std::move(tables));
  return out;
}

// --- posets ---

Poset Poset::from_relations(std::size_t size, std::span<const std::pair<std::size_t, std::size_t>> less) {
  if (size > 64) throw Error("posets are limited to 64 points");
  Poset p;
  p.below_.assign(size, 0);
  for (auto [a, b] : less) {
    if (a >= size || b >= size) throw Error("poset relation mentions a point outside 0.." + std::to_string(size - 1));
    p.below_[b] |= std::uint64_t{1} << a;
  }
  // Warshall closure over bitmasks.
  for (std::size_t k = 0; k < size; ++k)
    for (std::size_t j = 0; j < size; ++j)
      if ((p.below_[j] >> k) & 1U) p.below_[j] |= p.below_[k];
  for (std::size_t i = 0; i < size; ++i)
    if ((p.below_[i] >> i) & 1U) throw Error("poset relations contain a cycle through " + std::to_string(i));
  return p;
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::strict_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t b = 0; b < size(); ++b)
    for (std::size_t a = 0; a < size(); ++a)
      if (less(a, b)) out.emplace_back(a, b);
  return out;
}

Poset Poset::with_maximal(std::uint64_t downset) const {
  if (size() >= 64) throw Error("posets are limited to 64 points");
  Poset p = *this;
  p.below_.push_back(downset);
  return p;
}

namespace {

// Enumerates down-sets in topological order; stops with CapExceeded past `cap`.
std::vector<std::uint64_t> collect_downsets(const Poset& p, std::size_t cap) {
  const std::size_t n = p.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::popcount(p.below(a)) < std::popcount(p.below(b));
  });
  std::vector<std::uint64_t> out;
  auto rec = [&](auto&& self, std::size_t idx, std::uint64_t current) -> void {
    if (idx == n) {
      if (out.size() >= cap) throw CapExceeded("down-set lattice", static_cast<double>(out.size() + 1), static_cast<double>(cap));
      out.push_back(current);
      return;
    }
    const std::size_t x = order[idx];
    self(self, idx + 1, current);
    if ((p.below(x) & ~current) == 0) self(self, idx + 1, current | (std::uint64_t{1} << x));
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end(), [](std::uint64_t a, std::uint64_t b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return out;
}

}  // namespace

std::vector<std::uint64_t> Poset::downsets() const {
  return collect_downsets(*this, std::numeric_limits<std::size_t>::max());
}

FiniteHeytingAlgebra from_poset(const Poset& p, std::size_t cap) {
  const auto downs = collect_downsets(p, std::min<std::size_t>(cap, std::numeric_limits<Element>::max()));
  const std::size_t n = downs.size();
  std::unordered_map<std::uint64_t, Element> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(downs[i], static_cast<Element>(i));

  std::vector<std::uint64_t> principal(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) principal[x] = p.below(x) | (std::uint64_t{1} << x);

  HeytingTables t;
  t.size = n;
  t.bot = 0;
  t.top = static_cast<Element>(n - 1);
  t.meet.resize(n * n);
  t.join.resize(n * n);
  t.imp.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      t.meet[a * n + b] = index.at(downs[a] & downs[b]);
      t.join[a * n + b] = index.at(downs[a] | downs[b]);
      std::uint64_t imp = 0;
      for (std::size_t x = 0; x < p.size(); ++x)
        if ((principal[x] & downs[a] & ~downs[b]) == 0) imp |= std::uint64_t{1} << x;
      t.imp[a * n + b] = index.at(imp);
    }
  }
  return FiniteHeytingAlgebra::assume_valid(std::move(t));
}

FiniteHeytingAlgebra direct_product(const FiniteHeytingAlgebra& a, const FiniteHeytingAlgebra& b, std::size_t cap) {
  const std::size_t na = a.size(), nb = b.size();
  const double required = static_cast<double>(na) * static_cast<double>(nb);
  const double limit = static_cast<double>(std::min<std::size_t>(cap, std::numeric_limits<Element>::max()));
  if (required > limit) throw CapExceeded("direct product", required, limit);
  const std::size_t n = na * nb;
  HeytingTables t;
  t.size = n;
  t.bot = static_cast<Element>(a.bot() + na * b.bot());
  t.top = static_cast<Element>(a.top() + na * b.top());
  t.meet.resize(n * n);
  t.join.resize(n * n);
  t.imp.resize(n * n);
  for (std::size_t u = 0; u < n; ++u) {
    const auto ux = static_cast<Element>(u % na), uy = static_cast<Element>(u / na);
    for (std::size_t v = 0; v < n; ++v) {
      const auto vx = static_cast<Element>(v % na), vy = static_cast<Element>(v / na);
      t.meet[u * n + v] = static_cast<Element>(a.meet(ux, vx) + na * b.meet(uy, vy));
      t.join[u * n + v] = static_cast<Element>(a.join(ux, vx) + na * b.join(uy, vy));
      t.imp[u * n + v] = static_cast<Element>(a.imp(ux, vx) + na * b.imp(uy, vy));
    }
  }
  return FiniteHeytingAlgebra::assume_valid(std::move(t));
}

WellConnectedness is_well_connected(const FiniteHeytingAlgebra& a) {
  const auto n = static_cast<Element>(a.size());
  for (Element x = 0; x < n; ++x) {
    if (x == a.top()) continue;
    for (Element y = static_cast<Element>(x + 1); y < n; ++y)
      if (y != a.top() && a.join(x, y) == a.top()) return {false, std::make_pair(x, y)};
  }
  return {};
}

FiniteHeytingAlgebra relabel(const FiniteHeytingAlgebra& a, std::span<const Element> perm) {
  const std::size_t n = a.size();
  if (perm.size() != n) throw Error("relabeling has wrong length");
  HeytingTables t;
  t.size = n;
  t.bot = perm[a.bot()];
  t.top = perm[a.top()];
  t.meet.resize(n * n);
  t.join.resize(n * n);
  t.imp.resize(n * n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const std::size_t i = perm[x] * n + perm[y];
      t.meet[i] = perm[a.meet(x, y)];
      t.join[i] = perm[a.join(x, y)];
      t.imp[i] = perm[a.imp(x, y)];
    }
  return FiniteHeytingAlgebra::assume_valid(std::move(t));
}

// --- canonical forms ---

namespace {

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const FiniteHeytingAlgebra& a) : n_(a.size()) {
    if (n_ > 64) throw Error("canonical form is limited to 64 elements");
    strictly_below_.assign(n_, 0);
    for (Element x = 0; x < n_; ++x)
      for (Element y = 0; y < n_; ++y)
        if (x != y && a.leq(y, x)) strictly_below_[x] |= std::uint64_t{1} << y;
    label_.assign(n_, 0);
    column_.assign(n_, 0);
  }

  CanonicalForm run() {
    search(0, 0, false);
    CanonicalForm out;
    out.key = best_key_;
    out.relabel.assign(best_label_.begin(), best_label_.end());
    return out;
  }

 private:
  // `placed`: bitmask of original elements already labeled.
  void search(std::size_t depth, std::uint64_t placed, bool smaller) {
    if (depth == n_) {
      if (smaller || best_key_.empty()) {
        best_key_ = column_;
        best_label_ = label_;
      }
      return;
    }
    for (std::size_t x = 0; x < n_; ++x) {
      if ((placed >> x) & 1U) continue;
      if ((strictly_below_[x] & ~placed) != 0) continue;
      std::uint64_t col = std::uint64_t{1} << depth;
      for (std::uint64_t rest = strictly_below_[x]; rest; rest &= rest - 1)
        col |= std::uint64_t{1} << label_[std::countr_zero(rest)];
      bool now_smaller = smaller;
      if (!smaller && !best_key_.empty()) {
        if (col > best_key_[depth]) continue;
        now_smaller = col < best_key_[depth];
      }
      label_[x] = static_cast<Element>(depth);
      column_[depth] = col;
      search(depth + 1, placed | (std::uint64_t{1} << x), now_smaller);
      // Any completed branch now shares this prefix with best_key_.
      smaller = false;
    }
  }

  std::size_t n_;
  std::vector<std::uint64_t> strictly_below_;
  std::vector<Element> label_;
  std::vector<std::uint64_t> column_;
  std::vector<std::uint64_t> best_key_;
  std::vector<Element> best_label_;
};

}  // namespace

CanonicalForm canonical_form(const FiniteHeytingAlgebra& a) { return CanonicalSearch(a).run(); }

FiniteHeytingAlgebra canonical_presentation(const FiniteHeytingAlgebra& a) {
  const auto form = canonical_form(a);
  return relabel(a, form.relabel);
}

namespace {

// Order-preserving bijection search for algebras too large for canonical keys.
bool isomorphic_by_search(const FiniteHeytingAlgebra& a, const FiniteHeytingAlgebra& b) {
  const std::size_t n = a.size();
  auto profile = [n](const FiniteHeytingAlgebra& x) {
    std::vector<std::pair<std::size_t, std::size_t>> out(n);
    for (Element i = 0; i < n; ++i)
      for (Element j = 0; j < n; ++j)
        if (x.leq(j, i)) ++out[i].first;
        else if (x.leq(i, j)) ++out[i].second;
    return out;
  };
  const auto pa = profile(a), pb = profile(b);
  {
    auto sa = pa, sb = pb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  std::vector<Element> order(n);
  for (Element i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](Element x, Element y) { return pa[x] < pa[y]; });
  std::vector<int> image(n, -1);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, std::size_t k) -> bool {
    if (k == n) return true;
    const Element x = order[k];
    for (Element y = 0; y < n; ++y) {
      if (used[y] || pb[y] != pa[x]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) {
        const Element u = order[j];
        const auto v = static_cast<Element>(image[u]);
        ok = a.leq(u, x) == b.leq(v, y) && a.leq(x, u) == b.leq(y, v);
      }
      if (!ok) continue;
      image[x] = y;
      used[y] = true;
      if (self(self, k + 1)) return true;
      used[y] = false;
      image[x] = -1;
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace

bool is_isomorphic(const FiniteHeytingAlgebra& a, const FiniteHeytingAlgebra& b) {
  if (a.size() != b.size()) return false;
  if (a.size() <= 16) return canonical_form(a).key == canonical_form(b).key;
  return isomorphic_by_search(a, b);
}

// --- enumeration ---

std::vector<FiniteHeytingAlgebra> enumerate(std::size_t n_max, EnumerateOptions options) {
  if (n_max > options.cap) throw CapExceeded("enumeration size", static_cast<double>(n_max), static_cast<double>(options.cap));
  struct Found {
    std::vector<std::uint64_t> key;
    FiniteHeytingAlgebra algebra;
  };
  std::vector<Found> found;
  if (n_max == 0) return {};

  // Every finite poset arises by repeatedly adding a maximal point over a down-set,
  // and adding points never shrinks the down-set lattice, so prune by size.
  std::vector<Poset> level{Poset{}};
  {
    auto alg = from_poset(level.front());
    auto form = canonical_form(alg);
    found.push_back({form.key, relabel(alg, form.relabel)});
  }
  while (!level.empty()) {
    std::vector<Poset> next;
    std::vector<std::vector<std::uint64_t>> next_keys;
    for (const auto& p : level) {
      const auto downs = p.downsets();
      for (std::uint64_t s : downs) {
        std::size_t grown = downs.size();
        for (std::uint64_t d : downs)
          if ((d & s) == s) ++grown;
        if (grown > n_max) continue;
        Poset q = p.with_maximal(s);
        auto alg = from_poset(q);
        auto form = canonical_form(alg);
        if (std::find(next_keys.begin(), next_keys.end(), form.key) != next_keys.end()) continue;
        next_keys.push_back(form.key);
        next.push_back(std::move(q));
        found.push_back({std::move(form.key), relabel(alg, form.relabel)});
      }
    }
    level = std::move(next);
  }
  std::sort(found.begin(), found.end(), [](const Found& a, const Found& b) {
    if (a.key.size() != b.key.size()) return a.key.size() < b.key.size();
    return a.key < b.key;
  });
  std::vector<FiniteHeytingAlgebra> out;
  for (auto& f : found)
    if (options.include_degenerate || !f.algebra.is_degenerate()) out.push_back(std::move(f.algebra));
  return out;
}

FiniteHeytingAlgebra boolean2() { return chain(2); }

FiniteHeytingAlgebra chain(std::size_t n) {
  if (n == 0) throw Error("a chain needs at least one element");
  std::vector<std::pair<std::size_t, std::size_t>> less;
  for (std::size_t i = 0; i + 1 < n - 1; ++i) less.emplace_back(i, i + 1);
  return from_poset(Poset::from_relations(n - 1, less));
}

}  // namespace adm
