#include "curvefol/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace curvefol {

// ---------------------------------------------------------------------------
// Orders

MonomialOrder MonomialOrder::degrevlex(const PolyRing& ring) {
  return MonomialOrder(Kind::degrevlex, ring, std::vector<bool>(ring.arity(), false));
}

MonomialOrder MonomialOrder::lex(const PolyRing& ring) {
  return MonomialOrder(Kind::lex, ring, std::vector<bool>(ring.arity(), false));
}

MonomialOrder MonomialOrder::block(const PolyRing& ring, std::span<const std::size_t> front) {
  std::vector<bool> mask(ring.arity(), false);
  for (auto v : front) {
    if (v >= ring.arity()) throw ValidationError("block order variable out of range");
    mask[v] = true;
  }
  return MonomialOrder(Kind::block, ring, std::move(mask));
}

namespace {

// Grevlex restricted to the variables where mask[i] == want.
int grevlex_on(const Monomial& a, const Monomial& b, const std::vector<bool>& mask, bool want) {
  std::uint64_t da = 0, db = 0;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (mask[i] != want) continue;
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.arity(); i-- > 0;) {
    if (mask[i] != want) continue;
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const noexcept {
  switch (kind_) {
    case Kind::degrevlex:
      return compare_grevlex(a, b);
    case Kind::lex:
      for (std::size_t i = 0; i < a.arity(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      return 0;
    case Kind::block:
      if (int c = grevlex_on(a, b, front_, true); c != 0) return c;
      return grevlex_on(a, b, front_, false);
  }
  return 0;
}

const Term& MonomialOrder::leading_term(const MultiPoly& p) const {
  if (p.is_zero()) throw ValidationError("leading term of the zero polynomial");
  if (kind_ == Kind::degrevlex) return p.terms().front();
  const Term* best = &p.terms().front();
  for (const auto& t : p.terms())
    if (compare(t.monomial, best->monomial) > 0) best = &t;
  return *best;
}

// ---------------------------------------------------------------------------
// Ideal / GroebnerBasis

Ideal::Ideal(PolyRing ring, std::vector<MultiPoly> generators) : ring_(std::move(ring)) {
  for (auto& g : generators) {
    if (!(g.ring() == ring_)) throw RingMismatch("ideal generator lives in a different ring");
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(const PolyRing& ring) { return Ideal(ring, {MultiPoly::constant(ring, 1)}); }

GroebnerBasis::GroebnerBasis(MonomialOrder order, std::vector<MultiPoly> basis)
    : order_(std::move(order)), basis_(std::move(basis)) {
  leads_.reserve(basis_.size());
  for (const auto& b : basis_) leads_.push_back(order_.leading_term(b).monomial);
}

bool GroebnerBasis::is_unit() const noexcept {
  return std::any_of(leads_.begin(), leads_.end(), [](const Monomial& m) { return m.is_one(); });
}

// ---------------------------------------------------------------------------
// Internal representation: terms sorted descending in the working order.

namespace {

struct WorkPoly {
  std::vector<Term> terms;  // descending in the working order
  std::uint64_t lead_degree() const { return terms.front().monomial.degree(); }
  const Monomial& lead() const { return terms.front().monomial; }
};

class Engine {
 public:
  explicit Engine(const MonomialOrder& order) : order_(order) {}

  WorkPoly to_work(const MultiPoly& p) const {
    WorkPoly w{std::vector<Term>(p.terms().begin(), p.terms().end())};
    if (order_.kind() != MonomialOrder::Kind::degrevlex) sort(w.terms);
    return w;
  }

  MultiPoly to_poly(const WorkPoly& w) const { return MultiPoly::from_terms(order_.ring(), w.terms); }

  void sort(std::vector<Term>& terms) const {
    std::sort(terms.begin(), terms.end(),
              [this](const Term& a, const Term& b) { return order_.compare(a.monomial, b.monomial) > 0; });
  }

  static void make_monic(WorkPoly& w) {
    if (w.terms.empty()) return;
    Rational inv = 1 / w.terms.front().coefficient;
    if (inv == 1) return;
    for (auto& t : w.terms) t.coefficient *= inv;
  }

  // a - scale * shift * b, with b's terms descending.
  std::vector<Term> sub_scaled(const std::vector<Term>& a, std::size_t a_from, const Rational& scale,
                               const Monomial& shift, const std::vector<Term>& b) const {
    std::vector<Term> out;
    out.reserve(a.size() - a_from + b.size());
    std::size_t i = a_from, j = 0;
    while (i < a.size() || j < b.size()) {
      int c;
      Monomial bm = j < b.size() ? b[j].monomial * shift : Monomial(0);
      if (i == a.size()) {
        c = -1;
      } else if (j == b.size()) {
        c = 1;
      } else {
        c = order_.compare(a[i].monomial, bm);
      }
      if (c > 0) {
        out.push_back(a[i++]);
      } else if (c < 0) {
        out.push_back({std::move(bm), -scale * b[j].coefficient});
        ++j;
      } else {
        Rational s = a[i].coefficient - scale * b[j].coefficient;
        if (s != 0) out.push_back({a[i].monomial, std::move(s)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  // Full reduction modulo the active polynomials.
  WorkPoly reduce(WorkPoly p, const std::vector<WorkPoly>& pool, const std::vector<std::size_t>& active) const {
    std::vector<Term> remainder;
    std::vector<Term> cur = std::move(p.terms);
    std::size_t head = 0;
    while (head < cur.size()) {
      const Term& lt = cur[head];
      const WorkPoly* divisor = nullptr;
      for (auto idx : active) {
        if (pool[idx].lead().divides(lt.monomial)) {
          divisor = &pool[idx];
          break;
        }
      }
      if (divisor == nullptr) {
        remainder.push_back(lt);
        ++head;
        continue;
      }
      Rational scale = lt.coefficient / divisor->terms.front().coefficient;
      Monomial shift = lt.monomial.quotient(divisor->lead());
      cur = sub_scaled(cur, head, scale, shift, divisor->terms);
      head = 0;
    }
    return WorkPoly{std::move(remainder)};
  }

  WorkPoly spoly(const WorkPoly& f, const WorkPoly& g) const {
    Monomial l = f.lead().lcm(g.lead());
    Monomial sf = l.quotient(f.lead());
    Monomial sg = l.quotient(g.lead());
    std::vector<Term> a;
    a.reserve(f.terms.size());
    for (const auto& t : f.terms) a.push_back({t.monomial * sf, t.coefficient / f.terms.front().coefficient});
    Rational scale = 1 / g.terms.front().coefficient;
    return WorkPoly{sub_scaled(a, 0, scale, sg, g.terms)};
  }

 private:
  const MonomialOrder& order_;
};

struct Pair {
  std::uint64_t lcm_degree;
  std::size_t i, j;  // i < j
  friend auto operator<=>(const Pair&, const Pair&) = default;
};

}  // namespace

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order, GroebnerStats* stats) {
  if (!(ideal.ring() == order.ring())) throw RingMismatch("ideal and order use different rings");
  Engine engine(order);
  std::vector<WorkPoly> pool;
  std::vector<std::size_t> active;
  std::set<Pair> pairs;
  GroebnerStats local;

  auto lcm_of = [&](std::size_t a, std::size_t b) { return pool[a].lead().lcm(pool[b].lead()); };
  auto make_pair = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    return Pair{lcm_of(a, b).degree(), a, b};
  };

  // Gebauer-Moller update with the new element h.
  auto update = [&](std::size_t h) {
    const Monomial& lh = pool[h].lead();
    std::vector<std::size_t> candidates = active;
    std::vector<std::size_t> kept;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      std::size_t g1 = candidates[c];
      Monomial l1 = lh.lcm(pool[g1].lead());
      bool keep = lh.coprime(pool[g1].lead());
      if (!keep) {
        keep = true;
        for (std::size_t d = c + 1; d < candidates.size() && keep; ++d)
          if (lh.lcm(pool[candidates[d]].lead()).divides(l1)) keep = false;
        for (std::size_t g2 : kept)
          if (keep && lh.lcm(pool[g2].lead()).divides(l1)) keep = false;
      }
      if (keep) kept.push_back(g1);
    }
    std::set<Pair> next;
    for (const auto& p : pairs) {
      Monomial l = lcm_of(p.i, p.j);
      if (!lh.divides(l) || lh.lcm(pool[p.i].lead()) == l || lh.lcm(pool[p.j].lead()) == l) next.insert(p);
    }
    for (std::size_t g : kept)
      if (!lh.coprime(pool[g].lead())) next.insert(make_pair(g, h));
    pairs = std::move(next);
    std::vector<std::size_t> still;
    for (std::size_t g : active)
      if (!lh.divides(pool[g].lead())) still.push_back(g);
    still.push_back(h);
    active = std::move(still);
  };

  for (const auto& gen : ideal.generators()) {
    WorkPoly w = engine.reduce(engine.to_work(gen), pool, active);
    if (w.terms.empty()) continue;
    Engine::make_monic(w);
    pool.push_back(std::move(w));
    update(pool.size() - 1);
  }

  while (!pairs.empty()) {
    Pair p = *pairs.begin();
    pairs.erase(pairs.begin());
    ++local.pairs_considered;
    WorkPoly s = engine.reduce(engine.spoly(pool[p.i], pool[p.j]), pool, active);
    if (s.terms.empty()) {
      ++local.reductions_to_zero;
      continue;
    }
    Engine::make_monic(s);
    pool.push_back(std::move(s));
    update(pool.size() - 1);
  }

  // Minimal basis, then tail reduction.
  std::vector<std::size_t> minimal;
  for (std::size_t a : active) {
    bool redundant = false;
    for (std::size_t b : active) {
      if (a == b) continue;
      if (pool[b].lead().divides(pool[a].lead()) && (pool[b].lead() != pool[a].lead() || b < a)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(a);
  }
  std::vector<MultiPoly> basis;
  for (std::size_t a : minimal) {
    std::vector<std::size_t> others;
    for (std::size_t b : minimal)
      if (b != a) others.push_back(b);
    WorkPoly tail{std::vector<Term>(pool[a].terms.begin() + 1, pool[a].terms.end())};
    WorkPoly reduced = engine.reduce(std::move(tail), pool, others);
    reduced.terms.insert(reduced.terms.begin(), pool[a].terms.front());
    Engine::make_monic(reduced);
    basis.push_back(engine.to_poly(reduced));
  }
  std::sort(basis.begin(), basis.end(), [&](const MultiPoly& x, const MultiPoly& y) {
    return order.compare(order.leading_term(x).monomial, order.leading_term(y).monomial) < 0;
  });
  local.basis_size = basis.size();
  if (stats != nullptr) *stats = local;
  return GroebnerBasis(order, std::move(basis));
}

MultiPoly normal_form(const MultiPoly& p, const GroebnerBasis& basis) {
  if (!(p.ring() == basis.ring())) throw RingMismatch("normal_form: polynomial and basis use different rings");
  Engine engine(basis.order());
  std::vector<WorkPoly> pool;
  std::vector<std::size_t> active;
  for (const auto& b : basis.basis()) {
    pool.push_back(engine.to_work(b));
    active.push_back(pool.size() - 1);
  }
  return engine.to_poly(engine.reduce(engine.to_work(p), pool, active));
}

bool is_member(const MultiPoly& p, const GroebnerBasis& basis) { return normal_form(p, basis).is_zero(); }

bool contains(const GroebnerBasis& basis, const Ideal& ideal) {
  return std::all_of(ideal.generators().begin(), ideal.generators().end(),
                     [&](const MultiPoly& g) { return is_member(g, basis); });
}

bool same_ideal(const Ideal& a, const Ideal& b) {
  if (!(a.ring() == b.ring())) return false;
  auto order = MonomialOrder::degrevlex(a.ring());
  return buchberger(a, order) == buchberger(b, order);
}

// ---------------------------------------------------------------------------
// Elimination, intersection, saturation

Ideal eliminate(const Ideal& ideal, std::span<const std::size_t> drop_vars) {
  const PolyRing& ring = ideal.ring();
  PolyRing sub = ring.without_variables(drop_vars);
  auto gb = buchberger(ideal, MonomialOrder::block(ring, drop_vars));
  std::vector<MultiPoly> kept;
  for (const auto& g : gb.basis()) {
    bool free = std::none_of(drop_vars.begin(), drop_vars.end(), [&](std::size_t v) { return g.uses_variable(v); });
    if (free) kept.push_back(embed(g, sub));
  }
  return Ideal(sub, std::move(kept));
}

Ideal eliminate(const Ideal& ideal, std::span<const std::string> drop_vars) {
  std::vector<std::size_t> idx;
  for (const auto& n : drop_vars) idx.push_back(ideal.ring().index(n));
  return eliminate(ideal, idx);
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  if (!(a.ring() == b.ring())) throw RingMismatch("intersect: ideals use different rings");
  if (a.is_zero() || b.is_zero()) return Ideal(a.ring(), {});
  const PolyRing& ring = a.ring();
  PolyRing ext = ring.with_variable(ring.fresh_name("t"));
  std::size_t t_index = ext.arity() - 1;
  MultiPoly t = MultiPoly::variable(ext, t_index);
  MultiPoly one_minus_t = MultiPoly::constant(ext, 1) - t;
  std::vector<MultiPoly> gens;
  for (const auto& g : a.generators()) gens.push_back(t * embed(g, ext));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * embed(g, ext));
  std::size_t drop[] = {t_index};
  return eliminate(Ideal(ext, std::move(gens)), drop);
}

Ideal saturate_single(const Ideal& ideal, const MultiPoly& f) {
  if (!(ideal.ring() == f.ring())) throw RingMismatch("saturate: ideal and polynomial use different rings");
  if (f.is_zero()) throw ValidationError("saturation by the zero polynomial");
  if (f.is_constant()) return ideal;
  const PolyRing& ring = ideal.ring();
  PolyRing ext = ring.with_variable(ring.fresh_name("t"));
  std::size_t t_index = ext.arity() - 1;
  std::vector<MultiPoly> gens;
  for (const auto& g : ideal.generators()) gens.push_back(embed(g, ext));
  gens.push_back(MultiPoly::constant(ext, 1) - MultiPoly::variable(ext, t_index) * embed(f, ext));
  std::size_t drop[] = {t_index};
  return eliminate(Ideal(ext, std::move(gens)), drop);
}

Ideal saturate(const Ideal& ideal, const Ideal& by) {
  if (!(ideal.ring() == by.ring())) throw RingMismatch("saturate: ideals use different rings");
  if (by.is_zero()) throw ValidationError("saturation needs at least one nonzero generator");
  for (const auto& g : by.generators())
    if (g.is_constant()) return ideal;
  std::optional<Ideal> acc;
  for (const auto& g : by.generators()) {
    Ideal s = saturate_single(ideal, g);
    acc = acc ? intersect(*acc, s) : s;
  }
  return *acc;
}

// ---------------------------------------------------------------------------
// Staircase

namespace {

// Smallest pure-power exponent per variable, 0 when absent; the unit ideal
// reports every bound as 0.
std::vector<std::uint32_t> pure_power_bounds(const GroebnerBasis& basis) {
  const std::size_t n = basis.ring().arity();
  std::vector<std::uint32_t> bound(n, 0);
  for (const auto& m : basis.leading_monomials()) {
    std::size_t support = 0, var = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (m[i] != 0) {
        ++support;
        var = i;
      }
    if (support == 0) {
      std::fill(bound.begin(), bound.end(), 0);
      return bound;
    }
    if (support == 1 && (bound[var] == 0 || m[var] < bound[var])) bound[var] = m[var];
  }
  return bound;
}

}  // namespace

bool is_zero_dimensional(const GroebnerBasis& basis) {
  if (basis.is_unit()) return true;
  auto bound = pure_power_bounds(basis);
  return std::all_of(bound.begin(), bound.end(), [](std::uint32_t b) { return b != 0; });
}

std::uint64_t colength(const GroebnerBasis& basis) {
  if (basis.is_unit()) return 0;
  auto bound = pure_power_bounds(basis);
  for (std::size_t i = 0; i < bound.size(); ++i)
    if (bound[i] == 0)
      throw DimensionError("ideal is not zero-dimensional: no pure power of " + basis.ring().name(i) +
                               " among the leading monomials",
                           basis.ring().name(i));

  const auto leads = basis.leading_monomials();
  const std::size_t n = bound.size();
  Monomial m(n);
  std::uint64_t count = 0;
  // Depth-first walk over the box; a monomial divisible by a leading
  // monomial prunes every extension along the current coordinate.
  auto standard = [&](const Monomial& x) {
    return std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(x); });
  };
  auto walk = [&](auto&& self, std::size_t var) -> void {
    if (var == n) {
      ++count;
      return;
    }
    for (std::uint32_t e = 0; e < bound[var]; ++e) {
      m[var] = e;
      // Prefix test: zero the remaining coordinates.
      if (!standard(m)) break;
      self(self, var + 1);
    }
    m[var] = 0;
  };
  walk(walk, 0);
  return count;
}

std::uint64_t colength(const Ideal& ideal) {
  return colength(buchberger(ideal, MonomialOrder::degrevlex(ideal.ring())));
}

}  // namespace curvefol
