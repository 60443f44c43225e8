#include "curvefol/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace curvefol {

// ---------------------------------------------------------------------------
// Rationals

std::string to_string(const Rational& value) { return value.get_str(); }
std::string to_string(const Integer& value) { return value.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  auto valid_int = [](std::string_view t, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false)) throw ParseError("malformed rational '" + s + "'", 0);
  if (num[0] == '+') num.erase(0, 1);
  Integer d(den);
  if (d == 0) throw ParseError("zero denominator in '" + s + "'", slash);
  Rational r{Integer(num), d};
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------------------
// PolyRing

bool is_identifier(std::string_view text) {
  if (text.empty() || !std::isalpha(static_cast<unsigned char>(text[0]))) return false;
  return std::all_of(text.begin() + 1, text.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

PolyRing::PolyRing(std::vector<std::string> names) {
  if (names.empty()) throw ValidationError("polynomial ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!is_identifier(n)) throw ValidationError("invalid variable name '" + n + "'");
    if (!seen.insert(n).second) throw ValidationError("duplicate variable name '" + n + "'");
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

std::optional<std::size_t> PolyRing::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_->size(); ++i)
    if ((*names_)[i] == name) return i;
  return std::nullopt;
}

std::size_t PolyRing::index(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw ValidationError("unknown variable '" + std::string(name) + "'");
}

std::string PolyRing::fresh_name(std::string_view stem) const {
  std::string candidate(stem);
  for (int k = 1; find(candidate); ++k) candidate = std::string(stem) + std::to_string(k);
  return candidate;
}

PolyRing PolyRing::with_variable(std::string name) const {
  auto names = *names_;
  names.push_back(std::move(name));
  return PolyRing(std::move(names));
}

PolyRing PolyRing::without_variables(std::span<const std::size_t> drop) const {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < names_->size(); ++i)
    if (std::find(drop.begin(), drop.end(), i) == drop.end()) names.push_back((*names_)[i]);
  return PolyRing(std::move(names));
}

// ---------------------------------------------------------------------------
// Monomial

std::uint64_t Monomial::degree() const noexcept {
  return std::accumulate(exponents_.begin(), exponents_.end(), std::uint64_t{0});
}

bool Monomial::is_one() const noexcept {
  return std::all_of(exponents_.begin(), exponents_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    if (exponents_[i] > other.exponents_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    if (exponents_[i] != 0 && other.exponents_[i] != 0) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exponents_.size(); ++i) r.exponents_[i] += other.exponents_[i];
  return r;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exponents_.size(); ++i) r.exponents_[i] -= divisor.exponents_[i];
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    r.exponents_[i] = std::max(exponents_[i], other.exponents_[i]);
  return r;
}

int compare_grevlex(const Monomial& a, const Monomial& b) noexcept {
  auto da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.arity(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

namespace {

bool grevlex_greater(const Term& a, const Term& b) {
  return compare_grevlex(a.monomial, b.monomial) > 0;
}

// Sorts descending and merges duplicates.
void normalize_terms(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), grevlex_greater);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coefficient += t.coefficient;
    } else {
      if (!out.empty() && out.back().coefficient == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coefficient == 0) out.pop_back();
  terms = std::move(out);
}

}  // namespace

// ---------------------------------------------------------------------------
// MultiPoly

MultiPoly MultiPoly::constant(const PolyRing& ring, const Rational& value) {
  MultiPoly p(ring);
  if (value != 0) p.terms_.push_back({Monomial(ring.arity()), value});
  return p;
}

MultiPoly MultiPoly::variable(const PolyRing& ring, std::size_t index) {
  Monomial m(ring.arity());
  m[index] = 1;
  return monomial(ring, std::move(m));
}

MultiPoly MultiPoly::variable(const PolyRing& ring, std::string_view name) {
  return variable(ring, ring.index(name));
}

MultiPoly MultiPoly::monomial(const PolyRing& ring, Monomial m, const Rational& coefficient) {
  MultiPoly p(ring);
  if (coefficient != 0) p.terms_.push_back({std::move(m), coefficient});
  return p;
}

MultiPoly MultiPoly::from_terms(const PolyRing& ring, std::vector<Term> terms) {
  for (const auto& t : terms)
    if (t.monomial.arity() != ring.arity()) throw RingMismatch("monomial arity does not match ring");
  MultiPoly p(ring);
  normalize_terms(terms);
  p.terms_ = std::move(terms);
  return p;
}

bool MultiPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

long MultiPoly::total_degree() const noexcept {
  // Graded order: the first term has maximal degree.
  return terms_.empty() ? -1 : static_cast<long>(terms_.front().monomial.degree());
}

long MultiPoly::degree_in(std::size_t var) const noexcept {
  long d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<long>(t.monomial[var]));
  return d;
}

const Term& MultiPoly::leading_term() const {
  if (terms_.empty()) throw ValidationError("leading term of the zero polynomial");
  return terms_.front();
}

Rational MultiPoly::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.monomial == m) return t.coefficient;
  return 0;
}

MultiPoly MultiPoly::homogeneous_part(unsigned degree) const {
  MultiPoly p(ring_);
  for (const auto& t : terms_)
    if (t.monomial.degree() == degree) p.terms_.push_back(t);
  return p;
}

bool MultiPoly::uses_variable(std::size_t var) const noexcept {
  return std::any_of(terms_.begin(), terms_.end(), [var](const Term& t) { return t.monomial[var] != 0; });
}

void MultiPoly::check_ring(const MultiPoly& other) const {
  if (!(ring_ == other.ring_)) throw RingMismatch("polynomials live in different rings");
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(*this);
  for (auto& t : r.terms_) t.coefficient = -t.coefficient;
  return r;
}

namespace {

template <typename Combine>
std::vector<Term> merge_terms(const std::vector<Term>& a, std::span<const Term> b, Combine combine) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c = i == a.size() ? -1 : j == b.size() ? 1 : compare_grevlex(a[i].monomial, b[j].monomial);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].monomial, combine(Rational(0), b[j].coefficient)});
      ++j;
    } else {
      Rational s = combine(a[i].coefficient, b[j].coefficient);
      if (s != 0) out.push_back({a[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  check_ring(other);
  terms_ = merge_terms(terms_, other.terms_, [](const Rational& x, const Rational& y) { return Rational(x + y); });
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  check_ring(other);
  terms_ = merge_terms(terms_, other.terms_, [](const Rational& x, const Rational& y) { return Rational(x - y); });
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_ring(b);
  MultiPoly r(a.ring_);
  if (a.is_zero() || b.is_zero()) return r;
  std::map<Monomial, Rational> acc;
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) acc[x.monomial * y.monomial] += x.coefficient * y.coefficient;
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) r.terms_.push_back({m, c});
  std::sort(r.terms_.begin(), r.terms_.end(), grevlex_greater);
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) { return *this = *this * other; }

MultiPoly& MultiPoly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coefficient *= scalar;
  }
  return *this;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
  MultiPoly result = constant(ring_, 1);
  MultiPoly base = *this;
  while (exponent != 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent != 0) base = base * base;
  }
  return result;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (!(a.ring_ == b.ring_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].monomial != b.terms_[i].monomial || a.terms_[i].coefficient != b.terms_[i].coefficient)
      return false;
  return true;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coefficient;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    bool one = t.monomial.is_one();
    bool wrote = false;
    if (c != 1 || one) {
      out << c.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < t.monomial.arity(); ++i) {
      auto e = t.monomial[i];
      if (e == 0) continue;
      if (wrote) out << '*';
      out << ring_.name(i);
      if (e > 1) out << '^' << e;
      wrote = true;
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Parser: expr := term (('+'|'-') term)* ; term := unary (('*'|'/') unary)* ;
// unary := ('+'|'-') unary | power ; power := primary ('^' integer)? ;
// primary := integer | identifier | '(' expr ')'. Division is only accepted
// by a nonzero constant, which covers rational literals such as 3/4.

namespace {

class Parser {
 public:
  Parser(std::string_view text, const PolyRing& ring) : text_(text), ring_(ring) {}

  MultiPoly parse() {
    MultiPoly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    MultiPoly acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  MultiPoly term() {
    MultiPoly acc = unary();
    for (;;) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        std::size_t at = pos_;
        MultiPoly d = unary();
        if (!d.is_constant() || d.is_zero()) {
          pos_ = at;
          fail("division is only allowed by a nonzero constant");
        }
        acc *= Rational(1) / d.terms()[0].coefficient;
      } else {
        return acc;
      }
    }
  }

  MultiPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  MultiPoly power() {
    MultiPoly base = primary();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a non-negative integer exponent");
      unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  MultiPoly primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return MultiPoly::constant(ring_, Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto idx = ring_.find(name);
      if (!idx) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return MultiPoly::variable(ring_, *idx);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const PolyRing& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, const PolyRing& ring) { return Parser(text, ring).parse(); }

// ---------------------------------------------------------------------------
// Substitution and calculus

MultiPoly substitute(const MultiPoly& p, std::span<const MultiPoly> images) {
  const auto& ring = p.ring();
  if (images.size() != ring.arity()) throw ValidationError("substitution needs one image per variable");
  if (images.empty()) throw ValidationError("empty substitution");
  const PolyRing& target = images[0].ring();
  for (const auto& im : images)
    if (!(im.ring() == target)) throw RingMismatch("substitution images live in different rings");

  // powers[v][e] = images[v]^e, filled lazily
  std::vector<std::vector<MultiPoly>> powers(ring.arity());
  auto power_of = [&](std::size_t v, unsigned e) -> const MultiPoly& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(MultiPoly::constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[v]);
    return cache[e];
  };

  MultiPoly result(target);
  for (const auto& t : p.terms()) {
    MultiPoly term = MultiPoly::constant(target, t.coefficient);
    for (std::size_t v = 0; v < ring.arity(); ++v)
      if (t.monomial[v] != 0) term *= power_of(v, t.monomial[v]);
    result += term;
  }
  return result;
}

MultiPoly substitute(const MultiPoly& p, const std::map<std::string, MultiPoly>& assignment,
                     const PolyRing& target) {
  std::vector<MultiPoly> images;
  images.reserve(p.ring().arity());
  for (std::size_t v = 0; v < p.ring().arity(); ++v) {
    const auto& name = p.ring().name(v);
    auto it = assignment.find(name);
    if (it == assignment.end()) {
      // Variables p never uses need no image.
      if (p.uses_variable(v)) throw ValidationError("missing assignment for variable '" + name + "'");
      images.push_back(MultiPoly(target));
      continue;
    }
    if (!(it->second.ring() == target)) throw RingMismatch("assignment for '" + name + "' is not in the target ring");
    images.push_back(it->second);
  }
  return substitute(p, images);
}

MultiPoly embed(const MultiPoly& p, const PolyRing& target) {
  const auto& source = p.ring();
  std::vector<std::optional<std::size_t>> map(source.arity());
  for (std::size_t i = 0; i < source.arity(); ++i) map[i] = target.find(source.name(i));
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m(target.arity());
    for (std::size_t i = 0; i < source.arity(); ++i) {
      if (t.monomial[i] == 0) continue;
      if (!map[i]) throw RingMismatch("variable '" + source.name(i) + "' missing from target ring");
      m[*map[i]] = t.monomial[i];
    }
    terms.push_back({std::move(m), t.coefficient});
  }
  return MultiPoly::from_terms(target, std::move(terms));
}

MultiPoly derivative(const MultiPoly& p, std::size_t var) {
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    auto e = t.monomial[var];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m[var] = e - 1;
    terms.push_back({std::move(m), t.coefficient * e});
  }
  return MultiPoly::from_terms(p.ring(), std::move(terms));
}

MultiPoly specialize(const MultiPoly& p, std::size_t var, const Rational& value) {
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    auto e = t.monomial[var];
    Monomial m = t.monomial;
    m[var] = 0;
    Rational c = t.coefficient;
    if (e != 0) {
      if (value == 0) continue;
      Rational pw = 1;
      for (unsigned i = 0; i < e; ++i) pw *= value;
      c *= pw;
    }
    terms.push_back({std::move(m), std::move(c)});
  }
  return MultiPoly::from_terms(p.ring(), std::move(terms));
}

MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b) {
  if (!(a.ring() == b.ring())) throw RingMismatch("exact_divide across rings");
  if (b.is_zero()) throw ValidationError("division by the zero polynomial");
  MultiPoly quotient(a.ring());
  MultiPoly rest = a;
  const Term& lead = b.leading_term();
  while (!rest.is_zero()) {
    const Term& t = rest.leading_term();
    if (!lead.monomial.divides(t.monomial)) throw ValidationError("polynomial division is not exact");
    MultiPoly q = MultiPoly::monomial(a.ring(), t.monomial.quotient(lead.monomial), t.coefficient / lead.coefficient);
    rest -= q * b;
    quotient += q;
  }
  return quotient;
}

MultiPoly divide_by_variable_power(const MultiPoly& p, std::size_t var, unsigned power) {
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    if (t.monomial[var] < power)
      throw ValidationError("polynomial is not divisible by " + p.ring().name(var) + "^" + std::to_string(power));
    Monomial m = t.monomial;
    m[var] -= power;
    terms.push_back({std::move(m), t.coefficient});
  }
  return MultiPoly::from_terms(p.ring(), std::move(terms));
}

unsigned variable_valuation(const MultiPoly& p, std::size_t var) {
  if (p.is_zero()) return 0;
  unsigned v = std::numeric_limits<unsigned>::max();
  for (const auto& t : p.terms()) v = std::min<unsigned>(v, t.monomial[var]);
  return v;
}

// ---------------------------------------------------------------------------
// Axis orders

std::uint64_t AxisOrder::value() const {
  if (is_infinite()) throw ValidationError("infinite axis order has no finite value");
  return value_;
}

AxisOrder AxisOrder::plus(std::int64_t delta) const {
  if (is_infinite()) return *this;
  auto v = static_cast<std::int64_t>(value_) + delta;
  if (v < 0) throw ValidationError("negative axis order");
  return AxisOrder(static_cast<std::uint64_t>(v));
}

std::string AxisOrder::to_string() const { return is_infinite() ? "inf" : std::to_string(value_); }

namespace {

std::uint64_t axis_degree(const Monomial& m, std::span<const std::size_t> vars) {
  std::uint64_t d = 0;
  for (auto v : vars) d += m[v];
  return d;
}

}  // namespace

AxisOrder order_along_axis(const MultiPoly& p, std::span<const std::size_t> axis_vars) {
  if (p.is_zero()) return AxisOrder::infinity();
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  for (const auto& t : p.terms()) best = std::min(best, axis_degree(t.monomial, axis_vars));
  return AxisOrder(best);
}

AxisDecomposition axis_decompose(const MultiPoly& p, std::span<const std::size_t> axis_vars) {
  if (p.is_zero()) throw ValidationError("axis_decompose of the zero polynomial");
  const auto order = order_along_axis(p, axis_vars).value();
  const auto& ring = p.ring();
  std::map<Monomial, std::vector<Term>> groups;
  std::vector<Term> remainder;
  for (const auto& t : p.terms()) {
    if (axis_degree(t.monomial, axis_vars) != order) {
      remainder.push_back(t);
      continue;
    }
    Monomial axis_part(ring.arity());
    Monomial rest = t.monomial;
    for (auto v : axis_vars) {
      axis_part[v] = t.monomial[v];
      rest[v] = 0;
    }
    groups[axis_part].push_back({std::move(rest), t.coefficient});
  }
  AxisDecomposition out{order, {}, MultiPoly::from_terms(ring, std::move(remainder))};
  for (auto& [m, terms] : groups) out.layer.push_back({m, MultiPoly::from_terms(ring, std::move(terms))});
  std::sort(out.layer.begin(), out.layer.end(), [](const AxisLayerTerm& a, const AxisLayerTerm& b) {
    return compare_grevlex(a.axis_monomial, b.axis_monomial) > 0;
  });
  return out;
}

}  // namespace curvefol
