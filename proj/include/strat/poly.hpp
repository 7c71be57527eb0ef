#pragma once

/**
 * @file poly.hpp
 * @brief Sparse multivariate polynomials with exact coefficients.
 *
 * Terms are stored sorted descending in the ring's monomial order with no
 * zero coefficients, so structural equality is polynomial equality.
 */

#include <algorithm>
#include <span>
#include <utility>
#include <vector>

#include "strat/ring.hpp"

namespace strat {

struct Term {
  Monomial mon;
  Rational coef;
};

class Poly {
 public:
  explicit Poly(Ring ring) : ring_(std::move(ring)) {}

  /// Builds from arbitrary terms: canonicalizes coefficients, sorts and merges.
  Poly(Ring ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
    const auto& dom = ring_.domain();
    for (auto& t : terms_) {
      if (t.mon.size() != ring_.nvars()) throw Error("monomial length does not match ring");
      t.coef = dom.canonical(t.coef);
    }
    const auto& ord = ring_.order();
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term& a, const Term& b) { return ord.compare(a.mon, b.mon) > 0; });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!merged.empty() && merged.back().mon == t.mon)
        merged.back().coef = dom.add(merged.back().coef, t.coef);
      else
        merged.push_back(std::move(t));
    }
    std::erase_if(merged, [](const Term& t) { return t.coef == 0; });
    terms_ = std::move(merged);
  }

  static Poly constant(const Ring& ring, const Rational& c) {
    return Poly(ring, {Term{Monomial(ring.nvars()), c}});
  }
  static Poly constant(const Ring& ring, long c) { return constant(ring, Rational(c)); }
  static Poly one(const Ring& ring) { return constant(ring, 1); }
  static Poly variable(const Ring& ring, std::size_t i) {
    return Poly(ring, {Term{Monomial::variable(ring.nvars(), i), Rational(1)}});
  }
  static Poly monomial(const Ring& ring, Monomial m, const Rational& c = 1) {
    return Poly(ring, {Term{std::move(m), c}});
  }

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mon.is_one()); }
  /// Nonzero constant that is a unit of the coefficient domain.
  bool is_unit() const { return is_constant() && !is_zero() && ring_.domain().is_unit(terms_[0].coef); }

  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mon; }
  const Rational& leading_coef() const { return terms_.front().coef; }

  /// Constant coefficient (zero when absent).
  Rational constant_coef() const {
    if (!terms_.empty() && terms_.back().mon.is_one()) return terms_.back().coef;
    return 0;
  }

  /// Total degree; -1 for the zero polynomial.
  std::int64_t degree() const {
    std::int64_t d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mon.degree());
    return d;
  }

  /// Degree in variable i; -1 for zero.
  std::int64_t degree_in(std::size_t i) const {
    std::int64_t d = -1;
    for (const auto& t : terms_) d = std::max<std::int64_t>(d, t.mon[i]);
    return d;
  }

  Poly operator-() const {
    Poly r(ring_);
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.coef = ring_.domain().neg(t.coef);
    return r;
  }

  friend Poly operator+(const Poly& f, const Poly& g) { return combine(f, g, false); }
  friend Poly operator-(const Poly& f, const Poly& g) { return combine(f, g, true); }

  friend Poly operator*(const Poly& f, const Poly& g) {
    require_same_ring(f.ring_, g.ring_);
    if (f.is_zero() || g.is_zero()) return Poly(f.ring_);
    const auto& dom = f.ring_.domain();
    std::vector<Term> prod;
    prod.reserve(f.size() * g.size());
    for (const auto& a : f.terms_)
      for (const auto& b : g.terms_) prod.push_back(Term{a.mon * b.mon, dom.mul(a.coef, b.coef)});
    return Poly(f.ring_, std::move(prod));
  }

  Poly& operator+=(const Poly& g) { return *this = *this + g; }
  Poly& operator-=(const Poly& g) { return *this = *this - g; }
  Poly& operator*=(const Poly& g) { return *this = *this * g; }

  /// c * m * f, preserving term order (multiplication by a monomial is monotone).
  Poly mul_term(const Monomial& m, const Rational& c) const {
    Poly r(ring_);
    if (c == 0) return r;
    const auto& dom = ring_.domain();
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      Rational k = dom.mul(t.coef, c);
      if (k != 0) r.terms_.push_back(Term{t.mon * m, std::move(k)});
    }
    return r;
  }

  Poly scaled(const Rational& c) const { return mul_term(Monomial(ring_.nvars()), ring_.domain().canonical(c)); }

  /// Divides by the leading coefficient (fields only).
  Poly monic() const {
    if (is_zero()) return *this;
    return mul_term(Monomial(ring_.nvars()), ring_.domain().inv(leading_coef()));
  }

  /// Re-expresses this polynomial in `target`, whose variables are
  /// `offset` fresh ones followed by this ring's variables.
  Poly embed(const Ring& target, std::size_t offset) const {
    std::vector<Term> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) ts.push_back(Term{t.mon.prepended(offset), t.coef});
    return Poly(target, std::move(ts));
  }

  /// Inverse of embed; the first `offset` variables must not occur.
  Poly restrict_to(const Ring& target, std::size_t offset) const {
    std::vector<Term> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) ts.push_back(Term{t.mon.dropped(offset), t.coef});
    return Poly(target, std::move(ts));
  }

  /// Same terms in a ring that differs only by monomial order.
  Poly reordered(const Ring& target) const { return Poly(target, terms_); }

  bool involves_leading(std::size_t count) const {
    for (const auto& t : terms_)
      for (std::size_t i = 0; i < count; ++i)
        if (t.mon[i] != 0) return true;
    return false;
  }

  friend bool operator==(const Poly& f, const Poly& g) {
    if (!(f.ring_ == g.ring_) || f.terms_.size() != g.terms_.size()) return false;
    for (std::size_t i = 0; i < f.terms_.size(); ++i)
      if (!(f.terms_[i].mon == g.terms_[i].mon) || f.terms_[i].coef != g.terms_[i].coef) return false;
    return true;
  }

 private:
  static Poly combine(const Poly& f, const Poly& g, bool subtract) {
    require_same_ring(f.ring_, g.ring_);
    const auto& dom = f.ring_.domain();
    const auto& ord = f.ring_.order();
    Poly r(f.ring_);
    r.terms_.reserve(f.size() + g.size());
    std::size_t i = 0, j = 0;
    while (i < f.size() || j < g.size()) {
      int c;
      if (i == f.size()) c = -1;
      else if (j == g.size()) c = 1;
      else c = ord.compare(f.terms_[i].mon, g.terms_[j].mon);
      if (c > 0) {
        r.terms_.push_back(f.terms_[i++]);
      } else if (c < 0) {
        const auto& t = g.terms_[j++];
        r.terms_.push_back(Term{t.mon, subtract ? dom.neg(t.coef) : t.coef});
      } else {
        Rational s = subtract ? dom.sub(f.terms_[i].coef, g.terms_[j].coef)
                              : dom.add(f.terms_[i].coef, g.terms_[j].coef);
        if (s != 0) r.terms_.push_back(Term{f.terms_[i].mon, std::move(s)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  Ring ring_;
  std::vector<Term> terms_;
};

inline Poly pow(Poly f, unsigned e) {
  Poly r = Poly::one(f.ring());
  while (e) {
    if (e & 1u) r *= f;
    e >>= 1;
    if (e) f *= f;
  }
  return r;
}

struct DivisionResult {
  std::vector<Poly> quotients;
  Poly remainder;
};

/// Multivariate division: f = sum q_i d_i + r with no term of r divisible by
/// any lt(d_i). At each step the first divisor (in list order) whose leading
/// term divides the current leading term is used.
inline DivisionResult poly_divmod(const Poly& f, std::span<const Poly> divisors) {
  const Ring& ring = f.ring();
  if (!ring.domain().is_field()) throw Unsupported("poly_divmod needs a coefficient field");
  for (const auto& d : divisors) {
    require_same_ring(ring, d.ring());
    if (d.is_zero()) throw Error("division by the zero polynomial");
  }
  const auto& dom = ring.domain();
  DivisionResult res{std::vector<Poly>(divisors.size(), Poly(ring)), Poly(ring)};
  std::vector<Term> rem;
  Poly p = f;
  while (!p.is_zero()) {
    const Term lt = p.leading_term();
    bool divided = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      const auto& d = divisors[i];
      if (d.leading_monomial().divides(lt.mon)) {
        Monomial m = lt.mon / d.leading_monomial();
        Rational c = dom.div(lt.coef, d.leading_coef());
        res.quotients[i] += Poly::monomial(ring, m, c);
        p -= d.mul_term(m, c);
        divided = true;
        break;
      }
    }
    if (!divided) {
      rem.push_back(lt);
      p -= Poly::monomial(ring, lt.mon, lt.coef);
    }
  }
  res.remainder = Poly(ring, std::move(rem));
  return res;
}

inline DivisionResult poly_divmod(const Poly& f, std::initializer_list<Poly> divisors) {
  std::vector<Poly> ds(divisors);
  return poly_divmod(f, std::span<const Poly>(ds));
}

}  // namespace strat
