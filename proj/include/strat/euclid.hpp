#pragma once

// Euclidean domains used by the Smith normal form backend: the integers and
// univariate polynomial rings over a field. Both adapt to and from Poly so
// that complexes keep a single entry type.

#include "strat/groebner.hpp"

namespace strat {

/// Z, with elements as GMP integers.
class IntegerDomain {
 public:
  using Element = Integer;

  explicit IntegerDomain(Ring ring) : ring_(std::move(ring)) {
    if (!ring_.is_integer_ring()) throw Unsupported("IntegerDomain needs Z");
  }

  const Ring& ring() const noexcept { return ring_; }
  Element zero() const { return 0; }
  Element one() const { return 1; }
  bool is_zero(const Element& a) const { return a == 0; }
  bool is_unit(const Element& a) const { return abs(a) == 1; }

  /// <0, 0, >0 comparing |a| and |b|.
  int compare_norm(const Element& a, const Element& b) const { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

  /// a = q b + r with |r| < |b|.
  std::pair<Element, Element> divmod(const Element& a, const Element& b) const {
    Element q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return {q, r};
  }

  bool divides(const Element& a, const Element& b) const {
    if (a == 0) return b == 0;
    return mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0;
  }

  /// Unit u with u * a in canonical (non-negative) form.
  Element canonical_unit(const Element& a) const { return a < 0 ? Element(-1) : Element(1); }
  Element unit_inverse(const Element& u) const { return u; }

  Element gcd(const Element& a, const Element& b) const { return detail::int_gcd(a, b); }

  Element from_poly(const Poly& p) const { return detail::int_value(p); }
  Poly to_poly(const Element& a) const { return detail::int_poly(ring_, a); }

 private:
  Ring ring_;
};

/// k[x] for a field k.
class UnivariateDomain {
 public:
  using Element = Poly;

  explicit UnivariateDomain(Ring ring) : ring_(std::move(ring)) {
    if (!(ring_.domain().is_field() && ring_.nvars() == 1))
      throw Unsupported("UnivariateDomain needs a univariate ring over a field");
  }

  const Ring& ring() const noexcept { return ring_; }
  Element zero() const { return Poly(ring_); }
  Element one() const { return Poly::one(ring_); }
  bool is_zero(const Element& a) const { return a.is_zero(); }
  bool is_unit(const Element& a) const { return a.is_unit(); }

  int compare_norm(const Element& a, const Element& b) const {
    auto da = a.degree(), db = b.degree();
    return da < db ? -1 : (da > db ? 1 : 0);
  }

  std::pair<Element, Element> divmod(const Element& a, const Element& b) const {
    auto res = poly_divmod(a, std::span<const Poly>(&b, 1));
    return {res.quotients[0], res.remainder};
  }

  bool divides(const Element& a, const Element& b) const {
    if (a.is_zero()) return b.is_zero();
    return divmod(b, a).second.is_zero();
  }

  /// Unit making a monic.
  Element canonical_unit(const Element& a) const {
    if (a.is_zero()) return one();
    return Poly::constant(ring_, ring_.domain().inv(a.leading_coef()));
  }
  Element unit_inverse(const Element& u) const { return Poly::constant(ring_, ring_.domain().inv(u.constant_coef())); }

  Element gcd(Element a, Element b) const {
    while (!b.is_zero()) {
      auto r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  Element from_poly(const Poly& p) const { return p; }
  Poly to_poly(const Element& a) const { return a; }

 private:
  Ring ring_;
};

/// Calls f with the Euclidean domain adapter for `ring`.
template <class F>
decltype(auto) with_euclidean_domain(const Ring& ring, F&& f) {
  if (ring.is_integer_ring()) return f(IntegerDomain(ring));
  if (ring.domain().is_field() && ring.nvars() == 1) return f(UnivariateDomain(ring));
  throw Unsupported("ring " + ring.describe() + " is not a Euclidean backend");
}

}  // namespace strat
