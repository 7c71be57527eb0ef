#pragma once

/**
 * @file closed_set.hpp
 * @brief Zariski-closed and specialisation-closed subsets of Spec A.
 *
 * V(I) only determines the radical of I, so every comparison here goes
 * through radical membership, never syntactic equality of ideals.
 */

#include <optional>

#include "strat/groebner.hpp"

namespace strat {

/// V(I).
class ClosedSet {
 public:
  explicit ClosedSet(const Ideal& I) : ideal_(gb(I)) {}

  static ClosedSet whole(const Ring& ring) { return ClosedSet(Ideal::zero(ring)); }
  static ClosedSet empty(const Ring& ring) { return ClosedSet(Ideal::unit(ring)); }

  const Ideal& ideal() const noexcept { return ideal_; }
  const Ring& ring() const noexcept { return ideal_.ring(); }

 private:
  Ideal ideal_;
};

/// U ⊆ W  ⟺  I(W) ⊆ √I(U).
inline bool closed_subset_of(const ClosedSet& U, const ClosedSet& W) {
  require_same_ring(U.ring(), W.ring());
  for (const auto& g : W.ideal().generators())
    if (!radical_member(g, U.ideal())) return false;
  return true;
}

inline bool closed_equal(const ClosedSet& U, const ClosedSet& W) {
  return closed_subset_of(U, W) && closed_subset_of(W, U);
}

inline ClosedSet closed_union(const ClosedSet& U, const ClosedSet& W) {
  return ClosedSet(ideal_product(U.ideal(), W.ideal()));
}

inline ClosedSet closed_intersect(const ClosedSet& U, const ClosedSet& W) {
  return ClosedSet(ideal_sum(U.ideal(), W.ideal()));
}

inline bool closed_is_empty(const ClosedSet& U) { return U.ideal().is_unit(); }

/// I ⊆ √p: the locus V(I) contains V(p). For p prime this is the point test
/// p ∈ V(I).
inline bool ideal_in_radical(const Ideal& I, const Ideal& p) {
  for (const auto& g : I.generators())
    if (!radical_member(g, p)) return false;
  return true;
}

/// Finite union of closed sets, kept with no component inside another.
class SpecClosedSet {
 public:
  explicit SpecClosedSet(Ring ring) : ring_(std::move(ring)) {}

  SpecClosedSet(Ring ring, std::vector<ClosedSet> comps) : ring_(std::move(ring)) {
    for (const auto& c : comps) require_same_ring(ring_, c.ring());
    canonicalize(std::move(comps));
  }

  static SpecClosedSet of(const ClosedSet& c) { return SpecClosedSet(c.ring(), {c}); }

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<ClosedSet>& components() const noexcept { return comps_; }
  bool is_empty() const noexcept { return comps_.empty(); }

  /// The union as a single closed set V(product of the component ideals).
  ClosedSet as_closed() const {
    ClosedSet acc = ClosedSet::empty(ring_);
    for (const auto& c : comps_) acc = closed_union(acc, c);
    return acc;
  }

  /// Whether the prime (or locus) V(p) lies in this set: some component's
  /// ideal is contained in √p.
  bool contains_point(const Ideal& p) const {
    for (const auto& c : comps_)
      if (ideal_in_radical(c.ideal(), p)) return true;
    return false;
  }

 private:
  void canonicalize(std::vector<ClosedSet> comps) {
    std::vector<ClosedSet> live;
    for (auto& c : comps)
      if (!closed_is_empty(c)) live.push_back(std::move(c));
    std::vector<bool> keep(live.size(), true);
    for (std::size_t a = 0; a < live.size(); ++a)
      for (std::size_t b = 0; b < live.size() && keep[a]; ++b) {
        if (a == b || !keep[b]) continue;
        if (closed_subset_of(live[a], live[b])) {
          // Equal components: keep the first.
          if (b > a && closed_subset_of(live[b], live[a])) continue;
          keep[a] = false;
        }
      }
    for (std::size_t a = 0; a < live.size(); ++a)
      if (keep[a]) comps_.push_back(std::move(live[a]));
  }

  Ring ring_;
  std::vector<ClosedSet> comps_;
};

inline SpecClosedSet spec_union(const SpecClosedSet& a, const SpecClosedSet& b) {
  require_same_ring(a.ring(), b.ring());
  auto comps = a.components();
  comps.insert(comps.end(), b.components().begin(), b.components().end());
  return SpecClosedSet(a.ring(), std::move(comps));
}

inline SpecClosedSet spec_intersect(const SpecClosedSet& a, const SpecClosedSet& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<ClosedSet> comps;
  for (const auto& u : a.components())
    for (const auto& w : b.components()) comps.push_back(closed_intersect(u, w));
  return SpecClosedSet(a.ring(), std::move(comps));
}

inline bool spec_subset_of(const SpecClosedSet& a, const SpecClosedSet& b) {
  require_same_ring(a.ring(), b.ring());
  if (a.is_empty()) return true;
  if (b.is_empty()) return false;
  ClosedSet whole_b = b.as_closed();
  for (const auto& u : a.components())
    if (!closed_subset_of(u, whole_b)) return false;
  return true;
}

inline bool spec_equal(const SpecClosedSet& a, const SpecClosedSet& b) {
  return spec_subset_of(a, b) && spec_subset_of(b, a);
}

/// Prime factors of |n| by trial division, ascending, without multiplicity.
inline std::vector<Integer> integer_prime_factors(Integer n) {
  n = abs(n);
  std::vector<Integer> out;
  for (Integer d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

namespace detail {

/// Roots in the coefficient field of a univariate polynomial (given by its
/// variable index). Returns nullopt when the search would be too large.
inline std::optional<bool> has_field_root(const Poly& f, std::size_t var) {
  const auto& dom = f.ring().domain();
  std::vector<Rational> coeffs(static_cast<std::size_t>(f.degree_in(var)) + 1, Rational(0));
  for (const auto& t : f.terms()) coeffs[static_cast<std::size_t>(t.mon[var])] = t.coef;
  auto eval = [&](const Rational& x) {
    Rational acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = dom.add(dom.mul(acc, x), coeffs[i]);
    return acc;
  };
  if (dom.kind() == CoefficientDomain::Kind::prime_field) {
    if (dom.modulus() > 100000) return std::nullopt;
    for (std::uint32_t x = 0; x < dom.modulus(); ++x)
      if (eval(Rational(x)) == 0) return true;
    return false;
  }
  // Rational root test on the integer-scaled polynomial.
  Integer den = 1;
  for (const auto& c : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<Integer> ic;
  for (const auto& c : coeffs) ic.push_back(Integer(c * den));
  if (ic.front() == 0) return true;
  const Integer limit("1000000000000");
  if (abs(ic.front()) > limit || abs(ic.back()) > limit) return std::nullopt;
  auto divisors = [](Integer n) {
    n = abs(n);
    std::vector<Integer> ds;
    for (Integer d = 1; d * d <= n; ++d)
      if (n % d == 0) {
        ds.push_back(d);
        if (d * d != n) ds.push_back(n / d);
      }
    return ds;
  };
  for (const auto& p : divisors(ic.front()))
    for (const auto& q : divisors(ic.back()))
      for (int sign : {1, -1}) {
        Rational x(sign * p, q);
        x.canonicalize();
        if (eval(x) == 0) return true;
      }
  return false;
}

}  // namespace detail

/// true: provably prime; false: provably not prime; nullopt: undecided.
inline std::optional<bool> check_prime(const Ideal& I) {
  const Ring& ring = I.ring();
  const auto& basis = I.groebner_basis();
  if (I.is_unit()) return false;
  if (basis.empty()) return true;  // (0) in a domain
  if (ring.domain().is_integer()) {
    Integer n = detail::int_value(basis[0]);
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
  }
  bool linear = true;
  for (const auto& g : basis)
    if (g.degree() > 1) linear = false;
  if (linear) return true;
  if (basis.size() == 1) {
    const Poly& f = basis[0];
    std::optional<std::size_t> var;
    for (std::size_t i = 0; i < ring.nvars(); ++i) {
      if (f.degree_in(i) > 0) {
        if (var) return std::nullopt;
        var = i;
      }
    }
    if (!var) return std::nullopt;
    auto d = f.degree_in(*var);
    if (d > 3) return std::nullopt;
    auto root = detail::has_field_root(f, *var);
    if (!root) return std::nullopt;
    return !*root;
  }
  return std::nullopt;
}

/// A prime ideal, either verified by the engine or asserted by the user.
class PrimeIdeal {
 public:
  static PrimeIdeal make(const Ideal& I, bool asserted) {
    if (I.is_unit()) throw Error("a prime ideal must be proper");
    auto verdict = check_prime(I);
    if (verdict && !*verdict) throw Error("ideal is not prime");
    if (!verdict && !asserted)
      throw Error("primality cannot be verified by the engine; mark it asserted_prime");
    return PrimeIdeal(gb(I), verdict.has_value());
  }

  static PrimeIdeal zero(const Ring& ring) { return make(Ideal::zero(ring), false); }

  const Ideal& ideal() const noexcept { return ideal_; }
  const Ring& ring() const noexcept { return ideal_.ring(); }
  bool verified() const noexcept { return verified_; }

 private:
  PrimeIdeal(Ideal I, bool verified) : ideal_(std::move(I)), verified_(verified) {}

  Ideal ideal_;
  bool verified_;
};

}  // namespace strat
