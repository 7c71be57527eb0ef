#pragma once

/**
 * @file groebner.hpp
 * @brief Buchberger's algorithm over free modules, and ideal arithmetic.
 *
 * A single engine handles both ideals (rank one) and submodules of free
 * modules. Module elements are ordered position-over-term: the component
 * index decides first (lower index is larger), then the ring's monomial
 * order. Pairs are selected by the normal strategy (smallest lcm degree
 * first, ties by creation order); Buchberger's coprime criterion is used
 * for ideals only, the chain criterion for both.
 *
 * Ideals over Z are principal and handled by gcd arithmetic instead; the
 * Buchberger engine itself requires a coefficient field.
 */

#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <tuple>
#include <vector>

#include "strat/certify.hpp"
#include "strat/poly.hpp"

namespace strat {

namespace detail {

struct VTerm {
  std::uint32_t pos;
  Monomial mon;
  Rational coef;
};

/// Sparse vector of polynomials; terms sorted descending in POT order.
using Vec = std::vector<VTerm>;

inline int pot_compare(const MonomialOrder& ord, std::uint32_t pa, const Monomial& ma,
                       std::uint32_t pb, const Monomial& mb) {
  if (pa != pb) return pa < pb ? 1 : -1;
  return ord.compare(ma, mb);
}

inline Vec to_vec(std::span<const Poly> comps) {
  Vec v;
  for (std::uint32_t p = 0; p < comps.size(); ++p)
    for (const auto& t : comps[p].terms()) v.push_back(VTerm{p, t.mon, t.coef});
  return v;
}

inline std::vector<Poly> from_vec(const Ring& ring, const Vec& v, std::size_t rank) {
  std::vector<std::vector<Term>> parts(rank);
  for (const auto& t : v) parts[t.pos].push_back(Term{t.mon, t.coef});
  std::vector<Poly> out;
  out.reserve(rank);
  for (auto& p : parts) out.emplace_back(ring, std::move(p));
  return out;
}

/// p[start..] - c * m * g
inline Vec sub_mul(const Ring& ring, const Vec& p, std::size_t start, const Rational& c,
                   const Monomial& m, const Vec& g) {
  const auto& dom = ring.domain();
  const auto& ord = ring.order();
  Vec r;
  r.reserve(p.size() - start + g.size());
  std::size_t i = start, j = 0;
  Monomial gm;
  while (i < p.size() || j < g.size()) {
    int cmp;
    if (j < g.size()) gm = g[j].mon * m;
    if (i == p.size()) cmp = -1;
    else if (j == g.size()) cmp = 1;
    else cmp = pot_compare(ord, p[i].pos, p[i].mon, g[j].pos, gm);
    if (cmp > 0) {
      r.push_back(p[i++]);
    } else if (cmp < 0) {
      Rational k = dom.neg(dom.mul(c, g[j].coef));
      if (k != 0) r.push_back(VTerm{g[j].pos, gm, std::move(k)});
      ++j;
    } else {
      Rational k = dom.sub(p[i].coef, dom.mul(c, g[j].coef));
      if (k != 0) r.push_back(VTerm{p[i].pos, p[i].mon, std::move(k)});
      ++i;
      ++j;
    }
  }
  return r;
}

inline void make_monic(const Ring& ring, Vec& v) {
  if (v.empty()) return;
  const auto& dom = ring.domain();
  Rational inv = dom.inv(v.front().coef);
  for (auto& t : v) t.coef = dom.mul(t.coef, inv);
}

/// Reduces p modulo `basis` (monic). With `full` every term is reduced,
/// otherwise only the leading term is (top reduction).
inline Vec reduce(const Ring& ring, Vec p, const std::vector<Vec>& basis, bool full,
                  std::size_t skip = static_cast<std::size_t>(-1)) {
  const auto& dom = ring.domain();
  Vec done;
  std::size_t start = 0;
  while (start < p.size()) {
    const VTerm& lt = p[start];
    const Vec* red = nullptr;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k == skip) continue;
      const auto& g = basis[k];
      if (g.front().pos == lt.pos && g.front().mon.divides(lt.mon)) {
        red = &g;
        break;
      }
    }
    if (red) {
      Rational c = dom.div(lt.coef, red->front().coef);
      Monomial m = lt.mon / red->front().mon;
      p = sub_mul(ring, p, start, c, m, *red);
      start = 0;
    } else {
      if (!full) {
        done.insert(done.end(), p.begin() + static_cast<std::ptrdiff_t>(start), p.end());
        return done;
      }
      done.push_back(lt);
      ++start;
    }
  }
  return done;
}

inline Vec s_vector(const Ring& ring, const Vec& f, const Vec& g) {
  Monomial l = lcm(f.front().mon, g.front().mon);
  const auto& dom = ring.domain();
  Monomial mf = l / f.front().mon;
  Monomial mg = l / g.front().mon;
  // f, g monic: s = mf*f - mg*g
  Vec scaled_f;
  scaled_f.reserve(f.size());
  for (const auto& t : f) scaled_f.push_back(VTerm{t.pos, t.mon * mf, dom.div(t.coef, f.front().coef)});
  return sub_mul(ring, scaled_f, 0, dom.inv(g.front().coef), mg, g);
}

/// Reduced Groebner basis of the module generated by `gens`.
/// `ideal_mode` enables the coprime-leading-monomial criterion (rank one only).
inline std::vector<Vec> buchberger(const Ring& ring, const std::vector<Vec>& gens, bool ideal_mode) {
  if (!ring.domain().is_field()) throw Unsupported("Groebner bases need a coefficient field");
  std::vector<Vec> G;
  using Key = std::tuple<std::int64_t, std::uint64_t>;
  std::map<Key, std::pair<std::size_t, std::size_t>> queue;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  std::uint64_t seq = 0;

  auto add = [&](Vec h) {
    make_monic(ring, h);
    std::size_t n = G.size();
    G.push_back(std::move(h));
    for (std::size_t k = 0; k < n; ++k) {
      if (G[k].front().pos != G[n].front().pos) continue;
      Monomial l = lcm(G[k].front().mon, G[n].front().mon);
      queue.emplace(Key{l.degree(), seq++}, std::make_pair(k, n));
      pending.emplace(k, n);
    }
  };

  for (const auto& g : gens) {
    Vec h = reduce(ring, g, G, false);
    if (!h.empty()) add(std::move(h));
  }

  auto is_pending = [&](std::size_t a, std::size_t b) {
    return pending.count({std::min(a, b), std::max(a, b)}) != 0;
  };

  while (!queue.empty()) {
    auto [i, j] = queue.begin()->second;
    queue.erase(queue.begin());
    pending.erase({i, j});
    const Monomial& mi = G[i].front().mon;
    const Monomial& mj = G[j].front().mon;
    if (ideal_mode && coprime(mi, mj)) continue;
    Monomial l = lcm(mi, mj);
    bool chain = false;
    for (std::size_t k = 0; k < G.size() && !chain; ++k) {
      if (k == i || k == j || G[k].front().pos != G[i].front().pos) continue;
      if (G[k].front().mon.divides(l) && !is_pending(i, k) && !is_pending(j, k)) chain = true;
    }
    if (chain) continue;
    Vec h = reduce(ring, s_vector(ring, G[i], G[j]), G, false);
    if (!h.empty()) add(std::move(h));
  }

  // Minimalize: drop elements whose leading term is divisible by another's.
  std::vector<bool> keep(G.size(), true);
  for (std::size_t a = 0; a < G.size(); ++a) {
    for (std::size_t b = 0; b < G.size() && keep[a]; ++b) {
      if (a == b || !keep[b]) continue;
      if (G[b].front().pos == G[a].front().pos && G[b].front().mon.divides(G[a].front().mon)) {
        // Equal leading monomials: keep the earlier one.
        if (G[b].front().mon == G[a].front().mon && b > a) continue;
        keep[a] = false;
      }
    }
  }
  std::vector<Vec> M;
  for (std::size_t a = 0; a < G.size(); ++a)
    if (keep[a]) M.push_back(std::move(G[a]));

  // Interreduce tails.
  for (std::size_t a = 0; a < M.size(); ++a) {
    M[a] = reduce(ring, std::move(M[a]), M, true, a);
    make_monic(ring, M[a]);
  }
  const auto& ord = ring.order();
  std::sort(M.begin(), M.end(), [&](const Vec& a, const Vec& b) {
    return pot_compare(ord, a.front().pos, a.front().mon, b.front().pos, b.front().mon) > 0;
  });

  if (groebner_self_check()) {
    auto& stats = certification_stats();
    for (std::size_t a = 0; a < M.size(); ++a)
      for (std::size_t b = a + 1; b < M.size(); ++b) {
        if (M[a].front().pos != M[b].front().pos) continue;
        if (!reduce(ring, s_vector(ring, M[a], M[b]), M, true).empty())
          throw CertificationError("Buchberger criterion failed: S-pair does not reduce to zero");
        ++stats.s_pairs;
      }
    for (const auto& g : gens)
      if (!reduce(ring, g, M, true).empty())
        throw CertificationError("input generator does not reduce to zero modulo its Groebner basis");
    ++stats.groebner_bases;
  }
  return M;
}

}  // namespace detail

namespace detail {
struct IdealCache {
  std::once_flag once;
  std::vector<Poly> basis;
};

inline Integer int_value(const Poly& f) {
  if (!f.is_constant()) throw Error("expected an integer constant");
  return f.constant_coef().get_num();
}

inline Poly int_poly(const Ring& ring, const Integer& n) { return Poly::constant(ring, Rational(n)); }

inline Integer int_gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

/// True iff every prime factor of n divides f (f in sqrt((n)) over Z). n = 0 means f must be 0.
inline bool int_radical_member(const Integer& f, Integer n) {
  n = abs(n);
  if (n == 0) return f == 0;
  if (f == 0) return true;
  for (;;) {
    Integer h = int_gcd(n, f);
    if (h == 1) break;
    while (n % h == 0) n /= h;
  }
  return n == 1;
}
}  // namespace detail

/// Finitely generated ideal. The reduced Groebner basis is computed lazily
/// once and shared between copies.
class Ideal {
 public:
  Ideal(Ring ring, std::vector<Poly> gens)
      : ring_(std::move(ring)), gens_(std::move(gens)), cache_(std::make_shared<detail::IdealCache>()) {
    for (const auto& g : gens_) require_same_ring(ring_, g.ring());
    if (ring_.domain().is_integer() && ring_.nvars() > 0)
      throw Unsupported("ideals over Z[x...] are not supported; Z is only used without variables");
  }

  static Ideal zero(const Ring& ring) { return Ideal(ring, {}); }
  static Ideal unit(const Ring& ring) { return Ideal(ring, {Poly::one(ring)}); }

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<Poly>& generators() const noexcept { return gens_; }

  /// Reduced Groebner basis (monic, sorted). Over Z: the single positive gcd.
  const std::vector<Poly>& groebner_basis() const {
    std::call_once(cache_->once, [this] { cache_->basis = compute_basis(); });
    return cache_->basis;
  }

  bool is_zero() const { return groebner_basis().empty(); }
  bool is_unit() const {
    const auto& b = groebner_basis();
    return b.size() == 1 && b[0].is_unit();
  }

 private:
  std::vector<Poly> compute_basis() const {
    if (ring_.domain().is_integer()) {
      Integer g = 0;
      for (const auto& f : gens_) g = detail::int_gcd(g, detail::int_value(f));
      if (g == 0) return {};
      return {detail::int_poly(ring_, g)};
    }
    std::vector<detail::Vec> vs;
    for (const auto& f : gens_)
      if (!f.is_zero()) vs.push_back(detail::to_vec(std::span<const Poly>(&f, 1)));
    auto basis = detail::buchberger(ring_, vs, true);
    std::vector<Poly> out;
    out.reserve(basis.size());
    for (const auto& b : basis) out.push_back(detail::from_vec(ring_, b, 1)[0]);
    return out;
  }

  Ring ring_;
  std::vector<Poly> gens_;
  std::shared_ptr<detail::IdealCache> cache_;
};

/// The ideal generated by its own reduced Groebner basis (cache filled).
inline Ideal gb(const Ideal& I) {
  Ideal out(I.ring(), I.groebner_basis());
  (void)out.groebner_basis();
  return out;
}

/// Remainder of f modulo I: the normal form against the reduced basis,
/// or the least non-negative residue over Z.
inline Poly normal_form(const Poly& f, const Ideal& I) {
  require_same_ring(f.ring(), I.ring());
  const auto& basis = I.groebner_basis();
  if (I.ring().domain().is_integer()) {
    if (basis.empty()) return f;
    Integer n = detail::int_value(basis[0]);
    Integer r = detail::int_value(f) % n;
    if (r < 0) r += n;
    return detail::int_poly(f.ring(), r);
  }
  std::vector<detail::Vec> vs;
  vs.reserve(basis.size());
  for (const auto& b : basis) vs.push_back(detail::to_vec(std::span<const Poly>(&b, 1)));
  auto r = detail::reduce(f.ring(), detail::to_vec(std::span<const Poly>(&f, 1)), vs, true);
  return detail::from_vec(f.ring(), r, 1)[0];
}

inline bool member(const Poly& f, const Ideal& I) { return normal_form(f, I).is_zero(); }

/// J ⊆ I
inline bool ideal_contains(const Ideal& I, const Ideal& J) {
  for (const auto& g : J.generators())
    if (!member(g, I)) return false;
  return true;
}

inline bool ideal_equal(const Ideal& I, const Ideal& J) { return ideal_contains(I, J) && ideal_contains(J, I); }

inline Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring());
  auto gens = I.generators();
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  return Ideal(I.ring(), std::move(gens));
}

inline Ideal ideal_product(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring());
  std::vector<Poly> gens;
  const auto& a = I.ring().domain().is_integer() ? I.groebner_basis() : I.generators();
  const auto& b = J.ring().domain().is_integer() ? J.groebner_basis() : J.generators();
  for (const auto& f : a)
    for (const auto& g : b) {
      Poly p = f * g;
      if (!p.is_zero()) gens.push_back(std::move(p));
    }
  return Ideal(I.ring(), std::move(gens));
}

namespace detail {
/// Generators of I + (1 - t*f) in the ring with a fresh leading variable t,
/// under an elimination order for t.
inline Ideal rabinowitsch(const Ideal& I, const Poly& f) {
  const Ring& ring = I.ring();
  Ring ext = ring.prepend_variables(1, MonomialOrder::elimination(1));
  std::vector<Poly> gens;
  for (const auto& g : I.generators()) gens.push_back(g.embed(ext, 1));
  Poly t = Poly::variable(ext, 0);
  gens.push_back(Poly::one(ext) - t * f.embed(ext, 1));
  return Ideal(ext, std::move(gens));
}
}  // namespace detail

/// f ∈ √I, via 1 ∈ I + (1 - t f).
inline bool radical_member(const Poly& f, const Ideal& I) {
  require_same_ring(f.ring(), I.ring());
  if (f.is_zero()) return true;
  if (I.ring().domain().is_integer()) {
    const auto& b = I.groebner_basis();
    Integer n = b.empty() ? Integer(0) : detail::int_value(b[0]);
    return detail::int_radical_member(detail::int_value(f), n);
  }
  if (member(f, I)) return true;
  return detail::rabinowitsch(I, f).is_unit();
}

/// (I : f^∞) by eliminating t from I + (1 - t f).
inline Ideal saturate(const Ideal& I, const Poly& f) {
  require_same_ring(f.ring(), I.ring());
  if (f.is_zero()) throw Error("saturation by the zero polynomial");
  const Ring& ring = I.ring();
  if (ring.domain().is_integer()) {
    const auto& b = I.groebner_basis();
    if (b.empty()) return Ideal::zero(ring);
    Integer n = detail::int_value(b[0]);
    Integer fv = detail::int_value(f);
    for (;;) {
      Integer h = detail::int_gcd(n, fv);
      if (h == 1) break;
      while (n % h == 0) n /= h;
    }
    return Ideal(ring, {detail::int_poly(ring, n)});
  }
  Ideal J = detail::rabinowitsch(I, f);
  std::vector<Poly> kept;
  for (const auto& g : J.groebner_basis())
    if (!g.involves_leading(1)) kept.push_back(g.restrict_to(ring, 1));
  return gb(Ideal(ring, std::move(kept)));
}

}  // namespace strat
