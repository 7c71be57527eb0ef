#pragma once

/**
 * @file support.hpp
 * @brief Supports of complexes and torsion of finitely presented modules.
 *
 * Two independent routes decide whether a prime lies in supp X:
 *  - pointwise, by ranks of the differentials over the residue field k(p);
 *  - globally, by presenting each H^n(X) and taking V(Fitt_0 H^n).
 * Over Z and k[x] the global route uses invariant factors instead.
 */

#include "strat/cohomology.hpp"

namespace strat {

/// M = coker(relations : A^k -> A^generators).
struct ModulePresentation {
  Ring ring;
  std::size_t generators = 0;
  PolyMatrix relations;

  ModulePresentation(Ring r, std::size_t g, PolyMatrix rel)
      : ring(std::move(r)), generators(g), relations(std::move(rel)) {
    if (relations.rows() != generators) throw ValidationError(0, "relation columns must have length generators");
  }

  static ModulePresentation zero(const Ring& ring) { return {ring, 0, PolyMatrix(0, 0, Poly(ring))}; }
  static ModulePresentation free(const Ring& ring, std::size_t g) { return {ring, g, PolyMatrix(g, 0, Poly(ring))}; }

  /// A / (gens).
  static ModulePresentation cyclic(const Ring& ring, const std::vector<Poly>& gens) {
    PolyMatrix rel(1, gens.size(), Poly(ring));
    for (std::size_t j = 0; j < gens.size(); ++j) rel(0, j) = gens[j];
    return {ring, 1, rel};
  }

  std::vector<PolyVector> relation_columns() const { return columns_of(relations); }
};

namespace detail {

inline Poly determinant(const PolyMatrix& m) {
  const Ring& ring = m.zero().ring();
  std::size_t n = m.rows();
  if (n == 0) return Poly::one(ring);
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  Poly acc(ring);
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    PolyMatrix sub(n - 1, n - 1, Poly(ring));
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) sub(i - 1, cc++) = m(i, c);
    Poly term = m(0, j) * determinant(sub);
    if (j % 2 == 0) acc += term;
    else acc -= term;
  }
  return acc;
}

/// Removes generators killed by a relation with a unit entry, and zero
/// relations. The cokernel is unchanged up to isomorphism.
inline ModulePresentation prune(const ModulePresentation& M) {
  const Ring& ring = M.ring;
  PolyMatrix m = M.relations;
  for (;;) {
    std::optional<std::pair<std::size_t, std::size_t>> hit;
    for (std::size_t c = 0; c < m.cols() && !hit; ++c)
      for (std::size_t i = 0; i < m.rows() && !hit; ++i)
        if (m(i, c).is_unit()) hit = {i, c};
    if (!hit) break;
    auto [i, c] = *hit;
    Poly inv = Poly::constant(ring, ring.domain().inv(m(i, c).constant_coef()));
    for (std::size_t c2 = 0; c2 < m.cols(); ++c2) {
      if (c2 == c || m(i, c2).is_zero()) continue;
      m.add_col_multiple(c2, c, -(m(i, c2) * inv));
    }
    PolyMatrix next(m.rows() - 1, m.cols() - 1, Poly(ring));
    for (std::size_t r = 0, rr = 0; r < m.rows(); ++r) {
      if (r == i) continue;
      for (std::size_t k = 0, kk = 0; k < m.cols(); ++k)
        if (k != c) next(rr, kk++) = m(r, k);
      ++rr;
    }
    m = std::move(next);
  }
  std::vector<PolyVector> cols;
  for (auto& v : columns_of(m))
    if (!is_zero_vector(v)) cols.push_back(std::move(v));
  return {ring, m.rows(), matrix_from_columns(ring, m.rows(), cols)};
}

/// Presentation of span(K) / span(I) for I inside span(K), generated by K.
/// Relations are the syzygies of K together with lifts of I onto K.
inline ModulePresentation present_subquotient(const Ring& ring, std::size_t rank, const std::vector<PolyVector>& K,
                                              const std::vector<PolyVector>& I) {
  if (K.empty()) {
    for (const auto& v : I)
      if (!is_zero_vector(v)) throw CertificationError("relation outside an empty generator set");
    return ModulePresentation::zero(ring);
  }
  TrackedBasis tb(ring, rank, K);
  std::vector<PolyVector> rels = tb.syzygies();
  for (const auto& v : I) {
    auto a = tb.lift(v);
    if (!a) throw CertificationError("image does not lie in the kernel");
    if (!is_zero_vector(*a)) rels.push_back(std::move(*a));
  }
  return prune({ring, K.size(), matrix_from_columns(ring, K.size(), rels)});
}

inline bool groebner_ring(const Ring& ring) { return ring.domain().is_field(); }

inline ModulePresentation presentation_of(const FgModulePID& H, const Ring& ring) {
  std::size_t g = H.free_rank + H.torsion.size();
  PolyMatrix rel(g, H.torsion.size(), Poly(ring));
  for (std::size_t t = 0; t < H.torsion.size(); ++t) rel(H.free_rank + t, t) = H.torsion[t];
  return {ring, g, rel};
}

}  // namespace detail

/// Presentation of H^n(X) with generators a generating set of ker d^n.
inline ModulePresentation present_cohomology(const FreeComplex& X, int n) {
  const Ring& ring = X.ring();
  std::size_t r = X.rank(n);
  if (r == 0) return ModulePresentation::zero(ring);
  if (!detail::groebner_ring(ring)) {
    auto H = with_euclidean_domain(ring, [&](const auto& dom) { return detail::cohomology_at(dom, X, n); });
    return detail::presentation_of(H, ring);
  }
  std::vector<PolyVector> K;
  std::size_t r1 = X.rank(n + 1);
  if (r1 == 0) {
    for (std::size_t i = 0; i < r; ++i) K.push_back(unit_vector(ring, r, i));
  } else {
    K = syzygy_generators(ring, columns_of(X.d(n)), r1);
  }
  std::vector<PolyVector> image;
  if (X.rank(n - 1) > 0) image = columns_of(X.d(n - 1));
  return detail::present_subquotient(ring, r, K, image);
}

/// Fitt_j(M): the ideal of (g - j)-minors of the relation matrix.
inline Ideal fitting_ideal(const ModulePresentation& M, std::size_t j = 0) {
  const Ring& ring = M.ring;
  if (j >= M.generators) return Ideal::unit(ring);
  std::size_t k = M.generators - j;
  std::vector<PolyVector> cols;
  for (auto& v : M.relation_columns())
    if (!is_zero_vector(v)) cols.push_back(std::move(v));
  if (detail::groebner_ring(ring) && cols.size() > k) {
    // A Gröbner basis spans the same column module and is often shorter.
    auto gbv = Submodule(ring, M.generators, cols).groebner_basis();
    if (gbv.size() < cols.size()) cols = std::move(gbv);
  }
  if (cols.size() < k) return Ideal::zero(ring);
  std::vector<Poly> minors;
  std::vector<std::size_t> rows_sel, cols_sel;
  std::function<void(std::size_t)> pick_cols;
  std::function<void(std::size_t)> pick_rows = [&](std::size_t from) {
    if (rows_sel.size() == k) {
      pick_cols(0);
      return;
    }
    for (std::size_t i = from; i < M.generators; ++i) {
      rows_sel.push_back(i);
      pick_rows(i + 1);
      rows_sel.pop_back();
    }
  };
  pick_cols = [&](std::size_t from) {
    if (cols_sel.size() == k) {
      PolyMatrix sub(k, k, Poly(ring));
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) sub(a, b) = cols[cols_sel[b]][rows_sel[a]];
      Poly d = detail::determinant(sub);
      if (!d.is_zero()) minors.push_back(std::move(d));
      return;
    }
    for (std::size_t c = from; c < cols.size(); ++c) {
      cols_sel.push_back(c);
      pick_cols(c + 1);
      cols_sel.pop_back();
    }
  };
  pick_rows(0);
  return Ideal(ring, std::move(minors));
}

namespace detail {

/// Rank over the fraction field of A/p by fraction-free elimination, with
/// zero tests by normal form modulo p.
inline std::size_t residue_rank(PolyMatrix m, const Ideal& p) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = normal_form(m(i, j), p);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::optional<std::size_t> piv;
    for (std::size_t i = rank; i < m.rows(); ++i)
      if (!m(i, c).is_zero() && (!piv || m(i, c).terms().size() < m(*piv, c).terms().size())) piv = i;
    if (!piv) continue;
    m.swap_rows(rank, *piv);
    const Poly pv = m(rank, c);
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      if (m(i, c).is_zero()) continue;
      Poly a = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = normal_form(pv * m(i, j) - a * m(rank, j), p);
    }
    ++rank;
  }
  return rank;
}

inline void require_proper(const Ideal& p) {
  if (p.is_unit()) throw Error("the unit ideal is not a point of Spec A");
}

}  // namespace detail

/// Whether X ⊗ k(p) is not exact: rank d^n + rank d^{n-1} < rank X^n over
/// k(p) for some n.
inline bool in_support(const FreeComplex& X, const PrimeIdeal& p) {
  require_same_ring(X.ring(), p.ring());
  detail::require_proper(p.ideal());
  std::map<int, std::size_t> ranks;
  for (auto [n, r] : X.ranks()) {
    if (!ranks.count(n - 1)) ranks[n - 1] = detail::residue_rank(X.d(n - 1), p.ideal());
    ranks[n] = detail::residue_rank(X.d(n), p.ideal());
    if (ranks[n] + ranks[n - 1] < r) return true;
  }
  return false;
}

enum class SupportBackend { Automatic, Euclidean, Groebner };

struct SupportReport {
  SpecClosedSet global;
  std::map<int, ClosedSet> per_degree;  // V(Fitt_0 H^n)
  std::map<int, std::pair<std::size_t, std::size_t>> evidence;  // generators, relations
};

/// supp X as the union over n of V(Fitt_0 H^n(X)).
inline SupportReport support_global(const FreeComplex& X, SupportBackend backend = SupportBackend::Automatic) {
  const Ring& ring = X.ring();
  bool euclid = ring.is_euclidean();
  if (backend == SupportBackend::Automatic) backend = euclid ? SupportBackend::Euclidean : SupportBackend::Groebner;
  if (backend == SupportBackend::Euclidean && !euclid)
    throw Unsupported("ring " + ring.describe() + " has no Euclidean backend");
  if (backend == SupportBackend::Groebner && !detail::groebner_ring(ring))
    throw Unsupported("ring " + ring.describe() + " has no Gröbner backend");

  SupportReport rep{SpecClosedSet(ring), {}, {}};
  if (backend == SupportBackend::Euclidean) {
    auto H = cohomology_pid(X);
    for (auto [n, r] : X.ranks()) {
      FgModulePID Hn = module_at(H, n);
      Poly f = Poly::one(ring);
      if (Hn.free_rank > 0) f = Poly(ring);
      else
        for (const auto& d : Hn.torsion) f *= d;
      rep.per_degree.emplace(n, ClosedSet(Ideal(ring, {f})));
      rep.evidence[n] = {Hn.free_rank + Hn.torsion.size(), Hn.torsion.size()};
      rep.global = spec_union(rep.global, supp_module_pid(Hn, ring));
    }
    return rep;
  }
  for (auto [n, r] : X.ranks()) {
    auto P = present_cohomology(X, n);
    ClosedSet c(fitting_ideal(P));
    rep.evidence[n] = {P.generators, P.relations.cols()};
    rep.global = spec_union(rep.global, SpecClosedSet::of(c));
    rep.per_degree.emplace(n, std::move(c));
  }
  return rep;
}

/// Γ_a M = {m ∈ M : a^k m = 0 for some k}, presented by generators of the
/// saturation (N : a^∞) of the relation module N.
inline ModulePresentation torsion_submodule(const ModulePresentation& M, const Ideal& a) {
  require_same_ring(M.ring, a.ring());
  if (!detail::groebner_ring(M.ring)) throw Unsupported("torsion submodules need a Gröbner backend");
  if (M.generators == 0) return M;
  Submodule N(M.ring, M.generators, M.relation_columns());
  Submodule S = module_colon_saturate(N, a);
  return detail::present_subquotient(M.ring, M.generators, S.groebner_basis(), M.relation_columns());
}

/// Supp M ⊆ V.
inline bool is_torsion(const ModulePresentation& M, const SpecClosedSet& V) {
  require_same_ring(M.ring, V.ring());
  return spec_subset_of(SpecClosedSet::of(ClosedSet(fitting_ideal(M))), V);
}

/// M_p ≠ 0, i.e. Fitt_0(M) ⊆ p.
inline bool is_local_nonvanishing(const ModulePresentation& M, const PrimeIdeal& p) {
  require_same_ring(M.ring, p.ring());
  return ideal_in_radical(fitting_ideal(M), p.ideal());
}

}  // namespace strat
