#pragma once

/**
 * @file stratify.hpp
 * @brief Thick subcategories of perfect complexes, decided by supports.
 *
 * Over a noetherian ring A the thick subcategory generated by S consists of
 * the perfect complexes whose support lies in supp S, and Hom^*(X, Y) = 0
 * exactly when supp X and supp Y are disjoint. Everything here reduces to
 * the closed-set calculus on supports.
 */

#include "strat/support.hpp"

namespace strat {

inline std::string ideal_string(const Ideal& I) {
  std::string out = "(";
  const auto& b = I.groebner_basis();
  for (std::size_t i = 0; i < b.size(); ++i) out += (i ? ", " : "") + to_string(b[i]);
  return out + ")";
}

struct ThickQuery {
  FreeComplex target;
  std::vector<FreeComplex> generators;

  void validate() const {
    for (const auto& g : generators) require_same_ring(target.ring(), g.ring());
  }
};

/// Union of the supports of a list of complexes.
inline SpecClosedSet joint_support(const Ring& ring, const std::vector<FreeComplex>& xs) {
  SpecClosedSet acc(ring);
  for (const auto& x : xs) acc = spec_union(acc, support_global(x).global);
  return acc;
}

/// target ∈ Thick(generators) iff supp target ⊆ ∪ supp generators.
inline bool thick_member(const ThickQuery& q) {
  q.validate();
  return spec_subset_of(support_global(q.target).global, joint_support(q.target.ring(), q.generators));
}

/// Hom^*(X, Y) = 0 iff supp X ∩ supp Y = ∅.
inline bool hom_vanishes(const FreeComplex& X, const FreeComplex& Y) {
  require_same_ring(X.ring(), Y.ring());
  return spec_intersect(support_global(X).global, support_global(Y).global).is_empty();
}

struct SuppHomReport {
  GradedModule hom;               // Hom^n(X, Y), nonzero degrees only
  SpecClosedSet hom_support;      // Supp ⊕_n Hom^n(X, Y)
  SpecClosedSet support_meet;     // supp X ∩ supp Y
  bool equal = false;
};

/// Compares Supp Hom^*(X, Y) with supp X ∩ supp Y using exact Hom modules.
inline SuppHomReport supp_hom_check(const FreeComplex& X, const FreeComplex& Y) {
  require_same_ring(X.ring(), Y.ring());
  const Ring& ring = X.ring();
  if (!ring.is_euclidean())
    throw Unsupported("exact mode unavailable over " + ring.describe() + "; inclusion (2) only via hom_vanishes");
  auto H = hom_graded_pid(X, Y);
  SuppHomReport rep{H, supp_graded_pid(H, ring),
                    spec_intersect(support_global(X).global, support_global(Y).global), false};
  rep.equal = spec_equal(rep.hom_support, rep.support_meet);
  return rep;
}

/// Whether X(p) ≠ 0. With `cross_check`, also builds the Koszul object
/// X//p and confirms that p lies in its support exactly when it lies in
/// supp X.
inline bool koszul_local(const FreeComplex& X, const PrimeIdeal& p, bool cross_check = false) {
  bool here = in_support(X, p);
  if (cross_check) {
    auto K = koszul_ideal(X, p.ideal().groebner_basis());
    if (in_support(K, p) != here) throw CertificationError("X(p) and X_p disagree at " + ideal_string(p.ideal()));
  }
  return here;
}

/// A point of a local-global panel: a prime, or a closed locus V(I) whose
/// ideal is not known to be prime. Conditions at a locus are read as
/// "at every prime of V(I)".
struct PanelEntry {
  Ideal ideal;
  bool is_prime = false;
  bool asserted = false;  // primality taken on trust

  static PanelEntry prime(const PrimeIdeal& p) { return {p.ideal(), true, !p.verified()}; }
  static PanelEntry locus(const Ideal& I) { return {I, false, false}; }
};

struct LgpEntry {
  PanelEntry point;
  bool target_in_support = false;
  std::vector<bool> generator_in_support;
  bool local_member = false;    // X_p ∈ Thick(S_p)
  bool residue_member = false;  // X(p) ∈ Thick(S_p)
};

struct LgpCertificate {
  std::vector<LgpEntry> entries;
  bool global_member = false;  // X ∈ Thick(S)
  bool all_local = true;
  bool all_residue = true;
  bool verdict = false;
  bool consistent = false;
  std::vector<Ideal> witnesses;         // points where X(p) ∉ Thick(S_p)
  std::vector<std::string> panel_errors;
  std::vector<Ideal> conditional_on;    // asserted primes relied upon
};

namespace detail {

/// Generators of the ideal cutting out a closed set given as a union.
inline std::vector<Poly> defining_generators(const SpecClosedSet& S) {
  if (S.is_empty()) return {Poly::one(S.ring())};
  return S.as_closed().ideal().groebner_basis();
}

/// Whether V(I) \ V(J) meets the local spectrum at the prime p, i.e.
/// (I : J^∞) ⊆ p. (I : J^∞) is the intersection of (I : f^∞) over the
/// generators f of J, and a prime contains an intersection iff it contains
/// one of the terms.
inline bool escapes_locally(const Ideal& I, const std::vector<Poly>& J, const Ideal& p) {
  if (J.empty()) return false;  // V(J) is everything
  for (const auto& f : J)
    if (ideal_in_radical(saturate(I, f), p)) return true;
  return false;
}

/// Whether V(I) \ V(J) has a point inside V(L).
inline bool escapes_on_locus(const Ideal& I, const std::vector<Poly>& J, const Ideal& L) {
  if (J.empty()) return false;
  for (const auto& f : J)
    if (!ideal_sum(saturate(I, f), L).is_unit()) return true;
  return false;
}

}  // namespace detail

/// Default panel: the zero ideal and the defining ideals of every support
/// component of the target and the generators. Components that the engine
/// proves prime become prime entries; the others are loci. Over Z the
/// smallest prime outside all supports is added as well.
inline std::vector<PanelEntry> default_panel(const ThickQuery& q) {
  q.validate();
  const Ring& ring = q.target.ring();
  std::vector<PanelEntry> panel{PanelEntry::prime(PrimeIdeal::zero(ring))};
  auto add = [&](const Ideal& I) {
    for (const auto& e : panel)
      if (ideal_equal(e.ideal, I)) return;
    auto verdict = check_prime(I);
    if (verdict && *verdict) panel.push_back(PanelEntry::prime(PrimeIdeal::make(I, false)));
    else panel.push_back(PanelEntry::locus(gb(I)));
  };
  auto add_all = [&](const FreeComplex& X) {
    auto supp = support_global(X).global;
    for (const auto& c : supp.components()) add(c.ideal());
  };
  add_all(q.target);
  for (const auto& g : q.generators) add_all(g);
  if (ring.is_integer_ring()) {
    // A closed point off every support, so a failure at the generic point
    // also shows up at a maximal ideal.
    for (long p = 2;; ++p) {
      Ideal P(ring, {Poly::constant(ring, Rational(p))});
      auto v = check_prime(P);
      if (!v || !*v) continue;
      bool used = false;
      for (const auto& e : panel) used = used || ideal_equal(e.ideal, P);
      if (!used) {
        panel.push_back(PanelEntry::prime(PrimeIdeal::make(P, false)));
        break;
      }
    }
  }
  return panel;
}

/// Evaluates the three equivalent conditions of the local-global principle:
/// (1) X ∈ Thick(S); (2) X_p ∈ Thick(S_p) for every panel point;
/// (3) X(p) ∈ Thick(S_p) for every panel point. Localized membership is
/// decided by localized support containment.
inline LgpCertificate verify_lgp(const ThickQuery& q, const std::vector<PanelEntry>& panel) {
  q.validate();
  const Ring& ring = q.target.ring();
  auto suppX = support_global(q.target).global;
  std::vector<SpecClosedSet> suppG;
  SpecClosedSet suppS(ring);
  for (const auto& g : q.generators) {
    suppG.push_back(support_global(g).global);
    suppS = spec_union(suppS, suppG.back());
  }
  auto J = detail::defining_generators(suppS);

  LgpCertificate cert;
  cert.global_member = spec_subset_of(suppX, suppS);

  // Coverage: each support component must be the union of the panel loci it contains.
  auto check_cover = [&](const SpecClosedSet& S, const std::string& what) {
    for (const auto& c : S.components()) {
      ClosedSet covered = ClosedSet::empty(ring);
      for (const auto& e : panel) {
        ClosedSet v(e.ideal);
        if (closed_subset_of(v, c)) covered = closed_union(covered, v);
      }
      if (!closed_subset_of(c, covered))
        cert.panel_errors.push_back("panel misses the support component V" + ideal_string(c.ideal()) + " of " +
                                    what);
    }
  };
  check_cover(suppX, "the target");
  for (std::size_t i = 0; i < suppG.size(); ++i) check_cover(suppG[i], "generator " + std::to_string(i));

  for (const auto& e : panel) {
    require_same_ring(ring, e.ideal.ring());
    LgpEntry row{e, false, {}, true, true};
    ClosedSet here(e.ideal);
    SpecClosedSet at = SpecClosedSet::of(here);
    if (e.is_prime) {
      PrimeIdeal p = PrimeIdeal::make(e.ideal, true);
      row.target_in_support = in_support(q.target, p);
      bool in_S = false;
      for (const auto& g : q.generators) {
        bool b = in_support(g, p);
        row.generator_in_support.push_back(b);
        in_S = in_S || b;
      }
      for (const auto& c : suppX.components())
        if (detail::escapes_locally(c.ideal(), J, e.ideal)) row.local_member = false;
      row.residue_member = !row.target_in_support || in_S;
    } else {
      row.target_in_support = !spec_intersect(at, suppX).is_empty();
      for (const auto& s : suppG) row.generator_in_support.push_back(!spec_intersect(at, s).is_empty());
      for (const auto& c : suppX.components())
        if (detail::escapes_on_locus(c.ideal(), J, e.ideal)) row.local_member = false;
      row.residue_member = spec_subset_of(spec_intersect(at, suppX), suppS);
    }
    cert.all_local = cert.all_local && row.local_member;
    cert.all_residue = cert.all_residue && row.residue_member;
    if (!row.residue_member) cert.witnesses.push_back(e.ideal);
    if (e.asserted) cert.conditional_on.push_back(e.ideal);
    cert.entries.push_back(std::move(row));
  }
  cert.verdict = cert.global_member;
  cert.consistent = cert.panel_errors.empty() && cert.global_member == cert.all_local &&
                    cert.global_member == cert.all_residue;
  return cert;
}

inline LgpCertificate verify_lgp(const ThickQuery& q) { return verify_lgp(q, default_panel(q)); }

}  // namespace strat
