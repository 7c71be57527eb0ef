#pragma once

/**
 * @file cohomology.hpp
 * @brief Exact cohomology of free complexes over Z and k[x].
 *
 * H^n(X) = ker d^n / im d^{n-1} is computed from the Smith form of d^n: the
 * last columns of V span the kernel, V^{-1} d^{n-1} gives the image in those
 * coordinates, and a second Smith form yields the invariant factors.
 */

#include "strat/closed_set.hpp"
#include "strat/complex.hpp"
#include "strat/poly_io.hpp"
#include "strat/snf.hpp"

namespace strat {

/// A^free_rank ⊕ A/(d_1) ⊕ ... ⊕ A/(d_k), with d_i non-units, canonical and
/// d_i | d_{i+1}. Isomorphism is structural equality.
struct FgModulePID {
  std::size_t free_rank = 0;
  std::vector<Poly> torsion;

  bool is_zero() const noexcept { return free_rank == 0 && torsion.empty(); }
  bool is_torsion() const noexcept { return free_rank == 0; }

  friend bool operator==(const FgModulePID& a, const FgModulePID& b) {
    return a.free_rank == b.free_rank && a.torsion == b.torsion;
  }
};

inline std::string describe(const FgModulePID& M, const Ring& ring) {
  if (M.is_zero()) return "0";
  std::string A = ring.is_integer_ring() ? "Z" : ring.describe();
  std::vector<std::string> parts;
  if (M.free_rank == 1) parts.push_back(A);
  if (M.free_rank > 1) parts.push_back(A + "^" + std::to_string(M.free_rank));
  for (const auto& d : M.torsion) parts.push_back(A + "/(" + to_string(d) + ")");
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

/// Nonzero cohomology modules keyed by degree.
using GradedModule = std::map<int, FgModulePID>;

inline FgModulePID module_at(const GradedModule& g, int n) {
  auto it = g.find(n);
  return it == g.end() ? FgModulePID{} : it->second;
}

namespace detail {

/// The cokernel of B (a presentation matrix) in invariant-factor form.
template <class Dom>
FgModulePID cokernel_pid(const Dom& dom, const Matrix<typename Dom::Element>& B) {
  FgModulePID M;
  if (B.cols() == 0) {
    M.free_rank = B.rows();
    return M;
  }
  auto s = snf(dom, B);
  M.free_rank = B.rows() - s.rank;
  for (const auto& d : s.divisors)
    if (!dom.is_unit(d)) M.torsion.push_back(dom.to_poly(d));
  return M;
}

/// ker d^n and im d^{n-1} inside X^n, as column generators in domain elements.
template <class E>
struct CohomologyLattice {
  Matrix<E> kernel;  // columns form a basis of ker d^n
  Matrix<E> image;   // columns span im d^{n-1}
};

template <class Dom>
CohomologyLattice<typename Dom::Element> cohomology_lattice(const Dom& dom, const FreeComplex& X, int n) {
  return {kernel_basis(dom, to_domain(dom, X.d(n))), to_domain(dom, X.d(n - 1))};
}

template <class Dom>
FgModulePID cohomology_at(const Dom& dom, const FreeComplex& X, int n) {
  using E = typename Dom::Element;
  std::size_t r = X.rank(n);
  if (r == 0) return {};
  auto dn = to_domain(dom, X.d(n));
  auto dprev = to_domain(dom, X.d(n - 1));
  if (dn.rows() == 0) return cokernel_pid(dom, dprev);
  auto s = snf(dom, dn);
  std::size_t k = s.rank;
  Matrix<E> coords = s.V_inv * dprev;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < coords.cols(); ++j)
      if (!dom.is_zero(coords(i, j))) throw CertificationError("image of d^{n-1} leaves ker d^n");
  return cokernel_pid(dom, coords.block(k, 0, r - k, coords.cols()));
}

}  // namespace detail

/// H^n(X) for every degree with nonzero cohomology. Checks the Euler
/// characteristic of free ranks against the alternating sum of ranks.
inline GradedModule cohomology_pid(const FreeComplex& X) {
  return with_euclidean_domain(X.ring(), [&](const auto& dom) {
    GradedModule out;
    long euler_x = 0, euler_h = 0;
    for (auto [n, r] : X.ranks()) {
      auto H = detail::cohomology_at(dom, X, n);
      long sign = n % 2 == 0 ? 1 : -1;
      euler_x += sign * static_cast<long>(r);
      euler_h += sign * static_cast<long>(H.free_rank);
      if (!H.is_zero()) out.emplace(n, std::move(H));
    }
    if (euler_x != euler_h) throw CertificationError("Euler characteristic mismatch in cohomology");
    return out;
  });
}

/// Hom^n(X, Y) in the derived category: cohomology of the Hom complex.
inline GradedModule hom_graded_pid(const FreeComplex& X, const FreeComplex& Y) {
  require_same_ring(X.ring(), Y.ring());
  return cohomology_pid(hom_complex(X, Y));
}

/// Points of Spec A where M is nonzero. Over Z the components are the
/// individual primes; over k[x] the torsion support is V(d_k).
inline SpecClosedSet supp_module_pid(const FgModulePID& M, const Ring& ring) {
  if (M.free_rank > 0) return SpecClosedSet::of(ClosedSet::whole(ring));
  if (M.torsion.empty()) return SpecClosedSet(ring);
  const Poly& top = M.torsion.back();
  std::vector<ClosedSet> comps;
  if (ring.is_integer_ring()) {
    for (const auto& p : integer_prime_factors(detail::int_value(top)))
      comps.emplace_back(Ideal(ring, {detail::int_poly(ring, p)}));
  } else {
    comps.emplace_back(Ideal(ring, {top}));
  }
  return SpecClosedSet(ring, std::move(comps));
}

/// Union of the supports of all cohomology modules.
inline SpecClosedSet supp_graded_pid(const GradedModule& H, const Ring& ring) {
  SpecClosedSet acc(ring);
  for (const auto& [n, M] : H) acc = spec_union(acc, supp_module_pid(M, ring));
  return acc;
}

/// Exactness of H^n(A) -f-> H^n(B) -g-> H^n(C) at the middle term, where
/// f : A^n -> B^n and g : B^n -> C^n are the degree-n components of chain
/// maps. Works on the lattices ker/im directly: the composite must kill
/// ker d_A modulo im d_C, and every kernel class of g must come from A.
template <class Dom>
bool exact_at(const Dom& dom, const detail::CohomologyLattice<typename Dom::Element>& A,
              const detail::CohomologyLattice<typename Dom::Element>& B,
              const detail::CohomologyLattice<typename Dom::Element>& C, const Matrix<typename Dom::Element>& f,
              const Matrix<typename Dom::Element>& g) {
  using E = typename Dom::Element;
  auto column = [](const Matrix<E>& m, std::size_t j) {
    std::vector<E> v;
    for (std::size_t i = 0; i < m.rows(); ++i) v.push_back(m(i, j));
    return v;
  };
  auto concat = [&](const Matrix<E>& a, const Matrix<E>& b) {
    Matrix<E> m(std::max(a.rows(), b.rows()), a.cols() + b.cols(), dom.zero());
    m.set_block(0, 0, a);
    m.set_block(0, a.cols(), b);
    return m;
  };
  std::size_t nb = B.kernel.rows();
  if (nb == 0) return true;

  Matrix<E> gfK = g * f * A.kernel;
  for (std::size_t j = 0; j < gfK.cols(); ++j)
    if (!in_column_span(dom, C.image, column(gfK, j))) return false;

  // Classes of ker d_B killed by g: K_B a with g K_B a ∈ im d_C.
  Matrix<E> gK = g * B.kernel;
  Matrix<E> M = concat(gK, C.image);
  Matrix<E> killed(nb, 0, dom.zero());
  if (M.rows() == 0) {
    killed = B.kernel;
  } else {
    Matrix<E> ker = kernel_basis(dom, M);
    killed = B.kernel * ker.block(0, 0, B.kernel.cols(), ker.cols());
  }
  Matrix<E> from_a = concat(f * A.kernel, B.image);
  for (std::size_t j = 0; j < killed.cols(); ++j)
    if (!in_column_span(dom, from_a, column(killed, j))) return false;
  return true;
}

/// Verifies exactness of the long exact sequence
///   H^n(X) -f-> H^n(Y) -> H^n(cone f) -> H^{n+1}(X) -f-> H^{n+1}(Y)
/// at every position and degree. Returns the first failing degree, if any.
inline std::optional<int> cone_les_failure(const ChainMap& f) {
  FreeComplex C = cone(f);
  ChainMap i = cone_inclusion(f, C);
  ChainMap p = cone_projection(f, C);
  const FreeComplex& X = f.source();
  const FreeComplex& Y = f.target();
  FreeComplex SX = p.target();
  return with_euclidean_domain(X.ring(), [&](const auto& dom) -> std::optional<int> {
    auto degs = support_degrees(X, Y);
    for (int n : support_degrees(C, SX)) degs.push_back(n);
    if (degs.empty()) return std::nullopt;
    std::sort(degs.begin(), degs.end());
    for (int n = degs.front() - 1; n <= degs.back() + 1; ++n) {
      auto LX = detail::cohomology_lattice(dom, X, n);
      auto LY = detail::cohomology_lattice(dom, Y, n);
      auto LC = detail::cohomology_lattice(dom, C, n);
      auto LSX = detail::cohomology_lattice(dom, SX, n);
      auto LY1 = detail::cohomology_lattice(dom, Y, n + 1);
      auto fn = to_domain(dom, f.component(n));
      auto in = to_domain(dom, i.component(n));
      auto pn = to_domain(dom, p.component(n));
      auto fn1 = to_domain(dom, f.component(n + 1));
      // H^n(ΣX) = H^{n+1}(X) with identical lattices up to sign of d.
      if (!exact_at(dom, LX, LY, LC, fn, in)) return n;
      if (!exact_at(dom, LY, LC, LSX, in, pn)) return n;
      if (!exact_at(dom, LC, LSX, LY1, pn, fn1)) return n;
    }
    return std::nullopt;
  });
}

}  // namespace strat
