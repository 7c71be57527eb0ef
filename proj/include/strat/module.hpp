#pragma once

/**
 * @file module.hpp
 * @brief Submodules of free modules: Groebner bases, syzygies, lifting,
 * colon modules and saturation.
 *
 * Syzygies and lifts come from one augmented basis: for vectors v_1..v_m in
 * R^k, a Groebner basis of the rows (v_i | e_i) in R^(k+m) under
 * position-over-term order. Its elements supported on the last m positions
 * generate the syzygy module, and reducing (w | 0) to (0 | -a) expresses
 * w = sum a_i v_i.
 */

#include <optional>

#include "strat/groebner.hpp"
#include "strat/matrix.hpp"

namespace strat {

using PolyVector = std::vector<Poly>;
using PolyMatrix = Matrix<Poly>;

inline bool is_zero_vector(const PolyVector& v) {
  for (const auto& p : v)
    if (!p.is_zero()) return false;
  return true;
}

inline PolyVector zero_vector(const Ring& ring, std::size_t rank) { return PolyVector(rank, Poly(ring)); }

inline PolyVector unit_vector(const Ring& ring, std::size_t rank, std::size_t i) {
  auto v = zero_vector(ring, rank);
  v[i] = Poly::one(ring);
  return v;
}

/// Columns of a matrix as vectors.
inline std::vector<PolyVector> columns_of(const PolyMatrix& m) {
  std::vector<PolyVector> cols;
  cols.reserve(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
  return cols;
}

/// Matrix whose columns are the given vectors.
inline PolyMatrix matrix_from_columns(const Ring& ring, std::size_t rows, const std::vector<PolyVector>& cols) {
  PolyMatrix m(rows, cols.size(), Poly(ring));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  return m;
}

namespace detail {
struct ModuleCache {
  std::once_flag once;
  std::vector<Vec> basis;
};
}  // namespace detail

class Submodule {
 public:
  Submodule(Ring ring, std::size_t rank, std::vector<PolyVector> gens)
      : ring_(std::move(ring)), rank_(rank), gens_(std::move(gens)),
        cache_(std::make_shared<detail::ModuleCache>()) {
    if (rank_ == 0) throw Error("ambient rank must be positive");
    for (const auto& g : gens_) {
      if (g.size() != rank_) throw Error("generator length does not match ambient rank");
      for (const auto& p : g) require_same_ring(ring_, p.ring());
    }
  }

  static Submodule full(const Ring& ring, std::size_t rank) {
    std::vector<PolyVector> gens;
    for (std::size_t i = 0; i < rank; ++i) gens.push_back(unit_vector(ring, rank, i));
    return Submodule(ring, rank, std::move(gens));
  }

  const Ring& ring() const noexcept { return ring_; }
  std::size_t rank() const noexcept { return rank_; }
  const std::vector<PolyVector>& generators() const noexcept { return gens_; }

  const std::vector<detail::Vec>& basis_vecs() const {
    std::call_once(cache_->once, [this] {
      std::vector<detail::Vec> vs;
      for (const auto& g : gens_)
        if (!is_zero_vector(g)) vs.push_back(detail::to_vec(g));
      cache_->basis = detail::buchberger(ring_, vs, false);
    });
    return cache_->basis;
  }

  std::vector<PolyVector> groebner_basis() const {
    std::vector<PolyVector> out;
    for (const auto& v : basis_vecs()) out.push_back(detail::from_vec(ring_, v, rank_));
    return out;
  }

 private:
  Ring ring_;
  std::size_t rank_;
  std::vector<PolyVector> gens_;
  std::shared_ptr<detail::ModuleCache> cache_;
};

inline Submodule module_gb(const Submodule& N) {
  Submodule out(N.ring(), N.rank(), N.groebner_basis());
  (void)out.basis_vecs();
  return out;
}

inline PolyVector module_normal_form(const PolyVector& v, const Submodule& N) {
  if (v.size() != N.rank()) throw Error("vector length does not match ambient rank");
  auto r = detail::reduce(N.ring(), detail::to_vec(v), N.basis_vecs(), true);
  return detail::from_vec(N.ring(), r, N.rank());
}

inline bool module_member(const PolyVector& v, const Submodule& N) {
  return detail::reduce(N.ring(), detail::to_vec(v), N.basis_vecs(), true).empty();
}

/// M ⊆ N
inline bool submodule_contains(const Submodule& N, const Submodule& M) {
  for (const auto& g : M.generators())
    if (!module_member(g, N)) return false;
  return true;
}

inline bool submodule_equal(const Submodule& a, const Submodule& b) {
  return submodule_contains(a, b) && submodule_contains(b, a);
}

/// Augmented basis for v_1..v_m in R^k; answers syzygy and lifting queries.
class TrackedBasis {
 public:
  TrackedBasis(const Ring& ring, std::size_t rank, std::vector<PolyVector> vectors)
      : ring_(ring), rank_(rank), vectors_(std::move(vectors)) {
    std::vector<detail::Vec> aug;
    const std::size_t m = vectors_.size();
    for (std::size_t i = 0; i < m; ++i) {
      if (vectors_[i].size() != rank_) throw Error("vector length does not match ambient rank");
      PolyVector row = vectors_[i];
      for (std::size_t j = 0; j < m; ++j) row.push_back(j == i ? Poly::one(ring_) : Poly(ring_));
      aug.push_back(detail::to_vec(row));
    }
    basis_ = detail::buchberger(ring_, aug, false);
  }

  std::size_t count() const noexcept { return vectors_.size(); }

  /// Generators of {c : sum c_i v_i = 0}, each certified by re-substitution.
  std::vector<PolyVector> syzygies() const {
    std::vector<PolyVector> out;
    const std::size_t m = vectors_.size();
    for (const auto& b : basis_) {
      if (b.front().pos < rank_) continue;
      auto full = detail::from_vec(ring_, b, rank_ + m);
      PolyVector c(full.begin() + static_cast<std::ptrdiff_t>(rank_), full.end());
      certify_syzygy(c);
      out.push_back(std::move(c));
    }
    return out;
  }

  /// Coefficients a with w = sum a_i v_i, or nullopt when w is not in the span.
  std::optional<PolyVector> lift(const PolyVector& w) const {
    const std::size_t m = vectors_.size();
    PolyVector row = w;
    for (std::size_t j = 0; j < m; ++j) row.push_back(Poly(ring_));
    auto r = detail::reduce(ring_, detail::to_vec(row), basis_, true);
    if (!r.empty() && r.front().pos < rank_) return std::nullopt;
    auto full = detail::from_vec(ring_, r, rank_ + m);
    PolyVector a;
    for (std::size_t j = 0; j < m; ++j) a.push_back(-full[rank_ + j]);
    if (combine(a) != w) throw CertificationError("lift does not re-substitute");
    return a;
  }

  PolyVector combine(const PolyVector& coeffs) const {
    PolyVector s = zero_vector(ring_, rank_);
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      if (coeffs[j].is_zero()) continue;
      for (std::size_t i = 0; i < rank_; ++i) s[i] += coeffs[j] * vectors_[j][i];
    }
    return s;
  }

 private:
  void certify_syzygy(const PolyVector& c) const {
    if (!is_zero_vector(combine(c))) throw CertificationError("syzygy does not re-substitute to zero");
    ++certification_stats().syzygies;
  }

  Ring ring_;
  std::size_t rank_;
  std::vector<PolyVector> vectors_;
  std::vector<detail::Vec> basis_;
};

/// Generators of the relation module of `vectors` in R^rank; the result
/// lives in R^(number of vectors). An empty input gives an empty list.
inline std::vector<PolyVector> syzygy_generators(const Ring& ring, const std::vector<PolyVector>& vectors,
                                                 std::size_t rank) {
  if (vectors.empty()) return {};
  return TrackedBasis(ring, rank, vectors).syzygies();
}

inline Submodule syzygies(const Ring& ring, const std::vector<PolyVector>& vectors, std::size_t rank) {
  if (vectors.empty()) throw Error("syzygies of an empty list live in R^0");
  return Submodule(ring, vectors.size(), syzygy_generators(ring, vectors, rank));
}

/// M ∩ N inside the common ambient module.
inline Submodule module_intersect(const Submodule& M, const Submodule& N) {
  require_same_ring(M.ring(), N.ring());
  if (M.rank() != N.rank()) throw Error("ambient rank mismatch");
  auto mg = M.groebner_basis();
  auto ng = N.groebner_basis();
  if (mg.empty() || ng.empty()) return Submodule(M.ring(), M.rank(), {});
  std::vector<PolyVector> all = mg;
  all.insert(all.end(), ng.begin(), ng.end());
  TrackedBasis tb(M.ring(), M.rank(), all);
  std::vector<PolyVector> gens;
  for (const auto& s : tb.syzygies()) {
    PolyVector c(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(mg.size()));
    c.resize(all.size(), Poly(M.ring()));
    auto v = tb.combine(c);
    if (!is_zero_vector(v)) gens.push_back(std::move(v));
  }
  return module_gb(Submodule(M.ring(), M.rank(), std::move(gens)));
}

/// (N : f) = {v : f v ∈ N}.
inline Submodule module_colon(const Submodule& N, const Poly& f) {
  const Ring& ring = N.ring();
  const std::size_t k = N.rank();
  if (f.is_zero()) return Submodule::full(ring, k);
  std::vector<PolyVector> cols;
  for (std::size_t i = 0; i < k; ++i) {
    auto e = zero_vector(ring, k);
    e[i] = f;
    cols.push_back(std::move(e));
  }
  for (const auto& g : N.groebner_basis()) cols.push_back(g);
  std::vector<PolyVector> gens;
  for (const auto& s : syzygy_generators(ring, cols, k)) {
    PolyVector v(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(k));
    if (!is_zero_vector(v)) gens.push_back(std::move(v));
  }
  return module_gb(Submodule(ring, k, std::move(gens)));
}

/// (N : a) = intersection over generators f of a of (N : f).
inline Submodule module_colon(const Submodule& N, const Ideal& a) {
  require_same_ring(N.ring(), a.ring());
  std::optional<Submodule> acc;
  for (const auto& f : a.groebner_basis()) {
    Submodule c = module_colon(N, f);
    acc = acc ? module_intersect(*acc, c) : c;
  }
  if (!acc) return Submodule::full(N.ring(), N.rank());  // a = 0 annihilates everything
  return *acc;
}

/// (N : a^∞): the chain (N : a) ⊆ (N : a^2) ⊆ ... iterated until two
/// consecutive stages contain each other.
inline Submodule module_colon_saturate(const Submodule& N, const Ideal& a) {
  Submodule cur = module_gb(N);
  for (;;) {
    Submodule next = module_colon(cur, a);
    if (submodule_contains(cur, next)) {
      if (!submodule_contains(next, cur)) throw CertificationError("saturation chain is not ascending");
      return cur;
    }
    cur = next;
  }
}

}  // namespace strat
