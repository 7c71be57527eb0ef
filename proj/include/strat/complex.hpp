#pragma once

/**
 * @file complex.hpp
 * @brief Bounded complexes of finite free modules and chain maps.
 *
 * Cohomological indexing: d^n maps X^n to X^{n+1} and is stored as a matrix
 * of shape rank(n+1) x rank(n) acting on column vectors. Every constructor
 * checks shapes and d^{n+1} d^n = 0, so no operation can produce an invalid
 * complex.
 *
 * Conventions, fixed once:
 *  - shift:  (Σ^k X)^n = X^{n+k}, differential (-1)^k d_X.
 *  - cone:   C^n = X^{n+1} ⊕ Y^n, d_C = [[-d_X, 0], [f, d_Y]].
 *  - tensor: d(x ⊗ y) = dx ⊗ y + (-1)^|x| x ⊗ dy.
 *  - Hom:    Hom(X,Y)^n = ⊕_i Hom(X^i, Y^{i+n}), D f = d_Y f - (-1)^n f d_X.
 */

#include <map>
#include <optional>

#include "strat/module.hpp"

namespace strat {

class FreeComplex {
 public:
  explicit FreeComplex(Ring ring) : ring_(std::move(ring)) {}

  FreeComplex(Ring ring, std::map<int, std::size_t> ranks, std::map<int, PolyMatrix> diffs)
      : ring_(std::move(ring)) {
    for (auto [n, r] : ranks)
      if (r > 0) ranks_[n] = r;
    for (auto& [n, m] : diffs) {
      if (m.rows() != rank(n + 1) || m.cols() != rank(n))
        throw ValidationError(n, "differential has shape " + std::to_string(m.rows()) + "x" +
                                     std::to_string(m.cols()) + ", expected " + std::to_string(rank(n + 1)) +
                                     "x" + std::to_string(rank(n)));
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
          if (!(m(i, j).ring() == ring_)) throw RingMismatch("differential entry outside " + ring_.describe());
      if (!m.is_zero()) diffs_.emplace(n, std::move(m));
    }
    for (const auto& [n, m] : diffs_) {
      auto it = diffs_.find(n + 1);
      if (it != diffs_.end() && !(it->second * m).is_zero()) throw ValidationError(n, "d^{n+1} d^n != 0");
    }
  }

  static FreeComplex zero(const Ring& ring) { return FreeComplex(ring); }

  /// A^rank placed in a single degree.
  static FreeComplex concentrated(const Ring& ring, int degree = 0, std::size_t rank = 1) {
    return FreeComplex(ring, {{degree, rank}}, {});
  }

  /// A^cols -> A^rows with the source in `degree`.
  static FreeComplex two_term(const Ring& ring, const PolyMatrix& d, int degree = 0) {
    return FreeComplex(ring, {{degree, d.cols()}, {degree + 1, d.rows()}}, {{degree, d}});
  }

  const Ring& ring() const noexcept { return ring_; }
  const std::map<int, std::size_t>& ranks() const noexcept { return ranks_; }

  std::size_t rank(int n) const {
    auto it = ranks_.find(n);
    return it == ranks_.end() ? 0 : it->second;
  }

  /// d^n, as an explicit zero matrix when not stored.
  PolyMatrix d(int n) const {
    auto it = diffs_.find(n);
    if (it != diffs_.end()) return it->second;
    return PolyMatrix(rank(n + 1), rank(n), Poly(ring_));
  }

  bool is_zero() const noexcept { return ranks_.empty(); }

  /// Lowest and highest degree with nonzero rank.
  std::optional<std::pair<int, int>> window() const {
    if (ranks_.empty()) return std::nullopt;
    return std::make_pair(ranks_.begin()->first, ranks_.rbegin()->first);
  }

  std::size_t total_rank() const {
    std::size_t s = 0;
    for (auto [n, r] : ranks_) s += r;
    return s;
  }

  friend bool operator==(const FreeComplex& a, const FreeComplex& b) {
    if (!(a.ring_ == b.ring_) || a.ranks_ != b.ranks_ || a.diffs_.size() != b.diffs_.size()) return false;
    for (const auto& [n, m] : a.diffs_) {
      auto it = b.diffs_.find(n);
      if (it == b.diffs_.end() || !(it->second == m)) return false;
    }
    return true;
  }

 private:
  Ring ring_;
  std::map<int, std::size_t> ranks_;
  std::map<int, PolyMatrix> diffs_;
};

/// Degrees where either complex has a nonzero term.
inline std::vector<int> support_degrees(const FreeComplex& X, const FreeComplex& Y) {
  std::vector<int> out;
  for (auto [n, r] : X.ranks()) out.push_back(n);
  for (auto [n, r] : Y.ranks()) out.push_back(n);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

class ChainMap {
 public:
  /// components[n] : X^n -> Y^n; missing degrees are zero.
  ChainMap(FreeComplex source, FreeComplex target, std::map<int, PolyMatrix> components)
      : src_(std::move(source)), tgt_(std::move(target)) {
    require_same_ring(src_.ring(), tgt_.ring());
    for (auto& [n, m] : components) {
      if (m.rows() != tgt_.rank(n) || m.cols() != src_.rank(n))
        throw ValidationError(n, "chain map component has the wrong shape");
      if (!m.is_zero()) comps_.emplace(n, std::move(m));
    }
    for (int n : support_degrees(src_, tgt_)) {
      if (!(tgt_.d(n) * component(n) == component(n + 1) * src_.d(n)))
        throw ValidationError(n, "chain map does not commute with the differentials");
    }
  }

  static ChainMap scalar(const FreeComplex& X, const Poly& r) {
    require_same_ring(X.ring(), r.ring());
    std::map<int, PolyMatrix> comps;
    for (auto [n, k] : X.ranks()) comps.emplace(n, r * PolyMatrix::identity(k, Poly(X.ring()), Poly::one(X.ring())));
    return ChainMap(X, X, std::move(comps));
  }

  static ChainMap identity(const FreeComplex& X) { return scalar(X, Poly::one(X.ring())); }
  static ChainMap zero(const FreeComplex& X, const FreeComplex& Y) { return ChainMap(X, Y, {}); }

  /// d_Y h + h d_X for h^n : X^n -> Y^{n-1}; always a chain map.
  static ChainMap null_homotopic(const FreeComplex& X, const FreeComplex& Y, const std::map<int, PolyMatrix>& h) {
    auto hat = [&](int n) {
      auto it = h.find(n);
      if (it != h.end()) {
        if (it->second.rows() != Y.rank(n - 1) || it->second.cols() != X.rank(n))
          throw ValidationError(n, "homotopy component has the wrong shape");
        return it->second;
      }
      return PolyMatrix(Y.rank(n - 1), X.rank(n), Poly(X.ring()));
    };
    std::map<int, PolyMatrix> comps;
    for (int n : support_degrees(X, Y)) comps.emplace(n, Y.d(n - 1) * hat(n) + hat(n + 1) * X.d(n));
    return ChainMap(X, Y, std::move(comps));
  }

  const FreeComplex& source() const noexcept { return src_; }
  const FreeComplex& target() const noexcept { return tgt_; }

  PolyMatrix component(int n) const {
    auto it = comps_.find(n);
    if (it != comps_.end()) return it->second;
    return PolyMatrix(tgt_.rank(n), src_.rank(n), Poly(src_.ring()));
  }

  friend ChainMap operator+(const ChainMap& f, const ChainMap& g) {
    if (!(f.src_ == g.src_) || !(f.tgt_ == g.tgt_)) throw ValidationError(0, "adding chain maps with different ends");
    std::map<int, PolyMatrix> comps;
    for (int n : support_degrees(f.src_, f.tgt_)) comps.emplace(n, f.component(n) + g.component(n));
    return ChainMap(f.src_, f.tgt_, std::move(comps));
  }

  /// g ∘ f.
  friend ChainMap compose(const ChainMap& g, const ChainMap& f) {
    if (!(f.tgt_ == g.src_)) throw ValidationError(0, "composing chain maps that do not meet");
    std::map<int, PolyMatrix> comps;
    for (int n : support_degrees(f.src_, g.tgt_)) comps.emplace(n, g.component(n) * f.component(n));
    return ChainMap(f.src_, g.tgt_, std::move(comps));
  }

 private:
  FreeComplex src_, tgt_;
  std::map<int, PolyMatrix> comps_;
};

inline FreeComplex shift(const FreeComplex& X, int k) {
  std::map<int, std::size_t> ranks;
  std::map<int, PolyMatrix> diffs;
  Poly sign = Poly::constant(X.ring(), Rational(k % 2 == 0 ? 1 : -1));
  for (auto [n, r] : X.ranks()) {
    ranks[n - k] = r;
    diffs.emplace(n - k, sign * X.d(n));
  }
  return FreeComplex(X.ring(), std::move(ranks), std::move(diffs));
}

inline FreeComplex cone(const ChainMap& f) {
  const FreeComplex& X = f.source();
  const FreeComplex& Y = f.target();
  const Ring& ring = X.ring();
  Poly zero(ring);
  std::map<int, std::size_t> ranks;
  for (int n : support_degrees(shift(X, 1), Y)) ranks[n] = X.rank(n + 1) + Y.rank(n);
  auto rk = [&](int n) { return X.rank(n + 1) + Y.rank(n); };
  std::map<int, PolyMatrix> diffs;
  for (auto [n, r] : ranks) {
    PolyMatrix m(rk(n + 1), r, zero);
    m.set_block(0, 0, Poly::constant(ring, Rational(-1)) * X.d(n + 1));
    m.set_block(X.rank(n + 2), 0, f.component(n + 1));
    m.set_block(X.rank(n + 2), X.rank(n + 1), Y.d(n));
    if (m.rows() > 0) diffs.emplace(n, std::move(m));
  }
  return FreeComplex(ring, std::move(ranks), std::move(diffs));
}

/// X//r: the cone of multiplication by r on X.
inline FreeComplex koszul_element(const FreeComplex& X, const Poly& r) { return cone(ChainMap::scalar(X, r)); }

/// X//a for a = (r_1, ..., r_m): iterated cones in the given order. An empty
/// generator list returns X itself.
inline FreeComplex koszul_ideal(const FreeComplex& X, const std::vector<Poly>& gens,
                                const std::vector<std::size_t>& order = {}) {
  std::vector<std::size_t> idx = order;
  if (idx.empty())
    for (std::size_t i = 0; i < gens.size(); ++i) idx.push_back(i);
  if (idx.size() != gens.size()) throw ValidationError(0, "generator order is not a permutation");
  std::vector<bool> seen(gens.size(), false);
  for (auto i : idx) {
    if (i >= gens.size() || seen[i]) throw ValidationError(0, "generator order is not a permutation");
    seen[i] = true;
  }
  FreeComplex out = X;
  for (auto i : idx) out = koszul_element(out, gens[i]);
  return out;
}

inline FreeComplex direct_sum(const FreeComplex& X, const FreeComplex& Y) {
  require_same_ring(X.ring(), Y.ring());
  std::map<int, std::size_t> ranks;
  std::map<int, PolyMatrix> diffs;
  for (int n : support_degrees(X, Y)) {
    ranks[n] = X.rank(n) + Y.rank(n);
    auto m = block_diagonal(X.d(n), Y.d(n));
    if (m.rows() > 0 && m.cols() > 0) diffs.emplace(n, std::move(m));
  }
  return FreeComplex(X.ring(), std::move(ranks), std::move(diffs));
}

namespace detail {

/// Placement of summands inside a total complex: for total degree n the
/// blocks are listed by ascending inner index i with their offsets.
struct BlockLayout {
  struct Block {
    int i;
    std::size_t offset, size;
  };
  std::map<int, std::vector<Block>> blocks;
  std::map<int, std::size_t> total;

  void add(int n, int i, std::size_t size) {
    if (size == 0) return;
    blocks[n].push_back({i, total[n], size});
    total[n] += size;
  }
  std::optional<Block> find(int n, int i) const {
    auto it = blocks.find(n);
    if (it == blocks.end()) return std::nullopt;
    for (const auto& b : it->second)
      if (b.i == i) return b;
    return std::nullopt;
  }
  std::size_t size(int n) const {
    auto it = total.find(n);
    return it == total.end() ? 0 : it->second;
  }
};

inline PolyMatrix kron(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix out(a.rows() * b.rows(), a.cols() * b.cols(), a.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

inline Poly sign_poly(const Ring& ring, int n) { return Poly::constant(ring, Rational(n % 2 == 0 ? 1 : -1)); }

}  // namespace detail

/// Total tensor complex. Basis of X^i ⊗ Y^j is ordered as a * rank(Y^j) + b.
inline FreeComplex tensor(const FreeComplex& X, const FreeComplex& Y) {
  require_same_ring(X.ring(), Y.ring());
  const Ring& ring = X.ring();
  detail::BlockLayout L;
  for (auto [i, rx] : X.ranks())
    for (auto [j, ry] : Y.ranks()) L.add(i + j, i, rx * ry);
  std::map<int, std::size_t> ranks(L.total.begin(), L.total.end());
  std::map<int, PolyMatrix> diffs;
  for (const auto& [n, blocks] : L.blocks) {
    PolyMatrix m(L.size(n + 1), L.size(n), Poly(ring));
    for (const auto& b : blocks) {
      int i = b.i, j = n - b.i;
      auto Ix = PolyMatrix::identity(X.rank(i), Poly(ring), Poly::one(ring));
      auto Iy = PolyMatrix::identity(Y.rank(j), Poly(ring), Poly::one(ring));
      if (auto t = L.find(n + 1, i + 1)) m.set_block(t->offset, b.offset, detail::kron(X.d(i), Iy));
      if (auto t = L.find(n + 1, i)) m.set_block(t->offset, b.offset, detail::sign_poly(ring, i) * detail::kron(Ix, Y.d(j)));
    }
    if (m.rows() > 0) diffs.emplace(n, std::move(m));
  }
  return FreeComplex(ring, std::move(ranks), std::move(diffs));
}

/// Hom(X, Y) as a complex of free modules. A map X^i -> Y^{i+n} is stored
/// flattened row-major inside the block for index i.
inline FreeComplex hom_complex(const FreeComplex& X, const FreeComplex& Y) {
  require_same_ring(X.ring(), Y.ring());
  const Ring& ring = X.ring();
  detail::BlockLayout L;
  for (auto [i, rx] : X.ranks())
    for (auto [j, ry] : Y.ranks()) L.add(j - i, i, rx * ry);
  std::map<int, std::size_t> ranks(L.total.begin(), L.total.end());
  std::map<int, PolyMatrix> diffs;
  Poly zero(ring);
  for (const auto& [n, blocks] : L.blocks) {
    PolyMatrix m(L.size(n + 1), L.size(n), zero);
    Poly sgn = detail::sign_poly(ring, n);
    for (const auto& b : blocks) {
      int i = b.i;
      std::size_t rx = X.rank(i), ry = Y.rank(i + n);
      // d_Y^{i+n} f : X^i -> Y^{i+n+1}, landing in block i of degree n+1.
      if (auto t = L.find(n + 1, i)) {
        PolyMatrix dY = Y.d(i + n);
        for (std::size_t p = 0; p < dY.rows(); ++p)
          for (std::size_t q = 0; q < rx; ++q)
            for (std::size_t s = 0; s < ry; ++s)
              if (!dY(p, s).is_zero()) m(t->offset + p * rx + q, b.offset + s * rx + q) += dY(p, s);
      }
      // -(-1)^n f d_X^{i-1} : X^{i-1} -> Y^{i+n}, landing in block i-1.
      if (auto t = L.find(n + 1, i - 1)) {
        PolyMatrix dX = X.d(i - 1);
        std::size_t rx0 = X.rank(i - 1);
        for (std::size_t p = 0; p < ry; ++p)
          for (std::size_t q = 0; q < rx0; ++q)
            for (std::size_t s = 0; s < rx; ++s)
              if (!dX(s, q).is_zero()) m(t->offset + p * rx0 + q, b.offset + p * rx + s) -= sgn * dX(s, q);
      }
    }
    if (m.rows() > 0) diffs.emplace(n, std::move(m));
  }
  return FreeComplex(ring, std::move(ranks), std::move(diffs));
}

/// Inclusion Y -> cone(f) and projection cone(f) -> ΣX.
inline ChainMap cone_inclusion(const ChainMap& f, const FreeComplex& C) {
  const FreeComplex& X = f.source();
  const FreeComplex& Y = f.target();
  std::map<int, PolyMatrix> comps;
  for (auto [n, r] : Y.ranks()) {
    PolyMatrix m(C.rank(n), r, Poly(Y.ring()));
    m.set_block(X.rank(n + 1), 0, PolyMatrix::identity(r, Poly(Y.ring()), Poly::one(Y.ring())));
    comps.emplace(n, std::move(m));
  }
  return ChainMap(Y, C, std::move(comps));
}

inline ChainMap cone_projection(const ChainMap& f, const FreeComplex& C) {
  const FreeComplex& X = f.source();
  FreeComplex SX = shift(X, 1);
  std::map<int, PolyMatrix> comps;
  for (auto [n, r] : SX.ranks()) {
    PolyMatrix m(r, C.rank(n), Poly(X.ring()));
    m.set_block(0, 0, PolyMatrix::identity(r, Poly(X.ring()), Poly::one(X.ring())));
    comps.emplace(n, std::move(m));
  }
  return ChainMap(C, SX, std::move(comps));
}

}  // namespace strat
