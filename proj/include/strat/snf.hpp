#pragma once

/**
 * @file snf.hpp
 * @brief Smith normal form over a Euclidean domain, with transforms.
 *
 * Produces U A V = D with D diagonal, d_1 | d_2 | ..., every nonzero d_i in
 * canonical form (positive integer or monic polynomial), and U, V together
 * with their inverses. Pivots are chosen as the entry of least norm in the
 * remaining block, first in row-major order; ties never depend on anything
 * but position, so the output is a function of the input.
 */

#include <optional>

#include "strat/certify.hpp"
#include "strat/euclid.hpp"
#include "strat/matrix.hpp"

namespace strat {

template <class E>
struct SNFResult {
  Matrix<E> D, U, V, U_inv, V_inv;
  std::vector<E> divisors;  // nonzero diagonal entries, in order
  std::size_t rank = 0;
};

namespace detail {

template <class Dom>
class SmithReducer {
 public:
  using E = typename Dom::Element;

  SmithReducer(const Dom& dom, const Matrix<E>& a)
      : dom_(dom), A_(a),
        U_(Matrix<E>::identity(a.rows(), dom.zero(), dom.one())), Ui_(U_),
        V_(Matrix<E>::identity(a.cols(), dom.zero(), dom.one())), Vi_(V_) {}

  SNFResult<E> run() {
    const std::size_t m = A_.rows(), n = A_.cols();
    std::size_t t = 0;
    for (; t < std::min(m, n); ++t) {
      auto piv = smallest(t, m, t, n);
      if (!piv) break;
      swap_rows(t, piv->first);
      swap_cols(t, piv->second);
      for (;;) {
        if (clear_column(t)) continue;
        if (clear_row(t)) continue;
        if (fix_divisibility(t)) continue;
        break;
      }
      E u = dom_.canonical_unit(A_(t, t));
      if (!(u == dom_.one())) scale_row(t, u);
    }
    SNFResult<E> res{A_, U_, V_, Ui_, Vi_, {}, t};
    for (std::size_t i = 0; i < t; ++i) res.divisors.push_back(A_(i, i));
    return res;
  }

 private:
  std::optional<std::pair<std::size_t, std::size_t>> smallest(std::size_t r0, std::size_t r1, std::size_t c0,
                                                               std::size_t c1) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = r0; i < r1; ++i)
      for (std::size_t j = c0; j < c1; ++j) {
        if (dom_.is_zero(A_(i, j))) continue;
        if (!best || dom_.compare_norm(A_(i, j), A_(best->first, best->second)) < 0) best = {i, j};
      }
    return best;
  }

  // Returns true when a nonzero remainder forced a new pivot.
  bool clear_column(std::size_t t) {
    bool residue = false;
    for (std::size_t i = t + 1; i < A_.rows(); ++i) {
      if (dom_.is_zero(A_(i, t))) continue;
      auto [q, r] = dom_.divmod(A_(i, t), A_(t, t));
      if (!dom_.is_zero(q)) row_axpy(i, t, q);
      if (!dom_.is_zero(r)) residue = true;
    }
    if (!residue) return false;
    auto piv = smallest(t, A_.rows(), t, t + 1);
    swap_rows(t, piv->first);
    return true;
  }

  bool clear_row(std::size_t t) {
    bool residue = false;
    for (std::size_t j = t + 1; j < A_.cols(); ++j) {
      if (dom_.is_zero(A_(t, j))) continue;
      auto [q, r] = dom_.divmod(A_(t, j), A_(t, t));
      if (!dom_.is_zero(q)) col_axpy(j, t, q);
      if (!dom_.is_zero(r)) residue = true;
    }
    if (!residue) return false;
    auto piv = smallest(t, t + 1, t, A_.cols());
    swap_cols(t, piv->second);
    return true;
  }

  bool fix_divisibility(std::size_t t) {
    for (std::size_t i = t + 1; i < A_.rows(); ++i)
      for (std::size_t j = t + 1; j < A_.cols(); ++j)
        if (!dom_.divides(A_(t, t), A_(i, j))) {
          // row_t += row_i
          A_.add_row_multiple(t, i, dom_.one());
          U_.add_row_multiple(t, i, dom_.one());
          Ui_.add_col_multiple(i, t, E(dom_.zero() - dom_.one()));
          return true;
        }
    return false;
  }

  // row_i -= q row_t
  void row_axpy(std::size_t i, std::size_t t, const E& q) {
    E mq = dom_.zero() - q;
    A_.add_row_multiple(i, t, mq);
    U_.add_row_multiple(i, t, mq);
    Ui_.add_col_multiple(t, i, q);
  }

  // col_j -= q col_t
  void col_axpy(std::size_t j, std::size_t t, const E& q) {
    E mq = dom_.zero() - q;
    A_.add_col_multiple(j, t, mq);
    V_.add_col_multiple(j, t, mq);
    Vi_.add_row_multiple(t, j, q);
  }

  void swap_rows(std::size_t a, std::size_t b) {
    A_.swap_rows(a, b);
    U_.swap_rows(a, b);
    Ui_.swap_cols(a, b);
  }

  void swap_cols(std::size_t a, std::size_t b) {
    A_.swap_cols(a, b);
    V_.swap_cols(a, b);
    Vi_.swap_rows(a, b);
  }

  void scale_row(std::size_t t, const E& u) {
    A_.scale_row(t, u);
    U_.scale_row(t, u);
    Ui_.scale_col(t, dom_.unit_inverse(u));
  }

  const Dom& dom_;
  Matrix<E> A_, U_, Ui_, V_, Vi_;
};

}  // namespace detail

/// Smith normal form with certification: U A V = D, U U^-1 = I, V V^-1 = I
/// are recomputed exactly before returning.
template <class Dom>
SNFResult<typename Dom::Element> snf(const Dom& dom, const Matrix<typename Dom::Element>& a) {
  using E = typename Dom::Element;
  auto res = detail::SmithReducer<Dom>(dom, a).run();
  if (!(res.U * a * res.V == res.D)) throw CertificationError("Smith form: U A V != D");
  auto Im = Matrix<E>::identity(a.rows(), dom.zero(), dom.one());
  auto In = Matrix<E>::identity(a.cols(), dom.zero(), dom.one());
  if (!(res.U * res.U_inv == Im) || !(res.V * res.V_inv == In))
    throw CertificationError("Smith form: transform is not invertible");
  for (std::size_t i = 0; i + 1 < res.divisors.size(); ++i)
    if (!dom.divides(res.divisors[i], res.divisors[i + 1]))
      throw CertificationError("Smith form: divisibility chain broken");
  ++certification_stats().smith_forms;
  return res;
}

/// Whether v lies in the column span of M.
template <class Dom>
bool in_column_span(const Dom& dom, const Matrix<typename Dom::Element>& M,
                    const std::vector<typename Dom::Element>& v) {
  using E = typename Dom::Element;
  if (M.cols() == 0) {
    for (const auto& x : v)
      if (!dom.is_zero(x)) return false;
    return true;
  }
  auto s = snf(dom, M);
  Matrix<E> col(v.size(), 1, dom.zero());
  for (std::size_t i = 0; i < v.size(); ++i) col(i, 0) = v[i];
  auto w = s.U * col;
  for (std::size_t i = 0; i < w.rows(); ++i) {
    if (i < s.rank) {
      if (!dom.divides(s.divisors[i], w(i, 0))) return false;
    } else if (!dom.is_zero(w(i, 0))) {
      return false;
    }
  }
  return true;
}

/// Columns spanning the kernel of M (a free module over a PID).
template <class Dom>
Matrix<typename Dom::Element> kernel_basis(const Dom& dom, const Matrix<typename Dom::Element>& M) {
  if (M.rows() == 0) return Matrix<typename Dom::Element>::identity(M.cols(), dom.zero(), dom.one());
  auto s = snf(dom, M);
  return s.V.block(0, s.rank, M.cols(), M.cols() - s.rank);
}

/// Converts a Poly matrix to the domain's element type and back.
template <class Dom>
Matrix<typename Dom::Element> to_domain(const Dom& dom, const Matrix<Poly>& m) {
  Matrix<typename Dom::Element> out(m.rows(), m.cols(), dom.zero());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = dom.from_poly(m(i, j));
  return out;
}

template <class Dom>
Matrix<Poly> from_domain(const Dom& dom, const Matrix<typename Dom::Element>& m) {
  Matrix<Poly> out(m.rows(), m.cols(), Poly(dom.ring()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = dom.to_poly(m(i, j));
  return out;
}

}  // namespace strat
