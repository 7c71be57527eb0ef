#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <string>

#include <boost/container/small_vector.hpp>

#include "strat/errors.hpp"

namespace strat {

/// Exponent vector, one entry per ring variable.
class Monomial {
 public:
  using Exponent = std::int32_t;
  using Storage = boost::container::small_vector<Exponent, 6>;

  static constexpr std::int64_t kMaxExponent = std::numeric_limits<Exponent>::max();

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  Monomial(std::initializer_list<Exponent> e) : exps_(e) {
    for (auto x : exps_)
      if (x < 0) throw Error("negative exponent");
  }

  static Monomial variable(std::size_t nvars, std::size_t i) {
    Monomial m(nvars);
    m.exps_[i] = 1;
    return m;
  }

  std::size_t size() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent& operator[](std::size_t i) { return exps_[i]; }
  auto begin() const { return exps_.begin(); }
  auto end() const { return exps_.end(); }

  std::int64_t degree() const {
    std::int64_t d = 0;
    for (auto e : exps_) d += e;
    return d;
  }

  bool is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
  }

  /// True iff this monomial divides `other`.
  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      std::int64_t s = std::int64_t{a.exps_[i]} + b.exps_[i];
      if (s > kMaxExponent) throw Error("exponent overflow");
      r.exps_[i] = static_cast<Exponent>(s);
    }
    return r;
  }

  /// Exact quotient a / b; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (b.exps_[i] > a.exps_[i]) throw Error("monomial division is not exact");
      r.exps_[i] = a.exps_[i] - b.exps_[i];
    }
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    return r;
  }

  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    return r;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a.exps_[i] != 0 && b.exps_[i] != 0) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

  /// Inserts `count` zero exponents in front (used when adjoining variables).
  Monomial prepended(std::size_t count) const {
    Monomial r(count + exps_.size());
    std::copy(exps_.begin(), exps_.end(), r.exps_.begin() + static_cast<std::ptrdiff_t>(count));
    return r;
  }

  /// Drops the first `count` exponents; they must be zero.
  Monomial dropped(std::size_t count) const {
    Monomial r(exps_.size() - count);
    for (std::size_t i = 0; i < count; ++i)
      if (exps_[i] != 0) throw Error("cannot drop a variable that occurs");
    std::copy(exps_.begin() + static_cast<std::ptrdiff_t>(count), exps_.end(), r.exps_.begin());
    return r;
  }

 private:
  Storage exps_;
};

/// Total, multiplicative well-order on monomials.
class MonomialOrder {
 public:
  enum class Kind { grevlex, lex, elimination };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::lex, 0); }
  /// Grevlex on the first `k` variables, ties broken by grevlex on the rest.
  /// Any monomial involving the leading block beats every monomial that does not.
  static MonomialOrder elimination(std::size_t k) { return MonomialOrder(Kind::elimination, k); }

  Kind kind() const noexcept { return kind_; }
  std::size_t block() const noexcept { return block_; }

  std::string name() const {
    switch (kind_) {
      case Kind::grevlex: return "grevlex";
      case Kind::lex: return "lex";
      case Kind::elimination: return "elim" + std::to_string(block_);
    }
    return "?";
  }

  /// Returns <0, 0, >0 as a is smaller than, equal to, or larger than b.
  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case Kind::lex:
        for (std::size_t i = 0; i < a.size(); ++i)
          if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        return 0;
      case Kind::grevlex: return grevlex_range(a, b, 0, a.size());
      case Kind::elimination: {
        int c = grevlex_range(a, b, 0, block_);
        if (c != 0) return c;
        return grevlex_range(a, b, block_, a.size());
      }
    }
    return 0;
  }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.block_ == b.block_;
  }

 private:
  MonomialOrder(Kind k, std::size_t b) : kind_(k), block_(b) {}

  static int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    std::int64_t da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = hi; i-- > lo;)
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
  }

  Kind kind_;
  std::size_t block_;
};

}  // namespace strat
