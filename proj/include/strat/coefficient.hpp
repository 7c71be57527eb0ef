#pragma once

/**
 * @file coefficient.hpp
 * @brief Exact scalar domains: the rationals, prime fields and the integers.
 *
 * All scalars are carried as GMP rationals. Each domain keeps them in a
 * canonical form so that equality of scalars is structural: rationals in
 * lowest terms with positive denominator, prime-field elements as integers
 * in [0, p), integers with denominator one.
 */

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "strat/errors.hpp"

namespace strat {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

class CoefficientDomain {
 public:
  enum class Kind { rational, prime_field, integer };

  static CoefficientDomain rationals() { return CoefficientDomain(Kind::rational, 0); }
  static CoefficientDomain integers() { return CoefficientDomain(Kind::integer, 0); }

  static CoefficientDomain prime_field(std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 31)) throw Unsupported("prime field modulus must be < 2^31");
    if (!is_prime_u64(p)) throw Error("prime field modulus " + std::to_string(p) + " is not prime");
    return CoefficientDomain(Kind::prime_field, static_cast<std::uint32_t>(p));
  }

  Kind kind() const noexcept { return kind_; }
  bool is_field() const noexcept { return kind_ != Kind::integer; }
  bool is_integer() const noexcept { return kind_ == Kind::integer; }
  std::uint32_t modulus() const noexcept { return modulus_; }

  std::string name() const {
    switch (kind_) {
      case Kind::rational: return "Q";
      case Kind::integer: return "Z";
      case Kind::prime_field: return "F" + std::to_string(modulus_);
    }
    return "?";
  }

  /// Brings an arbitrary rational into this domain's canonical form.
  Rational canonical(Rational a) const {
    a.canonicalize();
    switch (kind_) {
      case Kind::rational: return a;
      case Kind::integer:
        if (a.get_den() != 1) throw Error("non-integral value " + a.get_str() + " in Z");
        return a;
      case Kind::prime_field: {
        Integer p = modulus_;
        Integer num = a.get_num() % p;
        if (num < 0) num += p;
        Integer den = a.get_den() % p;
        if (den == 0) throw Error("denominator divisible by the characteristic");
        Integer inv;
        mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
        Integer r = (num * inv) % p;
        return Rational(r);
      }
    }
    return a;
  }

  Rational add(const Rational& a, const Rational& b) const {
    if (kind_ == Kind::prime_field) return reduce_int(a.get_num() + b.get_num());
    return a + b;
  }

  Rational sub(const Rational& a, const Rational& b) const {
    if (kind_ == Kind::prime_field) return reduce_int(a.get_num() - b.get_num());
    return a - b;
  }

  Rational mul(const Rational& a, const Rational& b) const {
    if (kind_ == Kind::prime_field) return reduce_int(a.get_num() * b.get_num());
    return a * b;
  }

  Rational neg(const Rational& a) const {
    if (kind_ == Kind::prime_field) return reduce_int(-a.get_num());
    return -a;
  }

  bool is_unit(const Rational& a) const {
    if (a == 0) return false;
    if (kind_ == Kind::integer) return abs(a.get_num()) == 1;
    return true;
  }

  Rational inv(const Rational& a) const {
    if (!is_unit(a)) throw Error("inverse of a non-unit " + a.get_str() + " in " + name());
    if (kind_ == Kind::prime_field) {
      Integer p = modulus_;
      Integer n = a.get_num();
      Integer r;
      mpz_invert(r.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
      return Rational(r);
    }
    Rational r = 1;
    r /= a;
    return r;
  }

  Rational div(const Rational& a, const Rational& b) const { return mul(a, inv(b)); }

  friend bool operator==(const CoefficientDomain& a, const CoefficientDomain& b) {
    return a.kind_ == b.kind_ && a.modulus_ == b.modulus_;
  }

 private:
  CoefficientDomain(Kind k, std::uint32_t p) : kind_(k), modulus_(p) {}

  Rational reduce_int(Integer n) const {
    Integer p = modulus_;
    n %= p;
    if (n < 0) n += p;
    return Rational(n);
  }

  Kind kind_;
  std::uint32_t modulus_;
};

}  // namespace strat
