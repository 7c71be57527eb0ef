#include <gtest/gtest.h>

#include "strat/poly_io.hpp"
#include "test_util.hpp"

using namespace strat;
using strat::testing::P;
using strat::testing::qring;

TEST(Coefficients, CanonicalForms) {
  auto q = CoefficientDomain::rationals();
  EXPECT_EQ(q.canonical(Rational(4, -6)), Rational(-2, 3));
  auto f7 = CoefficientDomain::prime_field(7);
  EXPECT_EQ(f7.canonical(Rational(-1)), Rational(6));
  EXPECT_EQ(f7.canonical(Rational(1, 2)), Rational(4));
  EXPECT_EQ(f7.mul(Rational(3), Rational(5)), Rational(1));
  EXPECT_THROW(CoefficientDomain::prime_field(9), Error);
  EXPECT_THROW(CoefficientDomain::prime_field(2147483659ULL), Unsupported);
  EXPECT_THROW(CoefficientDomain::integers().canonical(Rational(1, 2)), Error);
}

TEST(PolyAdd, Examples) {
  auto R = qring({"x", "y"});
  EXPECT_EQ(P(R, "x + y") + P(R, "x - y"), P(R, "2*x"));
  auto f = P(R, "3*x^2*y - 1/2*y + 4");
  EXPECT_EQ(f + Poly(R), f);

  Ring F2(CoefficientDomain::prime_field(2), {"x"});
  EXPECT_TRUE((P(F2, "x") + P(F2, "x")).is_zero());
}

TEST(PolyAdd, RingMismatchThrows) {
  auto R = qring({"x", "y"});
  auto S = qring({"x", "z"});
  EXPECT_THROW(P(R, "x") + P(S, "x"), RingMismatch);
  EXPECT_THROW(P(R, "x") * P(S, "x"), RingMismatch);
}

TEST(PolyMul, Examples) {
  auto R = qring({"x", "y"});
  EXPECT_EQ(P(R, "x + y") * P(R, "x - y"), P(R, "x^2 - y^2"));
  auto f = P(R, "x*y^3 - 7/2*x + 1");
  EXPECT_EQ(f * Poly::one(R), f);
  EXPECT_TRUE((f * Poly(R)).is_zero());
}

TEST(PolyMul, ExponentOverflowDetected) {
  auto R = qring({"x"});
  auto big = Poly::monomial(R, Monomial{Monomial::kMaxExponent});
  EXPECT_THROW(big * P(R, "x"), Error);
}

TEST(PolyDivmod, TextbookExample) {
  auto R = qring({"x", "y"}, MonomialOrder::lex());
  auto f = P(R, "x^2*y + x*y^2 + y^2");
  std::vector<Poly> ds{P(R, "x*y - 1"), P(R, "y^2 - 1")};
  auto res = poly_divmod(f, ds);
  ASSERT_EQ(res.quotients.size(), 2u);
  EXPECT_EQ(res.quotients[0], P(R, "x + y"));
  EXPECT_EQ(res.quotients[1], P(R, "1"));
  EXPECT_EQ(res.remainder, P(R, "x + y + 1"));
  // Re-multiplication oracle.
  EXPECT_EQ(f - ds[0] * res.quotients[0] - ds[1] * res.quotients[1], res.remainder);
}

TEST(PolyDivmod, TrivialCases) {
  auto R = qring({"x", "y"});
  auto f = P(R, "x^3 - y*x + 2");
  auto r1 = poly_divmod(f, {f});
  EXPECT_EQ(r1.quotients[0], Poly::one(R));
  EXPECT_TRUE(r1.remainder.is_zero());

  auto r2 = poly_divmod(P(R, "5"), {P(R, "x")});
  EXPECT_TRUE(r2.quotients[0].is_zero());
  EXPECT_EQ(r2.remainder, P(R, "5"));

  EXPECT_THROW(poly_divmod(f, {Poly(R)}), Error);
  EXPECT_THROW(poly_divmod(Poly::one(Ring::integers()), {Poly::one(Ring::integers())}), Unsupported);
}

TEST(PolyDivmod, ReconstructionProperty) {
  strat::testing::Rng rng(11);
  for (auto order : {MonomialOrder::grevlex(), MonomialOrder::lex()}) {
    auto R = qring({"x", "y", "z"}, order);
    for (int iter = 0; iter < 150; ++iter) {
      Poly f = rng.poly(R, 6, 5);
      std::vector<Poly> ds;
      int nd = rng.uniform(1, 3);
      while (static_cast<int>(ds.size()) < nd) {
        Poly d = rng.poly(R, 3, 3);
        if (!d.is_zero()) ds.push_back(d);
      }
      auto res = poly_divmod(f, ds);
      Poly recon = res.remainder;
      for (std::size_t i = 0; i < ds.size(); ++i) recon += res.quotients[i] * ds[i];
      ASSERT_EQ(recon, f);
      for (const auto& t : res.remainder.terms())
        for (const auto& d : ds) ASSERT_FALSE(d.leading_monomial().divides(t.mon));
    }
  }
}

TEST(PolyRing, RingAxiomsRandomized) {
  strat::testing::Rng rng(2024);
  std::vector<Ring> rings{qring({"x"}), qring({"x", "y"}), qring({"x", "y", "z"}),
                          qring({"a", "b", "c", "d"}),
                          Ring(CoefficientDomain::prime_field(5), {"x", "y", "z"})};
  for (int iter = 0; iter < 500; ++iter) {
    const Ring& R = rings[static_cast<std::size_t>(iter) % rings.size()];
    // Degree bound 6 overall: factors of degree <= 2 keep triple products within it.
    Poly a = rng.poly(R, 4, 2), b = rng.poly(R, 4, 2), c = rng.poly(R, 4, 2);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_TRUE((a - a).is_zero());
    ASSERT_LE((a * b * c).degree(), 6);
  }
}

namespace {
std::vector<Monomial> all_monomials(std::size_t nvars, int max_degree) {
  std::vector<Monomial> out;
  Monomial m(nvars);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == nvars) {
      out.push_back(m);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      m[i] = e;
      rec(i + 1, left - e);
    }
    m[i] = 0;
  };
  rec(0, max_degree);
  return out;
}
}  // namespace

TEST(MonomialOrder, LawsExhaustiveDegree4ThreeVars) {
  auto mons = all_monomials(3, 4);
  ASSERT_EQ(mons.size(), 35u);
  Monomial one(3);
  for (auto ord : {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::elimination(1),
                   MonomialOrder::elimination(2)}) {
    for (const auto& a : mons) {
      EXPECT_LE(ord.compare(one, a), 0) << ord.name();
      for (const auto& b : mons) {
        int ab = ord.compare(a, b);
        EXPECT_EQ(ab, -ord.compare(b, a));
        EXPECT_EQ(ab == 0, a == b) << ord.name();  // totality
        if (ab < 0) {
          for (const auto& c : mons) EXPECT_LT(ord.compare(a * c, b * c), 0) << ord.name();
        }
      }
    }
  }
}

TEST(MonomialOrder, EliminationBlockDominates) {
  auto ord = MonomialOrder::elimination(1);
  EXPECT_GT(ord.compare(Monomial{1, 0, 0}, Monomial{0, 5, 7}), 0);
  auto g = MonomialOrder::grevlex();
  EXPECT_GT(g.compare(Monomial{1, 1, 0}, Monomial{1, 0, 1}), 0);  // xy > xz
  EXPECT_GT(g.compare(Monomial{0, 2, 0}, Monomial{1, 0, 1}), 0);  // y^2 > xz
}

TEST(PolyText, ParseAndPrint) {
  auto R = qring({"x", "y", "z"});
  auto f = P(R, "3*x^2*y - 1/2*z + 4");
  EXPECT_EQ(to_string(f), "3*x^2*y - 1/2*z + 4");
  EXPECT_EQ(P(R, "-(x+1)^2"), P(R, "-x^2 - 2*x - 1"));
  EXPECT_EQ(P(R, "x*y/2"), P(R, "1/2*x*y"));
  EXPECT_THROW(P(R, "w + 1"), ParseError);
  EXPECT_THROW(P(R, "x +"), ParseError);
  EXPECT_THROW(P(R, "x / y"), ParseError);
  EXPECT_THROW(P(R, ""), ParseError);
  EXPECT_THROW(P(Ring::integers(), "1/2"), ParseError);
  EXPECT_EQ(to_string(Poly(R)), "0");
}

TEST(PolyText, PrintParseRoundTrip) {
  strat::testing::Rng rng(5);
  auto R = qring({"x", "y", "z"});
  Ring F(CoefficientDomain::prime_field(11), {"u", "v"});
  for (int i = 0; i < 200; ++i) {
    Poly f = rng.poly(R, 6, 6);
    ASSERT_EQ(P(R, to_string(f)), f) << to_string(f);
    Poly g = rng.poly(F, 5, 4);
    ASSERT_EQ(P(F, to_string(g)), g) << to_string(g);
  }
}
