#include <gtest/gtest.h>

#include "strat/closed_set.hpp"
#include "strat/module.hpp"
#include "test_util.hpp"

using namespace strat;
using strat::testing::P;
using strat::testing::qring;

namespace {

Ideal I(const Ring& R, std::initializer_list<const char*> gens) {
  std::vector<Poly> ps;
  for (auto g : gens) ps.push_back(P(R, g));
  return Ideal(R, std::move(ps));
}

ClosedSet V(const Ring& R, std::initializer_list<const char*> gens) { return ClosedSet(I(R, gens)); }

PolyVector vec(const Ring& R, std::initializer_list<const char*> comps) {
  PolyVector v;
  for (auto c : comps) v.push_back(P(R, c));
  return v;
}

}  // namespace

TEST(Groebner, TwistedCubicEliminant) {
  auto R = qring({"x", "y", "z"}, MonomialOrder::lex());
  auto J = I(R, {"y - x^2", "z - x^3"});
  const auto& basis = J.groebner_basis();
  // Elements of the basis free of x generate the elimination ideal.
  bool found = false;
  for (const auto& g : basis)
    if (g == P(R, "y^3 - z^2")) found = true;
  EXPECT_TRUE(found);
  EXPECT_TRUE(member(P(R, "y^3 - z^2"), J));
  EXPECT_EQ(basis.size(), 4u);  // x^2 - y, x*y - z, x*z - y^2, y^3 - z^2
  for (const auto& g : basis) EXPECT_EQ(g.leading_coef(), 1);
}

TEST(Groebner, TrivialBases) {
  auto R = qring({"x", "y"});
  auto unit = I(R, {"1"}).groebner_basis();
  ASSERT_EQ(unit.size(), 1u);
  EXPECT_EQ(unit[0], Poly::one(R));
  auto dup = I(R, {"x", "x"}).groebner_basis();
  ASSERT_EQ(dup.size(), 1u);
  EXPECT_EQ(dup[0], P(R, "x"));
  EXPECT_TRUE(Ideal::zero(R).groebner_basis().empty());
}

TEST(Groebner, SelfCheckCountsEveryBasis) {
  auto R = qring({"x", "y", "z"});
  auto before = certification_stats().groebner_bases.load();
  (void)I(R, {"x*y - z", "y*z - x", "x*z - y"}).groebner_basis();
  EXPECT_EQ(certification_stats().groebner_bases.load(), before + 1);
}

TEST(Groebner, IntegerRingIsNotABuchbergerBackend) {
  std::vector<detail::Vec> none;
  EXPECT_THROW(detail::buchberger(Ring::integers(), none, true), Unsupported);
  Ring ZX(CoefficientDomain::integers(), {"x"});
  EXPECT_THROW(Ideal(ZX, {}), Unsupported);
}

TEST(Member, Examples) {
  auto R = qring({"x", "y"});
  auto J = I(R, {"x^2", "y"});
  EXPECT_TRUE(member(P(R, "x^2 + 3*y"), J));
  EXPECT_FALSE(member(P(R, "x"), J));
  EXPECT_EQ(normal_form(P(R, "x"), J), P(R, "x"));
  EXPECT_TRUE(member(Poly(R), J));
}

TEST(Member, ClosedUnderCombinations) {
  strat::testing::Rng rng(7);
  auto R = qring({"x", "y", "z"});
  for (int iter = 0; iter < 200; ++iter) {
    std::vector<Poly> gens{rng.poly(R, 3, 2), rng.poly(R, 3, 2)};
    Ideal J(R, gens);
    Poly f = gens[0] * rng.poly(R, 3, 2) + gens[1] * rng.poly(R, 2, 2);
    Poly g = gens[1] * rng.poly(R, 2, 1);
    Poly h = rng.poly(R, 3, 2);
    ASSERT_TRUE(member(f, J));
    ASSERT_TRUE(member(g, J));
    ASSERT_TRUE(member(f + h * g, J));
  }
}

TEST(RadicalMember, Examples) {
  auto R = qring({"x", "y"});
  auto J = I(R, {"x^2"});
  EXPECT_TRUE(radical_member(P(R, "x"), J));
  EXPECT_FALSE(radical_member(P(R, "y"), J));
  // Oracle: no small power of y lies in (x^2).
  for (unsigned k = 1; k <= 6; ++k) EXPECT_FALSE(member(pow(P(R, "y"), k), J));
}

TEST(RadicalMember, ContainsIdealAndIsIdempotent) {
  strat::testing::Rng rng(99);
  auto R = qring({"x", "y", "z"});
  for (int iter = 0; iter < 100; ++iter) {
    std::vector<Poly> gens{rng.poly(R, 2, 2), rng.poly(R, 2, 2)};
    Ideal J(R, gens);
    Poly f = gens[0] * rng.poly(R, 2, 1) + gens[1] * rng.poly(R, 2, 1);
    ASSERT_TRUE(radical_member(f, J));
    if (iter < 40) {
      Poly g = rng.poly(R, 2, 2);
      ASSERT_EQ(radical_member(g, J), radical_member(g * g, J));
    }
  }
}

TEST(RadicalMember, IntegerRing) {
  Ring Z = Ring::integers();
  Ideal twelve(Z, {Poly::constant(Z, 12)});
  EXPECT_TRUE(radical_member(Poly::constant(Z, 6), twelve));
  EXPECT_FALSE(radical_member(Poly::constant(Z, 2), twelve));
  EXPECT_TRUE(radical_member(Poly::constant(Z, 30), twelve));
  EXPECT_FALSE(radical_member(Poly::constant(Z, 3), Ideal::zero(Z)));
}

TEST(Saturate, Examples) {
  auto R = qring({"x", "y"});
  auto sat = saturate(I(R, {"x*y"}), P(R, "y"));
  EXPECT_TRUE(ideal_equal(sat, I(R, {"x"})));
  // Oracle: iterated colon through the syzygy route, (xy : y) = (x), (x : y) = (x).
  Submodule N(R, 1, {vec(R, {"x*y"})});
  Submodule c1 = module_colon(N, P(R, "y"));
  Submodule c2 = module_colon(c1, P(R, "y"));
  EXPECT_TRUE(submodule_equal(c1, c2));
  EXPECT_TRUE(submodule_equal(c1, Submodule(R, 1, {vec(R, {"x"})})));

  auto J = I(R, {"x^2 - y", "x*y^2"});
  EXPECT_TRUE(ideal_equal(saturate(J, Poly::one(R)), J));
  EXPECT_TRUE(saturate(I(R, {"x^2"}), P(R, "x")).is_unit());
  EXPECT_THROW(saturate(J, Poly(R)), Error);
}

TEST(Saturate, ContainsAndStable) {
  strat::testing::Rng rng(3);
  auto R = qring({"x", "y", "z"});
  const std::vector<Poly> pool{P(R, "x"), P(R, "y"), P(R, "x - 1"), P(R, "x*y"), P(R, "z + y")};
  for (int iter = 0; iter < 40; ++iter) {
    Ideal J(R, {rng.pick(pool) * rng.pick(pool), rng.pick(pool) * rng.poly(R, 2, 1)});
    Poly f = rng.pick(pool);
    Ideal S = saturate(J, f);
    ASSERT_TRUE(ideal_contains(S, J));
    ASSERT_TRUE(ideal_equal(saturate(S, f), S));
  }
}

TEST(ClosedSets, SubsetExamples) {
  auto R = qring({"x", "y"});
  EXPECT_TRUE(closed_subset_of(V(R, {"x", "y"}), V(R, {"x"})));
  EXPECT_TRUE(closed_subset_of(V(R, {"x"}), V(R, {"x*y"})));
  EXPECT_FALSE(closed_subset_of(V(R, {"x"}), V(R, {"y"})));
}

TEST(ClosedSets, UnionIntersectEmpty) {
  auto R = qring({"x", "y"});
  EXPECT_TRUE(closed_equal(closed_union(V(R, {"x"}), V(R, {"y"})), V(R, {"x*y"})));
  EXPECT_TRUE(closed_is_empty(closed_intersect(V(R, {"x"}), V(R, {"1 - x"}))));
  auto W = V(R, {"x^2 - y", "y^3"});
  EXPECT_TRUE(closed_equal(closed_intersect(ClosedSet::whole(R), W), W));
  EXPECT_TRUE(closed_equal(W, V(R, {"x", "y"})));  // equality is up to radical
}

TEST(ClosedSets, LatticeLawsOnTwelveIdeals) {
  auto R = qring({"x", "y", "z"});
  std::vector<ClosedSet> fam{
      V(R, {"0"}),         V(R, {"x"}),         V(R, {"y"}),          V(R, {"x*y"}),
      V(R, {"x", "y"}),    V(R, {"x", "y", "z"}), V(R, {"x - 1"}),    V(R, {"x^2", "y*z"}),
      V(R, {"z^2 - x"}),   V(R, {"x*y*z"}),     V(R, {"1"}),          V(R, {"y - z", "x + 1"})};
  ASSERT_EQ(fam.size(), 12u);
  for (const auto& a : fam) {
    EXPECT_TRUE(closed_subset_of(a, a));
    for (const auto& b : fam) {
      EXPECT_TRUE(closed_equal(closed_union(a, b), closed_union(b, a)));
      EXPECT_TRUE(closed_equal(closed_intersect(a, b), closed_intersect(b, a)));
      EXPECT_TRUE(closed_equal(closed_union(a, closed_intersect(a, b)), a));  // absorption
      EXPECT_TRUE(closed_equal(closed_intersect(a, closed_union(a, b)), a));
      if (closed_subset_of(a, b) && closed_subset_of(b, a)) {
        EXPECT_TRUE(closed_equal(a, b));
      }
    }
  }
  // Associativity and transitivity on a sample of triples.
  for (std::size_t i = 0; i < fam.size(); i += 2)
    for (std::size_t j = 1; j < fam.size(); j += 3)
      for (std::size_t k = 0; k < fam.size(); k += 4) {
        const auto &a = fam[i], &b = fam[j], &c = fam[k];
        EXPECT_TRUE(closed_equal(closed_union(closed_union(a, b), c), closed_union(a, closed_union(b, c))));
        EXPECT_TRUE(closed_equal(closed_intersect(closed_intersect(a, b), c),
                                 closed_intersect(a, closed_intersect(b, c))));
        if (closed_subset_of(a, b) && closed_subset_of(b, c)) {
          EXPECT_TRUE(closed_subset_of(a, c));
        }
      }
}

TEST(SpecClosedSets, CanonicalizationAndOps) {
  auto R = qring({"x", "y"});
  SpecClosedSet s(R, {V(R, {"x"}), V(R, {"x", "y"}), V(R, {"1"}), V(R, {"x^2"})});
  ASSERT_EQ(s.components().size(), 1u);
  EXPECT_TRUE(closed_equal(s.components()[0], V(R, {"x"})));
  SpecClosedSet t(R, {V(R, {"y"})});
  auto u = spec_union(s, t);
  EXPECT_EQ(u.components().size(), 2u);
  EXPECT_TRUE(spec_equal(u, SpecClosedSet::of(V(R, {"x*y"}))));
  EXPECT_TRUE(spec_equal(spec_intersect(s, t), SpecClosedSet::of(V(R, {"x", "y"}))));
  EXPECT_TRUE(u.contains_point(I(R, {"x", "y - 3"})));
  EXPECT_FALSE(u.contains_point(I(R, {"x - 1", "y - 1"})));
  EXPECT_TRUE(spec_subset_of(SpecClosedSet(R), t));
  EXPECT_FALSE(spec_subset_of(t, SpecClosedSet(R)));
}

TEST(PrimeIdeals, Verification) {
  auto R = qring({"x", "y"});
  EXPECT_TRUE(PrimeIdeal::make(I(R, {"x", "y"}), false).verified());
  EXPECT_TRUE(PrimeIdeal::make(I(R, {"x - 1", "y"}), false).verified());
  EXPECT_TRUE(PrimeIdeal::make(Ideal::zero(R), false).verified());
  EXPECT_TRUE(PrimeIdeal::make(I(R, {"x^2 + 1"}), false).verified());
  EXPECT_THROW(PrimeIdeal::make(I(R, {"x^2 - 1"}), true), Error);
  EXPECT_THROW(PrimeIdeal::make(I(R, {"1"}), true), Error);
  EXPECT_THROW(PrimeIdeal::make(I(R, {"x^2 + y^3 + 1"}), false), Error);
  auto asserted = PrimeIdeal::make(I(R, {"x^2 + y^3 + 1"}), true);
  EXPECT_FALSE(asserted.verified());

  Ring Z = Ring::integers();
  EXPECT_TRUE(PrimeIdeal::make(Ideal(Z, {Poly::constant(Z, 7)}), false).verified());
  EXPECT_THROW(PrimeIdeal::make(Ideal(Z, {Poly::constant(Z, 6)}), true), Error);
}

TEST(ModuleGb, Examples) {
  auto R = qring({"x", "y"});
  Submodule single(R, 2, {vec(R, {"x", "y"})});
  auto gb1 = single.groebner_basis();
  ASSERT_EQ(gb1.size(), 1u);
  EXPECT_EQ(gb1[0], vec(R, {"x", "y"}));

  auto full = Submodule::full(R, 2);
  EXPECT_TRUE(module_member(vec(R, {"x^3 - 7", "y*x + 1/2"}), full));

  Submodule N(R, 2, {vec(R, {"x", "0"}), vec(R, {"y", "0"})});
  EXPECT_TRUE(module_member(vec(R, {"x*y", "0"}), N));
  EXPECT_FALSE(module_member(vec(R, {"1", "0"}), N));
  EXPECT_FALSE(module_member(vec(R, {"0", "x"}), N));
}

TEST(Syzygies, KoszulRelation) {
  auto R = qring({"x", "y"});
  std::vector<PolyVector> vs{vec(R, {"x"}), vec(R, {"y"})};
  Submodule S = syzygies(R, vs, 1);
  ASSERT_EQ(S.generators().size(), 1u);
  // Certified generator: any syzygy (a, b) with a x + b y = 0 reduces to zero.
  EXPECT_TRUE(submodule_equal(S, Submodule(R, 2, {vec(R, {"y", "-x"})})));
  EXPECT_TRUE(module_member(vec(R, {"x*y + y^2", "-x^2 - x*y"}), S));
}

TEST(Syzygies, TrivialCases) {
  auto R = qring({"x", "y"});
  auto f = P(R, "x^2 + y");
  Submodule none = syzygies(R, {PolyVector{f}}, 1);
  EXPECT_TRUE(none.generators().empty());
  Submodule twin = syzygies(R, {PolyVector{f}, PolyVector{f}}, 1);
  EXPECT_TRUE(submodule_equal(twin, Submodule(R, 2, {vec(R, {"1", "-1"})})));
}

TEST(Syzygies, RandomVectorsCertify) {
  strat::testing::Rng rng(17);
  auto R = qring({"x", "y"});
  for (int iter = 0; iter < 30; ++iter) {
    std::vector<PolyVector> vs;
    for (int i = 0; i < 3; ++i) vs.push_back({rng.poly(R, 2, 2), rng.poly(R, 2, 2)});
    auto before = certification_stats().syzygies.load();
    auto syz = syzygy_generators(R, vs, 2);
    EXPECT_EQ(certification_stats().syzygies.load(), before + syz.size());
    for (const auto& s : syz) {
      PolyVector sum = zero_vector(R, 2);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t c = 0; c < 2; ++c) sum[c] += s[i] * vs[i][c];
      ASSERT_TRUE(is_zero_vector(sum));
    }
  }
}

TEST(Lift, ExpressesMembers) {
  auto R = qring({"x", "y"});
  std::vector<PolyVector> gens{vec(R, {"x", "y"}), vec(R, {"y", "0"})};
  TrackedBasis tb(R, 2, gens);
  auto a = tb.lift(vec(R, {"x^2 + y^2", "x*y"}));
  ASSERT_TRUE(a.has_value());
  EXPECT_EQ(tb.combine(*a), vec(R, {"x^2 + y^2", "x*y"}));
  EXPECT_FALSE(tb.lift(vec(R, {"1", "0"})).has_value());
}

TEST(ModuleColonSaturate, Examples) {
  auto R = qring({"x", "y"});
  Submodule xs(R, 1, {vec(R, {"x"})});
  EXPECT_TRUE(submodule_equal(module_colon_saturate(xs, I(R, {"x"})), Submodule::full(R, 1)));

  Submodule xy(R, 1, {vec(R, {"x*y"})});
  EXPECT_TRUE(submodule_equal(module_colon_saturate(xy, I(R, {"y"})), Submodule(R, 1, {vec(R, {"x"})})));
  // Same answer as the ideal saturation route.
  EXPECT_TRUE(ideal_equal(saturate(I(R, {"x*y"}), P(R, "y")), I(R, {"x"})));

  Submodule N(R, 2, {vec(R, {"x^2", "y"}), vec(R, {"0", "x*y"})});
  EXPECT_TRUE(submodule_equal(module_colon_saturate(N, Ideal::unit(R)), N));
}

TEST(ModuleIntersect, Basic) {
  auto R = qring({"x", "y"});
  Submodule a(R, 1, {vec(R, {"x"})});
  Submodule b(R, 1, {vec(R, {"y"})});
  EXPECT_TRUE(submodule_equal(module_intersect(a, b), Submodule(R, 1, {vec(R, {"x*y"})})));
}
