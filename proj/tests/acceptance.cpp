// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>

#include "random_complexes.hpp"
#include "strat/stratify.hpp"

using namespace strat;
using strat::testing::P;
using strat::testing::Rng;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double limit_s;
  std::function<Outcome()> body;
};

int certification_failures = 0;

Outcome guarded(const std::function<Outcome()>& f) {
  try {
    return f();
  } catch (const CertificationError& e) {
    ++certification_failures;
    return {false, std::string("certification failure: ") + e.what()};
  } catch (const std::exception& e) {
    return {false, std::string("exception: ") + e.what()};
  }
}

std::string count(int hit, int total) { return std::to_string(hit) + "/" + std::to_string(total); }

PrimeIdeal prime(const Ring& R, std::vector<std::string> gens) {
  std::vector<Poly> ps;
  for (const auto& g : gens) ps.push_back(P(R, g));
  return PrimeIdeal::make(Ideal(R, ps), false);
}

std::vector<PrimeIdeal> qxy_panel(const Ring& R) {
  return {prime(R, {}), prime(R, {"x"}), prime(R, {"y"}), prime(R, {"x", "y"}), prime(R, {"x - 1", "y"})};
}

FreeComplex mult(const Ring& R, const std::string& r) {
  PolyMatrix d(1, 1, Poly(R));
  d(0, 0) = P(R, r);
  return FreeComplex::two_term(R, d);
}

// Integer pair corpus shared by the first two criteria.
std::vector<std::pair<FreeComplex, FreeComplex>> integer_pairs() {
  static std::vector<std::pair<FreeComplex, FreeComplex>> corpus = [] {
    Ring Z = Ring::integers();
    Rng rng(20260601);
    std::vector<std::pair<FreeComplex, FreeComplex>> out;
    for (int t = 0; t < 100; ++t) {
      auto draw = [&]() {
        return rng.coin(0.8) ? strat::testing::random_z_torsion_complex(rng, Z, 8, 10)
                             : strat::testing::random_z_complex(rng, Z, 8, 10);
      };
      auto X = draw();
      auto Y = draw();
      out.emplace_back(std::move(X), std::move(Y));
    }
    return out;
  }();
  return corpus;
}

// Bareiss determinant over Z, independent of the Smith code.
Integer bareiss(Matrix<Integer> m) {
  std::size_t n = m.rows();
  if (n == 0) return 1;
  Integer prev = 1, sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return 0;
      m.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

Outcome hom_vanishing_oracle() {
  int agree = 0, vanishing = 0;
  auto corpus = integer_pairs();
  for (const auto& [X, Y] : corpus) {
    bool fast = hom_vanishes(X, Y);
    bool exact = hom_graded_pid(X, Y).empty();
    agree += fast == exact;
    vanishing += exact;
  }
  return {agree == 100, count(agree, 100) + " agree; " + std::to_string(vanishing) + " pairs with Hom = 0"};
}

Outcome supp_hom() {
  int agree = 0, nonempty = 0;
  auto corpus = integer_pairs();
  for (const auto& [X, Y] : corpus) {
    const Ring& Z = X.ring();
    auto H = hom_graded_pid(X, Y);
    auto lhs = supp_graded_pid(H, Z);
    auto rhs = spec_intersect(support_global(X).global, support_global(Y).global);
    agree += spec_equal(lhs, rhs);
    nonempty += !lhs.is_empty();
  }
  return {agree == 100, count(agree, 100) + " equal; " + std::to_string(nonempty) + " with nonempty support"};
}

Outcome cone_les() {
  Ring Z = Ring::integers();
  Rng rng(20260602);
  int exact = 0;
  for (int t = 0; t < 100; ++t) {
    auto X = rng.coin(0.5) ? strat::testing::random_z_torsion_complex(rng, Z, 8, 10)
                           : strat::testing::random_z_complex(rng, Z, 8, 10);
    auto r = Poly::constant(Z, Rational(rng.uniform(-12, 12)));
    exact += !cone_les_failure(ChainMap::scalar(X, r)).has_value();
  }
  return {exact == 100, count(exact, 100) + " sequences exact in every degree"};
}

Outcome koszul_support_law() {
  Ring R = strat::testing::qring({"x", "y"});
  Rng rng(20260603);
  std::vector<std::vector<Poly>> ideals{
      {P(R, "x")}, {P(R, "y")}, {P(R, "x"), P(R, "y")}, {P(R, "x^2"), P(R, "y")}};
  int agree = 0;
  for (int t = 0; t < 50; ++t) {
    auto X = strat::testing::random_qxy_complex(rng, R);
    const auto& a = ideals[static_cast<std::size_t>(t) % ideals.size()];
    auto lhs = support_global(koszul_ideal(X, a)).global;
    auto rhs = spec_intersect(SpecClosedSet::of(ClosedSet(Ideal(R, a))), support_global(X).global);
    agree += spec_equal(lhs, rhs);
  }
  return {agree == 50, count(agree, 50) + " equal"};
}

Outcome two_method_support() {
  Ring R = strat::testing::qring({"x", "y"});
  Rng rng(20260604);
  auto panel = qxy_panel(R);
  int agree = 0, total = 0, inside = 0;
  for (int t = 0; t < 100; ++t) {
    auto X = strat::testing::random_qxy_complex(rng, R);
    auto S = support_global(X).global;
    for (const auto& p : panel) {
      bool pointwise = in_support(X, p);
      agree += pointwise == S.contains_point(p.ideal());
      inside += pointwise;
      ++total;
    }
  }
  return {agree == 500 && total == 500, count(agree, total) + " agree; " + std::to_string(inside) + " in support"};
}

Outcome torsion_composition() {
  Ring R = strat::testing::qring({"x", "y"});
  Rng rng(20260605);
  auto panel = qxy_panel(R);
  int agree = 0, nonzero = 0;
  for (int t = 0; t < 50; ++t) {
    std::size_t g = static_cast<std::size_t>(rng.uniform(1, 2));
    std::size_t m = static_cast<std::size_t>(rng.uniform(1, 3));
    ModulePresentation M(R, g, strat::testing::random_qxy_matrix(rng, R, g, m));
    const Ideal& a = rng.pick(panel).ideal();
    const Ideal& b = rng.pick(panel).ideal();
    auto lhs = torsion_submodule(torsion_submodule(M, a), b);
    auto rhs = torsion_submodule(M, ideal_sum(a, b));
    ClosedSet l(fitting_ideal(lhs)), r(fitting_ideal(rhs));
    agree += closed_equal(l, r);
    nonzero += !closed_is_empty(r);
  }
  return {agree == 50, count(agree, 50) + " equal; " + std::to_string(nonzero) + " with nonzero torsion"};
}

Outcome lgp_consistency() {
  Ring Z = Ring::integers();
  Ring R = strat::testing::qring({"x"});
  Rng rng(20260606);
  int good = 0, negatives = 0;

  ThickQuery witness{FreeComplex::concentrated(Z), {mult(Z, "2")}};
  std::vector<PanelEntry> panel{PanelEntry::prime(prime(Z, {})), PanelEntry::prime(prime(Z, {"2"})),
                                PanelEntry::prime(prime(Z, {"3"}))};
  auto cert = verify_lgp(witness, panel);
  bool three = false;
  for (const auto& w : cert.witnesses) three = three || ideal_equal(w, Ideal(Z, {P(Z, "3")}));
  bool witness_ok = cert.consistent && !cert.verdict && three && !thick_member(witness);
  good += witness_ok;
  negatives += !cert.verdict;

  for (int t = 1; t < 30; ++t) {
    bool integers = t % 2 == 1;
    auto draw = [&]() {
      return integers ? strat::testing::random_z_complex(rng, Z, 4) : strat::testing::random_qx_complex(rng, R);
    };
    ThickQuery q{draw(), {}};
    int k = rng.uniform(0, 2);
    for (int i = 0; i < k; ++i) q.generators.push_back(draw());
    auto c = verify_lgp(q);
    good += c.consistent && c.verdict == thick_member(q);
    negatives += !c.verdict;
  }
  return {good == 30 && witness_ok,
          count(good, 30) + " consistent; witness (3) " + (witness_ok ? "found" : "missing") + "; " +
              std::to_string(negatives) + " negative verdicts"};
}

Outcome thick_soundness() {
  Ring Z = Ring::integers();
  Ring R = strat::testing::qring({"x"});
  Rng rng(20260607);
  std::function<Poly()> zscalar = [&]() { return Poly::constant(Z, Rational(rng.uniform(-4, 4))); };
  std::function<Poly()> xscalar = [&]() {
    static const std::vector<std::string> pool{"x", "x - 1", "2", "x^2", "1", "x + 1"};
    return P(R, rng.pick(pool));
  };
  int sound = 0;
  std::size_t rank_sum = 0;
  for (int t = 0; t < 100; ++t) {
    bool integers = t % 4 != 3;
    std::vector<FreeComplex> gens;
    int k = rng.uniform(1, 3);
    for (int i = 0; i < k; ++i)
      gens.push_back(integers ? strat::testing::random_z_complex(rng, Z, 3) : strat::testing::random_qx_complex(rng, R));
    auto X = strat::testing::random_thick_object(rng, gens, rng.uniform(2, 8), 12, integers ? zscalar : xscalar);
    sound += thick_member({X, gens});
    rank_sum += X.total_rank();
  }
  return {sound == 100, count(sound, 100) + " members; mean total rank " + std::to_string(rank_sum / 100)};
}

Outcome kernel_certifications() {
  // Independent re-check of Smith forms on the Hom complexes of the integer corpus.
  Ring Z = Ring::integers();
  IntegerDomain dom(Z);
  int checked = 0, bad = 0;
  auto corpus = integer_pairs();
  for (const auto& [X, Y] : corpus) {
    auto H = hom_complex(X, Y);
    for (auto [n, r] : H.ranks()) {
      auto A = to_domain(dom, H.d(n));
      auto res = snf(dom, A);
      bool ok = res.U * A * res.V == res.D && abs(bareiss(res.U)) == 1 && abs(bareiss(res.V)) == 1;
      bad += !ok;
      ++checked;
    }
  }
  const auto& s = certification_stats();
  bool ok = bad == 0 && certification_failures == 0 && groebner_self_check() && s.groebner_bases > 0 &&
            s.smith_forms > 0 && s.syzygies > 0;
  return {ok, std::to_string(s.groebner_bases.load()) + " bases (" + std::to_string(s.s_pairs.load()) +
                  " S-pairs), " + std::to_string(s.smith_forms.load()) + " Smith forms, " +
                  std::to_string(s.syzygies.load()) + " syzygies certified; " + std::to_string(checked - bad) + "/" +
                  std::to_string(checked) + " re-checked with unit determinants"};
}

}  // namespace

int main() {
  groebner_self_check() = true;
  std::vector<Criterion> criteria{
      {1, "hom_vanishes vs exact Hom over Z", 60, hom_vanishing_oracle},
      {2, "Supp Hom = supp X ∩ supp Y over Z", 60, supp_hom},
      {3, "cone long exact sequence for r", 30, cone_les},
      {4, "Koszul support law over Q[x,y]", 120, koszul_support_law},
      {5, "pointwise vs global support", 120, two_method_support},
      {6, "torsion composition law", 60, torsion_composition},
      {7, "local-global self-consistency", 60, lgp_consistency},
      {8, "thick construction soundness", 120, thick_soundness},
      {9, "kernel certifications", 630, kernel_certifications},
  };
  int failed = 0;
  auto t_all = std::chrono::steady_clock::now();
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o = guarded(c.body);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.id == 9) secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t_all).count();
    bool pass = o.ok && secs < c.limit_s;
    failed += !pass;
    std::printf("criterion %d %-36s %s  %.2fs (limit %.0fs)  %s\n", c.id, c.name.c_str(), pass ? "PASS" : "FAIL", secs,
                c.limit_s, o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
