#include <gtest/gtest.h>

#include <random>

#include "divlab/factorization.hpp"

using namespace divlab;

namespace {

IntPoly P(const char* s) { return parse_univariate(s); }

IntPoly random_poly(std::mt19937_64& rng, int deg, long range) {
  std::vector<Integer> c(deg + 1);
  for (auto& x : c) x = static_cast<long>(rng() % (2 * range + 1)) - range;
  if (c.back() == 0) c.back() = 1;
  return IntPoly(c);
}

bool small_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

TEST(RootsModP, Examples) {
  EXPECT_EQ(roots_mod_p(P("T^2+1"), 5), (std::vector<u64>{2, 3}));
  EXPECT_EQ(roots_mod_p(P("T^2+1"), 3), (std::vector<u64>{}));
  EXPECT_EQ(roots_mod_p(P("T"), 7), (std::vector<u64>{0}));
  EXPECT_THROW(roots_mod_p(P("5*T+5"), 5), DomainError);
}

TEST(RootsModP, AgreesWithExhaustiveEvaluation) {
  std::mt19937_64 rng(42);
  std::vector<u64> primes;
  for (u64 p = 2; p < 100; ++p)
    if (small_prime(p)) primes.push_back(p);
  for (int trial = 0; trial < 400; ++trial) {
    IntPoly f = random_poly(rng, 1 + rng() % 6, 50);
    u64 p = primes[rng() % primes.size()];
    if (reduce_mod(f, p).empty()) continue;
    std::vector<u64> brute;
    for (u64 r = 0; r < p; ++r)
      if (eval_mod(f, r, p) == 0) brute.push_back(r);
    EXPECT_EQ(roots_mod_p(f, p), brute) << to_string(f) << " mod " << p;
  }
}

TEST(RootsModP, LargePrimeUsesSplittingPath) {
  // (T - 3)(T - 1000)(T^2 + 1) mod 1000003
  IntPoly f = P("(T-3)*(T-1000)*(T^2+1)");
  const u64 p = 1000003;  // 1000003 = 3 mod 4, so T^2+1 has no roots
  EXPECT_EQ(roots_mod_p(f, p), (std::vector<u64>{3, 1000}));
  EXPECT_EQ(roots_mod_p(P("T^2+1"), 1000033).size(), 2u);  // 1000033 = 1 mod 4
}

TEST(FactorModP, Examples) {
  auto a = factor_mod_p(P("T^4+1"), 2);
  ASSERT_EQ(a.factors.size(), 1u);
  EXPECT_EQ(a.factors[0].first, (fp::Coeffs{1, 1}));
  EXPECT_EQ(a.factors[0].second, 4);

  auto b = factor_mod_p(P("T^2+1"), 5);
  ASSERT_EQ(b.factors.size(), 2u);
  EXPECT_EQ(b.factors[0].first, (fp::Coeffs{2, 1}));  // T + 2
  EXPECT_EQ(b.factors[1].first, (fp::Coeffs{3, 1}));  // T + 3

  auto c = factor_mod_p(P("T^2+1"), 3);
  EXPECT_TRUE(c.irreducible());
  EXPECT_EQ(c.degree_pattern(), (std::vector<int>{2}));
}

TEST(FactorModP, ReassemblesRandomInputs) {
  std::mt19937_64 rng(1234);
  std::vector<u64> primes;
  for (u64 p = 2; p < 200; ++p)
    if (small_prime(p)) primes.push_back(p);
  primes.push_back(1000003);
  for (int trial = 0; trial < 1000; ++trial) {
    IntPoly f = random_poly(rng, 1 + rng() % 8, 1000);
    if (trial % 5 == 0) f *= f;  // exercise repeated factors
    u64 p = primes[rng() % primes.size()];
    fp::Coeffs fm = reduce_mod(f, p);
    if (fm.empty()) continue;
    auto fac = factor_mod_p(f, p);
    EXPECT_EQ(expand(fac), fm) << to_string(f) << " mod " << p;
    for (const auto& [g, e] : fac.factors) {
      ASSERT_EQ(g.back(), 1u);
      // irreducible: single distinct-degree block of full degree, squarefree
      if (fp::deg(g) > 1) {
        EXPECT_TRUE(irreducible_mod_p(detail::lift_coeffs(g), p));
      }
    }
  }
}

TEST(FactorModP, CharacteristicTwoAndThreeHighPowers) {
  // (T^2+T+1)^2 * T^3 mod 2 and (T+1)^3 (T^2+1) mod 3 hit the p-th root branch
  auto a = factor_mod_p(P("(T^2+T+1)^2*T^3"), 2);
  EXPECT_EQ(expand(a), reduce_mod(P("(T^2+T+1)^2*T^3"), 2));
  EXPECT_EQ(a.degree_pattern(), (std::vector<int>{1, 1, 1, 2, 2}));
  auto b = factor_mod_p(P("(T+1)^3*(T^2+1)"), 3);
  EXPECT_EQ(b.degree_pattern(), (std::vector<int>{1, 1, 1, 2}));
}

TEST(FactorOverZ, Examples) {
  auto a = factor_over_Z(P("T^4-1"));
  ASSERT_EQ(a.factors.size(), 3u);
  EXPECT_EQ(a.factors[0].first, P("T-1"));
  EXPECT_EQ(a.factors[1].first, P("T+1"));
  EXPECT_EQ(a.factors[2].first, P("T^2+1"));
  EXPECT_EQ(a.content, 1);

  EXPECT_TRUE(factor_over_Z(P("T^2+1")).irreducible());

  auto c = factor_over_Z(P("6*T"));
  EXPECT_EQ(c.content, 6);
  ASSERT_EQ(c.factors.size(), 1u);
  EXPECT_EQ(c.factors[0].first, P("T"));
}

TEST(FactorOverZ, HardRecombinationCases) {
  // irreducible over Z but reducible modulo every prime
  EXPECT_TRUE(factor_over_Z(P("T^4-10*T^2+1")).irreducible());
  auto f = factor_over_Z(P("(T^4-10*T^2+1)*(T^4+1)*(2*T-3)^2*(-5)"));
  EXPECT_EQ(f.content, -5);
  ASSERT_EQ(f.factors.size(), 3u);
  EXPECT_EQ(f.factors[0], std::make_pair(P("2*T-3"), 2));
  // large coefficients force several Hensel steps
  auto g = factor_over_Z(P("(T^3 - 123456789*T + 987654321)*(T^2 + 1000003)*(7*T^2 - 5*T - 11111)"));
  EXPECT_EQ(g.factors.size(), 3u);
}

TEST(FactorOverZ, ReassemblyAndModPatternRefinement) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 150; ++trial) {
    IntPoly f = from_ints({1});
    int nf = 1 + rng() % 3;
    for (int i = 0; i < nf; ++i) f *= random_poly(rng, 1 + rng() % 3, 9);
    if (f.degree() < 1) continue;
    auto fac = factor_over_Z(f);
    EXPECT_EQ(expand(fac), f) << to_string(f);
    // every rational factorization refines the mod-p degree pattern at good primes
    for (u64 p : {3ull, 5ull, 7ull, 11ull, 13ull}) {
      if (mod_u64(f.lc(), p) == 0) continue;
      IntPoly sq = squarefree_primitive_part(f);
      if (mod_u64(poly_discriminant(sq), p) == 0) continue;
      for (const auto& [g, e] : fac.factors) {
        int mod_deg_sum = 0;
        for (int d : factor_mod_p(g, p).degree_pattern()) mod_deg_sum += d;
        EXPECT_EQ(mod_deg_sum, g.degree());
        if (irreducible_mod_p(g, p)) continue;
        // the mod-p pattern of g must partition deg g, which the sum above checks
      }
    }
    for (const auto& [g, e] : fac.factors) {
      EXPECT_EQ(content(g), 1);
      if (g.degree() >= 2) {
        // a proper rational factor would contradict a second factorization
        EXPECT_TRUE(factor_over_Z(g).irreducible()) << to_string(g);
      }
    }
  }
}

TEST(FactorInteger, Examples) {
  auto a = factor_integer(Integer(3250));
  EXPECT_EQ(a.sign, 1);
  EXPECT_EQ(a.factors, (std::vector<std::pair<Integer, int>>{{2, 1}, {5, 3}, {13, 1}}));
  EXPECT_TRUE(a.complete());

  auto b = factor_integer(Integer(-4));
  EXPECT_EQ(b.sign, -1);
  EXPECT_EQ(b.factors, (std::vector<std::pair<Integer, int>>{{2, 2}}));

  auto c = factor_integer(Integer(14885));
  EXPECT_EQ(c.factors, (std::vector<std::pair<Integer, int>>{{5, 1}, {13, 1}, {229, 1}}));
  EXPECT_THROW(factor_integer(Integer(0)), DomainError);
}

TEST(FactorInteger, RhoSplitsSemiprimesBeyondTrialBound) {
  Integer p("1000000007"), q("998244353"), r("18446744073709551557");
  auto f = factor_integer(p * q * r * r * 12, 1000);
  EXPECT_TRUE(f.complete());
  EXPECT_EQ(reassemble(f), p * q * r * r * 12);
  EXPECT_EQ(f.exponent_of(r), 2);
  EXPECT_EQ(f.exponent_of(2), 2);
}

TEST(FactorInteger, ExhaustedBudgetLeavesCofactor) {
  Integer p("1000000000000000003"), q("1000000000000000009");
  auto f = factor_integer(p * q * 6, 100, 10);
  EXPECT_FALSE(f.complete());
  EXPECT_EQ(f.cofactor, p * q);
  EXPECT_EQ(reassemble(f), p * q * 6);
}

TEST(FactorInteger, ReassemblyAndPrimalityProperty) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    Integer n = to_integer(rng() >> (rng() % 40));
    n *= to_integer(rng() >> 20);
    if (n == 0) continue;
    auto f = factor_integer(n, 1000);
    EXPECT_EQ(reassemble(f), n);
    for (const auto& [p, e] : f.factors) {
      EXPECT_TRUE(is_prime(p));
      EXPECT_GE(e, 1);
    }
    if (!f.complete()) {
      for (u64 d = 2; d <= 1000; ++d) EXPECT_FALSE(divisible(f.cofactor, to_integer(d)));
    }
  }
}

TEST(IsPrime, KnownValues) {
  EXPECT_FALSE(is_prime(Integer(1)));
  EXPECT_TRUE(is_prime(Integer(2)));
  EXPECT_FALSE(is_prime(Integer("3215031751")));  // strong pseudoprime to 2,3,5,7
  EXPECT_TRUE(is_prime(Integer("18446744073709551557")));
  EXPECT_FALSE(is_prime(Integer("3317044064679887385961981")));  // psp to the first 12 prime bases
  EXPECT_TRUE(is_prime(Integer("170141183460469231731687303715884105727")));  // 2^127 - 1
}
