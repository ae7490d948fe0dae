#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <sstream>

#include "divlab/fields.hpp"
#include "divlab/modpoly.hpp"

using namespace divlab;

namespace {

u64 kernel(u64 n) {
  u64 k = 1;
  for (u64 p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) n /= p, ++e;
    if (e & 1) k *= p;
  }
  return k * n;
}

std::size_t kernel_oracle(u64 N) {
  std::set<u64> ks;
  for (u64 n = 1; n <= N; ++n) {
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    if (r * r == n) continue;
    ks.insert(kernel(n));
  }
  return ks.size();
}

IntPoly shift(const IntPoly& f, long c) {
  IntPoly lin{Integer(c), Integer(1)};
  IntPoly r;
  for (int i = f.degree(); i >= 0; --i) r = r * lin + IntPoly::constant(f[i]);
  return r;
}

}  // namespace

TEST(FiberPoly, Examples) {
  auto a = CurveCover::parse("u^2 - t");
  EXPECT_EQ(to_string(fiber_poly(a, 5)), "T^2 - 5");
  auto b = CurveCover::parse("u^2 - t*(t-1)*(t-2)");
  EXPECT_EQ(fiber_poly(b, 3), parse_univariate("T^2-6"));
  auto c = CurveCover::parse("t*u^2 - 1");
  EXPECT_THROW(fiber_poly(c, 0, true), DegenerateFiber);
  EXPECT_THROW(fiber_poly(c, 0), PreconditionError);
  auto d = CurveCover::parse("2*u^2 - 2*t - 4");
  EXPECT_EQ(fiber_poly(d, 2), parse_univariate("T^2-4"));
}

TEST(FiberIrreducible, Examples) {
  auto a = CurveCover::parse("u^2 - t");
  EXPECT_EQ(is_fiber_irreducible(a, 4), Tri::no);
  EXPECT_EQ(is_fiber_irreducible(a, 5), Tri::yes);
  int reducible = 0;
  for (int n = 1; n <= 100; ++n) reducible += is_fiber_irreducible(a, n) == Tri::no;
  EXPECT_EQ(reducible, 10);
}

TEST(FiberIrreducible, FastPathAgreesWithFactorization) {
  auto cov = CurveCover::parse("u^3 - t*u - t");
  for (int n = 1; n <= 300; ++n) {
    IntPoly f = fiber_poly(cov, n);
    EXPECT_EQ(is_irreducible_poly(f) == Tri::yes, factor_over_Z(f).irreducible()) << n;
  }
  // reducible everywhere mod p, irreducible over Q
  EXPECT_EQ(is_irreducible_poly(parse_univariate("T^4-10*T^2+1")), Tri::yes);
  EXPECT_EQ(is_irreducible_poly(parse_univariate("T^4+4")), Tri::no);
}

TEST(Fingerprint, Examples) {
  auto a = fingerprint(parse_univariate("T^2-12"));
  EXPECT_EQ(a.to_string(), "3");
  EXPECT_TRUE(a.complete);
  EXPECT_EQ(fingerprint(parse_univariate("T^2-2")).to_string(), "2");
  EXPECT_EQ(fingerprint(parse_univariate("T^2-5")).to_string(), "5");
  EXPECT_THROW(fingerprint(parse_univariate("T^2")), DomainError);
}

TEST(Fingerprint, PartialComparison) {
  FieldFingerprint a{{Integer(3)}, true, 1};
  FieldFingerprint b{{Integer(5)}, true, 1};
  FieldFingerprint c{{}, false, Integer(5) * 7};
  EXPECT_TRUE(provably_distinct(a, b));
  EXPECT_FALSE(provably_distinct(a, a));
  // b's 5 might hide in c's cofactor
  EXPECT_FALSE(provably_distinct(b, c));
  FieldFingerprint d{{Integer(11)}, true, 1};
  EXPECT_TRUE(provably_distinct(c, d));
  EXPECT_EQ(c.to_string(), "?");
  FieldFingerprint e{{Integer(3)}, false, Integer(5) * 7};
  EXPECT_TRUE(provably_distinct(b, e));  // 3 is certain in e and absent from b
}

TEST(Fingerprint, GeneratorShiftInvariance) {
  fp::SplitMix rng(7);
  const char* covers[] = {"u^3 - t*u - t", "u^2 - t^3 - 7", "u^4 - t*u + 2", "u^3 + (t+1)*u - t"};
  int done = 0;
  for (int attempt = 0; done < 100 && attempt < 10000; ++attempt) {
    auto cov = CurveCover::parse(covers[attempt % 4]);
    u64 n = 1 + rng.next() % 5000;
    IntPoly f;
    try {
      f = fiber_poly(cov, to_integer(n));
    } catch (const DegenerateFiber&) {
      continue;
    }
    if (is_irreducible_poly(f) != Tri::yes) continue;
    auto base = fingerprint(f);
    for (long c : {1, 2, 3}) EXPECT_EQ(fingerprint(shift(f, c)).odd_primes, base.odd_primes) << to_string(f);
    // another presentation: a^d f(u / a) changes disc by an even power
    std::vector<Integer> cs(f.coeffs());
    Integer pw = 1;
    for (int i = f.degree(); i >= 0; --i, pw *= 3) cs[i] *= pw;
    EXPECT_EQ(fingerprint(IntPoly(cs)).odd_primes, base.odd_primes);
    ++done;
  }
  EXPECT_EQ(done, 100);
}

TEST(Fingerprint, QuadraticKernelExactness) {
  // u^2 - h(n) with h(n) > 0: fingerprints equal iff squarefree kernels equal
  for (const char* h : {"T", "T^2+1", "T^3+T+1"}) {
    IntPoly H = parse_univariate(h);
    for (u64 n = 1;; ++n) {
      Integer v = H(to_integer(n));
      if (v > 1000000) break;
      u64 k = kernel(v.get_ui());
      if (k == 1) continue;
      auto fp = fingerprint(IntPoly{Integer(-v), Integer(0), Integer(1)});
      Integer prod = 1;
      for (const auto& p : fp.odd_primes) prod *= p;
      ASSERT_EQ(prod, to_integer(k)) << n;
    }
  }
}

TEST(Eta, Examples) {
  auto a = eta_exponent(1, 1.0);
  EXPECT_NEAR(a.epsilon, 1.4427e-3, 1e-7);
  EXPECT_NEAR(a.eta, 7.2135e-4, 1e-8);
  EXPECT_NEAR(eta_exponent(2, 0.5).eta, 1.8034e-4, 1e-8);
  EXPECT_THROW(eta_exponent(2, 0.0), PreconditionError);
  auto b = eta_exponent(1, 1.0, 0, 2);
  ASSERT_TRUE(b.intro_constant.has_value());
  EXPECT_NEAR(*b.intro_constant, 1e-6 / (2 * std::log(2.0)), 1e-15);
}

TEST(Census, QuadraticOracle) {
  auto cov = CurveCover::parse("u^2 - t");
  for (u64 N : {100ull, 1000ull}) {
    auto c = run_census(cov, N);
    EXPECT_EQ(c.reducible_count, static_cast<std::size_t>(std::sqrt(static_cast<double>(N))));
    EXPECT_EQ(c.distinct_lower_bound, kernel_oracle(N));
  }
  EXPECT_EQ(kernel_oracle(100), 60u);
  EXPECT_EQ(kernel_oracle(1000), 607u);
  EXPECT_EQ(run_census(cov, 100).distinct_lower_bound, 60u);
  EXPECT_THROW(run_census(cov, 5), PreconditionError);
}

TEST(Census, PrefixAndWorkers) {
  auto cov = CurveCover::parse("u^2 - t*(t-1)*(t-2)");
  auto small = run_census(cov, 200);
  auto big = run_census(cov, 400, {.workers = 3});
  ASSERT_LE(small.per_n.size(), big.per_n.size());
  for (std::size_t i = 0; i < small.per_n.size(); ++i) {
    EXPECT_EQ(small.per_n[i].n, big.per_n[i].n);
    EXPECT_EQ(small.per_n[i].new_field, big.per_n[i].new_field);
  }
  std::ostringstream a, b;
  write_census_csv(a, run_census(cov, 300, {.workers = 1}));
  write_census_csv(b, run_census(cov, 300, {.workers = 4}));
  EXPECT_EQ(a.str(), b.str());
  // n = 1, 2 give the fiber u^2: reducible, not degenerate
  EXPECT_EQ(small.per_n[0].irreducible, Tri::no);
  EXPECT_EQ(small.per_n[1].irreducible, Tri::no);
  EXPECT_TRUE(small.skipped.empty());
}

TEST(Census, PropertyASpotCheck) {
  // odd fingerprint primes of u^2 - n divide 2n
  auto c = run_census(CurveCover::parse("u^2 - t"), 2000);
  for (const auto& r : c.per_n) {
    if (r.irreducible != Tri::yes) continue;
    for (const auto& p : r.fingerprint.odd_primes) EXPECT_TRUE(divisible(to_integer(2 * r.n), p)) << r.n;
  }
}

TEST(Census, SmallNSanity) {
  auto c = run_census(CurveCover::parse("u^3 - t*u - 1"), 10);
  EXPECT_GE(c.distinct_lower_bound, 1u);
  EXPECT_LT(c.bound_value, c.N_over_logN * std::pow(std::log(10.0), c.eta.eta) + 1e-9);
  std::ostringstream os;
  write_census_summary(os, c);
  EXPECT_NE(os.str().find("distinct_lower_bound="), std::string::npos);
  EXPECT_NE(os.str().find("mode=paper"), std::string::npos);
}
