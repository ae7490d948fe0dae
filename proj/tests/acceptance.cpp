// Acceptance suite: one PASS/FAIL line per criterion. Exit status is nonzero
// when any gating criterion fails; the trend report (10) is advisory.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "divlab/dz.hpp"
#include "divlab/fields.hpp"
#include "divlab/sieve.hpp"
#include "divlab/verify.hpp"

using namespace divlab;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void report(int id, bool gate, bool pass, const std::string& name, const std::string& detail) {
  std::printf("[%2d] %s %s: %s%s\n", id, pass ? "PASS" : "FAIL", name.c_str(), detail.c_str(),
              gate ? "" : " (advisory)");
  std::fflush(stdout);
  if (gate && !pass) ++failures;
}

// Distinct squarefree kernels of the non-squares n <= N, via a
// smallest-prime-factor sieve.
std::size_t kernel_sieve_oracle(u64 N) {
  std::vector<std::uint32_t> spf(N + 1, 0);
  for (u64 i = 2; i <= N; ++i)
    if (!spf[i])
      for (u64 j = i; j <= N; j += i)
        if (!spf[j]) spf[j] = static_cast<std::uint32_t>(i);
  std::set<u64> kernels;
  for (u64 n = 2; n <= N; ++n) {
    u64 v = n, k = 1;
    while (v > 1) {
      u64 p = spf[v];
      int e = 0;
      while (v % p == 0) v /= p, ++e;
      if (e & 1) k *= p;
    }
    if (k != 1) kernels.insert(k);
  }
  return kernels.size();
}

// M_F(x) by scanning every integer in the window.
std::vector<u64> window_scan(const IntPoly& F, const DiversityParams& prm) {
  const Integer disc = poly_discriminant(F);
  std::vector<u64> out;
  for (u64 m = std::max<u64>(prm.lo(), 2); m <= prm.hi(); ++m) {
    std::vector<u64> ps;
    u64 v = m;
    bool sqfree = true;
    for (u64 p = 2; p * p <= v; ++p) {
      if (v % p) continue;
      v /= p;
      if (v % p == 0) sqfree = false;
      ps.push_back(p);
    }
    if (v > 1) ps.push_back(v);
    if (!sqfree || static_cast<int>(ps.size()) != prm.omega()) continue;
    if (ps.front() < prm.y_min() || ps.back() < prm.tail_min()) continue;
    bool ok = true;
    for (u64 p : ps) {
      bool root = false;
      for (u64 r = 0; r < p && !root; ++r) root = eval_mod(F, r, p) == 0;
      ok = ok && root && mod_u64(disc, p) != 0;
    }
    if (ok) out.push_back(m);
  }
  return out;
}

IntPoly U(const char* s) { return parse_univariate(s); }

IntPoly shift_generator(const IntPoly& f, long c) {
  IntPoly lin{Integer(c), Integer(1)};
  IntPoly r;
  for (int i = f.degree(); i >= 0; --i) r = r * lin + IntPoly::constant(f[i]);
  return r;
}

void criterion_1() {
  const auto t0 = Clock::now();
  auto c = run_census(CurveCover::parse("u^2 - t"), 10000);
  const double t = seconds_since(t0);
  const std::size_t oracle = kernel_sieve_oracle(10000);
  const bool ok = c.distinct_lower_bound == oracle && c.reducible_count == 100 && t < 60.0;
  report(1, true, ok, "quadratic census exactness",
         "u^2-t N=10^4 distinct_lower_bound=" + std::to_string(c.distinct_lower_bound) +
             " oracle=" + std::to_string(oracle) + " reducible=" + std::to_string(c.reducible_count) +
             " (want 100) time=" + std::to_string(t) + "s (limit 60s)");
}

void criterion_2() {
  auto cov = CurveCover::parse("u^2 - t");
  CensusOptions opt;
  opt.fingerprints = false;
  std::string detail;
  bool ok = true;
  const std::pair<u64, std::size_t> want[] = {{100, 10}, {10000, 100}, {1000000, 1000}};
  for (const auto& [N, expect] : want) {
    auto c = run_census(cov, N, opt);
    ok = ok && c.reducible_count == expect && c.unknown_count == 0 && c.skipped.empty();
    detail += "N=" + std::to_string(N) + ":" + std::to_string(c.reducible_count) + "/" + std::to_string(expect) + " ";
  }
  report(2, true, ok, "reducible fibers = floor(sqrt N)", detail + "(c = 1)");
}

void criterion_3() {
  const auto t0 = Clock::now();
  auto r = run_lemma_suite(1000, 0);
  const double t = seconds_since(t0);
  const bool ok = r.trials == 1000 && r.valid == 1000 && r.violations.empty() && t < 30.0;
  report(3, true, ok, "exact-divisor shift lemma",
         std::to_string(r.valid) + "/1000 valid shifts, " + std::to_string(r.violations.size()) +
             " violations, max shift " + std::to_string(r.max_shift) + ", time=" + std::to_string(t) +
             "s (limit 30s)");
}

void criterion_4() {
  auto r = run_rho_suite(200, 0, 10000);
  report(4, true, r.trials == 200 && r.mismatches.empty(), "rho_F against brute force",
         std::to_string(r.trials) + " random (F, m <= 10^4), " + std::to_string(r.mismatches.size()) + " mismatches");
}

void criterion_5() {
  std::size_t total = 0, bad = 0;
  struct Run {
    const char* F;
    double x;
    int k;
    double y, tail;
    bool randomize;
  };
  const Run runs[] = {{"T", 1e5, 1, 3, 0.5, false},           {"T^2+1", 1e5, 1, 3, 0.5, false},
                      {"T^3-2", 1e5, 2, 5, 0.3, false},       {"T^3-3*T^2+2*T", 1e5, 1, 3, 0.5, false},
                      {"T^3-3*T^2+2*T", 1e5, 2, 5, 0.3, true}, {"T^2+1", 1e6, 1, 3, 0.6, true},
                      {"T^4-10*T^2+1", 1e5, 1, 5, 0.4, false}};
  for (const Run& r : runs) {
    IntPoly F = U(r.F);
    auto sieve = build_PF(F, static_cast<u64>(r.x));
    auto prm = DiversityParams::override_mode(r.x, F.degree(), sieve.delta_hat(), r.k, r.y, r.tail);
    auto mf = enumerate_MF(sieve, prm);
    try {
      auto ws = build_witnesses(F, sieve.disc, mf.elements, prm.k, 1, {r.randomize, 7});
      auto chk = recheck_witnesses(F, ws);
      total += chk.checked;
      bad += chk.failures.size();
    } catch (const std::exception& e) {
      ++bad;
      std::printf("     witness construction failed for %s: %s\n", r.F, e.what());
    }
  }
  report(5, true, bad == 0 && total > 0, "witness bound n_m <= m(omega(m)+1) and m || F(n_m)",
         std::to_string(total) + " witnesses over 7 runs, " + std::to_string(bad) + " exceptions");
}

void criterion_6() {
  const auto t0 = Clock::now();
  auto q = build_PF(U("T^2+1"), 1000000);
  auto t = build_PF(U("T"), 1000000);
  auto c = build_PF(U("T^3-2"), 1000000);
  const bool floors = check_density_floor(t, 1).pass && check_density_floor(q, 2).pass && check_density_floor(c, 3).pass;
  const double secs = seconds_since(t0);
  const bool ok = q.delta_hat() >= 0.49 && q.delta_hat() <= 0.51 && t.delta_hat() == 1.0 && floors && secs < 60.0;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "delta_hat(T^2+1)=%.5f in [0.49,0.51], delta_hat(T)=%.1f, floors T/T^2+1/T^3-2 %s "
                "(T^3-2: %.4f >= 1/3-0.05), time=%.1fs (limit 60s)",
                q.delta_hat(), t.delta_hat(), floors ? "pass" : "fail", c.delta_hat(), secs);
  report(6, true, ok, "Chebotarev density", buf);
}

void criterion_7() {
  fp::SplitMix rng(2024);
  const char* covers[] = {"u^2 - t", "u^3 - t*u - t", "u^3 - t^2 - 2", "u^4 - t*u + 2", "u^2 - t*(t-1)*(t-2)"};
  int done = 0, mismatches = 0;
  for (int attempt = 0; done < 100 && attempt < 100000; ++attempt) {
    auto cov = CurveCover::parse(covers[rng.next() % 5]);
    const u64 n = 3 + rng.next() % 10000;
    IntPoly f;
    try {
      f = fiber_poly(cov, to_integer(n));
    } catch (const DegenerateFiber&) {
      continue;
    }
    if (is_irreducible_poly(f) != Tri::yes) continue;
    const auto base = fingerprint(f);
    for (long c : {1, 2, 3})
      if (fingerprint(shift_generator(f, c)).odd_primes != base.odd_primes) ++mismatches;
    ++done;
  }
  report(7, true, done == 100 && mismatches == 0, "fingerprint invariance under u -> u+c",
         std::to_string(done) + " irreducible fibers x c in {1,2,3}, " + std::to_string(mismatches) + " changes");
}

void criterion_8() {
  struct Case {
    const char* F;
    int k;
    double y, tail;
  };
  const Case cases[] = {{"T", 1, 2, 0.5},     {"T^2+1", 1, 2, 0.5},        {"T^3-2", 1, 3, 0.4},
                        {"T", 2, 2, 0.2},     {"T^3-3*T^2+2*T", 2, 2, 0.0}, {"T^2+1", 0, 2, 0.9},
                        {"T^4-10*T^2+1", 1, 3, 0.3}};
  std::size_t elements = 0;
  bool ok = true;
  for (const Case& c : cases) {
    IntPoly F = U(c.F);
    auto sieve = build_PF(F, 10000);
    auto prm = DiversityParams::override_mode(1e4, F.degree(), sieve.delta_hat(), c.k, c.y, c.tail);
    std::vector<u64> got;
    for (const auto& e : enumerate_MF(sieve, prm).elements) got.push_back(e.m);
    ok = ok && got == window_scan(F, prm);
    elements += got.size();
  }
  report(8, true, ok, "M_F enumeration equals window scan",
         "7 override configurations at x=10^4, " + std::to_string(elements) + " elements, exact set equality");
}

void criterion_9() {
  const std::size_t cap = 20;
  bool ok = true;
  std::string detail;
  for (const char* name : {"T", "T^2+1", "T^3-3*T^2+2*T"}) {
    IntPoly F = U(name);
    auto sieve = build_PF(F, 10000);
    std::size_t c_cases = 0, c_viol = 0;
    for (u64 p : sieve.primes_in_PF) {
      auto r = verify_property_C(F, sieve.disc, p, 3);
      c_cases += r.checked;
      c_viol += r.violations.size();
    }
    auto D = verify_property_D(sieve, 10000);
    auto E = verify_property_E(F, F.degree(), 1, 10000, cap);
    const bool f_ok = c_viol == 0 && D.failures.size() <= cap && E.pass() && E.indeterminate.empty();
    ok = ok && f_ok;
    detail += std::string(name) + "[C " + std::to_string(c_viol) + "/" + std::to_string(c_cases) + ", D " +
              std::to_string(D.failures.size()) + " exc (threshold " + std::to_string(D.threshold) + "), E " +
              std::to_string(E.exceptions.size()) + " exc (threshold " + std::to_string(E.threshold) + ")";
    if (!E.exceptions.empty()) {
      detail += " at n=";
      for (std::size_t i = 0; i < E.exceptions.size(); ++i) detail += (i ? "," : "") + std::to_string(E.exceptions[i].n);
    }
    if (!E.zero_values.empty()) detail += ", " + std::to_string(E.zero_values.size()) + " zeros skipped";
    detail += "] ";
  }
  report(9, true, ok, "properties C/D/E, n,p <= 10^4", detail + "cap " + std::to_string(cap));
}

void criterion_10() {
  auto cov = CurveCover::parse("u^2 - t");
  bool ok = true;
  std::string detail;
  for (u64 N : {1000ull, 10000ull, 100000ull}) {
    auto c = run_census(cov, N);
    const double ratio = static_cast<double>(c.distinct_lower_bound) / static_cast<double>(N);
    ok = ok && ratio >= 0.6 && c.distinct_lower_bound > c.bound_value;
    char buf[160];
    std::snprintf(buf, sizeof buf, "N=%llu ratio=%.4f bound=%.1f; ", static_cast<unsigned long long>(N), ratio,
                  c.bound_value);
    detail += buf;
  }
  report(10, false, ok, "diversity trend", detail + "want ratio >= 0.6 and distinct > N/(log N)^(1-eta)");
}

}  // namespace

int main() {
  const std::vector<std::function<void()>> all = {criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
                                                  criterion_6, criterion_7, criterion_8, criterion_9, criterion_10};
  for (std::size_t i = 0; i < all.size(); ++i) {
    try {
      all[i]();
    } catch (const std::exception& e) {
      report(static_cast<int>(i + 1), i + 1 != 10, false, "criterion", std::string("threw: ") + e.what());
    }
  }
  std::printf("%s: %d gating criteria failed\n", failures ? "FAILED" : "OK", failures);
  return failures ? 1 : 0;
}
