#pragma once

// Randomized suites: rho_F against brute force, the exact-divisor shift on
// random instances, and witness re-checks.

#include <optional>
#include <string>
#include <vector>

#include "divlab/dz.hpp"
#include "divlab/modpoly.hpp"

namespace divlab {

/// Random primitive separable polynomial of degree 1..max_deg with
/// coefficients in [-bound, bound].
inline IntPoly random_separable(fp::SplitMix& rng, int max_deg = 4, long bound = 20) {
  for (;;) {
    const int deg = 1 + static_cast<int>(rng.next() % static_cast<u64>(max_deg));
    std::vector<Integer> c(deg + 1);
    for (auto& v : c) v = static_cast<long>(rng.next() % static_cast<u64>(2 * bound + 1)) - bound;
    if (c.back() == 0) continue;
    IntPoly f = primitive_part(IntPoly(std::move(c)));
    if (f.degree() == deg && poly_discriminant(f) != 0) return f;
  }
}

struct RhoSuiteReport {
  std::size_t trials = 0;
  std::vector<std::string> mismatches;
};

/// rho_F(m) against counting n in [0, m) with m | F(n), for random squarefree
/// m <= m_max. F is random unless given.
inline RhoSuiteReport run_rho_suite(std::size_t trials, u64 seed, u64 m_max = 10000,
                                    std::optional<IntPoly> fixed = std::nullopt) {
  RhoSuiteReport rep;
  fp::SplitMix rng(seed ^ 0x7260000000000000ull);
  while (rep.trials < trials) {
    IntPoly F = fixed ? *fixed : random_separable(rng);
    u64 m = 1 + rng.next() % m_max;
    Squarefree s;
    try {
      s = Squarefree::factor(m);
    } catch (const PreconditionError&) {
      continue;
    }
    u64 brute = 0;
    for (u64 n = 0; n < m; ++n) brute += eval_mod(F, n, m) == 0;
    u64 got = rho_F(F, s);
    ++rep.trials;
    if (got != brute)
      rep.mismatches.push_back("F=" + to_string(F) + " m=" + std::to_string(m) + " rho=" + std::to_string(got) +
                               " brute=" + std::to_string(brute));
  }
  return rep;
}

struct LemmaSuiteReport {
  std::size_t trials = 0;
  std::size_t valid = 0;
  /// instances outside the hypotheses, rejected with PreconditionError
  std::size_t rejected = 0;
  int max_shift = 0;
  std::vector<std::string> violations;
};

namespace detail {

/// m = product of `w` distinct primes from [lo, hi] with p > w, p not dividing
/// disc(F) and F having a root mod p. Empty if the draw fails.
inline std::optional<Squarefree> draw_modulus(const IntPoly& F, const Integer& disc, int w,
                                              const std::vector<u64>& primes, fp::SplitMix& rng) {
  std::vector<u64> ok;
  for (u64 p : primes)
    if (p > static_cast<u64>(w) && mod_u64(disc, p) != 0 && has_root_mod_p(F, p)) ok.push_back(p);
  if (static_cast<int>(ok.size()) < w) return std::nullopt;
  std::vector<u64> pick;
  while (static_cast<int>(pick.size()) < w) {
    u64 p = ok[rng.next() % ok.size()];
    if (std::find(pick.begin(), pick.end(), p) == pick.end()) pick.push_back(p);
  }
  return Squarefree::from_primes(pick);
}

}  // namespace detail

/// exact_divisor_shift on random (F, m, n): F separable of degree <= 4 (or the
/// given F), m a product of 2 or 3 admissible primes, n = crt_root.
/// With inject_fault every fourth instance breaks a hypothesis on purpose.
inline LemmaSuiteReport run_lemma_suite(std::size_t trials, u64 seed, std::optional<IntPoly> fixed = std::nullopt,
                                        bool inject_fault = false) {
  LemmaSuiteReport rep;
  fp::SplitMix rng(seed ^ 0x1e33a00000000000ull);
  const std::vector<u64> primes = prime_sieve(400);
  while (rep.trials < trials) {
    IntPoly F = fixed ? *fixed : random_separable(rng);
    const Integer disc = poly_discriminant(F);
    const int w = 2 + static_cast<int>(rng.next() % 2);
    auto s = detail::draw_modulus(F, disc, w, primes, rng);
    if (!s) {
      if (fixed) break;
      continue;
    }
    Squarefree m = *s;
    if (inject_fault && rep.trials % 4 == 3) {
      // swap in a prime dividing disc(F) with a root, else a prime <= omega
      u64 bad = 0;
      for (u64 p : primes)
        if (mod_u64(disc, p) == 0 && mod_u64(content(F), p) != 0 && has_root_mod_p(F, p)) {
          bad = p;
          break;
        }
      if (!bad)
        for (u64 p : primes)
          if (p <= static_cast<u64>(w) && has_root_mod_p(F, p)) {
            bad = p;
            break;
          }
      if (bad && std::find(m.primes.begin(), m.primes.end(), bad) == m.primes.end()) {
        auto ps = m.primes;
        ps.front() = bad;
        m = Squarefree::from_primes(ps);
      }
    }
    ++rep.trials;
    const u64 n = crt_root(F, m).n;
    try {
      const int l = exact_divisor_shift(F, disc, m, n);
      if (l > m.omega() || !exactly_divides(to_integer(m.m), eval_at(F, n + static_cast<u64>(l) * m.m))) {
        rep.violations.push_back("bad shift " + std::to_string(l) + " for F=" + to_string(F) +
                                 " m=" + std::to_string(m.m));
        continue;
      }
      ++rep.valid;
      rep.max_shift = std::max(rep.max_shift, l);
    } catch (const PreconditionError&) {
      ++rep.rejected;
    } catch (const LemmaViolation& e) {
      rep.violations.push_back(std::string(e.what()) + " F=" + to_string(F));
    }
  }
  return rep;
}

struct WitnessCheckReport {
  std::size_t checked = 0;
  std::vector<std::string> failures;
};

inline WitnessCheckReport recheck_witnesses(const IntPoly& F, const std::vector<WitnessRecord>& ws) {
  WitnessCheckReport rep;
  for (const auto& w : ws) {
    ++rep.checked;
    std::string why = recheck_witness(F, w);
    if (!why.empty()) rep.failures.push_back("m=" + std::to_string(w.m) + ": " + why);
  }
  return rep;
}

}  // namespace divlab
