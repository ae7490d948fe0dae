#pragma once

// Integer factorization: trial division, Pollard rho (Brent), and
// deterministic Miller-Rabin certification.

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "divlab/integer.hpp"

namespace divlab {

struct IntFactorization {
  Integer value;
  int sign = 1;
  /// (prime, exponent), ascending by prime.
  std::vector<std::pair<Integer, int>> factors;
  /// Unsplit part, 1 when the factorization is complete.
  Integer cofactor = 1;

  bool complete() const { return cofactor == 1; }

  /// Exponent of p among the certified factors (0 if absent).
  int exponent_of(const Integer& p) const {
    for (const auto& [q, e] : factors)
      if (q == p) return e;
    return 0;
  }

  std::string to_string() const {
    std::string s = sign < 0 ? "-" : "";
    bool first = true;
    for (const auto& [p, e] : factors) {
      if (!first) s += "*";
      s += p.get_str();
      if (e > 1) s += "^" + std::to_string(e);
      first = false;
    }
    if (cofactor != 1) s += (first ? "" : "*") + std::string("[") + cofactor.get_str() + "]";
    else if (first) s += "1";
    return s;
  }
};

namespace detail {

inline bool miller_rabin_u64(u64 n, u64 a) {
  if (a % n == 0) return true;
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  u64 x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

inline bool miller_rabin(const Integer& n, unsigned long a) {
  Integer d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  Integer x;
  Integer base(a);
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  Integer nm1 = n - 1;
  if (x == 1 || x == nm1) return true;
  for (unsigned long i = 1; i < s; ++i) {
    x = x * x % n;
    if (x == nm1) return true;
  }
  return false;
}

// Miller-Rabin with the first 13 prime bases is deterministic below 3.3e24.
inline constexpr unsigned long kMrBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

}  // namespace detail

inline bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  if (n < 41 * 41) return true;
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
    if (!detail::miller_rabin_u64(n, a)) return false;
  return true;
}

/// Primality: deterministic below 3.3e24; above that, the same bases plus
/// GMP's Baillie-PSW test.
inline bool is_prime(const Integer& n) {
  if (n < 2) return false;
  if (fits_u64(n)) return is_prime_u64(to_u64(n));
  for (unsigned long p : detail::kMrBases)
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  for (unsigned long a : detail::kMrBases)
    if (!detail::miller_rabin(n, a)) return false;
  static const Integer kDeterministicLimit("3317044064679887385961981");
  if (n < kDeterministicLimit) return true;
  return mpz_probab_prime_p(n.get_mpz_t(), 25) > 0;
}

namespace detail {

/// Brent's variant of Pollard rho on a composite n. Returns a nontrivial
/// factor or 0 if none was found within `budget` iterations.
inline u64 pollard_brent_u64(u64 n, u64 c, u64& budget) {
  if (n % 2 == 0) return 2;
  u64 y = 2, x = 2, q = 1, g = 1, ys = 2;
  u64 r = 1;
  const u64 m = 128;
  auto f = [&](u64 v) { return addmod(mulmod(v, v, n), c, n); };
  while (g == 1) {
    x = y;
    for (u64 i = 0; i < r; ++i) y = f(y);
    u64 k = 0;
    while (k < r && g == 1) {
      ys = y;
      u64 lim = std::min(m, r - k);
      for (u64 i = 0; i < lim; ++i) {
        y = f(y);
        q = mulmod(q, x > y ? x - y : y - x, n);
      }
      g = gcd_u64(q, n);
      k += lim;
      if (budget <= lim) return 0;
      budget -= lim;
    }
    r <<= 1;
  }
  if (g == n) {
    do {
      ys = f(ys);
      g = gcd_u64(x > ys ? x - ys : ys - x, n);
    } while (g == 1);
  }
  return g == n ? 0 : g;
}

inline Integer pollard_brent(const Integer& n, unsigned long c, u64& budget) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  Integer y = 2, x = 2, q = 1, g = 1, ys = 2;
  u64 r = 1;
  const u64 m = 128;
  auto f = [&](const Integer& v) {
    Integer w = v * v + c;
    mpz_mod(w.get_mpz_t(), w.get_mpz_t(), n.get_mpz_t());
    return w;
  };
  while (g == 1) {
    x = y;
    for (u64 i = 0; i < r; ++i) y = f(y);
    u64 k = 0;
    while (k < r && g == 1) {
      ys = y;
      u64 lim = std::min(m, r - k);
      for (u64 i = 0; i < lim; ++i) {
        y = f(y);
        q = q * abs(Integer(x - y)) % n;
      }
      g = gcd(q, n);
      k += lim;
      if (budget <= lim) return 0;
      budget -= lim;
    }
    r <<= 1;
  }
  if (g == n) {
    do {
      ys = f(ys);
      g = gcd(Integer(x - ys), n);
    } while (g == 1);
  }
  return g == n ? Integer(0) : g;
}

}  // namespace detail

inline constexpr u64 kDefaultTrialBound = 100000;
inline constexpr u64 kDefaultRhoBudget = 2000000;

/// Factor nval: trial division up to trial_bound, then Pollard-Brent rho
/// with a total iteration budget. What cannot be split stays in cofactor.
inline IntFactorization factor_integer(const Integer& nval, u64 trial_bound = kDefaultTrialBound,
                                       u64 effort = kDefaultRhoBudget) {
  if (sgn(nval) == 0) throw DomainError("factor_integer: zero has no factorization");
  IntFactorization out;
  out.value = nval;
  out.sign = sgn(nval) < 0 ? -1 : 1;
  std::map<Integer, int> primes;
  Integer n = abs(nval);

  // trial division
  auto strip = [&](u64 d) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
      int e = 0;
      while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), d);
        ++e;
      }
      primes[Integer(static_cast<unsigned long>(d))] += e;
    }
  };
  if (fits_u64(n)) {
    u64 v = to_u64(n);
    auto strip64 = [&](u64 d) {
      if (v % d == 0) {
        int e = 0;
        while (v % d == 0) {
          v /= d;
          ++e;
        }
        primes[to_integer(d)] += e;
      }
    };
    if (trial_bound >= 2) strip64(2);
    if (trial_bound >= 3) strip64(3);
    for (u64 d = 5; d <= trial_bound && static_cast<u128>(d) * d <= v; d += 6) {
      strip64(d);
      if (d + 2 <= trial_bound) strip64(d + 2);
    }
    n = to_integer(v);
  } else {
    if (trial_bound >= 2) strip(2);
    if (trial_bound >= 3) strip(3);
    for (u64 d = 5; d <= trial_bound && d <= 0xFFFFFFFFull; d += 6) {
      if (n == 1) break;
      strip(d);
      if (d + 2 <= trial_bound) strip(d + 2);
    }
  }

  // n has no prime factor <= trial_bound (or is 1 / a prime below bound^2)
  std::vector<Integer> pending;
  if (n > 1) pending.push_back(n);
  Integer cofactor = 1;
  u64 budget = effort;
  while (!pending.empty()) {
    Integer c = pending.back();
    pending.pop_back();
    if (c == 1) continue;
    bool below_square =
        fits_u64(c) && static_cast<u128>(to_u64(c)) <= static_cast<u128>(trial_bound) * trial_bound;
    if (below_square || is_prime(c)) {
      primes[c] += 1;
      continue;
    }
    if (mpz_perfect_square_p(c.get_mpz_t())) {
      Integer root = sqrt(c);
      pending.push_back(root);
      pending.push_back(root);
      continue;
    }
    Integer d = 0;
    for (unsigned long seed = 1; seed <= 8 && d == 0 && budget > 0; ++seed) {
      if (fits_u64(c)) {
        d = to_integer(detail::pollard_brent_u64(to_u64(c), seed, budget));
      } else {
        d = detail::pollard_brent(c, seed, budget);
      }
    }
    if (d == 0) {
      cofactor *= c;
      continue;
    }
    pending.push_back(d);
    pending.push_back(divexact(c, d));
  }
  // an unsplit piece may still contain primes found elsewhere
  for (auto& [p, e] : primes)
    while (cofactor > 1 && divisible(cofactor, p)) {
      cofactor = divexact(cofactor, p);
      ++e;
    }
  out.factors.assign(primes.begin(), primes.end());
  out.cofactor = cofactor;
  return out;
}

inline Integer reassemble(const IntFactorization& f) {
  Integer v = f.cofactor;
  for (const auto& [p, e] : f.factors) v *= ipow(p, static_cast<unsigned long>(e));
  return f.sign < 0 ? Integer(-v) : v;
}

/// Product of the primes with odd exponent (the squarefree kernel) when the
/// factorization is complete.
inline Integer squarefree_kernel(const IntFactorization& f) {
  Integer k = 1;
  for (const auto& [p, e] : f.factors)
    if (e & 1) k *= p;
  return k;
}

}  // namespace divlab
