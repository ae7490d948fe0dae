#pragma once

// Root counting and CRT lifting modulo squarefree m, the exact-divisor shift,
// witnesses n_m, and the combinatorial objects built on M_F(x): greedy and
// generous elements, omega buckets, heavy n and cliques.

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "divlab/factor_int.hpp"
#include "divlab/factorization.hpp"
#include "divlab/modpoly.hpp"
#include "divlab/parallel.hpp"
#include "divlab/sieve.hpp"

namespace divlab {

/// A squarefree modulus together with its prime factors (ascending).
struct Squarefree {
  u64 m = 1;
  std::vector<u64> primes;

  int omega() const { return static_cast<int>(primes.size()); }
  u64 p_min() const { return primes.empty() ? 0 : primes.front(); }

  static Squarefree from_primes(std::vector<u64> ps) {
    std::sort(ps.begin(), ps.end());
    Squarefree s;
    for (std::size_t i = 0; i < ps.size(); ++i) {
      if (i && ps[i] == ps[i - 1]) throw PreconditionError("modulus is not squarefree");
      if (!is_prime_u64(ps[i])) throw PreconditionError(std::to_string(ps[i]) + " is not prime");
      u128 v = static_cast<u128>(s.m) * ps[i];
      if (v >> 64) throw PreconditionError("modulus exceeds 64 bits");
      s.m = static_cast<u64>(v);
    }
    s.primes = std::move(ps);
    return s;
  }

  /// Trial-division factorization; throws unless m is squarefree.
  static Squarefree factor(u64 m) {
    if (m == 0) throw PreconditionError("modulus must be >= 1");
    std::vector<u64> ps;
    u64 v = m;
    for (u64 p = 2; p * p <= v; ++p) {
      if (v % p) continue;
      v /= p;
      if (v % p == 0) throw PreconditionError(std::to_string(m) + " is not squarefree");
      ps.push_back(p);
    }
    if (v > 1) ps.push_back(v);
    Squarefree s;
    s.m = m;
    s.primes = std::move(ps);
    return s;
  }

  static Squarefree of(const MFElement& e) {
    Squarefree s;
    s.m = e.m;
    s.primes = e.primes;
    return s;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < primes.size(); ++i) s += (i ? "*" : "") + std::to_string(primes[i]);
    return s.empty() ? "1" : s;
  }
};

inline Integer eval_at(const IntPoly& F, u64 n) { return F(to_integer(n)); }

namespace detail {

inline void check_content(const IntPoly& F, const Squarefree& m) {
  Integer c = content(F);
  for (u64 p : m.primes)
    if (mod_u64(c, p) == 0) throw DomainError("prime " + std::to_string(p) + " divides the content of F");
}

/// x = a mod M, x = b mod p  ->  x mod M*p.
inline u64 crt_pair(u64 a, u64 M, u64 b, u64 p) {
  u64 t = mulmod(submod(b % p, a % p, p), invmod(M % p, p), p);
  return static_cast<u64>(a + static_cast<u128>(M) * t);
}

}  // namespace detail

/// rho_F(m) = number of residues n mod m with m | F(n), by multiplicativity.
inline u64 rho_F(const IntPoly& F, const Squarefree& m) {
  detail::check_content(F, m);
  u64 r = 1;
  for (u64 p : m.primes) {
    r = detail::sat_mul(r, roots_mod_p(F, p).size());
    if (r == 0) return 0;
  }
  return r;
}

/// Every residue n in [0, m) with m | F(n), ascending.
inline std::vector<u64> all_roots_mod(const IntPoly& F, const Squarefree& m) {
  detail::check_content(F, m);
  std::vector<u64> acc{0};
  u64 M = 1;
  for (u64 p : m.primes) {
    auto rs = roots_mod_p(F, p);
    std::vector<u64> next;
    next.reserve(acc.size() * rs.size());
    for (u64 a : acc)
      for (u64 b : rs) next.push_back(detail::crt_pair(a, M, b, p));
    acc = std::move(next);
    M *= p;
    if (acc.empty()) break;
  }
  std::sort(acc.begin(), acc.end());
  return acc;
}

struct CrtRoot {
  u64 n = 0;
  /// false when rho_F(m) was too large to check every combination
  bool minimal = true;
};

inline constexpr u64 kExhaustiveRhoLimit = 10000;

/// Smallest n in [0, m) with m | F(n).
inline CrtRoot crt_root(const IntPoly& F, const Squarefree& m) {
  detail::check_content(F, m);
  std::vector<std::vector<u64>> roots;
  u64 rho = 1;
  for (u64 p : m.primes) {
    roots.push_back(roots_mod_p(F, p));
    if (roots.back().empty()) throw NoRootError("F has no root mod " + std::to_string(p), p);
    rho = detail::sat_mul(rho, roots.back().size());
  }
  CrtRoot out;
  if (rho <= kExhaustiveRhoLimit) {
    out.n = all_roots_mod(F, m).front();
    return out;
  }
  u64 acc = 0, M = 1;
  for (std::size_t i = 0; i < m.primes.size(); ++i) {
    acc = detail::crt_pair(acc, M, roots[i].front(), m.primes[i]);
    M *= m.primes[i];
  }
  out.n = acc;
  out.minimal = false;
  return out;
}

/// A uniformly chosen root combination (the randomized n_m variant).
inline u64 random_crt_root(const IntPoly& F, const Squarefree& m, fp::SplitMix& rng) {
  detail::check_content(F, m);
  u64 acc = 0, M = 1;
  for (u64 p : m.primes) {
    auto rs = roots_mod_p(F, p);
    if (rs.empty()) throw NoRootError("F has no root mod " + std::to_string(p), p);
    acc = detail::crt_pair(acc, M, rs[rng.next() % rs.size()], p);
    M *= p;
  }
  return acc;
}

namespace detail {

/// Smallest l in [0, max_l] with m || F(n + l m), or -1. No precondition checks.
inline int find_shift(const IntPoly& F, const Squarefree& m, u64 n, int max_l) {
  const Integer M = to_integer(m.m);
  for (int l = 0; l <= max_l; ++l) {
    Integer v = F(to_integer(n) + M * l);
    if (exactly_divides(M, v)) return l;
  }
  return -1;
}

}  // namespace detail

/// Smallest l in {0, ..., omega(m)} with m || F(n + l m). Requires m | F(n),
/// gcd(m, disc F) = 1 and p_min(m) > omega(m); under those hypotheses a shift
/// always exists, so failing to find one raises LemmaViolation.
inline int exact_divisor_shift(const IntPoly& F, const Integer& disc, const Squarefree& m, u64 n) {
  const int w = m.omega();
  if (m.m > 1 && m.p_min() <= static_cast<u64>(w))
    throw PreconditionError("p_min(m) = " + std::to_string(m.p_min()) + " <= omega(m) = " + std::to_string(w));
  if (gcd(to_integer(m.m), disc) != 1) throw PreconditionError("m shares a factor with disc(F)");
  if (!divisible(eval_at(F, n), to_integer(m.m)))
    throw PreconditionError(std::to_string(m.m) + " does not divide F(" + std::to_string(n) + ")");
  int l = detail::find_shift(F, m, n, w);
  if (l < 0)
    throw LemmaViolation("no exact shift for m=" + std::to_string(m.m) + " n=" + std::to_string(n) +
                         " within omega(m)+1 steps");
  return l;
}

struct WitnessRecord {
  u64 m = 0;
  std::vector<u64> primes;
  u64 n_m = 0;
  int shift_l = 0;
  bool greedy = false;
  /// whether the CRT root was certified minimal
  bool minimal_root = true;

  int omega() const { return static_cast<int>(primes.size()); }
  std::string factorization() const { return Squarefree{m, primes}.to_string(); }
};

struct WitnessOptions {
  bool randomize = false;
  u64 seed = 0;
};

/// n_m = r + l m with r the CRT root (r = 0 replaced by m) and l the exact shift.
/// When k is given (m in M_F(x)), also checks n_m <= m (k + 2).
inline WitnessRecord primitive_witness(const IntPoly& F, const Integer& disc, const Squarefree& m,
                                       std::optional<int> k = std::nullopt, const WitnessOptions& opt = {}) {
  WitnessRecord rec;
  rec.m = m.m;
  rec.primes = m.primes;
  u64 r;
  if (opt.randomize) {
    fp::SplitMix rng(opt.seed ^ (m.m * 0x9E3779B97F4A7C15ull));
    r = random_crt_root(F, m, rng);
    rec.minimal_root = false;
  } else {
    CrtRoot c = crt_root(F, m);
    r = c.n;
    rec.minimal_root = c.minimal;
  }
  if (r == 0) r = m.m;
  rec.shift_l = exact_divisor_shift(F, disc, m, r);
  rec.n_m = r + static_cast<u64>(rec.shift_l) * m.m;
  const u128 bound = static_cast<u128>(m.m) * static_cast<u64>(m.omega() + 1);
  if (rec.n_m == 0 || rec.n_m > bound)
    throw InvariantViolation("witness n_m=" + std::to_string(rec.n_m) + " exceeds m(omega(m)+1) for m=" +
                             std::to_string(m.m));
  if (k && static_cast<u128>(rec.n_m) > static_cast<u128>(m.m) * static_cast<u64>(*k + 2))
    throw InvariantViolation("witness n_m exceeds m(k+2) for m=" + std::to_string(m.m));
  return rec;
}

/// Independent re-check of a witness: m | F(n_m), gcd(m, F(n_m)/m) = 1 and
/// n_m <= m(omega(m)+1). Returns an empty string when all hold.
inline std::string recheck_witness(const IntPoly& F, const WitnessRecord& w) {
  u64 prod = 1;
  for (u64 p : w.primes) prod *= p;
  if (prod != w.m) return "stored factorization does not multiply to m";
  Integer v = eval_at(F, w.n_m);
  Integer M = to_integer(w.m);
  if (!divisible(v, M)) return "m does not divide F(n_m)";
  if (gcd(M, divexact(v, M)) != 1) return "m is not an exact divisor of F(n_m)";
  if (w.n_m < 1 || static_cast<u128>(w.n_m) > static_cast<u128>(w.m) * static_cast<u64>(w.omega() + 1))
    return "n_m outside [1, m(omega(m)+1)]";
  return "";
}

/// Witnesses for every element of M_F(x), in the order of `elements`.
inline std::vector<WitnessRecord> build_witnesses(const IntPoly& F, const Integer& disc,
                                                  const std::vector<MFElement>& elements, int k, unsigned workers = 1,
                                                  const WitnessOptions& opt = {}) {
  return sharded_map<WitnessRecord>(elements.size(), workers, [&](std::size_t b, std::size_t e) {
    std::vector<WitnessRecord> out;
    for (std::size_t i = b; i < e; ++i) out.push_back(primitive_witness(F, disc, Squarefree::of(elements[i]), k, opt));
    return out;
  });
}

// --- Properties C, D, E ------------------------------------------------------

struct PropertyCReport {
  u64 p = 0;
  std::size_t checked = 0;
  /// n with p^2 | F(n) but p not exactly dividing F(n + p)
  std::vector<u64> violations;
};

/// For up to `trials` n >= 1 with p^2 | F(n) (from roots lifted to p^2),
/// checks p || F(n + p).
inline PropertyCReport verify_property_C(const IntPoly& F, const Integer& disc, u64 p, std::size_t trials) {
  if (mod_u64(disc, p) == 0) throw PreconditionError("p = " + std::to_string(p) + " divides disc(F)");
  PropertyCReport rep;
  rep.p = p;
  const Integer P = to_integer(p), P2 = P * P;
  const IntPoly dF = F.derivative();
  std::vector<Integer> lifted;
  for (u64 r : roots_mod_p(F, p)) {
    Integer x = to_integer(r);
    Integer fx = F(x), dfx = dF(x);
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), dfx.get_mpz_t(), P2.get_mpz_t()) == 0) continue;  // not a simple root
    Integer y = x - fx * inv;
    mpz_mod(y.get_mpz_t(), y.get_mpz_t(), P2.get_mpz_t());
    lifted.push_back(y);
  }
  for (Integer j = 0; rep.checked < trials && !lifted.empty(); ++j) {
    for (const Integer& y : lifted) {
      if (rep.checked >= trials) break;
      Integer n = y + j * P2;
      if (n == 0) continue;
      Integer fn = F(n);
      if (!divisible(fn, P2)) throw InvariantViolation("Hensel lift did not give p^2 | F(n)");
      ++rep.checked;
      if (!exactly_divides(P, F(Integer(n + P)))) rep.violations.push_back(n.get_ui());
    }
  }
  return rep;
}

struct PropertyDReport {
  u64 limit = 0;
  std::size_t checked = 0;
  /// primes of P_F with no n <= 2p having p || F(n)
  std::vector<u64> failures;
  /// every p >= threshold passed
  u64 threshold = 2;
};

/// For each p in P_F up to limit, looks for n in [1, 2p] with p || F(n).
inline PropertyDReport verify_property_D(const ChebotarevSieve& sieve, u64 limit, unsigned workers = 1) {
  PropertyDReport rep;
  rep.limit = limit;
  auto end = std::upper_bound(sieve.primes_in_PF.begin(), sieve.primes_in_PF.end(), limit);
  std::vector<u64> ps(sieve.primes_in_PF.begin(), end);
  rep.checked = ps.size();
  rep.failures = sharded_map<u64>(ps.size(), workers, [&](std::size_t b, std::size_t e) {
    std::vector<u64> bad;
    for (std::size_t i = b; i < e; ++i) {
      const u64 p = ps[i];
      const Integer P = to_integer(p);
      bool ok = false;
      for (u64 r : roots_mod_p(sieve.F, p)) {
        for (u64 n = r; n <= 2 * p && !ok; n += p)
          if (n >= 1 && exactly_divides(P, eval_at(sieve.F, n))) ok = true;
        if (ok) break;
      }
      if (!ok) bad.push_back(p);
    }
    return bad;
  });
  if (!rep.failures.empty()) rep.threshold = rep.failures.back() + 1;
  return rep;
}

struct PropertyERow {
  u64 n = 0;
  int count = 0;
};

struct PropertyEReport {
  u64 n_lo = 1, n_hi = 1;
  int d = 1;
  std::size_t checked = 0;
  /// n where more than d primes p >= n/4 divide F(n)
  std::vector<PropertyERow> exceptions;
  /// n with F(n) = 0 (every prime divides; excluded)
  std::vector<u64> zero_values;
  /// n whose factorization left a cofactor that may hide large primes
  std::vector<u64> indeterminate;
  u64 threshold = 1;
  std::size_t cap = 20;
  bool pass() const { return exceptions.size() <= cap; }
};

/// Counts the primes p >= n/4 dividing F(n) for n in [n_lo, n_hi].
inline PropertyEReport verify_property_E(const IntPoly& F, int d, u64 n_lo, u64 n_hi, std::size_t cap = 20,
                                         unsigned workers = 1, u64 trial_bound = kDefaultTrialBound,
                                         u64 budget = kDefaultRhoBudget) {
  if (n_lo < 1 || n_lo > n_hi) throw PreconditionError("property E range must satisfy 1 <= lo <= hi");
  PropertyEReport rep;
  rep.n_lo = n_lo;
  rep.n_hi = n_hi;
  rep.d = d;
  rep.cap = cap;
  rep.threshold = n_lo;
  struct Row {
    u64 n;
    int kind;  // 0 ok, 1 exception, 2 zero, 3 indeterminate
    int count;
  };
  auto rows = sharded_map<Row>(n_hi - n_lo + 1, workers, [&](std::size_t b, std::size_t e) {
    std::vector<Row> out;
    for (std::size_t i = b; i < e; ++i) {
      const u64 n = n_lo + i;
      Integer v = eval_at(F, n);
      if (v == 0) {
        out.push_back({n, 2, 0});
        continue;
      }
      IntFactorization f = factor_integer(v, trial_bound, budget);
      int count = 0;
      for (const auto& [q, ex] : f.factors)
        if (4 * q >= to_integer(n)) ++count;
      if (!f.complete()) {
        out.push_back({n, 3, count});
        continue;
      }
      out.push_back({n, count > d ? 1 : 0, count});
    }
    return out;
  });
  for (const Row& r : rows) {
    if (r.kind == 2) {
      rep.zero_values.push_back(r.n);
      continue;
    }
    if (r.kind == 3) {
      rep.indeterminate.push_back(r.n);
      continue;
    }
    ++rep.checked;
    if (r.kind == 1) {
      rep.exceptions.push_back({r.n, r.count});
      rep.threshold = r.n + 1;
    }
  }
  return rep;
}

// --- greedy / generous ------------------------------------------------------------

struct GreedyStats {
  std::size_t greedy = 0;
  std::size_t generous = 0;
  std::size_t distinct_n = 0;
  std::size_t mf_size = 0;
  /// |{n_m}| * 12d / |M_F(x)|; the asymptotic claim is ratio >= 1
  double ratio = 0;
  bool half_greedy() const { return 2 * greedy >= mf_size; }
};

/// Marks each record greedy unless at least 6d other records share its n_m.
inline GreedyStats classify_greedy(std::vector<WitnessRecord>& witnesses, int d) {
  std::map<u64, std::size_t> share;
  for (const auto& w : witnesses) ++share[w.n_m];
  GreedyStats st;
  st.mf_size = witnesses.size();
  st.distinct_n = share.size();
  for (auto& w : witnesses) {
    w.greedy = share[w.n_m] - 1 < static_cast<std::size_t>(6 * d);
    (w.greedy ? st.greedy : st.generous) += 1;
  }
  st.ratio = st.mf_size ? static_cast<double>(st.distinct_n) * 12.0 * d / static_cast<double>(st.mf_size) : 0.0;
  return st;
}

// --- omega buckets ----------------------------------------------------------------

enum class OmegaClass { reasonable, large, enormous, indeterminate };

inline const char* to_string(OmegaClass c) {
  switch (c) {
    case OmegaClass::reasonable: return "reasonable";
    case OmegaClass::large: return "large";
    case OmegaClass::enormous: return "enormous";
    default: return "indeterminate";
  }
}

struct OmegaResult {
  OmegaClass cls = OmegaClass::indeterminate;
  /// distinct primes of F(n) in [y, x]
  int omega_J = 0;
};

/// Buckets n by the number of distinct primes of F(n) in J = [y, x]:
/// reasonable if <= 1e5 d^2 log log x, else enormous if >= 3d (log log x)^2,
/// else large.
inline OmegaResult classify_omega(const IntPoly& F, u64 n, const DiversityParams& params,
                                  u64 trial_bound = kDefaultTrialBound, u64 budget = kDefaultRhoBudget) {
  OmegaResult res;
  Integer v = eval_at(F, n);
  if (v == 0) return res;
  IntFactorization f = factor_integer(v, trial_bound, budget);
  const Integer lo = to_integer(params.y_min());
  const Integer hi = to_integer(static_cast<u64>(std::floor(params.x)));
  for (const auto& [q, e] : f.factors)
    if (q >= lo && q <= hi) ++res.omega_J;
  // unsplit primes all exceed the trial bound; harmless only if that is past x
  if (!f.complete() && to_integer(trial_bound) < hi) return res;
  const double llx = std::log(std::log(params.x));
  const double d = params.d;
  if (res.omega_J <= 1e5 * d * d * llx)
    res.cls = OmegaClass::reasonable;
  else if (res.omega_J >= 3 * d * llx * llx)
    res.cls = OmegaClass::enormous;
  else
    res.cls = OmegaClass::large;
  return res;
}

// --- heavy n ------------------------------------------------------------------------

struct HeavyScan {
  u64 x = 0;
  std::size_t threshold = 0;
  /// (n, number of m in M_F(x) dividing F(n)), n ascending
  std::vector<std::pair<u64, std::size_t>> heavy;
  double density = 0;
  /// (log x)^(-2 + 30 epsilon log 2d)
  double bound_density = 0;
};

/// n <= x with more than `threshold` divisors in M_F(x), counted by walking
/// the rho_F(m) residue classes of each m. The default threshold is 6d.
inline HeavyScan heavy_n_scan(const IntPoly& F, const std::vector<MFElement>& MF, u64 x, int d,
                              std::optional<std::size_t> threshold = std::nullopt, unsigned workers = 1) {
  HeavyScan out;
  out.x = x;
  out.threshold = threshold.value_or(static_cast<std::size_t>(6 * d));
  const double lx = std::log(static_cast<double>(std::max<u64>(x, 3)));
  out.bound_density = std::pow(lx, -2.0 + 30.0 * DiversityParams::paper_epsilon(d) * std::log(2.0 * d));
  if (MF.empty() || x == 0) return out;
  std::vector<std::pair<u64, std::vector<u64>>> classes;
  for (const auto& e : MF) classes.emplace_back(e.m, all_roots_mod(F, Squarefree::of(e)));
  out.heavy = sharded_map<std::pair<u64, std::size_t>>(x, workers, [&](std::size_t b, std::size_t e) {
    // this shard covers n in [b + 1, e]
    std::vector<std::uint32_t> cnt(e - b, 0);
    for (const auto& [m, roots] : classes) {
      for (u64 r : roots) {
        u64 first = r == 0 ? m : r;
        if (first < b + 1) first += (b + 1 - first + m - 1) / m * m;
        for (u64 n = first; n <= e; n += m) ++cnt[n - b - 1];
      }
    }
    std::vector<std::pair<u64, std::size_t>> hv;
    for (std::size_t i = 0; i < cnt.size(); ++i)
      if (cnt[i] > out.threshold) hv.emplace_back(b + 1 + i, cnt[i]);
    return hv;
  });
  out.density = static_cast<double>(out.heavy.size()) / static_cast<double>(x);
  return out;
}

// --- cliques ------------------------------------------------------------------------

enum class CliqueType { s_prime, s_double_prime };

inline const char* to_string(CliqueType t) { return t == CliqueType::s_prime ? "S'" : "S''"; }

struct CliqueRecord {
  u64 P = 0;
  u64 m1 = 0, m2 = 0, m3 = 0;
  /// pairwise m_j / 2 <= m_i <= 2 m_j
  bool ratio_ok = false;
  /// pairwise gcd(m_i, m_j) < m_i < lcm(m_i, m_j)
  bool proper_ok = false;
  CliqueType type = CliqueType::s_prime;
};

struct CliqueScan {
  std::vector<CliqueRecord> cliques;
  bool truncated = false;
};

inline u64 lcm_u64(u64 a, u64 b) { return a / gcd_u64(a, b) * b; }

/// Triples of distinct cofactors m1 < m2 < m3 sharing the same large prime P.
inline CliqueScan find_cliques(const std::vector<MFElement>& MF, std::size_t cap = 1000000) {
  std::map<u64, std::vector<u64>> groups;
  for (const auto& e : MF) groups[e.P].push_back(e.m1);
  CliqueScan out;
  for (auto& [P, ms] : groups) {
    std::sort(ms.begin(), ms.end());
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    const std::size_t s = ms.size();
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = i + 1; j < s; ++j)
        for (std::size_t l = j + 1; l < s; ++l) {
          if (out.cliques.size() >= cap) {
            out.truncated = true;
            return out;
          }
          CliqueRecord c;
          c.P = P;
          c.m1 = ms[i];
          c.m2 = ms[j];
          c.m3 = ms[l];
          const u64 v[3] = {c.m1, c.m2, c.m3};
          c.ratio_ok = true;
          c.proper_ok = true;
          for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) {
              if (a == b) continue;
              if (!(2 * v[a] >= v[b] && v[a] <= 2 * v[b])) c.ratio_ok = false;
              if (!(gcd_u64(v[a], v[b]) < v[a] && v[a] < lcm_u64(v[a], v[b]))) c.proper_ok = false;
            }
          const u64 l12 = lcm_u64(c.m1, c.m2), l13 = lcm_u64(c.m1, c.m3), l23 = lcm_u64(c.m2, c.m3);
          const u64 all = lcm_u64(l12, c.m3);
          c.type = (l12 == all && l13 == all && l23 == all) ? CliqueType::s_double_prime : CliqueType::s_prime;
          out.cliques.push_back(c);
        }
  }
  return out;
}

// --- CSV ------------------------------------------------------------------------------

inline void write_witness_csv(std::ostream& os, const std::vector<WitnessRecord>& ws) {
  os << "m,factorization,n_m,shift_l,greedy\n";
  for (const auto& w : ws)
    os << w.m << ',' << w.factorization() << ',' << w.n_m << ',' << w.shift_l << ',' << (w.greedy ? "true" : "false")
       << '\n';
}

inline void write_clique_csv(std::ostream& os, const std::vector<CliqueRecord>& cs) {
  os << "P,m1,m2,m3,type\n";
  for (const auto& c : cs) os << c.P << ',' << c.m1 << ',' << c.m2 << ',' << c.m3 << ',' << to_string(c.type) << '\n';
}

}  // namespace divlab
