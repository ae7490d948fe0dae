#pragma once

// Prime sieving, the Chebotarev prime set P_F and its density estimate, and
// enumeration of the special squarefree set M_F(x).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "divlab/algebra.hpp"
#include "divlab/factorization.hpp"
#include "divlab/parallel.hpp"

namespace divlab {

/// All primes <= limit, by a segmented sieve of Eratosthenes over odd numbers.
inline std::vector<u64> prime_sieve(u64 limit) {
  if (limit < 2) throw DomainError("prime_sieve: limit must be >= 2");
  std::vector<u64> primes{2};
  const u64 root = static_cast<u64>(std::sqrt(static_cast<double>(limit))) + 1;
  // base primes up to root by a plain sieve
  std::vector<char> small(root + 1, 1);
  std::vector<u64> base;
  for (u64 i = 3; i <= root; i += 2) {
    if (!small[i]) continue;
    base.push_back(i);
    for (u64 j = i * i; j <= root; j += 2 * i) small[j] = 0;
  }
  constexpr u64 kSegment = 1 << 18;  // odd numbers per segment
  std::vector<char> seg(kSegment);
  std::vector<u64> next(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) next[i] = base[i] * base[i];
  for (u64 low = 3; low <= limit; low += 2 * kSegment) {
    const u64 high = std::min(limit, low + 2 * kSegment - 1);
    std::fill(seg.begin(), seg.end(), 1);
    for (std::size_t i = 0; i < base.size(); ++i) {
      u64 p = base[i];
      if (next[i] > high) continue;
      u64 j = next[i];
      for (; j <= high; j += 2 * p) seg[(j - low) / 2] = 0;
      next[i] = j;
    }
    for (u64 v = low; v <= high; v += 2)
      if (seg[(v - low) / 2]) primes.push_back(v);
  }
  return primes;
}

/// P_F up to a limit: primes not dividing disc(F) modulo which F has a root.
struct ChebotarevSieve {
  IntPoly F;
  Integer disc;
  u64 limit = 0;
  /// pi(limit)
  u64 prime_count = 0;
  std::vector<u64> primes_in_PF;

  /// |P_F cap [2, limit]| / pi(limit)
  double delta_hat() const {
    return prime_count == 0 ? 0.0 : static_cast<double>(primes_in_PF.size()) / static_cast<double>(prime_count);
  }
  bool contains(u64 p) const { return std::binary_search(primes_in_PF.begin(), primes_in_PF.end(), p); }
};

inline bool in_PF(const IntPoly& F, const Integer& disc, u64 p) {
  if (mod_u64(disc, p) == 0) return false;
  return has_root_mod_p(F, p);
}

inline ChebotarevSieve build_PF(const IntPoly& F, u64 limit, unsigned workers = 1) {
  if (F.degree() < 1) throw DomainError("build_PF: F must have degree >= 1");
  ChebotarevSieve s;
  s.F = F;
  s.disc = poly_discriminant(F);
  if (s.disc == 0) throw DomainError("build_PF: F is not separable (zero discriminant)");
  s.limit = limit;
  std::vector<u64> primes = prime_sieve(limit);
  s.prime_count = primes.size();
  s.primes_in_PF = sharded_map<u64>(primes.size(), workers, [&](std::size_t b, std::size_t e) {
    std::vector<u64> out;
    for (std::size_t i = b; i < e; ++i)
      if (in_PF(F, s.disc, primes[i])) out.push_back(primes[i]);
    return out;
  });
  return s;
}

struct DensityReport {
  double delta_hat = 0;
  double floor = 0;      // 1/d
  double slack = 0.05;
  double margin = 0;     // delta_hat - (floor - slack)
  bool pass = false;
};

/// delta_hat >= 1/d - 0.05.
inline DensityReport check_density_floor(const ChebotarevSieve& sieve, int d) {
  if (d < 1) throw PreconditionError("check_density_floor: d must be >= 1");
  if (sieve.prime_count < 100) throw PreconditionError("check_density_floor: need pi(limit) >= 100");
  DensityReport r;
  r.delta_hat = sieve.delta_hat();
  r.floor = 1.0 / d;
  r.margin = r.delta_hat - (r.floor - r.slack);
  r.pass = r.margin >= 0;
  return r;
}

// --- parameters --------------------------------------------------------------

enum class ParamMode { paper, override };

inline const char* to_string(ParamMode m) { return m == ParamMode::paper ? "paper" : "override"; }

/// Parameter bundle for M_F(x) and the witness machinery.
struct DiversityParams {
  double x = 0;
  double epsilon = 0;
  double delta = 0;
  double kappa = 0;
  int k = 0;
  double y = 0;
  double tail_exponent = 0.9;
  int d = 1;
  ParamMode mode = ParamMode::paper;
  /// Integer window override [lo, hi]; otherwise [x/(2 kappa), x/kappa].
  std::optional<u64> window_lo, window_hi;

  /// epsilon = 1 / (1000 log(2d))
  static double paper_epsilon(int d) { return 1.0 / (1000.0 * std::log(2.0 * d)); }
  static double paper_kappa(double x) { return std::log(std::log(x)); }
  static int paper_k(double x, double epsilon, double delta) {
    return static_cast<int>(std::floor(epsilon * delta * std::log(std::log(x)))) + 1;
  }
  static double paper_y(double x, double epsilon) { return std::exp(std::pow(std::log(x), 1.0 - epsilon)); }

  static DiversityParams paper(double x, int d, double delta, std::optional<double> epsilon = std::nullopt) {
    DiversityParams p;
    p.mode = ParamMode::paper;
    p.x = x;
    p.d = d;
    p.delta = delta;
    p.epsilon = epsilon.value_or(paper_epsilon(d));
    p.kappa = paper_kappa(x);
    p.k = paper_k(x, p.epsilon, delta);
    p.y = paper_y(x, p.epsilon);
    p.tail_exponent = 0.9;
    p.validate();
    return p;
  }

  /// Override mode: k, y, tail and (optionally) the window are set directly.
  static DiversityParams override_mode(double x, int d, double delta, int k, double y, double tail,
                                       std::optional<u64> lo = std::nullopt, std::optional<u64> hi = std::nullopt) {
    DiversityParams p;
    p.mode = ParamMode::override;
    p.x = x;
    p.d = d;
    p.delta = delta;
    p.epsilon = paper_epsilon(std::max(d, 1));
    p.kappa = paper_kappa(x);
    p.k = k;
    p.y = y;
    p.tail_exponent = tail;
    p.window_lo = lo;
    p.window_hi = hi;
    p.validate();
    return p;
  }

  void validate() const {
    if (!(x > std::exp(1.0))) throw PreconditionError("x must exceed e so that log log x > 0");
    if (!(epsilon > 0 && epsilon <= 0.5)) throw PreconditionError("epsilon must lie in (0, 1/2]");
    if (!(delta > 0 && delta <= 1)) throw PreconditionError("delta must lie in (0, 1]");
    if (d < 1) throw PreconditionError("d must be >= 1");
    if (k < 0) throw PreconditionError("k must be >= 0");
    if (!(y >= 1)) throw PreconditionError("y must be >= 1");
    if (!(tail_exponent >= 0 && tail_exponent <= 1)) throw PreconditionError("tail exponent must lie in [0, 1]");
    if (window_lo.has_value() != window_hi.has_value())
      throw PreconditionError("window override needs both lo and hi");
    if (window_lo && *window_lo > *window_hi) throw PreconditionError("window lo exceeds hi");
    if (mode == ParamMode::paper) {
      if (window_lo) throw PreconditionError("window override is only legal in override mode");
      auto close = [](double a, double b) { return std::fabs(a - b) <= 1e-12 * std::max(1.0, std::fabs(b)); };
      if (!close(kappa, paper_kappa(x)) || k != paper_k(x, epsilon, delta) || !close(y, paper_y(x, epsilon)) ||
          tail_exponent != 0.9)
        throw PreconditionError("paper-mode parameters do not match the formulas for kappa, k, y, tail");
    }
  }

  int omega() const { return k + 1; }

  // Integer bounds, rounded outward so no boundary element is lost.
  u64 lo() const {
    if (window_lo) return *window_lo;
    return static_cast<u64>(std::floor(x / (2 * kappa)));
  }
  u64 hi() const {
    if (window_hi) return *window_hi;
    return static_cast<u64>(std::ceil(x / kappa));
  }
  u64 y_min() const { return std::max<u64>(2, static_cast<u64>(std::floor(y))); }
  u64 tail_min() const {
    if (tail_exponent <= 0) return 1;
    return std::max<u64>(1, static_cast<u64>(std::floor(std::pow(x, tail_exponent))));
  }

  std::string describe() const {
    std::ostringstream os;
    os.precision(10);
    os << "mode=" << to_string(mode) << " x=" << x << " epsilon=" << epsilon << " delta=" << delta
       << " kappa=" << kappa << " k=" << k << " y=" << y << " tail=" << tail_exponent << " d=" << d
       << " window=[" << lo() << "," << hi() << "]";
    return os.str();
  }
};

// --- M_F(x) ------------------------------------------------------------------

struct MFElement {
  u64 m = 0;
  /// Prime factors, ascending; the last one is P = p_max(m).
  std::vector<u64> primes;
  u64 P = 0;
  /// m / P
  u64 m1 = 0;

  int omega() const { return static_cast<int>(primes.size()); }
  std::string factorization() const {
    std::string s;
    for (std::size_t i = 0; i < primes.size(); ++i) s += (i ? "*" : "") + std::to_string(primes[i]);
    return s;
  }
  friend bool operator==(const MFElement& a, const MFElement& b) { return a.m == b.m && a.primes == b.primes; }
};

struct MFResult {
  std::vector<MFElement> elements;
  std::vector<std::string> warnings;
  ParamMode mode = ParamMode::paper;
};

namespace detail {

inline u64 sat_mul(u64 a, u64 b) {
  u128 r = static_cast<u128>(a) * b;
  return r > std::numeric_limits<u64>::max() ? std::numeric_limits<u64>::max() : static_cast<u64>(r);
}

inline std::vector<std::string> diagnose_empty_MF(const ChebotarevSieve& sieve, const DiversityParams& params) {
  std::vector<std::string> why;
  const u64 lo = params.lo(), hi = params.hi(), ymin = params.y_min();
  std::ostringstream os;
  os << "M_F(x) is empty (" << params.describe() << ")";
  why.push_back(os.str());
  u64 smallest = 1;
  for (int i = 0; i < params.omega(); ++i) smallest = sat_mul(smallest, ymin);
  if (smallest > hi)
    why.push_back("p_min >= y forces m >= y^(k+1) = " + (smallest == std::numeric_limits<u64>::max() ? std::string("overflow") : std::to_string(smallest)) +
                  " > window upper bound " + std::to_string(hi));
  if (params.tail_min() > hi) why.push_back("tail bound x^tail exceeds the window upper bound");
  if (params.omega() >= 2 && params.tail_min() > 0) {
    double m1_cap = static_cast<double>(hi) / static_cast<double>(std::max<u64>(params.tail_min(), 1));
    if (m1_cap < static_cast<double>(smallest) / static_cast<double>(std::max<u64>(ymin, 1)))
      why.push_back("no room for k primes >= y below x/(kappa * x^tail)");
  }
  if (sieve.primes_in_PF.empty() || sieve.primes_in_PF.back() < ymin) why.push_back("P_F has no primes >= y below the sieve limit");
  if (lo > hi) why.push_back("window is empty");
  return why;
}

}  // namespace detail

/// All squarefree m composed of primes of P_F with lo <= m <= hi,
/// p_max(m) >= x^tail, p_min(m) >= y and omega(m) = k + 1; sorted by m.
inline MFResult enumerate_MF(const ChebotarevSieve& sieve, const DiversityParams& params, unsigned workers = 1) {
  params.validate();
  const u64 lo = params.lo(), hi = params.hi(), ymin = params.y_min(), tmin = params.tail_min();
  // the largest admissible P is hi / m1 with m1 >= ymin^k
  u64 m1_floor = 1;
  for (int i = 0; i < params.k; ++i) m1_floor = detail::sat_mul(m1_floor, ymin);
  if (sieve.limit < hi / m1_floor)
    throw PreconditionError("enumerate_MF: sieve limit " + std::to_string(sieve.limit) + " is below the window bound " +
                            std::to_string(hi));
  MFResult res;
  res.mode = params.mode;
  const auto& all = sieve.primes_in_PF;
  auto first = std::lower_bound(all.begin(), all.end(), ymin);
  auto last = std::upper_bound(first, all.end(), hi);
  const std::vector<u64> Q(first, last);
  const int k = params.k;

  // attach every admissible large prime P to a fixed m1 (largest prime q_last)
  auto attach = [&](u64 m1, u64 q_last, const std::vector<u64>& chosen, std::vector<MFElement>& out) {
    u64 pmin = std::max({q_last + 1, tmin, ymin, (lo + m1 - 1) / m1});
    u64 pmax = hi / m1;
    if (pmin > pmax) return;
    auto it = std::lower_bound(Q.begin(), Q.end(), pmin);
    for (; it != Q.end() && *it <= pmax; ++it) {
      MFElement e;
      e.primes = chosen;
      e.primes.push_back(*it);
      e.P = *it;
      e.m1 = m1;
      e.m = m1 * *it;
      out.push_back(std::move(e));
    }
  };

  std::vector<MFElement> found;
  if (k == 0) {
    attach(1, 0, {}, found);
  } else {
    found = sharded_map<MFElement>(Q.size(), workers, [&](std::size_t b, std::size_t e) {
      std::vector<MFElement> out;
      std::vector<u64> chosen;
      // depth-first over increasing k-subsets; the first prime is taken from [b, e)
      auto dfs = [&](auto&& self, std::size_t start, std::size_t end, u64 m1) -> void {
        const int depth = static_cast<int>(chosen.size());
        if (depth == k) {
          attach(m1, chosen.back(), chosen, out);
          return;
        }
        const int remaining = k - depth;  // primes still to pick for m1, then P
        for (std::size_t i = start; i < end; ++i) {
          const u64 q = Q[i];
          u64 least = m1;
          for (int r = 0; r <= remaining; ++r) least = detail::sat_mul(least, q);
          if (least > hi) break;
          chosen.push_back(q);
          self(self, i + 1, Q.size(), detail::sat_mul(m1, q));
          chosen.pop_back();
        }
      };
      dfs(dfs, b, e, 1);
      return out;
    });
  }
  std::sort(found.begin(), found.end(), [](const MFElement& a, const MFElement& b) { return a.m < b.m; });
  res.elements = std::move(found);
  if (res.elements.empty()) res.warnings = detail::diagnose_empty_MF(sieve, params);
  return res;
}

/// Independent membership re-check for m in M_F(x): trial-division
/// factorization, P_F membership recomputed from F. Returns an empty string
/// when m is a member, else the first failed condition.
inline std::string check_MF_membership(u64 m, const IntPoly& F, const Integer& disc, const DiversityParams& params) {
  if (m < params.lo() || m > params.hi()) return "outside window";
  std::vector<u64> ps;
  u64 v = m;
  for (u64 p = 2; p * p <= v; ++p) {
    if (v % p) continue;
    v /= p;
    if (v % p == 0) return "not squarefree";
    ps.push_back(p);
  }
  if (v > 1) ps.push_back(v);
  if (static_cast<int>(ps.size()) != params.omega()) return "omega(m) != k+1";
  if (ps.front() < params.y_min()) return "p_min(m) < y";
  if (ps.back() < params.tail_min()) return "p_max(m) < x^tail";
  for (u64 p : ps) {
    if (mod_u64(disc, p) == 0) return "prime " + std::to_string(p) + " divides disc(F)";
    if (roots_mod_p(F, p).empty()) return "F has no root mod " + std::to_string(p);
  }
  return "";
}

struct CardinalityRow {
  double x = 0;
  u64 lo = 0, hi = 0;
  std::size_t count = 0;
  /// log|M_F(x)| / log x (0 when empty)
  double fitted_exponent = 0;
  /// log(x (log x)^(-1 + epsilon delta)) / log x
  double model_exponent = 0;
};

/// |M_F(x)| for each x with the template's k, y, tail (window recomputed per x
/// unless the template fixes it).
inline std::vector<CardinalityRow> report_MF_cardinality(const IntPoly& F, const std::vector<double>& xs,
                                                         const DiversityParams& tmpl, unsigned workers = 1) {
  std::vector<CardinalityRow> rows;
  if (xs.empty()) return rows;
  u64 need = 2;
  std::vector<DiversityParams> per_x;
  for (double x : xs) {
    DiversityParams p = tmpl;
    p.x = x;
    p.kappa = DiversityParams::paper_kappa(x);
    if (p.mode == ParamMode::paper) {
      p.k = DiversityParams::paper_k(x, p.epsilon, p.delta);
      p.y = DiversityParams::paper_y(x, p.epsilon);
    }
    p.validate();
    need = std::max(need, p.hi());
    per_x.push_back(p);
  }
  ChebotarevSieve sieve = build_PF(F, need, workers);
  for (const auto& p : per_x) {
    CardinalityRow r;
    r.x = p.x;
    r.lo = p.lo();
    r.hi = p.hi();
    r.count = enumerate_MF(sieve, p, workers).elements.size();
    double lx = std::log(p.x);
    r.fitted_exponent = r.count ? std::log(static_cast<double>(r.count)) / lx : 0.0;
    r.model_exponent = 1.0 + (-1.0 + p.epsilon * p.delta) * std::log(lx) / lx;
    rows.push_back(r);
  }
  return rows;
}

inline void write_MF_csv(std::ostream& os, const std::vector<MFElement>& elements) {
  os << "m,factorization,P,m1\n";
  for (const auto& e : elements) os << e.m << ',' << e.factorization() << ',' << e.P << ',' << e.m1 << '\n';
}

}  // namespace divlab
