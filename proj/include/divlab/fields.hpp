#pragma once

// Fibers g(n, u) of a cover, their irreducibility, the odd-valuation
// fingerprint of disc g(n, u), and the diversity census over n = 1..N.

#include <algorithm>
#include <cmath>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "divlab/algebra.hpp"
#include "divlab/factor_int.hpp"
#include "divlab/factorization.hpp"
#include "divlab/parallel.hpp"
#include "divlab/sieve.hpp"

namespace divlab {

/// g(n, u) with content removed. Throws DegenerateFiber when it vanishes or
/// lc_u(g)(n) = 0.
inline IntPoly fiber_poly(const CurveCover& cover, const Integer& n, bool allow_nonpositive = false) {
  if (!allow_nonpositive && n < 1) throw PreconditionError("fiber_poly: n must be >= 1");
  IntPoly f = specialize_t(cover.g(), n);
  if (f.zero()) throw DegenerateFiber("fiber polynomial vanishes at t = " + n.get_str());
  if (f.degree() < cover.nu())
    throw DegenerateFiber("degree drops at t = " + n.get_str() + " (lc_u vanishes)");
  return primitive_part(f);
}

enum class Tri { no, yes, unknown };

inline const char* to_string(Tri t) { return t == Tri::yes ? "true" : (t == Tri::no ? "false" : "unknown"); }

/// Irreducibility over Q of a fiber polynomial. Fast path: irreducible modulo
/// one of the first 10 primes not dividing lc * disc.
inline Tri is_irreducible_poly(const IntPoly& f) {
  if (f.degree() < 1) return Tri::no;
  if (f.degree() == 1) return Tri::yes;
  const Integer disc = poly_discriminant(f);
  if (disc == 0) return Tri::no;  // repeated factor
  const Integer bad = disc * f.lc();
  int tried = 0;
  for (u64 p = 2; tried < 10; ++p) {
    if (!is_prime_u64(p) || mod_u64(bad, p) == 0) continue;
    ++tried;
    if (irreducible_mod_p(f, p)) return Tri::yes;
  }
  try {
    return factor_over_Z(f).irreducible() ? Tri::yes : Tri::no;
  } catch (const std::exception&) {
    return Tri::unknown;
  }
}

inline Tri is_fiber_irreducible(const CurveCover& cover, const Integer& n) {
  return is_irreducible_poly(fiber_poly(cover, n));
}

/// Primes with odd exponent in disc(f). Equal for every defining polynomial of
/// the same field, since disc(f) = index^2 * disc(K).
struct FieldFingerprint {
  std::vector<Integer> odd_primes;
  /// false when disc(f) kept an unsplit cofactor
  bool complete = true;
  Integer cofactor = 1;

  /// Parity of v_p is known unless p may hide in the cofactor.
  bool knows(const Integer& p) const { return complete || !divisible(cofactor, p); }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < odd_primes.size(); ++i) s += (i ? ";" : "") + odd_primes[i].get_str();
    if (!complete) s += "?";
    return s;
  }

  friend bool operator==(const FieldFingerprint& a, const FieldFingerprint& b) {
    return a.odd_primes == b.odd_primes && a.complete == b.complete && a.cofactor == b.cofactor;
  }
};

/// Whether two fingerprints certainly belong to different fields.
inline bool provably_distinct(const FieldFingerprint& a, const FieldFingerprint& b) {
  if (a.complete && b.complete) return a.odd_primes != b.odd_primes;
  auto one_way = [](const FieldFingerprint& x, const FieldFingerprint& y) {
    for (const auto& p : x.odd_primes)
      if (!std::binary_search(y.odd_primes.begin(), y.odd_primes.end(), p) && y.knows(p)) return true;
    return false;
  };
  return one_way(a, b) || one_way(b, a);
}

inline FieldFingerprint fingerprint(const IntPoly& f, u64 trial_bound = kDefaultTrialBound,
                                    u64 budget = kDefaultRhoBudget) {
  const Integer disc = poly_discriminant(f);
  if (disc == 0) throw DomainError("fingerprint: fiber polynomial has zero discriminant");
  IntFactorization fac = factor_integer(disc, trial_bound, budget);
  FieldFingerprint fp;
  for (const auto& [p, e] : fac.factors)
    if (e & 1) fp.odd_primes.push_back(p);
  fp.cofactor = fac.cofactor;
  fp.complete = fac.complete();
  return fp;
}

struct EtaValues {
  double epsilon = 0;
  double eta = 0;
  /// 1e-6 / ((g + nu) log(g + nu)), when the genus is known
  std::optional<double> intro_constant;
};

/// epsilon = 1 / (1000 log 2d), eta = delta epsilon / 2.
inline EtaValues eta_exponent(int d, double delta, std::optional<int> genus = std::nullopt, int nu = 2) {
  if (d < 1) throw PreconditionError("eta_exponent: d must be >= 1");
  if (!(delta > 0 && delta <= 1)) throw PreconditionError("eta_exponent: delta must lie in (0, 1]");
  EtaValues v;
  v.epsilon = DiversityParams::paper_epsilon(d);
  v.eta = delta * v.epsilon / 2;
  if (genus) {
    const double s = *genus + nu;
    if (s > 1) v.intro_constant = 1e-6 / (s * std::log(s));
  }
  return v;
}

struct CensusRow {
  u64 n = 0;
  int fiber_degree = 0;
  Tri irreducible = Tri::unknown;
  FieldFingerprint fingerprint;
  bool new_field = false;
};

struct CensusSkip {
  u64 n = 0;
  std::string reason;
};

struct DiversityCensus {
  u64 N = 0;
  std::vector<CensusRow> per_n;
  std::vector<CensusSkip> skipped;
  std::size_t distinct_lower_bound = 0;
  std::size_t reducible_count = 0;
  std::size_t unknown_count = 0;
  double delta = 0;
  EtaValues eta;
  double N_over_logN = 0;
  /// N / (log N)^(1 - eta)
  double bound_value = 0;
  std::string mode = "paper";
};

struct CensusOptions {
  unsigned workers = 1;
  u64 trial_bound = kDefaultTrialBound;
  u64 budget = kDefaultRhoBudget;
  /// Chebotarev density; estimated from P_F up to sieve_limit when absent.
  std::optional<double> delta;
  u64 sieve_limit = 100000;
  std::optional<int> genus;
  /// skip fingerprints (reducible counting only)
  bool fingerprints = true;
  std::string mode = "paper";
};

/// Census of the fibers n = 1..N. Per-n failures are recorded in `skipped`.
inline DiversityCensus run_census(const CurveCover& cover, u64 N, const CensusOptions& opt = {}) {
  if (N < 10) throw PreconditionError("run_census: N must be >= 10");
  DiversityCensus c;
  c.N = N;
  c.mode = opt.mode;
  const int d = cover.critical().degree();
  c.delta = opt.delta ? *opt.delta : build_PF(cover.critical(), std::max<u64>(opt.sieve_limit, 1000), opt.workers).delta_hat();
  c.eta = eta_exponent(d, c.delta, opt.genus, cover.nu());
  const double lN = std::log(static_cast<double>(N));
  c.N_over_logN = N / lN;
  c.bound_value = N / std::pow(lN, 1.0 - c.eta.eta);

  struct Item {
    CensusRow row;
    bool skip = false;
    std::string reason;
  };
  auto items = sharded_map<Item>(N, opt.workers, [&](std::size_t b, std::size_t e) {
    std::vector<Item> out;
    for (std::size_t i = b; i < e; ++i) {
      Item it;
      it.row.n = i + 1;
      try {
        IntPoly f = fiber_poly(cover, to_integer(static_cast<u64>(i + 1)));
        it.row.fiber_degree = f.degree();
        it.row.irreducible = is_irreducible_poly(f);
        if (it.row.irreducible == Tri::yes && opt.fingerprints)
          it.row.fingerprint = fingerprint(f, opt.trial_bound, opt.budget);
      } catch (const std::exception& ex) {
        it.skip = true;
        it.reason = ex.what();
      }
      out.push_back(std::move(it));
    }
    return out;
  });

  // deterministic merge in n order
  std::set<std::vector<Integer>> complete_reps;
  std::vector<FieldFingerprint> partial_reps;
  for (auto& it : items) {
    if (it.skip) {
      c.skipped.push_back({it.row.n, it.reason});
      continue;
    }
    CensusRow& r = it.row;
    if (r.irreducible == Tri::no) ++c.reducible_count;
    if (r.irreducible == Tri::unknown) ++c.unknown_count;
    if (r.irreducible == Tri::yes && opt.fingerprints) {
      const FieldFingerprint& fp = r.fingerprint;
      bool fresh = true;
      for (const auto& q : partial_reps)
        if (!provably_distinct(fp, q)) {
          fresh = false;
          break;
        }
      if (fresh) {
        if (fp.complete) {
          fresh = !complete_reps.count(fp.odd_primes);
        } else {
          FieldFingerprint probe;
          for (const auto& primes : complete_reps) {
            probe.odd_primes = primes;
            if (!provably_distinct(fp, probe)) {
              fresh = false;
              break;
            }
          }
        }
      }
      if (fresh) {
        r.new_field = true;
        ++c.distinct_lower_bound;
        if (fp.complete)
          complete_reps.insert(fp.odd_primes);
        else
          partial_reps.push_back(fp);
      }
    }
    c.per_n.push_back(std::move(r));
  }
  return c;
}

inline void write_census_csv(std::ostream& os, const DiversityCensus& c) {
  os << "n,fiber_degree,irreducible,fingerprint,new_field\n";
  for (const auto& r : c.per_n)
    os << r.n << ',' << r.fiber_degree << ',' << to_string(r.irreducible) << ','
       << (r.irreducible == Tri::yes ? r.fingerprint.to_string() : std::string()) << ','
       << (r.new_field ? "true" : "false") << '\n';
}

inline void write_census_summary(std::ostream& os, const DiversityCensus& c) {
  os.precision(10);
  os << "N=" << c.N << '\n'
     << "distinct_lower_bound=" << c.distinct_lower_bound << '\n'
     << "reducible_count=" << c.reducible_count << '\n'
     << "eta=" << c.eta.eta << '\n'
     << "N_over_logN=" << c.N_over_logN << '\n'
     << "bound_value=" << c.bound_value << '\n'
     << "mode=" << c.mode << '\n';
}

}  // namespace divlab
