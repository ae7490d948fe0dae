#pragma once

// Subcommand bodies for the divlab CLI. Each returns a process exit code:
// 0 success, 1 configuration error, 2 mathematical degeneracy, 3 invariant
// violation.

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <memory>
#include <ostream>
#include <string>

#include "divlab/config.hpp"
#include "divlab/dz.hpp"
#include "divlab/fields.hpp"
#include "divlab/sieve.hpp"
#include "divlab/verify.hpp"

namespace divlab {

enum ExitCode { kExitOk = 0, kExitConfig = 1, kExitDegenerate = 2, kExitViolation = 3 };

namespace detail {

inline int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const PreconditionError& e) {
    err << "invalid parameters: " << e.what() << '\n';
    return kExitConfig;
  } catch (const LemmaViolation& e) {
    err << "lemma violation: " << e.what() << '\n';
    return kExitViolation;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << '\n';
    return kExitViolation;
  } catch (const DomainError& e) {
    err << "degenerate input: " << e.what() << '\n';
    return kExitDegenerate;
  }
}

/// Opens out/name for writing, or returns nullptr when no output dir is set.
inline std::unique_ptr<std::ofstream> open_output(const RunConfig& cfg, const std::string& name) {
  if (cfg.out.empty()) return nullptr;
  std::filesystem::create_directories(cfg.out);
  auto f = std::make_unique<std::ofstream>(std::filesystem::path(cfg.out) / name, std::ios::binary);
  if (!*f) throw ConfigError("cannot write " + (std::filesystem::path(cfg.out) / name).string());
  return f;
}

struct Setup {
  CurveCover cover;
  IntPoly F;
  int d = 1;
  ChebotarevSieve sieve;
  double delta = 1;
};

inline Setup prepare(const RunConfig& cfg) {
  cfg.validate();
  CurveCover cover = CurveCover::parse(cfg.cover);
  Setup s{cover, cover.critical(), cfg.d.value_or(cover.critical().degree()), {}, 1};
  s.sieve = build_PF(s.F, cfg.sieve_limit(), cfg.workers);
  s.delta = cfg.delta.value_or(s.sieve.delta_hat());
  if (!(s.delta > 0)) throw DomainError("P_F is empty below the sieve limit; pass --delta explicitly");
  return s;
}

inline DiversityParams make_params(const RunConfig& cfg, int d, double delta) {
  if (cfg.mode == ParamMode::paper) return DiversityParams::paper(cfg.x, d, delta, cfg.epsilon);
  const double eps = cfg.epsilon.value_or(DiversityParams::paper_epsilon(d));
  auto p = DiversityParams::override_mode(cfg.x, d, delta, cfg.k.value_or(DiversityParams::paper_k(cfg.x, eps, delta)),
                                          cfg.y.value_or(DiversityParams::paper_y(cfg.x, eps)), cfg.tail.value_or(0.9),
                                          cfg.window_lo, cfg.window_hi);
  p.epsilon = eps;
  return p;
}

inline const char* verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

}  // namespace detail

inline int cmd_analyze(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    auto s = detail::prepare(cfg);
    out << "cover: " << s.cover.to_string() << '\n'
        << "nu: " << s.cover.nu() << '\n'
        << "lc_u: " << to_string(s.cover.leading_u()) << '\n'
        << "disc_u: " << to_string(s.cover.disc_u()) << '\n'
        << "F: " << to_string(s.F) << '\n'
        << "d: " << s.F.degree() << '\n'
        << "disc_F: " << s.sieve.disc.get_str() << '\n'
        << "sieve_limit: " << s.sieve.limit << '\n'
        << "pi_limit: " << s.sieve.prime_count << '\n'
        << "P_F_count: " << s.sieve.primes_in_PF.size() << '\n'
        << std::setprecision(10) << "delta_hat: " << s.sieve.delta_hat() << '\n';
    if (s.sieve.prime_count >= 100) {
      auto r = check_density_floor(s.sieve, s.F.degree());
      out << "density_floor: " << detail::verdict(r.pass) << " (delta_hat - (1/d - " << r.slack << ") = " << r.margin
          << ")\n";
    } else {
      out << "density_floor: skipped (fewer than 100 primes below the limit)\n";
    }
    if (auto f = detail::open_output(cfg, "primes_PF.csv")) {
      *f << "p\n";
      for (u64 p : s.sieve.primes_in_PF) *f << p << '\n';
    }
    return kExitOk;
  });
}

inline int cmd_sieve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    auto s = detail::prepare(cfg);
    auto prm = detail::make_params(cfg, s.d, s.delta);
    auto mf = enumerate_MF(s.sieve, prm, cfg.workers);
    out << std::setprecision(10) << "F: " << to_string(s.F) << '\n'
        << "delta_hat: " << s.sieve.delta_hat() << '\n'
        << "params: " << prm.describe() << '\n'
        << "y_min: " << prm.y_min() << '\n'
        << "tail_min: " << prm.tail_min() << '\n'
        << "MF_count: " << mf.elements.size() << '\n';
    for (const auto& w : mf.warnings) err << "warning: " << w << '\n';
    if (auto f = detail::open_output(cfg, "mf.csv")) write_MF_csv(*f, mf.elements);
    return kExitOk;
  });
}

inline int cmd_witness(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    auto s = detail::prepare(cfg);
    auto prm = detail::make_params(cfg, s.d, s.delta);
    auto mf = enumerate_MF(s.sieve, prm, cfg.workers);
    for (const auto& w : mf.warnings) err << "warning: " << w << '\n';
    WitnessOptions wopt{cfg.randomize_witness, cfg.seed};
    auto ws = build_witnesses(s.F, s.sieve.disc, mf.elements, prm.k, cfg.workers, wopt);
    auto check = recheck_witnesses(s.F, ws);
    auto st = classify_greedy(ws, s.d);
    out << std::setprecision(10) << "params: " << prm.describe() << '\n'
        << "MF_count: " << mf.elements.size() << '\n'
        << "witnesses_rechecked: " << check.checked << " failures=" << check.failures.size() << '\n'
        << "greedy: " << st.greedy << '\n'
        << "generous: " << st.generous << '\n'
        << "distinct_n_m: " << st.distinct_n << '\n'
        << "MF_over_12d: " << (st.mf_size / (12.0 * s.d)) << '\n'
        << "ratio_distinct_n_m_to_MF_over_12d: " << st.ratio << '\n'
        << "half_greedy (asymptotic, report only): " << (st.half_greedy() ? "yes" : "no") << '\n';
    std::size_t within_x = 0;
    for (const auto& w : ws) within_x += static_cast<double>(w.n_m) <= prm.x;
    out << "n_m_at_most_x: " << within_x << "/" << ws.size() << '\n';

    // omega buckets over the distinct witnesses
    std::map<std::string, std::size_t> buckets;
    std::vector<u64> ns;
    for (const auto& w : ws) ns.push_back(w.n_m);
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
    for (u64 n : ns) ++buckets[to_string(classify_omega(s.F, n, prm, kDefaultTrialBound, cfg.budget).cls)];
    out << "omega_buckets:";
    for (const char* b : {"reasonable", "large", "enormous", "indeterminate"}) out << ' ' << b << '=' << buckets[b];
    out << '\n';

    const u64 xs = static_cast<u64>(std::floor(prm.x));
    auto heavy = heavy_n_scan(s.F, mf.elements, xs, s.d, std::nullopt, cfg.workers);
    out << "heavy_n (more than " << heavy.threshold << " divisors): " << heavy.heavy.size() << " density=" << heavy.density
        << " bound_density=" << heavy.bound_density << '\n';
    auto cl = find_cliques(mf.elements);
    std::size_t sp = 0, ratio_bad = 0, proper_bad = 0;
    for (const auto& c : cl.cliques) {
      sp += c.type == CliqueType::s_prime;
      ratio_bad += !c.ratio_ok;
      proper_bad += !c.proper_ok;
    }
    out << "cliques: " << cl.cliques.size() << (cl.truncated ? " (truncated)" : "") << " S'=" << sp
        << " S''=" << cl.cliques.size() - sp << " ratio_flagged=" << ratio_bad << " proper_flagged=" << proper_bad
        << '\n';
    if (auto f = detail::open_output(cfg, "witnesses.csv")) write_witness_csv(*f, ws);
    if (auto f = detail::open_output(cfg, "cliques.csv")) write_clique_csv(*f, cl.cliques);
    for (const auto& why : check.failures) err << "witness re-check failed: " << why << '\n';
    return check.failures.empty() ? kExitOk : kExitViolation;
  });
}

inline int cmd_diversity(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    cfg.validate();
    CurveCover cover = CurveCover::parse(cfg.cover);
    CensusOptions opt;
    opt.workers = cfg.workers;
    opt.budget = cfg.budget;
    opt.delta = cfg.delta;
    opt.sieve_limit = cfg.sieve_limit();
    opt.mode = to_string(cfg.mode);
    auto c = run_census(cover, cfg.N, opt);
    write_census_summary(out, c);
    out << "unknown_count=" << c.unknown_count << '\n'
        << "skipped=" << c.skipped.size() << '\n'
        << "delta=" << c.delta << '\n'
        << "epsilon=" << c.eta.epsilon << '\n'
        << "reducible_over_sqrtN=" << c.reducible_count / std::sqrt(static_cast<double>(c.N)) << '\n'
        << "comparison: distinct_lower_bound=" << c.distinct_lower_bound << " N_over_logN=" << c.N_over_logN
        << " bound_value=" << c.bound_value << '\n';
    for (const auto& sk : c.skipped) err << "skipped n=" << sk.n << ": " << sk.reason << '\n';
    if (auto f = detail::open_output(cfg, "census.csv")) write_census_csv(*f, c);
    if (c.skipped.size() == c.N) {
      err << "every fiber was degenerate\n";
      return kExitDegenerate;
    }
    return kExitOk;
  });
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    auto s = detail::prepare(cfg);
    bool hard_fail = false;
    out << "F: " << to_string(s.F) << '\n';

    auto rho_cover = run_rho_suite(std::min<std::size_t>(cfg.trials, 200), cfg.seed, 10000, s.F);
    auto rho_rand = run_rho_suite(std::min<std::size_t>(cfg.trials, 200), cfg.seed);
    const bool rho_ok = rho_cover.mismatches.empty() && rho_rand.mismatches.empty();
    hard_fail |= !rho_ok;
    out << "rho_F: " << detail::verdict(rho_ok) << " (" << rho_cover.trials + rho_rand.trials << " checked, "
        << rho_cover.mismatches.size() + rho_rand.mismatches.size() << " mismatches)\n";
    for (const auto& m : rho_cover.mismatches) err << "rho mismatch: " << m << '\n';
    for (const auto& m : rho_rand.mismatches) err << "rho mismatch: " << m << '\n';

    auto lem_rand = run_lemma_suite(cfg.trials, cfg.seed);
    auto lem_cover = run_lemma_suite(std::min<std::size_t>(cfg.trials, 200), cfg.seed, s.F, cfg.inject_fault);
    const std::size_t lem_viol = lem_rand.violations.size() + lem_cover.violations.size();
    hard_fail |= lem_viol > 0;
    out << "exact_divisor_shift: " << detail::verdict(lem_viol == 0) << " (" << lem_rand.valid + lem_cover.valid
        << " valid, " << lem_rand.rejected + lem_cover.rejected << " rejected by preconditions, " << lem_viol
        << " violations, max shift " << std::max(lem_rand.max_shift, lem_cover.max_shift) << ")\n";
    for (const auto& v : lem_rand.violations) err << "lemma: " << v << '\n';
    for (const auto& v : lem_cover.violations) err << "lemma: " << v << '\n';

    // witnesses over M_F(x); paper mode is empty at desk scale, so fall back to k=1, y=3, tail=1/2
    DiversityParams prm = detail::make_params(cfg, s.d, s.delta);
    auto mf = enumerate_MF(s.sieve, prm, cfg.workers);
    if (mf.elements.empty() && cfg.mode == ParamMode::paper) {
      prm = DiversityParams::override_mode(cfg.x, s.d, s.delta, 1, 3, 0.5);
      mf = enumerate_MF(s.sieve, prm, cfg.workers);
    }
    auto ws = build_witnesses(s.F, s.sieve.disc, mf.elements, prm.k, cfg.workers);
    auto wc = recheck_witnesses(s.F, ws);
    hard_fail |= !wc.failures.empty();
    out << "witness_recheck: " << detail::verdict(wc.failures.empty()) << " (" << wc.checked << " witnesses, "
        << prm.describe() << ")\n";
    for (const auto& f : wc.failures) err << "witness: " << f << '\n';

    const u64 plim = std::min<u64>(s.sieve.limit, 10000);
    std::size_t c_checked = 0, c_viol = 0;
    for (u64 p : s.sieve.primes_in_PF) {
      if (p > plim) break;
      auto r = verify_property_C(s.F, s.sieve.disc, p, 3);
      c_checked += r.checked;
      c_viol += r.violations.size();
      for (u64 n : r.violations) err << "property C: p=" << p << " n=" << n << '\n';
    }
    hard_fail |= c_viol > 0;
    out << "property_C: " << detail::verdict(c_viol == 0) << " (" << c_checked << " cases, p <= " << plim << ")\n";

    auto D = verify_property_D(s.sieve, plim, cfg.workers);
    const bool d_ok = D.failures.size() <= cfg.cap;
    out << "property_D: " << detail::verdict(d_ok) << " (" << D.checked << " primes, " << D.failures.size()
        << " exceptions, threshold " << D.threshold << ")\n";

    const u64 nmax = std::max<u64>(std::min<u64>(cfg.N, 100000), 1);
    auto E = verify_property_E(s.F, s.F.degree(), 1, nmax, cfg.cap, cfg.workers, kDefaultTrialBound, cfg.budget);
    out << "property_E: " << detail::verdict(E.pass()) << " (n <= " << nmax << ", " << E.exceptions.size()
        << " exceptions, threshold " << E.threshold << ", " << E.zero_values.size() << " zero values, "
        << E.indeterminate.size() << " indeterminate)\n";
    for (const auto& e : E.exceptions) err << "property E exception: n=" << e.n << " count=" << e.count << '\n';

    out << "overall: " << (hard_fail ? "FAIL" : "PASS") << '\n';
    return hard_fail ? kExitViolation : kExitOk;
  });
}

}  // namespace divlab
