#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "divlab/commands.hpp"
#include "divlab/parallel.hpp"

using namespace divlab;

namespace {

// Raw flag values; applied on top of the config file only when given.
struct Flags {
  std::string config, cover, mode, out;
  std::string N, x, epsilon, delta, d, k, y, tail, limit, budget, workers, seed, trials, cap, window_lo, window_hi;
  bool inject_fault = false;
  bool randomize_witness = false;
};

void add_flags(CLI::App* sub, Flags& f) {
  sub->add_option("--config", f.config, "key = value config file (flags win)");
  sub->add_option("--cover", f.cover, "cover g(t, u), e.g. \"u^2 - t\"");
  sub->add_option("--N", f.N, "census size");
  sub->add_option("--x", f.x, "scale x for M_F(x)");
  sub->add_option("--mode", f.mode, "paper | override");
  sub->add_option("--epsilon", f.epsilon, "epsilon (default 1/(1000 log 2d))");
  sub->add_option("--delta", f.delta, "Chebotarev density (default: estimated)");
  sub->add_option("--d", f.d, "degree d used in thresholds (default deg F)");
  sub->add_option("--k", f.k, "override: omega(m) = k + 1");
  sub->add_option("--y", f.y, "override: smallest prime y");
  sub->add_option("--tail", f.tail, "override: p_max(m) >= x^tail");
  sub->add_option("--window-lo", f.window_lo, "override: window lower bound");
  sub->add_option("--window-hi", f.window_hi, "override: window upper bound");
  sub->add_option("--limit", f.limit, "sieve limit (>= x)");
  sub->add_option("--budget", f.budget, "Pollard rho iteration budget");
  sub->add_option("--workers", f.workers, "worker threads (env DIVLAB_WORKERS)");
  sub->add_option("--seed", f.seed, "seed for randomized suites");
  sub->add_option("--trials", f.trials, "trials per randomized suite");
  sub->add_option("--cap", f.cap, "allowed small-n exceptions for properties D/E");
  sub->add_option("--out", f.out, "output directory for CSV files");
  sub->add_flag("--inject-fault", f.inject_fault, "verify: feed instances that break the lemma hypotheses");
  sub->add_flag("--randomize-witness", f.randomize_witness, "witness: random CRT root instead of the smallest");
}

RunConfig resolve(CLI::App* sub, const Flags& f) {
  RunConfig cfg;
  cfg.workers = workers_from_env();
  if (!f.config.empty()) cfg = load_config_file(f.config, cfg);
  auto given = [&](const char* name) { return sub->count(name) > 0; };
  const std::pair<const char*, const std::string*> keyed[] = {
      {"cover", &f.cover}, {"N", &f.N},       {"x", &f.x},           {"mode", &f.mode},
      {"epsilon", &f.epsilon}, {"delta", &f.delta}, {"d", &f.d},     {"k", &f.k},
      {"y", &f.y},         {"tail", &f.tail}, {"limit", &f.limit},   {"budget", &f.budget},
      {"workers", &f.workers}, {"seed", &f.seed}, {"trials", &f.trials}, {"cap", &f.cap},
      {"out", &f.out},     {"window_lo", &f.window_lo}, {"window_hi", &f.window_hi}};
  for (const auto& [key, val] : keyed) {
    std::string flag = std::string("--") + key;
    for (auto& ch : flag)
      if (ch == '_') ch = '-';
    if (given(flag.c_str())) apply_config_key(cfg, key, *val);
  }
  if (f.inject_fault) cfg.inject_fault = true;
  if (f.randomize_witness) cfg.randomize_witness = true;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"divlab: ramification experiments on families of number fields"};
  app.require_subcommand(1);
  Flags flags;
  using Cmd = int (*)(const RunConfig&, std::ostream&, std::ostream&);
  const std::pair<const char*, const char*> names[] = {
      {"analyze", "critical polynomial F, disc, P_F and its density"},
      {"sieve", "enumerate M_F(x)"},
      {"witness", "witnesses n_m, greedy/generous stats, heavy n, cliques"},
      {"diversity", "fiber census against N/(log N)^(1-eta)"},
      {"verify", "randomized and exhaustive property suites"}};
  const Cmd bodies[] = {cmd_analyze, cmd_sieve, cmd_witness, cmd_diversity, cmd_verify};
  std::vector<CLI::App*> subs;
  for (const auto& [name, desc] : names) {
    subs.push_back(app.add_subcommand(name, desc));
    add_flags(subs.back(), flags);
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfig;
  }
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (!subs[i]->parsed()) continue;
    RunConfig cfg;
    try {
      cfg = resolve(subs[i], flags);
    } catch (const ConfigError& e) {
      std::cerr << "config error: " << e.what() << '\n';
      return kExitConfig;
    }
    return bodies[i](cfg, std::cout, std::cerr);
  }
  return kExitConfig;
}
