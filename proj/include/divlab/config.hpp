#pragma once

// Run configuration: a flat `key = value` file, overridable by flags.

#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "divlab/errors.hpp"
#include "divlab/factor_int.hpp"
#include "divlab/integer.hpp"
#include "divlab/sieve.hpp"

namespace divlab {

struct RunConfig {
  std::string cover;
  u64 N = 1000;
  double x = 10000;
  ParamMode mode = ParamMode::paper;
  std::optional<double> epsilon;
  std::optional<double> delta;
  std::optional<int> d;
  std::optional<int> k;
  std::optional<double> y;
  std::optional<double> tail;
  std::optional<u64> window_lo, window_hi;
  /// sieve limit; defaults to max(x, 10^5)
  std::optional<u64> limit;
  u64 budget = kDefaultRhoBudget;
  unsigned workers = 1;
  u64 seed = 0;
  std::string out;
  std::size_t trials = 1000;
  std::size_t cap = 20;
  bool inject_fault = false;
  bool randomize_witness = false;

  u64 sieve_limit() const { return limit ? *limit : std::max<u64>(static_cast<u64>(std::ceil(x)), 100000); }

  void validate() const {
    if (cover.empty()) throw ConfigError("no cover given (use --cover or `cover = ...`)");
    if (N == 0) throw ConfigError("N must be positive");
    if (!(x > 0)) throw ConfigError("x must be positive");
    if (!(x > std::exp(1.0))) throw ConfigError("x must exceed e");
    if (epsilon && !(*epsilon > 0)) throw ConfigError("epsilon must be positive");
    if (delta && !(*delta > 0 && *delta <= 1)) throw ConfigError("delta must lie in (0, 1]");
    if (d && *d < 1) throw ConfigError("d must be positive");
    if (k && *k < 0) throw ConfigError("k must be non-negative");
    if (y && !(*y >= 1)) throw ConfigError("y must be >= 1");
    if (tail && !(*tail >= 0 && *tail <= 1)) throw ConfigError("tail must lie in [0, 1]");
    if (budget == 0) throw ConfigError("budget must be positive");
    if (workers == 0) throw ConfigError("workers must be positive");
    if (window_lo.has_value() != window_hi.has_value()) throw ConfigError("window-lo and window-hi go together");
    if (mode == ParamMode::paper && (k || y || tail || window_lo))
      throw ConfigError("k, y, tail and window overrides are only legal in override mode");
    if (limit && static_cast<double>(*limit) < x) throw ConfigError("sieve limit must be >= x");
  }
};

namespace detail {

inline std::string trim_ws(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <class T>
T parse_number(const std::string& key, const std::string& v) {
  std::istringstream is(v);
  if constexpr (std::is_integral_v<T>) {
    // accept 1e6-style integers
    double dv;
    if (!(is >> dv) || !(is >> std::ws).eof() || dv < 0 || dv != std::floor(dv))
      throw ConfigError("bad integer for " + key + ": '" + v + "'");
    return static_cast<T>(dv);
  } else {
    T out;
    if (!(is >> out) || !(is >> std::ws).eof()) throw ConfigError("bad number for " + key + ": '" + v + "'");
    return out;
  }
}

inline bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError("bad boolean for " + key + ": '" + v + "'");
}

}  // namespace detail

inline ParamMode parse_mode(const std::string& v) {
  if (v == "paper") return ParamMode::paper;
  if (v == "override") return ParamMode::override;
  throw ConfigError("mode must be paper or override, got '" + v + "'");
}

/// Applies one key; unknown keys are errors.
inline void apply_config_key(RunConfig& c, const std::string& key, const std::string& v) {
  using detail::parse_number;
  if (key == "cover") c.cover = v;
  else if (key == "N") c.N = parse_number<u64>(key, v);
  else if (key == "x") c.x = parse_number<double>(key, v);
  else if (key == "mode") c.mode = parse_mode(v);
  else if (key == "epsilon") c.epsilon = parse_number<double>(key, v);
  else if (key == "delta") c.delta = parse_number<double>(key, v);
  else if (key == "d") c.d = parse_number<int>(key, v);
  else if (key == "k") c.k = parse_number<int>(key, v);
  else if (key == "y") c.y = parse_number<double>(key, v);
  else if (key == "tail") c.tail = parse_number<double>(key, v);
  else if (key == "window_lo") c.window_lo = parse_number<u64>(key, v);
  else if (key == "window_hi") c.window_hi = parse_number<u64>(key, v);
  else if (key == "limit") c.limit = parse_number<u64>(key, v);
  else if (key == "budget") c.budget = parse_number<u64>(key, v);
  else if (key == "workers") c.workers = parse_number<unsigned>(key, v);
  else if (key == "seed") c.seed = parse_number<u64>(key, v);
  else if (key == "out") c.out = v;
  else if (key == "trials") c.trials = parse_number<std::size_t>(key, v);
  else if (key == "cap") c.cap = parse_number<std::size_t>(key, v);
  else if (key == "inject_fault") c.inject_fault = detail::parse_bool(key, v);
  else if (key == "randomize_witness") c.randomize_witness = detail::parse_bool(key, v);
  else throw ConfigError("unknown config key '" + key + "'");
}

/// `key = value` lines; '#' starts a comment.
inline std::map<std::string, std::string> parse_config_text(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    line = detail::trim_ws(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    std::string key = detail::trim_ws(line.substr(0, eq));
    std::string val = detail::trim_ws(line.substr(eq + 1));
    if (key.empty()) throw ConfigError("line " + std::to_string(lineno) + ": empty key");
    kv[key] = val;
  }
  return kv;
}

inline RunConfig load_config_file(const std::string& path, RunConfig base = {}) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  for (const auto& [k, v] : parse_config_text(ss.str())) apply_config_key(base, k, v);
  return base;
}

}  // namespace divlab
