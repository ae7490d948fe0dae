#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace divlab {

/// Worker count from the DIVLAB_WORKERS environment variable, else 1.
inline unsigned workers_from_env() {
  if (const char* s = std::getenv("DIVLAB_WORKERS")) {
    try {
      long v = std::stol(s);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

/// Split [0, n) into `workers` contiguous shards, run fn(begin, end) on each,
/// and concatenate the returned vectors in shard order. The result does not
/// depend on the worker count as long as fn is a pure function of its range.
template <class T, class Fn>
std::vector<T> sharded_map(std::size_t n, unsigned workers, Fn fn) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (workers == 1) return fn(std::size_t{0}, n);
  std::vector<std::vector<T>> parts(workers);
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    std::size_t begin = n * w / workers, end = n * (w + 1) / workers;
    threads.emplace_back([&, w, begin, end] {
      try {
        parts[w] = fn(begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<T> out;
  for (auto& p : parts) out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  return out;
}

}  // namespace divlab
