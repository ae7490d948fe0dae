#pragma once

// Polynomials over F_p (p a word-size prime), stored low-degree first.

#include <algorithm>
#include <tuple>
#include <utility>
#include <vector>

#include "divlab/integer.hpp"

namespace divlab::fp {

using Coeffs = std::vector<u64>;

inline void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int deg(const Coeffs& a) { return static_cast<int>(a.size()) - 1; }

inline Coeffs add(const Coeffs& a, const Coeffs& b, u64 p) {
  Coeffs r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = addmod(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0, p);
  trim(r);
  return r;
}

inline Coeffs sub(const Coeffs& a, const Coeffs& b, u64 p) {
  Coeffs r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = submod(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0, p);
  trim(r);
  return r;
}

inline Coeffs mul(const Coeffs& a, const Coeffs& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = addmod(r[i + j], mulmod(a[i], b[j], p), p);
  }
  trim(r);
  return r;
}

inline Coeffs scale(const Coeffs& a, u64 k, u64 p) {
  Coeffs r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mulmod(a[i], k, p);
  trim(r);
  return r;
}

inline Coeffs monic(const Coeffs& a, u64 p) {
  if (a.empty()) return a;
  return scale(a, invmod(a.back(), p), p);
}

/// Quotient and remainder of a by nonzero b.
inline std::pair<Coeffs, Coeffs> divmod(const Coeffs& a, const Coeffs& b, u64 p) {
  if (b.empty()) throw DomainError("division by zero polynomial mod p");
  if (a.size() < b.size()) return {{}, a};
  Coeffs r = a;
  Coeffs q(a.size() - b.size() + 1, 0);
  const u64 inv = invmod(b.back(), p);
  const int db = deg(b);
  for (int k = deg(r); k >= db; --k) {
    u64 t = mulmod(r[k], inv, p);
    if (t == 0) continue;
    q[k - db] = t;
    for (int j = 0; j <= db; ++j) r[k - db + j] = submod(r[k - db + j], mulmod(t, b[j], p), p);
  }
  trim(q);
  trim(r);
  return {q, r};
}

inline Coeffs rem(const Coeffs& a, const Coeffs& b, u64 p) { return divmod(a, b, p).second; }

inline Coeffs mulrem(const Coeffs& a, const Coeffs& b, const Coeffs& m, u64 p) { return rem(mul(a, b, p), m, p); }

/// Monic gcd (empty when both are zero).
inline Coeffs gcd(Coeffs a, Coeffs b, u64 p) {
  while (!b.empty()) {
    Coeffs r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

/// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic.
inline std::tuple<Coeffs, Coeffs, Coeffs> xgcd(const Coeffs& a, const Coeffs& b, u64 p) {
  Coeffs r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, p);
    r0 = std::move(r1);
    r1 = std::move(r);
    Coeffs s2 = sub(s0, mul(q, s1, p), p);
    Coeffs t2 = sub(t0, mul(q, t1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) return {r0, s0, t0};
  u64 inv = invmod(r0.back(), p);
  return {scale(r0, inv, p), scale(s0, inv, p), scale(t0, inv, p)};
}

/// base^e mod m.
inline Coeffs powrem(Coeffs base, u64 e, const Coeffs& m, u64 p) {
  Coeffs r{1};
  r = rem(r, m, p);
  base = rem(base, m, p);
  while (e) {
    if (e & 1) r = mulrem(r, base, m, p);
    e >>= 1;
    if (e) base = mulrem(base, base, m, p);
  }
  return r;
}

inline Coeffs derivative(const Coeffs& a, u64 p) {
  if (a.size() <= 1) return {};
  Coeffs r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = mulmod(a[i], i % p, p);
  trim(r);
  return r;
}

inline u64 eval(const Coeffs& a, u64 x, u64 p) {
  u64 acc = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = addmod(mulmod(acc, x, p), *it, p);
  return acc;
}

/// Deterministic 64-bit generator (splitmix64) for the randomized splitting steps.
class SplitMix {
 public:
  explicit SplitMix(u64 seed) : s_(seed) {}
  u64 next() {
    u64 z = (s_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

 private:
  u64 s_;
};

/// Squarefree factorization of a monic polynomial over F_p:
/// pairs (monic squarefree factor, multiplicity).
inline std::vector<std::pair<Coeffs, int>> squarefree_factor(const Coeffs& f, u64 p) {
  std::vector<std::pair<Coeffs, int>> out;
  if (deg(f) < 1) return out;
  Coeffs c = gcd(f, derivative(f, p), p);
  Coeffs w = divmod(f, c, p).first;
  int i = 1;
  while (deg(w) > 0) {
    Coeffs y = gcd(w, c, p);
    Coeffs fac = divmod(w, y, p).first;
    if (deg(fac) > 0) out.emplace_back(monic(fac, p), i);
    w = std::move(y);
    c = divmod(c, w, p).first;
    ++i;
  }
  if (deg(c) > 0) {
    // c is a p-th power: c(x) = r(x)^p with r's coefficients at indices k*p
    Coeffs root;
    for (std::size_t k = 0; k * p < c.size(); ++k) root.push_back(c[k * p]);
    trim(root);
    for (auto& [g, e] : squarefree_factor(root, p)) out.emplace_back(std::move(g), e * static_cast<int>(p));
  }
  return out;
}

/// Distinct-degree factorization of a monic squarefree polynomial:
/// pairs (product of all irreducible factors of degree d, d).
inline std::vector<std::pair<Coeffs, int>> distinct_degree_factor(Coeffs f, u64 p) {
  std::vector<std::pair<Coeffs, int>> out;
  const Coeffs x{0, 1};
  Coeffs h = rem(x, f, p);
  for (int d = 1; 2 * d <= deg(f); ++d) {
    h = powrem(h, p, f, p);
    Coeffs g = gcd(f, sub(h, x, p), p);
    if (deg(g) > 0) {
      out.emplace_back(g, d);
      f = divmod(f, g, p).first;
      h = rem(h, f, p);
    }
  }
  if (deg(f) > 0) out.emplace_back(f, deg(f));
  return out;
}

/// Equal-degree splitting (Cantor-Zassenhaus) of a monic squarefree product
/// of irreducibles of degree d. Appends the monic factors to out.
inline void equal_degree_factor(const Coeffs& f, int d, u64 p, SplitMix& rng, std::vector<Coeffs>& out) {
  const int n = deg(f);
  if (n == d) {
    out.push_back(f);
    return;
  }
  if (p < 64 && d == 1) {
    // brute force is cheaper and sidesteps small-field corner cases
    for (u64 r = 0; r < p; ++r)
      if (eval(f, r, p) == 0) out.push_back(Coeffs{submod(0, r, p), 1});
    return;
  }
  for (;;) {
    Coeffs a(n);
    for (auto& c : a) c = rng.next() % p;
    trim(a);
    if (deg(a) < 1) continue;
    Coeffs b;
    if (p == 2) {
      // trace map a + a^2 + ... + a^(2^(d-1))
      Coeffs t = a;
      b = a;
      for (int i = 1; i < d; ++i) {
        t = mulrem(t, t, f, p);
        b = add(b, t, p);
      }
    } else {
      // a^((p^d - 1)/2) = (a^(1 + p + ... + p^(d-1)))^((p-1)/2)
      Coeffs t = a, s = a;
      for (int i = 1; i < d; ++i) {
        t = powrem(t, p, f, p);
        s = mulrem(s, t, f, p);
      }
      b = sub(powrem(s, (p - 1) / 2, f, p), Coeffs{1}, p);
    }
    Coeffs g = gcd(f, b, p);
    if (deg(g) > 0 && deg(g) < n) {
      equal_degree_factor(g, d, p, rng, out);
      equal_degree_factor(divmod(f, g, p).first, d, p, rng, out);
      return;
    }
  }
}

}  // namespace divlab::fp
