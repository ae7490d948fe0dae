#pragma once

// Root finding and factorization modulo p, and factorization over Z by the
// Zassenhaus scheme (Hensel lifting + subset recombination).

#include <algorithm>
#include <utility>
#include <vector>

#include "divlab/algebra.hpp"
#include "divlab/factor_int.hpp"
#include "divlab/modpoly.hpp"

namespace divlab {

struct ModPolyFactorization {
  u64 p = 0;
  u64 unit = 1;  // leading coefficient of the input mod p
  /// (monic irreducible factor mod p, multiplicity), sorted by (degree, coefficients).
  std::vector<std::pair<fp::Coeffs, int>> factors;

  /// Degrees of the irreducible factors, with multiplicity, ascending.
  std::vector<int> degree_pattern() const {
    std::vector<int> out;
    for (const auto& [g, e] : factors)
      for (int i = 0; i < e; ++i) out.push_back(fp::deg(g));
    std::sort(out.begin(), out.end());
    return out;
  }

  bool irreducible() const { return factors.size() == 1 && factors[0].second == 1; }
};

namespace detail {

inline fp::Coeffs reduce_checked(const IntPoly& f, u64 p) {
  if (p < 2) throw DomainError("modulus must be a prime");
  fp::Coeffs c = reduce_mod(f, p);
  if (c.empty()) throw DomainError("polynomial vanishes mod " + std::to_string(p) + "; strip the content first");
  return c;
}

inline bool coeffs_less(const fp::Coeffs& a, const fp::Coeffs& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

}  // namespace detail

/// Distinct roots of f modulo the prime p, ascending.
inline std::vector<u64> roots_mod_p(const IntPoly& f, u64 p) {
  fp::Coeffs c = detail::reduce_checked(f, p);
  std::vector<u64> roots;
  if (fp::deg(c) < 1) return roots;
  if (p <= 64 || static_cast<u64>(fp::deg(c)) >= p) {
    for (u64 r = 0; r < p; ++r)
      if (fp::eval(c, r, p) == 0) roots.push_back(r);
    return roots;
  }
  c = fp::monic(c, p);
  const fp::Coeffs x{0, 1};
  fp::Coeffs xp = fp::powrem(x, p, c, p);
  fp::Coeffs g = fp::gcd(c, fp::sub(xp, x, p), p);
  if (fp::deg(g) < 1) return roots;
  std::vector<fp::Coeffs> lin;
  fp::SplitMix rng(0x5eed0000ull ^ p);
  fp::equal_degree_factor(g, 1, p, rng, lin);
  for (const auto& l : lin) roots.push_back(submod(0, l[0], p));
  std::sort(roots.begin(), roots.end());
  return roots;
}

/// Whether f has at least one root mod p (no splitting performed).
inline bool has_root_mod_p(const IntPoly& f, u64 p) {
  fp::Coeffs c = detail::reduce_checked(f, p);
  if (fp::deg(c) < 1) return false;
  if (p <= 64 || static_cast<u64>(fp::deg(c)) >= p) {
    for (u64 r = 0; r < p; ++r)
      if (fp::eval(c, r, p) == 0) return true;
    return false;
  }
  if (c[0] == 0) return true;
  c = fp::monic(c, p);
  const fp::Coeffs x{0, 1};
  return fp::deg(fp::gcd(c, fp::sub(fp::powrem(x, p, c, p), x, p), p)) > 0;
}

/// Complete factorization of f mod p into monic irreducibles.
inline ModPolyFactorization factor_mod_p(const IntPoly& f, u64 p) {
  fp::Coeffs c = detail::reduce_checked(f, p);
  ModPolyFactorization out;
  out.p = p;
  out.unit = c.back();
  c = fp::monic(c, p);
  fp::SplitMix rng(0xfac70000ull ^ p);
  for (auto& [sq, mult] : fp::squarefree_factor(c, p)) {
    for (auto& [part, d] : fp::distinct_degree_factor(sq, p)) {
      std::vector<fp::Coeffs> irr;
      fp::equal_degree_factor(part, d, p, rng, irr);
      for (auto& g : irr) out.factors.emplace_back(std::move(g), mult);
    }
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return detail::coeffs_less(a.first, b.first);
    return a.second < b.second;
  });
  return out;
}

/// Multiply a mod-p factorization back together (unit included).
inline fp::Coeffs expand(const ModPolyFactorization& fac) {
  fp::Coeffs r{fac.unit % fac.p};
  for (const auto& [g, e] : fac.factors)
    for (int i = 0; i < e; ++i) r = fp::mul(r, g, fac.p);
  return r;
}

/// f is irreducible mod p and keeps its degree there.
inline bool irreducible_mod_p(const IntPoly& f, u64 p) {
  if (f.degree() < 1 || mod_u64(f.lc(), p) == 0) return false;
  fp::Coeffs c = fp::monic(reduce_mod(f, p), p);
  if (fp::deg(c) == 1) return true;
  if (fp::deg(fp::gcd(c, fp::derivative(c, p), p)) > 0) return false;
  auto ddf = fp::distinct_degree_factor(c, p);
  return ddf.size() == 1 && ddf[0].second == fp::deg(c);
}

struct ZFactorization {
  /// Signed content: input = content * prod(factor^multiplicity).
  Integer content = 1;
  /// (primitive irreducible factor with positive leading coefficient, multiplicity).
  std::vector<std::pair<IntPoly, int>> factors;

  bool irreducible() const { return factors.size() == 1 && factors[0].second == 1; }
};

namespace detail {

inline Integer sym_mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  if (2 * r > m) r -= m;
  return r;
}

inline IntPoly mod_poly(const IntPoly& f, const Integer& m) {
  std::vector<Integer> c(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) mpz_fdiv_r(c[i].get_mpz_t(), f[i].get_mpz_t(), m.get_mpz_t());
  return IntPoly(std::move(c));
}

inline IntPoly sym_poly(const IntPoly& f, const Integer& m) {
  std::vector<Integer> c(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) c[i] = sym_mod(f[i], m);
  return IntPoly(std::move(c));
}

inline IntPoly lift_coeffs(const fp::Coeffs& c) {
  std::vector<Integer> v(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) v[i] = to_integer(c[i]);
  return IntPoly(std::move(v));
}

/// Division with remainder by a monic polynomial, coefficients mod m.
inline std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& a, const IntPoly& b, const Integer& m) {
  if (a.degree() < b.degree()) return {IntPoly(), mod_poly(a, m)};
  std::vector<Integer> r = mod_poly(a, m).coeffs();
  r.resize(a.size());
  const int db = b.degree();
  std::vector<Integer> q(a.degree() - db + 1);
  for (int k = a.degree(); k >= db; --k) {
    Integer t = r[k];
    mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), m.get_mpz_t());
    if (t == 0) continue;
    q[k - db] = t;
    for (int j = 0; j <= db; ++j) {
      r[k - db + j] -= t * b[j];
      mpz_fdiv_r(r[k - db + j].get_mpz_t(), r[k - db + j].get_mpz_t(), m.get_mpz_t());
    }
  }
  return {IntPoly(std::move(q)), mod_poly(IntPoly(std::move(r)), m)};
}

struct HenselPair {
  IntPoly g, h, s, t;
};

/// One quadratic Hensel step: from f = g*h, s*g + t*h = 1 mod m (h monic)
/// to the same relations mod m^2.
inline HenselPair hensel_step(const IntPoly& f, const HenselPair& in, const Integer& m) {
  const Integer m2 = m * m;
  IntPoly e = mod_poly(f - in.g * in.h, m2);
  auto [q, r] = divmod_monic(in.s * e, in.h, m2);
  IntPoly g = mod_poly(in.g + in.t * e + q * in.g, m2);
  IntPoly h = mod_poly(in.h + r, m2);
  IntPoly b = mod_poly(in.s * g + in.t * h - ring_one<IntPoly>(), m2);
  auto [c, d] = divmod_monic(in.s * b, h, m2);
  IntPoly s = mod_poly(in.s - d, m2);
  IntPoly t = mod_poly(in.t - in.t * b - c * g, m2);
  return {g, h, s, t};
}

/// Lift f = lc(f) * prod(factors) mod p to mod p^(2^k) = modulus. factors are
/// monic mod p; result factors are monic mod modulus.
inline void multifactor_lift(const IntPoly& f, const std::vector<fp::Coeffs>& factors, u64 p, int steps,
                             std::vector<IntPoly>& out) {
  const Integer P = to_integer(p);
  Integer modulus = P;
  for (int i = 0; i < steps; ++i) modulus *= modulus;
  if (factors.size() == 1) {
    // f / lc(f) mod modulus
    Integer inv;
    Integer lcm = f.lc();
    mpz_invert(inv.get_mpz_t(), lcm.get_mpz_t(), modulus.get_mpz_t());
    out.push_back(mod_poly(f * inv, modulus));
    return;
  }
  const std::size_t half = factors.size() / 2;
  std::vector<fp::Coeffs> left(factors.begin(), factors.begin() + half);
  std::vector<fp::Coeffs> right(factors.begin() + half, factors.end());
  fp::Coeffs a{1}, b{1};
  for (const auto& x : left) a = fp::mul(a, x, p);
  for (const auto& x : right) b = fp::mul(b, x, p);
  fp::Coeffs g0 = fp::scale(a, mod_u64(f.lc(), p), p);
  auto [one, s0, t0] = fp::xgcd(g0, b, p);
  HenselPair hp{lift_coeffs(g0), lift_coeffs(b), lift_coeffs(s0), lift_coeffs(t0)};
  Integer m = P;
  for (int i = 0; i < steps; ++i) {
    hp = hensel_step(f, hp, m);
    m *= m;
  }
  multifactor_lift(hp.g, left, p, steps, out);
  multifactor_lift(hp.h, right, p, steps, out);
}

/// Mignotte-style bound on the coefficients of lc(f) * (any factor of f).
inline Integer factor_coefficient_bound(const IntPoly& f) {
  Integer sq = 0;
  for (const auto& c : f.coeffs()) sq += c * c;
  Integer norm2 = sqrt(sq) + 1;
  Integer b = abs(f.lc()) * norm2;
  mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), static_cast<mp_bitcnt_t>(f.degree()));
  return b;
}

/// Smallest prime p >= 3 with p not dividing lc(f) and f squarefree mod p.
inline u64 good_hensel_prime(const IntPoly& f) {
  for (u64 p = 3;; p += 2) {
    if (!is_prime_u64(p)) continue;
    if (mod_u64(f.lc(), p) == 0) continue;
    fp::Coeffs c = reduce_mod(f, p);
    if (fp::deg(fp::gcd(c, fp::derivative(c, p), p)) == 0) return p;
  }
}

/// Factor a squarefree primitive polynomial of degree >= 2 with positive lc.
inline std::vector<IntPoly> zassenhaus(IntPoly f) {
  const u64 p = good_hensel_prime(f);
  ModPolyFactorization mf = factor_mod_p(f, p);
  if (mf.factors.size() == 1) return {f};
  std::vector<fp::Coeffs> modfactors;
  for (auto& [g, e] : mf.factors) modfactors.push_back(g);

  const Integer bound = 2 * factor_coefficient_bound(f) + 1;
  int steps = 0;
  Integer modulus = to_integer(p);
  while (modulus <= bound) {
    modulus *= modulus;
    ++steps;
  }
  std::vector<IntPoly> lifted;
  multifactor_lift(f, modfactors, p, steps, lifted);

  std::vector<IntPoly> result;
  std::size_t subset = 1;
  while (2 * subset <= lifted.size()) {
    bool found = false;
    std::vector<std::size_t> idx(subset);
    for (std::size_t i = 0; i < subset; ++i) idx[i] = i;
    for (;;) {
      IntPoly cand = IntPoly::constant(f.lc());
      for (std::size_t i : idx) cand = mod_poly(cand * lifted[i], modulus);
      cand = sym_poly(cand, modulus);
      if (!cand.zero() && cand.degree() > 0) {
        IntPoly pp = primitive_part(cand);
        if (divisible(f[0], pp[0]) && divisible(f.lc(), pp.lc())) {
          try {
            IntPoly q = exact_div(f, pp);
            result.push_back(pp);
            f = primitive_part(q);
            for (auto it = idx.rbegin(); it != idx.rend(); ++it) lifted.erase(lifted.begin() + static_cast<long>(*it));
            found = true;
          } catch (const DomainError&) {
          }
        }
      }
      if (found) break;
      // next combination
      std::size_t k = subset;
      while (k > 0 && idx[k - 1] == lifted.size() - subset + (k - 1)) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < subset; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++subset;
  }
  if (f.degree() > 0) result.push_back(f);
  return result;
}

inline bool poly_less(const IntPoly& a, const IntPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

}  // namespace detail

/// Complete factorization of f over Z: content times primitive irreducibles.
inline ZFactorization factor_over_Z(const IntPoly& f) {
  if (f.zero()) throw DomainError("factor_over_Z of the zero polynomial");
  ZFactorization out;
  out.content = content(f);
  if (sgn(f.lc()) < 0) out.content = -out.content;
  if (f.degree() == 0) {
    out.content = f[0];
    return out;
  }
  for (auto& [part, mult] : squarefree_decomposition(f)) {
    std::vector<IntPoly> irr = part.degree() == 1 ? std::vector<IntPoly>{part} : detail::zassenhaus(part);
    for (auto& g : irr) out.factors.emplace_back(std::move(g), mult);
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return detail::poly_less(a.first, b.first);
    return a.second < b.second;
  });
  return out;
}

inline IntPoly expand(const ZFactorization& fac) {
  IntPoly r = IntPoly::constant(fac.content);
  for (const auto& [g, e] : fac.factors)
    for (int i = 0; i < e; ++i) r *= g;
  return r;
}

}  // namespace divlab
