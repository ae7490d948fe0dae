#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "divlab/errors.hpp"

namespace divlab {

using Integer = mpz_class;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

inline Integer to_integer(u64 v) {
  Integer r;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return r;
}

inline Integer to_integer(i64 v) {
  if (v >= 0) return to_integer(static_cast<u64>(v));
  // -(v+1) avoids overflow at INT64_MIN
  Integer r = to_integer(static_cast<u64>(-(v + 1)));
  return -r - 1;
}

inline bool fits_u64(const Integer& v) {
  return sgn(v) >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64;
}

inline u64 to_u64(const Integer& v) {
  if (!fits_u64(v)) throw DomainError("integer does not fit in 64 bits: " + v.get_str());
  u64 out = 0;
  size_t count = 0;
  mpz_export(&out, &count, -1, sizeof(out), 0, 0, v.get_mpz_t());
  return count == 0 ? 0 : out;
}

/// Non-negative residue of v modulo p.
inline u64 mod_u64(const Integer& v, u64 p) {
  if (p <= 0xFFFFFFFFul) {
    // fdiv_ui gives the non-negative remainder even for negative v
    return mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(p));
  }
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), to_integer(p).get_mpz_t());
  return to_u64(r);
}

inline Integer ipow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Integer divexact(const Integer& a, const Integer& b) {
  Integer r;
  mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline bool divisible(const Integer& a, const Integer& b) {
  return mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0;
}

/// Exact divisor relation m || v: m | v and gcd(m, v/m) = 1.
inline bool exactly_divides(const Integer& m, const Integer& v) {
  if (!divisible(v, m)) return false;
  return gcd(m, divexact(v, m)) == 1;
}

// --- 64-bit modular helpers -------------------------------------------------

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

inline u64 addmod(u64 a, u64 b, u64 m) {
  u64 s = a + b;
  if (s < a || s >= m) s -= m;
  return s;
}

inline u64 submod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + (m - b); }

inline u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

/// Inverse of a modulo m (gcd(a, m) = 1 required).
inline u64 invmod(u64 a, u64 m) {
  i64 t = 0, new_t = 1;
  u64 r = m, new_r = a % m;
  // signed arithmetic on t is safe: |t| <= m / 2 throughout
  while (new_r != 0) {
    u64 q = r / new_r;
    i64 tmp_t = t - static_cast<i64>(q) * new_t;
    t = new_t;
    new_t = tmp_t;
    u64 tmp_r = r - q * new_r;
    r = new_r;
    new_r = tmp_r;
  }
  if (r != 1) throw DomainError("invmod: argument not invertible");
  return t < 0 ? static_cast<u64>(t + static_cast<i64>(m)) : static_cast<u64>(t);
}

inline u64 gcd_u64(u64 a, u64 b) {
  while (b) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace divlab
