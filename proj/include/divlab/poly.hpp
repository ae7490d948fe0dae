#pragma once

// Dense univariate polynomials over an exact integral domain.
//
// Poly<Integer> (IntPoly) is the workhorse; Poly<IntPoly> (BiPoly) models a
// polynomial in u whose coefficients are polynomials in t, which is all the
// bivariate machinery the curve covers need.

#include <algorithm>
#include <initializer_list>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "divlab/integer.hpp"

namespace divlab {

template <class R>
class Poly;

using IntPoly = Poly<Integer>;
using BiPoly = Poly<IntPoly>;

inline bool is_zero(const Integer& a) { return sgn(a) == 0; }

/// Exact quotient a / b; throws DomainError if b does not divide a.
inline Integer exact_div(const Integer& a, const Integer& b) {
  if (is_zero(b)) throw DomainError("division by zero");
  if (!divisible(a, b)) throw DomainError("inexact integer division");
  return divexact(a, b);
}

template <class R>
R ring_one();

template <>
inline Integer ring_one<Integer>() {
  return Integer(1);
}

template <class R>
class Poly {
 public:
  using value_type = R;

  Poly() = default;
  explicit Poly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<R> coeffs) : c_(coeffs) { trim(); }
  /// Constant polynomial.
  static Poly constant(R v) { return Poly(std::vector<R>{std::move(v)}); }
  /// a * X^k
  static Poly monomial(R a, std::size_t k) {
    std::vector<R> c(k + 1);
    c[k] = std::move(a);
    return Poly(std::move(c));
  }

  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  std::size_t size() const { return c_.size(); }

  const R& lc() const {
    if (c_.empty()) throw DomainError("leading coefficient of zero polynomial");
    return c_.back();
  }

  /// Coefficient of X^i (zero beyond the degree).
  R coeff(std::size_t i) const { return i < c_.size() ? c_[i] : R(); }
  const R& operator[](std::size_t i) const { return c_[i]; }
  const std::vector<R>& coeffs() const { return c_; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<R> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i < a.c_.size() && i < b.c_.size())
        c[i] = a.c_[i] + b.c_[i];
      else if (i < a.c_.size())
        c[i] = a.c_[i];
      else
        c[i] = b.c_[i];
    }
    return Poly(std::move(c));
  }

  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.zero() || b.zero()) return Poly();
    std::vector<R> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    }
    return Poly(std::move(c));
  }

  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  /// Multiply every coefficient by an integer scalar.
  friend Poly operator*(const Poly& a, const Integer& k) {
    if (is_zero(k)) return Poly();
    std::vector<R> c = a.c_;
    for (auto& x : c) x = x * k;
    return Poly(std::move(c));
  }

  /// Multiply every coefficient by a ring element.
  Poly scaled(const R& k) const {
    std::vector<R> c = c_;
    for (auto& x : c) x = x * k;
    return Poly(std::move(c));
  }

  /// Exact division of every coefficient by a ring element.
  Poly divided_by(const R& k) const {
    std::vector<R> c = c_;
    for (auto& x : c) x = exact_div(x, k);
    return Poly(std::move(c));
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<R> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Integer(static_cast<unsigned long>(i));
    return Poly(std::move(c));
  }

  /// Multiply by X^k.
  Poly shifted(std::size_t k) const {
    if (zero()) return Poly();
    std::vector<R> c(k, R());
    c.insert(c.end(), c_.begin(), c_.end());
    return Poly(std::move(c));
  }

  /// Horner evaluation at a ring element.
  R operator()(const R& x) const {
    R acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }

  std::vector<R> c_;
};

template <class R>
bool is_zero(const Poly<R>& p) {
  return p.zero();
}

template <>
inline IntPoly ring_one<IntPoly>() {
  return IntPoly::constant(Integer(1));
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b. Requires b nonzero.
template <class R>
Poly<R> pseudo_remainder(const Poly<R>& a, const Poly<R>& b) {
  if (b.zero()) throw DomainError("pseudo-remainder by zero polynomial");
  if (a.degree() < b.degree()) return a;
  const int db = b.degree();
  const R& lb = b.lc();
  std::vector<R> r = a.coeffs();
  for (int k = a.degree(); k >= db; --k) {
    R lead = r[k];
    for (auto& x : r) x = x * lb;
    if (!is_zero(lead)) {
      for (int j = 0; j <= db; ++j) r[k - db + j] = r[k - db + j] - lead * b[j];
    }
    r.pop_back();
  }
  return Poly<R>(std::move(r));
}

/// Exact division a / b over R. Throws DomainError when b does not divide a.
template <class R>
Poly<R> exact_div(const Poly<R>& a, const Poly<R>& b) {
  if (b.zero()) throw DomainError("polynomial division by zero");
  if (a.zero()) return Poly<R>();
  if (a.degree() < b.degree()) throw DomainError("inexact polynomial division");
  const int db = b.degree();
  std::vector<R> r = a.coeffs();
  std::vector<R> q(a.degree() - db + 1);
  for (int k = a.degree(); k >= db; --k) {
    if (is_zero(r[k])) continue;
    R t = exact_div(r[k], b.lc());
    for (int j = 0; j <= db; ++j) r[k - db + j] = r[k - db + j] - t * b[j];
    q[k - db] = std::move(t);
  }
  for (const auto& x : r)
    if (!is_zero(x)) throw DomainError("inexact polynomial division");
  return Poly<R>(std::move(q));
}

template <class R>
Poly<R> operator*(const Poly<R>& a, const R& k) requires(!std::is_same_v<R, Integer>) {
  return a.scaled(k);
}

// --- IntPoly specifics ------------------------------------------------------

/// gcd of the coefficients (0 for the zero polynomial), always non-negative.
inline Integer content(const IntPoly& f) {
  Integer g = 0;
  for (const auto& c : f.coeffs()) {
    g = gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

/// f / content(f), sign-normalized to a positive leading coefficient.
inline IntPoly primitive_part(const IntPoly& f) {
  if (f.zero()) throw DomainError("primitive part of zero polynomial");
  Integer c = content(f);
  if (sgn(f.lc()) < 0) c = -c;
  return f.divided_by(c);
}

/// Non-negative residue of f(x) modulo p.
inline u64 eval_mod(const IntPoly& f, u64 x, u64 p) {
  u64 acc = 0;
  const auto& c = f.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = addmod(mulmod(acc, x, p), mod_u64(*it, p), p);
  return acc;
}

/// Coefficients reduced into [0, p).
inline std::vector<u64> reduce_mod(const IntPoly& f, u64 p) {
  std::vector<u64> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = mod_u64(f[i], p);
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

/// Sum of absolute coefficient values.
inline Integer norm1(const IntPoly& f) {
  Integer s = 0;
  for (const auto& c : f.coeffs()) s += abs(c);
  return s;
}

inline Integer max_norm(const IntPoly& f) {
  Integer s = 0;
  for (const auto& c : f.coeffs())
    if (abs(c) > s) s = abs(c);
  return s;
}

inline IntPoly from_ints(std::initializer_list<long> coeffs) {
  std::vector<Integer> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return IntPoly(std::move(c));
}

/// Human-readable form, highest power first, e.g. "T^3 - 3*T^2 + 2*T".
inline std::string to_string(const IntPoly& f, const std::string& var = "T") {
  if (f.zero()) return "0";
  std::string out;
  for (int i = f.degree(); i >= 0; --i) {
    const Integer& c = f[i];
    if (is_zero(c)) continue;
    Integer a = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    bool unit = (a == 1);
    if (i == 0 || !unit) out += a.get_str();
    if (i > 0) {
      if (!unit) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

/// Evaluate a bivariate polynomial g(t, u) at t = n, giving a polynomial in u.
inline IntPoly specialize_t(const BiPoly& g, const Integer& n) {
  std::vector<Integer> c(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) c[i] = g[i](n);
  return IntPoly(std::move(c));
}

inline std::string to_string(const BiPoly& g) {
  if (g.zero()) return "0";
  std::string out;
  for (int j = g.degree(); j >= 0; --j) {
    const IntPoly& cj = g[j];
    if (cj.zero()) continue;
    std::string uj = j == 0 ? "" : (j == 1 ? "u" : "u^" + std::to_string(j));
    std::string term;
    if (j == 0) {
      term = to_string(cj, "t");
    } else if (cj == ring_one<IntPoly>()) {
      term = uj;
    } else if (cj == -ring_one<IntPoly>()) {
      term = "-" + uj;
    } else if (cj.degree() == 0 || (std::count_if(cj.coeffs().begin(), cj.coeffs().end(),
                                                  [](const Integer& x) { return !is_zero(x); }) == 1)) {
      term = to_string(cj, "t") + "*" + uj;
    } else {
      term = "(" + to_string(cj, "t") + ")*" + uj;
    }
    if (out.empty()) {
      out = term;
    } else if (term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

}  // namespace divlab
