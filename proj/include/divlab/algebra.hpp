#pragma once

// Resultants, discriminants, gcds and squarefree parts over Z[T], and the
// critical-value polynomial F of a plane-curve cover g(t, u) = 0.

#include <string>
#include <utility>
#include <vector>

#include "divlab/parse.hpp"
#include "divlab/poly.hpp"

namespace divlab {

template <class R>
R ring_pow(const R& base, int e) {
  R r = ring_one<R>();
  for (int i = 0; i < e; ++i) r = r * base;
  return r;
}

/// Res(a, b) via the subresultant pseudo-remainder sequence. Works over any
/// ring with exact division (Z and Z[t] here).
template <class R>
R resultant(Poly<R> a, Poly<R> b) {
  if (a.zero() || b.zero()) throw DomainError("resultant of a zero polynomial");
  int sign = 1;
  if (a.degree() < b.degree()) {
    if ((a.degree() & 1) && (b.degree() & 1)) sign = -1;
    std::swap(a, b);
  }
  if (b.degree() == 0) {
    R r = ring_pow(b.lc(), a.degree());
    return sign < 0 ? R() - r : r;
  }
  R g = ring_one<R>();
  R h = ring_one<R>();
  for (;;) {
    const int delta = a.degree() - b.degree();
    if ((a.degree() & 1) && (b.degree() & 1)) sign = -sign;
    Poly<R> r = pseudo_remainder(a, b);
    a = std::move(b);
    if (r.zero()) return R();
    b = r.divided_by(g * ring_pow(h, delta));
    g = a.lc();
    if (delta > 0) h = exact_div(ring_pow(g, delta), ring_pow(h, delta - 1));
    if (b.degree() == 0) break;
  }
  R res = exact_div(ring_pow(b.lc(), a.degree()), ring_pow(h, a.degree() - 1));
  return sign < 0 ? R() - res : res;
}

/// disc(f) = (-1)^(d(d-1)/2) Res(f, f') / lc(f).
template <class R>
R discriminant(const Poly<R>& f) {
  if (f.degree() < 1) throw DomainError("discriminant of a constant polynomial");
  const int d = f.degree();
  R r = exact_div(resultant(f, f.derivative()), f.lc());
  return ((d * (d - 1) / 2) & 1) ? R() - r : r;
}

inline Integer poly_discriminant(const IntPoly& f) { return discriminant(f); }

/// Primitive gcd over Z[T], normalized to positive leading coefficient.
inline IntPoly gcd(const IntPoly& f, const IntPoly& h) {
  if (f.zero() && h.zero()) return IntPoly();
  if (f.zero()) return primitive_part(h) * content(h);
  if (h.zero()) return primitive_part(f) * content(f);
  Integer c = gcd(content(f), content(h));
  IntPoly a = primitive_part(f);
  IntPoly b = primitive_part(h);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.zero()) {
    if (b.degree() == 0) return IntPoly::constant(c);
    IntPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = r.zero() ? IntPoly() : primitive_part(r);
  }
  return primitive_part(a) * c;
}

/// Separable primitive polynomial with the same complex roots as f.
inline IntPoly squarefree_primitive_part(const IntPoly& f) {
  if (f.zero()) throw DomainError("squarefree part of the zero polynomial");
  if (f.degree() == 0) return IntPoly::constant(Integer(1));
  IntPoly g = gcd(f, f.derivative());
  return primitive_part(exact_div(primitive_part(f), primitive_part(g)));
}

/// Yun's squarefree decomposition of a primitive polynomial: pairs
/// (squarefree primitive factor, multiplicity) with pairwise coprime factors.
inline std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& f) {
  std::vector<std::pair<IntPoly, int>> out;
  if (f.degree() < 1) return out;
  IntPoly a = primitive_part(f);
  IntPoly b = a.derivative();
  IntPoly c = primitive_part(gcd(a, b));
  IntPoly w = exact_div(a, c);
  IntPoly y = exact_div(b, c);
  IntPoly z = y - w.derivative();
  int i = 1;
  while (w.degree() > 0) {
    IntPoly g = z.zero() ? primitive_part(w) : primitive_part(gcd(w, z));
    if (g.degree() > 0) out.emplace_back(g, i);
    w = exact_div(w, g);
    y = exact_div(z, g);
    z = y - w.derivative();
    ++i;
  }
  return out;
}

// --- curve covers -----------------------------------------------------------

/// disc_u g(t, u) as a polynomial in t. Zero when g is not squarefree in u.
inline IntPoly discriminant_in_u(const BiPoly& g) {
  if (g.degree() < 1) throw DomainError("cover has degree 0 in u");
  return discriminant(g);
}

/// F := squarefree primitive part of disc_u(g) * lc_u(g). Throws DomainError
/// when the result is constant.
inline IntPoly critical_polynomial(const BiPoly& g) {
  IntPoly disc = discriminant_in_u(g);
  if (disc.zero()) throw DomainError("cover is not squarefree in u (zero discriminant)");
  IntPoly f = squarefree_primitive_part(disc * g.lc());
  if (f.degree() < 1) throw DomainError("family has no finite critical value in this model");
  return f;
}

/// A plane model g(t, u) = 0 of the cover t : X -> P^1, of degree nu >= 2 in u.
class CurveCover {
 public:
  /// Validates and normalizes: content is divided out, nu >= 2, g squarefree
  /// in u, and at least one finite critical value.
  static CurveCover from_poly(BiPoly g) {
    if (g.zero()) throw DomainError("cover polynomial is zero");
    if (g.degree() < 2) throw DomainError("cover must have degree >= 2 in u (got " + std::to_string(g.degree()) + ")");
    Integer c = 0;
    for (const auto& cj : g.coeffs()) c = divlab::gcd(c, content(cj));
    if (c != 1) {
      std::vector<IntPoly> cs;
      for (const auto& cj : g.coeffs()) cs.push_back(cj.divided_by(c));
      g = BiPoly(std::move(cs));
    }
    CurveCover cov;
    cov.g_ = std::move(g);
    cov.disc_ = discriminant_in_u(cov.g_);
    if (cov.disc_.zero()) throw DomainError("cover is not squarefree in u (zero discriminant)");
    cov.f_ = critical_polynomial(cov.g_);
    return cov;
  }

  static CurveCover parse(std::string_view text) { return from_poly(parse_bivariate(text)); }

  const BiPoly& g() const { return g_; }
  int nu() const { return g_.degree(); }
  /// lc_u(g) as a polynomial in t.
  const IntPoly& leading_u() const { return g_.lc(); }
  const IntPoly& disc_u() const { return disc_; }
  /// The critical-value polynomial F.
  const IntPoly& critical() const { return f_; }
  std::string to_string() const { return divlab::to_string(g_); }

 private:
  CurveCover() = default;
  BiPoly g_;
  IntPoly disc_;
  IntPoly f_;
};

inline IntPoly discriminant_in_u(const CurveCover& cover) { return cover.disc_u(); }
inline IntPoly critical_polynomial(const CurveCover& cover) { return cover.critical(); }

}  // namespace divlab
