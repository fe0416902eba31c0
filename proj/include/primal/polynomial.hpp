#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace primal {

using Int = boost::multiprecision::cpp_int;

// Dense integer polynomial; index = degree, no trailing zeros, empty = 0.
using Poly = std::vector<Int>;

inline void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline bool poly_is_zero(const Poly& p) { return p.empty(); }

inline int64_t poly_degree(const Poly& p) {
  return static_cast<int64_t>(p.size()) - 1;
}

inline Poly poly_add(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  poly_trim(out);
  return out;
}

inline Poly poly_sub(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  poly_trim(out);
  return out;
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  poly_trim(out);
  return out;
}

inline Poly poly_neg(Poly p) {
  for (Int& c : p) c = -c;
  return p;
}

inline Poly poly_scale(Poly p, const Int& c) {
  if (c == 0) return {};
  for (Int& x : p) x *= c;
  return p;
}

// Quotient of an exact division; complains loudly if it is not exact,
// because callers rely on identities that guarantee exactness.
inline Poly poly_divide_exact(const Poly& a, const Poly& b) {
  if (poly_is_zero(b)) throw std::logic_error("polynomial division by zero");
  if (poly_is_zero(a)) return {};
  if (a.size() < b.size()) throw std::logic_error("inexact polynomial division");
  Poly r = a, q(a.size() - b.size() + 1, 0);
  while (!r.empty() && r.size() >= b.size()) {
    Int c = r.back() / b.back();
    if (c * b.back() != r.back()) throw std::logic_error("inexact polynomial division");
    size_t shift = r.size() - b.size();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) r[i + shift] -= c * b[i];
    poly_trim(r);
  }
  if (!r.empty()) throw std::logic_error("inexact polynomial division");
  return q;
}

inline Int poly_content(const Poly& p) {
  Int g = 0;
  for (const Int& c : p) g = boost::multiprecision::gcd(g, c);
  return g;  // 0 for the zero polynomial
}

inline Poly poly_primitive(const Poly& p) {
  Int c = poly_content(p);
  if (c == 0) return {};
  Poly out = p;
  for (Int& x : out) x /= c;
  return out;
}

// Primitive polynomial gcd by pseudo-remainders, normalized to a positive
// leading coefficient. Content is discarded: the callers only ever divide
// fractions whose value at 0 is 1, so integer content never matters.
inline Poly poly_gcd(Poly a, Poly b) {
  a = poly_primitive(a);
  b = poly_primitive(b);
  if (poly_is_zero(a)) std::swap(a, b);
  while (!poly_is_zero(b)) {
    // pseudo-remainder of a by b
    Poly r = a;
    const Int lb = b.back();
    while (!r.empty() && r.size() >= b.size()) {
      Int lr = r.back();
      size_t shift = r.size() - b.size();
      for (Int& c : r) c *= lb;
      for (size_t i = 0; i < b.size(); ++i) r[i + shift] -= b[i] * lr;
      poly_trim(r);
    }
    a = std::move(b);
    b = poly_primitive(r);
  }
  if (!a.empty() && a.back() < 0) a = poly_neg(std::move(a));
  return a;
}

// Determinant by fraction-free Gaussian elimination (Bareiss); exact over
// integer polynomials. Consumes its argument.
inline Poly poly_det_bareiss(std::vector<std::vector<Poly>> m) {
  const size_t n = m.size();
  if (n == 0) return {Int(1)};
  int sign = 1;
  Poly prev{Int(1)};
  for (size_t k = 0; k + 1 < n; ++k) {
    if (poly_is_zero(m[k][k])) {
      size_t swap_row = k + 1;
      while (swap_row < n && poly_is_zero(m[swap_row][k])) ++swap_row;
      if (swap_row == n) return {};
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j)
        m[i][j] = poly_divide_exact(
            poly_sub(poly_mul(m[i][j], m[k][k]), poly_mul(m[i][k], m[k][j])), prev);
      m[i][k] = {};
    }
    prev = m[k][k];
  }
  Poly det = std::move(m[n - 1][n - 1]);
  if (sign < 0) det = poly_neg(std::move(det));
  return det;
}

}  // namespace primal
