#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "skt/matrix.hpp"

namespace skt {

// Monic polynomial coefficients c[0..n]: p(x) = sum c[k] x^k, c[n] = 1.
using RatPoly = std::vector<Rat>;

// Faddeev-LeVerrier: exact characteristic polynomial of a rational matrix.
inline RatPoly char_poly(const RatMat& a) {
  if (!a.square()) throw std::invalid_argument("char_poly: non-square matrix");
  int n = a.rows();
  RatPoly c(static_cast<size_t>(n) + 1, Rat(0));
  c[n] = 1;
  RatMat m = RatMat::zero(n, n);
  for (int k = 1; k <= n; ++k) {
    // M_k = A * M_{k-1} + c_{n-k+1} I
    RatMat am = a * m;
    for (int i = 0; i < n; ++i) am(i, i) += c[static_cast<size_t>(n - k + 1)];
    m = std::move(am);
    RatMat prod = a * m;
    c[static_cast<size_t>(n - k)] = -prod.trace() / k;
  }
  return c;
}

template <class T>
T poly_eval(const RatPoly& p, const T& x) {
  T acc{};
  for (size_t k = p.size(); k-- > 0;) {
    acc = acc * x;
    acc += T(p[k]);
  }
  return acc;
}

inline std::complex<double> poly_eval_c(const RatPoly& p, std::complex<double> x) {
  std::complex<double> acc = 0;
  for (size_t k = p.size(); k-- > 0;) acc = acc * x + to_double(p[k]);
  return acc;
}

// Aberth-Ehrlich simultaneous root iteration. Good to ~1e-12 for simple
// roots of the well-scaled small polynomials we see (degree <= 12); multiple
// roots are recovered exactly by the deflation loop in eigen().
inline std::vector<std::complex<double>> poly_roots_c(std::vector<std::complex<double>> coeff) {
  using C = std::complex<double>;
  int n = static_cast<int>(coeff.size()) - 1;
  std::vector<C> z(static_cast<size_t>(n));
  if (n <= 0) return z;
  double radius = 0;
  for (int k = 0; k < n; ++k) radius = std::max(radius, std::abs(coeff[static_cast<size_t>(k)]));
  radius = 1.0 + radius;
  for (int i = 0; i < n; ++i) {
    double ang = 2.0 * M_PI * i / n + 0.4;
    z[static_cast<size_t>(i)] = radius * C(std::cos(ang), std::sin(ang));
  }
  auto eval = [&](C x, C& val, C& dval) {
    val = coeff[static_cast<size_t>(n)];
    dval = 0;
    for (int k = n - 1; k >= 0; --k) {
      dval = dval * x + val;
      val = val * x + coeff[static_cast<size_t>(k)];
    }
  };
  for (int it = 0; it < 400; ++it) {
    double moved = 0;
    for (int i = 0; i < n; ++i) {
      C val, dval;
      eval(z[static_cast<size_t>(i)], val, dval);
      if (std::abs(val) < 1e-300) continue;
      C ratio = (std::abs(dval) > 0) ? val / dval : C(1e-8, 0);
      C sum = 0;
      for (int j = 0; j < n; ++j)
        if (j != i) sum += C(1, 0) / (z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)]);
      C denom = C(1, 0) - ratio * sum;
      C delta = (std::abs(denom) > 1e-300) ? ratio / denom : ratio;
      z[static_cast<size_t>(i)] -= delta;
      moved = std::max(moved, std::abs(delta));
    }
    if (moved < 1e-14 * radius) break;
  }
  return z;
}

inline std::vector<std::complex<double>> poly_roots(const RatPoly& p) {
  std::vector<std::complex<double>> coeff(p.size());
  for (size_t k = 0; k < p.size(); ++k) coeff[k] = to_double(p[k]);
  return poly_roots_c(std::move(coeff));
}

using GPoly = std::vector<GRat>;  // coefficients c[0..n], not necessarily monic

inline GRat gpoly_eval(const GPoly& p, const GRat& x) {
  GRat acc;
  for (size_t k = p.size(); k-- > 0;) {
    acc = acc * x;
    acc += p[k];
  }
  return acc;
}

// Synthetic division by (x - c); remainder returned, quotient in place.
inline GRat gpoly_deflate(GPoly& p, const GRat& c) {
  int n = static_cast<int>(p.size()) - 1;
  GPoly q(static_cast<size_t>(n));
  GRat carry = p[static_cast<size_t>(n)];
  for (int k = n - 1; k >= 0; --k) {
    q[static_cast<size_t>(k)] = carry;
    carry = p[static_cast<size_t>(k)] + c * carry;
  }
  GRat rem = carry;
  p = std::move(q);
  return rem;
}

// Continued-fraction convergents of x with denominators <= max_den; includes
// the nearest integer. Candidate generators for exact root recognition.
inline std::vector<Rat> convergents(double x, long max_den = 1000000) {
  std::vector<Rat> out;
  if (!std::isfinite(x)) return out;
  out.push_back(rat(static_cast<long>(std::llround(x))));
  double a = x;
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int it = 0; it < 24; ++it) {
    double fl = std::floor(a);
    if (fl > 1e15 || fl < -1e15) break;
    long ai = static_cast<long>(fl);
    long p2 = ai * p1 + p0;
    long q2 = ai * q1 + q0;
    if (q2 > max_den || q2 <= 0) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    out.push_back(rat(p1, q1));
    double rem = a - fl;
    if (rem < 1e-14) break;
    a = 1.0 / rem;
  }
  return out;
}

}  // namespace skt
