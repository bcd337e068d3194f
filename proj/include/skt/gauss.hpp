#pragma once

#include <complex>
#include <string>

#include "skt/rational.hpp"

namespace skt {

// Gaussian rational: the exact complex tower used for eigenvector work when
// eigenvalues lie in Q(i), which covers every catalog matrix.
struct GRat {
  Rat re, im;

  GRat() : re(0), im(0) {}
  GRat(Rat r) : re(std::move(r)), im(0) {}  // NOLINT: implicit by design
  GRat(long r) : re(rat(r)), im(0) {}       // NOLINT
  GRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  GRat conj() const { return {re, Rat(-im)}; }
  Rat norm2() const { return re * re + im * im; }

  GRat operator-() const { return {Rat(-re), Rat(-im)}; }
  GRat& operator+=(const GRat& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GRat& operator-=(const GRat& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GRat& operator*=(const GRat& o) {
    Rat r = re * o.re - im * o.im;
    Rat i = re * o.im + im * o.re;
    re = r;
    im = i;
    return *this;
  }
  GRat& operator/=(const GRat& o) {
    Rat n = o.norm2();
    if (sgn(n) == 0) throw std::domain_error("GRat: division by zero");
    Rat r = (re * o.re + im * o.im) / n;
    Rat i = (im * o.re - re * o.im) / n;
    re = r;
    im = i;
    return *this;
  }

  friend GRat operator+(GRat a, const GRat& b) { return a += b; }
  friend GRat operator-(GRat a, const GRat& b) { return a -= b; }
  friend GRat operator*(GRat a, const GRat& b) { return a *= b; }
  friend GRat operator/(GRat a, const GRat& b) { return a /= b; }
  friend bool operator==(const GRat& a, const GRat& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const GRat& a, const GRat& b) { return !(a == b); }

  std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }
};

inline bool is_zero(const GRat& z) { return z.is_zero(); }

inline std::string grat_str(const GRat& z) {
  if (sgn(z.im) == 0) return rat_str(z.re);
  std::string s = rat_str(z.re);
  s += (sgn(z.im) < 0 ? " - " : " + ");
  Rat a(abs(z.im));
  s += rat_str(a) + "i";
  return s;
}

// Lexicographic (Re, Im); fixes deterministic eigenvalue ordering.
inline bool grat_less(const GRat& a, const GRat& b) {
  int c = cmp(a.re, b.re);
  if (c != 0) return c < 0;
  return cmp(a.im, b.im) < 0;
}

}  // namespace skt
