#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace skt {

// Exact scalar tower. All structure-constant / form / bracket arithmetic runs
// over Rat; floating point appears only in the spectral code (eigenvalues,
// clustering) where it is unavoidable.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }

// Parses "3", "-1/2", "0.25" (decimal converted exactly).
inline Rat parse_rat(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw std::invalid_argument("parse_rat: empty string");
  auto dot = t.find('.');
  if (dot != std::string::npos) {
    std::string digits = t.substr(0, dot) + t.substr(dot + 1);
    size_t frac_len = t.size() - dot - 1;
    Rat num(digits);
    Rat den(1);
    for (size_t i = 0; i < frac_len; ++i) den *= 10;
    Rat q = num / den;
    q.canonicalize();
    return q;
  }
  Rat q;
  if (q.set_str(t, 10) != 0) throw std::invalid_argument("parse_rat: bad rational '" + s + "'");
  q.canonicalize();
  return q;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline double to_double(const Rat& q) { return q.get_d(); }

// Exact square root when q is the square of a rational; nullopt otherwise.
inline std::optional<Rat> rat_sqrt(const Rat& q) {
  if (sgn(q) < 0) return std::nullopt;
  mpz_class num = q.get_num(), den = q.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
  if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  Rat r(rn, rd);
  r.canonicalize();
  return r;
}

// Best rational with denominator <= max_den approximating x (continued
// fractions). Used to recognize exact eigenvalues from floating candidates;
// the caller must still certify the candidate by an exact computation.
inline std::optional<Rat> rationalize(double x, double tol = 1e-9, long max_den = 1000000) {
  if (!std::isfinite(x)) return std::nullopt;
  double a = x;
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int it = 0; it < 64; ++it) {
    double fl = std::floor(a);
    if (fl > 1e17 || fl < -1e17) return std::nullopt;
    long ai = static_cast<long>(fl);
    long p2 = ai * p1 + p0;
    long q2 = ai * q1 + q0;
    if (q2 > max_den || q2 < 0) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    double rem = a - fl;
    if (std::abs(static_cast<double>(p1) / q1 - x) < tol / 4) break;
    if (rem < 1e-15) break;
    a = 1.0 / rem;
  }
  if (q1 == 0) return std::nullopt;
  if (std::abs(static_cast<double>(p1) / q1 - x) > tol) return std::nullopt;
  return rat(p1, q1);
}

}  // namespace skt
