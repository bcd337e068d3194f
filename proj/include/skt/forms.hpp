#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "skt/liealg.hpp"

namespace skt {

// Left-invariant exterior k-form with exact coefficients. Multi-indices are
// stored as bitmasks over {0..n-1} (strictly increasing by construction);
// zero coefficients are never stored. Sign conventions used throughout:
//   d a (X_0..X_k)    = sum_{i<j} (-1)^{i+j} a([X_i, X_j], ..^i..^j..)
//   (phi^* a)(X_1...) = a(phi X_1, ...)
//   star: a ^ star b  = <a, b>_g vol_g,  vol_g = sqrt(det g) e^{1...n}
//   d*                = -star d star (even total dimension)
class Form {
 public:
  Form() = default;
  Form(int dim, int degree) : n_(dim), k_(degree) {}

  static Form basis(int dim, std::vector<int> idx0);  // 0-based indices
  static uint32_t mask_of(const std::vector<int>& idx0);

  int dim() const { return n_; }
  int degree() const { return k_; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::map<uint32_t, Rat>& coeffs() const { return coeffs_; }

  Rat coeff(uint32_t mask) const {
    auto it = coeffs_.find(mask);
    return it == coeffs_.end() ? Rat(0) : it->second;
  }
  void add_coeff(uint32_t mask, const Rat& c);

  Form operator+(const Form& o) const;
  Form operator-(const Form& o) const;
  Form operator*(const Rat& s) const;
  Form operator-() const { return *this * Rat(-1); }
  friend bool operator==(const Form& a, const Form& b) {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.coeffs_ == b.coeffs_;
  }

  // Multilinear evaluation on column vectors.
  Rat eval(const std::vector<RatVec>& args) const;

  std::string str() const;  // e.g. "2 f^{123} - f^{145}" (1-based indices)

 private:
  int n_ = 0, k_ = 0;
  std::map<uint32_t, Rat> coeffs_;
};

Form wedge(const Form& a, const Form& b);

// Chevalley-Eilenberg differential of an invariant form.
Form ce_d(const LieAlgebra& g, const Form& a);

Form pullback(const RatMat& phi, const Form& a);

// x-flat = g(x, .) as a 1-form. g must be symmetric positive definite.
Form flat(const RatMat& g, const RatVec& x);

// Hodge star for a rational metric; exact, requires det(g) to be a rational
// square (identity and the catalog metrics always are).
Form hodge_star(const RatMat& g, const Form& a);

// d* = -star d star, assembled so only det(g) (never its square root)
// appears; exact for every rational SPD metric on an even-dimensional space.
Form codifferential(const LieAlgebra& g, const RatMat& metric, const Form& a);

// J acting on 1-forms: (J b)(X) = b(J^{-1} X) = -b(JX).
Form j_act_one_form(const RatMat& J, const Form& b);

std::string mask_str(uint32_t mask);

}  // namespace skt
