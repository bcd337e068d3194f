#pragma once

#include <optional>

#include "skt/hermitian.hpp"
#include "skt/spectral.hpp"

namespace skt {

// Affine space of 1-forms, stored as coefficient vectors over a fixed
// coframe: particular + span(basis). Canonical form: basis rows in RREF,
// particular reduced modulo the span (pivot coordinates zeroed). An empty
// optional particular means "no solution".
struct AlphaSpace {
  int dim = 0;
  std::optional<RatVec> particular;
  std::vector<RatVec> basis;

  static AlphaSpace empty_space(int dim) { return AlphaSpace{dim, std::nullopt, {}}; }
  static AlphaSpace affine(int dim, RatVec particular, std::vector<RatVec> basis);

  bool solvable() const { return particular.has_value(); }
  int degrees_of_freedom() const { return static_cast<int>(basis.size()); }
  bool contains(const RatVec& w) const;
  bool contains_zero() const;
  bool has_nonzero() const;
  Form particular_form(int ambient_dim) const;

  // Coefficients transform by S^T under the basis change x = S x'.
  AlphaSpace transformed(const RatMat& S) const;

  friend bool operator==(const AlphaSpace& a, const AlphaSpace& b);
};

// Full affine solution set of (d alpha = 0) and (alpha ^ H = dH) in the 2n
// coframe coefficients of alpha. When H = 0 this is the space of all closed
// 1-forms.
AlphaSpace solve_alpha(const LieAlgebra& g, const HermitianStructure& h);

// S_g(a A + A^2 + A* A) = 0 with A* the metric adjoint; the dH = 0 criterion
// on adapted data.
bool check_skt(const AlmostAbelianData& data);

// v = 0 and A antisymmetric w.r.t. the metric.
bool check_kahler(const AlmostAbelianData& data);

// The four twisted-SKT conditions for a closed 1-form alpha (given by ambient
// coframe coefficients): alpha(a e1 + v) = 0, alpha o A = 0, and the two
// bilinear identities quantified over the n_1 frame (where J1 acts).
bool check_lcskt_conditions(const AlmostAbelianData& data, const RatVec& alpha_ambient);

// S_g((a + alpha(e_2n)) A + A^2 + A* A) = 0; holds for every pair accepted by
// check_lcskt_conditions.
bool check_antisym_consequence(const AlmostAbelianData& data, const RatVec& alpha_ambient);

// A* v = 0, i.e. d(lee form) = 0.
bool check_lcb(const AlmostAbelianData& data);

// rho^B = 0 through the scalar/vector conditions.
bool check_brf(const AlmostAbelianData& data);

// Metric-fixed verdict for one Hermitian structure on one algebra.
struct StructureVerdict {
  bool kaehler = false;
  bool skt = false;
  bool twisted_skt = false;
  bool lcskt = false;
  bool balanced = false;
  bool lcb = false;
  bool bismut_ricci_flat = false;
  AlphaSpace alpha_space;
  Form torsion;      // H
  Form dtorsion;     // dH
  Form lee;          // theta
  std::optional<AlmostAbelianData> data;
  std::optional<SpectralReport> spectrum;  // of A, when data extracted
};

// Computes every flag, cross-checking the form computations against the
// (a, v, A) criteria whenever the algebra extracts as almost abelian; a
// disagreement throws std::logic_error (sign-convention audit).
StructureVerdict evaluate_structure(const LieAlgebra& g, const HermitianStructure& h,
                                    double tol = 1e-9);

}  // namespace skt
