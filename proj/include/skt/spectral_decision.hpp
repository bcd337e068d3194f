#pragma once

#include "skt/verdicts.hpp"

namespace skt {

// Metric-free existence procedures on (g, J). The endomorphism A of n_1 is
// only defined up to a nonzero scalar; every criterion below is invariant
// under the joint scaling of (a, v, A), so any J-adapted frame will do. The
// canonical auxiliary metric Id + J^T J is used to pick one.
struct ExistenceReport {
  bool exists = false;
  SpectralReport spectrum;
  AlmostAbelianData data;  // frame in which the spectrum was computed
};

ExistenceReport exists_twisted_skt(const LieAlgebra& g, const RatMat& J, double tol = 1e-9);

// Twisted SKT and (all real parts 0, or mu != -a/2).
bool exists_lcskt(const LieAlgebra& g, const RatMat& J, double tol = 1e-9);

// J1-compatible rational SPD Gram matrix on n_1 for which A is normal, built
// from a complex eigenbasis transition P as conj(P^-T) P^-1 followed by
// J-averaging. Requires the spectrum of A to be certified exact (Gaussian
// rational); throws std::domain_error otherwise or when A is not
// diagonalizable.
RatMat construct_normalizing_metric(const RatMat& A, const RatMat& J1, double tol = 1e-9);

// Lagrange interpolation Q with Q(lambda) = conj(lambda) on Spec(A);
// asserts Q(A) equals the gram-adjoint of A. Coefficients are real for a
// conjugation-closed spectrum; returned as rationals.
std::vector<Rat> adjoint_polynomial(const RatMat& A, const RatMat& gram, double tol = 1e-9);

// The full family of closed 1-forms alpha with dH = alpha ^ H for the metric
// the data was extracted with, by the case split on (a, v, Re Spec A).
// Expressed on the ambient coframe. Throws std::domain_error if the data is
// not twisted-SKT-admissible.
AlphaSpace construct_alpha(const AlmostAbelianData& data, double tol = 1e-9);

// Element of the metric family: h on n_1 (J1-Hermitian, A-normalizing) and
// u = c e_1 + w with c != 0.
struct MetricFamilyElement {
  RatMat h;
  Rat c;
  RatVec w;
};

struct TransformedData {
  Rat a_u;
  RatVec v_u;
  RatMat A_u;
  RatMat P;  // change of basis on n_1 (old frame -> h-orthonormal frame)
};

// a^u = c a, A^u = c P^-1 A P, P v^u = c^2 v + c (A - a Id) w.
TransformedData transform_data(const AlmostAbelianData& data, const MetricFamilyElement& elt);

// Tr(A) = 0 and v in Im(A - a Id).
bool exists_kahler(const AlmostAbelianData& data, double tol = 1e-9);

// v in Im(A - a Id), or {b v + (A - a Id) x : b != 0} meets ker(A*) \ {0}.
bool exists_lcb(const AlmostAbelianData& data);

// a^2 - a Tr(A)/2 = 0 with v in Im(A - a Id), or a^2 - a Tr(A)/2 < 0 with the
// kernel-intersection condition above.
bool exists_brf(const AlmostAbelianData& data, double tol = 1e-9);

// [Jx, y] = J[x, y] for all x, y.
bool bi_invariance_check(const LieAlgebra& g, const RatMat& J);

}  // namespace skt
