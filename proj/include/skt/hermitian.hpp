#pragma once

#include <optional>

#include "skt/forms.hpp"
#include "skt/liealg.hpp"

namespace skt {

// Almost complex structure + compatible inner product; omega is derived.
struct HermitianStructure {
  RatMat J;
  RatMat metric;
  Form omega;

  // Throws std::domain_error unless J^2 = -Id, metric is SPD and
  // J^T metric J = metric.
  static HermitianStructure make(const RatMat& J, const RatMat& metric);
};

// All components N(e_i, e_j); integrable iff every entry vanishes.
struct NijenhuisTable {
  std::vector<std::vector<RatVec>> n;  // n[i][j], antisymmetric
  bool all_zero = true;
  std::optional<std::pair<int, int>> witness;  // first nonzero pair
};

NijenhuisTable nijenhuis(const LieAlgebra& g, const RatMat& J);

Form fundamental_form(const RatMat& J, const RatMat& metric);

// H = -domega(J., J., J.). Throws std::domain_error when J is not integrable
// on g (the torsion 3-form of the skew-torsion Hermitian connection only
// exists in the integrable case).
Form bismut_torsion(const LieAlgebra& g, const HermitianStructure& h);

// Lee form via J d* omega. When the almost abelian data extracts with an
// orthonormal frame, the closed form -Tr(A) e^{2n} + (Jv)-flat is computed as
// well and the two paths are asserted equal (the sign-convention canary; see
// check_dual_path).
Form lee_form(const LieAlgebra& g, const HermitianStructure& h, bool check_dual_path = true);

// Bismut Ricci form of almost abelian data in an adapted frame, as a 2-form
// on the ambient space:
//   rho = -(a^2 - a Tr(A)/2 + |v|^2) e^1 ^ e^2n - (flat of A-adjoint v) ^ e^2n
Form bismut_ricci(const AlmostAbelianData& data);

// Scalar/vector vanishing conditions of rho^B: a^2 - a Tr(A)/2 = -|v|^2 and
// the metric adjoint of A kills v.
bool bismut_ricci_flat(const AlmostAbelianData& data);

}  // namespace skt
