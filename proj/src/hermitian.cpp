#include "skt/hermitian.hpp"

#include <stdexcept>

#include "skt/spectral.hpp"

namespace skt {

HermitianStructure HermitianStructure::make(const RatMat& J, const RatMat& metric) {
  int n = J.rows();
  if (!J.square() || !metric.square() || metric.rows() != n)
    throw std::domain_error("HermitianStructure: shape mismatch");
  RatMat j2 = J * J;
  for (int i = 0; i < n; ++i) j2(i, i) += 1;
  if (!j2.is_zero_mat()) throw std::domain_error("HermitianStructure: J^2 != -Id");
  if (!is_positive_definite(metric))
    throw std::domain_error("HermitianStructure: metric not positive definite");
  if (!(J.transpose() * metric * J == metric))
    throw std::domain_error("HermitianStructure: metric not J-compatible");
  HermitianStructure h;
  h.J = J;
  h.metric = metric;
  h.omega = fundamental_form(J, metric);
  return h;
}

NijenhuisTable nijenhuis(const LieAlgebra& g, const RatMat& J) {
  int n = g.dim();
  NijenhuisTable tab;
  tab.n.assign(static_cast<size_t>(n), std::vector<RatVec>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      RatVec ei(static_cast<size_t>(n), Rat(0)), ej(static_cast<size_t>(n), Rat(0));
      ei[static_cast<size_t>(i)] = 1;
      ej[static_cast<size_t>(j)] = 1;
      RatVec ji = J.apply(ei), jj = J.apply(ej);
      RatVec value = g.bracket(ji, jj) - g.bracket(ei, ej) -
                     J.apply(g.bracket(ji, ej)) - J.apply(g.bracket(ei, jj));
      if (!vec_is_zero(value) && tab.all_zero) {
        tab.all_zero = false;
        tab.witness = {i, j};
      }
      tab.n[static_cast<size_t>(i)][static_cast<size_t>(j)] = std::move(value);
    }
  return tab;
}

Form fundamental_form(const RatMat& J, const RatMat& metric) {
  int n = J.rows();
  Form omega(n, 2);
  RatMat jm = J.transpose() * metric;  // omega(e_i, e_j) = g(J e_i, e_j) = (J^T g)_{ij}
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) omega.add_coeff((1u << i) | (1u << j), jm(i, j));
  return omega;
}

Form bismut_torsion(const LieAlgebra& g, const HermitianStructure& h) {
  NijenhuisTable nij = nijenhuis(g, h.J);
  if (!nij.all_zero) {
    auto [i, j] = *nij.witness;
    throw std::domain_error("bismut_torsion: J not integrable, N(e_" + std::to_string(i + 1) +
                            ", e_" + std::to_string(j + 1) + ") != 0");
  }
  Form domega = ce_d(g, h.omega);
  return -pullback(h.J, domega);
}

Form lee_form(const LieAlgebra& g, const HermitianStructure& h, bool check_dual_path) {
  Form dstar = codifferential(g, h.metric, h.omega);
  Form theta = j_act_one_form(h.J, dstar);
  if (check_dual_path) {
    ExtractionError err;
    auto data = extract_data(g, h.J, h.metric, &err);
    bool unit_normal = false;
    if (data) {
      RatVec e2n_vec = data->frame.col(data->dim - 1);
      unit_normal = dot(e2n_vec, h.metric.apply(e2n_vec)) == 1;
    }
    if (data && data->orthonormal() && unit_normal) {
      int n = g.dim();
      Rat tr = data->A.trace();
      // -Tr(A) e^{2n} + (Jv)-flat, pushed to ambient coordinates through the
      // frame: a coframe 1-form with coefficients w pulls back to w' = S^{-T} w
      // ... equivalently build the ambient 1-form directly from vectors.
      RatVec v_amb(static_cast<size_t>(n), Rat(0));
      for (int k = 0; k < data->d1(); ++k) {
        RatVec fk = data->frame.col(k + 1);
        for (int r = 0; r < n; ++r) v_amb[static_cast<size_t>(r)] += data->v[static_cast<size_t>(k)] * fk[static_cast<size_t>(r)];
      }
      RatVec jv = h.J.apply(v_amb);
      Form closed = flat(h.metric, jv);
      RatVec e2n = data->frame.col(n - 1);
      Form e2n_flat = flat(h.metric, e2n);
      closed = closed - e2n_flat * tr;
      if (!(closed == theta))
        throw std::logic_error("lee_form: codifferential path disagrees with closed form");
    }
  }
  return theta;
}

Form bismut_ricci(const AlmostAbelianData& data) {
  int n = data.dim;
  Rat tr = data.A.trace();
  Rat scalar = data.a * data.a - data.a * tr / 2 + data.v_norm2();
  // coframe of the adapted frame: rows of frame^{-1}
  auto finv_opt = data.frame.inverse();
  if (!finv_opt) throw std::domain_error("bismut_ricci: degenerate frame");
  const RatMat& finv = *finv_opt;
  auto coframe = [&](int row) {
    Form f(n, 1);
    for (int c = 0; c < n; ++c) f.add_coeff(1u << c, finv(row, c));
    return f;
  };
  Form e1 = coframe(0);
  Form e2n = coframe(n - 1);
  Form rho = wedge(e1, e2n) * (-scalar);
  RatVec atv = data.adjoint_applied_v();  // coefficients of (A^* v)-flat on the n_1 coframe
  Form atv_flat(n, 1);
  for (int k = 0; k < data.d1(); ++k) {
    if (sgn(atv[static_cast<size_t>(k)]) == 0) continue;
    Form ck = coframe(k + 1);
    atv_flat = atv_flat + ck * atv[static_cast<size_t>(k)];
  }
  rho = rho - wedge(atv_flat, e2n);
  return rho;
}

bool bismut_ricci_flat(const AlmostAbelianData& data) {
  Rat tr = data.A.trace();
  Rat scalar = data.a * data.a - data.a * tr / 2 + data.v_norm2();
  return sgn(scalar) == 0 && vec_is_zero(data.adjoint_applied_v());
}

}  // namespace skt
