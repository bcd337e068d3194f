#include "skt/spectral_decision.hpp"

#include <algorithm>
#include <stdexcept>

namespace skt {

namespace {

RatMat auxiliary_metric(const RatMat& J) {
  RatMat g = J.transpose() * J;
  for (int i = 0; i < g.rows(); ++i) g(i, i) += 1;
  return g;
}

bool antisym_wrt(const RatMat& G, const RatMat& A) {
  return (G * A + A.transpose() * G).is_zero_mat();
}

// Distinct certified-exact eigenvalues in lexicographic (Re, Im) order.
std::vector<GRat> exact_spectrum_sorted(const SpectralReport& rep) {
  std::vector<GRat> vals;
  for (const auto& ev : rep.eigenvalues) {
    if (!ev.exact) throw std::domain_error("spectrum not certified exact");
    vals.push_back(*ev.exact);
  }
  std::sort(vals.begin(), vals.end(), grat_less);
  return vals;
}

}  // namespace

ExistenceReport exists_twisted_skt(const LieAlgebra& g, const RatMat& J, double tol) {
  ExtractionError err;
  auto data = extract_data(g, J, auxiliary_metric(J), &err);
  if (!data) throw std::domain_error("exists_twisted_skt: " + err.reason);
  ExistenceReport rep;
  rep.data = *data;
  rep.spectrum = eigen(data->A, tol);
  rep.exists = rep.spectrum.diagonalizable && rep.spectrum.real_parts_in_zero_mu(tol);
  return rep;
}

bool exists_lcskt(const LieAlgebra& g, const RatMat& J, double tol) {
  ExistenceReport rep = exists_twisted_skt(g, J, tol);
  if (!rep.exists) return false;
  if (!rep.spectrum.mu) return true;  // every real part vanishes
  if (rep.spectrum.mu_exact) return *rep.spectrum.mu_exact != -rep.data.a / 2;
  return std::abs(*rep.spectrum.mu + to_double(rep.data.a) / 2) > tol;
}

RatMat construct_normalizing_metric(const RatMat& A, const RatMat& J1, double tol) {
  int d = A.rows();
  if (!(A * J1 == J1 * A)) throw std::domain_error("construct_normalizing_metric: [A, J1] != 0");
  SpectralReport rep = eigen(A, tol);
  if (!rep.diagonalizable)
    throw std::domain_error("construct_normalizing_metric: A is not diagonalizable");
  std::vector<GRat> lambdas = exact_spectrum_sorted(rep);

  GMat Ac = to_gmat(A);
  std::vector<std::vector<GRat>> columns;
  for (const GRat& lam : lambdas) {
    GMat shifted = Ac;
    for (int i = 0; i < d; ++i) shifted(i, i) -= lam;
    for (auto& vec : shifted.kernel_basis()) columns.push_back(std::move(vec));
  }
  if (static_cast<int>(columns.size()) != d)
    throw std::domain_error("construct_normalizing_metric: eigenbasis incomplete");
  GMat P = from_columns(columns);
  auto Pinv = P.inverse();
  if (!Pinv) throw std::domain_error("construct_normalizing_metric: degenerate eigenbasis");
  // M = conj(P^-T) P^-1, Hermitian positive definite
  GMat PinvT = Pinv->transpose();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) PinvT(i, j) = PinvT(i, j).conj();
  GMat M = PinvT * (*Pinv);
  RatMat ReM(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) ReM(i, j) = M(i, j).re;
  RatMat G = (ReM + J1.transpose() * ReM * J1) * rat(1, 2);
  if (!is_positive_definite(G))
    throw std::logic_error("construct_normalizing_metric: result not positive definite");
  if (!(J1.transpose() * G * J1 == G))
    throw std::logic_error("construct_normalizing_metric: result not J-compatible");
  auto gi = G.inverse();
  RatMat adj = (*gi) * A.transpose() * G;
  if (!(A * adj == adj * A))
    throw std::logic_error("construct_normalizing_metric: A not normal for the built metric");
  return G;
}

std::vector<Rat> adjoint_polynomial(const RatMat& A, const RatMat& gram, double tol) {
  SpectralReport rep = eigen(A, tol);
  std::vector<GRat> lambdas = exact_spectrum_sorted(rep);
  // Lagrange interpolation of conj through the distinct eigenvalues
  size_t m = lambdas.size();
  std::vector<GRat> coeff(m, GRat(0));
  for (size_t i = 0; i < m; ++i) {
    // numerator polynomial prod_{j != i} (x - lambda_j), scaled
    std::vector<GRat> num(1, GRat(1));
    GRat denom(1);
    for (size_t j = 0; j < m; ++j) {
      if (j == i) continue;
      std::vector<GRat> next(num.size() + 1, GRat(0));
      for (size_t k = 0; k < num.size(); ++k) {
        next[k + 1] += num[k];
        next[k] -= num[k] * lambdas[j];
      }
      num = std::move(next);
      denom *= lambdas[i] - lambdas[j];
    }
    GRat scale = lambdas[i].conj() / denom;
    for (size_t k = 0; k < num.size(); ++k) coeff[k] += num[k] * scale;
  }
  std::vector<Rat> qreal;
  for (const auto& c : coeff) {
    if (sgn(c.im) != 0)
      throw std::logic_error("adjoint_polynomial: non-real coefficient on a conjugate-closed spectrum");
    qreal.push_back(c.re);
  }
  // certify Q(A) = gram-adjoint of A
  RatMat acc = RatMat::zero(A.rows(), A.cols());
  RatMat power = RatMat::identity(A.rows());
  for (size_t k = 0; k < qreal.size(); ++k) {
    acc = acc + power * qreal[k];
    power = power * A;
  }
  auto gi = gram.inverse();
  RatMat adj = (*gi) * A.transpose() * gram;
  if (!(acc == adj)) throw std::domain_error("adjoint_polynomial: A is not normal for this gram");
  return qreal;
}

AlphaSpace construct_alpha(const AlmostAbelianData& data, double tol) {
  int n = data.dim;
  int d1 = data.d1();
  SpectralReport rep = eigen(data.A, tol);
  if (!rep.diagonalizable || !rep.real_parts_in_zero_mu(tol))
    throw std::domain_error("construct_alpha: data is not twisted-SKT-admissible");

  bool antisym = antisym_wrt(data.G1, data.A);
  auto e1 = [&] {
    RatVec w(static_cast<size_t>(n), Rat(0));
    w[0] = 1;
    return w;
  };
  auto e2n = [&] {
    RatVec w(static_cast<size_t>(n), Rat(0));
    w[static_cast<size_t>(n - 1)] = 1;
    return w;
  };
  auto lift_n1 = [&](const RatVec& beta) {
    RatVec w(static_cast<size_t>(n), Rat(0));
    for (int k = 0; k < d1; ++k) w[static_cast<size_t>(k + 1)] = beta[static_cast<size_t>(k)];
    return w;
  };

  RatVec particular(static_cast<size_t>(n), Rat(0));
  std::vector<RatVec> basis;
  bool a_zero = sgn(data.a) == 0;
  bool v_zero = vec_is_zero(data.v);

  if (!antisym) {
    // some real part mu != 0: alpha pinned on e^{2n}, free e^1 only when a = 0
    if (!rep.mu_exact)
      throw std::domain_error("construct_alpha: nonzero real part not certified exact");
    Rat mu = *rep.mu_exact;
    particular[static_cast<size_t>(n - 1)] = -data.a - 2 * mu;
    if (a_zero) basis.push_back(e1());
  } else {
    basis.push_back(e2n());
    if (v_zero) {
      if (a_zero) basis.push_back(e1());
      // beta on n_1 with beta o A = 0: left null space of A
      for (auto& beta : data.A.transpose().kernel_basis()) basis.push_back(lift_n1(beta));
    } else if (a_zero) {
      basis.push_back(e1());
    } else if (vec_is_zero(data.adjoint_applied_v())) {
      // |v|^2 e^1 - a v-flat
      RatVec combo = lift_n1(Rat(-data.a) * data.v_flat());
      combo[0] = data.v_norm2();
      basis.push_back(combo);
    }
  }

  AlphaSpace frame_space = AlphaSpace::affine(n, std::move(particular), std::move(basis));
  auto finv = data.frame.inverse();
  if (!finv) throw std::logic_error("construct_alpha: degenerate frame");
  return frame_space.transformed(*finv);
}

TransformedData transform_data(const AlmostAbelianData& data, const MetricFamilyElement& elt) {
  if (sgn(elt.c) == 0) throw std::domain_error("transform_data: u must leave n_1 (c != 0)");
  int d1 = data.d1();
  RatMat P = RatMat::identity(d1);
  if (!(elt.h == data.G1)) {
    // J-adapted Gram-Schmidt for h: columns of P are the new frame in old
    // n_1 coordinates. Needs rational normalizers.
    if (!(data.J1.transpose() * elt.h * data.J1 == elt.h))
      throw std::domain_error("transform_data: h is not J1-compatible");
    std::vector<RatVec> chosen;
    auto h_dot = [&](const RatVec& x, const RatVec& y) { return dot(x, elt.h.apply(y)); };
    for (int cand = 0; cand < d1 && static_cast<int>(chosen.size()) < d1; ++cand) {
      RatVec u(static_cast<size_t>(d1), Rat(0));
      u[static_cast<size_t>(cand)] = 1;
      for (const auto& prev : chosen) {
        Rat proj = h_dot(prev, u) / h_dot(prev, prev);
        u = u - proj * prev;
      }
      if (vec_is_zero(u)) continue;
      chosen.push_back(u);
      chosen.push_back(data.J1.apply(u));
    }
    if (static_cast<int>(chosen.size()) != d1)
      throw std::domain_error("transform_data: failed to build h-adapted frame");
    for (auto& u : chosen) {
      auto root = rat_sqrt(h_dot(u, u));
      if (!root) throw std::domain_error("transform_data: h-norm is not a rational square");
      u = (Rat(1) / *root) * u;
    }
    P = from_columns(chosen);
  }
  auto Pinv = P.inverse();
  TransformedData out;
  out.P = P;
  out.a_u = elt.c * data.a;
  out.A_u = (*Pinv) * data.A * P * elt.c;
  RatMat shifted = data.A;
  for (int i = 0; i < d1; ++i) shifted(i, i) -= data.a;
  Rat c2 = elt.c * elt.c;
  RatVec rhs = c2 * data.v + elt.c * shifted.apply(elt.w);
  out.v_u = Pinv->apply(rhs);
  return out;
}

bool exists_kahler(const AlmostAbelianData& data, double tol) {
  (void)tol;
  if (sgn(data.A.trace()) != 0) return false;
  RatMat shifted = data.A;
  for (int i = 0; i < data.d1(); ++i) shifted(i, i) -= data.a;
  return in_column_span(shifted, data.v);
}

namespace {

// Decides whether {b v + (A - a Id) x : b != 0, x in n_1} meets
// ker(A^*) \ {0}: solve A^T G (b v + (A - a Id) x) = 0 and ask for a solution
// with b != 0 and a solution with nonzero image (linearity combines them).
bool family_meets_kernel(const AlmostAbelianData& data) {
  int d1 = data.d1();
  RatMat shifted = data.A;
  for (int i = 0; i < d1; ++i) shifted(i, i) -= data.a;
  RatMat lead = data.A.transpose() * data.G1;
  RatMat sys(d1, 1 + d1);
  RatVec leadv = lead.apply(data.v);
  RatMat ls = lead * shifted;
  for (int r = 0; r < d1; ++r) {
    sys(r, 0) = leadv[static_cast<size_t>(r)];
    for (int c = 0; c < d1; ++c) sys(r, c + 1) = ls(r, c);
  }
  auto sols = sys.kernel_basis();
  bool some_b = false, some_image = false;
  for (const auto& s : sols) {
    if (sgn(s[0]) != 0) some_b = true;
    RatVec x(s.begin() + 1, s.end());
    RatVec img = s[0] * data.v + shifted.apply(x);
    if (!vec_is_zero(img)) some_image = true;
  }
  return some_b && some_image;
}

}  // namespace

bool exists_lcb(const AlmostAbelianData& data) {
  RatMat shifted = data.A;
  for (int i = 0; i < data.d1(); ++i) shifted(i, i) -= data.a;
  if (in_column_span(shifted, data.v)) return true;
  return family_meets_kernel(data);
}

bool exists_brf(const AlmostAbelianData& data, double tol) {
  (void)tol;
  Rat scalar = data.a * data.a - data.a * data.A.trace() / 2;
  if (sgn(scalar) == 0) {
    RatMat shifted = data.A;
    for (int i = 0; i < data.d1(); ++i) shifted(i, i) -= data.a;
    return in_column_span(shifted, data.v);
  }
  if (sgn(scalar) < 0) return family_meets_kernel(data);
  return false;
}

bool bi_invariance_check(const LieAlgebra& g, const RatMat& J) {
  int n = g.dim();
  for (int i = 0; i < n; ++i) {
    RatVec ei(static_cast<size_t>(n), Rat(0));
    ei[static_cast<size_t>(i)] = 1;
    RatVec jei = J.apply(ei);
    for (int j = 0; j < n; ++j) {
      RatVec ej(static_cast<size_t>(n), Rat(0));
      ej[static_cast<size_t>(j)] = 1;
      RatVec lhs = g.bracket(jei, ej);
      RatVec rhs = J.apply(g.bracket(ei, ej));
      if (!(lhs == rhs)) return false;
    }
  }
  return true;
}

}  // namespace skt
