#include "skt/verdicts.hpp"

#include <bit>
#include <stdexcept>

namespace skt {

namespace {

// Reduce w by RREF rows (each row's pivot is its first nonzero, equal to 1).
RatVec reduce_mod_rows(RatVec w, const std::vector<RatVec>& rows) {
  for (const auto& row : rows) {
    int pivot = -1;
    for (size_t j = 0; j < row.size(); ++j)
      if (sgn(row[j]) != 0) {
        pivot = static_cast<int>(j);
        break;
      }
    if (pivot < 0) continue;
    Rat f = w[static_cast<size_t>(pivot)];
    if (sgn(f) == 0) continue;
    for (size_t j = 0; j < w.size(); ++j) w[j] -= f * row[j];
  }
  return w;
}

}  // namespace

AlphaSpace AlphaSpace::affine(int dim, RatVec particular, std::vector<RatVec> basis) {
  AlphaSpace s;
  s.dim = dim;
  if (!basis.empty()) {
    RatMat m(static_cast<int>(basis.size()), dim);
    for (size_t r = 0; r < basis.size(); ++r)
      for (int c = 0; c < dim; ++c) m(static_cast<int>(r), c) = basis[r][static_cast<size_t>(c)];
    m.rref();
    for (int r = 0; r < m.rows(); ++r) {
      RatVec row(static_cast<size_t>(dim));
      bool nonzero = false;
      for (int c = 0; c < dim; ++c) {
        row[static_cast<size_t>(c)] = m(r, c);
        nonzero = nonzero || sgn(m(r, c)) != 0;
      }
      if (nonzero) s.basis.push_back(std::move(row));
    }
  }
  s.particular = reduce_mod_rows(std::move(particular), s.basis);
  return s;
}

bool AlphaSpace::contains(const RatVec& w) const {
  if (!particular) return false;
  RatVec diff = w - *particular;
  return vec_is_zero(reduce_mod_rows(std::move(diff), basis));
}

bool AlphaSpace::contains_zero() const { return particular && vec_is_zero(*particular); }

bool AlphaSpace::has_nonzero() const {
  if (!particular) return false;
  return !vec_is_zero(*particular) || !basis.empty();
}

Form AlphaSpace::particular_form(int ambient_dim) const {
  Form f(ambient_dim, 1);
  if (!particular) return f;
  for (int i = 0; i < dim; ++i) f.add_coeff(1u << i, (*particular)[static_cast<size_t>(i)]);
  return f;
}

AlphaSpace AlphaSpace::transformed(const RatMat& S) const {
  if (!particular) return empty_space(dim);
  RatMat st = S.transpose();
  RatVec p = st.apply(*particular);
  std::vector<RatVec> b;
  for (const auto& row : basis) b.push_back(st.apply(row));
  return affine(dim, std::move(p), std::move(b));
}

bool operator==(const AlphaSpace& a, const AlphaSpace& b) {
  if (a.dim != b.dim) return false;
  if (a.particular.has_value() != b.particular.has_value()) return false;
  if (a.basis != b.basis) return false;
  if (!a.particular) return true;
  return *a.particular == *b.particular;
}

AlphaSpace solve_alpha(const LieAlgebra& g, const HermitianStructure& h) {
  int n = g.dim();
  Form H = bismut_torsion(g, h);
  Form dH = ce_d(g, H);

  // rows: closedness  alpha([e_i, e_j]) = 0, then  (alpha ^ H)_M = (dH)_M
  std::vector<RatVec> rows;
  std::vector<Rat> rhs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      RatVec br = g.bracket_basis(i, j);
      if (vec_is_zero(br)) continue;
      rows.push_back(br);
      rhs.emplace_back(0);
    }
  std::vector<Form> wedges;
  wedges.reserve(static_cast<size_t>(n));
  for (int m = 0; m < n; ++m) wedges.push_back(wedge(Form::basis(n, {m}), H));
  uint32_t full = (n >= 32) ? ~0u : ((1u << n) - 1);
  for (uint32_t mask = 0; mask <= full; ++mask) {
    if (std::popcount(mask) != 4) continue;
    RatVec row(static_cast<size_t>(n), Rat(0));
    bool any = false;
    for (int m = 0; m < n; ++m) {
      Rat c = wedges[static_cast<size_t>(m)].coeff(mask);
      if (sgn(c) != 0) {
        row[static_cast<size_t>(m)] = c;
        any = true;
      }
    }
    Rat b = dH.coeff(mask);
    if (!any && sgn(b) == 0) continue;
    rows.push_back(std::move(row));
    rhs.push_back(std::move(b));
  }

  RatMat M(static_cast<int>(rows.size()), n);
  for (size_t r = 0; r < rows.size(); ++r)
    for (int c = 0; c < n; ++c) M(static_cast<int>(r), c) = rows[r][static_cast<size_t>(c)];
  auto part = solve_linear(M, rhs);
  if (!part) return AlphaSpace::empty_space(n);
  return AlphaSpace::affine(n, *part, M.kernel_basis());
}

namespace {

// Symmetric part w.r.t. the frame metric: S_g(M) = 0 iff G M + M^T G = 0.
bool g_symmetric_part_vanishes(const RatMat& G, const RatMat& M) {
  return (G * M + M.transpose() * G).is_zero_mat();
}

struct AlphaOnFrame {
  Rat at_e1;
  RatVec on_n1;
  Rat at_e2n;
};

AlphaOnFrame restrict_alpha(const AlmostAbelianData& data, const RatVec& alpha_ambient) {
  AlphaOnFrame r;
  r.at_e1 = dot(alpha_ambient, data.frame.col(0));
  r.on_n1.assign(static_cast<size_t>(data.d1()), Rat(0));
  for (int k = 0; k < data.d1(); ++k)
    r.on_n1[static_cast<size_t>(k)] = dot(alpha_ambient, data.frame.col(k + 1));
  r.at_e2n = dot(alpha_ambient, data.frame.col(data.dim - 1));
  return r;
}

}  // namespace

bool check_skt(const AlmostAbelianData& data) {
  RatMat M = data.A * data.a + data.A * data.A + data.metric_adjoint_A() * data.A;
  return g_symmetric_part_vanishes(data.G1, M);
}

bool check_kahler(const AlmostAbelianData& data) {
  if (!vec_is_zero(data.v)) return false;
  return g_symmetric_part_vanishes(data.G1, data.A);
}

bool check_lcskt_conditions(const AlmostAbelianData& data, const RatVec& alpha_ambient) {
  AlphaOnFrame al = restrict_alpha(data, alpha_ambient);
  int d1 = data.d1();
  // (1) alpha(a e_1 + v) = 0
  Rat c1 = data.a * al.at_e1 + dot(al.on_n1, data.v);
  if (sgn(c1) != 0) return false;
  // (2) alpha o A = 0 on n_1
  RatVec aoA = data.A.transpose().apply(al.on_n1);
  if (!vec_is_zero(aoA)) return false;
  // (3) alpha(X) g(S J1 Y, Z) - alpha(Y) g(S J1 X, Z) + alpha(Z) g(S J1 Y, X) = 0,
  // for X, Y, Z in the n_1 frame (J1 lives on n_1)
  RatMat S = (data.A + data.metric_adjoint_A()) * rat(1, 2);
  RatMat P = (S * data.J1).transpose() * data.G1;  // P(y, z) = g(S J1 e_y, e_z)
  for (int x = 0; x < d1; ++x)
    for (int y = 0; y < d1; ++y)
      for (int z = 0; z < d1; ++z) {
        Rat t = al.on_n1[static_cast<size_t>(x)] * P(y, z) - al.on_n1[static_cast<size_t>(y)] * P(x, z) +
                al.on_n1[static_cast<size_t>(z)] * P(y, x);
        if (sgn(t) != 0) return false;
      }
  // (4) g(C J1 Y, Z) = (g(v, Y) alpha(Z) - g(v, Z) alpha(Y)) / 2,
  // C the g-symmetric part of (a + alpha(e_2n)) A + A^2 + A* A
  RatMat M = data.A * (data.a + al.at_e2n) + data.A * data.A + data.metric_adjoint_A() * data.A;
  auto g1_inv = data.G1.inverse();
  RatMat C = (M + (*g1_inv) * M.transpose() * data.G1) * rat(1, 2);
  RatMat Q = (C * data.J1).transpose() * data.G1;  // Q(y, z) = g(C J1 e_y, e_z)
  RatVec gv = data.G1.apply(data.v);
  for (int y = 0; y < d1; ++y)
    for (int z = 0; z < d1; ++z) {
      Rat rhs = (gv[static_cast<size_t>(y)] * al.on_n1[static_cast<size_t>(z)] -
                 gv[static_cast<size_t>(z)] * al.on_n1[static_cast<size_t>(y)]) /
                2;
      if (Q(y, z) != rhs) return false;
    }
  return true;
}

bool check_antisym_consequence(const AlmostAbelianData& data, const RatVec& alpha_ambient) {
  AlphaOnFrame al = restrict_alpha(data, alpha_ambient);
  RatMat M = data.A * (data.a + al.at_e2n) + data.A * data.A + data.metric_adjoint_A() * data.A;
  return g_symmetric_part_vanishes(data.G1, M);
}

bool check_lcb(const AlmostAbelianData& data) { return vec_is_zero(data.adjoint_applied_v()); }

bool check_brf(const AlmostAbelianData& data) { return bismut_ricci_flat(data); }

StructureVerdict evaluate_structure(const LieAlgebra& g, const HermitianStructure& h, double tol) {
  StructureVerdict v;
  v.torsion = bismut_torsion(g, h);
  v.dtorsion = ce_d(g, v.torsion);
  v.alpha_space = solve_alpha(g, h);
  v.lee = lee_form(g, h);

  v.kaehler = v.torsion.is_zero();
  v.skt = v.dtorsion.is_zero();
  v.twisted_skt = v.alpha_space.solvable();
  v.lcskt = v.alpha_space.has_nonzero();
  v.balanced = v.lee.is_zero();
  Form dlee = ce_d(g, v.lee);
  v.lcb = dlee.is_zero();

  if (v.skt != v.alpha_space.contains_zero())
    throw std::logic_error("verdict: dH = 0 disagrees with 0 in alpha space");

  ExtractionError err;
  v.data = extract_data(g, h.J, h.metric, &err);
  if (v.data) {
    const AlmostAbelianData& d = *v.data;
    if (check_kahler(d) != v.kaehler)
      throw std::logic_error("verdict: Kahler criterion (v, A) disagrees with H = 0");
    if (check_skt(d) != v.skt)
      throw std::logic_error("verdict: SKT criterion on (a, v, A) disagrees with dH = 0");
    if (check_lcb(d) != v.lcb)
      throw std::logic_error("verdict: LCB criterion A*v = 0 disagrees with d(theta) = 0");
    v.bismut_ricci_flat = check_brf(d);
    v.spectrum = eigen(d.A, tol);
  }
  return v;
}

}  // namespace skt
