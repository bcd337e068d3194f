#include "skt/liealg.hpp"

#include <algorithm>
#include <stdexcept>

namespace skt {

RatVec LieAlgebra::bracket_basis(int i, int j) const {
  RatVec r(static_cast<size_t>(n_), Rat(0));
  for (int k = 0; k < n_; ++k) r[static_cast<size_t>(k)] = c(k, i, j);
  return r;
}

RatVec LieAlgebra::bracket(const RatVec& x, const RatVec& y) const {
  RatVec r(static_cast<size_t>(n_), Rat(0));
  for (int i = 0; i < n_; ++i) {
    if (sgn(x[static_cast<size_t>(i)]) == 0) continue;
    for (int j = 0; j < n_; ++j) {
      if (sgn(y[static_cast<size_t>(j)]) == 0) continue;
      Rat f = x[static_cast<size_t>(i)] * y[static_cast<size_t>(j)];
      for (int k = 0; k < n_; ++k) {
        const Rat& ck = c(k, i, j);
        if (sgn(ck) != 0) r[static_cast<size_t>(k)] += f * ck;
      }
    }
  }
  return r;
}

RatMat LieAlgebra::ad(const RatVec& x) const {
  RatMat m(n_, n_);
  for (int j = 0; j < n_; ++j) {
    RatVec ej(static_cast<size_t>(n_), Rat(0));
    ej[static_cast<size_t>(j)] = 1;
    RatVec br = bracket(x, ej);
    m.set_col(j, br);
  }
  return m;
}

bool LieAlgebra::jacobi_check() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      for (int k = j + 1; k < n_; ++k)
        for (int l = 0; l < n_; ++l) {
          Rat s(0);
          for (int m = 0; m < n_; ++m)
            s += c(m, i, j) * c(l, m, k) + c(m, j, k) * c(l, m, i) + c(m, k, i) * c(l, m, j);
          if (sgn(s) != 0) return false;
        }
  return true;
}

bool LieAlgebra::unimodular_check() const {
  for (int i = 0; i < n_; ++i) {
    Rat tr(0);
    for (int j = 0; j < n_; ++j) tr += c(j, i, j);
    if (sgn(tr) != 0) return false;
  }
  return true;
}

std::vector<RatVec> LieAlgebra::derived_algebra() const {
  RatMat span(n_, n_ * (n_ - 1) / 2);
  int col = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) span.set_col(col++, bracket_basis(i, j));
  RatMat rred = span.transpose();
  std::vector<int> piv = rred.rref();
  std::vector<RatVec> basis;
  for (size_t r = 0; r < piv.size(); ++r) {
    RatVec row(static_cast<size_t>(n_));
    for (int c2 = 0; c2 < n_; ++c2) row[static_cast<size_t>(c2)] = rred(static_cast<int>(r), c2);
    basis.push_back(std::move(row));
  }
  return basis;
}

LieAlgebra build_from_data(const Rat& a, const RatVec& v, const RatMat& A) {
  int d1 = A.rows();
  if (!A.square() || static_cast<int>(v.size()) != d1)
    throw std::invalid_argument("build_from_data: shape mismatch");
  int n = d1 + 2;
  LieAlgebra g(n);
  int last = n - 1;
  // [e_{2n}, e_1] = a e_1 + v
  g.set_bracket(last, 0, 0, a);
  for (int k = 0; k < d1; ++k) g.set_bracket(last, 0, k + 1, v[static_cast<size_t>(k)]);
  // [e_{2n}, e_{k+1}] = A e_k  on n_1
  for (int j = 0; j < d1; ++j)
    for (int k = 0; k < d1; ++k) g.set_bracket(last, j + 1, k + 1, A(k, j));
  return g;
}

namespace {

bool hyperplane_is_abelian_ideal(const LieAlgebra& g, const RatVec& functional) {
  int n = g.dim();
  RatMat rowm(1, n);
  for (int j = 0; j < n; ++j) rowm(0, j) = functional[static_cast<size_t>(j)];
  auto basis = rowm.kernel_basis();
  if (static_cast<int>(basis.size()) != n - 1) return false;
  // abelian: brackets of kernel vectors vanish
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j)
      if (!vec_is_zero(g.bracket(basis[i], basis[j]))) return false;
  // ideal: [g, kernel] stays in the kernel
  for (int i = 0; i < n; ++i) {
    RatVec ei(static_cast<size_t>(n), Rat(0));
    ei[static_cast<size_t>(i)] = 1;
    for (const auto& kv : basis) {
      RatVec br = g.bracket(ei, kv);
      if (sgn(dot(functional, br)) != 0) return false;
    }
  }
  return true;
}

}  // namespace

std::optional<std::vector<RatVec>> find_codim1_abelian_ideal(const LieAlgebra& g) {
  int n = g.dim();
  auto derived = g.derived_algebra();
  if (derived.empty()) return std::nullopt;  // abelian algebras are out of scope
  // functionals annihilating [g, g]
  RatMat der(static_cast<int>(derived.size()), n);
  for (size_t r = 0; r < derived.size(); ++r)
    for (int c = 0; c < n; ++c) der(static_cast<int>(r), c) = derived[r][static_cast<size_t>(c)];
  auto ann = der.kernel_basis();
  if (ann.empty()) return std::nullopt;

  std::vector<RatVec> candidates;
  for (const auto& f : ann) candidates.push_back(f);
  if (ann.size() > 1) {
    if (n > 8) {
      // solving the quadratic vanishing condition in general is out of scope
      for (const auto& f : candidates)
        if (hyperplane_is_abelian_ideal(g, f)) {
          RatMat rowm(1, n);
          for (int j = 0; j < n; ++j) rowm(0, j) = f[static_cast<size_t>(j)];
          return rowm.kernel_basis();
        }
      return std::nullopt;
    }
    for (size_t i = 0; i < ann.size(); ++i)
      for (size_t j = i + 1; j < ann.size(); ++j) {
        candidates.push_back(ann[i] + ann[j]);
        candidates.push_back(ann[i] - ann[j]);
      }
  }
  for (const auto& f : candidates) {
    if (vec_is_zero(f)) continue;
    if (hyperplane_is_abelian_ideal(g, f)) {
      RatMat rowm(1, n);
      for (int j = 0; j < n; ++j) rowm(0, j) = f[static_cast<size_t>(j)];
      return rowm.kernel_basis();
    }
  }
  return std::nullopt;
}

RatMat canonical_J(int dim) {
  if (dim % 2 != 0 || dim < 2) throw std::invalid_argument("canonical_J: dim must be even");
  RatMat J = RatMat::zero(dim, dim);
  // J f_1 = f_{2n}, J f_{2n} = -f_1
  J(dim - 1, 0) = 1;
  J(0, dim - 1) = -1;
  for (int k = 1; k + 1 < dim - 1; k += 2) {
    J(k + 1, k) = 1;
    J(k, k + 1) = -1;
  }
  return J;
}

RatMat canonical_J1(int d1) {
  if (d1 % 2 != 0) throw std::invalid_argument("canonical_J1: odd dimension");
  RatMat J = RatMat::zero(d1, d1);
  for (int k = 0; k < d1; k += 2) {
    J(k + 1, k) = 1;
    J(k, k + 1) = -1;
  }
  return J;
}

Rat AlmostAbelianData::v_norm2() const {
  RatVec gv = G1.apply(v);
  return dot(v, gv);
}

RatVec AlmostAbelianData::v_flat() const { return G1.apply(v); }

RatVec AlmostAbelianData::adjoint_applied_v() const { return A.transpose().apply(G1.apply(v)); }

RatMat AlmostAbelianData::metric_adjoint_A() const {
  auto gi = G1.inverse();
  return (*gi) * A.transpose() * G1;
}

namespace {

// Coordinates of w in the column span of basis (must be consistent).
std::optional<RatVec> coords_in(const RatMat& basis, const RatVec& w) {
  return solve_linear(basis, w);
}

}  // namespace

std::optional<AlmostAbelianData> extract_data(const LieAlgebra& g, const RatMat& J,
                                              const RatMat& metric, ExtractionError* err,
                                              const RatMat* n1_frame_hint) {
  int n = g.dim();
  auto fail = [&](const std::string& why, RatVec witness = {}) -> std::optional<AlmostAbelianData> {
    if (err) *err = {why, std::move(witness)};
    return std::nullopt;
  };
  if (n % 2 != 0) return fail("odd-dimensional algebra");
  auto ideal = find_codim1_abelian_ideal(g);
  if (!ideal) return fail("no codimension-one abelian ideal found");
  RatMat N = from_columns(*ideal);  // n columns: basis of the ideal

  // e_{2n}: metric-orthogonal complement of the ideal, sign-normalized, unit
  // length when the norm is a rational square.
  RatMat perp(n - 1, n);
  for (int r = 0; r < n - 1; ++r) {
    RatVec gcol = metric.apply(N.col(r));
    for (int c = 0; c < n; ++c) perp(r, c) = gcol[static_cast<size_t>(c)];
  }
  auto perp_basis = perp.kernel_basis();
  if (perp_basis.size() != 1) return fail("orthogonal complement of the ideal is not a line");
  RatVec e2n = perp_basis[0];
  for (const auto& x : e2n) {
    if (sgn(x) != 0) {
      if (sgn(x) < 0)
        for (auto& y : e2n) y = -y;
      break;
    }
  }
  Rat len2 = dot(e2n, metric.apply(e2n));
  if (auto root = rat_sqrt(len2)) e2n = (Rat(1) / *root) * e2n;

  RatVec e1 = Rat(-1) * J.apply(e2n);

  // n_1 = n intersect J n
  RatMat JN(n, n - 1);
  for (int c = 0; c < n - 1; ++c) JN.set_col(c, J.apply(N.col(c)));
  // intersection via the kernel of [N | -JN]
  RatMat stack(n, 2 * (n - 1));
  for (int c = 0; c < n - 1; ++c) {
    stack.set_col(c, N.col(c));
    RatVec jc = JN.col(c);
    for (int r2 = 0; r2 < n; ++r2) stack(r2, n - 1 + c) = -jc[static_cast<size_t>(r2)];
  }
  auto ker = stack.kernel_basis();
  std::vector<RatVec> n1_vectors;
  for (const auto& kv : ker) {
    RatVec w(static_cast<size_t>(n), Rat(0));
    for (int c = 0; c < n - 1; ++c)
      for (int r2 = 0; r2 < n; ++r2) w[static_cast<size_t>(r2)] += kv[static_cast<size_t>(c)] * N(r2, c);
    if (!vec_is_zero(w)) n1_vectors.push_back(std::move(w));
  }
  RatMat n1_span_rows(static_cast<int>(n1_vectors.size()), n);
  for (size_t r2 = 0; r2 < n1_vectors.size(); ++r2)
    for (int c = 0; c < n; ++c) n1_span_rows(static_cast<int>(r2), c) = n1_vectors[r2][static_cast<size_t>(c)];
  std::vector<int> piv = n1_span_rows.rref();
  int d1 = n - 2;
  if (static_cast<int>(piv.size()) != d1) return fail("n intersect Jn has wrong dimension");
  std::vector<RatVec> n1_basis_raw;
  for (size_t r2 = 0; r2 < piv.size(); ++r2) {
    RatVec w(static_cast<size_t>(n));
    for (int c = 0; c < n; ++c) w[static_cast<size_t>(c)] = n1_span_rows(static_cast<int>(r2), c);
    n1_basis_raw.push_back(std::move(w));
  }

  // J-adapted pairing basis of n_1: (u, Ju, u', Ju', ...)
  std::vector<RatVec> adapted;
  if (n1_frame_hint) {
    if (n1_frame_hint->rows() != n || n1_frame_hint->cols() != d1)
      return fail("n1 frame hint has wrong shape");
    for (int c = 0; c < d1; ++c) adapted.push_back(n1_frame_hint->col(c));
  } else {
    RatMat chosen(n, d1);
    int count = 0;
    for (const auto& cand : n1_basis_raw) {
      if (count == d1) break;
      RatMat test(n, count + 2);
      for (int c = 0; c < count; ++c) test.set_col(c, chosen.col(c));
      test.set_col(count, cand);
      test.set_col(count + 1, J.apply(cand));
      if (test.transpose().rank() == count + 2) {
        chosen.set_col(count, cand);
        chosen.set_col(count + 1, J.apply(cand));
        count += 2;
      }
    }
    if (count != d1) return fail("failed to build a J-adapted basis of n_1");
    for (int c = 0; c < d1; ++c) adapted.push_back(chosen.col(c));
  }

  AlmostAbelianData data;
  data.dim = n;
  data.frame = RatMat(n, n);
  data.frame.set_col(0, e1);
  for (int c = 0; c < d1; ++c) data.frame.set_col(c + 1, adapted[static_cast<size_t>(c)]);
  data.frame.set_col(n - 1, e2n);
  if (!data.frame.inverse()) return fail("adapted frame is degenerate");

  // B = ad_{e_{2n}} restricted to n, in the adapted frame
  RatMat adE = g.ad(e2n);
  RatVec be1 = adE.apply(e1);
  auto be1_coords = coords_in(data.frame, be1);
  if (!be1_coords) return fail("[e_2n, e_1] leaves n");
  if (sgn((*be1_coords)[static_cast<size_t>(n - 1)]) != 0)
    return fail("[e_2n, e_1] has an e_2n component");
  data.a = (*be1_coords)[0];
  data.v.assign(static_cast<size_t>(d1), Rat(0));
  for (int k = 0; k < d1; ++k) data.v[static_cast<size_t>(k)] = (*be1_coords)[static_cast<size_t>(k + 1)];

  data.A = RatMat(d1, d1);
  for (int c = 0; c < d1; ++c) {
    RatVec bx = adE.apply(adapted[static_cast<size_t>(c)]);
    auto coords = coords_in(data.frame, bx);
    if (!coords) return fail("ad_{e_2n} does not preserve n");
    if (sgn((*coords)[0]) != 0)
      return fail("nonzero w-block: J is not integrable on this algebra", adapted[static_cast<size_t>(c)]);
    if (sgn((*coords)[static_cast<size_t>(n - 1)]) != 0) return fail("ad image leaves n");
    for (int k = 0; k < d1; ++k) data.A(k, c) = (*coords)[static_cast<size_t>(k + 1)];
  }

  data.J1 = canonical_J1(d1);
  if (n1_frame_hint) {
    for (int c = 0; c < d1; c += 2) {
      RatVec ju = J.apply(adapted[static_cast<size_t>(c)]);
      if (!(ju == adapted[static_cast<size_t>(c + 1)])) return fail("frame hint is not J-adapted");
    }
  }
  RatMat comm = data.A * data.J1 - data.J1 * data.A;
  if (!comm.is_zero_mat())
    return fail("[A, J1] != 0: J is not integrable on this algebra");

  data.G1 = RatMat(d1, d1);
  for (int i = 0; i < d1; ++i) {
    RatVec gi = metric.apply(adapted[static_cast<size_t>(i)]);
    for (int j = 0; j < d1; ++j) data.G1(i, j) = dot(adapted[static_cast<size_t>(j)], gi);
  }
  return data;
}

}  // namespace skt
