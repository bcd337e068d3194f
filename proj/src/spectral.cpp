#include "skt/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace skt {

bool SpectralReport::real_parts_in_zero_mu(double tol) const {
  if (real_part_classes.empty()) return true;
  int nonzero = 0;
  for (double c : real_part_classes)
    if (std::abs(c) > tol) ++nonzero;
  return nonzero <= 1;
}

namespace {

// Cluster complex values within absolute tolerance (union-find on pairs).
std::vector<std::vector<int>> cluster_points(const std::vector<std::complex<double>>& pts,
                                             double tol) {
  int n = static_cast<int>(pts.size());
  std::vector<int> parent(static_cast<size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
    return x;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(pts[static_cast<size_t>(i)] - pts[static_cast<size_t>(j)]) <= tol)
        parent[static_cast<size_t>(find(i))] = find(j);
  std::vector<std::vector<int>> groups;
  std::vector<int> root_of(static_cast<size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    int r = find(i);
    if (root_of[static_cast<size_t>(r)] < 0) {
      root_of[static_cast<size_t>(r)] = static_cast<int>(groups.size());
      groups.emplace_back();
    }
    groups[static_cast<size_t>(root_of[static_cast<size_t>(r)])].push_back(i);
  }
  return groups;
}

int float_rank(std::vector<std::vector<std::complex<double>>> m, double tol) {
  int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int p = -1;
    double best = tol;
    for (int i = rank; i < rows; ++i) {
      double a = std::abs(m[static_cast<size_t>(i)][static_cast<size_t>(col)]);
      if (a > best) {
        best = a;
        p = i;
      }
    }
    if (p < 0) continue;
    std::swap(m[static_cast<size_t>(p)], m[static_cast<size_t>(rank)]);
    auto& prow = m[static_cast<size_t>(rank)];
    for (int i = 0; i < rows; ++i) {
      if (i == rank) continue;
      auto f = m[static_cast<size_t>(i)][static_cast<size_t>(col)] / prow[static_cast<size_t>(col)];
      if (std::abs(f) == 0) continue;
      for (int j = col; j < cols; ++j)
        m[static_cast<size_t>(i)][static_cast<size_t>(j)] -= f * prow[static_cast<size_t>(j)];
    }
    ++rank;
  }
  return rank;
}

int exact_geometric_multiplicity(const RatMat& m, const GRat& lambda) {
  GMat g = to_gmat(m);
  for (int i = 0; i < g.rows(); ++i) g(i, i) -= lambda;
  return m.rows() - g.rank();
}

}  // namespace

SpectralReport eigen(const RatMat& m, double tol) {
  if (!m.square()) throw std::invalid_argument("eigen: non-square matrix");
  SpectralReport rep;
  int n = m.rows();
  if (n == 0) {
    rep.diagonalizable = true;
    rep.all_exact = true;
    return rep;
  }
  RatPoly p = char_poly(m);

  // Exact-first: peel off every root in Q(i) by candidate recognition
  // (continued-fraction convergents of the float approximations) certified
  // with an exact evaluation, deflating fully so multiple roots never hit
  // the float path. Catalog matrices always resolve here.
  GPoly residual(p.size());
  for (size_t k = 0; k < p.size(); ++k) residual[k] = GRat(p[k]);
  std::vector<std::pair<GRat, int>> exact_roots;
  bool progress = true;
  while (residual.size() > 1 && progress) {
    progress = false;
    std::vector<std::complex<double>> rc(residual.size());
    for (size_t k = 0; k < residual.size(); ++k) rc[k] = residual[k].to_complex();
    std::vector<std::complex<double>> roots = poly_roots_c(rc);
    for (const auto& r : roots) {
      for (const Rat& cre : convergents(r.real())) {
        if (std::abs(to_double(cre) - r.real()) > 0.51) continue;
        for (const Rat& cim : convergents(r.imag())) {
          if (std::abs(to_double(cim) - r.imag()) > 0.51) continue;
          GRat cand(cre, cim);
          if (!gpoly_eval(residual, cand).is_zero()) continue;
          int mult = 0;
          while (residual.size() > 1) {
            GPoly trial = residual;
            GRat rem = gpoly_deflate(trial, cand);
            if (!rem.is_zero()) break;
            residual = std::move(trial);
            ++mult;
          }
          exact_roots.emplace_back(cand, mult);
          progress = true;
          break;
        }
        if (progress) break;
      }
      if (progress) break;
    }
  }

  rep.all_exact = residual.size() <= 1;
  for (const auto& [cand, mult] : exact_roots) {
    EigenValue ev;
    ev.value = cand.to_complex();
    ev.multiplicity = mult;
    ev.exact = cand;
    rep.eigenvalues.push_back(std::move(ev));
  }
  if (residual.size() > 1) {
    std::vector<std::complex<double>> rc(residual.size());
    for (size_t k = 0; k < residual.size(); ++k) rc[k] = residual[k].to_complex();
    std::vector<std::complex<double>> roots = poly_roots_c(rc);
    // residual roots are irrational; multiple ones smear in double precision
    auto groups = cluster_points(roots, std::max(tol, 1e-8));
    for (auto& g : groups) {
      std::complex<double> mean = 0;
      for (int idx : g) mean += roots[static_cast<size_t>(idx)];
      mean /= static_cast<double>(g.size());
      EigenValue ev;
      ev.value = mean;
      ev.multiplicity = static_cast<int>(g.size());
      rep.eigenvalues.push_back(std::move(ev));
    }
  }
  std::sort(rep.eigenvalues.begin(), rep.eigenvalues.end(), [](const EigenValue& a, const EigenValue& b) {
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });

  // Diagonalizable iff geometric multiplicity matches algebraic multiplicity
  // for every eigenvalue. Exact rank when the eigenvalue is certified.
  rep.diagonalizable = true;
  for (const auto& ev : rep.eigenvalues) {
    int geo;
    if (ev.exact) {
      geo = exact_geometric_multiplicity(m, *ev.exact);
    } else {
      std::vector<std::vector<std::complex<double>>> shifted(static_cast<size_t>(n),
                                                             std::vector<std::complex<double>>(static_cast<size_t>(n)));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          shifted[static_cast<size_t>(i)][static_cast<size_t>(j)] =
              to_double(m(i, j)) - (i == j ? ev.value : 0.0);
      geo = n - float_rank(shifted, tol);
    }
    if (geo != ev.multiplicity) {
      rep.diagonalizable = false;
      break;
    }
  }

  // Real-part classes with |x - y| <= tol identification.
  std::vector<std::complex<double>> res;
  std::vector<std::optional<Rat>> res_exact;
  for (const auto& ev : rep.eigenvalues) {
    res.emplace_back(ev.value.real(), 0.0);
    res_exact.push_back(ev.exact ? std::optional<Rat>(ev.exact->re) : std::nullopt);
  }
  auto rgroups = cluster_points(res, tol);
  int nonzero_classes = 0;
  for (auto& g : rgroups) {
    double mean = 0;
    for (int idx : g) mean += res[static_cast<size_t>(idx)].real();
    mean /= static_cast<double>(g.size());
    rep.real_part_classes.push_back(mean);
    if (std::abs(mean) > tol) {
      ++nonzero_classes;
      rep.mu = mean;
      rep.mu_exact = res_exact[static_cast<size_t>(g[0])];
    }
  }
  std::sort(rep.real_part_classes.begin(), rep.real_part_classes.end());
  bool has_zero_class = false;
  for (double c : rep.real_part_classes)
    if (std::abs(c) <= tol) has_zero_class = true;
  // mu exists iff classes are {0, mu} or {mu}, mu != 0
  if (nonzero_classes != 1 || (rep.real_part_classes.size() > 2) ||
      (rep.real_part_classes.size() == 2 && !has_zero_class)) {
    rep.mu.reset();
    rep.mu_exact.reset();
  }
  return rep;
}

RatMat symmetric_part(const RatMat& m) {
  if (!m.square()) throw std::invalid_argument("symmetric_part: non-square matrix");
  return (m + m.transpose()) * rat(1, 2);
}

bool is_positive_definite(const RatMat& sym) {
  // Leading principal minors, exact.
  if (!sym.is_symmetric()) return false;
  int n = sym.rows();
  for (int k = 1; k <= n; ++k) {
    RatMat lead(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) lead(i, j) = sym(i, j);
    if (sgn(lead.det()) <= 0) return false;
  }
  return true;
}

bool is_normal(const RatMat& m, const RatMat& gram, double tol) {
  if (!m.square() || !gram.square() || m.rows() != gram.rows())
    throw std::invalid_argument("is_normal: shape mismatch");
  if (!is_positive_definite(gram)) throw std::domain_error("is_normal: gram not positive definite");
  auto gi = gram.inverse();
  RatMat adj = (*gi) * m.transpose() * gram;
  RatMat comm = m * adj - adj * m;
  Rat norm2(0);
  for (int i = 0; i < comm.rows(); ++i)
    for (int j = 0; j < comm.cols(); ++j) norm2 += comm(i, j) * comm(i, j);
  return to_double(norm2) <= tol;
}

std::pair<Rat, double> norm_estimate_check(const RatMat& m, double tol) {
  RatMat s = symmetric_part(m);
  Rat lhs(0);
  for (int i = 0; i < s.rows(); ++i)
    for (int j = 0; j < s.cols(); ++j) lhs += s(i, j) * s(i, j);
  SpectralReport rep = eigen(m, tol);
  double rhs = 0;
  for (const auto& ev : rep.eigenvalues)
    rhs += ev.value.real() * ev.value.real() * ev.multiplicity;
  return {lhs, rhs};
}

}  // namespace skt
