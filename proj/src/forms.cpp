#include "skt/forms.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace skt {

namespace {

std::vector<int> mask_bits(uint32_t mask) {
  std::vector<int> idx;
  for (int i = 0; i < 32; ++i)
    if (mask & (1u << i)) idx.push_back(i);
  return idx;
}

// Sign of merging two disjoint increasing index sets: parity of the number of
// pairs (i in a, j in b) with j < i.
int merge_sign(uint32_t a, uint32_t b) {
  int inversions = 0;
  for (int i = 0; i < 32; ++i) {
    if (!(a & (1u << i))) continue;
    uint32_t below = b & ((1u << i) - 1);
    inversions += std::popcount(below);
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

// Sign of the permutation sorting (I, complement of I in {0..n-1}).
int complement_sign(uint32_t mask, int n) {
  uint32_t comp = (~mask) & ((n >= 32 ? ~0u : (1u << n) - 1));
  return merge_sign(mask, comp);
}

}  // namespace

uint32_t Form::mask_of(const std::vector<int>& idx0) {
  uint32_t m = 0;
  for (int i : idx0) {
    if (m & (1u << i)) throw std::invalid_argument("Form: repeated index");
    m |= 1u << i;
  }
  return m;
}

Form Form::basis(int dim, std::vector<int> idx0) {
  Form f(dim, static_cast<int>(idx0.size()));
  // a repeated index would make the basis form zero; keep the exact sign of
  // the given ordering
  uint32_t m = 0;
  int sign = 1;
  for (size_t p = 0; p < idx0.size(); ++p) {
    int i = idx0[p];
    if (i < 0 || i >= dim) throw std::invalid_argument("Form::basis: index out of range");
    uint32_t bit = 1u << i;
    if (m & bit) return f;  // zero form
    uint32_t above = m & ~((bit << 1) - 1);
    if (std::popcount(above) % 2 != 0) sign = -sign;
    m |= bit;
  }
  f.coeffs_[m] = sign;
  return f;
}

void Form::add_coeff(uint32_t mask, const Rat& c) {
  if (sgn(c) == 0) return;
  if (std::popcount(mask) != k_) throw std::invalid_argument("Form: mask degree mismatch");
  Rat& slot = coeffs_[mask];
  slot += c;
  if (sgn(slot) == 0) coeffs_.erase(mask);
}

Form Form::operator+(const Form& o) const {
  if (n_ != o.n_ || k_ != o.k_) throw std::invalid_argument("Form: add shape mismatch");
  Form r = *this;
  for (const auto& [m, c] : o.coeffs_) r.add_coeff(m, c);
  return r;
}

Form Form::operator-(const Form& o) const { return *this + (o * Rat(-1)); }

Form Form::operator*(const Rat& s) const {
  Form r(n_, k_);
  if (sgn(s) == 0) return r;
  for (const auto& [m, c] : coeffs_) r.coeffs_[m] = c * s;
  return r;
}

Rat Form::eval(const std::vector<RatVec>& args) const {
  if (static_cast<int>(args.size()) != k_) throw std::invalid_argument("Form::eval: arity mismatch");
  Rat total(0);
  for (const auto& [mask, c] : coeffs_) {
    std::vector<int> rows = mask_bits(mask);
    RatMat minor(k_, k_);
    for (int r = 0; r < k_; ++r)
      for (int s = 0; s < k_; ++s) minor(r, s) = args[static_cast<size_t>(s)][static_cast<size_t>(rows[static_cast<size_t>(r)])];
    total += c * minor.det();
  }
  return total;
}

std::string mask_str(uint32_t mask) {
  std::string s = "f^{";
  for (int i = 0; i < 32; ++i)
    if (mask & (1u << i)) s += std::to_string(i + 1);
  s += "}";
  return s;
}

std::string Form::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : coeffs_) {
    Rat a(abs(c));
    if (first) {
      if (sgn(c) < 0) out << "-";
      first = false;
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    if (a != 1 || m == 0) out << rat_str(a) << (m != 0 ? " " : "");
    if (m != 0) out << mask_str(m);
  }
  return out.str();
}

Form wedge(const Form& a, const Form& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("wedge: ambient dimension mismatch");
  Form r(a.dim(), a.degree() + b.degree());
  if (a.degree() + b.degree() > a.dim()) return r;
  for (const auto& [ma, ca] : a.coeffs())
    for (const auto& [mb, cb] : b.coeffs()) {
      if (ma & mb) continue;
      Rat c = ca * cb;
      if (merge_sign(ma, mb) < 0) c = -c;
      r.add_coeff(ma | mb, c);
    }
  return r;
}

Form ce_d(const LieAlgebra& g, const Form& a) {
  int n = g.dim();
  if (a.dim() != n) throw std::invalid_argument("ce_d: dimension mismatch");
  Form r(n, a.degree() + 1);
  if (a.degree() + 1 > n || a.is_zero()) return r;
  // evaluate (d a)(e_M) = sum_{p<q in M} (-1)^{pos_p + pos_q} a([e_p, e_q], rest)
  // over every (k+1)-mask M
  std::vector<uint32_t> masks;
  uint32_t full = (n >= 32) ? ~0u : ((1u << n) - 1);
  for (uint32_t m = 0; m <= full; ++m) {
    if (std::popcount(m) == a.degree() + 1) masks.push_back(m);
  }
  for (uint32_t m : masks) {
    std::vector<int> idx = mask_bits(m);
    Rat value(0);
    int kk = static_cast<int>(idx.size());
    for (int p = 0; p < kk; ++p)
      for (int q = p + 1; q < kk; ++q) {
        RatVec br = g.bracket_basis(idx[static_cast<size_t>(p)], idx[static_cast<size_t>(q)]);
        if (vec_is_zero(br)) continue;
        // a(br, e_rest...)
        std::vector<RatVec> args;
        args.reserve(static_cast<size_t>(kk - 1));
        args.push_back(br);
        for (int t = 0; t < kk; ++t) {
          if (t == p || t == q) continue;
          RatVec e(static_cast<size_t>(a.dim()), Rat(0));
          e[static_cast<size_t>(idx[static_cast<size_t>(t)])] = 1;
          args.push_back(std::move(e));
        }
        Rat term = a.eval(args);
        if (((p + q) % 2) != 0) term = -term;
        value += term;
      }
    r.add_coeff(m, value);
  }
  return r;
}

Form pullback(const RatMat& phi, const Form& a) {
  int n = a.dim();
  if (phi.rows() != n || phi.cols() != n) throw std::invalid_argument("pullback: shape mismatch");
  int k = a.degree();
  Form r(n, k);
  if (k == 0) return a;
  uint32_t full = (n >= 32) ? ~0u : ((1u << n) - 1);
  for (uint32_t mj = 0; mj <= full; ++mj) {
    if (std::popcount(mj) != k) continue;
    std::vector<int> cols = mask_bits(mj);
    Rat value(0);
    for (const auto& [mi, c] : a.coeffs()) {
      std::vector<int> rows = mask_bits(mi);
      RatMat minor(k, k);
      for (int rr = 0; rr < k; ++rr)
        for (int cc = 0; cc < k; ++cc)
          minor(rr, cc) = phi(rows[static_cast<size_t>(rr)], cols[static_cast<size_t>(cc)]);
      value += c * minor.det();
    }
    r.add_coeff(mj, value);
  }
  return r;
}

Form flat(const RatMat& g, const RatVec& x) {
  Form r(g.rows(), 1);
  RatVec gx = g.apply(x);
  for (int i = 0; i < g.rows(); ++i) r.add_coeff(1u << i, gx[static_cast<size_t>(i)]);
  return r;
}

namespace {

// The rational part of the Hodge star: star = sqrt(det g) * hodge_T.
Form hodge_T(const RatMat& g, const Form& a) {
  int n = a.dim();
  int k = a.degree();
  auto ginv_opt = g.inverse();
  if (!ginv_opt) throw std::domain_error("hodge_star: singular metric");
  const RatMat& ginv = *ginv_opt;
  Form r(n, n - k);
  uint32_t full = (n >= 32) ? ~0u : ((1u << n) - 1);
  for (uint32_t mi = 0; mi <= full; ++mi) {
    if (std::popcount(mi) != k) continue;
    // <e^I, a>_g = sum_K a_K det(ginv[I, K])
    std::vector<int> I = mask_bits(mi);
    Rat inner(0);
    for (const auto& [mk, c] : a.coeffs()) {
      std::vector<int> K = mask_bits(mk);
      if (k == 0) {
        inner += c;
        continue;
      }
      RatMat minor(k, k);
      for (int rr = 0; rr < k; ++rr)
        for (int cc = 0; cc < k; ++cc)
          minor(rr, cc) = ginv(I[static_cast<size_t>(rr)], K[static_cast<size_t>(cc)]);
      inner += c * minor.det();
    }
    if (sgn(inner) == 0) continue;
    if (complement_sign(mi, n) < 0) inner = -inner;
    r.add_coeff(full & ~mi, inner);
  }
  return r;
}

}  // namespace

Form hodge_star(const RatMat& g, const Form& a) {
  Rat d = g.det();
  auto root = rat_sqrt(d);
  if (!root) throw std::domain_error("hodge_star: det(g) is not a rational square");
  return hodge_T(g, a) * (*root);
}

Form codifferential(const LieAlgebra& g, const RatMat& metric, const Form& a) {
  if (g.dim() % 2 != 0)
    throw std::domain_error("codifferential: sign convention fixed for even dimension only");
  if (a.degree() == 0) return Form(a.dim(), 0);  // d* vanishes on functions
  Form t1 = hodge_T(metric, a);
  Form dt = ce_d(g, t1);
  Form t2 = hodge_T(metric, dt);
  return t2 * (-metric.det());
}

Form j_act_one_form(const RatMat& J, const Form& b) {
  if (b.degree() != 1) throw std::invalid_argument("j_act_one_form: degree must be 1");
  // (J b)(X) = b(J^{-1} X), J^{-1} = -J
  return pullback(-J, b);
}

}  // namespace skt
