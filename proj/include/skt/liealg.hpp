#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skt/matrix.hpp"

namespace skt {

// Lie algebra given by structure constants c^k_{ij} = coefficient of e_k in
// [e_i, e_j], antisymmetric in (i, j). Stored as one matrix per output index:
// c[k](i, j) = c^k_{ij}. Indices are 0-based internally, 1-based in all text
// I/O (matching the f^i coframe notation).
class LieAlgebra {
 public:
  explicit LieAlgebra(int n) : n_(n), c_(static_cast<size_t>(n), RatMat::zero(n, n)) {}

  int dim() const { return n_; }

  const Rat& c(int k, int i, int j) const { return c_[static_cast<size_t>(k)](i, j); }
  void set_bracket(int i, int j, int k, const Rat& value) {
    c_[static_cast<size_t>(k)](i, j) = value;
    c_[static_cast<size_t>(k)](j, i) = -value;
  }

  RatVec bracket(const RatVec& x, const RatVec& y) const;
  RatVec bracket_basis(int i, int j) const;

  // ad_x as a matrix, x given by components.
  RatMat ad(const RatVec& x) const;

  bool jacobi_check() const;
  bool unimodular_check() const;

  // Span of all brackets [e_i, e_j].
  std::vector<RatVec> derived_algebra() const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.n_ == b.n_ && a.c_ == b.c_;
  }

 private:
  int n_;
  std::vector<RatMat> c_;
};

// g(a, v, A): dim 2n almost abelian algebra with abelian ideal
// n = span(e_1..e_{2n-1}) and [e_{2n}, e_1] = a e_1 + v, [e_{2n}, x] = A x on
// n_1 = span(e_2..e_{2n-1}).
LieAlgebra build_from_data(const Rat& a, const RatVec& v, const RatMat& A);

// A hyperplane abelian ideal, as a basis of column vectors, if one is found.
// Candidate hyperplanes must contain [g, g]; when the annihilator of [g, g]
// is higher-dimensional we enumerate basis functionals and pairwise
// combinations, and give up (nullopt) above dim 8.
std::optional<std::vector<RatVec>> find_codim1_abelian_ideal(const LieAlgebra& g);

// The (a, v, A) data of an almost abelian algebra with Hermitian structure,
// read off in a J-adapted frame. The frame columns are
// (e_1, e_2, ..., e_{2n-1}, e_{2n}) in ambient coordinates with
// J e_1 = e_{2n}, J e_{2k} = e_{2k+1}, n = span of the first 2n-1 columns and
// e_{2n} spanning the metric-orthogonal complement of n. G1 is the metric on
// the n_1 block of the frame; the frame is orthonormal iff G1 = Id (e_1 and
// e_{2n} are always unit and orthogonal to n_1 by construction).
struct AlmostAbelianData {
  int dim = 0;       // 2n
  Rat a;             // e_1 component of [e_{2n}, e_1]
  RatVec v;          // n_1 component of [e_{2n}, e_1]
  RatMat A;          // ad_{e_{2n}} restricted to n_1, in frame coordinates
  RatMat frame;      // ambient columns of the adapted basis
  RatMat G1;         // metric Gram on n_1 frame vectors
  RatMat J1;         // J on n_1 in frame coordinates (canonical pairing blocks)

  int d1() const { return dim - 2; }
  bool orthonormal() const { return G1 == RatMat::identity(d1()); }

  Rat v_norm2() const;              // ||v||^2 w.r.t. G1
  RatVec v_flat() const;            // G1 v (coefficients of v-flat on the n_1 coframe)
  RatVec adjoint_applied_v() const; // A^T G1 v; zero iff the metric adjoint kills v
  RatMat metric_adjoint_A() const;  // G1^{-1} A^T G1
};

struct ExtractionError {
  std::string reason;
  RatVec witness;
};

// Builds an adapted frame for (g, J, metric) and reads off (a, v, A).
// Reports a structured failure when J is not integrable on g (nonzero
// w-block, non-J-invariant image, or [A, J1] != 0). An optional frame hint
// fixes the n_1 part of the frame (used when comparing against closed-form
// transformed data).
std::optional<AlmostAbelianData> extract_data(const LieAlgebra& g, const RatMat& J,
                                              const RatMat& metric, ExtractionError* err = nullptr,
                                              const RatMat* n1_frame_hint = nullptr);

// Canonical complex structure in a 2n-dim basis: J f_1 = f_{2n},
// J f_{2k} = f_{2k+1}.
RatMat canonical_J(int dim);

// J1 pairing blocks on a (2n-2)-dim space: e_{2k} -> e_{2k+1}.
RatMat canonical_J1(int d1);

}  // namespace skt
