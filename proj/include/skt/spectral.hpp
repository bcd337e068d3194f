#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "skt/poly.hpp"

namespace skt {

struct EigenValue {
  std::complex<double> value;
  int multiplicity = 1;
  std::optional<GRat> exact;  // set when certified by an exact p(z) = 0 check
};

// Spectral facts about a real square matrix, at absolute tolerance tol.
// real_part_classes are the tolerance-clustered real parts; mu is the unique
// nonzero class when the classes are {0, mu} or {mu}.
struct SpectralReport {
  std::vector<EigenValue> eigenvalues;
  bool diagonalizable = false;
  std::vector<double> real_part_classes;
  std::optional<double> mu;
  std::optional<Rat> mu_exact;
  bool all_exact = false;

  bool real_parts_in_zero_mu(double tol) const;
};

SpectralReport eigen(const RatMat& m, double tol = 1e-9);

RatMat symmetric_part(const RatMat& m);

// m* = gram^{-1} m^T gram; true iff m commutes with m* within tol (exactly,
// since everything stays rational). gram must be symmetric positive definite.
bool is_normal(const RatMat& m, const RatMat& gram, double tol = 1e-9);

// (||S(m)||_F^2, sum of Re(lambda)^2). The first component is exact, the
// second comes from the float spectrum.
std::pair<Rat, double> norm_estimate_check(const RatMat& m, double tol = 1e-9);

bool is_positive_definite(const RatMat& sym);

}  // namespace skt
