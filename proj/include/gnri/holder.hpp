#pragma once

#include <cstdint>
#include <vector>

#include "gnri/spaces.hpp"

namespace gnri {

struct LorentzFactorization {
  double P, p;  // target X
  double R, r;  // given Y
  double Q, q;  // multiplier Z (q may be inf)
};

// Q = 1/(1/P - 1/R), q = 1/(1/p - 1/r); requires 1/P > 1/R and 1/p >= 1/r.
LorentzFactorization lorentz_factor(double P, double p, double R, double r);

// ||fg||_X / (||f||_Y ||g||_Z) for same-grid scalar f, g.
double holder_check(const GridFunction& f, const GridFunction& g, const SpaceSpec& X,
                    const SpaceSpec& Y, const SpaceSpec& Z);

// Partner function saturating the Lorentz Hölder inequality on the discrete
// model: g carries a decreasing profile assigned by the rank of |f| (ties
// broken by cell index), zero off the support of f. Finite p, r only.
GridFunction lorentz_saturator(const GridFunction& f, double P, double p, double R, double r);

// Fundamental-function proxy for Y -> X local embedding:
// sup_{t<=1} phi_X/phi_Y finite on a log grid.
bool local_embedding_proxy(const SpaceSpec& X, const SpaceSpec& Y);

// Certified lower bound on ||f|| in the multiplier space Y^X: sup of
// ||fg||_X over normalized candidates (rank-aligned indicator profiles,
// truncated power profiles, and the Lorentz saturator when applicable).
// +inf marker when the local-embedding proxy fails.
double multiplier_norm_estimate(const GridFunction& f, const SpaceSpec& X, const SpaceSpec& Y);

struct OrliczFactorReport {
  bool compatible = false;  // A(t) <= B(K t) for t > 1 on the tested range
  double K_pre = 0.0;
  bool unbounded = false;  // condition (iii) ratio grows without bound
  double K_iii = 0.0;      // sup of C^{-1}(t) B^{-1}(t) / A^{-1}(t)
  bool cond_ii_ok = false;  // A(st/K_iii) <= B(s) + C(t) on the (s,t) grid
  double ratio_i = 0.0;     // max empirical Hölder ratio over random pairs
};

// Checks the three equivalent Young-function factorization conditions; the
// empirical ratio is expected <= 2 * K_iii.
OrliczFactorReport orlicz_factor_check(const YoungFunction& A, const YoungFunction& B,
                                       const YoungFunction& C, int pairs = 50,
                                       std::uint64_t seed = 1);

// Random compactly supported 1D test function (positive values on a random
// centered window); shared by factor checks and the test suites.
GridFunction random_grid_function(int res, double half_width, std::uint64_t seed);

}  // namespace gnri
