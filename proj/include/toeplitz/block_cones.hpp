#ifndef TOEPLITZ_BLOCK_CONES_HPP
#define TOEPLITZ_BLOCK_CONES_HPP

#include <vector>

#include "toeplitz/duality.hpp"
#include "toeplitz/trig_core.hpp"
#include "toeplitz/two_level.hpp"

namespace toeplitz {

/// Eigenvalue check of the materialized nm x nm matrix.
PsdReport min_psd_block(const BlockToeplitz& t, const Tolerance& tol = {});

struct SchurPairing {
  Mat sum;  // sum_k tau_{-k} o a_k
  PsdReport verdict;
};

/// The m x m matrix sum_k tau_{-k} o a_k for a PSD-valued symbol F; PSD for
/// every such F exactly when T is PSD.
SchurPairing schur_pairing_check(const BlockToeplitz& t, const BlockTrigPoly& f, const Tolerance& tol = {});

struct NonpositivityWitness {
  BlockTrigPoly h;  // analytic, b_i = e_1 w_i*
  BlockTrigPoly f;  // H* H
  /// <(sum_k tau_{-k} o a_k) 1, 1>, equal to v* T v for the unit eigenvector v.
  double quadratic_form = 0.0;
  double min_eigenvalue = 0.0;
};

/// Deterministic PSD-valued F refuting positivity of T. With v a unit
/// eigenvector for the smallest eigenvalue and w = conj(v) split into m-blocks
/// w_i, the factor H(z) = sum_i e_1 w_i* z^i makes the Schur pairing's
/// quadratic form at the all-ones vector equal to v* T v < 0.
NonpositivityWitness witness_for_nonpositivity(const BlockToeplitz& t, const Tolerance& tol = {});

/// The same construction without the sign precondition; for PSD T the
/// quadratic form is lambda_min(T) >= 0.
NonpositivityWitness eigenvector_witness(const BlockToeplitz& t);

struct SeparableDecomposition {
  std::vector<Atom> atoms;  // (lambda_j, g_j), g_j PSD
  double epsilon = 0.0;
  /// ||sum_j Lambda(lambda_j) (x) g_j - (T + eps I)||_F / (1 + ||T||_F)
  double residual = 0.0;
  int grid = 0;
  long iterations = 0;
  /// Largest negative-eigenvalue magnitude among the g_j after each affine
  /// projection, one entry per iteration on the final grid.
  std::vector<double> violation_trace;

  BlockToeplitz reassemble(int n) const;
};

struct SeparableOptions {
  double epsilon = 1e-3;
  int grid = 0;  // 0 selects max(2n - 1, 8n)
  double tol = 1e-6;
  long max_iter = 50000;  // per grid size
  bool keep_trace = false;
};

/// Writes T + eps I as sum_j Lambda(lambda_j) (x) g_j over the uniform grid
/// lambda_j = exp(2 pi i j / N) using Dykstra's alternating projections
/// between the product PSD cone and the affine moment set. With N >= 2n - 1
/// the moment map has orthogonal rows of squared norm N, so the affine
/// projection is the closed-form correction g_j += (1/N) sum_k lambda_j^k r_k.
/// Doubles N on stall, up to 16 (2n - 1).
SeparableDecomposition separable_decompose(const BlockToeplitz& t, const SeparableOptions& opts = {},
                                           const Tolerance& tol = {});

struct MinPositivityCertificate {
  int grid = 0;
  double floor = 0.0;  // min over the grid of lambda_min
  double lipschitz = 0.0;
  double certified_margin = 0.0;  // floor - lipschitz * pi / grid
  bool certified = false;
  cplx argmin_z{1.0};
  cplx argmin_w{1.0};
};

/// Grid lower bound for lambda_min of x over the torus (functions) or the
/// circle (toeplitz_outer).
MinPositivityCertificate certify_two_level_min_positive(const TwoLevelToeplitz& x, int grid,
                                                        Realization r = Realization::functions);

/// x = chi_0 (x) b_0 + chi_1 (x) b_1 + chi_{-1} (x) b_1*, b_0 = 3 I_2,
/// b_1 = [[chi_1, 0], [2 chi_{-1}, -chi_1]], as a 2 x 2 valued function on the
/// torus.
TwoLevelToeplitz min_max_element();

/// The 4 x 4 matrix obtained by averaging the would-be max-positive
/// decomposition over roots of unity.
Mat obstruction_matrix(double h11, double h22);

struct MinMaxReport {
  MinPositivityCertificate certificate;
  double obstruction_max = 0.0;  // max over [0,3]^2 of lambda_min(M)
  double h11 = 0.0;
  double h22 = 0.0;
  double obstruction_at_origin = 0.0;
  bool established = false;  // certified min-positive and obstruction < 0
};

MinMaxReport min_neq_max_demo(int grid = 512);

}  // namespace toeplitz

#endif  // TOEPLITZ_BLOCK_CONES_HPP
