#ifndef TOEPLITZ_ENTANGLEMENT_HPP
#define TOEPLITZ_ENTANGLEMENT_HPP

#include <string>
#include <utility>
#include <vector>

#include "toeplitz/trig_core.hpp"
#include "toeplitz/two_level.hpp"

namespace toeplitz {

//
// The maximally entangled Toeplitz element: outer order n, inner order n,
// c_{k,-k} = 1. Read with the outer factor as Toeplitz matrices it is the
// rank-one matrix function xi(z)[k][l] = z^{l-k}.
//
struct XiMatrix {
  int n = 1;
  TwoLevelToeplitz element;

  Mat operator()(cplx z) const { return element.eval_outer_matrix(z); }
};

XiMatrix build_xi(int n);

struct EntanglementCertificate {
  int n = 1;
  int samples = 0;
  /// Max over samples of the second-largest eigenvalue of xi(z).
  double rank_profile = 0.0;
  /// Off-diagonal entry (k, l) of xi(z) that is nonzero.
  int witness_k = 0;
  int witness_l = 0;
  cplx witness_z{1.0};
  double witness_modulus = 0.0;
  bool entangled = false;
  std::string verdict;  // "entangled" or "separable"
};

/// Checks that xi(z) is rank one at every sample z_s = exp(2 pi i s / samples)
/// and has a nonzero off-diagonal entry. Those two facts force every summand
/// f_j (x) t_j of a separable decomposition with nondiagonal t_j to vanish, so
/// the verdict is "entangled" for n >= 2. n = 1 is the scalar 1, "separable".
EntanglementCertificate certify_entangled(const XiMatrix& x, int samples = 1024, double tol = 1e-10);

/// A claimed separable decomposition sum_j f_j(z) t_j.
struct SeparableTerm {
  ToeplitzMat t;
  TrigPoly f;
};

enum class RefutationBranch { mismatch, fourier_contradiction, none };

struct Refutation {
  RefutationBranch branch = RefutationBranch::none;
  // mismatch
  cplx z{1.0};
  double mismatch = 0.0;  // ||sum_j f_j(z) t_j - xi(z)||_2
  // fourier contradiction: tau_{-l} fhat(k) != tau_0 fhat(k - l) for term j
  int term = -1;
  int l = 0;
  int k = 0;
  double defect = 0.0;
  double f_norm = 0.0;
};

/// Either exhibits a sample z where the claim does not reassemble xi(z), or a
/// nondiagonal t_j with nonzero f_j whose entries (0,0) and (0,l) contradict
/// f_j(z) t_j = alpha(z) xi(z): that identity needs
/// tau_{-l} fhat(k) = tau_0 fhat(k - l) for all k, impossible for a nonzero
/// trigonometric polynomial.
Refutation refute_decomposition(const XiMatrix& x, const std::vector<SeparableTerm>& claimed, int samples = 1024,
                                double tol = 1e-8);

struct PuritySplit {
  bool proportional = false;
  double lambda = 0.0;
  /// max(max_z |alpha(z) - lambda|, ||f - lambda xi||_F over coefficients)
  double deviation = 0.0;
  std::string verdict;  // "proportional" or "proportionality violated"
};

/// For a split xi = f + g into two min-positive elements, alpha(z) =
/// ||f(z)|| / ||xi(z)|| (operator norms, ||xi(z)|| = n) must be constant.
PuritySplit purity_split_check(const TwoLevelToeplitz& f, const TwoLevelToeplitz& g, int n, double tol = 1e-6,
                               int grid = 256);

/// Largest s in [0, s_max] with 0.5 xi +- s eta both PSD on the grid, by
/// bisection.
double max_feasible_step(const XiMatrix& x, const TwoLevelToeplitz& eta, int grid = 256, double s_max = 1.0,
                         double eig_tol = 1e-10);

/// psi(a) = [[a11 + a33, -a12, -a13], [-a21, a22 + a11, -a23],
///           [-a31, -a32, a33 + a22]].
Mat choi_map(const Mat& a);

struct ChoiReport {
  Mat psi;
  Mat g;
  Eigen::VectorXd g_eigenvalues;
  /// min_i (g_ii - sum_{j != i} |g_ij|)
  double gershgorin_lower = 0.0;
  /// max |psi(x) - x o g|
  double schur_agreement = 0.0;
  PsdReport psi_psd;
};

ChoiReport choi_map_demo(const ToeplitzMat& x, const Tolerance& tol = {});

}  // namespace toeplitz

#endif  // TOEPLITZ_ENTANGLEMENT_HPP
