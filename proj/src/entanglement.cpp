#include "toeplitz/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace toeplitz {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

cplx sample_point(int s, int samples) { return circle_point(kTwoPi * s / samples); }

double operator_norm(const Mat& m) { return m.operatorNorm(); }

bool grid_psd(const TwoLevelToeplitz& x, int grid, double eig_tol) {
  for (int s = 0; s < grid; ++s) {
    if (min_eigenvalue_at(x, Realization::toeplitz_outer, 1.0, sample_point(s, grid)) < -eig_tol) return false;
  }
  return true;
}

}  // namespace

XiMatrix build_xi(int n) {
  if (n < 1) throw std::invalid_argument("xi needs n >= 1");
  XiMatrix x;
  x.n = n;
  x.element = TwoLevelToeplitz(n, n);
  for (int k = -(n - 1); k <= n - 1; ++k) x.element.set_coeff(k, -k, cplx(1.0));
  return x;
}

EntanglementCertificate certify_entangled(const XiMatrix& x, int samples, double tol) {
  if (samples < 1) throw std::invalid_argument("samples must be positive");
  EntanglementCertificate c;
  c.n = x.n;
  c.samples = samples;
  if (x.n == 1) {
    c.verdict = "separable";
    return c;
  }
  for (int s = 0; s < samples; ++s) {
    const cplx z = sample_point(s, samples);
    const Mat v = x(z);
    const Eigen::VectorXd ev = hermitian_eigenvalues(v);
    c.rank_profile = std::max(c.rank_profile, ev(ev.size() - 2));
    for (int k = 0; k < x.n; ++k) {
      for (int l = 0; l < x.n; ++l) {
        if (k != l && std::abs(v(k, l)) > c.witness_modulus) {
          c.witness_modulus = std::abs(v(k, l));
          c.witness_k = k;
          c.witness_l = l;
          c.witness_z = z;
        }
      }
    }
  }
  if (c.rank_profile >= tol * x.n) {
    throw NumericalError("xi(z) is not rank one at the samples (second eigenvalue " + std::to_string(c.rank_profile) + ")");
  }
  if (c.witness_modulus <= tol) throw NumericalError("xi(z) has no off-diagonal entry");
  c.entangled = true;
  c.verdict = "entangled";
  return c;
}

Refutation refute_decomposition(const XiMatrix& x, const std::vector<SeparableTerm>& claimed, int samples,
                                double tol) {
  if (samples < 1) throw std::invalid_argument("samples must be positive");
  const int n = x.n;
  for (const auto& term : claimed) {
    if (term.t.order() != n) throw std::invalid_argument("claimed Toeplitz factor has the wrong order");
    if (!term.t.is_selfadjoint(1e-12 * (1.0 + term.t.dense().norm()))) {
      throw std::invalid_argument("claimed Toeplitz factor is not selfadjoint");
    }
  }

  Refutation out;
  for (int s = 0; s < samples; ++s) {
    const cplx z = sample_point(s, samples);
    Mat acc = -x(z);
    for (const auto& term : claimed) acc += term.f.eval_raw(z) * term.t.dense();
    const double gap = operator_norm(acc);
    if (gap > out.mismatch) {
      out.mismatch = gap;
      out.z = z;
    }
  }
  if (out.mismatch > tol) {
    out.branch = RefutationBranch::mismatch;
    return out;
  }

  for (std::size_t j = 0; j < claimed.size(); ++j) {
    const auto& [t, f] = claimed[j];
    double norm = 0.0;
    for (cplx c : f.coeffs()) norm += std::norm(c);
    norm = std::sqrt(norm);
    if (norm <= tol) continue;
    for (int l = 1; l <= n - 1; ++l) {
      const cplx tl = t.symbol(-l);
      if (std::abs(tl) <= tol) continue;
      const int d = f.degree_bound();
      auto fhat = [&](int k) { return std::abs(k) <= d ? f.coeff(k) : cplx(0.0); };
      for (int k = -d; k <= d + l; ++k) {
        const double defect = std::abs(tl * fhat(k) - t.symbol(0) * fhat(k - l));
        if (defect > out.defect) {
          out.defect = defect;
          out.term = static_cast<int>(j);
          out.l = l;
          out.k = k;
          out.f_norm = norm;
        }
      }
    }
  }
  if (out.term >= 0 && out.defect > tol) out.branch = RefutationBranch::fourier_contradiction;
  return out;
}

PuritySplit purity_split_check(const TwoLevelToeplitz& f, const TwoLevelToeplitz& g, int n, double tol, int grid) {
  const XiMatrix xi = build_xi(n);
  if (f.outer_order() != n || f.inner_order() != n || g.outer_order() != n || g.inner_order() != n ||
      f.block_size() != 1 || g.block_size() != 1) {
    throw std::invalid_argument("split summands must have outer and inner order n");
  }
  if ((f + g - xi.element).coefficient_norm() > tol) throw std::invalid_argument("f + g does not equal xi");
  const double eig_tol = 1e-10 * n;
  if (!grid_psd(f, grid, eig_tol) || !grid_psd(g, grid, eig_tol)) {
    throw std::invalid_argument("a summand is not min-positive on the grid");
  }

  std::vector<double> alpha;
  alpha.reserve(static_cast<std::size_t>(grid));
  for (int s = 0; s < grid; ++s) alpha.push_back(operator_norm(f.eval_outer_matrix(sample_point(s, grid))) / n);
  double mean = 0.0;
  for (double a : alpha) mean += a;
  mean /= grid;
  double dev = 0.0;
  for (double a : alpha) dev = std::max(dev, std::abs(a - mean));
  dev = std::max(dev, (f - cplx(mean) * xi.element).coefficient_norm());

  PuritySplit out;
  out.lambda = mean;
  out.deviation = dev;
  out.proportional = dev < tol;
  out.verdict = out.proportional ? "proportional" : "proportionality violated";
  return out;
}

double max_feasible_step(const XiMatrix& x, const TwoLevelToeplitz& eta, int grid, double s_max, double eig_tol) {
  const TwoLevelToeplitz half = cplx(0.5) * x.element;
  auto feasible = [&](double s) {
    return grid_psd(half + cplx(s) * eta, grid, eig_tol) && grid_psd(half - cplx(s) * eta, grid, eig_tol);
  };
  if (feasible(s_max)) return s_max;
  double lo = 0.0;
  double hi = s_max;
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    (feasible(mid) ? lo : hi) = mid;
  }
  return lo;
}

Mat choi_map(const Mat& a) {
  if (a.rows() != 3 || a.cols() != 3) throw std::invalid_argument("the Choi map acts on 3 x 3 matrices");
  Mat out = -a;
  out(0, 0) = a(0, 0) + a(2, 2);
  out(1, 1) = a(1, 1) + a(0, 0);
  out(2, 2) = a(2, 2) + a(1, 1);
  return out;
}

ChoiReport choi_map_demo(const ToeplitzMat& x, const Tolerance& tol) {
  if (x.order() != 3) throw std::invalid_argument("the Choi demo needs a 3 x 3 Toeplitz matrix");
  ChoiReport r;
  r.g = Mat::Constant(3, 3, -1.0);
  r.g.diagonal().setConstant(2.0);
  r.g_eigenvalues = hermitian_eigenvalues(r.g);
  r.gershgorin_lower = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 3; ++i) {
    double radius = 0.0;
    for (int j = 0; j < 3; ++j) {
      if (j != i) radius += std::abs(r.g(i, j));
    }
    r.gershgorin_lower = std::min(r.gershgorin_lower, r.g(i, i).real() - radius);
  }
  const Mat dense = x.dense();
  r.psi = choi_map(dense);
  r.schur_agreement = (r.psi - schur_product(dense, r.g)).cwiseAbs().maxCoeff();
  r.psi_psd = is_psd(r.psi, tol);
  return r;
}

}  // namespace toeplitz
