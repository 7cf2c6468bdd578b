#include "toeplitz/block_cones.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>

#include <gsl/gsl_multimin.h>

namespace toeplitz {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// f is checked selfadjoint coefficientwise by the caller; pointwise values
// can nearly cancel, so symmetrize instead of re-testing.
double symbol_grid_min(const BlockTrigPoly& f) {
  const int g = std::max(256, 64 * f.degree_bound());
  double lo = std::numeric_limits<double>::infinity();
  for (int i = 0; i < g; ++i) {
    const Mat v = f.eval_raw(circle_point(kTwoPi * i / g));
    Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (v + v.adjoint()), Eigen::EigenvaluesOnly);
    lo = std::min(lo, es.eigenvalues()(0));
  }
  return lo;
}

Mat clip_psd(const Mat& g, double* violation) {
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (g + g.adjoint()));
  const Eigen::VectorXd& ev = es.eigenvalues();
  if (violation != nullptr) *violation = std::max(*violation, -ev(0));
  if (ev(0) >= 0.0) return 0.5 * (g + g.adjoint());
  const Eigen::VectorXd clipped = ev.cwiseMax(0.0);
  return es.eigenvectors() * clipped.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

PsdReport min_psd_block(const BlockToeplitz& t, const Tolerance& tol) { return is_psd(t.dense(), tol); }

SchurPairing schur_pairing_check(const BlockToeplitz& t, const BlockTrigPoly& f, const Tolerance& tol) {
  const int n = t.order();
  const int m = t.block_size();
  if (f.block_size() != m) throw std::invalid_argument("symbol block size does not match the Toeplitz blocks");
  if (f.degree_bound() > n - 1) throw std::invalid_argument("symbol degree exceeds n - 1");
  if (!f.is_selfadjoint(1e-8 * std::max(1.0, f.coefficient_norm()))) {
    throw std::invalid_argument("symbol is not selfadjoint");
  }
  const double lo = symbol_grid_min(f);
  if (lo < -tol.eig_tol * std::max(1.0, f.coefficient_norm())) {
    throw std::invalid_argument("symbol is not PSD-valued (min eigenvalue " + std::to_string(lo) + ")");
  }
  SchurPairing out;
  out.sum = Mat::Zero(m, m);
  for (int k = -f.degree_bound(); k <= f.degree_bound(); ++k) out.sum += schur_product(t.symbol(-k), f.coeff(k));
  out.verdict = is_psd(out.sum, tol);
  return out;
}

NonpositivityWitness witness_for_nonpositivity(const BlockToeplitz& t, const Tolerance& tol) {
  NonpositivityWitness out = eigenvector_witness(t);
  if (out.min_eigenvalue >= -tol.eig_tol) throw std::invalid_argument("no witness exists: matrix is PSD");
  return out;
}

NonpositivityWitness eigenvector_witness(const BlockToeplitz& t) {
  const int n = t.order();
  const int m = t.block_size();
  Eigen::SelfAdjointEigenSolver<Mat> es(hermitian_part(t.dense()));
  NonpositivityWitness out;
  out.min_eigenvalue = es.eigenvalues()(0);

  const Vec w = es.eigenvectors().col(0).conjugate();
  out.h = BlockTrigPoly(n - 1, m);
  for (int i = 0; i < n; ++i) {
    Mat b = Mat::Zero(m, m);
    b.row(0) = w.segment(i * m, m).adjoint();
    out.h.set_coeff(i, std::move(b));
  }
  BlockTrigPoly f(n - 1, m);
  for (int l = -(n - 1); l <= n - 1; ++l) {
    Mat a = Mat::Zero(m, m);
    for (int j = std::max(0, -l); j <= n - 1 && l + j <= n - 1; ++j) a += out.h.coeff(j).adjoint() * out.h.coeff(l + j);
    f.set_coeff(l, std::move(a));
  }
  out.f = std::move(f);

  Mat s = Mat::Zero(m, m);
  for (int k = -(n - 1); k <= n - 1; ++k) s += schur_product(t.symbol(-k), out.f.coeff(k));
  out.quadratic_form = s.sum().real();
  return out;
}

// ---------------------------------------------------------------------------
// Grid separability

BlockToeplitz SeparableDecomposition::reassemble(int n) const {
  AtomicMeasure mu;
  mu.block_size = atoms.empty() ? 1 : static_cast<int>(atoms.front().weight.rows());
  mu.atoms = atoms;
  return mu.reassemble(n);
}

namespace {

struct MomentProblem {
  int n;
  int m;
  int grid;
  std::vector<cplx> nodes;
  std::vector<Mat> target;  // k = -(n-1)..n-1
  // powers[j][k + n - 1] = lambda_j^{-k}
  std::vector<std::vector<cplx>> powers;

  MomentProblem(const BlockToeplitz& t, double eps, int grid_size) : n(t.order()), m(t.block_size()), grid(grid_size) {
    for (int j = 0; j < grid; ++j) nodes.push_back(circle_point(kTwoPi * j / grid));
    for (int k = -(n - 1); k <= n - 1; ++k) {
      Mat s = t.symbol(k);
      if (k == 0) s += eps * Mat::Identity(m, m);
      target.push_back(std::move(s));
    }
    for (cplx z : nodes) {
      std::vector<cplx> row;
      for (int k = -(n - 1); k <= n - 1; ++k) row.push_back(std::pow(z, -k));
      powers.push_back(std::move(row));
    }
  }

  std::vector<Mat> moment_residual(const std::vector<Mat>& g) const {
    std::vector<Mat> r = target;
    for (int j = 0; j < grid; ++j) {
      for (int k = 0; k < 2 * n - 1; ++k) r[static_cast<std::size_t>(k)] -= powers[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] * g[static_cast<std::size_t>(j)];
    }
    return r;
  }

  void project_affine(std::vector<Mat>& g) const {
    const std::vector<Mat> r = moment_residual(g);
    for (int j = 0; j < grid; ++j) {
      Mat corr = Mat::Zero(m, m);
      for (int k = 0; k < 2 * n - 1; ++k) corr += std::conj(powers[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)]) * r[static_cast<std::size_t>(k)];
      g[static_cast<std::size_t>(j)] += corr / static_cast<double>(grid);
    }
  }

  // Frobenius norm of the dense reassembly error.
  double dense_error(const std::vector<Mat>& g) const {
    const std::vector<Mat> r = moment_residual(g);
    double s = 0.0;
    for (int k = -(n - 1); k <= n - 1; ++k) s += (n - std::abs(k)) * r[static_cast<std::size_t>(k + n - 1)].squaredNorm();
    return std::sqrt(s);
  }
};

}  // namespace

SeparableDecomposition separable_decompose(const BlockToeplitz& t, const SeparableOptions& opts, const Tolerance& tol) {
  const int n = t.order();
  const int m = t.block_size();
  if (!(opts.epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  const int min_grid = 2 * n - 1;
  int grid = opts.grid > 0 ? opts.grid : std::max(min_grid, 8 * n);
  if (grid < min_grid) throw std::invalid_argument("grid must have at least 2n - 1 points");
  const PsdReport psd = min_psd_block(t, tol);
  if (!psd.psd) throw std::invalid_argument("block Toeplitz matrix is not PSD (min eigenvalue " + std::to_string(psd.min_eigenvalue) + ")");
  const double scale = 1.0 + t.dense().norm();
  const int max_grid = std::max(grid, 16 * min_grid);

  double best = std::numeric_limits<double>::infinity();
  long total_iter = 0;
  while (true) {
    const MomentProblem prob(t, opts.epsilon, grid);
    const auto nodes = static_cast<std::size_t>(grid);
    std::vector<Mat> x(nodes, Mat::Zero(m, m));
    std::vector<Mat> p(nodes, Mat::Zero(m, m));
    std::vector<Mat> q(nodes, Mat::Zero(m, m));
    std::vector<Mat> y(nodes), clipped(nodes);
    SeparableDecomposition out;
    out.epsilon = opts.epsilon;
    out.grid = grid;
    for (long it = 1; it <= opts.max_iter; ++it) {
      for (std::size_t j = 0; j < nodes; ++j) {
        const Mat v = x[j] + p[j];
        y[j] = clip_psd(v, nullptr);
        p[j] = v - y[j];
      }
      for (std::size_t j = 0; j < nodes; ++j) x[j] = y[j] + q[j];
      prob.project_affine(x);
      double violation = 0.0;
      for (std::size_t j = 0; j < nodes; ++j) {
        q[j] = y[j] + q[j] - x[j];
        clipped[j] = clip_psd(x[j], &violation);
      }
      if (opts.keep_trace) out.violation_trace.push_back(violation);
      const double res = prob.dense_error(clipped) / scale;
      best = std::min(best, res);
      if (res < opts.tol) {
        double total = 0.0;
        for (const auto& g : clipped) total += g.trace().real();
        for (std::size_t j = 0; j < nodes; ++j) {
          if (clipped[j].trace().real() > 1e-15 * total) out.atoms.push_back({prob.nodes[j], clipped[j]});
        }
        std::vector<Mat> kept(nodes, Mat::Zero(m, m));
        for (std::size_t j = 0; j < nodes; ++j) {
          if (clipped[j].trace().real() > 1e-15 * total) kept[j] = clipped[j];
        }
        out.residual = prob.dense_error(kept) / scale;
        out.iterations = total_iter + it;
        return out;
      }
    }
    total_iter += opts.max_iter;
    if (grid >= max_grid) break;
    grid = std::min(2 * grid, max_grid);
  }
  throw NumericalError("grid separable decomposition did not converge; best residual " + std::to_string(best));
}

// ---------------------------------------------------------------------------
// Two-level min-positivity

MinPositivityCertificate certify_two_level_min_positive(const TwoLevelToeplitz& x, int grid, Realization r) {
  if (grid < 1) throw std::invalid_argument("grid must be positive");
  if (!x.is_selfadjoint(1e-12 * std::max(1.0, x.coefficient_norm()))) {
    throw std::invalid_argument("two-level element is not selfadjoint");
  }
  MinPositivityCertificate c;
  c.grid = grid;
  c.floor = std::numeric_limits<double>::infinity();
  const int outer_points = r == Realization::functions ? grid : 1;
  for (int a = 0; a < outer_points; ++a) {
    const cplx z = circle_point(kTwoPi * a / grid);
    for (int b = 0; b < grid; ++b) {
      const cplx w = circle_point(kTwoPi * b / grid);
      const double v = min_eigenvalue_at(x, r, z, w);
      if (v < c.floor) {
        c.floor = v;
        c.argmin_z = z;
        c.argmin_w = w;
      }
    }
  }
  c.lipschitz = x.lipschitz(r);
  c.certified_margin = c.floor - c.lipschitz * std::numbers::pi / grid;
  c.certified = c.certified_margin > 0.0;
  return c;
}

TwoLevelToeplitz min_max_element() {
  TwoLevelToeplitz x(2, 2, 2);
  Mat diag(2, 2);
  diag << 1, 0, 0, -1;
  Mat lower = Mat::Zero(2, 2);
  lower(1, 0) = 2.0;
  x.set_coeff(0, 0, Mat(3.0 * Mat::Identity(2, 2)));
  x.set_coeff(1, 1, diag);
  x.set_coeff(1, -1, lower);
  x.set_coeff(-1, -1, Mat(diag.adjoint()));
  x.set_coeff(-1, 1, Mat(lower.adjoint()));
  return x;
}

Mat obstruction_matrix(double h11, double h22) {
  Mat m(4, 4);
  m << h11, 0, 1, 0,
       0, h22, 2, -1,
       1, 2, 3 - h11, 0,
       0, -1, 0, 3 - h22;
  return m;
}

namespace {

double obstruction_objective(double h11, double h22) {
  h11 = std::clamp(h11, 0.0, 3.0);
  h22 = std::clamp(h22, 0.0, 3.0);
  return min_eigenvalue(obstruction_matrix(h11, h22));
}

double nm_negated(const gsl_vector* v, void*) { return -obstruction_objective(gsl_vector_get(v, 0), gsl_vector_get(v, 1)); }

// Nelder-Mead on the clamped objective; returns (value, h11, h22).
std::tuple<double, double, double> refine_obstruction(double h11, double h22, double step) {
  gsl_multimin_function fn{&nm_negated, 2, nullptr};
  gsl_vector* start = gsl_vector_alloc(2);
  gsl_vector* steps = gsl_vector_alloc(2);
  gsl_vector_set(start, 0, h11);
  gsl_vector_set(start, 1, h22);
  gsl_vector_set_all(steps, step);
  gsl_multimin_fminimizer* s = gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, 2);
  gsl_multimin_fminimizer_set(s, &fn, start, steps);
  for (int iter = 0; iter < 500; ++iter) {
    if (gsl_multimin_fminimizer_iterate(s) != 0) break;
    if (gsl_multimin_test_size(gsl_multimin_fminimizer_size(s), 1e-12) == GSL_SUCCESS) break;
  }
  const double a = std::clamp(gsl_vector_get(s->x, 0), 0.0, 3.0);
  const double b = std::clamp(gsl_vector_get(s->x, 1), 0.0, 3.0);
  gsl_multimin_fminimizer_free(s);
  gsl_vector_free(start);
  gsl_vector_free(steps);
  return {obstruction_objective(a, b), a, b};
}

}  // namespace

MinMaxReport min_neq_max_demo(int grid) {
  MinMaxReport rep;
  rep.certificate = certify_two_level_min_positive(min_max_element(), grid, Realization::functions);

  constexpr int cells = 201;
  std::vector<std::tuple<double, double, double>> samples;
  samples.reserve(cells * cells);
  for (int i = 0; i < cells; ++i) {
    for (int j = 0; j < cells; ++j) {
      const double a = 3.0 * i / (cells - 1);
      const double b = 3.0 * j / (cells - 1);
      samples.emplace_back(obstruction_objective(a, b), a, b);
    }
  }
  std::partial_sort(samples.begin(), samples.begin() + 5, samples.end(),
                    [](const auto& l, const auto& r) { return std::get<0>(l) > std::get<0>(r); });
  rep.obstruction_max = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < 5; ++i) {
    auto [v, a, b] = samples[static_cast<std::size_t>(i)];
    if (v > rep.obstruction_max) std::tie(rep.obstruction_max, rep.h11, rep.h22) = std::tie(v, a, b);
    auto [rv, ra, rb] = refine_obstruction(a, b, 3.0 / (cells - 1));
    if (rv > rep.obstruction_max) std::tie(rep.obstruction_max, rep.h11, rep.h22) = std::tie(rv, ra, rb);
  }
  rep.obstruction_at_origin = min_eigenvalue(obstruction_matrix(0.0, 0.0));
  rep.established = rep.certificate.certified && rep.obstruction_max < 0.0;
  return rep;
}

}  // namespace toeplitz
