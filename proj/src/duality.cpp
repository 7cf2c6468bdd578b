#include "toeplitz/duality.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace toeplitz {

cplx pair(const ToeplitzMat& t, const TrigPoly& f) {
  const int n = t.order();
  if (f.degree_bound() > n - 1) {
    throw std::invalid_argument("trigonometric polynomial degree exceeds n - 1");
  }
  cplx sum{};
  for (int k = -f.degree_bound(); k <= f.degree_bound(); ++k) sum += t.symbol(-k) * f.coeff(k);
  return sum;
}

cplx DualFunctional::operator()(const TrigPoly& f) const { return pair(t_, f); }

ToeplitzMat truncate_symbol(const TrigPoly& f, int n) {
  if (n < 1) throw std::invalid_argument("order must be positive");
  if (f.degree_bound() > n - 1) throw std::invalid_argument("symbol degree exceeds n - 1");
  ToeplitzMat t(n);
  for (int k = -(n - 1); k <= n - 1; ++k) t.set_symbol(k, f.coeff(k));
  return t;
}

cplx dual_basis_eval(int k, const TrigPoly& f) {
  if (std::abs(k) > f.degree_bound()) throw std::invalid_argument("dual basis offset out of range");
  return f.coeff(k);
}

Mat AtomicMeasure::moment(int k) const {
  Mat out = Mat::Zero(block_size, block_size);
  for (const auto& a : atoms) out += std::pow(a.lambda, -k) * a.weight;
  return out;
}

BlockToeplitz AtomicMeasure::reassemble(int n) const {
  BlockToeplitz out(n, block_size);
  for (int k = -(n - 1); k <= n - 1; ++k) out.set_symbol(k, moment(k));
  return out;
}

namespace {

constexpr double kRootSlack = 1e-6;
constexpr double kNegativeWeight = 1e-12;

// Roots of sum_k c_k z^k via the companion matrix.
std::vector<cplx> polynomial_roots(const Vec& c) {
  Eigen::Index deg = c.size() - 1;
  while (deg > 0 && std::abs(c(deg)) <= 1e-14 * c.norm()) --deg;
  if (deg == 0) return {};
  Mat comp = Mat::Zero(deg, deg);
  for (Eigen::Index i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < deg; ++i) comp(i, deg - 1) = -c(i) / c(deg);
  Eigen::ComplexEigenSolver<Mat> es(comp, false);
  std::vector<cplx> roots(es.eigenvalues().data(), es.eigenvalues().data() + deg);
  return roots;
}

// Nonnegative weights w_j with sum_j w_j lambda_j^{-k} = tau_k, k = 0..n-1,
// solved on the stacked real/imaginary system.
Eigen::VectorXd fit_weights(const std::vector<cplx>& nodes, const ToeplitzMat& target) {
  const int n = target.order();
  const auto r = static_cast<Eigen::Index>(nodes.size());
  Eigen::MatrixXd a(2 * n, r);
  Eigen::VectorXd b(2 * n);
  for (int k = 0; k < n; ++k) {
    for (Eigen::Index j = 0; j < r; ++j) {
      const cplx v = std::pow(nodes[static_cast<std::size_t>(j)], -k);
      a(2 * k, j) = v.real();
      a(2 * k + 1, j) = v.imag();
    }
    b(2 * k) = target.symbol(k).real();
    b(2 * k + 1) = target.symbol(k).imag();
  }
  return a.colPivHouseholderQr().solve(b);
}

}  // namespace

CaratheodoryDecomposition caratheodory_decompose(const ToeplitzMat& t, const Tolerance& tol) {
  const int n = t.order();
  if (!t.is_selfadjoint(1e-8 * std::max(1.0, std::abs(t.symbol(0))))) {
    throw std::invalid_argument("Toeplitz matrix is not selfadjoint");
  }
  const Mat dense = t.dense();
  const Eigen::VectorXd eig = hermitian_eigenvalues(dense);
  const double scale = std::max(1.0, eig(n - 1));
  if (eig(0) < -tol.eig_tol * scale) {
    throw std::invalid_argument("Toeplitz matrix is not PSD (min eigenvalue " + std::to_string(eig(0)) + ")");
  }

  CaratheodoryDecomposition out;
  out.measure.block_size = 1;

  // Rank threshold relative to the spectrum; below it an eigenvalue is kernel.
  const double rank_floor = std::max(tol.eig_tol, 1e-11 * scale);

  std::vector<cplx> roots;
  if (eig(0) > rank_floor) {
    // Extend by one row and column with tau_n chosen on the boundary of the
    // PSD extension disk. The (n+1) x (n+1) extension is singular of rank n
    // and its kernel polynomial has n simple roots on the circle.
    Eigen::LLT<Mat> llt(hermitian_part(dense));
    Vec a = Vec::Zero(n);
    for (int k = 1; k < n; ++k) a(k) = t.symbol(k - n);
    const Vec u = llt.solve(a);
    const Vec y = llt.solve(Vec::Unit(n, 0));
    const double g = y(0).real();
    const cplx h = u(0);
    const double c0 = t.symbol(0).real() - a.dot(u).real();
    const cplx center = -std::conj(h) / g;
    const double radius = std::sqrt(std::max(0.0, (c0 + std::norm(h) / g) / g));
    out.extension = center + radius;
    Vec b = a;
    b(0) = std::conj(out.extension);
    Vec c(n + 1);
    c.head(n) = llt.solve(b);
    c(n) = -1.0;
    roots = polynomial_roots(c);
    if (static_cast<int>(roots.size()) != n) {
      throw NumericalError("extension kernel polynomial has degree " + std::to_string(roots.size()) + ", expected " +
                           std::to_string(n));
    }
  } else {
    const Eigen::VectorXd seig = hermitian_eigenvalues(dense);
    int rank = 0;
    for (Eigen::Index i = 0; i < seig.size(); ++i) {
      if (seig(i) > rank_floor) ++rank;
    }
    rank = std::min(rank, n - 1);
    if (rank > 0) {
      // The leading (rank+1) section has a one-dimensional kernel.
      const Mat section = dense.topLeftCorner(rank + 1, rank + 1);
      Eigen::SelfAdjointEigenSolver<Mat> es(hermitian_part(section));
      roots = polynomial_roots(es.eigenvectors().col(0));
      if (static_cast<int>(roots.size()) != rank) {
        throw NumericalError("kernel polynomial has degree " + std::to_string(roots.size()) + ", expected " +
                             std::to_string(rank));
      }
    }
  }
  // Near-singular input loses roughly sqrt(cond) digits in the root moduli.
  const double cond = eig(n - 1) / std::max(eig(0), rank_floor);
  const double root_slack = std::max(kRootSlack, 10.0 * std::sqrt(cond * 2.2e-16));
  for (auto& z : roots) {
    const double dev = std::abs(std::abs(z) - 1.0);
    out.root_deviation = std::max(out.root_deviation, dev);
    if (dev > root_slack) {
      throw NumericalError("kernel polynomial root off the unit circle by " + std::to_string(dev));
    }
    z /= std::abs(z);
  }
  if (!roots.empty()) {
    const Eigen::VectorXd w = fit_weights(roots, t);
    for (std::size_t j = 0; j < roots.size(); ++j) {
      const double wj = w(static_cast<Eigen::Index>(j));
      if (wj < -kNegativeWeight * scale) {
        throw NumericalError("negative atom weight " + std::to_string(wj) + " (root misidentification)");
      }
      out.measure.atoms.push_back({roots[j], Mat::Constant(1, 1, std::max(wj, 0.0))});
    }
  }

  for (int k = -(n - 1); k <= n - 1; ++k) {
    out.residual = std::max(out.residual, std::abs(t.symbol(k) - out.measure.moment(k)(0, 0)));
  }
  return out;
}

}  // namespace toeplitz
