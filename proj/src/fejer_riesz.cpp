#include "toeplitz/fejer_riesz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace toeplitz {

namespace {


int grid_size(int d) { return std::max(1024, 64 * d); }

double scalar_grid_min(const TrigPoly& f) {
  const int g = grid_size(f.degree_bound());
  double lo = std::numeric_limits<double>::infinity();
  for (int i = 0; i < g; ++i) {
    lo = std::min(lo, f.eval_raw(circle_point(2.0 * std::numbers::pi * i / g)).real());
  }
  return lo;
}

std::vector<cplx> roots_of(const std::vector<cplx>& c) {
  const auto deg = static_cast<Eigen::Index>(c.size()) - 1;
  if (deg <= 0) return {};
  Mat comp = Mat::Zero(deg, deg);
  for (Eigen::Index i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < deg; ++i) comp(i, deg - 1) = -c[static_cast<std::size_t>(i)] / c.back();
  Eigen::ComplexEigenSolver<Mat> es(comp, false);
  return {es.eigenvalues().data(), es.eigenvalues().data() + deg};
}

// Roots within `near` of the circle are numerical copies of even-order
// circle roots. Group them by angle; each cluster of size 2k contributes its
// projected centroid k times. Empty result when the grouping is inconsistent.
std::optional<std::vector<cplx>> select_roots(const std::vector<cplx>& roots, double near) {
  std::vector<cplx> inside, on;
  std::size_t outside = 0;
  for (cplx r : roots) {
    const double a = std::abs(r);
    if (a < 1.0 - near) {
      inside.push_back(r);
    } else if (a > 1.0 + near) {
      ++outside;
    } else {
      on.push_back(r);
    }
  }
  if (inside.size() != outside || on.size() % 2 != 0) return std::nullopt;
  if (on.empty()) return inside;
  std::sort(on.begin(), on.end(), [](cplx a, cplx b) { return std::arg(a) < std::arg(b); });
  // start clusters after the widest angular gap so wraparound is handled
  const std::size_t n = on.size();
  std::size_t begin = 0;
  double widest = -1.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double gap = std::abs(on[(i + 1) % n] - on[i]);
    if (gap > widest) {
      widest = gap;
      begin = (i + 1) % n;
    }
  }
  const double link = std::max(10.0 * near, 1e-5);
  std::vector<std::vector<cplx>> clusters{{on[begin]}};
  for (std::size_t i = 1; i < n; ++i) {
    const cplx z = on[(begin + i) % n];
    if (std::abs(z - clusters.back().back()) <= link) {
      clusters.back().push_back(z);
    } else {
      clusters.push_back({z});
    }
  }
  for (const auto& c : clusters) {
    if (c.size() % 2 != 0) return std::nullopt;
    cplx mid = 0.0;
    for (cplx z : c) mid += z;
    mid /= std::abs(mid);
    for (std::size_t k = 0; k < c.size() / 2; ++k) inside.push_back(mid);
  }
  return inside;
}

Mat cholesky_lower(const Mat& a) {
  Eigen::LLT<Mat> llt(a);
  if (llt.info() != Eigen::Success) throw NumericalError("block Cholesky step lost positive definiteness");
  return llt.matrixL();
}

}  // namespace

double convolution_check(const BlockTrigPoly& h, const BlockTrigPoly& f) {
  if (h.block_size() != f.block_size()) throw std::invalid_argument("block sizes differ");
  const int dh = h.degree_bound();
  const int span = std::max(dh, f.degree_bound());
  double worst = 0.0;
  for (int l = -span; l <= span; ++l) {
    Mat acc = f.coeff_or_zero(l);
    for (int j = std::max(0, -l); j <= dh && l + j <= dh; ++j) acc -= h.coeff_or_zero(j).adjoint() * h.coeff_or_zero(l + j);
    worst = std::max(worst, acc.norm());
  }
  return worst;
}

double convolution_check(const FejerRieszFactor& h, const BlockTrigPoly& f) { return convolution_check(h.h, f); }

BlockTrigPoly hermitian_square(const BlockTrigPoly& h) {
  const int d = h.degree_bound();
  BlockTrigPoly f(d, h.block_size());
  for (int l = -d; l <= d; ++l) {
    Mat acc = Mat::Zero(h.block_size(), h.block_size());
    for (int j = std::max(0, -l); j <= d && l + j <= d; ++j) acc += h.coeff_or_zero(j).adjoint() * h.coeff_or_zero(l + j);
    f.set_coeff(l, acc);
  }
  return f;
}

FejerRieszFactor factor_scalar(const TrigPoly& f, const Tolerance& tol) {
  const int d = f.degree_bound();
  double scale = 0.0;
  for (cplx c : f.coeffs()) scale += std::abs(c);
  if (!f.is_selfadjoint(1e-8 * std::max(1.0, scale))) throw std::invalid_argument("symbol is not selfadjoint");
  const double lo = scalar_grid_min(f);
  if (lo < -tol.eig_tol * std::max(1.0, scale)) {
    throw std::invalid_argument("symbol is negative on the circle (min " + std::to_string(lo) + ")");
  }

  FejerRieszFactor out;
  out.h = BlockTrigPoly(d, 1);
  int de = d;
  while (de > 0 && std::abs(f.coeff(de)) <= 1e-14 * scale) --de;

  if (de == 0) {
    out.h.set_coeff(0, Mat::Constant(1, 1, std::sqrt(std::max(0.0, f.coeff(0).real()))));
  } else {
    std::vector<cplx> p(2 * static_cast<std::size_t>(de) + 1);
    for (int k = -de; k <= de; ++k) p[static_cast<std::size_t>(k + de)] = f.coeff(k);
    const std::vector<cplx> roots = roots_of(p);
    const BlockTrigPoly target = BlockTrigPoly::from_scalar(f);
    double best = std::numeric_limits<double>::infinity();
    for (double near : {1e-6, 1e-5, 1e-4, 1e-3}) {
      const auto inside = select_roots(roots, near);
      if (!inside) continue;
      std::vector<cplx> q{1.0};  // monic product of (z - r), ascending powers
      for (cplx r : *inside) {
        std::vector<cplx> next(q.size() + 1);
        for (std::size_t i = 0; i < q.size(); ++i) {
          next[i + 1] += q[i];
          next[i] -= r * q[i];
        }
        q = std::move(next);
      }
      double energy = 0.0;
      for (cplx c : q) energy += std::norm(c);
      const double gain = std::sqrt(std::max(0.0, f.coeff(0).real()) / energy);
      BlockTrigPoly h(d, 1);
      for (std::size_t k = 0; k < q.size(); ++k) h.set_coeff(static_cast<int>(k), Mat::Constant(1, 1, gain * q[k]));
      const double r = convolution_check(h, target);
      if (r < best) {
        best = r;
        out.h = std::move(h);
      }
    }
    if (!std::isfinite(best)) throw NumericalError("roots of z^d f(z) do not pair across the unit circle");
  }
  out.residual = convolution_check(out.h, BlockTrigPoly::from_scalar(f));
  return out;
}

FejerRieszFactor factor_matrix(const BlockTrigPoly& f, const Tolerance& tol, long max_rows) {
  const int d = f.degree_bound();
  const int m = f.block_size();
  const double norm = f.coefficient_norm();
  if (!f.is_selfadjoint(1e-8 * std::max(1.0, norm))) throw std::invalid_argument("symbol is not selfadjoint");

  // Lipschitz-certified floor of lambda_min(F) on the circle.
  const int g = std::max(256, 64 * d);
  double grid_min = std::numeric_limits<double>::infinity();
  for (int i = 0; i < g; ++i) {
    const Mat v = f.eval_raw(circle_point(2.0 * std::numbers::pi * i / g));
    Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (v + v.adjoint()), Eigen::EigenvaluesOnly);
    grid_min = std::min(grid_min, es.eigenvalues()(0));
  }
  if (grid_min < -tol.eig_tol * std::max(1.0, norm)) {
    throw std::invalid_argument("symbol is not PSD on the circle (min eigenvalue " + std::to_string(grid_min) + ")");
  }

  // Singular (or nearly) on the grid: lift slightly so every pivot stays
  // positive. Convergence is judged on the lifted symbol.
  FejerRieszFactor out;
  std::vector<Mat> a(f.coeffs());
  if (grid_min <= 1e-8 * norm) {
    out.regularization = 1e-10 * std::max(norm, std::numeric_limits<double>::min());
    a[static_cast<std::size_t>(d)] += out.regularization * Mat::Identity(m, m);
  }
  auto sym = [&](int k) -> const Mat& { return a[static_cast<std::size_t>(k + d)]; };
  BlockTrigPoly lifted(d, m);
  for (int k = -d; k <= d; ++k) lifted.set_coeff(k, sym(k));

  out.h = BlockTrigPoly(d, m);
  if (d == 0) {
    out.h.set_coeff(0, cholesky_lower(hermitian_part(sym(0))).adjoint());
    out.residual = convolution_check(out.h, f);
    return out;
  }

  // rows[p % (d+1)][s] holds L(p, p - s).
  std::vector<std::vector<Mat>> rows(static_cast<std::size_t>(d) + 1,
                                     std::vector<Mat>(static_cast<std::size_t>(d) + 1, Mat::Zero(m, m)));
  auto at = [&](long p, long q) -> Mat& {
    return rows[static_cast<std::size_t>(p % (d + 1))][static_cast<std::size_t>(p - q)];
  };

  const long stride = 16L * d;
  double best = std::numeric_limits<double>::infinity();
  Mat acc(m, m);
  for (long p = 0; p < max_rows; ++p) {
    const long first = std::max(0L, p - d);
    for (long q = first; q <= p; ++q) {
      acc = sym(static_cast<int>(q - p));
      for (long i = first; i < q; ++i) acc.noalias() -= at(p, i) * at(q, i).adjoint();
      if (q < p) {
        // X L(q,q)* = acc  <=>  L(q,q) X* = acc*
        at(p, q) = at(q, q).triangularView<Eigen::Lower>().solve(acc.adjoint()).adjoint();
      } else {
        at(p, p) = cholesky_lower(0.5 * (acc + acc.adjoint()));
      }
    }
    if (p + 1 >= stride && (p + 1) % stride == 0) {
      BlockTrigPoly h(d, m);
      for (int s = 0; s <= d; ++s) h.set_coeff(s, at(p, p - s).adjoint());
      const double r = convolution_check(h, lifted);
      if (r < best) best = r;
      if (r < tol.residual_tol) {
        out.residual = convolution_check(h, f);
        out.h = std::move(h);
        out.iterations = p + 1;
        return out;
      }
    }
  }
  throw NumericalError("Bauer factorization did not converge in " + std::to_string(max_rows) +
                       " rows; best residual " + std::to_string(best));
}

}  // namespace toeplitz
