#include "toeplitz/hardy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <utility>

#include <boost/math/tools/minima.hpp>

#include "toeplitz/duality.hpp"

namespace toeplitz {

TruncatedToeplitzOp truncation(const TrigPoly& f, int n) {
  if (n < 1) throw std::invalid_argument("truncation size must be positive");
  std::vector<cplx> tau(2 * static_cast<std::size_t>(n) - 1);
  for (int k = -(n - 1); k <= n - 1; ++k) {
    if (std::abs(k) <= f.degree_bound()) tau[static_cast<std::size_t>(k + n - 1)] = f.coeff(k);
  }
  TruncatedToeplitzOp op;
  op.symbol = f;
  op.size = n;
  op.matrix = ToeplitzMat(n, std::move(tau)).dense();
  return op;
}

std::vector<FloorPoint> spectral_floor_trend(const TrigPoly& f, const std::vector<int>& sizes) {
  double scale = 0.0;
  for (cplx c : f.coeffs()) scale += std::abs(c);
  if (!f.is_selfadjoint(1e-12 * std::max(1.0, scale))) throw std::invalid_argument("symbol is not selfadjoint");
  std::vector<FloorPoint> out;
  for (int n : sizes) out.push_back({n, min_eigenvalue(truncation(f, n).matrix)});
  return out;
}

CircleMinimum certified_circle_minimum(const TrigPoly& f, int grid, double gap) {
  if (grid < 4) throw std::invalid_argument("grid too small");
  double scale = 0.0;
  double curvature = 0.0;
  for (int k = -f.degree_bound(); k <= f.degree_bound(); ++k) {
    scale += std::abs(f.coeff(k));
    curvature += static_cast<double>(k) * k * std::abs(f.coeff(k));
  }
  if (!f.is_selfadjoint(1e-12 * std::max(1.0, scale))) throw std::invalid_argument("symbol is not selfadjoint");
  auto value = [&](double theta) { return f.eval_raw(circle_point(theta)).real(); };

  const double h = 2.0 * std::numbers::pi / grid;
  std::vector<double> v(static_cast<std::size_t>(grid) + 1);
  CircleMinimum out;
  out.value = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= grid; ++i) {
    v[static_cast<std::size_t>(i)] = i == grid ? v[0] : value(h * i);
    if (v[static_cast<std::size_t>(i)] < out.value) {
      out.value = v[static_cast<std::size_t>(i)];
      out.theta = h * i;
    }
  }

  // Between two samples a function with |f''| <= M dips at most M w^2 / 8
  // below the lower endpoint.
  struct Cell {
    double a, w, fa, fb;
  };
  std::vector<Cell> open;
  for (int i = 0; i < grid; ++i) open.push_back({h * i, h, v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(i) + 1]});
  const double target = gap * std::max(1.0, scale);
  const long max_cells = 1L << 22;
  out.lower_bound = std::numeric_limits<double>::infinity();
  while (!open.empty()) {
    const Cell c = open.back();
    open.pop_back();
    ++out.cells;
    const double bound = std::min(c.fa, c.fb) - curvature * c.w * c.w / 8.0;
    if (bound >= out.value - target || out.cells > max_cells) {
      out.lower_bound = std::min(out.lower_bound, bound);
      continue;
    }
    const double mid = c.a + 0.5 * c.w;
    const double fm = value(mid);
    if (fm < out.value) {
      out.value = fm;
      out.theta = mid;
    }
    open.push_back({c.a, 0.5 * c.w, c.fa, fm});
    open.push_back({mid, 0.5 * c.w, fm, c.fb});
  }

  const auto [theta, polished] = boost::math::tools::brent_find_minima(value, out.theta - h, out.theta + h, 52);
  if (polished < out.value) {
    out.value = polished;
    out.theta = theta;
  }
  out.theta = std::remainder(out.theta, 2.0 * std::numbers::pi);
  if (out.theta < 0.0) out.theta += 2.0 * std::numbers::pi;
  out.lower_bound = std::min(out.lower_bound, out.value);
  return out;
}

}  // namespace toeplitz
