#ifndef TOEPLITZ_HARDY_HPP
#define TOEPLITZ_HARDY_HPP

#include <vector>

#include "toeplitz/trig_core.hpp"

namespace toeplitz {

/// N x N finite section of the Toeplitz operator with symbol f: entry (l, j)
/// is fhat(l - j).
struct TruncatedToeplitzOp {
  TrigPoly symbol;
  int size = 0;
  Mat matrix;
};

TruncatedToeplitzOp truncation(const TrigPoly& f, int n);

struct FloorPoint {
  int size = 0;
  double min_eigenvalue = 0.0;
};

/// Smallest eigenvalue of each finite section; non-increasing in N and
/// converging to min f over the circle.
std::vector<FloorPoint> spectral_floor_trend(const TrigPoly& f, const std::vector<int>& sizes);

struct CircleMinimum {
  double value = 0.0;        // attained value, f(theta_min)
  double lower_bound = 0.0;  // certified: f >= lower_bound everywhere
  double theta = 0.0;
  long cells = 0;
};

/// min over the circle of a selfadjoint f. Grid of `grid` points, then
/// branch-and-bound on cells using |f''| <= sum k^2 |a_k| until every cell's
/// bound is within `gap` of the best value, and a Brent polish of the best
/// cell.
CircleMinimum certified_circle_minimum(const TrigPoly& f, int grid = 1 << 14, double gap = 1e-11);

}  // namespace toeplitz

#endif  // TOEPLITZ_HARDY_HPP
