#include "toeplitz/two_level.hpp"

#include <cmath>
#include <stdexcept>

namespace toeplitz {

TwoLevelToeplitz::TwoLevelToeplitz(int outer_order, int inner_order, int block_size)
    : n_(outer_order), m_(inner_order), p_(block_size) {
  if (n_ < 1 || m_ < 1 || p_ < 1) throw std::invalid_argument("two-level orders must be positive");
  c_.assign(static_cast<std::size_t>(2 * n_ - 1) * static_cast<std::size_t>(2 * m_ - 1), Mat::Zero(p_, p_));
}

std::size_t TwoLevelToeplitz::index(int k, int j) const {
  if (std::abs(k) > n_ - 1 || std::abs(j) > m_ - 1) throw std::invalid_argument("two-level offset out of range");
  return static_cast<std::size_t>(k + n_ - 1) * static_cast<std::size_t>(2 * m_ - 1) + static_cast<std::size_t>(j + m_ - 1);
}

const Mat& TwoLevelToeplitz::coeff(int k, int j) const { return c_[index(k, j)]; }

void TwoLevelToeplitz::set_coeff(int k, int j, Mat value) {
  if (value.rows() != p_ || value.cols() != p_) throw std::invalid_argument("coefficient has wrong shape");
  c_[index(k, j)] = std::move(value);
}

Mat TwoLevelToeplitz::eval_functions(cplx z, cplx w) const {
  Mat out = Mat::Zero(p_, p_);
  for (int k = -(n_ - 1); k <= n_ - 1; ++k) {
    const cplx zk = std::pow(z, k);
    for (int j = -(m_ - 1); j <= m_ - 1; ++j) {
      const Mat& c = coeff(k, j);
      if (c.isZero(0.0)) continue;
      out += (zk * std::pow(w, j)) * c;
    }
  }
  return out;
}

Mat TwoLevelToeplitz::eval_outer_matrix(cplx w) const {
  std::vector<Mat> symbols;
  symbols.reserve(static_cast<std::size_t>(2 * n_ - 1));
  for (int k = -(n_ - 1); k <= n_ - 1; ++k) {
    Mat s = Mat::Zero(p_, p_);
    for (int j = -(m_ - 1); j <= m_ - 1; ++j) s += std::pow(w, j) * coeff(k, j);
    symbols.push_back(std::move(s));
  }
  return materialize_blocks(n_, p_, symbols);
}

BlockToeplitz TwoLevelToeplitz::to_block_toeplitz() const {
  std::vector<Mat> outer;
  for (int k = -(n_ - 1); k <= n_ - 1; ++k) {
    std::vector<Mat> inner;
    for (int j = -(m_ - 1); j <= m_ - 1; ++j) inner.push_back(coeff(k, j));
    outer.push_back(materialize_blocks(m_, p_, inner));
  }
  return BlockToeplitz(n_, m_ * p_, std::move(outer));
}

bool TwoLevelToeplitz::is_selfadjoint(double tol) const {
  for (int k = -(n_ - 1); k <= n_ - 1; ++k) {
    for (int j = -(m_ - 1); j <= m_ - 1; ++j) {
      if ((coeff(-k, -j) - coeff(k, j).adjoint()).cwiseAbs().maxCoeff() > tol) return false;
    }
  }
  return true;
}

double TwoLevelToeplitz::lipschitz(Realization r) const {
  double l = 0.0;
  for (int k = -(n_ - 1); k <= n_ - 1; ++k) {
    for (int j = -(m_ - 1); j <= m_ - 1; ++j) {
      const double weight = r == Realization::functions ? std::abs(k) + std::abs(j) : std::abs(j);
      if (weight > 0) l += weight * coeff(k, j).operatorNorm();
    }
  }
  return l;
}

double TwoLevelToeplitz::coefficient_norm() const {
  double s = 0.0;
  for (const auto& c : c_) s += c.squaredNorm();
  return std::sqrt(s);
}

TwoLevelToeplitz& TwoLevelToeplitz::operator+=(const TwoLevelToeplitz& rhs) {
  if (rhs.n_ != n_ || rhs.m_ != m_ || rhs.p_ != p_) throw std::invalid_argument("two-level shapes differ");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
  return *this;
}

TwoLevelToeplitz& TwoLevelToeplitz::operator*=(cplx s) {
  for (auto& c : c_) c *= s;
  return *this;
}

double min_eigenvalue_at(const TwoLevelToeplitz& x, Realization r, cplx z, cplx w) {
  if (r == Realization::toeplitz_outer) {
    Eigen::SelfAdjointEigenSolver<Mat> es(x.eval_outer_matrix(w), Eigen::EigenvaluesOnly);
    return es.eigenvalues()(0);
  }
  const Mat v = x.eval_functions(z, w);
  if (v.rows() == 1) return v(0, 0).real();
  if (v.rows() == 2) {
    const double a = v(0, 0).real();
    const double c = v(1, 1).real();
    const double b = std::abs(0.5 * (v(0, 1) + std::conj(v(1, 0))));
    return 0.5 * (a + c) - std::hypot(0.5 * (a - c), b);
  }
  Eigen::SelfAdjointEigenSolver<Mat> es(v, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

}  // namespace toeplitz
