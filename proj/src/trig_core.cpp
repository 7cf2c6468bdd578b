#include "toeplitz/trig_core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace toeplitz {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw std::invalid_argument(what);
}

}  // namespace

Tolerance::Tolerance(double eig, double residual) : eig_tol(eig), residual_tol(residual) {
  require(eig >= 0.0 && residual >= 0.0, "tolerances must be nonnegative");
}

cplx unit_point(cplx z) {
  const double r = std::abs(z);
  if (!(std::abs(r - 1.0) <= kUnitModulusSlack)) {
    throw std::invalid_argument("point is not on the unit circle (|z| = " + std::to_string(r) + ")");
  }
  return z / r;
}

cplx circle_point(double theta) { return std::polar(1.0, theta); }

// ---------------------------------------------------------------------------
// TrigPoly

TrigPoly::TrigPoly(int degree_bound) : d_(degree_bound) {
  require(degree_bound >= 0, "degree bound must be nonnegative");
  c_.assign(2 * static_cast<std::size_t>(d_) + 1, cplx{});
}

TrigPoly::TrigPoly(int degree_bound, std::vector<cplx> coeffs) : d_(degree_bound), c_(std::move(coeffs)) {
  require(degree_bound >= 0, "degree bound must be nonnegative");
  require(c_.size() == 2 * static_cast<std::size_t>(d_) + 1, "TrigPoly needs 2d+1 coefficients");
}

TrigPoly TrigPoly::chi(int k, int degree_bound) {
  TrigPoly p(std::max(std::abs(k), degree_bound));
  p.set_coeff(k, 1.0);
  return p;
}

cplx TrigPoly::coeff(int k) const {
  if (k < -d_ || k > d_) return {};
  return c_[static_cast<std::size_t>(k + d_)];
}

void TrigPoly::set_coeff(int k, cplx value) {
  require(k >= -d_ && k <= d_, "coefficient offset outside degree bound");
  c_[static_cast<std::size_t>(k + d_)] = value;
}

cplx TrigPoly::eval_raw(cplx z) const {
  // Horner in z for k >= 0 and in 1/z for k < 0.
  cplx pos{};
  for (int k = d_; k >= 0; --k) pos = pos * z + coeff(k);
  cplx neg{};
  const cplx zi = 1.0 / z;
  for (int k = -d_; k <= -1; ++k) neg = neg * zi + coeff(k);
  return pos + neg * zi;
}

cplx TrigPoly::operator()(cplx z) const { return eval_raw(unit_point(z)); }

bool TrigPoly::is_selfadjoint(double tol) const {
  for (int k = 0; k <= d_; ++k) {
    if (std::abs(coeff(-k) - std::conj(coeff(k))) > tol) return false;
  }
  return true;
}

TrigPoly TrigPoly::padded(int degree_bound) const {
  require(degree_bound >= d_, "cannot pad to a smaller degree bound");
  TrigPoly out(degree_bound);
  for (int k = -d_; k <= d_; ++k) out.set_coeff(k, coeff(k));
  return out;
}

TrigPoly& TrigPoly::operator+=(const TrigPoly& rhs) {
  if (rhs.d_ > d_) *this = padded(rhs.d_);
  for (int k = -rhs.d_; k <= rhs.d_; ++k) c_[static_cast<std::size_t>(k + d_)] += rhs.coeff(k);
  return *this;
}

TrigPoly& TrigPoly::operator*=(cplx s) {
  for (auto& c : c_) c *= s;
  return *this;
}

TrigPoly operator*(const TrigPoly& a, const TrigPoly& b) {
  TrigPoly out(a.d_ + b.d_);
  for (int i = -a.d_; i <= a.d_; ++i) {
    for (int j = -b.d_; j <= b.d_; ++j) {
      out.c_[static_cast<std::size_t>(i + j + out.d_)] += a.coeff(i) * b.coeff(j);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// BlockTrigPoly

BlockTrigPoly::BlockTrigPoly(int degree_bound, int block_size) : d_(degree_bound), m_(block_size) {
  require(degree_bound >= 0, "degree bound must be nonnegative");
  require(block_size >= 1, "block size must be positive");
  c_.assign(2 * static_cast<std::size_t>(d_) + 1, Mat::Zero(m_, m_));
}

BlockTrigPoly::BlockTrigPoly(int degree_bound, int block_size, std::vector<Mat> coeffs)
    : d_(degree_bound), m_(block_size), c_(std::move(coeffs)) {
  require(degree_bound >= 0, "degree bound must be nonnegative");
  require(block_size >= 1, "block size must be positive");
  require(c_.size() == 2 * static_cast<std::size_t>(d_) + 1, "BlockTrigPoly needs 2d+1 coefficients");
  for (const auto& c : c_) require(c.rows() == m_ && c.cols() == m_, "coefficient has wrong shape");
}

BlockTrigPoly BlockTrigPoly::from_scalar(const TrigPoly& f) {
  BlockTrigPoly out(f.degree_bound(), 1);
  for (int k = -f.degree_bound(); k <= f.degree_bound(); ++k) out.set_coeff(k, Mat::Constant(1, 1, f.coeff(k)));
  return out;
}

const Mat& BlockTrigPoly::coeff(int k) const {
  require(k >= -d_ && k <= d_, "coefficient offset outside degree bound");
  return c_[static_cast<std::size_t>(k + d_)];
}

Mat BlockTrigPoly::coeff_or_zero(int k) const {
  if (k < -d_ || k > d_) return Mat::Zero(m_, m_);
  return c_[static_cast<std::size_t>(k + d_)];
}

void BlockTrigPoly::set_coeff(int k, Mat value) {
  require(k >= -d_ && k <= d_, "coefficient offset outside degree bound");
  require(value.rows() == m_ && value.cols() == m_, "coefficient has wrong shape");
  c_[static_cast<std::size_t>(k + d_)] = std::move(value);
}

Mat BlockTrigPoly::eval_raw(cplx z) const {
  Mat out = Mat::Zero(m_, m_);
  for (int k = -d_; k <= d_; ++k) out += coeff(k) * std::pow(z, k);
  return out;
}

Mat BlockTrigPoly::operator()(cplx z) const { return eval_raw(unit_point(z)); }

bool BlockTrigPoly::is_selfadjoint(double tol) const {
  for (int k = 0; k <= d_; ++k) {
    if ((coeff(-k) - coeff(k).adjoint()).cwiseAbs().maxCoeff() > tol) return false;
  }
  return true;
}

double BlockTrigPoly::coefficient_norm() const {
  double s = 0.0;
  for (const auto& c : c_) s += c.operatorNorm();
  return s;
}

// ---------------------------------------------------------------------------
// ToeplitzMat / BlockToeplitz

ToeplitzMat::ToeplitzMat(int order) : n_(order) {
  require(order >= 1, "Toeplitz order must be positive");
  tau_.assign(2 * static_cast<std::size_t>(n_) - 1, cplx{});
}

ToeplitzMat::ToeplitzMat(int order, std::vector<cplx> symbols) : n_(order), tau_(std::move(symbols)) {
  require(order >= 1, "Toeplitz order must be positive");
  require(tau_.size() == 2 * static_cast<std::size_t>(n_) - 1, "Toeplitz matrix needs 2n-1 symbols");
}

cplx ToeplitzMat::symbol(int k) const {
  require(k > -n_ && k < n_, "symbol offset out of range");
  return tau_[static_cast<std::size_t>(k + n_ - 1)];
}

void ToeplitzMat::set_symbol(int k, cplx value) {
  require(k > -n_ && k < n_, "symbol offset out of range");
  tau_[static_cast<std::size_t>(k + n_ - 1)] = value;
}

Mat ToeplitzMat::dense() const { return BlockToeplitz::from_scalar(*this).dense(); }

bool ToeplitzMat::is_selfadjoint(double tol) const {
  for (int k = 0; k < n_; ++k) {
    if (std::abs(symbol(-k) - std::conj(symbol(k))) > tol) return false;
  }
  return true;
}

ToeplitzMat& ToeplitzMat::operator+=(const ToeplitzMat& rhs) {
  require(rhs.n_ == n_, "Toeplitz orders differ");
  for (std::size_t i = 0; i < tau_.size(); ++i) tau_[i] += rhs.tau_[i];
  return *this;
}

ToeplitzMat& ToeplitzMat::operator*=(cplx s) {
  for (auto& t : tau_) t *= s;
  return *this;
}

BlockToeplitz::BlockToeplitz(int order, int block_size) : n_(order), m_(block_size) {
  require(order >= 1, "Toeplitz order must be positive");
  require(block_size >= 1, "block size must be positive");
  tau_.assign(2 * static_cast<std::size_t>(n_) - 1, Mat::Zero(m_, m_));
}

BlockToeplitz::BlockToeplitz(int order, int block_size, std::vector<Mat> symbols)
    : n_(order), m_(block_size), tau_(std::move(symbols)) {
  require(order >= 1, "Toeplitz order must be positive");
  require(block_size >= 1, "block size must be positive");
  require(tau_.size() == 2 * static_cast<std::size_t>(n_) - 1, "block Toeplitz matrix needs 2n-1 symbols");
  for (const auto& t : tau_) require(t.rows() == m_ && t.cols() == m_, "symbol has wrong shape");
}

BlockToeplitz BlockToeplitz::from_scalar(const ToeplitzMat& t) {
  std::vector<Mat> s;
  s.reserve(t.symbols().size());
  for (cplx v : t.symbols()) s.push_back(Mat::Constant(1, 1, v));
  return BlockToeplitz(t.order(), 1, std::move(s));
}

BlockToeplitz BlockToeplitz::kron(const ToeplitzMat& t, const Mat& g) {
  require(g.rows() == g.cols(), "block must be square");
  std::vector<Mat> s;
  s.reserve(t.symbols().size());
  for (cplx v : t.symbols()) s.push_back(v * g);
  return BlockToeplitz(t.order(), static_cast<int>(g.rows()), std::move(s));
}

const Mat& BlockToeplitz::symbol(int k) const {
  require(k > -n_ && k < n_, "symbol offset out of range");
  return tau_[static_cast<std::size_t>(k + n_ - 1)];
}

void BlockToeplitz::set_symbol(int k, Mat value) {
  require(k > -n_ && k < n_, "symbol offset out of range");
  require(value.rows() == m_ && value.cols() == m_, "symbol has wrong shape");
  tau_[static_cast<std::size_t>(k + n_ - 1)] = std::move(value);
}

Mat BlockToeplitz::dense() const { return materialize_blocks(n_, m_, tau_); }

bool BlockToeplitz::is_selfadjoint(double tol) const {
  for (int k = 0; k < n_; ++k) {
    if ((symbol(-k) - symbol(k).adjoint()).cwiseAbs().maxCoeff() > tol) return false;
  }
  return true;
}

Mat materialize_blocks(int order, int block_size, const std::vector<Mat>& symbols) {
  require(symbols.size() == 2 * static_cast<std::size_t>(order) - 1, "wrong number of symbols");
  Mat out(order * block_size, order * block_size);
  for (int k = 0; k < order; ++k) {
    for (int l = 0; l < order; ++l) {
      out.block(k * block_size, l * block_size, block_size, block_size) =
          symbols[static_cast<std::size_t>(k - l + order - 1)];
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Dense helpers

Mat hermitian_part(const Mat& m) {
  require(m.rows() == m.cols(), "matrix must be square");
  const double scale = m.norm();
  const double skew = (m - m.adjoint()).norm();
  if (skew > 1e-8 * scale) {
    throw std::invalid_argument("matrix is not selfadjoint (||M - M*|| = " + std::to_string(skew) + ")");
  }
  return (m + m.adjoint()) * 0.5;
}

Eigen::VectorXd hermitian_eigenvalues(const Mat& m) {
  if (m.rows() == 0) return {};
  Eigen::SelfAdjointEigenSolver<Mat> es(hermitian_part(m), Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

double min_eigenvalue(const Mat& m) { return hermitian_eigenvalues(m)(0); }

PsdReport is_psd(const Mat& m, const Tolerance& tol) {
  PsdReport r;
  r.min_eigenvalue = min_eigenvalue(m);
  r.psd = r.min_eigenvalue >= -tol.eig_tol;
  return r;
}

Mat schur_product(const Mat& a, const Mat& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "Schur product needs equal shapes");
  return a.cwiseProduct(b);
}

Mat schur_isometry(int d) {
  require(d >= 1, "dimension must be positive");
  Mat v = Mat::Zero(d * d, d);
  for (int k = 0; k < d; ++k) v(k * d + k, k) = 1.0;
  return v;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Canonical Toeplitz elements

ToeplitzMat basis_r(int n, int k) {
  require(n >= 1, "order must be positive");
  require(std::abs(k) <= n - 1, "basis offset out of range");
  ToeplitzMat r(n);
  r.set_symbol(k, 1.0);
  return r;
}

ShiftUnitaries shift_unitaries(int n) {
  require(n >= 2, "shift unitaries need n >= 2");
  ToeplitzMat u(n);
  ToeplitzMat w(n);
  u.set_symbol(1, 1.0);
  w.set_symbol(1, 1.0);
  u.set_symbol(-(n - 1), 1.0);
  w.set_symbol(-(n - 1), -1.0);
  return {u, w};
}

ToeplitzMat pure_atom(int n, cplx lambda) {
  require(n >= 1, "order must be positive");
  const cplx l = unit_point(lambda);
  ToeplitzMat t(n);
  for (int j = -(n - 1); j <= n - 1; ++j) t.set_symbol(j, std::pow(l, -j));
  return t;
}

TransposeSimilarity transpose_similarity(const ToeplitzMat& x) {
  const int n = x.order();
  TransposeSimilarity out;
  out.u = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i) out.u(i, n - 1 - i) = 1.0;
  const Mat d = x.dense();
  out.residual = (Mat(d.transpose()) - out.u.adjoint() * d * out.u).norm();
  return out;
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

cplx fourier_coeff_via_roots(const TrigPoly& f, long p, int m) {
  if (m < 0) m = f.degree_bound() + 1;
  require(f.degree_bound() <= m - 1, "degree bound must be below m");
  require(is_prime(p), "p must be prime");
  require(p >= m, "p must be at least m");
  cplx sum{};
  for (long k = 1; k <= p; ++k) {
    sum += f.eval_raw(circle_point(2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(p)));
  }
  return sum / static_cast<double>(p);
}

cplx eval_on_circle(const TrigPoly& p, cplx z) { return p(z); }
Mat eval_on_circle(const BlockTrigPoly& p, cplx z) { return p(z); }

}  // namespace toeplitz
