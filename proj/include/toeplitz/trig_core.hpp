#ifndef TOEPLITZ_TRIG_CORE_HPP
#define TOEPLITZ_TRIG_CORE_HPP

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace toeplitz {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

/// Numerical slack used by positivity and reassembly checks.
struct Tolerance {
  double eig_tol = 1e-10;
  double residual_tol = 1e-8;

  Tolerance() = default;
  Tolerance(double eig, double residual);
};

/// Thrown when an iterative or root-finding procedure cannot meet its
/// tolerance. Bad inputs raise std::invalid_argument instead.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Circle points supplied in floating point are accepted within this distance
// of |z| = 1 and then renormalized.
inline constexpr double kUnitModulusSlack = 1e-9;

cplx unit_point(cplx z);
cplx circle_point(double theta);

//
// Laurent polynomial  f(z) = sum_{k=-d}^{d} a_k z^k  on the unit circle.
//
class TrigPoly {
 public:
  TrigPoly() : TrigPoly(0) {}
  explicit TrigPoly(int degree_bound);
  /// Coefficients listed for k = -d..d.
  TrigPoly(int degree_bound, std::vector<cplx> coeffs);

  /// The basis function z -> z^k, padded to `degree_bound` (at least |k|).
  static TrigPoly chi(int k, int degree_bound = -1);

  int degree_bound() const { return d_; }
  cplx coeff(int k) const;
  void set_coeff(int k, cplx value);
  const std::vector<cplx>& coeffs() const { return c_; }

  cplx operator()(cplx z) const;
  cplx eval_raw(cplx z) const;
  bool is_selfadjoint(double tol = 0.0) const;
  TrigPoly padded(int degree_bound) const;

  TrigPoly& operator+=(const TrigPoly& rhs);
  TrigPoly& operator*=(cplx s);
  friend TrigPoly operator+(TrigPoly a, const TrigPoly& b) { return a += b; }
  friend TrigPoly operator*(cplx s, TrigPoly a) { return a *= s; }
  /// Product of Laurent polynomials (degree bounds add).
  friend TrigPoly operator*(const TrigPoly& a, const TrigPoly& b);

 private:
  int d_;
  std::vector<cplx> c_;
};

//
// Matrix-valued Laurent polynomial  F(z) = sum_{k=-d}^{d} a_k z^k,  a_k m x m.
//
class BlockTrigPoly {
 public:
  BlockTrigPoly() : BlockTrigPoly(0, 1) {}
  BlockTrigPoly(int degree_bound, int block_size);
  BlockTrigPoly(int degree_bound, int block_size, std::vector<Mat> coeffs);
  static BlockTrigPoly from_scalar(const TrigPoly& f);

  int degree_bound() const { return d_; }
  int block_size() const { return m_; }
  const Mat& coeff(int k) const;
  Mat coeff_or_zero(int k) const;
  void set_coeff(int k, Mat value);
  const std::vector<Mat>& coeffs() const { return c_; }

  Mat operator()(cplx z) const;
  Mat eval_raw(cplx z) const;
  bool is_selfadjoint(double tol = 0.0) const;
  /// Sum of coefficient spectral norms; bounds sup_z ||F(z)||.
  double coefficient_norm() const;

 private:
  int d_;
  int m_;
  std::vector<Mat> c_;
};

//
// n x n Toeplitz matrix stored by its generating symbols tau_{-n+1..n-1};
// entry (row k, column l) is tau_{k-l}.
//
class ToeplitzMat {
 public:
  ToeplitzMat() : ToeplitzMat(1) {}
  explicit ToeplitzMat(int order);
  ToeplitzMat(int order, std::vector<cplx> symbols);

  int order() const { return n_; }
  cplx symbol(int k) const;
  void set_symbol(int k, cplx value);
  const std::vector<cplx>& symbols() const { return tau_; }

  Mat dense() const;
  bool is_selfadjoint(double tol = 0.0) const;

  ToeplitzMat& operator+=(const ToeplitzMat& rhs);
  ToeplitzMat& operator*=(cplx s);
  friend ToeplitzMat operator+(ToeplitzMat a, const ToeplitzMat& b) { return a += b; }
  friend ToeplitzMat operator*(cplx s, ToeplitzMat a) { return a *= s; }

 private:
  int n_;
  std::vector<cplx> tau_;
};

//
// Block Toeplitz matrix: block (k, l) of the nm x nm matrix is tau_{k-l}.
//
class BlockToeplitz {
 public:
  BlockToeplitz() : BlockToeplitz(1, 1) {}
  BlockToeplitz(int order, int block_size);
  BlockToeplitz(int order, int block_size, std::vector<Mat> symbols);
  static BlockToeplitz from_scalar(const ToeplitzMat& t);
  /// The Kronecker product  t (x) g.
  static BlockToeplitz kron(const ToeplitzMat& t, const Mat& g);

  int order() const { return n_; }
  int block_size() const { return m_; }
  const Mat& symbol(int k) const;
  void set_symbol(int k, Mat value);
  const std::vector<Mat>& symbols() const { return tau_; }

  Mat dense() const;
  bool is_selfadjoint(double tol = 0.0) const;

 private:
  int n_;
  int m_;
  std::vector<Mat> tau_;
};

/// Single materialization routine: block (k, l) of the result is symbol(k - l).
/// Every dense Toeplitz matrix in the library goes through this.
Mat materialize_blocks(int order, int block_size, const std::vector<Mat>& symbols);

struct PsdReport {
  bool psd = false;
  double min_eigenvalue = 0.0;
};

/// Eigenvalue test for positive semidefiniteness. Rejects inputs whose
/// antihermitian part exceeds 1e-8 relative to the matrix norm.
PsdReport is_psd(const Mat& m, const Tolerance& tol = {});
/// (M + M*)/2 after the same selfadjointness guard.
Mat hermitian_part(const Mat& m);
/// Ascending eigenvalues of a selfadjoint matrix.
Eigen::VectorXd hermitian_eigenvalues(const Mat& m);
double min_eigenvalue(const Mat& m);

Mat schur_product(const Mat& a, const Mat& b);
/// The isometry e_k -> e_k (x) e_k from C^d into C^d (x) C^d.
Mat schur_isometry(int d);
Mat kron(const Mat& a, const Mat& b);

/// r_k = s^k for k >= 0 and (s*)^{|k|} for k < 0, s the lower shift.
ToeplitzMat basis_r(int n, int k);

struct ShiftUnitaries {
  ToeplitzMat u;
  ToeplitzMat w;
};
/// Unitary Toeplitz matrices with s = (u + w)/2.
ShiftUnitaries shift_unitaries(int n);

/// Lambda(lambda) = c* c with c = (1, lambda, ..., lambda^{n-1}).
ToeplitzMat pure_atom(int n, cplx lambda);

struct TransposeSimilarity {
  Mat u;
  double residual = 0.0;
};
/// Anti-diagonal permutation u with x^t = u* x u, plus the measured residual.
TransposeSimilarity transpose_similarity(const ToeplitzMat& x);

bool is_prime(long p);
/// (1/p) sum_{k=1}^{p} f(zeta^k) with zeta = exp(2 pi i / p); equals the
/// zeroth Fourier coefficient when p is prime and f has degree bound < m <= p.
/// `m` defaults to degree_bound + 1.
cplx fourier_coeff_via_roots(const TrigPoly& f, long p, int m = -1);

cplx eval_on_circle(const TrigPoly& p, cplx z);
Mat eval_on_circle(const BlockTrigPoly& p, cplx z);

}  // namespace toeplitz

#endif  // TOEPLITZ_TRIG_CORE_HPP
