#ifndef TOEPLITZ_TWO_LEVEL_HPP
#define TOEPLITZ_TWO_LEVEL_HPP

#include <vector>

#include "toeplitz/trig_core.hpp"

namespace toeplitz {

/// How the two tensor factors of a two-level element are realized when it is
/// evaluated as a matrix-valued function.
enum class Realization {
  /// Both factors as trigonometric polynomials: x(z, w) = sum C_kj z^k w^j.
  functions,
  /// Outer factor as n x n Toeplitz matrices, inner as functions of w:
  /// x(w) = sum_k r_k (x) (sum_j C_kj w^j).
  toeplitz_outer,
};

//
// Element  sum_{k,j} e_k (x) e'_j (x) C_kj  with |k| < n (outer), |j| < m
// (inner) and p x p coefficients C_kj (p = 1 for scalar coefficients). The
// outer and inner factors are Toeplitz matrices or trigonometric polynomials
// depending on the Realization used at evaluation time.
//
class TwoLevelToeplitz {
 public:
  TwoLevelToeplitz() : TwoLevelToeplitz(1, 1) {}
  TwoLevelToeplitz(int outer_order, int inner_order, int block_size = 1);

  int outer_order() const { return n_; }
  int inner_order() const { return m_; }
  int block_size() const { return p_; }

  const Mat& coeff(int k, int j) const;
  void set_coeff(int k, int j, Mat value);
  void set_coeff(int k, int j, cplx value) { set_coeff(k, j, Mat::Constant(1, 1, value)); }

  /// x(z, w) for the functions realization (p x p).
  Mat eval_functions(cplx z, cplx w) const;
  /// x(w) for the toeplitz_outer realization (np x np).
  Mat eval_outer_matrix(cplx w) const;
  /// Both factors realized as Toeplitz matrices: outer block k is
  /// sum_j r_j (x) C_kj, giving an n x n block Toeplitz with mp x mp blocks.
  BlockToeplitz to_block_toeplitz() const;

  bool is_selfadjoint(double tol = 0.0) const;
  /// Bound on |d/dtheta| of the evaluated matrix summed over both angles,
  /// using ||r_k|| = 1 for matrix-realized factors.
  double lipschitz(Realization r) const;
  /// Frobenius norm of the coefficient array.
  double coefficient_norm() const;

  TwoLevelToeplitz& operator+=(const TwoLevelToeplitz& rhs);
  TwoLevelToeplitz& operator*=(cplx s);
  friend TwoLevelToeplitz operator+(TwoLevelToeplitz a, const TwoLevelToeplitz& b) { return a += b; }
  friend TwoLevelToeplitz operator-(TwoLevelToeplitz a, const TwoLevelToeplitz& b) { return a += (-1.0) * b; }
  friend TwoLevelToeplitz operator*(cplx s, TwoLevelToeplitz a) { return a *= s; }

 private:
  std::size_t index(int k, int j) const;

  int n_;
  int m_;
  int p_;
  std::vector<Mat> c_;
};

/// Smallest eigenvalue of the evaluated element at one point. For
/// toeplitz_outer only `w` is used.
double min_eigenvalue_at(const TwoLevelToeplitz& x, Realization r, cplx z, cplx w);

}  // namespace toeplitz

#endif  // TOEPLITZ_TWO_LEVEL_HPP
