#ifndef TOEPLITZ_DUALITY_HPP
#define TOEPLITZ_DUALITY_HPP

#include <vector>

#include "toeplitz/trig_core.hpp"

namespace toeplitz {

/// A Toeplitz matrix t viewed as the linear functional
///   f  ->  sum_k tau_{-k} a_k
/// on trigonometric polynomials of degree bound < n. The identity matrix is
/// the functional f -> f^(0), and r_k is sent to the dual basis element of
/// chi_{-k}.
class DualFunctional {
 public:
  explicit DualFunctional(ToeplitzMat t) : t_(std::move(t)) {}

  const ToeplitzMat& matrix() const { return t_; }
  int order() const { return t_.order(); }
  cplx operator()(const TrigPoly& f) const;

 private:
  ToeplitzMat t_;
};

cplx pair(const ToeplitzMat& t, const TrigPoly& f);

/// t_f with symbols tau_k = f^(k). Unital and positivity preserving, but a
/// PSD t_f does not force f >= 0 on the circle.
ToeplitzMat truncate_symbol(const TrigPoly& f, int n);

/// f^(k), the dual basis functional of chi_k.
cplx dual_basis_eval(int k, const TrigPoly& f);

struct Atom {
  cplx lambda;
  Mat weight;  // 1 x 1 for scalar measures
};

/// Finite measure on the circle with PSD weights. Its k-th moment is
/// sum_j lambda_j^{-k} w_j, which is symbol k of sum_j Lambda(lambda_j) (x) w_j.
struct AtomicMeasure {
  int block_size = 1;
  std::vector<Atom> atoms;

  Mat moment(int k) const;
  BlockToeplitz reassemble(int n) const;
};

struct CaratheodoryDecomposition {
  AtomicMeasure measure;
  /// max_k |tau_k - moment(k)|
  double residual = 0.0;
  /// Largest | |root| - 1 | among kernel-polynomial roots before projection.
  double root_deviation = 0.0;
  /// tau_n of the singular one-step extension used for nonsingular input
  /// (0 when the input itself is singular).
  cplx extension{0.0};
};

/// Writes a PSD Toeplitz matrix as a nonnegative combination of at most
/// 2n - 1 rank-one atoms Lambda(lambda_j).
///
/// A singular input of numerical rank r is handled through the one-dimensional
/// kernel of its leading (r+1) x (r+1) section: the kernel vector c gives
/// p(z) = sum c_k z^k whose roots are the atoms, and the weights come from a
/// least-squares fit of the moment system. A nonsingular input is first
/// extended to a singular (n+1) x (n+1) PSD Toeplitz matrix, whose kernel
/// polynomial has n simple roots on the circle (Gauss-Szego nodes).
CaratheodoryDecomposition caratheodory_decompose(const ToeplitzMat& t, const Tolerance& tol = {});

}  // namespace toeplitz

#endif  // TOEPLITZ_DUALITY_HPP
