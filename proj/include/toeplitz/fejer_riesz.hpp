#ifndef TOEPLITZ_FEJER_RIESZ_HPP
#define TOEPLITZ_FEJER_RIESZ_HPP

#include "toeplitz/trig_core.hpp"

namespace toeplitz {

/// Analytic factor H(z) = sum_{k=0}^{d} b_k z^k of a PSD-valued symbol,
/// F(z) = H(z)* H(z). Stored as a BlockTrigPoly whose negative-offset
/// coefficients are zero.
struct FejerRieszFactor {
  BlockTrigPoly h;
  double residual = 0.0;
  /// Block rows of the banded Cholesky factor computed (0 for closed forms).
  long iterations = 0;
  /// Multiple of the identity added to a_0 before factoring.
  double regularization = 0.0;

  /// b_k for 0 <= k <= degree.
  Mat b(int k) const { return h.coeff_or_zero(k); }
  int degree() const { return h.degree_bound(); }
};

/// max_l || a_l - sum_{j in I_l} b_j* b_{l+j} ||_F over every offset either
/// side carries; I_l = { j : 0 <= j, 0 <= l + j <= deg H }.
double convolution_check(const FejerRieszFactor& h, const BlockTrigPoly& f);
double convolution_check(const BlockTrigPoly& h, const BlockTrigPoly& f);

/// The symbol H* H of an analytic polynomial H (coefficients k >= 0 used).
BlockTrigPoly hermitian_square(const BlockTrigPoly& h);

/// Scalar spectral factor from the roots of z^d f(z): roots pair as
/// (r, 1/conj r); the ones inside the disk go to h and roots on the circle
/// are split between the two halves of each double root.
FejerRieszFactor factor_scalar(const TrigPoly& f, const Tolerance& tol = {});

/// Matrix spectral factor by Bauer's method: banded block Cholesky of the
/// growing block Toeplitz section with block (p, q) = a_{q-p}; the last block
/// row converges to (b_d*, ..., b_0*). Checked every 16 d rows; gives up after
/// `max_rows` rows with a NumericalError carrying the best residual.
FejerRieszFactor factor_matrix(const BlockTrigPoly& f, const Tolerance& tol = {}, long max_rows = 1L << 21);

}  // namespace toeplitz

#endif  // TOEPLITZ_FEJER_RIESZ_HPP
