#ifndef TOEPLITZ_RANDOM_HPP
#define TOEPLITZ_RANDOM_HPP

#include <cstdint>
#include <random>

#include "toeplitz/duality.hpp"
#include "toeplitz/trig_core.hpp"
#include "toeplitz/two_level.hpp"

namespace toeplitz {

//
// Seeded instance generators. Every randomized procedure draws from an
// Rng built from (seed, stream), so a fixed seed reproduces all output.
//
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  double uniform(double lo = 0.0, double hi = 1.0);
  double normal();
  int integer(int lo, int hi);  // inclusive
  cplx gaussian_complex();
  cplx circle();

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

Mat random_gaussian(Rng& rng, int rows, int cols);
/// Hermitian with entries of unit scale.
Mat random_hermitian(Rng& rng, int m);
/// G G* / tr(G G*) for a Gaussian G.
Mat random_psd_unit_trace(Rng& rng, int m);

TrigPoly random_trig_poly(Rng& rng, int d);
TrigPoly random_selfadjoint_trig_poly(Rng& rng, int d, double scale = 1.0);
/// Analytic H of degree d with m x m Gaussian coefficients.
BlockTrigPoly random_analytic(Rng& rng, int d, int m);
ToeplitzMat random_toeplitz(Rng& rng, int n);
ToeplitzMat random_selfadjoint_toeplitz(Rng& rng, int n);

/// Nonnegative combination of `atoms` random off-grid rank-one atoms, plus
/// `shift` times the identity.
ToeplitzMat random_psd_toeplitz(Rng& rng, int n, int atoms, double shift = 0.0);
/// sum of `atoms` terms Lambda(lambda_a) (x) G_a with unit-trace PSD G_a, plus
/// `shift` I.
BlockToeplitz random_psd_block_toeplitz(Rng& rng, int n, int m, int atoms, double shift);
/// Selfadjoint block Toeplitz with Gaussian symbols.
BlockToeplitz random_selfadjoint_block_toeplitz(Rng& rng, int n, int m);

}  // namespace toeplitz

#endif  // TOEPLITZ_RANDOM_HPP
