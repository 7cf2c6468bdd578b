#include "toeplitz/random.hpp"

#include <numbers>

namespace toeplitz {

Rng::Rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  engine_.seed(seq);
}

double Rng::uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }

double Rng::normal() { return normal_(engine_); }

int Rng::integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

cplx Rng::gaussian_complex() {
  const double re = normal();
  const double im = normal();
  return {re, im};
}

cplx Rng::circle() { return circle_point(uniform(0.0, 2.0 * std::numbers::pi)); }

Mat random_gaussian(Rng& rng, int rows, int cols) {
  Mat g(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) g(i, j) = rng.gaussian_complex();
  }
  return g;
}

Mat random_hermitian(Rng& rng, int m) {
  const Mat g = random_gaussian(rng, m, m);
  return 0.5 * (g + g.adjoint());
}

Mat random_psd_unit_trace(Rng& rng, int m) {
  const Mat g = random_gaussian(rng, m, m);
  Mat p = g * g.adjoint();
  return p / p.trace().real();
}

TrigPoly random_trig_poly(Rng& rng, int d) {
  TrigPoly f(d);
  for (int k = -d; k <= d; ++k) f.set_coeff(k, rng.gaussian_complex());
  return f;
}

TrigPoly random_selfadjoint_trig_poly(Rng& rng, int d, double scale) {
  TrigPoly f(d);
  f.set_coeff(0, scale * rng.uniform(-1.0, 1.0));
  for (int k = 1; k <= d; ++k) {
    const double re = rng.uniform(-1.0, 1.0);
    const double im = rng.uniform(-1.0, 1.0);
    const cplx c(scale * re, scale * im);
    f.set_coeff(k, c);
    f.set_coeff(-k, std::conj(c));
  }
  return f;
}

BlockTrigPoly random_analytic(Rng& rng, int d, int m) {
  BlockTrigPoly h(d, m);
  for (int k = 0; k <= d; ++k) h.set_coeff(k, random_gaussian(rng, m, m));
  return h;
}

ToeplitzMat random_toeplitz(Rng& rng, int n) {
  ToeplitzMat t(n);
  for (int k = -(n - 1); k <= n - 1; ++k) t.set_symbol(k, rng.gaussian_complex());
  return t;
}

ToeplitzMat random_selfadjoint_toeplitz(Rng& rng, int n) {
  ToeplitzMat t(n);
  t.set_symbol(0, rng.normal());
  for (int k = 1; k <= n - 1; ++k) {
    const cplx c = rng.gaussian_complex();
    t.set_symbol(k, c);
    t.set_symbol(-k, std::conj(c));
  }
  return t;
}

ToeplitzMat random_psd_toeplitz(Rng& rng, int n, int atoms, double shift) {
  ToeplitzMat t(n);
  t.set_symbol(0, shift);
  for (int a = 0; a < atoms; ++a) {
    const double w = rng.uniform(0.1, 1.0);
    t += cplx(w) * pure_atom(n, rng.circle());
  }
  return t;
}

BlockToeplitz random_psd_block_toeplitz(Rng& rng, int n, int m, int atoms, double shift) {
  AtomicMeasure mu;
  mu.block_size = m;
  for (int a = 0; a < atoms; ++a) {
    const cplx lambda = rng.circle();
    mu.atoms.push_back({lambda, random_psd_unit_trace(rng, m)});
  }
  if (shift != 0.0) {
    // uniform grid of n points reproduces shift * I exactly
    for (int j = 0; j < n; ++j) {
      mu.atoms.push_back({circle_point(2.0 * std::numbers::pi * j / n), Mat(shift / n * Mat::Identity(m, m))});
    }
  }
  return mu.reassemble(n);
}

BlockToeplitz random_selfadjoint_block_toeplitz(Rng& rng, int n, int m) {
  BlockToeplitz t(n, m);
  t.set_symbol(0, random_hermitian(rng, m));
  for (int k = 1; k <= n - 1; ++k) {
    const Mat c = random_gaussian(rng, m, m);
    t.set_symbol(k, c);
    t.set_symbol(-k, c.adjoint());
  }
  return t;
}

}  // namespace toeplitz
