#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "toeplitz/block_cones.hpp"
#include "toeplitz/fejer_riesz.hpp"
#include "toeplitz/random.hpp"

using namespace toeplitz;

namespace {

// nm x nm matrix with block (k, l) = tau_{k-l}, assembled entry by entry.
Mat dense_blocks(const BlockToeplitz& t) {
  const int n = t.order();
  const int m = t.block_size();
  Mat out(n * m, n * m);
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) {
      const Mat& s = t.symbol(k - l);
      for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) out(k * m + i, l * m + j) = s(i, j);
      }
    }
  }
  return out;
}

// sum_k tau_{-k} o a_k straight from the definition
Mat schur_sum(const BlockToeplitz& t, const BlockTrigPoly& f) {
  const int n = t.order();
  Mat acc = Mat::Zero(t.block_size(), t.block_size());
  for (int k = -(n - 1); k <= n - 1; ++k) {
    const Mat a = f.coeff_or_zero(k);
    const Mat& s = t.symbol(-k);
    acc += s.cwiseProduct(a);
  }
  return acc;
}

double lambda_min(const Mat& m) {
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

BlockToeplitz shifted(const BlockToeplitz& t, double s) {
  BlockToeplitz out = t;
  out.set_symbol(0, t.symbol(0) + s * Mat::Identity(t.block_size(), t.block_size()));
  return out;
}

// PSD or not with a visible margin: even draws are PSD, odd draws are pushed
// to lambda_min = -0.1.
BlockToeplitz equivalence_instance(Rng& rng, int index, int n, int m) {
  if (index % 2 == 0) return random_psd_block_toeplitz(rng, n, m, rng.integer(1, 3), 0.1);
  const BlockToeplitz t = random_selfadjoint_block_toeplitz(rng, n, m);
  return shifted(t, -lambda_min(dense_blocks(t)) - 0.1);
}

TwoLevelToeplitz constant_one() {
  TwoLevelToeplitz x(1, 1);
  x.set_coeff(0, 0, 1.0);
  return x;
}

}  // namespace

TEST_CASE("min_psd_block examples") {
  BlockToeplitz id(3, 2);
  id.set_symbol(0, Mat::Identity(2, 2));
  CHECK(min_psd_block(id).psd);
  CHECK(min_psd_block(id).min_eigenvalue == doctest::Approx(1.0));

  Rng rng(20);
  Mat g = random_gaussian(rng, 3, 3);
  g = g * g.adjoint();
  const BlockToeplitz atom = BlockToeplitz::kron(pure_atom(4, oracle::on_circle(0.7)), g);
  CHECK(min_psd_block(atom).psd);
  CHECK(oracle::pivoted_cholesky_psd(dense_blocks(atom), 1e-9));

  BlockToeplitz hollow(2, 2);
  hollow.set_symbol(1, Mat::Identity(2, 2));
  hollow.set_symbol(-1, Mat::Identity(2, 2));
  CHECK_FALSE(min_psd_block(hollow).psd);
  CHECK(min_psd_block(hollow).min_eigenvalue == doctest::Approx(-1.0));

  BlockToeplitz skew(2, 1);
  skew.set_symbol(1, Mat::Constant(1, 1, 1.0));
  CHECK_THROWS_AS(min_psd_block(skew), std::invalid_argument);
}

TEST_CASE("min_psd_block agrees with pivoted Cholesky") {
  Rng rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = rng.integer(1, 4);
    const int m = rng.integer(1, 4);
    const BlockToeplitz t = equivalence_instance(rng, trial, n, m);
    CHECK(min_psd_block(t).psd == oracle::pivoted_cholesky_psd(dense_blocks(t), 1e-9));
  }
}

TEST_CASE("schur_pairing_check matches the definition") {
  Rng rng(22);
  const BlockToeplitz t = random_psd_block_toeplitz(rng, 3, 2, 2, 0.1);
  BlockTrigPoly one(0, 2);
  one.set_coeff(0, Mat::Identity(2, 2));
  const SchurPairing diag = schur_pairing_check(t, one);
  CHECK((diag.sum - t.symbol(0).cwiseProduct(Mat::Identity(2, 2))).norm() < 1e-15);
  CHECK(diag.verdict.psd);

  for (int trial = 0; trial < 20; ++trial) {
    const BlockTrigPoly f = hermitian_square(random_analytic(rng, 2, 2));
    const SchurPairing s = schur_pairing_check(t, f);
    CHECK((s.sum - schur_sum(t, f)).norm() < 1e-12);
    CHECK(s.verdict.psd);
  }

  BlockTrigPoly wrong(1, 3);
  CHECK_THROWS_AS(schur_pairing_check(t, wrong), std::invalid_argument);
  BlockTrigPoly negative(0, 2);
  negative.set_coeff(0, -Mat::Identity(2, 2));
  CHECK_THROWS_AS(schur_pairing_check(t, negative), std::invalid_argument);
}

TEST_CASE("witness for the diagonal example") {
  Mat tau0(2, 2);
  tau0 << -1, 0, 0, 1;
  BlockToeplitz t(2, 2);
  t.set_symbol(0, tau0);
  const NonpositivityWitness w = witness_for_nonpositivity(t);
  // brute force: 1* (sum tau_{-k} o a_k) 1
  const Mat s = schur_sum(t, w.f);
  const cplx q = Eigen::VectorXcd::Ones(2).dot(s * Eigen::VectorXcd::Ones(2));
  CHECK(q.real() < 0.0);
  CHECK(q.real() == doctest::Approx(-1.0));
  CHECK(w.quadratic_form == doctest::Approx(q.real()));
  // F = H* H is PSD on the circle
  for (int i = 0; i < 64; ++i) CHECK(lambda_min(eval_on_circle(w.f, oracle::on_circle(oracle::kTwoPi * i / 64))) > -1e-12);

  BlockToeplitz id(2, 2);
  id.set_symbol(0, Mat::Identity(2, 2));
  CHECK_THROWS_WITH_AS(witness_for_nonpositivity(id), doctest::Contains("no witness exists"), std::invalid_argument);
}

TEST_CASE("witnesses refute random non-PSD matrices") {
  Rng rng(23);
  int verified = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = rng.integer(1, 4);
    const int m = rng.integer(1, 4);
    const BlockToeplitz t = equivalence_instance(rng, 1, n, m);
    const NonpositivityWitness w = witness_for_nonpositivity(t);
    const Mat s = schur_sum(t, w.f);
    const double q = Eigen::VectorXcd::Ones(m).dot(s * Eigen::VectorXcd::Ones(m)).real();
    const bool ok = q < 0.0 && std::abs(q - lambda_min(dense_blocks(t))) < 1e-9 && lambda_min(s) < 0.0;
    if (ok) ++verified;
  }
  CHECK(verified == 100);
}

TEST_CASE("equivalence of the two positivity tests") {
  Rng rng(24);
  int disagreements = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const int n = rng.integer(1, 4);
    const int m = rng.integer(1, 4);
    const BlockToeplitz t = equivalence_instance(rng, trial, n, m);
    bool pairing_psd = schur_pairing_check(t, eigenvector_witness(t).f).verdict.psd;
    for (int s = 0; s < 100 && pairing_psd; ++s) {
      const BlockTrigPoly f = hermitian_square(random_analytic(rng, n - 1, m));
      pairing_psd = lambda_min(schur_sum(t, f)) >= -1e-9 * (1.0 + f.coefficient_norm());
    }
    if (pairing_psd != min_psd_block(t).psd) ++disagreements;
  }
  CHECK(disagreements == 0);
}

TEST_CASE("separable_decompose on the identity") {
  const int n = 3;
  const int m = 2;
  BlockToeplitz id(n, m);
  id.set_symbol(0, Mat::Identity(m, m));
  SeparableOptions opts;
  opts.grid = 2 * n - 1;
  const SeparableDecomposition d = separable_decompose(id, opts);
  REQUIRE(d.atoms.size() == 5u);
  CHECK(d.iterations == 1);
  for (const Atom& a : d.atoms) {
    CHECK((a.weight - (1.0 + opts.epsilon) / 5.0 * Mat::Identity(m, m)).norm() < 1e-14);
  }
  CHECK(d.residual < 1e-14);
}

TEST_CASE("separable_decompose on an on-grid atom") {
  const int n = 3;
  Mat g(2, 2);
  g << 2.0, cplx(0.5, 0.5), cplx(0.5, -0.5), 1.0;
  SeparableOptions opts;
  const int grid = 8 * n;
  const cplx lambda = oracle::on_circle(oracle::kTwoPi * 5 / grid);
  const BlockToeplitz t = BlockToeplitz::kron(pure_atom(n, lambda), g);
  const SeparableDecomposition d = separable_decompose(t, opts);
  CHECK(d.residual < opts.tol);
  const auto top = std::max_element(d.atoms.begin(), d.atoms.end(), [](const Atom& a, const Atom& b) {
    return a.weight.trace().real() < b.weight.trace().real();
  });
  REQUIRE(top != d.atoms.end());
  CHECK(std::abs(top->lambda - lambda) < 1e-12);
  // the rest of the mass is the epsilon identity spread over the grid
  CHECK((top->weight - g).norm() < 1e-2);
  double other = 0.0;
  for (const Atom& a : d.atoms) {
    if (&a != &*top) other = std::max(other, a.weight.trace().real());
  }
  CHECK(other < 0.05 * g.trace().real());
}

TEST_CASE("separable_decompose on random strictly PSD input") {
  Rng rng(25);
  const BlockToeplitz t = random_psd_block_toeplitz(rng, 3, 2, 3, 0.1);
  SeparableOptions opts;
  opts.keep_trace = true;
  const SeparableDecomposition d = separable_decompose(t, opts);
  CHECK(d.residual < 1e-6);
  Mat acc = Mat::Zero(6, 6);
  for (const Atom& a : d.atoms) {
    CHECK(lambda_min(a.weight) >= -1e-10);
    CHECK(std::abs(std::abs(a.lambda) - 1.0) < 1e-14);
    acc += oracle::kronecker(oracle::rank_one_atom(3, a.lambda), a.weight);
  }
  const Mat target = dense_blocks(t) + d.epsilon * Mat::Identity(6, 6);
  CHECK((acc - target).norm() <= 1e-6 * (1.0 + dense_blocks(t).norm()));
  CHECK((d.reassemble(3).dense() - acc).norm() < 1e-12);

  // violation trend: window maxima never grow
  REQUIRE(d.violation_trace.size() >= 20u);
  double previous = std::numeric_limits<double>::infinity();
  for (std::size_t w = 0; w + 10 <= d.violation_trace.size(); w += 10) {
    const double peak = *std::max_element(d.violation_trace.begin() + static_cast<std::ptrdiff_t>(w),
                                          d.violation_trace.begin() + static_cast<std::ptrdiff_t>(w + 10));
    CHECK(peak <= previous + 1e-12);
    previous = peak;
  }
}

TEST_CASE("separable_decompose rejects non-PSD input") {
  BlockToeplitz t(2, 1);
  t.set_symbol(0, Mat::Constant(1, 1, 1.0));
  t.set_symbol(1, Mat::Constant(1, 1, 2.0));
  t.set_symbol(-1, Mat::Constant(1, 1, 2.0));
  CHECK_THROWS_AS(separable_decompose(t), std::invalid_argument);
}

TEST_CASE("two-level certificates") {
  const MinPositivityCertificate one = certify_two_level_min_positive(constant_one(), 64);
  CHECK(one.floor == doctest::Approx(1.0));
  CHECK(one.certified);

  TwoLevelToeplitz hollow(2, 1);
  hollow.set_coeff(1, 0, 1.0);
  hollow.set_coeff(-1, 0, 1.0);
  const MinPositivityCertificate h = certify_two_level_min_positive(hollow, 64);
  CHECK(h.floor < 0.0);
  CHECK_FALSE(h.certified);
  // z + 1/z reaches -2 at z = -1
  CHECK(h.floor == doctest::Approx(-2.0));
}

TEST_CASE("certificate soundness off the grid") {
  const TwoLevelToeplitz x = min_max_element();
  const MinPositivityCertificate c = certify_two_level_min_positive(x, 512);
  REQUIRE(c.certified);
  Rng rng(26);
  double worst = std::numeric_limits<double>::infinity();
  for (int s = 0; s < 100000; ++s) {
    const cplx z = oracle::on_circle(rng.uniform(0.0, oracle::kTwoPi));
    const cplx w = oracle::on_circle(rng.uniform(0.0, oracle::kTwoPi));
    worst = std::min(worst, lambda_min(x.eval_functions(z, w)));
  }
  CHECK(worst > 0.0);
  CHECK(worst >= c.certified_margin);
}

TEST_CASE("Lipschitz bound holds on random pairs") {
  Rng rng(27);
  const TwoLevelToeplitz x = min_max_element();
  const double lip = x.lipschitz(Realization::functions);
  for (int s = 0; s < 2000; ++s) {
    const double a = rng.uniform(0.0, oracle::kTwoPi);
    const double b = rng.uniform(0.0, oracle::kTwoPi);
    const double da = rng.uniform(-0.3, 0.3);
    const double db = rng.uniform(-0.3, 0.3);
    const double v0 = min_eigenvalue_at(x, Realization::functions, oracle::on_circle(a), oracle::on_circle(b));
    const double v1 =
        min_eigenvalue_at(x, Realization::functions, oracle::on_circle(a + da), oracle::on_circle(b + db));
    CHECK(std::abs(v0 - v1) <= lip * (std::abs(da) + std::abs(db)) + 1e-12);
  }
}

TEST_CASE("min_max_element is the stated function") {
  const TwoLevelToeplitz x = min_max_element();
  Rng rng(28);
  for (int s = 0; s < 20; ++s) {
    const cplx z = rng.circle();
    const cplx w = rng.circle();
    Mat b1(2, 2);
    b1 << w, 0.0, 2.0 / w, -w;
    const Mat expect = 3.0 * Mat::Identity(2, 2) + z * b1 + (1.0 / z) * b1.adjoint();
    CHECK((x.eval_functions(z, w) - expect).norm() < 1e-13);
  }
}

TEST_CASE("min is not max") {
  Mat m(4, 4);
  m << 0, 0, 1, 0, 0, 0, 2, -1, 1, 2, 3, 0, 0, -1, 0, 3;
  CHECK((obstruction_matrix(0.0, 0.0) - m).norm() == 0.0);
  CHECK(lambda_min(m) < 0.0);

  const MinMaxReport r = min_neq_max_demo(512);
  CHECK(r.certificate.certified);
  CHECK(r.certificate.certified_margin > 0.0);
  CHECK(r.obstruction_max < -0.01);
  CHECK(r.obstruction_at_origin == doctest::Approx(lambda_min(m)));
  CHECK(r.established);
  // the reported maximizer is inside the square and consistent
  CHECK(r.h11 >= 0.0);
  CHECK(r.h11 <= 3.0);
  CHECK(r.h22 >= 0.0);
  CHECK(r.h22 <= 3.0);
  CHECK(lambda_min(obstruction_matrix(r.h11, r.h22)) == doctest::Approx(r.obstruction_max));
  // coarse independent scan never beats the reported maximum
  double coarse = -std::numeric_limits<double>::infinity();
  for (int i = 0; i <= 60; ++i) {
    for (int j = 0; j <= 60; ++j) coarse = std::max(coarse, lambda_min(obstruction_matrix(0.05 * i, 0.05 * j)));
  }
  CHECK(coarse <= r.obstruction_max + 1e-9);
}
