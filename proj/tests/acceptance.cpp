// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "toeplitz/block_cones.hpp"
#include "toeplitz/cli.hpp"
#include "toeplitz/duality.hpp"
#include "toeplitz/entanglement.hpp"
#include "toeplitz/fejer_riesz.hpp"
#include "toeplitz/hardy.hpp"
#include "toeplitz/json_io.hpp"
#include "toeplitz/random.hpp"

using namespace toeplitz;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

double lambda_min(const Mat& m) {
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

Verdict duality_identity() {
  Rng rng(101);
  double worst = 0.0;
  const auto t0 = Clock::now();
  for (int i = 0; i < 1000; ++i) {
    const int n = rng.integer(1, 8);
    const TrigPoly f = random_trig_poly(rng, n - 1);
    const cplx lambda = rng.circle();
    worst = std::max(worst, std::abs(pair(pure_atom(n, lambda), f) - oracle::laurent(f.coeffs(), lambda)));
  }
  const double elapsed = seconds_since(t0);
  return {worst < 1e-10 && elapsed < 1.0, "max error " + fmt("%.2e", worst) + ", " + fmt("%.3f", elapsed) + " s"};
}

Verdict basis_duality() {
  long mismatches = 0;
  long checked = 0;
  for (int n = 1; n <= 8; ++n) {
    for (int k = -(n - 1); k <= n - 1; ++k) {
      for (int j = -(n - 1); j <= n - 1; ++j) {
        ++checked;
        if (pair(basis_r(n, k), TrigPoly::chi(j)) != cplx(j == -k ? 1.0 : 0.0)) ++mismatches;
      }
    }
  }
  return {mismatches == 0, std::to_string(checked) + " pairs, " + std::to_string(mismatches) + " inexact"};
}

Verdict fejer_riesz_round_trip() {
  Rng rng(103);
  std::vector<double> times;
  double worst = 0.0;
  int failures = 0;
  for (int i = 0; i < 200; ++i) {
    const int m = rng.integer(1, 3);
    const int d = rng.integer(0, 5);
    const BlockTrigPoly f = hermitian_square(random_analytic(rng, d, m));
    const auto t0 = Clock::now();
    try {
      const FejerRieszFactor h = factor_matrix(f);
      times.push_back(seconds_since(t0));
      worst = std::max(worst, convolution_check(h, f));
    } catch (const std::exception&) {
      times.push_back(seconds_since(t0));
      ++failures;
    }
  }
  std::nth_element(times.begin(), times.begin() + 100, times.end());
  const double median = times[100];
  return {failures == 0 && worst < 1e-7 && median < 0.5, "max residual " + fmt("%.2e", worst) + ", median " +
                                                             fmt("%.2e", median) + " s, " + std::to_string(failures) +
                                                             " failures"};
}

Verdict equivalence_suite() {
  int disagreements = 0;
  int psd = 0;
  for (int i = 0; i < 100; ++i) {
    Rng rng(104, static_cast<std::uint64_t>(i));
    const int n = rng.integer(1, 4);
    const int m = rng.integer(1, 4);
    BlockToeplitz t;
    if (i % 2 == 0) {
      t = random_psd_block_toeplitz(rng, n, m, rng.integer(1, 3), 0.1);
    } else {
      t = random_selfadjoint_block_toeplitz(rng, n, m);
      t.set_symbol(0, t.symbol(0) - (lambda_min(t.dense()) + 0.1) * Mat::Identity(m, m));
    }
    const bool by_eigen = min_psd_block(t).psd;
    psd += by_eigen ? 1 : 0;
    bool by_pairing = schur_pairing_check(t, eigenvector_witness(t).f).verdict.psd;
    for (int s = 0; s < 500; ++s) {
      const BlockTrigPoly f = hermitian_square(random_analytic(rng, n - 1, m));
      if (!schur_pairing_check(t, f).verdict.psd) by_pairing = false;
    }
    if (by_eigen != by_pairing) ++disagreements;
  }
  return {disagreements == 0, std::to_string(disagreements) + " disagreements, " + std::to_string(psd) + "/100 PSD"};
}

Verdict caratheodory() {
  Rng rng(105);
  int bad = 0;
  double worst_residual = 0.0;
  double worst_circle = 0.0;
  for (int i = 0; i < 200; ++i) {
    const int n = rng.integer(1, 8);
    const double shift = i % 2 == 0 ? 0.0 : rng.uniform(0.01, 1.0);
    const ToeplitzMat t = random_psd_toeplitz(rng, n, rng.integer(1, n + 2), shift);
    try {
      const CaratheodoryDecomposition d = caratheodory_decompose(t);
      Mat acc = Mat::Zero(n, n);
      for (const Atom& a : d.measure.atoms) {
        worst_circle = std::max(worst_circle, std::abs(std::abs(a.lambda) - 1.0));
        acc += a.weight(0, 0) * oracle::rank_one_atom(n, a.lambda);
        if (a.weight(0, 0).real() < -1e-12) ++bad;
      }
      worst_residual = std::max(worst_residual, (acc - t.dense()).cwiseAbs().maxCoeff());
      if (d.measure.atoms.size() > static_cast<std::size_t>(2 * n - 1)) ++bad;
    } catch (const std::exception&) {
      ++bad;
    }
  }
  return {bad == 0 && worst_residual < 1e-8 && worst_circle < 1e-8,
          "max reassembly " + fmt("%.2e", worst_residual) + ", max |1-|lambda|| " + fmt("%.2e", worst_circle) + ", " +
              std::to_string(bad) + " bad"};
}

Verdict gurvits() {
  Rng rng(106);
  double worst_residual = 0.0;
  double worst_weight = 0.0;
  double slowest = 0.0;
  int failures = 0;
  for (int i = 0; i < 50; ++i) {
    const int n = rng.integer(1, 4);
    const int m = rng.integer(1, 4);
    const BlockToeplitz t = random_psd_block_toeplitz(rng, n, m, rng.integer(1, 4), 0.1);
    const auto t0 = Clock::now();
    try {
      const SeparableDecomposition d = separable_decompose(t);
      worst_residual = std::max(worst_residual, d.residual);
      for (const Atom& a : d.atoms) worst_weight = std::min(worst_weight, lambda_min(a.weight));
    } catch (const std::exception&) {
      ++failures;
    }
    slowest = std::max(slowest, seconds_since(t0));
  }
  return {failures == 0 && worst_residual < 1e-6 && worst_weight >= -1e-10 && slowest < 10.0,
          "max residual " + fmt("%.2e", worst_residual) + ", min weight eigenvalue " + fmt("%.2e", worst_weight) +
              ", slowest " + fmt("%.2f", slowest) + " s, " + std::to_string(failures) + " failures"};
}

Verdict min_neq_max() {
  const MinMaxReport r = min_neq_max_demo(512);
  return {r.certificate.certified && r.certificate.certified_margin > 0.0 && r.obstruction_max < -0.01,
          "delta " + fmt("%.4f", r.certificate.certified_margin) + ", max lambda_min(M) " +
              fmt("%.4f", r.obstruction_max)};
}

Verdict xi_certificate() {
  bool ok = certify_entangled(build_xi(1)).verdict == "separable";
  double worst_ratio = 0.0;
  for (int n = 2; n <= 8; ++n) {
    const EntanglementCertificate c = certify_entangled(build_xi(n), 1024);
    ok = ok && c.verdict == "entangled";
    // independent rank check on the oracle matrix
    for (int s = 0; s < 1024; ++s) {
      const cplx z = oracle::on_circle(oracle::kTwoPi * s / 1024);
      Eigen::SelfAdjointEigenSolver<Mat> es(oracle::rank_one_atom(n, z), Eigen::EigenvaluesOnly);
      worst_ratio = std::max(worst_ratio, std::abs(es.eigenvalues()(n - 2)) / n);
    }
    worst_ratio = std::max(worst_ratio, c.rank_profile / n);
  }
  return {ok && worst_ratio < 1e-10, "max second eigenvalue / n " + fmt("%.2e", worst_ratio)};
}

Verdict purity_search() {
  double worst = 0.0;
  int violations = 0;
  for (int n : {2, 3}) {
    Rng rng(109, static_cast<std::uint64_t>(n));
    const XiMatrix x = build_xi(n);
    for (int i = 0; i < 1000; ++i) {
      TwoLevelToeplitz eta(n, n);
      for (int k = 0; k <= n - 1; ++k) {
        const cplx c = k == 0 ? cplx(rng.normal()) : rng.gaussian_complex();
        eta.set_coeff(k, -k, c);
        eta.set_coeff(-k, k, std::conj(c));
      }
      eta = (1.0 / eta.coefficient_norm()) * eta;
      const double s = max_feasible_step(x, eta, 64);
      const TwoLevelToeplitz f = cplx(0.5) * x.element + cplx(s) * eta;
      try {
        const PuritySplit p = purity_split_check(f, x.element - f, n, 1e-6, 64);
        worst = std::max(worst, p.deviation);
        if (!p.proportional) ++violations;
      } catch (const std::exception&) {
        ++violations;
      }
    }
  }
  return {violations == 0 && worst < 1e-6,
          "max deviation " + fmt("%.2e", worst) + ", " + std::to_string(violations) + " violations"};
}

Verdict hardy_floor() {
  TrigPoly f(1);
  f.set_coeff(-1, 1.0);
  f.set_coeff(0, 2.0);
  f.set_coeff(1, 1.0);
  double worst = 0.0;
  for (const FloorPoint& p : spectral_floor_trend(f, {8, 32, 128})) {
    worst = std::max(worst, std::abs(p.min_eigenvalue - (2.0 - 2.0 * std::cos(std::numbers::pi / (p.size + 1)))));
  }
  f.set_coeff(0, 1.0);
  const bool t2_psd = oracle::pivoted_cholesky_psd(truncate_symbol(f, 2).dense(), 1e-12);
  const CircleMinimum m = certified_circle_minimum(f);
  const bool min_ok = std::abs(m.value + 1.0) < 1e-9 && std::abs(m.lower_bound + 1.0) < 1e-9;
  return {worst < 1e-10 && t2_psd && min_ok, "closed-form error " + fmt("%.2e", worst) + ", t_f PSD " +
                                                 (t2_psd ? "yes" : "no") + ", circle min " + fmt("%.12f", m.value) +
                                                 " (bound " + fmt("%.12f", m.lower_bound) + ")"};
}

Verdict choi() {
  Mat g(3, 3);
  g << 2, -1, -1, -1, 2, -1, -1, -1, 2;
  const ChoiReport base = choi_map_demo(pure_atom(3, 1.0));
  const Eigen::VectorXd ev = base.g_eigenvalues;
  const bool eig_ok = std::abs(ev(0)) < 1e-12 && std::abs(ev(1) - 3.0) < 1e-12 && std::abs(ev(2) - 3.0) < 1e-12;
  Rng rng(111);
  int inexact = 0;
  int not_psd = 0;
  for (int i = 0; i < 100; ++i) {
    const Mat x = random_toeplitz(rng, 3).dense();
    if (choi_map(x) != x.cwiseProduct(g)) ++inexact;
    const ToeplitzMat p = random_psd_toeplitz(rng, 3, rng.integer(1, 4), i % 2 == 0 ? 0.0 : 0.05);
    if (!choi_map_demo(p).psi_psd.psd || !oracle::pivoted_cholesky_psd(choi_map(p.dense()), 1e-10)) ++not_psd;
  }
  return {eig_ok && inexact == 0 && not_psd == 0, "g eigenvalues ok " + std::string(eig_ok ? "yes" : "no") + ", " +
                                                      std::to_string(inexact) + " inexact, " +
                                                      std::to_string(not_psd) + " not PSD"};
}

// Every command once, with inputs written to a scratch directory.
std::vector<std::string> cli_sweep(const std::string& dir) {
  auto write = [&](const std::string& name, const json& j) {
    const std::string path = dir + "/" + name;
    std::FILE* f = std::fopen(path.c_str(), "w");
    const std::string text = dump17(j);
    std::fwrite(text.data(), 1, text.size(), f);
    std::fclose(f);
    return path;
  };
  Rng rng(112);
  TrigPoly tri(1);
  tri.set_coeff(-1, 1.0);
  tri.set_coeff(0, 1.0);
  tri.set_coeff(1, 1.0);
  const std::string t_path = write("t.json", to_json(random_psd_toeplitz(rng, 4, 3, 0.1)));
  const std::string c_path = write("c.json", to_json(random_psd_toeplitz(rng, 3, 2, 0.0)));
  const std::string b_path = write("b.json", to_json(random_psd_block_toeplitz(rng, 2, 2, 2, 0.1)));
  const std::string f_path = write("f.json", to_json(hermitian_square(random_analytic(rng, 2, 2))));
  const std::string s_path = write("s.json", to_json(tri));
  const std::string p_path =
      write("p.json", json{{"t", to_json(pure_atom(3, rng.circle()))}, {"f", to_json(random_trig_poly(rng, 2))}});

  std::vector<RunConfig> configs;
  auto add = [&](const std::string& cmd, const std::string& path) {
    RunConfig c;
    c.command = cmd;
    c.json_path = path;
    c.seed = 3;
    configs.push_back(c);
    return &configs.back();
  };
  add("psd", b_path);
  add("pair", p_path);
  add("factorize", f_path);
  add("caratheodory", t_path);
  add("separate", b_path);
  add("equiv-check", "")->n = 10;
  add("counterexample", "")->subcommand = "minmax";
  add("xi", "")->n = 4;
  add("choi-demo", c_path)->tol = 1e-9;
  add("hardy", s_path)->sizes = {8, 32};
  add("fourier0", s_path)->p = 7;
  std::vector<std::string> reports;
  for (const RunConfig& c : configs) reports.push_back(run(c).report);
  return reports;
}

Verdict determinism() {
  const std::string dir = "acceptance_scratch";
  std::filesystem::create_directories(dir);
  const auto first = cli_sweep(dir);
  const auto second = cli_sweep(dir);
  std::filesystem::remove_all(dir);
  int differing = 0;
  std::string errors;
  for (std::size_t i = 0; i < first.size(); ++i) {
    if (first[i] != second[i]) ++differing;
    const json j = json::parse(first[i]);
    if (j.contains("error")) errors += " " + j.at("command").get<std::string>() + ": " + j.at("error").get<std::string>();
  }
  return {differing == 0 && errors.empty(),
          std::to_string(first.size()) + " commands, " + std::to_string(differing) + " differing" +
              (errors.empty() ? "" : ", errors:" + errors)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"duality identity", duality_identity},
      {"basis duality", basis_duality},
      {"Fejer-Riesz round trip", fejer_riesz_round_trip},
      {"positivity equivalence", equivalence_suite},
      {"Caratheodory decomposition", caratheodory},
      {"separable decomposition", gurvits},
      {"min is not max", min_neq_max},
      {"xi certificate", xi_certificate},
      {"purity search", purity_search},
      {"Hardy floor", hardy_floor},
      {"Choi demo", choi},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = Clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    if (!v.pass) ++failed;
    std::printf("%s %2zu  %-28s %s [%.2f s]\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                v.detail.c_str(), seconds_since(t0));
    std::fflush(stdout);
  }
  return failed;
}
