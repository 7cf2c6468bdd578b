#include "toeplitz/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "toeplitz/block_cones.hpp"
#include "toeplitz/duality.hpp"
#include "toeplitz/entanglement.hpp"
#include "toeplitz/fejer_riesz.hpp"
#include "toeplitz/hardy.hpp"
#include "toeplitz/json_io.hpp"
#include "toeplitz/random.hpp"

namespace toeplitz {

namespace {

struct Outcome {
  int code;
  json body;
};

json input(const RunConfig& c) {
  if (c.json_path.empty()) throw std::invalid_argument(c.command + " needs --json <path>");
  return read_json_file(c.json_path);
}

json psd_json(const PsdReport& r) { return {{"psd", r.psd}, {"min_eigenvalue", r.min_eigenvalue}}; }

Tolerance eig_tolerance(const RunConfig& c) {
  Tolerance t;
  if (c.tol) t.eig_tol = *c.tol;
  return t;
}

Outcome cmd_psd(const RunConfig& c) {
  const BlockToeplitz t = block_toeplitz_from_json(input(c));
  if (!t.is_selfadjoint(1e-8 * (1.0 + t.dense().norm()))) throw std::invalid_argument("matrix is not selfadjoint");
  const Tolerance tol = eig_tolerance(c);
  const PsdReport r = min_psd_block(t, tol);
  json body = {{"claim", "PSD test of the materialized block Toeplitz matrix"},
               {"n", t.order()},
               {"m", t.block_size()},
               {"eig_tol", tol.eig_tol}};
  body.update(psd_json(r));
  return {r.psd ? 0 : 1, body};
}

Outcome cmd_pair(const RunConfig& c) {
  const json j = input(c);
  if (!j.contains("t") || !j.contains("f")) throw std::invalid_argument("schema: pair input needs \"t\" and \"f\"");
  const ToeplitzMat t = toeplitz_from_json(j.at("t"));
  const TrigPoly f = trig_poly_from_json(j.at("f"));
  const cplx v = pair(t, f);
  return {0, {{"claim", "duality pairing sum_k tau_{-k} a_k"}, {"value", to_json(v)}}};
}

Outcome cmd_factorize(const RunConfig& c) {
  const json j = input(c);
  Tolerance tol;
  if (c.tol) tol.residual_tol = *c.tol;
  FejerRieszFactor h;
  json hj;
  if (j.contains("m")) {
    h = factor_matrix(block_trig_poly_from_json(j), tol);
    hj = to_json(h.h);
  } else {
    h = factor_scalar(trig_poly_from_json(j), tol);
    TrigPoly s(h.h.degree_bound());
    for (int k = 0; k <= h.h.degree_bound(); ++k) s.set_coeff(k, h.h.coeff(k)(0, 0));
    hj = to_json(s);
  }
  json body = {{"claim", "spectral factorization F = H* H with H analytic"},
               {"H", hj},
               {"residual", h.residual},
               {"iterations", h.iterations},
               {"regularization", h.regularization}};
  return {h.residual < tol.residual_tol ? 0 : 2, body};
}

Outcome cmd_caratheodory(const RunConfig& c) {
  const ToeplitzMat t = toeplitz_from_json(input(c));
  Tolerance tol;
  if (c.tol) tol.eig_tol = *c.tol;
  const PsdReport r = is_psd(t.dense(), tol);
  if (!r.psd) {
    json body = {{"claim", "PSD Toeplitz matrices are moment matrices of atomic measures on the circle"}};
    body.update(psd_json(r));
    return {1, body};
  }
  const CaratheodoryDecomposition d = caratheodory_decompose(t, tol);
  return {0,
          {{"claim", "PSD Toeplitz matrices are moment matrices of atomic measures on the circle"},
           {"measure", to_json(d.measure)},
           {"atoms", d.measure.atoms.size()},
           {"residual", d.residual},
           {"root_deviation", d.root_deviation},
           {"extension", to_json(d.extension)}}};
}

Outcome cmd_separate(const RunConfig& c) {
  const BlockToeplitz t = block_toeplitz_from_json(input(c));
  SeparableOptions opts;
  opts.epsilon = c.eps;
  opts.grid = c.grid;
  if (c.tol) opts.tol = *c.tol;
  const PsdReport r = min_psd_block(t);
  json body = {{"claim", "PSD block Toeplitz matrices are separable: T + eps I = sum_j Lambda(lambda_j) (x) g_j"}};
  if (!r.psd) {
    body.update(psd_json(r));
    return {1, body};
  }
  const SeparableDecomposition d = separable_decompose(t, opts);
  AtomicMeasure mu;
  mu.block_size = t.block_size();
  mu.atoms = d.atoms;
  double worst = 0.0;
  for (const auto& a : d.atoms) worst = std::min(worst, min_eigenvalue(a.weight));
  body.update({{"measure", to_json(mu)},
               {"epsilon", d.epsilon},
               {"residual", d.residual},
               {"grid", d.grid},
               {"iterations", d.iterations},
               {"min_weight_eigenvalue", worst}});
  return {0, body};
}

struct EquivResult {
  bool psd_by_eigen = false;
  bool psd_by_pairing = true;
  double witness_form = 0.0;
  double worst_random = 0.0;
};

EquivResult equiv_instance(const BlockToeplitz& t, int samples, Rng& rng) {
  EquivResult out;
  const Tolerance tol;
  out.psd_by_eigen = min_psd_block(t, tol).psd;
  const int n = t.order();
  const int m = t.block_size();
  out.worst_random = std::numeric_limits<double>::infinity();
  for (int s = 0; s < samples; ++s) {
    const BlockTrigPoly f = hermitian_square(random_analytic(rng, n - 1, m));
    const SchurPairing p = schur_pairing_check(t, f, tol);
    out.worst_random = std::min(out.worst_random, p.verdict.min_eigenvalue);
    if (!p.verdict.psd) out.psd_by_pairing = false;
  }
  const NonpositivityWitness w = eigenvector_witness(t);
  out.witness_form = w.quadratic_form;
  if (schur_pairing_check(t, w.f, tol).verdict.min_eigenvalue < -tol.eig_tol || w.quadratic_form < -tol.eig_tol) {
    out.psd_by_pairing = false;
  }
  return out;
}

Outcome cmd_equiv(const RunConfig& c) {
  const int samples = c.samples > 0 ? c.samples : 500;
  json body = {{"claim", "T is PSD iff sum_k tau_{-k} o a_k is PSD for every PSD-valued symbol F"},
               {"seed", c.seed},
               {"samples_per_instance", samples}};
  if (!c.json_path.empty()) {
    const BlockToeplitz t = block_toeplitz_from_json(input(c));
    Rng rng(c.seed);
    const EquivResult r = equiv_instance(t, samples, rng);
    body.update({{"psd_by_eigen", r.psd_by_eigen},
                 {"psd_by_pairing", r.psd_by_pairing},
                 {"witness_quadratic_form", r.witness_form},
                 {"min_random_pairing_eigenvalue", r.worst_random},
                 {"agree", r.psd_by_eigen == r.psd_by_pairing}});
    if (r.psd_by_eigen != r.psd_by_pairing) return {2, body};
    return {r.psd_by_eigen ? 0 : 1, body};
  }
  const int instances = c.n > 0 ? c.n : 100;
  int disagreements = 0;
  int psd_count = 0;
  json rows = json::array();
  for (int i = 0; i < instances; ++i) {
    Rng rng(c.seed, static_cast<std::uint64_t>(i));
    const int n = rng.integer(1, 4);
    const int m = rng.integer(1, 4);
    BlockToeplitz t;
    if (i % 2 == 0) {
      t = random_psd_block_toeplitz(rng, n, m, rng.integer(1, 3), 0.1);
    } else {
      t = random_selfadjoint_block_toeplitz(rng, n, m);
      const double shift = -min_eigenvalue(t.dense()) - 0.1;
      Mat s0 = t.symbol(0) + shift * Mat::Identity(m, m);
      t.set_symbol(0, std::move(s0));
    }
    const EquivResult r = equiv_instance(t, samples, rng);
    psd_count += r.psd_by_eigen ? 1 : 0;
    if (r.psd_by_eigen != r.psd_by_pairing) ++disagreements;
    rows.push_back({{"n", n},
                    {"m", m},
                    {"psd_by_eigen", r.psd_by_eigen},
                    {"psd_by_pairing", r.psd_by_pairing},
                    {"witness_quadratic_form", r.witness_form}});
  }
  body.update({{"instances", instances}, {"psd_instances", psd_count}, {"disagreements", disagreements}, {"results", rows}});
  return {disagreements == 0 ? 0 : 2, body};
}

Outcome cmd_counterexample(const RunConfig& c) {
  if (c.subcommand != "minmax") throw std::invalid_argument("counterexample needs the subcommand \"minmax\"");
  const MinMaxReport r = min_neq_max_demo(c.grid > 0 ? c.grid : 512);
  const auto& cert = r.certificate;
  json body = {{"claim", "a min-positive two-level element that is not max-positive"},
               {"certificate",
                {{"grid", cert.grid},
                 {"floor", cert.floor},
                 {"lipschitz", cert.lipschitz},
                 {"certified_margin", cert.certified_margin},
                 {"certified", cert.certified},
                 {"argmin_z", to_json(cert.argmin_z)},
                 {"argmin_w", to_json(cert.argmin_w)}}},
               {"delta", cert.certified_margin},
               {"obstruction_max_min_eigenvalue", r.obstruction_max},
               {"obstruction_argmax", {r.h11, r.h22}},
               {"obstruction_at_origin", r.obstruction_at_origin},
               {"established", r.established}};
  return {r.established ? 0 : 2, body};
}

Outcome cmd_xi(const RunConfig& c) {
  const int n = c.n > 0 ? c.n : 2;
  const int samples = c.samples > 0 ? c.samples : 1024;
  const EntanglementCertificate cert = certify_entangled(build_xi(n), samples, c.tol.value_or(1e-10));
  json body = {{"claim", "xi_n is rank one valued with a nonzero off-diagonal entry, hence entangled for n >= 2"},
               {"n", n},
               {"samples", samples},
               {"rank_profile", cert.rank_profile},
               {"verdict", cert.verdict}};
  if (cert.entangled) {
    body["off_diagonal_witness"] = {{"k", cert.witness_k},
                                    {"l", cert.witness_l},
                                    {"z", to_json(cert.witness_z)},
                                    {"modulus", cert.witness_modulus}};
  }
  return {cert.entangled ? 1 : 0, body};
}

Outcome cmd_choi(const RunConfig& c) {
  ToeplitzMat x = ToeplitzMat(3);
  x.set_symbol(0, 1.0);
  if (!c.json_path.empty()) x = toeplitz_from_json(input(c));
  const ChoiReport r = choi_map_demo(x, eig_tolerance(c));
  json eig = json::array();
  for (Eigen::Index i = 0; i < r.g_eigenvalues.size(); ++i) eig.push_back(r.g_eigenvalues(i));
  const bool ok = r.schur_agreement <= 1e-12 && r.psi_psd.psd;
  return {ok ? 0 : 1,
          {{"claim", "on Toeplitz x the Choi map is the Schur multiplier by the PSD matrix g"},
           {"psi", to_json(r.psi)},
           {"g", to_json(r.g)},
           {"g_eigenvalues", eig},
           {"gershgorin_lower", r.gershgorin_lower},
           {"schur_agreement", r.schur_agreement},
           {"psi_psd", psd_json(r.psi_psd)}}};
}

Outcome cmd_hardy(const RunConfig& c) {
  const TrigPoly f = trig_poly_from_json(input(c));
  const std::vector<int> sizes = c.sizes.empty() ? std::vector<int>{8, 16, 32, 64, 128} : c.sizes;
  const auto trend = spectral_floor_trend(f, sizes);
  const CircleMinimum cm = certified_circle_minimum(f, c.grid > 0 ? c.grid : 1 << 14);
  json rows = json::array();
  for (const auto& pt : trend) rows.push_back({{"N", pt.size}, {"min_eigenvalue", pt.min_eigenvalue}});
  return {0,
          {{"claim", "finite-section spectral floors decrease to min f over the circle"},
           {"trend", rows},
           {"circle_minimum", {{"value", cm.value}, {"lower_bound", cm.lower_bound}, {"theta", cm.theta}}}}};
}

Outcome cmd_fourier0(const RunConfig& c) {
  const TrigPoly f = trig_poly_from_json(input(c));
  if (c.p <= 0) throw std::invalid_argument("fourier0 needs --p <prime>");
  const cplx v = fourier_coeff_via_roots(f, c.p, c.m);
  return {0,
          {{"claim", "the average of f over the p-th roots of unity is its constant coefficient"},
           {"p", c.p},
           {"value", to_json(v)},
           {"coeff0", to_json(f.coeff(0))},
           {"difference", std::abs(v - f.coeff(0))}}};
}

std::string hardy_csv(const json& body) {
  std::ostringstream out;
  out << "N,min_eigenvalue\n";
  for (const auto& row : body.at("trend")) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", row.at("min_eigenvalue").get<double>());
    out << row.at("N").get<int>() << ',' << buf << '\n';
  }
  return out.str();
}

}  // namespace

RunResult run(const RunConfig& config) {
  RunResult result;
  json body;
  try {
    Outcome o{2, {}};
    const std::string& cmd = config.command;
    if (cmd == "psd") o = cmd_psd(config);
    else if (cmd == "pair") o = cmd_pair(config);
    else if (cmd == "factorize") o = cmd_factorize(config);
    else if (cmd == "caratheodory") o = cmd_caratheodory(config);
    else if (cmd == "separate") o = cmd_separate(config);
    else if (cmd == "equiv-check") o = cmd_equiv(config);
    else if (cmd == "counterexample") o = cmd_counterexample(config);
    else if (cmd == "xi") o = cmd_xi(config);
    else if (cmd == "choi-demo") o = cmd_choi(config);
    else if (cmd == "hardy") o = cmd_hardy(config);
    else if (cmd == "fourier0") o = cmd_fourier0(config);
    else throw std::invalid_argument("unknown command \"" + cmd + "\"");
    result.exit_code = o.code;
    if (cmd == "hardy" && config.csv) {
      result.report = hardy_csv(o.body);
      return result;
    }
    body = std::move(o.body);
  } catch (const std::exception& e) {
    result.exit_code = 2;
    result.diagnostic = e.what();
    body = {{"error", e.what()}};
  }
  body["command"] = config.command;
  body["exit_code"] = result.exit_code;
  result.report = dump17(body) + "\n";
  return result;
}

}  // namespace toeplitz
