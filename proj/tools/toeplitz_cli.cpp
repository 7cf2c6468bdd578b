#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "toeplitz/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Positivity, duality and separability tools for Toeplitz matrices"};
  app.require_subcommand(1);

  toeplitz::RunConfig config;
  std::string out_path;
  double tol = 0.0;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--tol", tol, "Tolerance (meaning depends on the command)");
    sub->add_option("--grid", config.grid, "Grid size");
    sub->add_option("--seed", config.seed, "Seed for randomized procedures");
    sub->add_option("--json", config.json_path, "Input JSON file");
    sub->add_option("--out", out_path, "Write the report here instead of stdout");
  };

  std::vector<CLI::App*> subs;
  const std::map<std::string, std::string> about = {
      {"psd", "eigenvalue PSD test of a (block) Toeplitz matrix"},
      {"pair", "pairing of a Toeplitz matrix with a trigonometric polynomial"},
      {"factorize", "Fejer-Riesz factorization F = H* H"},
      {"caratheodory", "atomic decomposition of a PSD scalar Toeplitz matrix"},
      {"separate", "separable decomposition of T + eps I on a circle grid"},
      {"equiv-check", "eigenvalue test vs Schur pairing test, one input or a seeded suite"},
      {"counterexample", "counterexample minmax: min-positive but not max-positive"},
      {"xi", "entanglement certificate for the maximally entangled element"},
      {"choi-demo", "Choi map as a Schur multiplier on 3 x 3 Toeplitz matrices"},
      {"hardy", "finite-section spectral floors of a symbol"},
      {"fourier0", "constant coefficient from an average over prime roots of unity"}};
  for (const auto& name : toeplitz::kCommands) subs.push_back(app.add_subcommand(name, about.at(name)));
  for (auto* sub : subs) common(sub);

  auto* separate = app.get_subcommand("separate");
  separate->add_option("--eps", config.eps, "Regularization added to T");
  auto* equiv = app.get_subcommand("equiv-check");
  equiv->add_option("--n", config.n, "Number of random instances (without --json)");
  equiv->add_option("--samples", config.samples, "Random PSD symbols per instance");
  app.get_subcommand("counterexample")->add_option("which", config.subcommand, "Counterexample name (minmax)")->required();
  auto* xi = app.get_subcommand("xi");
  xi->add_option("--n", config.n, "Order of xi");
  xi->add_option("--samples", config.samples, "Circle samples");
  auto* hardy = app.get_subcommand("hardy");
  hardy->add_option("--symbol", config.json_path, "Symbol JSON (same as --json)");
  hardy->add_option("--sizes", config.sizes, "Section sizes")->delimiter(',');
  hardy->add_flag("--csv", config.csv, "Emit the trend as CSV");
  auto* fourier = app.get_subcommand("fourier0");
  fourier->add_option("--p", config.p, "Prime number of roots of unity");
  fourier->add_option("--m", config.m, "Degree bound parameter (default d + 1)");

  CLI11_PARSE(app, argc, argv);

  config.command = app.get_subcommands().front()->get_name();
  for (auto* sub : subs) {
    if (sub->parsed() && sub->get_option("--tol")->count() > 0) config.tol = tol;
  }

  const toeplitz::RunResult r = toeplitz::run(config);
  if (!r.diagnostic.empty()) std::cerr << "error: " << r.diagnostic << '\n';
  if (out_path.empty()) {
    std::cout << r.report;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    out << r.report;
    if (!out) {
      std::cerr << "error: cannot write " << out_path << '\n';
      return 2;
    }
  }
  return r.exit_code;
}
