// sgtool: command-line front end for the signed-graph Laplacian toolkit.
//
// Exit codes: 0 success, 1 a check failed (verify failures, sandwich
// violation, graphs not switching equivalent), 2 usage or input error.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sglap/harness/generator.hpp"
#include "sglap/harness/report.hpp"
#include "sglap/harness/verify.hpp"
#include "sglap/sglap.hpp"

namespace {

using namespace sglap;
using namespace sglap::harness;

SignedGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return parse_signed_graph(in);
  } catch (const ParseError& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

Format parse_format(const std::string& s) { return s == "csv" ? Format::Csv : Format::Markdown; }

int run_bounds(const std::string& path, const std::string& fmt, bool full) {
  const SignedGraph g = load_graph(path);
  const Evaluation ev = evaluate_all(g);
  write_bounds(std::cout, ev, parse_format(fmt), {full});
  const auto violations = sandwich_violations(ev, comparison_tolerance());
  for (const auto& v : violations) {
    std::cerr << "violation: " << v.id << " = " << v.value << " vs lambda_max " << v.lambda_max
              << '\n';
  }
  return violations.empty() ? 0 : 1;
}

int run_spectrum(const std::string& path) {
  const Spectrum s = laplacian_spectrum(load_graph(path));
  const double tol = comparison_tolerance();
  for (double v : s.values()) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", std::abs(v) <= tol ? 0.0 : v);
    std::cout << buf << '\n';
  }
  return 0;
}

int run_report(const std::vector<std::string>& paths, const std::string& fmt, bool full) {
  std::vector<NamedGraph> graphs;
  for (const auto& p : paths) {
    graphs.push_back({std::filesystem::path(p).stem().string(), load_graph(p)});
  }
  write_report(std::cout, graphs, parse_format(fmt), {full});
  return 0;
}

int run_verify(const GeneratorConfig& cfg, std::size_t trials) {
  const VerificationReport rep = verify(cfg, trials);
  std::cout << "trials: " << rep.trials << '\n'
            << "bound failures: " << rep.failures.size() << '\n'
            << "identity failures: " << rep.identity_failures.size() << '\n';
  auto dump = [](const std::vector<Failure>& fs) {
    for (const auto& f : fs) {
      std::cout << "trial " << f.trial << ' ' << f.check << " value=" << f.value
                << " lambda_max=" << f.lambda_max << " excess=" << f.magnitude << '\n'
                << f.graph;
    }
  };
  dump(rep.failures);
  dump(rep.identity_failures);
  std::cout << (rep.ok() ? "OK" : "FAILED") << '\n';
  return rep.ok() ? 0 : 1;
}

int run_switch_check(const std::string& a, const std::string& b) {
  const auto verdict = switching_equivalent(load_graph(a), load_graph(b));
  std::cout << "equivalent: " << (verdict.equivalent ? "yes" : "no") << '\n';
  if (verdict.witness) {
    std::cout << "theta:";
    for (Sign s : verdict.witness->values()) std::cout << ' ' << (s == Sign::Positive ? '+' : '-');
    std::cout << '\n';
  }
  return verdict.equivalent ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Signed graph Laplacian spectral radius bounds"};
  app.require_subcommand(1);

  std::string input, format = "md";
  bool full_precision = false;
  auto* bounds = app.add_subcommand("bounds", "Evaluate every bound on one graph");
  bounds->add_option("--input", input, "Edge-list file")->required()->check(CLI::ExistingFile);
  bounds->add_option("--format", format, "md or csv")->check(CLI::IsMember({"md", "csv"}));
  bounds->add_flag("--full-precision", full_precision, "Print values with 17 significant digits");

  auto* spectrum = app.add_subcommand("spectrum", "Print the sorted Laplacian eigenvalues");
  spectrum->add_option("--input", input, "Edge-list file")->required()->check(CLI::ExistingFile);

  std::vector<std::string> inputs;
  auto* rep = app.add_subcommand("report", "Comparison table over several graphs");
  rep->add_option("--inputs", inputs, "Edge-list files")->required()->check(CLI::ExistingFile);
  rep->add_option("--format", format, "md or csv")->check(CLI::IsMember({"md", "csv"}));
  rep->add_flag("--full-precision", full_precision, "Print values with 17 significant digits");

  GeneratorConfig cfg;
  std::size_t trials = 0;
  auto* ver = app.add_subcommand("verify", "Random property run");
  ver->add_option("--n", cfg.n, "Vertex count")->required()->check(CLI::PositiveNumber);
  ver->add_option("--edge-prob", cfg.edge_prob, "Edge probability")->required()->check(CLI::Range(0.0, 1.0));
  ver->add_option("--neg-prob", cfg.neg_prob, "Negative-sign probability")->required()->check(CLI::Range(0.0, 1.0));
  ver->add_option("--trials", trials, "Number of trials")->required();
  ver->add_option("--seed", cfg.seed, "64-bit seed")->required();
  ver->add_flag("--require-connected", cfg.require_connected, "Reject disconnected graphs");

  std::string file_a, file_b;
  auto* sw = app.add_subcommand("switch-check", "Switching-equivalence test with witness");
  sw->add_option("--a", file_a, "First graph")->required()->check(CLI::ExistingFile);
  sw->add_option("--b", file_b, "Second graph")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*bounds) return run_bounds(input, format, full_precision);
    if (*spectrum) return run_spectrum(input);
    if (*rep) return run_report(inputs, format, full_precision);
    if (*ver) return run_verify(cfg, trials);
    if (*sw) return run_switch_check(file_a, file_b);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
