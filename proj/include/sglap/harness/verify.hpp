#pragma once

// Bulk property runs: every bound against the exact spectral radius plus the
// trace, all-ones moment, rank and switching identities.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "sglap/balance.hpp"
#include "sglap/bounds.hpp"
#include "sglap/eigen.hpp"
#include "sglap/harness/generator.hpp"
#include "sglap/io.hpp"
#include "sglap/matrix.hpp"
#include "sglap/moments.hpp"

namespace sglap::harness {

inline constexpr double kRankTolerance = 1e-8;

struct Failure {
  std::size_t trial = 0;
  std::string graph;  // serialized
  std::string check;  // bound id or identity name
  double value = 0.0;
  double lambda_max = 0.0;
  double magnitude = 0.0;
};

struct VerificationReport {
  std::size_t trials = 0;
  std::vector<Failure> failures;           // bound sandwich violations
  std::vector<Failure> identity_failures;  // trace / moment / rank / switching

  bool ok() const noexcept { return failures.empty() && identity_failures.empty(); }
};

// Identity checks on a single graph, appended to `out`. `rng` supplies the
// switching function.
inline void check_identities(const SignedGraph& g, SplitMix64& rng, double tol, std::size_t trial,
                             std::vector<Failure>& out) {
  const std::string text = serialize_signed_graph(g);
  auto fail = [&](std::string check, double value, double reference) {
    out.push_back({trial, text, std::move(check), value, reference, std::abs(value - reference)});
  };

  const auto lint = laplacian<std::int64_t>(g);
  const auto profile = degree_profile(g);
  const auto tri = triangle_stats(g);
  for (int k = 1; k <= 3; ++k) {
    const auto direct = trace_moment(lint, k);
    const auto closed = laplacian_trace_closed_form(profile, tri, k);
    if (direct != closed) {
      fail("TRACE-" + std::to_string(k), static_cast<double>(closed), static_cast<double>(direct));
    }
    const auto oracle = ones_quadratic_moment(lint, k);
    const auto moment = rayleigh_moment(g, profile, k);
    if (oracle != moment) {
      fail("RAYLEIGH-" + std::to_string(k), static_cast<double>(moment), static_cast<double>(oracle));
    }
  }

  const Spectrum spec = eigenvalues(lint.cast<double>());
  const auto numeric_rank = spec.count_above(kRankTolerance);
  const auto rank = laplacian_rank(g);
  if (numeric_rank != rank) {
    fail("RANK", static_cast<double>(rank), static_cast<double>(numeric_rank));
  }

  const SwitchingFunction theta = random_switching(rng, g.order());
  const SignedGraph switched = switch_graph(g, theta);
  const Spectrum other = laplacian_spectrum(switched);
  double worst = 0.0;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    worst = std::max(worst, std::abs(spec.values()[i] - other.values()[i]));
  }
  if (worst > tol) fail("SWITCH-SPECTRUM", worst, 0.0);

  const auto verdict = switching_equivalent(g, switched);
  if (!verdict.equivalent || !(switch_graph(g, *verdict.witness) == switched)) {
    fail("SWITCH-WITNESS", 0.0, 1.0);
  }
}

inline void check_sandwich(const SignedGraph& g, double tol, std::size_t trial,
                           std::vector<Failure>& out) {
  const Evaluation ev = evaluate_all(g);
  for (const auto& v : sandwich_violations(ev, tol)) {
    out.push_back({trial, serialize_signed_graph(g), v.id, v.value, v.lambda_max, v.magnitude});
  }
}

// Trial i draws its graph from generate() with the seed derive_seed(cfg.seed, 2i)
// and its switching function from the stream derive_seed(cfg.seed, 2i+1).
// Generator errors (e.g. an unreachable connectivity request) propagate.
inline VerificationReport verify(const GeneratorConfig& cfg, std::size_t trials, double tol) {
  cfg.validate();
  VerificationReport report;
  report.trials = trials;
  for (std::size_t i = 0; i < trials; ++i) {
    GeneratorConfig trial_cfg = cfg;
    trial_cfg.seed = derive_seed(cfg.seed, 2 * i);
    const SignedGraph g = generate(trial_cfg);
    SplitMix64 theta_rng(derive_seed(cfg.seed, 2 * i + 1));
    check_sandwich(g, tol, i, report.failures);
    check_identities(g, theta_rng, tol, i, report.identity_failures);
  }
  return report;
}

inline VerificationReport verify(const GeneratorConfig& cfg, std::size_t trials) {
  return verify(cfg, trials, comparison_tolerance());
}

}  // namespace sglap::harness
