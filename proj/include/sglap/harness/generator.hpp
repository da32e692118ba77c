#pragma once

// Seeded random signed graphs.
//
// The stream is SplitMix64. A uniform double is (next() >> 11) * 2^-53.
// Pairs (i, j), i < j, are visited in lexicographic order; each draws one
// uniform for inclusion (included iff u < edge_prob) and, when included, one
// more for the sign (negative iff u < neg_prob). With require_connected the
// draw is repeated on the same stream until the graph is connected.

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "sglap/balance.hpp"
#include "sglap/signed_graph.hpp"

namespace sglap::harness {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform integer in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) noexcept {
    return lo + next() % (hi - lo + 1);
  }

 private:
  std::uint64_t state_;
};

// Independent seed for sub-stream `stream` of a run seeded with `seed`.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
  return SplitMix64(seed ^ (0xD1B54A32D192ED03ULL * (stream + 1))).next();
}

inline constexpr int kConnectivityAttemptCap = 10'000;

struct GeneratorConfig {
  std::size_t n = 1;
  double edge_prob = 0.5;
  double neg_prob = 0.5;
  std::uint64_t seed = 0;
  bool require_connected = false;

  void validate() const {
    if (n == 0) throw std::invalid_argument("vertex count must be positive");
    if (!(edge_prob >= 0.0 && edge_prob <= 1.0)) throw std::invalid_argument("edge probability outside [0,1]");
    if (!(neg_prob >= 0.0 && neg_prob <= 1.0)) throw std::invalid_argument("negative-sign probability outside [0,1]");
  }
};

class GeneratorError : public std::runtime_error {
 public:
  GeneratorError(const std::string& what, int attempts)
      : std::runtime_error(what), attempts_(attempts) {}
  int attempts() const noexcept { return attempts_; }

 private:
  int attempts_;
};

inline SignedGraph draw_signed_graph(SplitMix64& rng, std::size_t n, double edge_prob,
                                     double neg_prob) {
  std::vector<SignedEdge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (rng.uniform() < edge_prob) {
        edges.push_back({i, j, rng.uniform() < neg_prob ? Sign::Negative : Sign::Positive});
      }
    }
  }
  return SignedGraph(n, std::move(edges));
}

inline SignedGraph generate(const GeneratorConfig& cfg) {
  cfg.validate();
  SplitMix64 rng(cfg.seed);
  for (int attempt = 1; attempt <= kConnectivityAttemptCap; ++attempt) {
    SignedGraph g = draw_signed_graph(rng, cfg.n, cfg.edge_prob, cfg.neg_prob);
    if (!cfg.require_connected || is_connected(g)) return g;
  }
  throw GeneratorError("no connected graph after " + std::to_string(kConnectivityAttemptCap) +
                           " attempts (n=" + std::to_string(cfg.n) +
                           ", edge-prob=" + std::to_string(cfg.edge_prob) + ")",
                       kConnectivityAttemptCap);
}

inline SwitchingFunction random_switching(SplitMix64& rng, std::size_t n) {
  std::vector<Sign> theta(n);
  for (auto& s : theta) s = (rng.next() >> 63) ? Sign::Negative : Sign::Positive;
  return SwitchingFunction(std::move(theta));
}

// Default 1e-9, overridden by the SG_TOL environment variable.
inline double comparison_tolerance() {
  if (const char* env = std::getenv("SG_TOL"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && v >= 0.0) return v;
    throw std::invalid_argument(std::string("SG_TOL is not a non-negative number: ") + env);
  }
  return 1e-9;
}

}  // namespace sglap::harness
