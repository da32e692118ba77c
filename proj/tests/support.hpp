#pragma once

// Fixture graphs and independent oracles shared by the test binaries. Nothing
// here calls into the code paths it is used to check.

#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <tuple>
#include <utility>
#include <vector>

#include "sglap/harness/generator.hpp"
#include "sglap/signed_graph.hpp"

namespace sglap::testing {

constexpr Sign P = Sign::Positive;
constexpr Sign N = Sign::Negative;

// Build from 1-based (i, j, sign) triples.
inline SignedGraph make(std::size_t n, std::vector<std::tuple<int, int, Sign>> edges) {
  std::vector<SignedEdge> out;
  for (auto [i, j, s] : edges) out.push_back({Vertex(i - 1), Vertex(j - 1), s});
  return SignedGraph(n, std::move(out));
}

inline SignedGraph k2p() { return make(2, {{1, 2, P}}); }
inline SignedGraph k2n() { return make(2, {{1, 2, N}}); }
inline SignedGraph k3p() { return make(3, {{1, 2, P}, {2, 3, P}, {1, 3, P}}); }
inline SignedGraph k3n() { return make(3, {{1, 2, N}, {2, 3, N}, {1, 3, N}}); }
inline SignedGraph k3m() { return make(3, {{1, 2, P}, {2, 3, P}, {1, 3, N}}); }
inline SignedGraph p3p() { return make(3, {{1, 2, P}, {2, 3, P}}); }
inline SignedGraph p3n() { return make(3, {{1, 2, N}, {2, 3, N}}); }
inline SignedGraph k3p_k3n() {
  return make(6, {{1, 2, P}, {2, 3, P}, {1, 3, P}, {4, 5, N}, {5, 6, N}, {4, 6, N}});
}
inline SignedGraph star(int leaves, Sign s = P) {
  std::vector<std::tuple<int, int, Sign>> e;
  for (int k = 2; k <= leaves + 1; ++k) e.emplace_back(1, k, s);
  return make(leaves + 1, e);
}

// ---------------------------------------------------------------------------
// Oracles

// Sign of {i, j} from a linear scan of the edge list, 0 if absent.
inline int scan_sign(const SignedGraph& g, Vertex i, Vertex j) {
  if (i > j) std::swap(i, j);
  for (const auto& e : g.edges()) {
    if (e.u == i && e.v == j) return to_int(e.sign);
  }
  return 0;
}

struct BruteTriangles {
  std::int64_t total = 0, positive = 0, negative = 0;
};

// All C(n,3) triples.
inline BruteTriangles brute_triangles(const SignedGraph& g) {
  BruteTriangles t;
  const std::size_t n = g.order();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c) {
        int ab = scan_sign(g, a, b), bc = scan_sign(g, b, c), ac = scan_sign(g, a, c);
        if (ab && bc && ac) {
          ++t.total;
          (ab * bc * ac > 0 ? t.positive : t.negative)++;
        }
      }
  return t;
}

// Dense integer Laplacian from the edge scan.
inline std::vector<std::vector<std::int64_t>> dense_laplacian(const SignedGraph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<std::int64_t>> l(n, std::vector<std::int64_t>(n, 0));
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = 0; j < n; ++j)
      if (i != j) {
        int s = scan_sign(g, i, j);
        if (s != 0) {
          l[i][j] = -s;
          l[i][i] += 1;
        }
      }
  return l;
}

// Rank of an integer matrix by fraction-free (Bareiss) elimination.
inline std::size_t integer_rank(std::vector<std::vector<std::int64_t>> m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  std::size_t rank = 0;
  std::int64_t prev = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t c = col + 1; c < cols; ++c) {
        // minors fit in int64 for n <= 12; their products need the wider type
        const __int128 num = static_cast<__int128>(m[rank][col]) * m[r][c] -
                             static_cast<__int128>(m[r][col]) * m[rank][c];
        m[r][c] = static_cast<std::int64_t>(num / prev);
      }
      m[r][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

// True iff `eigs` (integers, with multiplicity) is exactly the spectrum of
// the integer symmetric matrix `m`: every distinct value has nullity equal to
// its multiplicity and the multiplicities add up to the order.
inline bool integer_spectrum_matches(const std::vector<std::vector<std::int64_t>>& m,
                                     const std::vector<std::int64_t>& eigs) {
  const std::size_t n = m.size();
  if (eigs.size() != n) return false;
  std::map<std::int64_t, std::size_t> mult;
  for (auto e : eigs) ++mult[e];
  for (auto [lambda, k] : mult) {
    auto shifted = m;
    for (std::size_t i = 0; i < n; ++i) shifted[i][i] -= lambda;
    if (n - integer_rank(shifted) != k) return false;
  }
  return true;
}

// Erdos-Renyi draw for property tests; n, p_edge and p_neg vary per trial.
inline SignedGraph random_graph(harness::SplitMix64& rng, std::size_t n, double p_edge,
                                double p_neg) {
  std::vector<SignedEdge> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (rng.uniform() < p_edge) e.push_back({i, j, rng.uniform() < p_neg ? N : P});
  return SignedGraph(n, std::move(e));
}

inline SignedGraph random_connected_graph(harness::SplitMix64& rng, std::size_t n, double p_edge,
                                          double p_neg) {
  for (;;) {
    SignedGraph g = random_graph(rng, n, p_edge, p_neg);
    if (is_connected(g)) return g;
  }
}

}  // namespace sglap::testing
