#pragma once

// Degree and triangle statistics of a signed graph. Everything here is an
// exact integer except the average 2-degree.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "sglap/signed_graph.hpp"

namespace sglap {

struct DegreeProfile {
  std::vector<std::int64_t> d;      // degree
  std::vector<std::int64_t> d_pos;  // positive incident edges
  std::vector<std::int64_t> d_neg;  // negative incident edges
  std::vector<std::int64_t> d_net;  // d_pos - d_neg
  // Sum of the neighbours' degrees; avg2[j] = nbr_deg_sum[j] / d[j].
  std::vector<std::int64_t> nbr_deg_sum;
  // Average 2-degree; empty for isolated vertices.
  std::vector<std::optional<double>> avg2;

  std::int64_t s1 = 0, s2 = 0, s3 = 0;
  std::int64_t max_deg = 0;
  double avg_deg = 0.0;
  // min/max of d_i + d_j - 2 over edges; empty when there are no edges.
  std::optional<std::int64_t> edge_deg_min;
  std::optional<std::int64_t> edge_deg_max;

  std::size_t order() const noexcept { return d.size(); }
};

inline DegreeProfile degree_profile(const SignedGraph& g) {
  const std::size_t n = g.order();
  DegreeProfile p;
  p.d.assign(n, 0);
  p.d_pos.assign(n, 0);
  p.d_neg.assign(n, 0);
  for (const auto& e : g.edges()) {
    auto& bucket = e.sign == Sign::Positive ? p.d_pos : p.d_neg;
    ++bucket[e.u];
    ++bucket[e.v];
  }
  p.d_net.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    p.d[j] = p.d_pos[j] + p.d_neg[j];
    p.d_net[j] = p.d_pos[j] - p.d_neg[j];
    p.s1 += p.d[j];
    p.s2 += p.d[j] * p.d[j];
    p.s3 += p.d[j] * p.d[j] * p.d[j];
    p.max_deg = std::max(p.max_deg, p.d[j]);
  }
  p.avg_deg = n == 0 ? 0.0 : static_cast<double>(p.s1) / static_cast<double>(n);

  p.nbr_deg_sum.assign(n, 0);
  p.avg2.assign(n, std::nullopt);
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto& nb : g.neighbors(j)) p.nbr_deg_sum[j] += p.d[nb.vertex];
    if (p.d[j] > 0) {
      p.avg2[j] = static_cast<double>(p.nbr_deg_sum[j]) / static_cast<double>(p.d[j]);
    }
  }

  for (const auto& e : g.edges()) {
    std::int64_t dij = p.d[e.u] + p.d[e.v] - 2;
    p.edge_deg_min = p.edge_deg_min ? std::min(*p.edge_deg_min, dij) : dij;
    p.edge_deg_max = p.edge_deg_max ? std::max(*p.edge_deg_max, dij) : dij;
  }
  return p;
}

struct TriangleStats {
  std::int64_t total = 0;     // t
  std::int64_t positive = 0;  // t+
  std::int64_t negative = 0;  // t-

  std::int64_t net() const noexcept { return positive - negative; }

  friend bool operator==(const TriangleStats&, const TriangleStats&) = default;
};

// Neighbour intersection over sorted adjacency lists: every triangle
// {a < b < c} is found once, from its edge (a, b) and the common neighbour c > b.
inline TriangleStats triangle_stats(const SignedGraph& g) {
  TriangleStats t;
  for (const auto& e : g.edges()) {
    const auto& nu = g.neighbors(e.u);
    const auto& nv = g.neighbors(e.v);
    auto iu = std::upper_bound(nu.begin(), nu.end(), e.v,
                               [](Vertex x, const auto& nb) { return x < nb.vertex; });
    auto iv = std::upper_bound(nv.begin(), nv.end(), e.v,
                               [](Vertex x, const auto& nb) { return x < nb.vertex; });
    while (iu != nu.end() && iv != nv.end()) {
      if (iu->vertex < iv->vertex) {
        ++iu;
      } else if (iv->vertex < iu->vertex) {
        ++iv;
      } else {
        ++t.total;
        if ((e.sign * iu->sign * iv->sign) == Sign::Positive) {
          ++t.positive;
        } else {
          ++t.negative;
        }
        ++iu;
        ++iv;
      }
    }
  }
  return t;
}

}  // namespace sglap
