#pragma once

// Trace moments tr(L^k) and all-ones quadratic moments N_k = j^T L^k j, each
// two ways: explicit matrix products, and closed forms in degree/triangle
// statistics. Integer instantiations are exact.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sglap/degree.hpp"
#include "sglap/matrix.hpp"
#include "sglap/signed_graph.hpp"

namespace sglap {

namespace detail {

inline void check_moment_order(int k) {
  if (k < 1 || k > 3) {
    throw std::invalid_argument("moment order must be 1, 2 or 3, got " + std::to_string(k));
  }
}

}  // namespace detail

// tr(M^k) by explicit products.
template <typename T>
T trace_moment(const SymMatrix<T>& m, int k) {
  detail::check_moment_order(k);
  const std::size_t n = m.order();
  T tr{};
  if (k == 1) {
    for (std::size_t i = 0; i < n; ++i) tr += m(i, i);
    return tr;
  }
  if (k == 2) {
    // tr(M^2) = sum_ij M_ij M_ji
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) tr += m(i, j) * m(j, i);
    }
    return tr;
  }
  std::vector<T> sq(n * n, T{});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < n; ++l) {
      const T mil = m(i, l);
      if (mil == T{}) continue;
      for (std::size_t j = 0; j < n; ++j) sq[i * n + j] += mil * m(l, j);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) tr += sq[i * n + j] * m(j, i);
  }
  return tr;
}

// j^T M^k j by repeated matrix-vector products.
template <typename T>
T ones_quadratic_moment(const SymMatrix<T>& m, int k) {
  detail::check_moment_order(k);
  const std::size_t n = m.order();
  std::vector<T> v(n, T{1});
  for (int step = 0; step < k; ++step) {
    std::vector<T> next(n, T{});
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) next[i] += m(i, j) * v[j];
    }
    v = std::move(next);
  }
  T total{};
  for (const T& x : v) total += x;
  return total;
}

// tr(L^k) of the signed Laplacian from degree power sums and the net
// triangle count: s1, s2 + s1, s3 + 3 s2 - 6 t±.
inline std::int64_t laplacian_trace_closed_form(const DegreeProfile& p, const TriangleStats& t,
                                                int k) {
  detail::check_moment_order(k);
  switch (k) {
    case 1:
      return p.s1;
    case 2:
      return p.s2 + p.s1;
    default:
      return p.s3 + 3 * p.s2 - 6 * t.net();
  }
}

// N_k = j^T L^k j in closed form from the negative degrees:
//   N1 = 2 sum d-_j
//   N2 = 4 sum (d-_j)^2
//   N3 = 4 sum d_j (d-_j)^2 - 8 sum_{edges ij} sigma(ij) d-_i d-_j
inline std::int64_t rayleigh_moment(const SignedGraph& g, const DegreeProfile& p, int k) {
  detail::check_moment_order(k);
  std::int64_t total = 0;
  switch (k) {
    case 1:
      for (auto dn : p.d_neg) total += dn;
      return 2 * total;
    case 2:
      for (auto dn : p.d_neg) total += dn * dn;
      return 4 * total;
    default: {
      std::int64_t vertex_part = 0;
      for (std::size_t j = 0; j < p.order(); ++j) vertex_part += p.d[j] * p.d_neg[j] * p.d_neg[j];
      std::int64_t edge_part = 0;
      for (const auto& e : g.edges()) edge_part += to_int(e.sign) * p.d_neg[e.u] * p.d_neg[e.v];
      return 4 * vertex_part - 8 * edge_part;
    }
  }
}

inline std::int64_t rayleigh_moment(const SignedGraph& g, int k) {
  return rayleigh_moment(g, degree_profile(g), k);
}

}  // namespace sglap
