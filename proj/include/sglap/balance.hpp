#pragma once

// Switching, balance and the component counts b(S), c(G), c_bip(G).

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sglap/signed_graph.hpp"

namespace sglap {

// A vertex sign function theta: V -> {+1, -1}.
class SwitchingFunction {
 public:
  SwitchingFunction() = default;
  explicit SwitchingFunction(std::vector<Sign> theta) : theta_(std::move(theta)) {}

  static SwitchingFunction identity(std::size_t n) {
    return SwitchingFunction(std::vector<Sign>(n, Sign::Positive));
  }

  std::size_t size() const noexcept { return theta_.size(); }
  Sign operator[](Vertex v) const { return theta_.at(v); }
  const std::vector<Sign>& values() const noexcept { return theta_; }

  friend bool operator==(const SwitchingFunction&, const SwitchingFunction&) = default;

 private:
  std::vector<Sign> theta_;
};

// sigma'(uv) = theta(u) sigma(uv) theta(v).
inline SignedGraph switch_graph(const SignedGraph& g, const SwitchingFunction& theta) {
  if (theta.size() != g.order()) {
    throw std::invalid_argument("switching function length " + std::to_string(theta.size()) +
                                " does not match graph order " + std::to_string(g.order()));
  }
  std::vector<SignedEdge> edges = g.edges();
  for (auto& e : edges) e.sign = theta[e.u] * e.sign * theta[e.v];
  return SignedGraph(g.order(), std::move(edges));
}

struct BalanceInfo {
  std::size_t component_count = 0;
  std::size_t balanced_count = 0;
  std::vector<std::size_t> component_labels;
  std::vector<bool> component_balanced;
  // Switches every balanced component to all-positive; on unbalanced
  // components it is whatever the propagation left behind.
  SwitchingFunction certificate;
};

// Breadth-first sign propagation per component: theta(root) = +1 and
// theta(v) = sigma(uv) theta(u) along tree edges. A component is balanced iff
// every edge satisfies sigma(uv) = theta(u) theta(v).
inline BalanceInfo balance_info(const SignedGraph& g) {
  constexpr auto unset = static_cast<std::size_t>(-1);
  const std::size_t n = g.order();
  BalanceInfo info;
  info.component_labels.assign(n, unset);
  std::vector<Sign> theta(n, Sign::Positive);
  std::vector<Vertex> queue;
  queue.reserve(n);

  for (Vertex root = 0; root < n; ++root) {
    if (info.component_labels[root] != unset) continue;
    const std::size_t comp = info.component_count++;
    bool balanced = true;
    queue.clear();
    queue.push_back(root);
    info.component_labels[root] = comp;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex u = queue[head];
      for (const auto& nb : g.neighbors(u)) {
        if (info.component_labels[nb.vertex] == unset) {
          info.component_labels[nb.vertex] = comp;
          theta[nb.vertex] = nb.sign * theta[u];
          queue.push_back(nb.vertex);
        } else if (theta[u] * theta[nb.vertex] != nb.sign) {
          balanced = false;
        }
      }
    }
    info.component_balanced.push_back(balanced);
    if (balanced) ++info.balanced_count;
  }
  info.certificate = SwitchingFunction(std::move(theta));
  return info;
}

inline bool is_balanced(const SignedGraph& g) {
  auto info = balance_info(g);
  return info.balanced_count == info.component_count;
}

// rank(L) = n - b.
inline std::size_t laplacian_rank(const SignedGraph& g) {
  return g.order() - balance_info(g).balanced_count;
}

// Number of bipartite components of the underlying graph, by 2-colouring.
inline std::size_t bipartite_component_count(const SignedGraph& g) {
  const std::size_t n = g.order();
  std::vector<int> colour(n, -1);
  std::vector<Vertex> stack;
  std::size_t count = 0;
  for (Vertex root = 0; root < n; ++root) {
    if (colour[root] != -1) continue;
    bool bipartite = true;
    colour[root] = 0;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (const auto& nb : g.neighbors(u)) {
        if (colour[nb.vertex] == -1) {
          colour[nb.vertex] = 1 - colour[u];
          stack.push_back(nb.vertex);
        } else if (colour[nb.vertex] == colour[u]) {
          bipartite = false;
        }
      }
    }
    if (bipartite) ++count;
  }
  return count;
}

struct SwitchingVerdict {
  bool equivalent = false;
  // Present iff equivalent: switch_graph(a, *witness) == b.
  std::optional<SwitchingFunction> witness;
};

// Equivalent iff both graphs share an underlying graph and the product
// signature sigma_a * sigma_b is balanced on every component; the product's
// balance certificate is the witness.
inline SwitchingVerdict switching_equivalent(const SignedGraph& a, const SignedGraph& b) {
  if (!a.same_underlying(b)) return {};
  std::vector<SignedEdge> product = a.edges();
  for (std::size_t k = 0; k < product.size(); ++k) product[k].sign = product[k].sign * b.edges()[k].sign;
  auto info = balance_info(SignedGraph(a.order(), std::move(product)));
  if (info.balanced_count != info.component_count) return {};
  return {true, std::move(info.certificate)};
}

}  // namespace sglap
