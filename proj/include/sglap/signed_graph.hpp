#pragma once

// Signed graph data model: a simple undirected graph whose edges carry a
// sign of +1 or -1. Vertices are 0-based internally; the text format is
// 1-based (see io.hpp).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sglap {

using Vertex = std::size_t;

enum class Sign : int { Negative = -1, Positive = 1 };

constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }

constexpr Sign operator*(Sign a, Sign b) noexcept {
  return to_int(a) * to_int(b) > 0 ? Sign::Positive : Sign::Negative;
}

constexpr Sign operator-(Sign s) noexcept {
  return s == Sign::Positive ? Sign::Negative : Sign::Positive;
}

struct SignedEdge {
  Vertex u;  // always u < v
  Vertex v;
  Sign sign;

  friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Immutable simple signed graph. Edges are stored sorted by (u, v) with u < v;
// the adjacency lists are sorted by neighbour index.
class SignedGraph {
 public:
  struct Neighbor {
    Vertex vertex;
    Sign sign;
  };

  SignedGraph() = default;

  // Throws GraphError on self-loops, duplicate pairs or out-of-range indices.
  SignedGraph(std::size_t order, std::vector<SignedEdge> edges) : order_(order) {
    for (auto& e : edges) {
      if (e.u == e.v) throw GraphError("self-loop at vertex " + std::to_string(e.u + 1));
      if (e.u >= order || e.v >= order) {
        throw GraphError("edge endpoint out of range 1.." + std::to_string(order));
      }
      if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end(), [](const SignedEdge& a, const SignedEdge& b) {
      return std::pair(a.u, a.v) < std::pair(b.u, b.v);
    });
    for (std::size_t k = 1; k < edges.size(); ++k) {
      if (edges[k].u == edges[k - 1].u && edges[k].v == edges[k - 1].v) {
        throw GraphError("duplicate edge " + std::to_string(edges[k].u + 1) + " " +
                         std::to_string(edges[k].v + 1));
      }
    }
    edges_ = std::move(edges);
    adjacency_.assign(order_, {});
    for (const auto& e : edges_) {
      adjacency_[e.u].push_back({e.v, e.sign});
      adjacency_[e.v].push_back({e.u, e.sign});
    }
    for (auto& list : adjacency_) {
      std::sort(list.begin(), list.end(),
                [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
    }
  }

  std::size_t order() const noexcept { return order_; }
  std::size_t size() const noexcept { return edges_.size(); }
  const std::vector<SignedEdge>& edges() const noexcept { return edges_; }
  const std::vector<Neighbor>& neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

  // Sign of the edge {u, v}, or nothing when u and v are not adjacent.
  std::optional<Sign> edge_sign(Vertex u, Vertex v) const {
    const auto& list = adjacency_.at(u);
    auto it = std::lower_bound(list.begin(), list.end(), v,
                               [](const Neighbor& n, Vertex x) { return n.vertex < x; });
    if (it == list.end() || it->vertex != v) return std::nullopt;
    return it->sign;
  }

  // Same vertex and edge set, ignoring signs.
  bool same_underlying(const SignedGraph& other) const {
    if (order_ != other.order_ || edges_.size() != other.edges_.size()) return false;
    for (std::size_t k = 0; k < edges_.size(); ++k) {
      if (edges_[k].u != other.edges_[k].u || edges_[k].v != other.edges_[k].v) return false;
    }
    return true;
  }

  friend bool operator==(const SignedGraph& a, const SignedGraph& b) {
    return a.order_ == b.order_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t order_ = 0;
  std::vector<SignedEdge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
};

// Every edge re-signed to `s`. sign_all(g, Positive) carries the unsigned
// Laplacian, sign_all(g, Negative) the signless Laplacian.
inline SignedGraph sign_all(const SignedGraph& g, Sign s) {
  std::vector<SignedEdge> edges = g.edges();
  for (auto& e : edges) e.sign = s;
  return SignedGraph(g.order(), std::move(edges));
}

// Same vertex set, only the edges of sign `s` kept.
inline SignedGraph induced_sign_subgraph(const SignedGraph& g, Sign s) {
  std::vector<SignedEdge> kept;
  for (const auto& e : g.edges()) {
    if (e.sign == s) kept.push_back(e);
  }
  return SignedGraph(g.order(), std::move(kept));
}

// Number of connected components and a per-vertex component label, labels
// assigned in order of the smallest vertex of each component.
struct Components {
  std::size_t count = 0;
  std::vector<std::size_t> label;
};

inline Components connected_components(const SignedGraph& g) {
  constexpr auto unset = static_cast<std::size_t>(-1);
  Components c;
  c.label.assign(g.order(), unset);
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < g.order(); ++root) {
    if (c.label[root] != unset) continue;
    c.label[root] = c.count;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (const auto& nb : g.neighbors(u)) {
        if (c.label[nb.vertex] == unset) {
          c.label[nb.vertex] = c.count;
          stack.push_back(nb.vertex);
        }
      }
    }
    ++c.count;
  }
  return c;
}

inline bool is_connected(const SignedGraph& g) {
  return g.order() > 0 && connected_components(g).count == 1;
}

}  // namespace sglap
