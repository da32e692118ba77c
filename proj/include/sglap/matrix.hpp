#pragma once

// Dense symmetric matrices and the signed-graph matrices D, A and L = D - A.

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "sglap/signed_graph.hpp"

namespace sglap {

// Dense symmetric matrix in row-major storage. Every write goes to both
// (i, j) and (j, i), so symmetry holds exactly.
template <typename T>
class SymMatrix {
 public:
  using value_type = T;

  SymMatrix() = default;
  explicit SymMatrix(std::size_t order) : order_(order), entries_(order * order, T{}) {}

  // Throws std::invalid_argument unless `entries` is a square, exactly
  // symmetric row-major matrix of the given order.
  static SymMatrix from_row_major(std::size_t order, std::span<const T> entries) {
    if (entries.size() != order * order) {
      throw std::invalid_argument("matrix entry count does not match order");
    }
    for (std::size_t i = 0; i < order; ++i) {
      for (std::size_t j = i + 1; j < order; ++j) {
        if (entries[i * order + j] != entries[j * order + i]) {
          throw std::invalid_argument("matrix is not symmetric");
        }
      }
    }
    SymMatrix m(order);
    m.entries_.assign(entries.begin(), entries.end());
    return m;
  }

  std::size_t order() const noexcept { return order_; }
  T operator()(std::size_t i, std::size_t j) const { return entries_[i * order_ + j]; }

  void set(std::size_t i, std::size_t j, T value) {
    entries_[i * order_ + j] = value;
    entries_[j * order_ + i] = value;
  }

  std::span<const T> row(std::size_t i) const {
    return std::span<const T>(entries_).subspan(i * order_, order_);
  }
  std::span<const T> entries() const noexcept { return entries_; }

  template <typename U>
  SymMatrix<U> cast() const {
    SymMatrix<U> out(order_);
    for (std::size_t i = 0; i < order_; ++i) {
      for (std::size_t j = i; j < order_; ++j) out.set(i, j, static_cast<U>((*this)(i, j)));
    }
    return out;
  }

  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

 private:
  std::size_t order_ = 0;
  std::vector<T> entries_;
};

template <typename T = double>
SymMatrix<T> adjacency(const SignedGraph& g) {
  SymMatrix<T> a(g.order());
  for (const auto& e : g.edges()) a.set(e.u, e.v, static_cast<T>(to_int(e.sign)));
  return a;
}

template <typename T = double>
SymMatrix<T> degree_matrix(const SignedGraph& g) {
  SymMatrix<T> d(g.order());
  for (Vertex v = 0; v < g.order(); ++v) d.set(v, v, static_cast<T>(g.degree(v)));
  return d;
}

// L = D - A: degrees on the diagonal, -sigma(e) off it.
template <typename T = double>
SymMatrix<T> laplacian(const SignedGraph& g) {
  SymMatrix<T> l(g.order());
  for (Vertex v = 0; v < g.order(); ++v) l.set(v, v, static_cast<T>(g.degree(v)));
  for (const auto& e : g.edges()) l.set(e.u, e.v, static_cast<T>(-to_int(e.sign)));
  return l;
}

}  // namespace sglap
