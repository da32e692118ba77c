#pragma once

// Symmetric eigenvalues by cyclic Jacobi rotations.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "sglap/matrix.hpp"
#include "sglap/signed_graph.hpp"

namespace sglap {

class SpectralError : public std::runtime_error {
 public:
  SpectralError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

struct EigenOptions {
  // Sweeps stop once the off-diagonal Frobenius norm is at most
  // off_tol * max(1, ||M||_F).
  double off_tol = 1e-12;
  int max_sweeps = 100;
};

class Spectrum {
 public:
  Spectrum() = default;
  explicit Spectrum(std::vector<double> values) : values_(std::move(values)) {
    std::sort(values_.begin(), values_.end());
  }

  const std::vector<double>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double lambda_max() const { return values_.empty() ? 0.0 : values_.back(); }
  double lambda_min() const { return values_.empty() ? 0.0 : values_.front(); }

  double sum() const {
    double s = 0.0;
    for (double v : values_) s += v;
    return s;
  }

  // Count of eigenvalues strictly above `tol`.
  std::size_t count_above(double tol) const {
    return static_cast<std::size_t>(
        std::count_if(values_.begin(), values_.end(), [tol](double v) { return v > tol; }));
  }

 private:
  std::vector<double> values_;
};

namespace detail {

inline double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) s += a[i * n + j] * a[i * n + j];
    }
  }
  return std::sqrt(s);
}

}  // namespace detail

// Rotations sweep the pairs (p, q), p < q, in row-major order. The input is
// copied; throws SpectralError with the final off-diagonal norm if the sweep
// cap is reached first.
inline Spectrum eigenvalues(const SymMatrix<double>& m, EigenOptions opts = {}) {
  const std::size_t n = m.order();
  std::vector<double> a(m.entries().begin(), m.entries().end());

  double frob = 0.0;
  for (double x : a) frob += x * x;
  const double threshold = opts.off_tol * std::max(1.0, std::sqrt(frob));

  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };

  double off = detail::off_diagonal_norm(a, n);
  int sweep = 0;
  while (off > threshold) {
    if (sweep == opts.max_sweeps) {
      throw SpectralError("Jacobi eigensolver did not converge after " +
                              std::to_string(opts.max_sweeps) +
                              " sweeps, off-diagonal norm " + std::to_string(off),
                          off);
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        at(p, p) -= t * apq;
        at(q, q) += t * apq;
        at(p, q) = 0.0;
        at(q, p) = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = at(r, p);
          const double arq = at(r, q);
          const double new_rp = c * arp - s * arq;
          const double new_rq = s * arp + c * arq;
          at(r, p) = at(p, r) = new_rp;
          at(r, q) = at(q, r) = new_rq;
        }
      }
    }
    ++sweep;
    off = detail::off_diagonal_norm(a, n);
  }

  std::vector<double> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = at(i, i);
  return Spectrum(std::move(diag));
}

inline Spectrum laplacian_spectrum(const SignedGraph& g) { return eigenvalues(laplacian(g)); }

inline double spectral_radius_laplacian(const SignedGraph& g) {
  return laplacian_spectrum(g).lambda_max();
}

}  // namespace sglap
