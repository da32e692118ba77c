#include <gtest/gtest.h>

#include <cmath>

#include <Eigen/Eigenvalues>

#include "sglap/eigen.hpp"
#include "sglap/matrix.hpp"
#include "sglap/moments.hpp"
#include "support.hpp"

using namespace sglap;
using namespace sglap::testing;

namespace {

std::vector<double> row_major(const SymMatrix<double>& m) {
  return {m.entries().begin(), m.entries().end()};
}

void expect_spectrum(const SignedGraph& g, std::vector<double> expected) {
  auto s = laplacian_spectrum(g);
  ASSERT_EQ(s.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_NEAR(s.values()[i], expected[i], 1e-9);
}

}  // namespace

TEST(Matrices, Laplacian) {
  EXPECT_EQ(row_major(laplacian(k2p())), (std::vector<double>{1, -1, -1, 1}));
  EXPECT_EQ(row_major(laplacian(k2n())), (std::vector<double>{1, 1, 1, 1}));
  EXPECT_EQ(row_major(laplacian(k3n())), (std::vector<double>{2, 1, 1, 1, 2, 1, 1, 1, 2}));
}

TEST(Matrices, Adjacency) {
  EXPECT_EQ(row_major(adjacency(k2n())), (std::vector<double>{0, -1, -1, 0}));
  EXPECT_EQ(row_major(adjacency(k3p())), (std::vector<double>{0, 1, 1, 1, 0, 1, 1, 1, 0}));
  EXPECT_EQ(row_major(adjacency(SignedGraph(2, {}))), (std::vector<double>(4, 0.0)));
}

TEST(Matrices, LaplacianIsDegreeMinusAdjacency) {
  harness::SplitMix64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = random_graph(rng, 1 + rng.between(0, 9), 0.5, 0.5);
    auto l = laplacian<std::int64_t>(g), d = degree_matrix<std::int64_t>(g), a = adjacency<std::int64_t>(g);
    for (std::size_t i = 0; i < g.order(); ++i)
      for (std::size_t j = 0; j < g.order(); ++j) ASSERT_EQ(l(i, j), d(i, j) - a(i, j));
  }
}

TEST(Matrices, FromRowMajorRejectsAsymmetric) {
  std::vector<double> bad{1, 2, 3, 1};
  EXPECT_THROW(SymMatrix<double>::from_row_major(2, bad), std::invalid_argument);
  std::vector<double> wrong_size{1, 2, 3};
  EXPECT_THROW(SymMatrix<double>::from_row_major(2, wrong_size), std::invalid_argument);
}

// Expected spectra are checked against the nullity oracle before being used.
TEST(Eigenvalues, SmallFixturesAgainstNullityOracle) {
  ASSERT_TRUE(integer_spectrum_matches(dense_laplacian(k3p()), {0, 3, 3}));
  ASSERT_TRUE(integer_spectrum_matches(dense_laplacian(k3n()), {1, 1, 4}));
  ASSERT_TRUE(integer_spectrum_matches(dense_laplacian(p3p()), {0, 1, 3}));
  ASSERT_TRUE(integer_spectrum_matches(dense_laplacian(k2p()), {0, 2}));
  ASSERT_FALSE(integer_spectrum_matches(dense_laplacian(k3n()), {0, 3, 3}));
  expect_spectrum(k3p(), {0, 3, 3});
  expect_spectrum(k3n(), {1, 1, 4});
  expect_spectrum(p3p(), {0, 1, 3});
}

TEST(Eigenvalues, GeneralSymmetricMatrix) {
  // [[2,1],[1,2]] has eigenvalues 1 and 3; a diagonal matrix is returned sorted.
  std::vector<double> m{2, 1, 1, 2};
  auto s = eigenvalues(SymMatrix<double>::from_row_major(2, m));
  EXPECT_NEAR(s.values()[0], 1.0, 1e-12);
  EXPECT_NEAR(s.values()[1], 3.0, 1e-12);
  std::vector<double> diag{5, 0, 0, -2};
  EXPECT_EQ(eigenvalues(SymMatrix<double>::from_row_major(2, diag)).values(),
            (std::vector<double>{-2, 5}));
}

TEST(Eigenvalues, NonConvergenceIsReported) {
  EigenOptions opts;
  opts.max_sweeps = 0;
  try {
    eigenvalues(laplacian(k3n()), opts);
    FAIL() << "expected SpectralError";
  } catch (const SpectralError& e) {
    EXPECT_GT(e.residual(), 0.0);
  }
}

TEST(SpectralRadius, Fixtures) {
  EXPECT_NEAR(spectral_radius_laplacian(k3n()), 4.0, 1e-9);
  EXPECT_NEAR(spectral_radius_laplacian(k3m()), 4.0, 1e-9);
  EXPECT_NEAR(spectral_radius_laplacian(k2p()), 2.0, 1e-9);
}

TEST(Eigenvalues, LaplacianPropertiesOnRandomGraphs) {
  harness::SplitMix64 rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng.between(0, 11);
    auto g = random_graph(rng, n, rng.uniform(), rng.uniform());
    auto l = laplacian(g);
    auto s = eigenvalues(l);
    ASSERT_EQ(s.size(), n);
    ASSERT_TRUE(std::is_sorted(s.values().begin(), s.values().end()));
    ASSERT_GE(s.lambda_min(), -1e-9);
    ASSERT_NEAR(s.sum(), trace_moment(l, 1), 1e-9 * static_cast<double>(n));
    for (int k = 2; k <= 3; ++k) {
      double power_sum = 0.0;
      for (double v : s.values()) power_sum += std::pow(v, k);
      const double tr = trace_moment(l, k);
      ASSERT_NEAR(power_sum, tr, 1e-7 * std::max(1.0, std::abs(tr)));
    }
  }
}

TEST(Eigenvalues, RayleighQuotientNeverExceedsLambdaMax) {
  harness::SplitMix64 rng(19);
  for (int graph = 0; graph < 20; ++graph) {
    auto g = random_graph(rng, 2 + rng.between(0, 10), 0.5, 0.5);
    auto l = laplacian(g);
    const double lmax = eigenvalues(l).lambda_max();
    const std::size_t n = g.order();
    for (int k = 0; k < 200; ++k) {
      std::vector<double> x(n);
      double xx = 0.0;
      for (auto& v : x) {
        v = 2.0 * rng.uniform() - 1.0;
        xx += v * v;
      }
      double xlx = 0.0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) xlx += x[i] * l(i, j) * x[j];
      ASSERT_LE(xlx / xx, lmax + 1e-9);
    }
  }
}

TEST(TraceMoment, Fixtures) {
  EXPECT_EQ(trace_moment(laplacian<std::int64_t>(k3n()), 3), 66);
  EXPECT_EQ(trace_moment(laplacian<std::int64_t>(k3p()), 3), 54);
  EXPECT_EQ(trace_moment(laplacian<std::int64_t>(k3m()), 2), 18);
  EXPECT_THROW(trace_moment(laplacian<std::int64_t>(k3m()), 4), std::invalid_argument);
  EXPECT_THROW(trace_moment(laplacian<std::int64_t>(k3m()), 0), std::invalid_argument);
}

TEST(TraceMoment, ClosedFormsExactOnRandomGraphs) {
  harness::SplitMix64 rng(23);
  for (int trial = 0; trial < 500; ++trial) {
    auto g = random_graph(rng, 1 + rng.between(0, 11), rng.uniform(), rng.uniform());
    auto l = laplacian<std::int64_t>(g);
    auto p = degree_profile(g);
    auto t = triangle_stats(g);
    ASSERT_EQ(trace_moment(l, 1), p.s1);
    ASSERT_EQ(trace_moment(l, 2), p.s2 + p.s1);
    ASSERT_EQ(trace_moment(l, 3), p.s3 + 3 * p.s2 - 6 * t.net());
    for (int k = 1; k <= 3; ++k) ASSERT_EQ(laplacian_trace_closed_form(p, t, k), trace_moment(l, k));
  }
}

TEST(RayleighMoment, Fixtures) {
  EXPECT_EQ(rayleigh_moment(k3n(), 1), 12);
  EXPECT_EQ(rayleigh_moment(k3n(), 3), 192);
  EXPECT_EQ(ones_quadratic_moment(laplacian<std::int64_t>(k3n()), 3), 192);
  for (int k = 1; k <= 3; ++k) EXPECT_EQ(rayleigh_moment(k3p(), k), 0);
  EXPECT_EQ(rayleigh_moment(k3m(), 3), 24);
  EXPECT_EQ(rayleigh_moment(p3n(), 3), 72);
  EXPECT_THROW(rayleigh_moment(k3n(), 4), std::invalid_argument);
}

TEST(RayleighMoment, ClosedFormsMatchMatrixProducts) {
  harness::SplitMix64 rng(29);
  for (int trial = 0; trial < 500; ++trial) {
    auto g = random_graph(rng, 1 + rng.between(0, 11), rng.uniform(), rng.uniform());
    auto l = laplacian<std::int64_t>(g);
    for (int k = 1; k <= 3; ++k) ASSERT_EQ(rayleigh_moment(g, k), ones_quadratic_moment(l, k));
  }
}

TEST(Eigenvalues, AgreeWithEigenOnRandomGraphs) {
  harness::SplitMix64 rng(37);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng.between(0, 11);
    auto g = random_graph(rng, n, rng.uniform(), rng.uniform());
    auto l = laplacian(g);
    Eigen::MatrixXd dense(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) dense(i, j) = l(i, j);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> oracle(dense, Eigen::EigenvaluesOnly);
    ASSERT_EQ(oracle.info(), Eigen::Success);
    auto s = eigenvalues(l).values();
    for (std::size_t i = 0; i < n; ++i) ASSERT_NEAR(s[i], oracle.eigenvalues()(i), 1e-9);
  }
}
