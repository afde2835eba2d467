#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "sostree/algebra.hpp"
#include "sostree/channel.hpp"
#include "sostree/errors.hpp"
#include "support/oracles.hpp"

using namespace sostree;

namespace {

std::vector<double> grid50() {
  std::vector<double> out;
  for (int i = 0; i < 50; ++i) out.push_back(0.02 * std::pow(250.0, i / 49.0));
  return out;
}

}  // namespace

TEST(BuildChannel, UniformAtThetaOne) {
  const auto ch = build_channel(Coupling{1.0}, {1.0, 1.0, 1});
  EXPECT_DOUBLE_EQ(ch.z_norm, 3.0);
  for (const auto& row : ch.p) {
    for (const double v : row) EXPECT_NEAR(v, 1.0 / 3, 1e-15);
  }
}

TEST(BuildChannel, RejectsNonSolution) {
  EXPECT_THROW((void)build_channel(Coupling{0.2}, {2.0, 2.0, 1}), PreconditionError);
  EXPECT_THROW((void)build_channel(Coupling{0.2}, {-1.0, 2.0, 1}), PreconditionError);
}

TEST(BuildChannel, StochasticAndPositiveEverywhere) {
  for (const double t : grid50()) {
    const Coupling c{t};
    for (const auto& law : enumerate_tisgms(c).laws) {
      const auto ch = build_channel(c, law);
      for (const auto& row : ch.p) {
        EXPECT_NEAR(row[0] + row[1] + row[2], 1.0, 1e-12);
        for (const double v : row) EXPECT_GT(v, 0.0);
      }
      const auto w = oracle::weight_matrix(t, law.x, law.y);
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) EXPECT_NEAR(ch.p[i][j], w[i][j], 1e-10);
      }
    }
  }
}

TEST(BuildChannel, RowSumsAtHalf) {
  const Coupling c{0.5};
  const auto ch = build_channel(c, enumerate_tisgms(c).at(1));
  for (const auto& row : ch.p) EXPECT_NEAR(row[0] + row[1] + row[2], 1.0, 1e-14);
}

TEST(Stationary, Examples) {
  const auto uni = stationary_distribution(build_channel(Coupling{1.0}, {1.0, 1.0, 1}));
  for (const double v : uni) EXPECT_NEAR(v, 1.0 / 3, 1e-14);
  const Coupling c{0.2};
  const auto pi = stationary_distribution(build_channel(c, enumerate_tisgms(c).at(1)));
  EXPECT_NEAR(pi[0], pi[2], 1e-10);
}

TEST(Stationary, FixedUnderChannelAndMatchesPowerIteration) {
  for (const double t : grid50()) {
    const Coupling c{t};
    for (const auto& law : enumerate_tisgms(c).laws) {
      const auto ch = build_channel(c, law);
      const auto pi = stationary_distribution(ch);
      for (std::size_t j = 0; j < 3; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < 3; ++i) s += pi[i] * ch.p[i][j];
        EXPECT_NEAR(s, pi[j], 1e-12);
      }
      const auto o = oracle::power_stationary(ch.p);
      for (std::size_t j = 0; j < 3; ++j) EXPECT_NEAR(pi[j], o[j], 1e-9);
    }
  }
}

TEST(Eigen, ThetaOne) {
  const auto [l1, l2] = analytic_eigenvalues(Coupling{1.0}, {1.0, 1.0, 1});
  EXPECT_NEAR(l1, 0.0, 1e-15);
  EXPECT_NEAR(l2, 0.0, 1e-15);
  EXPECT_EQ(spectral_summary(Coupling{1.0}, 1).eta, -1.0);
}

TEST(Eigen, AnalyticMatchesOraclesOnGrid) {
  for (const double t : grid50()) {
    const Coupling c{t};
    for (const auto& law : enumerate_tisgms(c).laws) {
      const auto ch = build_channel(c, law);
      auto [l1, l2] = analytic_eigenvalues(c, law);
      EXPECT_LE(eigen_quadratic_residual(c, law, l1), 1e-9);
      EXPECT_LE(eigen_quadratic_residual(c, law, l2), 1e-9);
      std::array<double, 2> a{l1, l2};
      std::sort(a.begin(), a.end(), [](double u, double v) { return std::abs(u) < std::abs(v); });
      const auto n = numeric_eigenvalues(ch);
      // Jacobi spectrum minus the Perron eigenvalue closest to 1.
      auto j = oracle::jacobi_symmetrized(ch.p);
      std::array<double, 2> o{j[0], j[1]};
      if (std::abs(o[1]) < std::abs(o[0])) std::swap(o[0], o[1]);
      for (std::size_t k = 0; k < 2; ++k) {
        EXPECT_NEAR(n[k].real(), a[k], 1e-9) << t << " b" << law.branch;
        EXPECT_NEAR(n[k].imag(), 0.0, 1e-9);
        EXPECT_NEAR(o[k], a[k], 1e-9);
        EXPECT_LE(std::abs(a[k]), 1.0);
      }
    }
  }
}

TEST(Eigen, PerronEigenvalueIsOne) {
  const Coupling c{0.2};
  const auto ch = build_channel(c, enumerate_tisgms(c).at(4));
  const auto [l1, l2] = analytic_eigenvalues(c, ch.law);
  const double tr = ch.p[0][0] + ch.p[1][1] + ch.p[2][2];
  EXPECT_NEAR(tr - l1 - l2, 1.0, 1e-12);
}

TEST(Spectral, SpecExamples) {
  EXPECT_GT(spectral_summary(Coupling{3.0}, 1).eta, 0.0);
  EXPECT_GT(spectral_summary(Coupling{0.16}, 5).eta, 0.0);
  EXPECT_THROW((void)spectral_summary(Coupling{0.5}, 2), DomainError);
}

TEST(Spectral, SummaryInvariantsAndReferenceTable) {
  for (const double t : grid50()) {
    const Coupling c{t};
    for (const auto& law : enumerate_tisgms(c).laws) {
      const auto s = spectral_summary(c, law);
      EXPECT_DOUBLE_EQ(s.lambda_max, std::max(std::abs(s.lambda1), std::abs(s.lambda2)));
      EXPECT_DOUBLE_EQ(s.eta, 2 * s.lambda_max * s.lambda_max - 1);
      EXPECT_TRUE(s.matches_reference) << t << " b" << law.branch;
    }
  }
}

TEST(Spectral, KsSignsByBranch) {
  const double tc = cubic_critical_theta().value();
  const double tcp = theta_c_prime().value();
  for (double t = 0.002; t < tcp; t += 1e-3) {
    const Coupling c{t};
    EXPECT_LT(spectral_summary(c, 4).eta, 0.0) << t;
    EXPECT_LT(spectral_summary(c, 7).eta, 0.0) << t;
    if (t < tc) {
      EXPECT_GT(spectral_summary(c, 2).eta, 0.0) << t;
      EXPECT_GT(spectral_summary(c, 3).eta, 0.0) << t;
    }
  }
}

TEST(Spectral, MirrorPairsShareSpectra) {
  for (double t = 0.01; t < 0.29; t += 3e-3) {
    const Coupling c{t};
    for (const auto [a, b] : {std::pair{4, 7}, std::pair{5, 6}}) {
      const auto sa = spectral_summary(c, a);
      const auto sb = spectral_summary(c, b);
      EXPECT_NEAR(sa.lambda1, sb.lambda1, 1e-9);
      EXPECT_NEAR(sa.lambda2, sb.lambda2, 1e-9);
      EXPECT_NEAR(sa.eta, sb.eta, 1e-9);
    }
  }
}

TEST(RowDistance, Uniform) {
  const auto ch = build_channel(Coupling{1.0}, {1.0, 1.0, 1});
  EXPECT_EQ(half_max_row_distance(ch.p), 0.0);
}
