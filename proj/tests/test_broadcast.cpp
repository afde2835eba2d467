#include <gtest/gtest.h>

#include <cmath>

#include "sostree/broadcast.hpp"
#include "sostree/errors.hpp"
#include "support/oracles.hpp"

using namespace sostree;

namespace {

Channel channel_at(double t, int branch) {
  const Coupling c{t};
  return build_channel(c, enumerate_tisgms(c).at(branch));
}

}  // namespace

TEST(Rng, SplitMixReferenceValues) {
  // First outputs of the reference SplitMix64 stream seeded with 0.
  std::uint64_t state = 0;
  const auto next = [&state] {
    const std::uint64_t out = splitmix64(state);
    state += 0x9E3779B97F4A7C15ULL;
    return out;
  };
  EXPECT_EQ(next(), 0xE220A8397B1DCDAFULL);
  EXPECT_EQ(next(), 0x6E789E6AA1B965F4ULL);
  EXPECT_EQ(next(), 0x06C45D188009454FULL);
}

TEST(Rng, UniformRange) {
  for (std::uint64_t n = 0; n < 10000; ++n) {
    const double u = node_uniform(99, n);
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
  EXPECT_NE(tree_seed(1, 0, 0), tree_seed(1, 2, 0));
  EXPECT_NE(tree_seed(1, 0, 0), tree_seed(1, 0, 1));
}

TEST(SampleBroadcast, DepthZeroIsRoot) {
  const auto ch = channel_at(0.5, 1);
  for (int r = 0; r < 3; ++r) {
    const auto s = sample_broadcast(ch, r, 0, 5);
    for (int k = 0; k < 3; ++k) EXPECT_EQ(s.census[static_cast<std::size_t>(k)], k == r ? 1 : 0);
  }
}

TEST(SampleBroadcast, CensusSumsAndDeterminism) {
  const auto ch = channel_at(0.2, 4);
  for (int d = 0; d <= 12; ++d) {
    const auto a = sample_broadcast(ch, 0, d, 1234);
    const auto b = sample_broadcast(ch, 0, d, 1234);
    EXPECT_EQ(a.census, b.census);
    EXPECT_EQ(a.census[0] + a.census[1] + a.census[2], std::int64_t{1} << d);
  }
}

TEST(SampleBroadcast, LevelsAgreeWithSingleDepth) {
  const auto ch = channel_at(3.0, 1);
  const auto levels = sample_census_levels(ch, 2, 9, 77);
  for (int d = 0; d <= 9; ++d) EXPECT_EQ(levels[static_cast<std::size_t>(d)], sample_broadcast(ch, 2, d, 77).census);
}

TEST(SampleBroadcast, ThetaOneForgetsRoot) {
  // Identical rows and identical uniforms give identical trees below the root.
  const auto ch = channel_at(1.0, 1);
  EXPECT_EQ(sample_broadcast(ch, 0, 8, 42).census, sample_broadcast(ch, 2, 8, 42).census);
}

TEST(SampleBroadcast, Errors) {
  const auto ch = channel_at(0.5, 1);
  EXPECT_THROW((void)sample_broadcast(ch, 3, 2, 1), DomainError);
  EXPECT_THROW((void)sample_broadcast(ch, 0, -1, 1), DomainError);
  EXPECT_THROW((void)sample_broadcast(ch, 0, kMaxBroadcastDepth + 1, 1), DomainError);
  EXPECT_THROW((void)estimate_census_tv(ch, 3, 99, 1), DomainError);
  EXPECT_THROW((void)decay_curve(ch, 23, 100, 1), DomainError);
  EXPECT_THROW((void)estimate_census_tv(Coupling{0.5}, 4, 2, 100, 1), DomainError);
}

TEST(CensusBin, Layout) {
  EXPECT_EQ(census_bin({1, 0, 0}), 64 * 65);
  EXPECT_EQ(census_bin({0, 1, 0}), 64);
  EXPECT_EQ(census_bin({0, 0, 1}), 0);
  EXPECT_EQ(census_bin({1, 1, 0}), 32 * 65 + 32);
}

TEST(PlugInTv, Basics) {
  EXPECT_EQ(plug_in_tv({1, 2, 3}, {1, 2, 3}), 0.0);
  EXPECT_EQ(plug_in_tv({1, 1}, {2, 2}), 1.0);
  EXPECT_NEAR(plug_in_tv({1, 2}, {1, 1}), 0.5, 1e-15);
}

TEST(EstimateTv, DeterministicAndDecayCurveConsistent) {
  const auto ch = channel_at(0.2, 4);
  const auto a = estimate_census_tv(ch, 3, 500, 9);
  const auto b = estimate_census_tv(ch, 3, 500, 9);
  EXPECT_EQ(a.tv, b.tv);
  EXPECT_EQ(a.std_error, b.std_error);
  EXPECT_EQ(a.null_tv, b.null_tv);
  const auto curve = decay_curve(ch, 4, 500, 9);
  ASSERT_EQ(curve.size(), 4U);
  EXPECT_EQ(curve[2].tv, a.tv);
  EXPECT_EQ(curve[2].std_error, a.std_error);
  EXPECT_EQ(curve[2].null_tv, a.null_tv);
  for (const auto& e : curve) {
    EXPECT_GE(e.tv, 0.0);
    EXPECT_LE(e.tv, 1.0);
    EXPECT_GE(e.std_error, 0.0);
  }
}

TEST(EstimateTv, IndependentOfThreadCount) {
  const auto ch = channel_at(0.1, 2);
  ::setenv("SOSTREE_THREADS", "1", 1);
  const auto serial = estimate_census_tv(ch, 5, 300, 4);
  ::setenv("SOSTREE_THREADS", "5", 1);
  const auto threaded = estimate_census_tv(ch, 5, 300, 4);
  ::unsetenv("SOSTREE_THREADS");
  EXPECT_EQ(serial.tv, threaded.tv);
  EXPECT_EQ(serial.std_error, threaded.std_error);
}

TEST(EstimateTv, DepthOneMatchesExactOracle) {
  for (const auto& [t, b] : std::vector<std::pair<double, int>>{{0.1, 2}, {0.1, 3}, {0.2, 4}, {0.2, 5}, {0.2, 6},
                                                               {0.2, 7}, {0.5, 1}, {3.0, 1}, {5.0, 1}}) {
    const auto ch = channel_at(t, b);
    const double exact = oracle::depth1_census_tv(ch.p[0], ch.p[2]);
    const auto res = oracle::soft_check(2000, [&](int n) {
      const auto e = estimate_census_tv(ch, 1, n, 31);
      return std::abs(e.tv - exact) <= 3 * e.std_error;
    });
    EXPECT_TRUE(res.pass) << "theta=" << t << " branch=" << b;
  }
}

TEST(EstimateTv, ThetaOneIndistinguishableFromNull) {
  const auto ch = channel_at(1.0, 1);
  const auto res = oracle::soft_check(2000, [&](int n) {
    for (const auto& e : decay_curve(ch, 6, n, 8)) {
      if (e.excess() > 3 * e.std_error) return false;
    }
    return true;
  });
  EXPECT_TRUE(res.pass);
}

TEST(LevelMarginal, ConvergesToStationary) {
  for (const auto& [t, b] : std::vector<std::pair<double, int>>{{0.5, 1}, {0.2, 4}}) {
    const auto ch = channel_at(t, b);
    const auto pi = stationary_distribution(ch);
    const auto res = oracle::soft_check(2000, [&](int n) {
      const auto m = estimate_level_marginal(ch, 0, 12, n, 3);
      for (std::size_t s = 0; s < 3; ++s) {
        if (std::abs(m.mean[s] - pi[s]) > 3 * m.std_error[s]) return false;
      }
      return true;
    });
    EXPECT_TRUE(res.pass) << t << " b" << b;
  }
}
