#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "sostree/boundary_laws.hpp"
#include "sostree/errors.hpp"
#include "sostree/recursion.hpp"

using namespace sostree;

namespace {

TiLaw from_law(const BoundaryLaw& law) { return TiLaw{{law.x * law.x, law.y * law.y}, 2}; }

double max_rel_diff(const TiLaw& a, const TiLaw& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.z.size(); ++i) d = std::max(d, std::abs(a.z[i] - b.z[i]) / std::max(1.0, b.z[i]));
  return d;
}

}  // namespace

TEST(RecursionF, ThetaOneIsZero) {
  const auto f = recursion_F(BoundaryField{{0.3, -2.0, 5.0}}, 3, Coupling{1.0});
  for (const double v : f.h) EXPECT_NEAR(v, 0.0, 1e-14);
}

TEST(RecursionF, IsingSpecialization) {
  for (const double t : {0.3, 1.7}) {
    for (const double h : {-3.0, 0.0, 0.4, 8.0}) {
      const auto f = recursion_F(BoundaryField{{h}}, 1, Coupling{t});
      EXPECT_NEAR(f.h[0], std::log((std::exp(h) + t) / (t * std::exp(h) + 1)), 1e-13);
    }
  }
}

TEST(RecursionF, LargeFieldsStayFinite) {
  const auto f = recursion_F(BoundaryField{{800.0, -900.0}}, 2, Coupling{0.2});
  for (const double v : f.h) EXPECT_TRUE(std::isfinite(v));
}

TEST(RecursionF, RejectsBadInput) {
  EXPECT_THROW((void)recursion_F(BoundaryField{{}}, 0, Coupling{0.5}), DomainError);
  EXPECT_THROW((void)recursion_F(BoundaryField{{1.0}}, 2, Coupling{0.5}), DomainError);
  EXPECT_THROW((void)recursion_F(BoundaryField{{std::nan(""), 1.0}}, 2, Coupling{0.5}), DomainError);
}

TEST(RecursionF, CatalogLawIsConsistent) {
  const Coupling c{0.2};
  for (const auto& law : enumerate_tisgms(c).laws) {
    const BoundaryField h{{2 * std::log(law.x), 2 * std::log(law.y)}};
    const auto f = recursion_F(h, 2, c);
    EXPECT_NEAR(2 * f.h[0], h.h[0], 1e-10);
    EXPECT_NEAR(2 * f.h[1], h.h[1], 1e-10);
  }
}

TEST(TiMap, CatalogFixedPointsAcrossGrid) {
  for (double t = 0.01; t < 4.0; t += 0.013) {
    const Coupling c{t};
    for (const auto& law : enumerate_tisgms(c).laws) {
      const TiLaw z = from_law(law);
      EXPECT_LE(max_rel_diff(ti_fixed_point_map(z, c), z), 1e-10) << "theta=" << t << " branch=" << law.branch;
    }
  }
}

TEST(TiMap, SpecExamples) {
  const Coupling c{0.15};
  for (const auto& law : enumerate_tisgms(c).laws) {
    EXPECT_LE(max_rel_diff(ti_fixed_point_map(from_law(law), c), from_law(law)), 1e-10);
  }
  const TiLaw ones{{1.0, 1.0, 1.0}, 3};
  EXPECT_LE(max_rel_diff(ti_fixed_point_map(ones, Coupling{1.0}), ones), 1e-15);
}

TEST(TiMap, AgreesWithExpOfF) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int n = 0; n < 500; ++n) {
    const int m = 1 + n % 4;
    const int k = 1 + n % 3;
    TiLaw z{std::vector<double>(static_cast<std::size_t>(m)), k};
    BoundaryField h{std::vector<double>(static_cast<std::size_t>(m))};
    for (int i = 0; i < m; ++i) {
      h.h[static_cast<std::size_t>(i)] = u(rng);
      z.z[static_cast<std::size_t>(i)] = std::exp(h.h[static_cast<std::size_t>(i)]);
    }
    const Coupling c{std::exp(u(rng))};
    const auto f = recursion_F(h, m, c);
    const auto mz = ti_fixed_point_map(z, c);
    for (int i = 0; i < m; ++i) {
      const double want = std::exp(k * f.h[static_cast<std::size_t>(i)]);
      EXPECT_NEAR(mz.z[static_cast<std::size_t>(i)], want, 1e-12 * std::max(1.0, want));
    }
  }
}

TEST(TiMap, CommutesWithMirror) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int n = 0; n < 400; ++n) {
    const int m = 2 + n % 2;
    TiLaw z{std::vector<double>(static_cast<std::size_t>(m)), 2};
    for (auto& v : z.z) v = std::exp(u(rng));
    const Coupling c{std::exp(u(rng))};
    const auto lhs = ti_fixed_point_map(mirror_ti_law(z), c);
    const auto rhs = mirror_ti_law(ti_fixed_point_map(z, c));
    for (std::size_t i = 0; i < lhs.z.size(); ++i) EXPECT_NEAR(lhs.z[i], rhs.z[i], 1e-12 * std::max(1.0, rhs.z[i]));
  }
}

TEST(TiMap, RejectsInvalidLaw) {
  EXPECT_THROW((void)ti_fixed_point_map(TiLaw{{}, 2}, Coupling{0.5}), DomainError);
  EXPECT_THROW((void)ti_fixed_point_map(TiLaw{{1.0, -1.0}, 2}, Coupling{0.5}), DomainError);
  EXPECT_THROW((void)ti_fixed_point_map(TiLaw{{1.0, 1.0}, 0}, Coupling{0.5}), DomainError);
}

TEST(Iterate, ConvergesToUniqueLaw) {
  const Coupling c{0.5};
  const auto r = iterate_to_fixed_point(TiLaw{{1.0, 1.0}, 2}, c);
  ASSERT_TRUE(r.converged);
  const double y1 = enumerate_tisgms(c).at(1).y;
  EXPECT_NEAR(r.law.z[0], 1.0, 1e-10);
  EXPECT_NEAR(r.law.z[1], y1 * y1, 1e-10);
}

TEST(Iterate, ThetaOneIsImmediate) {
  FixedPointOptions opt;
  opt.damping = 1.0;
  const auto r = iterate_to_fixed_point(TiLaw{{4.0, 0.3}, 2}, Coupling{1.0}, opt);
  EXPECT_TRUE(r.converged);
  EXPECT_LE(r.iterations, 2);
  EXPECT_NEAR(r.law.z[0], 1.0, 1e-14);
  EXPECT_NEAR(r.law.z[1], 1.0, 1e-14);
}

TEST(Iterate, NearBranchFourReachesSomeFixedPoint) {
  const Coupling c{0.10};
  const auto law = enumerate_tisgms(c).at(4);
  const auto r = iterate_to_fixed_point(TiLaw{{law.x * law.x * 1.01, law.y * law.y * 0.99}, 2}, c);
  EXPECT_TRUE(r.converged);
  EXPECT_LE(r.residual, 1e-10);
}

TEST(Iterate, ReportsNonConvergence) {
  FixedPointOptions opt;
  opt.max_iter = 1;
  const auto r = iterate_to_fixed_point(TiLaw{{3.0, 0.2}, 2}, Coupling{0.3}, opt);
  EXPECT_FALSE(r.converged);
  EXPECT_EQ(r.iterations, 1);
}

TEST(Iterate, RejectsBadOptions) {
  FixedPointOptions opt;
  opt.damping = 0.0;
  EXPECT_THROW((void)iterate_to_fixed_point(TiLaw{{1.0, 1.0}, 2}, Coupling{0.3}, opt), DomainError);
  opt.damping = 0.5;
  opt.tol = -1;
  EXPECT_THROW((void)iterate_to_fixed_point(TiLaw{{1.0, 1.0}, 2}, Coupling{0.3}, opt), DomainError);
}
