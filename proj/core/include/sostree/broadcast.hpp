#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "sostree/channel.hpp"
#include "sostree/coupling.hpp"

namespace sostree {

/// Name reported in output metadata for the generator below.
inline constexpr std::string_view kRngAlgorithm = "splitmix64-counter";
inline constexpr int kMaxBroadcastDepth = 22;
inline constexpr int kMinSamples = 100;
inline constexpr int kCensusBins = 64;
inline constexpr int kBootstrapResamples = 200;
inline constexpr int kPermutationRounds = 200;

/// SplitMix64 output function.
[[nodiscard]] constexpr std::uint64_t splitmix64(std::uint64_t z) noexcept {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30U)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27U)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31U);
}

/// Uniform in [0, 1) attached to node `node` (heap order: root 0, children
/// 2v+1 and 2v+2) of the tree generated from `tree_seed`.
[[nodiscard]] double node_uniform(std::uint64_t tree_seed, std::uint64_t node) noexcept;

/// Seed of the j-th tree rooted at `root_spin` for a run with master `seed`.
[[nodiscard]] std::uint64_t tree_seed(std::uint64_t seed, int root_spin, std::uint64_t j) noexcept;

struct BroadcastSample {
  int root_spin = 0;
  int depth = 0;
  std::array<std::int64_t, 3> census{};  // spin counts at the given depth, summing to 2^depth
};

/// One broadcast down the binary tree from a fixed root spin. Each child is
/// drawn from its parent's row by inversion of node_uniform.
[[nodiscard]] BroadcastSample sample_broadcast(const Channel& channel, int root_spin, int depth, std::uint64_t seed);

/// Census at every level 0..depth of the same tree.
[[nodiscard]] std::vector<std::array<std::int64_t, 3>> sample_census_levels(const Channel& channel, int root_spin,
                                                                            int depth, std::uint64_t seed);

/// Bin key of a census: floor(64 c0 / N) * 65 + floor(64 c1 / N).
[[nodiscard]] int census_bin(const std::array<std::int64_t, 3>& census) noexcept;

struct TvEstimate {
  int depth = 0;
  double tv = 0.0;         // plug-in TV between binned census laws for roots 0 and 2
  double std_error = 0.0;  // bootstrap standard deviation of tv
  int n_samples = 0;       // trees per root value
  std::uint64_t seed = 0;
  double null_tv = 0.0;  // mean plug-in TV after random relabelling of the two groups
  /// tv minus its small-sample floor; near zero when the root is forgotten.
  [[nodiscard]] double excess() const noexcept { return tv - null_tv; }
};

[[nodiscard]] TvEstimate estimate_census_tv(const Channel& channel, int depth, int n_samples, std::uint64_t seed);
/// Throws DomainError if the branch does not exist at theta.
[[nodiscard]] TvEstimate estimate_census_tv(Coupling theta, int branch, int depth, int n_samples,
                                            std::uint64_t seed);

/// estimate_census_tv for depths 1..max_depth, sharing trees across depths.
/// Entry d-1 equals estimate_census_tv(..., d, ...) exactly.
[[nodiscard]] std::vector<TvEstimate> decay_curve(const Channel& channel, int max_depth, int n_samples,
                                                  std::uint64_t seed);
[[nodiscard]] std::vector<TvEstimate> decay_curve(Coupling theta, int branch, int max_depth, int n_samples,
                                                  std::uint64_t seed);

/// Plug-in TV of two lists of bin keys.
[[nodiscard]] double plug_in_tv(const std::vector<int>& a, const std::vector<int>& b);

struct MarginalEstimate {
  Prob3 mean{};       // average fraction of each spin at the chosen depth
  Prob3 std_error{};  // standard error over trees
  int n_samples = 0;
};

/// Fraction of each spin among depth-d sites, averaged over n_samples trees.
[[nodiscard]] MarginalEstimate estimate_level_marginal(const Channel& channel, int root_spin, int depth,
                                                       int n_samples, std::uint64_t seed);

}  // namespace sostree
