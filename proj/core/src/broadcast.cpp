#include "sostree/broadcast.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "sostree/boundary_laws.hpp"
#include "sostree/errors.hpp"
#include "sostree/parallel.hpp"

namespace sostree {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
constexpr int kBinKeys = (kCensusBins + 1) * (kCensusBins + 1);

void check_depth(int depth) {
  if (depth < 0 || depth > kMaxBroadcastDepth) {
    throw DomainError("broadcast depth must be in [0, " + std::to_string(kMaxBroadcastDepth) + "]");
  }
}

void check_root(int root_spin) {
  if (root_spin < 0 || root_spin > 2) throw DomainError("root spin must be 0, 1 or 2");
}

void check_samples(int n_samples) {
  if (n_samples < kMinSamples) throw DomainError("n_samples must be at least " + std::to_string(kMinSamples));
}

std::uint8_t draw(const Matrix3& p, std::uint8_t parent, double u) noexcept {
  const auto& row = p[parent];
  if (u < row[0]) return 0;
  if (u < row[0] + row[1]) return 1;
  return 2;
}

// Draws in [0, n) by multiply-shift.
std::size_t bounded(std::mt19937_64& rng, std::size_t n) {
  __extension__ using u128 = unsigned __int128;
  return static_cast<std::size_t>((static_cast<u128>(rng()) * n) >> 64U);
}

double tv_of_counts(const std::vector<int>& ca, const std::vector<int>& cb, double na, double nb) {
  double sum = 0.0;
  for (std::size_t k = 0; k < ca.size(); ++k) sum += std::abs(ca[k] / na - cb[k] / nb);
  return 0.5 * sum;
}

struct Keys {
  std::vector<int> zero;  // root spin 0
  std::vector<int> two;   // root spin 2
};

TvEstimate summarize(const Keys& keys, int depth, int n_samples, std::uint64_t seed) {
  TvEstimate est;
  est.depth = depth;
  est.n_samples = n_samples;
  est.seed = seed;
  est.tv = plug_in_tv(keys.zero, keys.two);

  const auto n = static_cast<std::size_t>(n_samples);
  std::mt19937_64 rng(splitmix64(seed ^ (static_cast<std::uint64_t>(depth) * kGolden)));
  std::vector<int> ca(kBinKeys);
  std::vector<int> cb(kBinKeys);

  double sum = 0.0;
  double sum_sq = 0.0;
  for (int r = 0; r < kBootstrapResamples; ++r) {
    std::fill(ca.begin(), ca.end(), 0);
    std::fill(cb.begin(), cb.end(), 0);
    for (std::size_t i = 0; i < n; ++i) ++ca[static_cast<std::size_t>(keys.zero[bounded(rng, n)])];
    for (std::size_t i = 0; i < n; ++i) ++cb[static_cast<std::size_t>(keys.two[bounded(rng, n)])];
    const double tv = tv_of_counts(ca, cb, static_cast<double>(n), static_cast<double>(n));
    sum += tv;
    sum_sq += tv * tv;
  }
  const double mean = sum / kBootstrapResamples;
  est.std_error = std::sqrt(std::max(0.0, (sum_sq - kBootstrapResamples * mean * mean) / (kBootstrapResamples - 1)));

  std::vector<int> pooled(keys.zero);
  pooled.insert(pooled.end(), keys.two.begin(), keys.two.end());
  double null_sum = 0.0;
  for (int r = 0; r < kPermutationRounds; ++r) {
    for (std::size_t i = pooled.size() - 1; i > 0; --i) std::swap(pooled[i], pooled[bounded(rng, i + 1)]);
    std::fill(ca.begin(), ca.end(), 0);
    std::fill(cb.begin(), cb.end(), 0);
    for (std::size_t i = 0; i < n; ++i) ++ca[static_cast<std::size_t>(pooled[i])];
    for (std::size_t i = n; i < 2 * n; ++i) ++cb[static_cast<std::size_t>(pooled[i])];
    null_sum += tv_of_counts(ca, cb, static_cast<double>(n), static_cast<double>(n));
  }
  est.null_tv = null_sum / kPermutationRounds;
  return est;
}

// keys[d][root][j] for d = 0..max_depth.
std::vector<Keys> collect_keys(const Channel& channel, int max_depth, int n_samples, std::uint64_t seed) {
  const auto n = static_cast<std::size_t>(n_samples);
  std::vector<Keys> keys(static_cast<std::size_t>(max_depth) + 1);
  for (auto& k : keys) {
    k.zero.resize(n);
    k.two.resize(n);
  }
  parallel_for(2 * n, [&](std::size_t idx) {
    const int root = idx < n ? 0 : 2;
    const std::size_t j = idx % n;
    const auto levels = sample_census_levels(channel, root, max_depth, tree_seed(seed, root, j));
    for (std::size_t d = 0; d < levels.size(); ++d) {
      auto& dst = root == 0 ? keys[d].zero : keys[d].two;
      dst[j] = census_bin(levels[d]);
    }
  });
  return keys;
}

Channel channel_for(Coupling theta, int branch) { return build_channel(theta, enumerate_tisgms(theta).at(branch)); }

}  // namespace

double node_uniform(std::uint64_t seed, std::uint64_t node) noexcept {
  return static_cast<double>(splitmix64(seed + (node + 1) * kGolden) >> 11U) * 0x1.0p-53;
}

std::uint64_t tree_seed(std::uint64_t seed, int root_spin, std::uint64_t j) noexcept {
  const std::uint64_t s = splitmix64(seed + static_cast<std::uint64_t>(root_spin + 1) * kGolden);
  return splitmix64(s ^ splitmix64(j));
}

std::vector<std::array<std::int64_t, 3>> sample_census_levels(const Channel& channel, int root_spin, int depth,
                                                              std::uint64_t seed) {
  check_depth(depth);
  check_root(root_spin);
  std::vector<std::array<std::int64_t, 3>> census(static_cast<std::size_t>(depth) + 1);
  std::vector<std::uint8_t> level{static_cast<std::uint8_t>(root_spin)};
  std::vector<std::uint8_t> next;
  census[0][static_cast<std::size_t>(root_spin)] = 1;
  std::uint64_t first = 0;  // heap index of level[0]
  for (int d = 1; d <= depth; ++d) {
    next.resize(2 * level.size());
    const std::uint64_t child_first = 2 * first + 1;
    for (std::size_t i = 0; i < level.size(); ++i) {
      const std::uint64_t c = child_first + 2 * i;
      next[2 * i] = draw(channel.p, level[i], node_uniform(seed, c));
      next[2 * i + 1] = draw(channel.p, level[i], node_uniform(seed, c + 1));
    }
    auto& counts = census[static_cast<std::size_t>(d)];
    for (const auto s : next) ++counts[s];
    level.swap(next);
    first = child_first;
  }
  return census;
}

BroadcastSample sample_broadcast(const Channel& channel, int root_spin, int depth, std::uint64_t seed) {
  const auto levels = sample_census_levels(channel, root_spin, depth, seed);
  return {root_spin, depth, levels.back()};
}

int census_bin(const std::array<std::int64_t, 3>& census) noexcept {
  const std::int64_t total = census[0] + census[1] + census[2];
  if (total <= 0) return 0;
  const auto b0 = static_cast<int>(census[0] * kCensusBins / total);
  const auto b1 = static_cast<int>(census[1] * kCensusBins / total);
  return b0 * (kCensusBins + 1) + b1;
}

double plug_in_tv(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.empty() || b.empty()) throw DomainError("plug_in_tv: empty sample");
  std::vector<int> ca(kBinKeys);
  std::vector<int> cb(kBinKeys);
  for (const int k : a) ++ca.at(static_cast<std::size_t>(k));
  for (const int k : b) ++cb.at(static_cast<std::size_t>(k));
  return tv_of_counts(ca, cb, static_cast<double>(a.size()), static_cast<double>(b.size()));
}

TvEstimate estimate_census_tv(const Channel& channel, int depth, int n_samples, std::uint64_t seed) {
  check_depth(depth);
  check_samples(n_samples);
  const auto keys = collect_keys(channel, depth, n_samples, seed);
  return summarize(keys.back(), depth, n_samples, seed);
}

TvEstimate estimate_census_tv(Coupling theta, int branch, int depth, int n_samples, std::uint64_t seed) {
  return estimate_census_tv(channel_for(theta, branch), depth, n_samples, seed);
}

std::vector<TvEstimate> decay_curve(const Channel& channel, int max_depth, int n_samples, std::uint64_t seed) {
  check_depth(max_depth);
  check_samples(n_samples);
  if (max_depth < 1) throw DomainError("decay_curve: max_depth must be at least 1");
  const auto keys = collect_keys(channel, max_depth, n_samples, seed);
  std::vector<TvEstimate> out;
  out.reserve(static_cast<std::size_t>(max_depth));
  for (int d = 1; d <= max_depth; ++d) out.push_back(summarize(keys[static_cast<std::size_t>(d)], d, n_samples, seed));
  return out;
}

std::vector<TvEstimate> decay_curve(Coupling theta, int branch, int max_depth, int n_samples, std::uint64_t seed) {
  return decay_curve(channel_for(theta, branch), max_depth, n_samples, seed);
}

MarginalEstimate estimate_level_marginal(const Channel& channel, int root_spin, int depth, int n_samples,
                                         std::uint64_t seed) {
  check_depth(depth);
  check_root(root_spin);
  check_samples(n_samples);
  const auto n = static_cast<std::size_t>(n_samples);
  std::vector<Prob3> fractions(n);
  parallel_for(n, [&](std::size_t j) {
    const auto census = sample_broadcast(channel, root_spin, depth, tree_seed(seed, root_spin, j)).census;
    const auto total = static_cast<double>(census[0] + census[1] + census[2]);
    for (std::size_t s = 0; s < 3; ++s) fractions[j][s] = static_cast<double>(census[s]) / total;
  });
  MarginalEstimate out;
  out.n_samples = n_samples;
  for (std::size_t s = 0; s < 3; ++s) {
    double sum = 0.0;
    for (const auto& f : fractions) sum += f[s];
    const double mean = sum / static_cast<double>(n);
    double ss = 0.0;
    for (const auto& f : fractions) ss += (f[s] - mean) * (f[s] - mean);
    out.mean[s] = mean;
    out.std_error[s] = std::sqrt(ss / static_cast<double>(n - 1) / static_cast<double>(n));
  }
  return out;
}

}  // namespace sostree
