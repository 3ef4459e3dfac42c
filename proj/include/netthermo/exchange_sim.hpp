#pragma once

// Metropolis sampler for two pools of states exchanging a fixed number of
// link-quanta. The chain state is the number of links in the left pool, R1;
// its stationary law is pi(R1) ~ W(R1, K1) W(R - R1, K2).
//
// Random numbers come from std::mt19937_64, whose output sequence is fixed by
// the C++ standard. Uniform variates are built from the top 53 bits and the
// proposal direction from the top bit, so runs are identical across platforms
// and standard libraries.

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "netthermo/errors.hpp"
#include "netthermo/oracle.hpp"

namespace netthermo {

inline constexpr const char* rng_algorithm = "mt19937_64";

struct SimConfig {
  std::uint64_t pool_states_left = 1;
  std::uint64_t pool_states_right = 1;
  std::uint64_t total_links = 1;
  std::uint64_t initial_links_left = 0;
  std::uint64_t steps = 1;
  std::uint64_t burn_in = 0;
  std::uint64_t seed = 0;
  std::uint64_t sample_stride = 1;

  /// Config with the default chain hyperparameters: burn-in is 1% of the
  /// steps, every post-burn-in step is kept, the chain starts at R1 = 0.
  static SimConfig with_defaults(std::uint64_t k1, std::uint64_t k2, std::uint64_t links, std::uint64_t steps,
                                 std::uint64_t seed) {
    SimConfig c;
    c.pool_states_left = k1;
    c.pool_states_right = k2;
    c.total_links = links;
    c.steps = steps;
    c.burn_in = steps / 100;
    c.seed = seed;
    return c;
  }

  void validate() const {
    if (pool_states_left == 0 || pool_states_right == 0) {
      throw ValidationError("simulate: pool state counts must be >= 1");
    }
    if (total_links == 0) {
      throw ValidationError("simulate: total links must be >= 1");
    }
    if (initial_links_left > total_links) {
      throw ValidationError("simulate: initial links in the left pool must lie in [0, R]");
    }
    if (steps == 0) {
      throw ValidationError("simulate: steps must be >= 1");
    }
    if (burn_in >= steps) {
      throw ValidationError("simulate: burn-in (" + std::to_string(burn_in) + ") must be smaller than steps (" +
                            std::to_string(steps) + ")");
    }
    if (sample_stride == 0) {
      throw ValidationError("simulate: sample stride must be >= 1");
    }
  }
};

struct Trajectory {
  std::vector<std::uint64_t> samples;   // R1 after each retained step
  std::uint64_t first_step_index = 0;   // step index of samples[0]
  std::uint64_t sample_stride = 1;      // step distance between samples
  std::uint64_t total_links = 0;
  double acceptance_rate = 0.0;
  std::vector<std::uint64_t> histogram; // histogram[v] = count of samples equal to v, v in [0, R]
  double mean_occupation_left = 0.0;
  double mean_occupation_right = 0.0;
  std::string rng = rng_algorithm;
  std::uint64_t seed = 0;

  [[nodiscard]] std::uint64_t step_index(std::size_t sample) const noexcept {
    return first_step_index + sample * sample_stride;
  }

  friend bool operator==(const Trajectory&, const Trajectory&) = default;
};

/// pi(R1 + 1) / pi(R1) = [(R1 + K1)/(R1 + 1)] [(R - R1)/(R - R1 - 1 + K2)], for R1 < R.
inline double acceptance_ratio_up(std::uint64_t links_left, std::uint64_t states_left, std::uint64_t states_right,
                                  std::uint64_t total_links) {
  const auto r1 = static_cast<double>(links_left);
  const auto r2 = static_cast<double>(total_links - links_left);
  return ((r1 + static_cast<double>(states_left)) / (r1 + 1.0)) *
         (r2 / (r2 - 1.0 + static_cast<double>(states_right)));
}

/// pi(R1 - 1) / pi(R1), for R1 > 0.
inline double acceptance_ratio_down(std::uint64_t links_left, std::uint64_t states_left, std::uint64_t states_right,
                                    std::uint64_t total_links) {
  return 1.0 / acceptance_ratio_up(links_left - 1, states_left, states_right, total_links);
}

namespace detail {

inline double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

} // namespace detail

inline Trajectory run_exchange(const SimConfig& config) {
  config.validate();
  const std::uint64_t k1 = config.pool_states_left;
  const std::uint64_t k2 = config.pool_states_right;
  const std::uint64_t total = config.total_links;

  std::mt19937_64 rng(config.seed);
  Trajectory t;
  t.first_step_index = config.burn_in;
  t.sample_stride = config.sample_stride;
  t.total_links = total;
  t.seed = config.seed;
  t.histogram.assign(total + 1, 0);
  t.samples.reserve((config.steps - config.burn_in - 1) / config.sample_stride + 1);

  std::uint64_t state = config.initial_links_left;
  std::uint64_t accepted = 0;
  for (std::uint64_t step = 0; step < config.steps; ++step) {
    const bool up = (rng() >> 63) != 0;
    if (up ? state < total : state > 0) {
      const double ratio =
          up ? acceptance_ratio_up(state, k1, k2, total) : acceptance_ratio_down(state, k1, k2, total);
      if (ratio >= 1.0 || detail::uniform01(rng) < ratio) {
        state = up ? state + 1 : state - 1;
        ++accepted;
      }
    }
    if (step >= config.burn_in && (step - config.burn_in) % config.sample_stride == 0) {
      t.samples.push_back(state);
      ++t.histogram[state];
    }
  }

  t.acceptance_rate = static_cast<double>(accepted) / static_cast<double>(config.steps);
  double sum = 0.0;
  for (auto s : t.samples) {
    sum += static_cast<double>(s);
  }
  const double mean_left = sum / static_cast<double>(t.samples.size());
  t.mean_occupation_left = mean_left / static_cast<double>(k1);
  t.mean_occupation_right = (static_cast<double>(total) - mean_left) / static_cast<double>(k2);
  return t;
}

struct SimSummary {
  double mean_links_left = 0.0;
  double stderr_links_left = 0.0; // batch-means estimate, accounts for autocorrelation
  double mean_occupation_left = 0.0;
  double mean_occupation_right = 0.0;
  std::optional<double> tv_distance_to_exact; // present when the oracle is within its cap
};

/// Standard error of the sample mean from non-overlapping batch means.
inline double batch_means_stderr(const std::vector<std::uint64_t>& samples, std::size_t batches = 50) {
  const std::size_t n = samples.size();
  if (n < 2) {
    return 0.0;
  }
  if (n < 2 * batches) {
    batches = n / 2;
  }
  const std::size_t size = n / batches;
  std::vector<double> means(batches, 0.0);
  for (std::size_t b = 0; b < batches; ++b) {
    for (std::size_t i = b * size; i < (b + 1) * size; ++i) {
      means[b] += static_cast<double>(samples[i]);
    }
    means[b] /= static_cast<double>(size);
  }
  double mean = 0.0;
  for (double m : means) {
    mean += m;
  }
  mean /= static_cast<double>(batches);
  double var = 0.0;
  for (double m : means) {
    var += (m - mean) * (m - mean);
  }
  var /= static_cast<double>(batches - 1);
  return std::sqrt(var / static_cast<double>(batches));
}

/// Total-variation distance between the trajectory histogram and a reference law.
inline double tv_distance(const Trajectory& t, const std::vector<double>& reference) {
  const auto n = static_cast<double>(t.samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < reference.size(); ++i) {
    const double emp = i < t.histogram.size() ? static_cast<double>(t.histogram[i]) / n : 0.0;
    d += std::abs(emp - reference[i]);
  }
  return 0.5 * d;
}

inline SimSummary summarize(const Trajectory& t, std::uint64_t states_left, std::uint64_t states_right,
                            const OracleLimits& limits = {}) {
  if (t.samples.empty()) {
    throw ValidationError("summarize: trajectory has no samples");
  }
  if (states_left == 0 || states_right == 0) {
    throw ValidationError("summarize: pool state counts must be >= 1");
  }
  SimSummary s;
  double sum = 0.0;
  for (auto v : t.samples) {
    sum += static_cast<double>(v);
  }
  s.mean_links_left = sum / static_cast<double>(t.samples.size());
  s.stderr_links_left = batch_means_stderr(t.samples);
  s.mean_occupation_left = s.mean_links_left / static_cast<double>(states_left);
  s.mean_occupation_right = (static_cast<double>(t.total_links) - s.mean_links_left) / static_cast<double>(states_right);
  try {
    const auto exact = partition_distribution(states_left, states_right, t.total_links, limits);
    s.tv_distance_to_exact = tv_distance(t, exact.probabilities());
  } catch (const CapExceededError&) {
    // beyond the oracle: no exact reference
  }
  return s;
}

} // namespace netthermo
