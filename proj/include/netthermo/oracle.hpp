#pragma once

// Exact big-integer ground truth for desk-scale instances. Everything here is
// bounded by a cap on R + K so that exhaustive sweeps stay fast; larger
// problems belong to the log-domain routines or the sampler.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "netthermo/errors.hpp"

namespace netthermo {

using BigInt = boost::multiprecision::cpp_int;

struct OracleLimits {
  static constexpr std::uint64_t default_cap = 5000;
  std::uint64_t cap = default_cap; // maximum R + K for exact arithmetic
};

namespace detail {

inline void require_within_cap(std::uint64_t links, std::uint64_t states, const OracleLimits& limits, const char* op) {
  if (links > limits.cap || states > limits.cap || links + states > limits.cap) {
    throw CapExceededError(std::string(op) + ": R + K = " + std::to_string(links) + " + " + std::to_string(states) +
                           " exceeds the exact-arithmetic cap of " + std::to_string(limits.cap) +
                           "; use log_microstates or the sampler instead");
  }
}

} // namespace detail

/// Natural log of a positive big integer without converting the whole value
/// to floating point.
inline double log_big(const BigInt& x) {
  if (x <= 0) {
    return -std::numeric_limits<double>::infinity();
  }
  const auto top = static_cast<std::uint64_t>(boost::multiprecision::msb(x));
  const std::uint64_t shift = top > 62 ? top - 62 : 0;
  const BigInt head = x >> shift;
  return std::log(head.convert_to<double>()) + static_cast<double>(shift) * std::numbers::ln2;
}

/// W = C(R+K-1, R), exactly.
inline BigInt microstates_exact(std::uint64_t links, std::uint64_t states, const OracleLimits& limits = {}) {
  if (states == 0) {
    throw ValidationError("microstates_exact: states must be >= 1");
  }
  detail::require_within_cap(links, states, limits, "microstates_exact");
  const std::uint64_t m = std::min(links, states - 1);
  const std::uint64_t rest = std::max(links, states - 1);
  BigInt w = 1;
  // After step i, w = C(rest + i, i), which is always an integer.
  for (std::uint64_t i = 1; i <= m; ++i) {
    w *= rest + i;
    w /= i;
  }
  return w;
}

/// Exact distribution of R links over two pools of K1 and K2 states: entry i
/// counts the joint microstates with i links in the left pool.
struct PartitionDistribution {
  std::uint64_t pool_states_left = 0;
  std::uint64_t pool_states_right = 0;
  std::uint64_t total_links = 0;
  std::vector<BigInt> multiplicity;     // W(i, K1) W(R - i, K2)
  std::vector<double> log_multiplicity; // ln of the above
  std::uint64_t argmax_links_left = 0;  // ties go to the smaller i
  double prediction_links_left = 0.0;   // R K1 / (K1 + K2)
  BigInt total_multiplicity;            // W(R, K1 + K2)
  double total_log_multiplicity = 0.0;

  /// pi_i = multiplicity_i / total, in floating point.
  [[nodiscard]] std::vector<double> probabilities() const {
    std::vector<double> p;
    p.reserve(log_multiplicity.size());
    for (double lm : log_multiplicity) {
      p.push_back(std::exp(lm - total_log_multiplicity));
    }
    return p;
  }

  [[nodiscard]] double mean_links_left() const {
    const auto p = probabilities();
    double mean = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      mean += static_cast<double>(i) * p[i];
    }
    return mean;
  }
};

inline PartitionDistribution partition_distribution(std::uint64_t states_left, std::uint64_t states_right,
                                                    std::uint64_t links, const OracleLimits& limits = {}) {
  if (states_left == 0 || states_right == 0) {
    throw ValidationError("partition_distribution: both pools need at least one state");
  }
  // Checked one pool at a time first so the sum below cannot wrap.
  detail::require_within_cap(links, std::max(states_left, states_right), limits, "partition_distribution");
  detail::require_within_cap(links, states_left + states_right, limits, "partition_distribution");

  PartitionDistribution d;
  d.pool_states_left = states_left;
  d.pool_states_right = states_right;
  d.total_links = links;

  // W(i, K1) for i = 0..R via W(i+1, K) = W(i, K) (i + K) / (i + 1).
  std::vector<BigInt> left(links + 1);
  left[0] = 1;
  for (std::uint64_t i = 0; i < links; ++i) {
    left[i + 1] = left[i] * (i + states_left) / (i + 1);
  }
  std::vector<BigInt> right(links + 1);
  right[0] = 1;
  for (std::uint64_t j = 0; j < links; ++j) {
    right[j + 1] = right[j] * (j + states_right) / (j + 1);
  }

  d.multiplicity.reserve(links + 1);
  d.log_multiplicity.reserve(links + 1);
  for (std::uint64_t i = 0; i <= links; ++i) {
    d.multiplicity.push_back(left[i] * right[links - i]);
    d.log_multiplicity.push_back(log_big(d.multiplicity.back()));
    if (d.multiplicity.back() > d.multiplicity[d.argmax_links_left]) {
      d.argmax_links_left = i;
    }
  }
  d.prediction_links_left = static_cast<double>(links) * static_cast<double>(states_left) /
                            static_cast<double>(states_left + states_right);
  d.total_multiplicity = microstates_exact(links, states_left + states_right, limits);
  d.total_log_multiplicity = log_big(d.total_multiplicity);
  return d;
}

/// |R1* / R - K1 / (K1 + K2)|: how far the most probable split sits from
/// equal occupations.
inline double equalization_error(const PartitionDistribution& d) {
  if (d.total_links == 0) {
    throw ValidationError("equalization_error: needs total links R >= 1");
  }
  const double share = static_cast<double>(d.pool_states_left) /
                       static_cast<double>(d.pool_states_left + d.pool_states_right);
  return std::abs(static_cast<double>(d.argmax_links_left) / static_cast<double>(d.total_links) - share);
}

inline double equalization_error(std::uint64_t states_left, std::uint64_t states_right, std::uint64_t links,
                                 const OracleLimits& limits = {}) {
  if (links == 0) {
    throw ValidationError("equalization_error: needs total links R >= 1");
  }
  return equalization_error(partition_distribution(states_left, states_right, links, limits));
}

} // namespace netthermo
