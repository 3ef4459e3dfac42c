#pragma once

// Single-network thermodynamics of the bosonic link gas: R indistinguishable
// link-quanta distributed over K = N(N-1) states. All entropies are in nats.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>

#include <boost/math/special_functions/gamma.hpp>

#include "netthermo/errors.hpp"
#include "netthermo/network.hpp"

namespace netthermo {

namespace detail {

inline void require_states(std::uint64_t states, const char* op) {
  if (states == 0) {
    throw ValidationError(std::string(op) + ": states must be >= 1");
  }
}

inline void require_positive_occupation(double occupation, const char* op) {
  if (!(occupation > 0.0) || !std::isfinite(occupation)) {
    throw ValidationError(std::string(op) + ": occupation must be a positive finite number");
  }
}

// Below this many factors ln C(t, m) is summed term by term; above it the
// log-gamma difference is accurate enough relative to the result.
inline constexpr std::uint64_t direct_sum_limit = 256;

} // namespace detail

/// Occupation number n = R/K.
inline double occupation(const Network& net) noexcept {
  return static_cast<double>(net.links()) / static_cast<double>(net.states());
}

/// ln W with W = (R+K-1)! / ((K-1)! R!), the number of ways to place R
/// indistinguishable quanta into K states. W itself is never formed.
inline double log_microstates(std::uint64_t links, std::uint64_t states) {
  detail::require_states(states, "log_microstates");
  // W = C(t, m) with t = R+K-1 and m the smaller of R, K-1.
  const std::uint64_t m = std::min(links, states - 1);
  if (m == 0) {
    return 0.0;
  }
  const std::uint64_t rest = std::max(links, states - 1);
  if (m <= detail::direct_sum_limit) {
    double sum = 0.0;
    const auto r = static_cast<double>(rest);
    for (std::uint64_t i = 1; i <= m; ++i) {
      sum += std::log1p(r / static_cast<double>(i));
    }
    return sum;
  }
  using boost::math::lgamma;
  const auto t = static_cast<double>(rest + m);
  return lgamma(t + 1.0) - lgamma(static_cast<double>(m) + 1.0) - lgamma(static_cast<double>(rest) + 1.0);
}

/// Stirling-regime entropy K[(n+1)ln(n+1) - n ln n], with 0 ln 0 = 0.
inline double entropy_planck(std::uint64_t links, std::uint64_t states) {
  detail::require_states(states, "entropy_planck");
  if (links == 0) {
    return 0.0;
  }
  const auto k = static_cast<double>(states);
  const double n = static_cast<double>(links) / k;
  // (n+1)ln(n+1) - n ln n == ln(1+n) + n ln(1 + 1/n)
  return k * (std::log1p(n) + n * std::log1p(1.0 / n));
}

/// Large-net entropy V[1 + ln(n+1)].
inline double entropy_large(double occupation, double volume) {
  if (!(volume >= 1.0)) {
    throw ValidationError("entropy_large: volume must be >= 1");
  }
  if (!(occupation >= 0.0)) {
    throw ValidationError("entropy_large: occupation must be >= 0");
  }
  return volume * (1.0 + std::log1p(occupation));
}

/// Cruder large-net form V ln(1+n). Diagnostic only.
inline double entropy_large_crude(double occupation, double volume) {
  if (!(volume >= 1.0) || !(occupation >= 0.0)) {
    throw ValidationError("entropy_large_crude: need volume >= 1 and occupation >= 0");
  }
  return volume * std::log1p(occupation);
}

/// Exact entropy gained by adding one link: ln((R+K)/(R+1)).
inline double add_link_delta_exact(std::uint64_t links, std::uint64_t states) {
  detail::require_states(states, "add_link_delta_exact");
  return std::log1p(static_cast<double>(states - 1) / (static_cast<double>(links) + 1.0));
}

/// Large-net per-link entropy ln((n+1)/n). Diverges at n = 0.
inline double add_link_delta_large(double occupation) {
  detail::require_positive_occupation(occupation, "add_link_delta_large");
  return std::log1p(1.0 / occupation);
}

/// Exact entropy gained by adding one node at fixed links: the state count
/// grows from N(N-1) to (N+1)N. For large nets this is close to 2N ln(1+n').
inline double add_node_delta(const Network& net) {
  const Network grown(net.nodes() + 1, net.links());
  return log_microstates(net.links(), grown.states()) - log_microstates(net.links(), net.states());
}

/// T = 1 / ln((1+n)/n).
inline double temperature_exact(double occupation) {
  detail::require_positive_occupation(occupation, "temperature_exact");
  return 1.0 / std::log1p(1.0 / occupation);
}

/// The n >> 1 limit of temperature_exact: T = n.
inline double temperature_classical(double occupation) {
  if (!(occupation >= 0.0)) {
    throw ValidationError("temperature_classical: occupation must be >= 0");
  }
  return occupation;
}

/// P = R/V with V = K, so that PV = R.
inline double pressure(const Network& net) noexcept { return occupation(net); }

struct NetworkReport {
  std::uint64_t nodes = 0;
  std::uint64_t links = 0;
  std::uint64_t states = 0;
  double occupation = 0.0;
  double log_microstates = 0.0;
  double entropy_planck = 0.0;
  double entropy_large = 0.0;
  std::optional<double> temperature_exact; // absent when n = 0
  double temperature_classical = 0.0;
  double pressure = 0.0;
};

inline NetworkReport report(const Network& net) {
  NetworkReport r;
  r.nodes = net.nodes();
  r.links = net.links();
  r.states = net.states();
  r.occupation = occupation(net);
  r.log_microstates = log_microstates(net.links(), net.states());
  r.entropy_planck = entropy_planck(net.links(), net.states());
  // The large-net form tends to V, not 0, as n -> 0; an empty net has a
  // single microstate, so its entropy is reported as 0.
  r.entropy_large = net.links() == 0 ? 0.0 : entropy_large(r.occupation, static_cast<double>(r.states));
  if (net.links() > 0) {
    r.temperature_exact = temperature_exact(r.occupation);
  }
  r.temperature_classical = temperature_classical(r.occupation);
  r.pressure = pressure(net);
  return r;
}

} // namespace netthermo
