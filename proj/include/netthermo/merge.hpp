#pragma once

// Combining two networks with disjoint node sets. Nodes and links add; states
// do not: (N1+N2)(N1+N2-1) = K1 + K2 + 2 N1 N2.

#include <cmath>
#include <cstdint>
#include <string>

#include "netthermo/errors.hpp"
#include "netthermo/network.hpp"
#include "netthermo/thermo.hpp"

namespace netthermo {

inline Network merge(const Network& a, const Network& b) {
  return Network(a.nodes() + b.nodes(), a.links() + b.links());
}

/// Large-net merged volume (sqrt V1 + sqrt V2)^2.
inline double merged_volume_approx(double v1, double v2) {
  if (!(v1 > 0.0) || !(v2 > 0.0)) {
    throw ValidationError("merged_volume_approx: volumes must be positive");
  }
  const double s = std::sqrt(v1) + std::sqrt(v2);
  return s * s;
}

namespace detail {

inline void require_positive_intensities(double v1, double p1, double v2, double p2, const char* op) {
  if (!(v1 > 0.0) || !(p1 > 0.0) || !(v2 > 0.0) || !(p2 > 0.0)) {
    throw ValidationError(std::string(op) + ": volumes and pressures must be positive");
  }
}

} // namespace detail

/// Merged temperature = pressure = occupation, (P1 V1 + P2 V2) / (sqrt V1 + sqrt V2)^2.
inline double merged_intensities(double v1, double p1, double v2, double p2) {
  detail::require_positive_intensities(v1, p1, v2, p2, "merged_intensities");
  return (p1 * v1 + p2 * v2) / merged_volume_approx(v1, v2);
}

/// Ideal-gas contrast where volume is extensive: (P1 V1 + P2 V2) / (V1 + V2).
inline double ideal_gas_pressure(double v1, double p1, double v2, double p2) {
  detail::require_positive_intensities(v1, p1, v2, p2, "ideal_gas_pressure");
  return (p1 * v1 + p2 * v2) / (v1 + v2);
}

struct MergeReport {
  NetworkReport left;
  NetworkReport right;
  NetworkReport combined;
  std::uint64_t volume_exact = 0;
  double volume_approx = 0.0;
  double intensity_exact = 0.0;
  double intensity_approx = 0.0;
  double entropy_change_planck = 0.0;
  double entropy_change_exact = 0.0;
  double ideal_gas_pressure = 0.0;
};

inline MergeReport merge_report(const Network& a, const Network& b) {
  const Network c = merge(a, b);
  MergeReport m;
  m.left = report(a);
  m.right = report(b);
  m.combined = report(c);
  m.volume_exact = c.states();
  const auto v1 = static_cast<double>(a.states());
  const auto v2 = static_cast<double>(b.states());
  m.volume_approx = merged_volume_approx(v1, v2);
  // P_i V_i = R_i, so the intensity formulas reduce to total links over a
  // volume; this also covers empty networks where P = 0.
  const auto total_links = static_cast<double>(c.links());
  m.intensity_exact = total_links / static_cast<double>(m.volume_exact);
  m.intensity_approx = total_links / m.volume_approx;
  m.ideal_gas_pressure = total_links / (v1 + v2);
  m.entropy_change_planck = m.combined.entropy_planck - (m.left.entropy_planck + m.right.entropy_planck);
  m.entropy_change_exact = m.combined.log_microstates - (m.left.log_microstates + m.right.log_microstates);
  return m;
}

} // namespace netthermo
