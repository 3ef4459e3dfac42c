#pragma once

// Worked example of two 50-node nets with occupations 50 and 100 merged into
// one 100-node net. The published numbers for this example do not all agree
// with the formulas they quote, so they are kept here only for side-by-side
// comparison and are never returned as results.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "netthermo/merge.hpp"
#include "netthermo/network.hpp"
#include "netthermo/thermo.hpp"

namespace netthermo {

struct LedgerEntry {
  std::string quantity;
  std::string expression;
  double printed = 0.0;
  double recomputed = 0.0;

  [[nodiscard]] double relative_difference() const { return (recomputed - printed) / printed; }
};

inline const Network& example_net_cold() {
  static const Network net(50, 122500);
  return net;
}

inline const Network& example_net_hot() {
  static const Network net(50, 245000);
  return net;
}

inline std::vector<LedgerEntry> published_example_ledger() {
  const auto& a = example_net_cold();
  const auto& b = example_net_hot();
  const auto merged = merge_report(a, b);

  std::vector<LedgerEntry> out;
  // Large-net form V[1 + ln(n+1)] exactly as printed (combined n rounded to 37).
  out.push_back({"S1 large-net", "2450*(1+ln 51)", 12034.0, entropy_large(50.0, 2450.0)});
  out.push_back({"S2 large-net", "2450*(1+ln 101)", 13732.0, entropy_large(100.0, 2450.0)});
  out.push_back({"S combined large-net", "9900*(1+ln 38)", 45648.0, entropy_large(37.0, 9900.0)});
  // Stirling form on the same (R, K) pairs.
  out.push_back({"S1 Planck", "K[(n+1)ln(n+1)-n ln n] at R=122500, K=2450", 12034.0, merged.left.entropy_planck});
  out.push_back({"S2 Planck", "K[(n+1)ln(n+1)-n ln n] at R=245000, K=2450", 13732.0, merged.right.entropy_planck});
  out.push_back(
      {"S combined Planck", "K[(n+1)ln(n+1)-n ln n] at R=367500, K=9900", 45648.0, merged.combined.entropy_planck});
  out.push_back({"entropy increase", "S - S1 - S2, Planck form", 19882.0, merged.entropy_change_planck});
  out.push_back({"combined T = P", "367500 / 9900", 37.0, merged.intensity_exact});
  return out;
}

inline std::string describe(const LedgerEntry& e) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "published value check: %s [%s] printed %.12g, recomputed %.12g (%+.3f%%)",
                e.quantity.c_str(), e.expression.c_str(), e.printed, e.recomputed, 100.0 * e.relative_difference());
  return buf;
}

} // namespace netthermo
