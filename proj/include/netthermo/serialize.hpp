#pragma once

// JSON views of the report types and the output document envelope shared by
// every CLI command. Values are kept at full precision in memory; rounding to
// 12 significant digits happens only when a document is rendered.

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "netthermo/exchange_sim.hpp"
#include "netthermo/merge.hpp"
#include "netthermo/oracle.hpp"
#include "netthermo/thermo.hpp"
#include "netthermo/transfer.hpp"

namespace netthermo {

using json = nlohmann::ordered_json;

inline constexpr const char* schema_version = "1.0";
inline constexpr int significant_digits = 12;

enum class EntropyUnit { nats, bits };

inline const char* to_string(EntropyUnit u) noexcept { return u == EntropyUnit::nats ? "nats" : "bits"; }

/// Factor applied to every entropy-valued field.
inline double entropy_scale(EntropyUnit u) noexcept { return u == EntropyUnit::bits ? 1.0 / std::numbers::ln2 : 1.0; }

inline json to_json(const NetworkReport& r, EntropyUnit unit = EntropyUnit::nats) {
  const double s = entropy_scale(unit);
  json j;
  j["nodes"] = r.nodes;
  j["links"] = r.links;
  j["states"] = r.states;
  j["occupation"] = r.occupation;
  j["log_microstates"] = r.log_microstates * s;
  j["entropy_planck"] = r.entropy_planck * s;
  j["entropy_large"] = r.entropy_large * s;
  j["temperature_exact"] = r.temperature_exact ? json(*r.temperature_exact) : json(nullptr);
  j["temperature_classical"] = r.temperature_classical;
  j["pressure"] = r.pressure;
  return j;
}

inline json to_json(const MergeReport& m, EntropyUnit unit = EntropyUnit::nats) {
  const double s = entropy_scale(unit);
  json j;
  j["left"] = to_json(m.left, unit);
  j["right"] = to_json(m.right, unit);
  j["combined"] = to_json(m.combined, unit);
  j["volume_exact"] = m.volume_exact;
  j["volume_approx"] = m.volume_approx;
  j["intensity_exact"] = m.intensity_exact;
  j["intensity_approx"] = m.intensity_approx;
  j["entropy_change_planck"] = m.entropy_change_planck * s;
  j["entropy_change_exact"] = m.entropy_change_exact * s;
  j["ideal_gas_pressure"] = m.ideal_gas_pressure;
  return j;
}

inline json to_json(const TransferQuote& q, EntropyUnit unit = EntropyUnit::nats) {
  const double s = entropy_scale(unit);
  json j;
  j["quanta_moved"] = q.quanta_moved;
  j["hot_occupation"] = q.hot_occupation;
  j["cold_occupation"] = q.cold_occupation;
  j["per_link_entropy_hot"] = q.per_link_entropy_hot * s;
  j["per_link_entropy_cold"] = q.per_link_entropy_cold * s;
  j["max_profit_exact"] = q.max_profit_exact;
  j["max_profit_classical"] = q.max_profit_classical;
  j["entropy_change_at_zero_profit"] = q.entropy_change_at_zero_profit * s;
  j["orientation"] = to_string(q.orientation);
  return j;
}

inline json to_json(const PartitionDistribution& d, EntropyUnit unit = EntropyUnit::nats) {
  const double s = entropy_scale(unit);
  json j;
  j["pool_states_left"] = d.pool_states_left;
  j["pool_states_right"] = d.pool_states_right;
  j["total_links"] = d.total_links;
  json table = json::array();
  for (std::size_t i = 0; i < d.log_multiplicity.size(); ++i) {
    table.push_back({{"links_left", i},
                     {"multiplicity", d.multiplicity[i].str()},
                     {"log_multiplicity", d.log_multiplicity[i] * s}});
  }
  j["table"] = std::move(table);
  j["argmax_links_left"] = d.argmax_links_left;
  j["prediction_links_left"] = d.prediction_links_left;
  j["total_multiplicity"] = d.total_multiplicity.str();
  j["total_log_multiplicity"] = d.total_log_multiplicity * s;
  j["equalization_error"] = d.total_links > 0 ? json(equalization_error(d)) : json(nullptr);
  return j;
}

struct OutputDocument {
  std::string command;
  json inputs = json::object();
  json results = json::object();
  EntropyUnit units = EntropyUnit::nats;
  std::vector<std::string> warnings;
};

inline json to_json(const OutputDocument& doc) {
  json j;
  j["schema_version"] = schema_version;
  j["command"] = doc.command;
  j["inputs"] = doc.inputs;
  j["results"] = doc.results;
  j["units"] = to_string(doc.units);
  j["warnings"] = doc.warnings;
  return j;
}

/// Rounds every floating-point leaf to `significant_digits`.
inline json round_numbers(const json& j) {
  if (j.is_number_float()) {
    const double v = j.get<double>();
    if (!std::isfinite(v)) {
      return nullptr;
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.*g", significant_digits, v);
    return std::stod(buf);
  }
  if (j.is_array() || j.is_object()) {
    json out = j;
    for (auto it = out.begin(); it != out.end(); ++it) {
      *it = round_numbers(*it);
    }
    return out;
  }
  return j;
}

inline std::string format_scalar(const json& v) {
  if (v.is_number_float()) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.*g", significant_digits, v.get<double>());
    return buf;
  }
  if (v.is_string()) {
    return v.get<std::string>();
  }
  if (v.is_null()) {
    return "";
  }
  return v.dump();
}

/// Flattens nested objects/arrays into dotted key paths, in document order.
inline void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
    }
  } else {
    out.emplace_back(prefix, format_scalar(j));
  }
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) {
    return s;
  }
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') {
      q += '"';
    }
    q += c;
  }
  return q + '"';
}

} // namespace netthermo
