#pragma once

// Flat-file formats: the network inventory CSV read by `batch` and the
// trajectory CSV written by `simulate`.

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "netthermo/exchange_sim.hpp"
#include "netthermo/network.hpp"

namespace netthermo {

class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct InventoryRow {
  std::size_t row = 0; // 1-based line number in the file; the header is row 1
  std::string name;
  std::uint64_t nodes = 0;
  std::uint64_t links = 0;
};

struct InventoryError {
  std::size_t row = 0;
  std::string message;
};

struct Inventory {
  std::vector<InventoryRow> rows;
  std::vector<InventoryError> errors;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

inline std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const auto pos = line.find(',', start);
    fields.push_back(trim(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) {
      return fields;
    }
    start = pos + 1;
  }
}

inline bool parse_u64(std::string_view s, std::uint64_t& out) {
  if (s.empty()) {
    return false;
  }
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

} // namespace detail

/// Parses `name,nodes,links` rows. Blank lines and lines starting with '#' are
/// skipped. Bad rows are collected in `errors` and left out of `rows`.
inline Inventory parse_inventory(std::istream& in) {
  Inventory inv;
  std::string line;
  std::size_t row = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++row;
    std::string_view view(line);
    if (row == 1 && view.starts_with("\xEF\xBB\xBF")) {
      view.remove_prefix(3);
    }
    view = detail::trim(view);
    if (view.empty() || view.front() == '#') {
      continue;
    }
    const auto fields = detail::split_commas(view);
    if (!header_seen) {
      header_seen = true;
      if (fields.size() != 3 || fields[0] != "name" || fields[1] != "nodes" || fields[2] != "links") {
        inv.errors.push_back({row, "expected header 'name,nodes,links'"});
      }
      continue;
    }
    if (fields.size() != 3) {
      inv.errors.push_back({row, "expected 3 fields, got " + std::to_string(fields.size())});
      continue;
    }
    InventoryRow r;
    r.row = row;
    r.name = std::string(fields[0]);
    if (!detail::parse_u64(fields[1], r.nodes)) {
      inv.errors.push_back({row, "nodes is not a non-negative integer: '" + std::string(fields[1]) + "'"});
      continue;
    }
    if (!detail::parse_u64(fields[2], r.links)) {
      inv.errors.push_back({row, "links is not a non-negative integer: '" + std::string(fields[2]) + "'"});
      continue;
    }
    try {
      (void)state_count(r.nodes);
    } catch (const ValidationError& e) {
      inv.errors.push_back({row, e.what()});
      continue;
    }
    inv.rows.push_back(std::move(r));
  }
  return inv;
}

inline Inventory read_inventory(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open inventory file '" + path.string() + "'");
  }
  auto inv = parse_inventory(in);
  if (in.bad()) {
    throw IoError("error while reading '" + path.string() + "'");
  }
  return inv;
}

inline void write_trajectory_csv(std::ostream& out, const Trajectory& t) {
  out << "step_index,links_left\n";
  for (std::size_t i = 0; i < t.samples.size(); ++i) {
    out << t.step_index(i) << ',' << t.samples[i] << '\n';
  }
}

/// Writes to a sibling temp file and renames it over `path`, so readers never
/// see a partial file.
inline void write_trajectory_csv(const std::filesystem::path& path, const Trajectory& t) {
  auto tmp = path;
  tmp += ".partial";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw IoError("cannot open '" + tmp.string() + "' for writing");
    }
    write_trajectory_csv(out, t);
    out.flush();
    if (!out) {
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw IoError("failed writing '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot move trajectory into place at '" + path.string() + "'");
  }
}

} // namespace netthermo
