#pragma once

#include <cstdint>
#include <string>

#include "netthermo/errors.hpp"

namespace netthermo {

// Largest node count whose state count N(N-1) still fits in 64 bits.
inline constexpr std::uint64_t max_nodes = std::uint64_t{1} << 32;

/// Number of states K = N(N-1): ordered pairs of distinct nodes.
inline std::uint64_t state_count(std::uint64_t nodes) {
  if (nodes < 2) {
    throw ValidationError("a network needs nodes >= 2 (got " + std::to_string(nodes) +
                          "); N = 1 leaves no states to occupy");
  }
  if (nodes > max_nodes) {
    throw ValidationError("nodes = " + std::to_string(nodes) + " overflows the 64-bit state count");
  }
  return nodes * (nodes - 1);
}

/// A communication network reduced to its two extensive quantities: the node
/// count N and the number of link-quanta R. Everything else is derived.
class Network {
public:
  Network(std::uint64_t nodes, std::uint64_t links) : nodes_(nodes), links_(links), states_(state_count(nodes)) {}

  [[nodiscard]] std::uint64_t nodes() const noexcept { return nodes_; }
  [[nodiscard]] std::uint64_t links() const noexcept { return links_; }
  [[nodiscard]] std::uint64_t states() const noexcept { return states_; }

  friend bool operator==(const Network&, const Network&) = default;

private:
  std::uint64_t nodes_;
  std::uint64_t links_;
  std::uint64_t states_;
};

} // namespace netthermo
