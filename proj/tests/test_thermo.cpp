#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <thread>
#include <vector>

#include "netthermo/thermo.hpp"

using namespace netthermo;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

// Counts multisets of size `links` over `states` kinds by direct recursion:
// choose how many quanta go to the first state, recurse on the rest.
std::uint64_t count_multisets(std::uint64_t links, std::uint64_t states) {
  if (states == 1) {
    return 1;
  }
  std::uint64_t total = 0;
  for (std::uint64_t first = 0; first <= links; ++first) {
    total += count_multisets(links - first, states - 1);
  }
  return total;
}

} // namespace

TEST_CASE("state_count", "[thermo]") {
  CHECK(state_count(50) == 2450);
  CHECK(state_count(100) == 9900);
  CHECK(state_count(2) == 2);
  CHECK(state_count(1000000000) == 999999999000000000ULL);
  CHECK_THROWS_AS(state_count(1), ValidationError);
  CHECK_THROWS_AS(state_count(0), ValidationError);
  CHECK_THROWS_AS(state_count(max_nodes + 1), ValidationError);
  CHECK_THROWS_AS(Network(1, 5), ValidationError);
}

TEST_CASE("occupation", "[thermo]") {
  CHECK(occupation(Network(50, 122500)) == 50.0);
  CHECK(occupation(Network(50, 0)) == 0.0);
  CHECK_THAT(occupation(Network(100, 367500)), WithinRel(367500.0 / 9900.0, 1e-15));
  CHECK_THAT(occupation(Network(100, 367500)), WithinAbs(37.1212121212, 1e-9));
}

TEST_CASE("log_microstates against enumeration", "[thermo]") {
  CHECK_THAT(log_microstates(2, 2), WithinAbs(std::log(3.0), 1e-15));
  CHECK(log_microstates(0, 5) == 0.0);
  CHECK_THAT(log_microstates(1, 7), WithinAbs(std::log(7.0), 1e-15));
  CHECK_THROWS_AS(log_microstates(3, 0), ValidationError);

  for (std::uint64_t k = 1; k <= 7; ++k) {
    for (std::uint64_t r = 0; r <= 9; ++r) {
      const double expected = std::log(static_cast<double>(count_multisets(r, k)));
      CHECK_THAT(log_microstates(r, k), WithinAbs(expected, 1e-12));
    }
  }
}

TEST_CASE("log_microstates large arguments", "[thermo]") {
  // mpmath, 40 digits: ln C(124949, 2449)
  CHECK_THAT(log_microstates(122500, 2450), WithinRel(12050.05182542561876913507, 1e-12));
  // Symmetry C(R+K-1, R) = C(R+K-1, K-1): W(R, K) = W(K-1, R+1).
  CHECK_THAT(log_microstates(700, 300), WithinRel(log_microstates(299, 701), 1e-13));
  // Crossing the direct-sum / log-gamma switch keeps the increments exact.
  for (std::uint64_t r = 250; r < 262; ++r) {
    CHECK_THAT(log_microstates(r + 1, 400) - log_microstates(r, 400), WithinAbs(add_link_delta_exact(r, 400), 1e-10));
  }
}

TEST_CASE("entropy_planck", "[thermo]") {
  // mpmath: 12058.79464395661...
  CHECK_THAT(entropy_planck(122500, 2450), WithinAbs(12058.8, 0.1));
  CHECK_THAT(entropy_planck(122500, 2450), WithinRel(12058.79464395661298, 1e-12));
  CHECK(entropy_planck(0, 100) == 0.0);
  CHECK_THAT(entropy_planck(2, 2), WithinAbs(4.0 * std::numbers::ln2, 1e-14));
  CHECK_THROWS_AS(entropy_planck(1, 0), ValidationError);
}

TEST_CASE("entropy_large", "[thermo]") {
  CHECK_THAT(entropy_large(50.0, 2450.0), WithinAbs(12082.97280017459814, 1e-8));
  CHECK_THAT(entropy_large(37.0, 9900.0), WithinAbs(9900.0 * (1.0 + std::log(38.0)), 1e-8));
  CHECK_THAT(entropy_large(37.0, 9900.0), WithinAbs(45912.1, 0.05));
  CHECK_THAT(entropy_large(std::numbers::e - 1.0, 1000.0), WithinAbs(2000.0, 1e-10));
  CHECK_THROWS_AS(entropy_large(1.0, 0.5), ValidationError);
  CHECK_THROWS_AS(entropy_large(-1.0, 10.0), ValidationError);
  CHECK_THAT(entropy_large_crude(std::numbers::e - 1.0, 1000.0), WithinAbs(1000.0, 1e-10));
}

TEST_CASE("add_link_delta_exact", "[thermo]") {
  CHECK_THAT(add_link_delta_exact(0, 5), WithinAbs(std::log(5.0), 1e-15));
  CHECK_THAT(add_link_delta_exact(2, 2), WithinAbs(std::log(4.0 / 3.0), 1e-15));
  CHECK_THAT(add_link_delta_exact(122500, 2450), WithinAbs(0.01979446406419285947, 1e-15));
  CHECK(add_link_delta_exact(10, 1) == 0.0);
  CHECK_THROWS_AS(add_link_delta_exact(1, 0), ValidationError);
}

TEST_CASE("add_link_delta_large", "[thermo]") {
  CHECK_THAT(add_link_delta_large(1.0), WithinAbs(std::numbers::ln2, 1e-15));
  CHECK_THAT(add_link_delta_large(50.0), WithinAbs(0.01980262729617971302, 1e-15));
  CHECK_THAT(add_link_delta_large(1000.0), WithinAbs(0.00099950033308353316, 1e-16));
  CHECK_THROWS_AS(add_link_delta_large(0.0), ValidationError);
  CHECK_THROWS_AS(add_link_delta_large(-2.0), ValidationError);
}

TEST_CASE("add_node_delta", "[thermo]") {
  // W(2, 6) = 21 and W(2, 2) = 3 by enumeration.
  CHECK(count_multisets(2, 6) == 21);
  CHECK_THAT(add_node_delta(Network(2, 2)), WithinAbs(std::log(7.0), 1e-14));
  CHECK(add_node_delta(Network(5, 0)) == 0.0);

  // mpmath: ln W(122500, 2550) - ln W(122500, 2450) = 391.22856934358593...
  const double exact = add_node_delta(Network(50, 122500));
  CHECK_THAT(exact, WithinAbs(391.2285693435859, 1e-7));
  // 2N ln(1 + n') with n' = 122500/2550 is 389.26; the exact gain sits ~2 above it.
  const double approx = 100.0 * std::log1p(122500.0 / 2550.0);
  CHECK_THAT(exact, WithinAbs(approx, 2.5));
}

TEST_CASE("temperature", "[thermo]") {
  CHECK_THAT(temperature_exact(50.0), WithinAbs(50.49834979184394, 1e-10));
  CHECK_THAT(temperature_exact(1.0), WithinAbs(1.0 / std::numbers::ln2, 1e-14));
  CHECK(temperature_exact(1e-9) < 0.05);
  CHECK(temperature_exact(1e-9) > 0.0);
  CHECK_THROWS_AS(temperature_exact(0.0), ValidationError);

  CHECK(temperature_classical(50.0) == 50.0);
  CHECK(temperature_classical(100.0) == 100.0);
  CHECK(temperature_classical(0.0) == 0.0);
  CHECK_THROWS_AS(temperature_classical(-1.0), ValidationError);
}

TEST_CASE("pressure", "[thermo]") {
  CHECK(pressure(Network(50, 122500)) == 50.0);
  CHECK_THAT(pressure(Network(100, 367500)), WithinAbs(37.12121212121212, 1e-12));
  CHECK(pressure(Network(10, 0)) == 0.0);
}

TEST_CASE("report", "[thermo]") {
  const auto r = report(Network(50, 122500));
  CHECK(r.states == 2450);
  CHECK(r.occupation == 50.0);
  CHECK(r.pressure == 50.0);
  CHECK(r.temperature_classical == 50.0);
  REQUIRE(r.temperature_exact.has_value());
  CHECK_THAT(*r.temperature_exact, WithinAbs(50.49834979184394, 1e-10));

  const auto empty = report(Network(2, 0));
  CHECK(empty.log_microstates == 0.0);
  CHECK(empty.entropy_planck == 0.0);
  CHECK(empty.entropy_large == 0.0);
  CHECK_FALSE(empty.temperature_exact.has_value());

  // mpmath: 45812.632168832404...
  CHECK_THAT(report(Network(100, 367500)).entropy_planck, WithinAbs(45813.0, 1.0));
}

TEST_CASE("property: exact delta identity", "[thermo][property]") {
  for (std::uint64_t k = 1; k <= 500; ++k) {
    for (std::uint64_t r = 0; r <= 500; ++r) {
      const double lhs = add_link_delta_exact(r, k);
      const double rhs = log_microstates(r + 1, k) - log_microstates(r, k);
      if (std::abs(lhs - rhs) >= 1e-10) {
        FAIL("delta identity broken at R=" << r << " K=" << k << ": " << lhs << " vs " << rhs);
      }
    }
  }
  SUCCEED();
}

TEST_CASE("property: delta approximation bound", "[thermo][property]") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint64_t> pick_r(1, 1000000), pick_k(1, 100000);
  for (int i = 0; i < 5000; ++i) {
    const auto r = pick_r(rng);
    const auto k = pick_k(rng);
    const double gap = std::abs(add_link_delta_exact(r, k) - add_link_delta_large(static_cast<double>(r) / k));
    REQUIRE(gap <= 1.0 / static_cast<double>(r));
    REQUIRE_THAT(gap, WithinAbs(std::log1p(1.0 / static_cast<double>(r)), 1e-12));
  }
}

TEST_CASE("property: temperature from the Planck derivative", "[thermo][property]") {
  for (std::uint64_t k : {100u, 1000u, 5000u}) {
    for (std::uint64_t n : {1u, 3u, 10u, 100u}) {
      const std::uint64_t r = n * k;
      const double slope = (entropy_planck(r + 1, k) - entropy_planck(r - 1, k)) / 2.0;
      const double inv_t = 1.0 / temperature_exact(static_cast<double>(n));
      CHECK_THAT(slope, WithinAbs(inv_t, 10.0 / static_cast<double>(k)));
    }
  }
}

TEST_CASE("property: Stirling consistency", "[thermo][property]") {
  // Relative gap ~ ln(2 pi K n(n+1)) / (2 S); below 1e-3 from K ~ 3700 up at n = 1.
  for (std::uint64_t k : {5000u, 8000u, 20000u}) {
    for (std::uint64_t mult : {1u, 2u, 10u, 100u}) {
      const std::uint64_t r = k * mult;
      const double exact = log_microstates(r, k);
      CHECK(std::abs(entropy_planck(r, k) - exact) / exact < 1e-3);
    }
  }
  // At K = 1000, n = 1 the gap is 3.4e-3 (mpmath), above the 1e-3 band.
  const double exact = log_microstates(1000, 1000);
  CHECK_THAT((entropy_planck(1000, 1000) - exact) / exact, WithinAbs(0.003416039873, 1e-9));
}

TEST_CASE("property: monotonicity", "[thermo][property]") {
  for (std::uint64_t k = 2; k <= 60; ++k) {
    for (std::uint64_t r = 0; r < 300; ++r) {
      REQUIRE(log_microstates(r + 1, k) > log_microstates(r, k));
      REQUIRE(entropy_planck(r + 1, k) > entropy_planck(r, k));
    }
  }
  for (std::uint64_t r = 1; r <= 60; ++r) {
    for (std::uint64_t k = 1; k < 300; ++k) {
      REQUIRE(log_microstates(r, k + 1) > log_microstates(r, k));
      REQUIRE(entropy_planck(r, k + 1) > entropy_planck(r, k));
    }
  }
}

TEST_CASE("property: gas law PV = R", "[thermo][property]") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::uint64_t> pick_n(2, 1000000), pick_r(0, std::uint64_t{1} << 50);
  for (int i = 0; i < 10000; ++i) {
    const Network net(pick_n(rng), pick_r(rng));
    const double pv = pressure(net) * static_cast<double>(net.states());
    const auto r = static_cast<double>(net.links());
    REQUIRE(std::abs(pv - r) <= 1e-12 * std::max(r, 1.0));
  }
}

TEST_CASE("property: exact temperature exceeds classical", "[thermo][property]") {
  for (double n = 1e-6; n < 1e6; n *= 1.7) {
    REQUIRE(temperature_exact(n) > temperature_classical(n));
  }
  CHECK(temperature_exact(1e4) / temperature_classical(1e4) < 1.0001);
}

TEST_CASE("concurrent evaluation is consistent", "[thermo]") {
  std::vector<double> results(8);
  std::vector<std::thread> workers;
  for (std::size_t t = 0; t < results.size(); ++t) {
    workers.emplace_back([&results, t] {
      double acc = 0.0;
      for (std::uint64_t r = 0; r < 2000; ++r) {
        acc += log_microstates(r * 37, 300 + r) + entropy_planck(r, 1000);
      }
      results[t] = acc;
    });
  }
  for (auto& w : workers) {
    w.join();
  }
  for (double v : results) {
    CHECK(v == results.front());
  }
}
