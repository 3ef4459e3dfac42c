#pragma once

// Carnot bookkeeping for moving Q link-quanta from a hot network to a cold one.
// Q leaves the hot net, Q - W arrives in the cold net and W is withheld as
// profit. Both networks are treated as baths: occupations do not move.

#include <cmath>
#include <string>

#include "netthermo/errors.hpp"
#include "netthermo/network.hpp"
#include "netthermo/thermo.hpp"

namespace netthermo {

namespace detail {

inline void require_transfer_inputs(double quanta, double n_hot, double n_cold, const char* op) {
  if (!(quanta > 0.0) || !std::isfinite(quanta)) {
    throw ValidationError(std::string(op) + ": quanta moved must be positive");
  }
  if (!(n_hot > 0.0) || !(n_cold > 0.0) || !std::isfinite(n_hot) || !std::isfinite(n_cold)) {
    throw ValidationError(std::string(op) + ": occupations must be positive (n = 0 has no temperature)");
  }
}

} // namespace detail

/// Largest W for which the transfer does not decrease total entropy:
/// Q(1 - ds_hot/ds_cold) = Q(1 - T_cold/T_hot). Negative when n_hot < n_cold,
/// meaning work has to be supplied instead.
inline double max_profit_exact(double quanta, double n_hot, double n_cold) {
  detail::require_transfer_inputs(quanta, n_hot, n_cold, "max_profit_exact");
  return quanta * (1.0 - add_link_delta_large(n_hot) / add_link_delta_large(n_cold));
}

/// Classical (n >> 1) bound Q(1 - n_cold/n_hot).
inline double max_profit_classical(double quanta, double n_hot, double n_cold) {
  detail::require_transfer_inputs(quanta, n_hot, n_cold, "max_profit_classical");
  return quanta * (1.0 - n_cold / n_hot);
}

/// Total entropy change -Q ds_hot + (Q - W) ds_cold. W may be negative (work
/// supplied) but cannot exceed Q.
inline double transfer_entropy_change(double quanta, double profit, double n_hot, double n_cold) {
  detail::require_transfer_inputs(quanta, n_hot, n_cold, "transfer_entropy_change");
  if (!(profit <= quanta)) {
    throw ValidationError("transfer_entropy_change: profit W cannot exceed the quanta moved Q");
  }
  return -quanta * add_link_delta_large(n_hot) + (quanta - profit) * add_link_delta_large(n_cold);
}

enum class Orientation {
  as_given, // first argument is the hot network
  swapped,  // second argument was hotter and is used as the hot side
};

struct TransferQuote {
  double quanta_moved = 0.0;
  double hot_occupation = 0.0;
  double cold_occupation = 0.0;
  double per_link_entropy_hot = 0.0;
  double per_link_entropy_cold = 0.0;
  double max_profit_exact = 0.0;
  double max_profit_classical = 0.0;
  double entropy_change_at_zero_profit = 0.0;
  Orientation orientation = Orientation::as_given;
};

/// Quote for explicit occupations. No reordering: n_hot < n_cold yields
/// negative profits.
inline TransferQuote quote(double quanta, double n_hot, double n_cold) {
  detail::require_transfer_inputs(quanta, n_hot, n_cold, "quote");
  TransferQuote q;
  q.quanta_moved = quanta;
  q.hot_occupation = n_hot;
  q.cold_occupation = n_cold;
  q.per_link_entropy_hot = add_link_delta_large(n_hot);
  q.per_link_entropy_cold = add_link_delta_large(n_cold);
  q.max_profit_exact = max_profit_exact(quanta, n_hot, n_cold);
  q.max_profit_classical = max_profit_classical(quanta, n_hot, n_cold);
  q.entropy_change_at_zero_profit = transfer_entropy_change(quanta, 0.0, n_hot, n_cold);
  return q;
}

/// Quote between two networks; the one with the larger occupation is taken as hot.
inline TransferQuote quote(double quanta, const Network& a, const Network& b) {
  if (a.links() == 0 || b.links() == 0) {
    throw ValidationError("quote: both networks need links >= 1 (occupation 0 has no temperature)");
  }
  const double na = occupation(a);
  const double nb = occupation(b);
  if (nb > na) {
    auto q = quote(quanta, nb, na);
    q.orientation = Orientation::swapped;
    return q;
  }
  return quote(quanta, na, nb);
}

inline const char* to_string(Orientation o) noexcept {
  return o == Orientation::as_given ? "as_given" : "swapped";
}

} // namespace netthermo
