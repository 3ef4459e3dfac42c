#pragma once

// Umbrella header for the numerical core (no CLI or JSON dependencies).

#include "netthermo/errors.hpp"
#include "netthermo/exchange_sim.hpp"
#include "netthermo/merge.hpp"
#include "netthermo/network.hpp"
#include "netthermo/oracle.hpp"
#include "netthermo/thermo.hpp"
#include "netthermo/transfer.hpp"
