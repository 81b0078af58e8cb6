#pragma once

// Umbrella header for the library.  The network loader (oeis_net.hpp) is
// intentionally separate; include it directly where fetching is wanted.

#include "dyckodd/automaton.hpp"
#include "dyckodd/kernel.hpp"
#include "dyckodd/numeric.hpp"
#include "dyckodd/oeis.hpp"
#include "dyckodd/oracle.hpp"
#include "dyckodd/series.hpp"
#include "dyckodd/states.hpp"
