#pragma once

// Umbrella header for the core library.

#include "roth/bitset.hpp"
#include "roth/configurations.hpp"
#include "roth/error.hpp"
#include "roth/experiment.hpp"
#include "roth/extremal.hpp"
#include "roth/group.hpp"
#include "roth/harmadik.hpp"
#include "roth/hypergraph.hpp"
#include "roth/named_groups.hpp"
#include "roth/random.hpp"
#include "roth/serialize.hpp"
#include "roth/sets.hpp"
#include "roth/subgroup.hpp"
#include "roth/tripartite.hpp"
