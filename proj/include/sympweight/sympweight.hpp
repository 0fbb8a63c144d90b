#pragma once

#include "bigint.hpp"
#include "combinatorics.hpp"
#include "decomposition.hpp"
#include "liealg.hpp"
#include "multiplicity.hpp"
#include "oracles.hpp"
#include "weights.hpp"
