#pragma once

#include "towercut/numeric.hpp"

namespace towercut {

// Miller-Rabin primality: deterministic witness set below 3.317e24,
// 64 fixed-seed pseudo-random rounds above. Same input, same answer.
bool is_prime(const Int& n);

}  // namespace towercut
