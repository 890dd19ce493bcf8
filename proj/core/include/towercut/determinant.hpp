#pragma once

#include <vector>

#include "towercut/numeric.hpp"

namespace towercut {

// Exact determinant by Bareiss fraction-free elimination (row pivoting only).
Int bareiss_determinant(std::vector<std::vector<Int>> m);

}  // namespace towercut
