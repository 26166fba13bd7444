#pragma once

#include "cylschur/diagram.hpp"

namespace cylschur {

// Every diagram with minBoxes <= |D| <= maxBoxes on a cylinder with
// x + y <= maxXY, one representative per canonical_key. Translation is
// normalized away (inner(1) = 0); rotations collapse via the key.
std::vector<CylindricDiagram> all_diagrams(int maxBoxes, int maxXY, int minBoxes = 1);

}
