#pragma once

#include "covstat/tiled.hpp"
#include "covstat/words.hpp"

#include <optional>
#include <string>

namespace covstat::core_surface {

struct CoreResult {
  tiled::TiledSurface surface;
  int basepoint = 0;
};

// Core surface of the cyclic subgroup generated by w: lay down the Dehn-
// reduced cycle and close up under octagon annexation along half-blocks,
// half-chains and long blocks until strongly boundary reduced.
CoreResult core_cyclic(const words::Word& w);

// Necessary conditions used downstream: connected, valid, strongly boundary
// reduced.  Nullopt when all pass, otherwise the first failed check.
std::optional<std::string> verify_core(const tiled::TiledSurface& Y);

inline int euler_char(const tiled::TiledSurface& Y) { return Y.euler_characteristic(); }

// Annex one octagon whose relator path starts at `start` with relator
// position `rel_pos`; follows existing edges from both ends and fills the
// middle with fresh cells.  Exposed for the resolution growing process.
void annex_octagon(tiled::TiledSurface& Y, int start, int rel_pos);

}  // namespace covstat::core_surface
