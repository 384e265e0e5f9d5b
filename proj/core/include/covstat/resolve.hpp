#pragma once

#include "covstat/tiled.hpp"

#include <optional>
#include <string>
#include <vector>

namespace covstat::resolve {

struct Element {
  tiled::Morphism map;          // Y -> codomain
  tiled::TiledSurface codomain; // W_f
};

struct Resolution {
  std::vector<Element> elements;
  std::string kind;  // "image" or "growing"
  int chi0 = 0;
};

// All quotients of Y; every morphism into a boundaryless surface factors
// uniquely as its image quotient followed by an embedding.
Resolution image_resolution(const tiled::TiledSurface& Y);

// Branching growing process with Euler-characteristic cutoff chi0: emit when
// strongly boundary reduced, or boundary reduced with chi < chi0.
Resolution growing_resolution(const tiled::TiledSurface& Y, int chi0);

// Octagon budget for the growing process, from the step-count bound.
long growing_budget(const tiled::TiledSurface& Y, int chi0);

struct FactorizationFailure {
  size_t cover_index;
  tiled::Morphism morphism;
  int count;  // factorizations found (should be 1)
};

// Checks unique factorization of every morphism Y -> X through R, over the
// given boundaryless covers.
std::optional<FactorizationFailure> verify_resolution(const tiled::TiledSurface& Y,
                                                      const Resolution& R,
                                                      const std::vector<tiled::TiledSurface>& covers);

}  // namespace covstat::resolve
