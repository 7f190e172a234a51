#pragma once

#include <vector>

#include "heartlab/catalog.hpp"

namespace heartlab {

enum class Side { left, right };

struct Approximation {
  Side side = Side::right;
  Morphism map;                     // right: X -> B, left: B -> X
  std::vector<int> summands;        // X is the sum of these entries, in order
  std::vector<Morphism> components; // restrictions to (right) or projections onto (left) summands
  bool minimal = false;
  const Representation& object() const { return side == Side::right ? map.source() : map.target(); }
};

// Universal evaluation map built from hom bases, then minimalized on request.
Approximation approximation(const IndecCatalog& catalog, const Subcategory& c, const Representation& b, Side side,
                            bool minimalize = true);
// Drops summands whose component factors through the remaining ones.
Approximation minimalize(const IndecCatalog& catalog, Approximation a);
// Rebuilds the assembled map from the components.
void assemble(const IndecCatalog& catalog, Approximation& a, const Representation& b);

// Span (flattened columns, independent) of the maps x -> y factoring through add C.
Matrix ideal_subspace(const IndecCatalog& catalog, const Subcategory& c, const Representation& x,
                      const Representation& y);
bool factors_through(const IndecCatalog& catalog, const Subcategory& c, const Morphism& f);

}  // namespace heartlab
