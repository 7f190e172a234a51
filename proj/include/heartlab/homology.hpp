#pragma once

#include <vector>

#include "heartlab/representation.hpp"

namespace heartlab {

// Ext^1(M, N) presented as Hom(Omega M, N) modulo maps extending over the
// projective cover of M.
struct ExtSpace {
  Representation source;  // M
  Representation target;  // N
  Syzygy syzygy;          // Omega M -> P0 -> M
  std::vector<Morphism> hom;      // basis of Hom(Omega M, N)
  std::vector<Morphism> classes;  // basis of a complement to the restricted maps
  std::size_t dimension() const { return classes.size(); }
  // Morphism Omega M -> N representing the class with these coordinates.
  Morphism representative(const std::vector<Rational>& coords) const;
};

ExtSpace ext1(const Representation& m, const Representation& n);
std::size_t ext1_dim(const Representation& m, const Representation& n);
// Same number through an injective coresolution of N.
std::size_t ext1_dim_via_injectives(const Representation& m, const Representation& n);
// Ext^i(M, N) = Ext^1(Omega^{i-1} M, N), i >= 1.
std::size_t ext_dim(const Representation& m, const Representation& n, int i);

// N -> E -> M for a class of Ext^1(M, N). Throws BadClass on a wrong-length vector.
ShortExactSequence realize_extension(const ExtSpace& ext, const std::vector<Rational>& class_vector);

}  // namespace heartlab
