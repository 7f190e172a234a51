#include "heartlab/homology.hpp"

#include "heartlab/error.hpp"

namespace heartlab {

namespace {

Matrix flats(const std::vector<Morphism>& maps, std::size_t rows) {
  Matrix out(rows, maps.size());
  for (std::size_t k = 0; k < maps.size(); ++k) out.set_block(0, k, maps[k].flatten());
  return out;
}

}  // namespace

Morphism ExtSpace::representative(const std::vector<Rational>& coords) const {
  if (coords.size() != classes.size())
    throw Error(ErrorCode::BadClass, "class vector has length " + std::to_string(coords.size()) + ", expected " +
                                         std::to_string(classes.size()));
  Morphism phi = Morphism::zero(syzygy.module, target);
  for (std::size_t k = 0; k < coords.size(); ++k)
    if (sgn(coords[k]) != 0) phi = phi + coords[k] * classes[k];
  return phi;
}

ExtSpace ext1(const Representation& m, const Representation& n) {
  ExtSpace out{m, n, syzygy(m), {}, {}};
  out.hom = hom_basis(out.syzygy.module, n);
  if (out.hom.empty()) return out;
  std::vector<Morphism> restricted;
  for (auto& h : hom_basis(out.syzygy.inclusion.target(), n)) restricted.push_back(h * out.syzygy.inclusion);
  const std::size_t rows = flat_size(out.syzygy.module, n);
  Matrix r = flats(restricted, rows);
  Matrix both = Matrix::hstack({r, flats(out.hom, rows)}, rows);
  for (auto c : independent_columns(both))
    if (c >= r.cols()) out.classes.push_back(out.hom[c - r.cols()]);
  return out;
}

std::size_t ext1_dim(const Representation& m, const Representation& n) {
  Syzygy s = syzygy(m);
  std::size_t total = hom_dim(s.module, n);
  if (total == 0) return 0;
  std::vector<Morphism> restricted;
  for (auto& h : hom_basis(s.inclusion.target(), n)) restricted.push_back(h * s.inclusion);
  return total - rank(flats(restricted, flat_size(s.module, n)));
}

std::size_t ext1_dim_via_injectives(const Representation& m, const Representation& n) {
  Cosyzygy c = cosyzygy(n);
  std::size_t total = hom_dim(m, c.module);
  if (total == 0) return 0;
  std::vector<Morphism> pushed;
  for (auto& h : hom_basis(m, c.projection.source())) pushed.push_back(c.projection * h);
  return total - rank(flats(pushed, flat_size(m, c.module)));
}

std::size_t ext_dim(const Representation& m, const Representation& n, int i) {
  if (i < 1) throw Error(ErrorCode::BadInput, "Ext degree must be positive");
  Representation x = m;
  for (int k = 1; k < i; ++k) {
    if (x.is_zero()) return 0;
    x = syzygy(x).module;
  }
  return ext1_dim(x, n);
}

ShortExactSequence realize_extension(const ExtSpace& ext, const std::vector<Rational>& class_vector) {
  Morphism phi = ext.representative(class_vector);
  const Morphism& iota = ext.syzygy.inclusion;  // Omega M -> P0
  // E -> M is induced by (cover, 0) on P0 + N.
  DirectSum pn = direct_sum(ext.source.algebra_ptr(), {iota.target(), ext.target});
  Morphism c = cokernel(to_components(iota.source(), pn, {iota, -phi}));
  Morphism down = from_components(pn, ext.source, {ext.syzygy.cover.map, Morphism::zero(ext.target, ext.source)});
  Morphism deflation = descend_through_epi(c, down);
  Morphism inflation = c * pn.injections[1];
  return ShortExactSequence{inflation, deflation};
}

}  // namespace heartlab
