#include "heartlab/approximation.hpp"

namespace heartlab {

namespace {

Matrix columns_of(const std::vector<Morphism>& maps, std::size_t rows) {
  Matrix out(rows, maps.size());
  for (std::size_t k = 0; k < maps.size(); ++k) out.set_block(0, k, maps[k].flatten());
  return out;
}

bool in_column_span(const Matrix& cols, const Matrix& v) {
  if (v.is_zero()) return true;
  if (cols.cols() == 0) return false;
  return solve(cols, v).has_value();
}

}  // namespace

void assemble(const IndecCatalog& catalog, Approximation& a, const Representation& b) {
  DirectSum x = catalog.realize(a.summands);
  a.map = a.side == Side::right ? from_components(x, b, a.components) : to_components(b, x, a.components);
}

Approximation approximation(const IndecCatalog& catalog, const Subcategory& c, const Representation& b, Side side,
                            bool minimal) {
  Approximation a;
  a.side = side;
  for (int id : c.ids()) {
    auto basis = side == Side::right ? hom_basis(catalog.module(id), b) : hom_basis(b, catalog.module(id));
    for (auto& f : basis) {
      a.summands.push_back(id);
      a.components.push_back(std::move(f));
    }
  }
  assemble(catalog, a, b);
  return minimal ? minimalize(catalog, std::move(a)) : a;
}

Approximation minimalize(const IndecCatalog& catalog, Approximation a) {
  const Representation b = a.side == Side::right ? a.map.target() : a.map.source();
  const std::size_t n = a.summands.size();
  std::vector<bool> kept(n, true);
  for (std::size_t jj = n; jj-- > 0;) {
    const int j_id = a.summands[jj];
    std::vector<Morphism> candidates;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == jj || !kept[i]) continue;
      if (a.side == Side::right) {
        for (auto& h : catalog.hom(j_id, a.summands[i])) candidates.push_back(a.components[i] * h);
      } else {
        for (auto& h : catalog.hom(a.summands[i], j_id)) candidates.push_back(h * a.components[i]);
      }
    }
    Matrix target = a.components[jj].flatten();
    if (in_column_span(columns_of(candidates, target.rows()), target)) kept[jj] = false;
  }
  Approximation out;
  out.side = a.side;
  out.minimal = true;
  for (std::size_t i = 0; i < n; ++i)
    if (kept[i]) {
      out.summands.push_back(a.summands[i]);
      out.components.push_back(a.components[i]);
    }
  assemble(catalog, out, b);
  return out;
}

Matrix ideal_subspace(const IndecCatalog& catalog, const Subcategory& c, const Representation& x,
                      const Representation& y) {
  std::vector<Morphism> composites;
  for (int id : c.ids()) {
    auto in = hom_basis(x, catalog.module(id));
    if (in.empty()) continue;
    auto out = hom_basis(catalog.module(id), y);
    for (auto& g : out)
      for (auto& f : in) composites.push_back(g * f);
  }
  Matrix cols = columns_of(composites, flat_size(x, y));
  return cols.select_columns(independent_columns(cols));
}

bool factors_through(const IndecCatalog& catalog, const Subcategory& c, const Morphism& f) {
  return in_column_span(ideal_subspace(catalog, c, f.source(), f.target()), f.flatten());
}

}  // namespace heartlab
