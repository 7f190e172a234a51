#include "heartlab/representation.hpp"

#include <numeric>
#include <sstream>

#include "heartlab/error.hpp"

namespace heartlab {

Representation::Representation(AlgebraPtr algebra, std::vector<int> dims, std::vector<Matrix> arrow_maps) {
  const Algebra& alg = *algebra;
  if (static_cast<int>(dims.size()) != alg.vertex_count())
    throw Error(ErrorCode::BadInput, "dimension vector has the wrong length");
  if (static_cast<int>(arrow_maps.size()) != alg.arrow_count())
    throw Error(ErrorCode::BadInput, "wrong number of arrow maps");
  for (int d : dims)
    if (d < 0) throw Error(ErrorCode::BadInput, "negative dimension");
  for (int a = 0; a < alg.arrow_count(); ++a) {
    auto& m = arrow_maps[a];
    if (static_cast<int>(m.rows()) != dims[alg.arrow(a).target] ||
        static_cast<int>(m.cols()) != dims[alg.arrow(a).source])
      throw Error(ErrorCode::BadInput, "arrow map for " + alg.arrow(a).name + " has the wrong shape");
  }
  auto data = std::make_shared<Data>();
  data->algebra = std::move(algebra);
  data->dims = std::move(dims);
  data->maps = std::move(arrow_maps);
  data_ = data;
  for (auto& rel : alg.relations())
    if (!path_map(rel, alg.arrow(rel.front()).source).is_zero())
      throw Error(ErrorCode::BadInput, "representation violates a relation");
}

Representation Representation::zero(AlgebraPtr algebra) {
  std::vector<Matrix> maps(algebra->arrow_count());
  return Representation(algebra, std::vector<int>(algebra->vertex_count(), 0), std::move(maps));
}

int Representation::total_dim() const {
  if (!data_) return 0;
  return std::accumulate(data_->dims.begin(), data_->dims.end(), 0);
}

Matrix Representation::path_map(const std::vector<int>& arrows, int start) const {
  Matrix m = Matrix::identity(dim(start));
  for (int a : arrows) m = arrow_map(a) * m;
  return m;
}

std::string Representation::key() const {
  std::ostringstream os;
  for (int d : dims()) os << d << ',';
  for (auto& m : data_->maps) {
    os << '|';
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) os << m(i, j).get_str() << ',';
  }
  return os.str();
}

bool operator==(const Representation& a, const Representation& b) {
  if (!a.algebra().same_as(b.algebra()) || a.dims() != b.dims()) return false;
  for (int x = 0; x < a.algebra().arrow_count(); ++x)
    if (!(a.arrow_map(x) == b.arrow_map(x))) return false;
  return true;
}

std::size_t flat_size(const Representation& source, const Representation& target) {
  std::size_t n = 0;
  for (int v = 0; v < source.algebra().vertex_count(); ++v)
    n += static_cast<std::size_t>(source.dim(v)) * static_cast<std::size_t>(target.dim(v));
  return n;
}

Morphism::Morphism(Representation source, Representation target, std::vector<Matrix> maps, Unchecked)
    : source_(std::move(source)), target_(std::move(target)), maps_(std::move(maps)) {}

Morphism::Morphism(Representation source, Representation target, std::vector<Matrix> maps)
    : source_(std::move(source)), target_(std::move(target)), maps_(std::move(maps)) {
  const Algebra& alg = source_.algebra();
  if (!alg.same_as(target_.algebra())) throw Error(ErrorCode::BadInput, "morphism between different algebras");
  if (static_cast<int>(maps_.size()) != alg.vertex_count()) throw Error(ErrorCode::BadInput, "wrong number of vertex maps");
  for (int v = 0; v < alg.vertex_count(); ++v)
    if (static_cast<int>(maps_[v].rows()) != target_.dim(v) || static_cast<int>(maps_[v].cols()) != source_.dim(v))
      throw Error(ErrorCode::BadInput, "vertex map has the wrong shape");
  for (int a = 0; a < alg.arrow_count(); ++a) {
    int s = alg.arrow(a).source, t = alg.arrow(a).target;
    if (!(target_.arrow_map(a) * maps_[s] == maps_[t] * source_.arrow_map(a)))
      throw Error(ErrorCode::BadInput, "square at arrow " + alg.arrow(a).name + " does not commute");
  }
}

Morphism Morphism::zero(const Representation& source, const Representation& target) {
  std::vector<Matrix> maps;
  for (int v = 0; v < source.algebra().vertex_count(); ++v) maps.emplace_back(target.dim(v), source.dim(v));
  return Morphism(source, target, std::move(maps), Unchecked{});
}

Morphism Morphism::identity(const Representation& m) {
  std::vector<Matrix> maps;
  for (int v = 0; v < m.algebra().vertex_count(); ++v) maps.push_back(Matrix::identity(m.dim(v)));
  return Morphism(m, m, std::move(maps), Unchecked{});
}

Morphism Morphism::from_flat(const Representation& source, const Representation& target, const Matrix& flat,
                             std::size_t col) {
  std::vector<Matrix> maps;
  std::size_t k = 0;
  for (int v = 0; v < source.algebra().vertex_count(); ++v) {
    Matrix m(target.dim(v), source.dim(v));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = flat(k++, col);
    maps.push_back(std::move(m));
  }
  return Morphism(source, target, std::move(maps), Unchecked{});
}

Matrix Morphism::flatten() const {
  Matrix flat(flat_size(source_, target_), 1);
  std::size_t k = 0;
  for (auto& m : maps_)
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) flat(k++, 0) = m(i, j);
  return flat;
}

bool Morphism::is_zero() const {
  for (auto& m : maps_)
    if (!m.is_zero()) return false;
  return true;
}

bool Morphism::is_injective() const {
  for (auto& m : maps_)
    if (rank(m) != m.cols()) return false;
  return true;
}

bool Morphism::is_surjective() const {
  for (auto& m : maps_)
    if (rank(m) != m.rows()) return false;
  return true;
}

bool Morphism::is_iso() const {
  for (auto& m : maps_)
    if (m.rows() != m.cols() || rank(m) != m.rows()) return false;
  return true;
}

std::optional<Morphism> Morphism::inverse() const {
  std::vector<Matrix> inv;
  for (auto& m : maps_) {
    auto x = heartlab::inverse(m);
    if (!x) return std::nullopt;
    inv.push_back(std::move(*x));
  }
  return Morphism(target_, source_, std::move(inv), Unchecked{});
}

Morphism operator*(const Morphism& g, const Morphism& f) {
  if (g.source_.dims() != f.target_.dims()) throw Error(ErrorCode::BadInput, "composition shape mismatch");
  std::vector<Matrix> maps;
  for (std::size_t v = 0; v < f.maps_.size(); ++v) maps.push_back(g.maps_[v] * f.maps_[v]);
  return Morphism(f.source_, g.target_, std::move(maps), Morphism::Unchecked{});
}

Morphism operator+(const Morphism& a, const Morphism& b) {
  std::vector<Matrix> maps;
  for (std::size_t v = 0; v < a.maps_.size(); ++v) maps.push_back(a.maps_[v] + b.maps_[v]);
  return Morphism(a.source_, a.target_, std::move(maps), Morphism::Unchecked{});
}

Morphism operator-(const Morphism& a, const Morphism& b) {
  std::vector<Matrix> maps;
  for (std::size_t v = 0; v < a.maps_.size(); ++v) maps.push_back(a.maps_[v] - b.maps_[v]);
  return Morphism(a.source_, a.target_, std::move(maps), Morphism::Unchecked{});
}

Morphism operator-(const Morphism& a) {
  std::vector<Matrix> maps;
  for (auto& m : a.maps_) maps.push_back(-m);
  return Morphism(a.source_, a.target_, std::move(maps), Morphism::Unchecked{});
}

Morphism operator*(const Rational& s, const Morphism& f) {
  std::vector<Matrix> maps;
  for (auto& m : f.maps_) maps.push_back(s * m);
  return Morphism(f.source_, f.target_, std::move(maps), Morphism::Unchecked{});
}

bool operator==(const Morphism& a, const Morphism& b) {
  return a.source_.dims() == b.source_.dims() && a.target_.dims() == b.target_.dims() && a.maps_ == b.maps_;
}

bool ShortExactSequence::is_valid() const {
  if (!(deflation.source().dims() == inflation.target().dims())) return false;
  if (!inflation.is_injective() || !deflation.is_surjective()) return false;
  if (!(deflation * inflation).is_zero()) return false;
  for (int v = 0; v < inflation.source().algebra().vertex_count(); ++v)
    if (inflation.target().dim(v) != inflation.source().dim(v) + deflation.target().dim(v)) return false;
  return true;
}

std::vector<Morphism> hom_basis(const Representation& m, const Representation& n) {
  const Algebra& alg = m.algebra();
  const int nv = alg.vertex_count();
  std::vector<std::size_t> off(nv + 1, 0);
  for (int v = 0; v < nv; ++v) off[v + 1] = off[v] + static_cast<std::size_t>(n.dim(v) * m.dim(v));
  const std::size_t unknowns = off[nv];
  if (unknowns == 0) return {};

  std::size_t rows = 0;
  for (int a = 0; a < alg.arrow_count(); ++a)
    rows += static_cast<std::size_t>(n.dim(alg.arrow(a).target) * m.dim(alg.arrow(a).source));
  Matrix eq(rows, unknowns);
  std::size_t row = 0;
  for (int a = 0; a < alg.arrow_count(); ++a) {
    const int s = alg.arrow(a).source, t = alg.arrow(a).target;
    const Matrix& na = n.arrow_map(a);
    const Matrix& ma = m.arrow_map(a);
    for (int p = 0; p < n.dim(t); ++p)
      for (int q = 0; q < m.dim(s); ++q, ++row) {
        for (int r = 0; r < n.dim(s); ++r) eq(row, off[s] + r * m.dim(s) + q) += na(p, r);
        for (int r = 0; r < m.dim(t); ++r) eq(row, off[t] + p * m.dim(t) + r) -= ma(r, q);
      }
  }
  Matrix basis = nullspace(eq);
  std::vector<Morphism> out;
  for (std::size_t k = 0; k < basis.cols(); ++k) out.push_back(Morphism::from_flat(m, n, basis, k));
  return out;
}

std::size_t hom_dim(const Representation& source, const Representation& target) {
  return hom_basis(source, target).size();
}

HomSpace::HomSpace(Representation source, Representation target)
    : source_(std::move(source)), target_(std::move(target)), basis_(hom_basis(source_, target_)) {
  Matrix b(flat_size(source_, target_), basis_.size());
  for (std::size_t k = 0; k < basis_.size(); ++k) b.set_block(0, k, basis_[k].flatten());
  coords_ = CoordinateMap(std::move(b));
}

Matrix HomSpace::coordinates(const Morphism& f) const { return coords_.coordinates(f.flatten()); }

Morphism HomSpace::element(const Matrix& coords, std::size_t col) const {
  Matrix flat = coords_.basis() * coords.col(col);
  return Morphism::from_flat(source_, target_, flat);
}

Morphism kernel(const Morphism& f) {
  const Representation& m = f.source();
  const Algebra& alg = m.algebra();
  std::vector<Matrix> inc;
  std::vector<int> dims;
  for (int v = 0; v < alg.vertex_count(); ++v) {
    inc.push_back(nullspace(f.map(v)));
    dims.push_back(static_cast<int>(inc.back().cols()));
  }
  std::vector<Matrix> maps;
  for (int a = 0; a < alg.arrow_count(); ++a) {
    const int s = alg.arrow(a).source, t = alg.arrow(a).target;
    maps.push_back(*solve(inc[t], m.arrow_map(a) * inc[s]));
  }
  Representation k(m.algebra_ptr(), std::move(dims), std::move(maps));
  return Morphism(k, m, std::move(inc));
}

Morphism cokernel(const Morphism& f) {
  const Representation& n = f.target();
  const Algebra& alg = n.algebra();
  std::vector<Matrix> proj, right_inv;
  std::vector<int> dims;
  for (int v = 0; v < alg.vertex_count(); ++v) {
    proj.push_back(left_nullspace(f.map(v)));
    dims.push_back(static_cast<int>(proj.back().rows()));
    right_inv.push_back(*solve(proj.back(), Matrix::identity(proj.back().rows())));
  }
  std::vector<Matrix> maps;
  for (int a = 0; a < alg.arrow_count(); ++a) {
    const int s = alg.arrow(a).source, t = alg.arrow(a).target;
    maps.push_back(proj[t] * n.arrow_map(a) * right_inv[s]);
  }
  Representation c(n.algebra_ptr(), std::move(dims), std::move(maps));
  return Morphism(n, c, std::move(proj));
}

Factorization factorization(const Morphism& f) {
  Factorization out;
  out.kernel = kernel(f);
  out.cokernel = cokernel(f);
  out.image = kernel(out.cokernel);
  out.coimage = lift_through_mono(out.image, f);
  return out;
}

DirectSum direct_sum(const AlgebraPtr& algebra, const std::vector<Representation>& parts) {
  const Algebra& alg = *algebra;
  std::vector<int> dims(alg.vertex_count(), 0);
  for (auto& p : parts)
    for (int v = 0; v < alg.vertex_count(); ++v) dims[v] += p.dim(v);
  std::vector<Matrix> maps;
  for (int a = 0; a < alg.arrow_count(); ++a) {
    std::vector<Matrix> blocks;
    for (auto& p : parts) blocks.push_back(p.arrow_map(a));
    maps.push_back(Matrix::block_diagonal(blocks));
  }
  DirectSum out;
  out.sum = Representation(algebra, dims, std::move(maps));
  std::vector<int> offset(alg.vertex_count(), 0);
  for (auto& p : parts) {
    std::vector<Matrix> inj, proj;
    for (int v = 0; v < alg.vertex_count(); ++v) {
      Matrix i(dims[v], p.dim(v));
      for (int k = 0; k < p.dim(v); ++k) i(offset[v] + k, k) = 1;
      proj.push_back(i.transpose());
      inj.push_back(std::move(i));
      offset[v] += p.dim(v);
    }
    out.injections.push_back(Morphism(p, out.sum, std::move(inj)));
    out.projections.push_back(Morphism(out.sum, p, std::move(proj)));
  }
  return out;
}

Morphism from_components(const DirectSum& source, const Representation& target, const std::vector<Morphism>& maps) {
  Morphism out = Morphism::zero(source.sum, target);
  for (std::size_t i = 0; i < maps.size(); ++i) out = out + maps[i] * source.projections[i];
  return out;
}

Morphism to_components(const Representation& source, const DirectSum& target, const std::vector<Morphism>& maps) {
  Morphism out = Morphism::zero(source, target.sum);
  for (std::size_t i = 0; i < maps.size(); ++i) out = out + target.injections[i] * maps[i];
  return out;
}

Morphism sum_of(const DirectSum& source, const DirectSum& target, const std::vector<Morphism>& maps) {
  Morphism out = Morphism::zero(source.sum, target.sum);
  for (std::size_t i = 0; i < maps.size(); ++i)
    out = out + target.injections[i] * maps[i] * source.projections[i];
  return out;
}

Square pushout(const Morphism& f, const Morphism& g) {
  DirectSum bc = direct_sum(f.source().algebra_ptr(), {f.target(), g.target()});
  Morphism c = cokernel(to_components(f.source(), bc, {f, -g}));
  return Square{c.target(), c * bc.injections[0], c * bc.injections[1]};
}

Square pullback(const Morphism& f, const Morphism& g) {
  DirectSum bc = direct_sum(f.source().algebra_ptr(), {f.source(), g.source()});
  Morphism k = kernel(from_components(bc, f.target(), {f, -g}));
  return Square{k.source(), bc.projections[0] * k, bc.projections[1] * k};
}

namespace {

std::optional<Morphism> solve_in_span(const std::vector<Morphism>& basis, const std::vector<Morphism>& images,
                                      const Morphism& g, const Representation& source, const Representation& target) {
  Matrix flat_g = g.flatten();
  if (images.empty()) {
    if (flat_g.is_zero()) return Morphism::zero(source, target);
    return std::nullopt;
  }
  Matrix cols(flat_g.rows(), images.size());
  for (std::size_t k = 0; k < images.size(); ++k) cols.set_block(0, k, images[k].flatten());
  auto x = solve(cols, flat_g);
  if (!x) return std::nullopt;
  Morphism h = Morphism::zero(source, target);
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (sgn((*x)(k, 0)) != 0) h = h + (*x)(k, 0) * basis[k];
  return h;
}

}  // namespace

std::optional<Morphism> factor_through(const Morphism& a, const Morphism& g) {
  auto basis = hom_basis(g.source(), a.source());
  std::vector<Morphism> images;
  for (auto& h : basis) images.push_back(a * h);
  return solve_in_span(basis, images, g, g.source(), a.source());
}

std::optional<Morphism> extend_along(const Morphism& a, const Morphism& g) {
  auto basis = hom_basis(a.target(), g.target());
  std::vector<Morphism> images;
  for (auto& h : basis) images.push_back(h * a);
  return solve_in_span(basis, images, g, a.target(), g.target());
}

Morphism lift_through_mono(const Morphism& k, const Morphism& g) {
  std::vector<Matrix> maps;
  for (int v = 0; v < k.source().algebra().vertex_count(); ++v) {
    auto x = solve(k.map(v), g.map(v));
    if (!x) throw Error(ErrorCode::BadInput, "map does not factor through the monomorphism");
    maps.push_back(std::move(*x));
  }
  return Morphism(g.source(), k.source(), std::move(maps));
}

Morphism descend_through_epi(const Morphism& c, const Morphism& g) {
  std::vector<Matrix> maps;
  for (int v = 0; v < c.source().algebra().vertex_count(); ++v) {
    auto x = solve(c.map(v).transpose(), g.map(v).transpose());
    if (!x) throw Error(ErrorCode::BadInput, "map does not factor through the epimorphism");
    maps.push_back(x->transpose());
  }
  return Morphism(c.target(), g.target(), std::move(maps));
}

namespace {

std::vector<std::vector<const Path*>> by_end(const AlgebraPtr& algebra, const std::vector<const Path*>& paths) {
  std::vector<std::vector<const Path*>> out(algebra->vertex_count());
  for (auto* p : paths) out[p->end].push_back(p);
  return out;
}

std::vector<std::vector<const Path*>> by_start(const AlgebraPtr& algebra, const std::vector<const Path*>& paths) {
  std::vector<std::vector<const Path*>> out(algebra->vertex_count());
  for (auto* p : paths) out[p->start].push_back(p);
  return out;
}

int find_path(const std::vector<const Path*>& list, const std::vector<int>& arrows) {
  for (std::size_t i = 0; i < list.size(); ++i)
    if (list[i]->arrows == arrows) return static_cast<int>(i);
  return -1;
}

}  // namespace

Representation projective_at(const AlgebraPtr& algebra, int v) {
  const Algebra& alg = *algebra;
  auto at = by_end(algebra, alg.paths_from(v));
  std::vector<int> dims;
  for (auto& l : at) dims.push_back(static_cast<int>(l.size()));
  std::vector<Matrix> maps;
  for (int a = 0; a < alg.arrow_count(); ++a) {
    const int s = alg.arrow(a).source, t = alg.arrow(a).target;
    Matrix m(dims[t], dims[s]);
    for (std::size_t j = 0; j < at[s].size(); ++j) {
      std::vector<int> longer = at[s][j]->arrows;
      longer.push_back(a);
      int i = find_path(at[t], longer);
      if (i >= 0) m(i, j) = 1;
    }
    maps.push_back(std::move(m));
  }
  return Representation(algebra, std::move(dims), std::move(maps));
}

Representation injective_at(const AlgebraPtr& algebra, int v) {
  const Algebra& alg = *algebra;
  auto at = by_start(algebra, alg.paths_to(v));
  std::vector<int> dims;
  for (auto& l : at) dims.push_back(static_cast<int>(l.size()));
  std::vector<Matrix> maps;
  for (int a = 0; a < alg.arrow_count(); ++a) {
    const int s = alg.arrow(a).source, t = alg.arrow(a).target;
    Matrix m(dims[t], dims[s]);
    for (std::size_t j = 0; j < at[s].size(); ++j) {
      const auto& p = at[s][j]->arrows;
      if (p.empty() || p.front() != a) continue;
      int i = find_path(at[t], std::vector<int>(p.begin() + 1, p.end()));
      if (i >= 0) m(i, j) = 1;
    }
    maps.push_back(std::move(m));
  }
  return Representation(algebra, std::move(dims), std::move(maps));
}

Morphism morphism_from_projective(const Representation& m, int v, const Matrix& element) {
  const AlgebraPtr& algebra = m.algebra_ptr();
  Representation p = projective_at(algebra, v);
  auto at = by_end(algebra, algebra->paths_from(v));
  std::vector<Matrix> maps;
  for (int w = 0; w < algebra->vertex_count(); ++w) {
    Matrix f(m.dim(w), at[w].size());
    for (std::size_t j = 0; j < at[w].size(); ++j) f.set_block(0, j, m.path_map(at[w][j]->arrows, v) * element);
    maps.push_back(std::move(f));
  }
  return Morphism(p, m, std::move(maps));
}

namespace {

// Columns of `sub` extended by standard basis vectors: the indices of the added ones.
std::vector<std::size_t> complement_units(const Matrix& sub, std::size_t n) {
  Matrix all = Matrix::hstack({sub, Matrix::identity(n)}, n);
  std::vector<std::size_t> out;
  for (auto c : independent_columns(all))
    if (c >= sub.cols()) out.push_back(c - sub.cols());
  return out;
}

Matrix radical_at(const Representation& m, int v) {
  std::vector<Matrix> parts;
  for (int a : m.algebra().in_arrows(v)) parts.push_back(m.arrow_map(a));
  return Matrix::hstack(parts, m.dim(v));
}

Matrix socle_at(const Representation& m, int v) {
  std::vector<Matrix> parts;
  for (int a : m.algebra().out_arrows(v)) parts.push_back(m.arrow_map(a));
  return nullspace(Matrix::vstack(parts, m.dim(v)));
}

}  // namespace

std::vector<int> top_dims(const Representation& m) {
  std::vector<int> out;
  for (int v = 0; v < m.algebra().vertex_count(); ++v)
    out.push_back(m.dim(v) - static_cast<int>(rank(radical_at(m, v))));
  return out;
}

std::vector<int> socle_dims(const Representation& m) {
  std::vector<int> out;
  for (int v = 0; v < m.algebra().vertex_count(); ++v) out.push_back(static_cast<int>(socle_at(m, v).cols()));
  return out;
}

Cover projective_cover(const Representation& m) {
  const AlgebraPtr& algebra = m.algebra_ptr();
  Cover out;
  std::vector<Representation> parts;
  std::vector<Morphism> comps;
  for (int v = 0; v < algebra->vertex_count(); ++v) {
    Matrix units = Matrix::identity(m.dim(v));
    for (auto k : complement_units(radical_at(m, v), m.dim(v))) {
      comps.push_back(morphism_from_projective(m, v, units.col(k)));
      parts.push_back(comps.back().source());
      out.vertices.push_back(v);
    }
  }
  DirectSum p = direct_sum(algebra, parts);
  out.map = from_components(p, m, comps);
  return out;
}

Cover injective_envelope(const Representation& m) {
  const AlgebraPtr& algebra = m.algebra_ptr();
  const Algebra& alg = *algebra;
  Cover out;
  std::vector<Representation> parts;
  std::vector<Morphism> comps;
  for (int v = 0; v < alg.vertex_count(); ++v) {
    Matrix soc = socle_at(m, v);
    if (soc.cols() == 0) continue;
    Matrix functionals = solve(soc.transpose(), Matrix::identity(soc.cols()))->transpose();
    Representation inj = injective_at(algebra, v);
    auto at = by_start(algebra, alg.paths_to(v));
    for (std::size_t k = 0; k < functionals.rows(); ++k) {
      Matrix phi = functionals.block(k, 0, 1, functionals.cols());
      std::vector<Matrix> maps;
      for (int w = 0; w < alg.vertex_count(); ++w) {
        Matrix f(at[w].size(), m.dim(w));
        for (std::size_t i = 0; i < at[w].size(); ++i) f.set_block(i, 0, phi * m.path_map(at[w][i]->arrows, w));
        maps.push_back(std::move(f));
      }
      comps.push_back(Morphism(m, inj, std::move(maps)));
      parts.push_back(inj);
      out.vertices.push_back(v);
    }
  }
  DirectSum i = direct_sum(algebra, parts);
  out.map = to_components(m, i, comps);
  return out;
}

Syzygy syzygy(const Representation& m) {
  Cover c = projective_cover(m);
  Morphism k = kernel(c.map);
  return Syzygy{k.source(), k, c};
}

Cosyzygy cosyzygy(const Representation& m) {
  Cover e = injective_envelope(m);
  Morphism c = cokernel(e.map);
  return Cosyzygy{c.target(), c, e};
}

Representation dual(const Representation& m, const AlgebraPtr& target) {
  const Algebra& alg = m.algebra();
  if (target->vertex_count() != alg.vertex_count() || target->arrow_count() != alg.arrow_count())
    throw Error(ErrorCode::BadInput, "dual target is not the opposite algebra");
  std::vector<Matrix> maps;
  for (int a = 0; a < alg.arrow_count(); ++a) {
    if (target->arrow(a).source != alg.arrow(a).target || target->arrow(a).target != alg.arrow(a).source)
      throw Error(ErrorCode::BadInput, "dual target is not the opposite algebra");
    maps.push_back(m.arrow_map(a).transpose());
  }
  return Representation(target, m.dims(), std::move(maps));
}

Morphism dual(const Morphism& f, const AlgebraPtr& target) {
  std::vector<Matrix> maps;
  for (auto& x : f.maps()) maps.push_back(x.transpose());
  return Morphism(dual(f.target(), target), dual(f.source(), target), std::move(maps));
}

}  // namespace heartlab
