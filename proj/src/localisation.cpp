#include "heartlab/localisation.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "heartlab/error.hpp"

namespace heartlab {

Matrix GammaAlgebra::multiply(const Matrix& a, const Matrix& b) const {
  Matrix out(dimension(), 1);
  for (std::size_t i = 0; i < dimension(); ++i) {
    if (sgn(a(i, 0)) == 0) continue;
    for (std::size_t j = 0; j < dimension(); ++j)
      if (sgn(b(j, 0)) != 0) out += (a(i, 0) * b(j, 0)) * product[i][j];
  }
  return out;
}

Matrix GammaAlgebra::left_matrix(const Matrix& a) const {
  Matrix out(dimension(), dimension());
  for (std::size_t j = 0; j < dimension(); ++j) {
    Matrix e(dimension(), 1);
    e(j, 0) = 1;
    out.set_block(0, j, multiply(a, e));
  }
  return out;
}

Localisation::Localisation(const HeartContext& ctx) : ctx_(ctx) {
  const Twin& twin = ctx.twin();
  if (!(twin.T() == twin.U())) throw Error(ErrorCode::HypothesisNotMet, "localisation needs T = U");
  const IndecCatalog& cat = ctx.catalog();
  std::set<int> gen;
  for (int s : twin.S().ids())
    for (std::size_t i = 0; i < cat.size(); ++i)
      if (cat.syzygy_of(s)[i] > 0 && !cat.projectives().contains(static_cast<int>(i))) gen.insert(static_cast<int>(i));
  gamma_.generator.assign(gen.begin(), gen.end());
  g_ = ctx.object(gamma_.generator);

  const QuotientHom& end = ctx.quotient_hom(g_, g_);
  gamma_.basis = end.basis();
  const std::size_t n = gamma_.dimension();
  gamma_.product.assign(n, std::vector<Matrix>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gamma_.product[i][j] = end.coordinates(gamma_.basis[i] * gamma_.basis[j]);
  gamma_.unit = end.coordinates(Morphism::identity(g_.module()));
  for (std::size_t i = 0; i < gamma_.generator.size(); ++i)
    gamma_.idempotents.push_back(end.coordinates(g_.sum.injections[i] * g_.sum.projections[i]));
}

bool Localisation::ideals_agree() const {
  const IndecCatalog& cat = ctx_.catalog();
  std::set<int> omega;
  for (int s : ctx_.twin().S().ids())
    for (std::size_t i = 0; i < cat.size(); ++i)
      if (cat.syzygy_of(s)[i] > 0) omega.insert(static_cast<int>(i));
  for (int x : omega)
    for (int y = 0; y < static_cast<int>(cat.size()); ++y) {
      Matrix p = ideal_subspace(cat, cat.projectives(), cat.module(x), cat.module(y));
      Matrix t = ideal_subspace(cat, ctx_.twin().T(), cat.module(x), cat.module(y));
      std::size_t r = rank(Matrix::hstack({p, t}, flat_size(cat.module(x), cat.module(y))));
      if (r != p.cols() || r != t.cols()) return false;
    }
  return true;
}

FunctorModule Localisation::psi(const HeartObject& b) const {
  const QuotientHom& q = ctx_.quotient_hom(g_, b);
  FunctorModule m;
  m.object = b.summands;
  m.dimension = q.dimension();
  for (const Morphism& a : gamma_.basis) {
    Matrix act(m.dimension, m.dimension);
    for (std::size_t j = 0; j < m.dimension; ++j) act.set_block(0, j, q.coordinates(q.basis()[j] * a));
    m.action.push_back(std::move(act));
  }
  return m;
}

Matrix Localisation::psi_on_morphism(const HeartMorphism& f) const {
  const QuotientHom& from = ctx_.quotient_hom(g_, f.source);
  const QuotientHom& to = ctx_.quotient_hom(g_, f.target);
  Matrix out(to.dimension(), from.dimension());
  for (std::size_t j = 0; j < from.dimension(); ++j) out.set_block(0, j, to.coordinates(f.map * from.basis()[j]));
  return out;
}

bool Localisation::module_axioms_hold(const FunctorModule& m) const {
  const std::size_t n = gamma_.dimension();
  auto act = [&](const Matrix& c) {
    Matrix out(m.dimension, m.dimension);
    for (std::size_t k = 0; k < n; ++k)
      if (sgn(c(k, 0)) != 0) out += c(k, 0) * m.action[k];
    return out;
  };
  if (!(act(gamma_.unit) == Matrix::identity(m.dimension))) return false;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (!(m.action[b] * m.action[a] == act(gamma_.product[a][b]))) return false;
  return true;
}

bool Localisation::is_module_map(const FunctorModule& a, const FunctorModule& b, const Matrix& f) const {
  for (std::size_t k = 0; k < gamma_.dimension(); ++k)
    if (!(f * a.action[k] == b.action[k] * f)) return false;
  return true;
}

std::vector<Matrix> Localisation::module_homs(const FunctorModule& a, const FunctorModule& b) const {
  const std::size_t p = b.dimension, q = a.dimension;
  const std::size_t unknowns = p * q;
  Matrix eq(gamma_.dimension() * p * q, unknowns);
  std::size_t row = 0;
  for (std::size_t k = 0; k < gamma_.dimension(); ++k)
    for (std::size_t r = 0; r < p; ++r)
      for (std::size_t s = 0; s < q; ++s, ++row) {
        for (std::size_t t = 0; t < q; ++t) eq(row, r * q + t) += a.action[k](t, s);
        for (std::size_t t = 0; t < p; ++t) eq(row, t * q + s) -= b.action[k](r, t);
      }
  Matrix ns = unknowns ? nullspace(eq) : Matrix(0, 0);
  std::vector<Matrix> out;
  for (std::size_t c = 0; c < ns.cols(); ++c) {
    Matrix f(p, q);
    for (std::size_t r = 0; r < p; ++r)
      for (std::size_t s = 0; s < q; ++s) f(r, s) = ns(r * q + s, c);
    out.push_back(std::move(f));
  }
  return out;
}

namespace {

Matrix span_of(const std::vector<Matrix>& vectors, std::size_t rows) {
  Matrix m = Matrix::hstack(vectors, rows);
  return m.select_columns(independent_columns(m));
}

}  // namespace

std::optional<std::size_t> Localisation::count_gamma_modules(std::string* structure) const {
  auto set = [&](const char* s) {
    if (structure) *structure = s;
  };
  const std::size_t n = gamma_.dimension();
  if (n == 0) {
    set("zero");
    return 0;
  }
  if (n > 8) {
    set("not computed");
    return std::nullopt;
  }
  std::vector<Matrix> left;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix e(n, 1);
    e(i, 0) = 1;
    left.push_back(gamma_.left_matrix(e));
  }
  // Radical = kernel of the trace form of the regular representation.
  Matrix form(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix prod = left[i] * left[j];
      Rational tr = 0;
      for (std::size_t k = 0; k < n; ++k) tr += prod(k, k);
      form(i, j) = tr;
    }
  Matrix radical = nullspace(form);
  const auto& es = gamma_.idempotents;
  auto corner_dim = [&](std::size_t i, std::size_t j) {
    std::vector<Matrix> v;
    for (std::size_t k = 0; k < n; ++k) {
      Matrix e(n, 1);
      e(k, 0) = 1;
      v.push_back(gamma_.multiply(gamma_.multiply(es[i], e), es[j]));
    }
    return rank(Matrix::hstack(v, n));
  };
  if (radical.cols() == 0) {
    for (std::size_t i = 0; i < es.size(); ++i)
      if (corner_dim(i, i) != 1) {
        set("not computed");
        return std::nullopt;
      }
    std::vector<std::size_t> parent(es.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
      return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (std::size_t i = 0; i < es.size(); ++i)
      for (std::size_t j = 0; j < es.size(); ++j)
        if (i != j && corner_dim(i, j) != 0) parent[find(i)] = find(j);
    std::set<std::size_t> roots;
    for (std::size_t i = 0; i < es.size(); ++i) roots.insert(find(i));
    set("semisimple");
    return roots.size();
  }
  std::vector<Matrix> squares;
  for (std::size_t i = 0; i < radical.cols(); ++i)
    for (std::size_t j = 0; j < radical.cols(); ++j) squares.push_back(gamma_.multiply(radical.col(i), radical.col(j)));
  const std::size_t square_rank = rank(Matrix::hstack(squares, n));
  if (es.size() == 1 && radical.cols() == n - 1 && radical.cols() - square_rank <= 1) {
    set("local uniserial");
    return n;
  }
  if (square_rank == 0 && n - radical.cols() == es.size()) {
    auto count = radical_square_zero_count(radical);
    set(count ? "radical square zero" : "radical square zero, representation-infinite");
    return count;
  }
  set("not computed");
  return std::nullopt;
}

// Basic Gamma with rad^2 = 0: indecomposables correspond to those of the separated
// quiver, less one per vertex. Returns nullopt when a component is not Dynkin.
std::optional<std::size_t> Localisation::radical_square_zero_count(const Matrix& radical) const {
  const std::size_t n = gamma_.dimension();
  const std::size_t m = gamma_.idempotents.size();
  // Vertices 0..m-1 are sources i, m..2m-1 are targets j'.
  std::vector<std::vector<std::size_t>> adj(2 * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<Matrix> corner;
      for (std::size_t k = 0; k < radical.cols(); ++k)
        corner.push_back(gamma_.multiply(gamma_.multiply(gamma_.idempotents[i], radical.col(k)), gamma_.idempotents[j]));
      const std::size_t d = rank(Matrix::hstack(corner, n));
      if (d > 1) return std::nullopt;
      if (d == 1) {
        adj[i].push_back(m + j);
        adj[m + j].push_back(i);
      }
    }
  std::vector<bool> seen(2 * m, false);
  std::size_t total = 0;
  for (std::size_t start = 0; start < 2 * m; ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> component{start};
    seen[start] = true;
    for (std::size_t k = 0; k < component.size(); ++k)
      for (std::size_t next : adj[component[k]])
        if (!seen[next]) {
          seen[next] = true;
          component.push_back(next);
        }
    std::size_t degree_sum = 0, branch = 0, branches = 0;
    for (std::size_t v : component) {
      degree_sum += adj[v].size();
      if (adj[v].size() > 3) return std::nullopt;
      if (adj[v].size() == 3) {
        branch = v;
        ++branches;
      }
    }
    const std::size_t size = component.size();
    if (degree_sum / 2 != size - 1 || branches > 1) return std::nullopt;
    if (branches == 0) {
      total += size * (size + 1) / 2;
      continue;
    }
    std::vector<std::size_t> arms;
    for (std::size_t first : adj[branch]) {
      std::size_t length = 1, prev = branch, cur = first;
      while (adj[cur].size() == 2) {
        std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = next;
        ++length;
      }
      arms.push_back(length);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) total += size * (size - 1);
    else if (arms[0] == 1 && arms[1] == 2 && arms[2] == 2) total += 36;
    else if (arms[0] == 1 && arms[1] == 2 && arms[2] == 3) total += 63;
    else if (arms[0] == 1 && arms[1] == 2 && arms[2] == 4) total += 120;
    else return std::nullopt;
  }
  return total - m;
}

LocalisationReport Localisation::report() const {
  LocalisationReport r;
  r.generator = gamma_.generator;
  r.gamma_dimension = gamma_.dimension();
  r.ideals_agree = ideals_agree();
  const auto& indecs = ctx_.heart_indecomposables();

  std::map<int, std::size_t> index;
  for (std::size_t i = 0; i < indecs.size(); ++i) index[indecs[i]] = i;
  std::vector<std::size_t> parent(indecs.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  std::vector<HeartMorphism> regulars;
  for (int x : indecs)
    for (int y : indecs) {
      if (x == y) continue;
      for (auto& f : ctx_.test_morphisms(ctx_.object({x}), ctx_.object({y}))) {
        if (ctx_.is_zero(f) || !ctx_.classify(f).regular) continue;
        parent[find(index[x])] = find(index[y]);
        Matrix p = psi_on_morphism(f);
        bool iso = p.rows() == p.cols() && inverse(p).has_value();
        if (!iso) r.psi_regular_iso = false;
        r.regular_morphisms.push_back({x, y, ctx_.coordinates(f), iso});
        regulars.push_back(f);
      }
    }
  std::map<std::size_t, std::vector<int>> classes;
  for (std::size_t i = 0; i < indecs.size(); ++i) classes[find(i)].push_back(indecs[i]);
  for (auto& [root, members] : classes) r.regular_classes.push_back(members);

  std::map<int, FunctorModule> modules;
  for (int x : indecs) {
    modules[x] = psi(ctx_.object({x}));
    if (!module_axioms_hold(modules[x])) r.module_axioms = false;
  }
  bool projectives_available = ctx_.twin().U().subset_of(ctx_.twin().T());
  for (int x : indecs) {
    LocalisationReport::Row row{x, modules[x].dimension, false, false, false};
    auto pos = std::find(gamma_.generator.begin(), gamma_.generator.end(), x);
    if (pos != gamma_.generator.end()) {
      row.in_omega = true;
      std::size_t i = static_cast<std::size_t>(pos - gamma_.generator.begin());
      const QuotientHom& q = ctx_.quotient_hom(g_, ctx_.object({x}));
      std::vector<Matrix> images;
      for (const Morphism& a : gamma_.basis) images.push_back(q.coordinates(g_.sum.projections[i] * a));
      std::size_t onto = rank(Matrix::hstack(images, q.dimension()));
      std::size_t corner = rank(gamma_.left_matrix(gamma_.idempotents[i]));
      row.projective = onto == q.dimension() && corner == q.dimension();
      if (!row.projective) r.omega_projective = false;
    }
    if (projectives_available) {
      HeartMorphism c = ctx_.projective_cover_map(x);
      bool from_omega = true;
      for (int s : c.source.summands)
        if (std::find(gamma_.generator.begin(), gamma_.generator.end(), s) == gamma_.generator.end()) from_omega = false;
      row.covered = from_omega && ctx_.epi_direct(c);
    }
    if (!row.covered) r.covers_epi = false;
    r.psi_table.push_back(row);
  }

  r.gamma_module_count = count_gamma_modules(&r.gamma_structure);
  r.counts_match = r.gamma_module_count && *r.gamma_module_count == r.regular_classes.size();

  for (int x : indecs)
    for (int y : indecs) {
      HeartObject xo = ctx_.object({x}), yo = ctx_.object({y});
      const FunctorModule& mx = modules[x];
      const FunctorModule& my = modules[y];
      const std::size_t flat = mx.dimension * my.dimension;
      auto vec = [&](const Matrix& m) {
        Matrix v(flat, 1);
        for (std::size_t i = 0; i < m.rows(); ++i)
          for (std::size_t j = 0; j < m.cols(); ++j) v(i * m.cols() + j, 0) = m(i, j);
        return v;
      };
      const QuotientHom& q = ctx_.quotient_hom(xo, yo);
      std::vector<Matrix> direct;
      for (const Morphism& f : q.basis()) direct.push_back(vec(psi_on_morphism({xo, yo, f})));
      if (rank(Matrix::hstack(direct, flat)) != direct.size()) r.faithful = false;

      // Fractions with one regular morphism inverted, on either side.
      std::vector<Matrix> realized = direct;
      for (const HeartMorphism& reg : regulars) {
        auto inv = inverse(psi_on_morphism(reg));
        if (!inv) continue;
        if (reg.source.summands == yo.summands) {
          const QuotientHom& xz = ctx_.quotient_hom(xo, reg.target);
          for (const Morphism& f : xz.basis()) realized.push_back(vec(*inv * psi_on_morphism({xo, reg.target, f})));
        }
        if (reg.target.summands == xo.summands) {
          const QuotientHom& zy = ctx_.quotient_hom(reg.source, yo);
          for (const Morphism& f : zy.basis()) realized.push_back(vec(psi_on_morphism({reg.source, yo, f}) * *inv));
        }
      }
      std::vector<Matrix> homs;
      for (auto& h : module_homs(mx, my)) homs.push_back(vec(h));
      Matrix hom_span = span_of(homs, flat);
      Matrix both = Matrix::hstack({hom_span, span_of(realized, flat)}, flat);
      if (rank(both) != hom_span.cols() || rank(span_of(realized, flat)) != hom_span.cols()) r.full = false;
    }
  return r;
}

}  // namespace heartlab
