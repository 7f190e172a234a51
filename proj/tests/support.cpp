#include "support.hpp"

#include <functional>
#include <map>
#include <mutex>

#include "heartlab/homology.hpp"

using namespace heartlab;

namespace fixtures {

std::string path(const std::string& name) { return std::string(HEARTLAB_FIXTURES) + "/" + name; }

AlgebraPtr algebra(const std::string& name) { return catalog(name)->algebra(); }

CatalogPtr catalog(const std::string& name) {
  static std::mutex m;
  static std::map<std::string, CatalogPtr> cache;
  std::lock_guard<std::mutex> lock(m);
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;
  CatalogPtr c = enumerate_indecomposables(load_algebra_file(path(name + ".json")));
  cache[name] = c;
  return c;
}

Subcategory subcategory(const IndecCatalog& cat, const std::string& file) {
  return cat.from_labels(parse_id_list(read_file(path(file))));
}

Subcategory labels(const IndecCatalog& cat, const std::vector<std::string>& names) { return cat.from_labels(names); }

std::vector<std::string> names(const IndecCatalog& cat, const Subcategory& s) { return cat.labels(s); }

CotorsionPair pair(const IndecCatalog& cat, const Subcategory& u, const Subcategory& v) {
  PairVerdict p = is_cotorsion_pair(cat, u, v);
  if (!p.valid) throw std::runtime_error("fixture pair invalid: " + p.reason);
  return *p.pair;
}

Twin twin_m_m() {
  auto cat = catalog("lambda4");
  Subcategory m = subcategory(*cat, "lambda4_m.json");
  CotorsionPair p = pair(*cat, m, m);
  return Twin(p, p);
}

Twin twin_m_prime() {
  auto cat = catalog("lambda4");
  Subcategory mp = subcategory(*cat, "lambda4_m_prime.json");
  Subcategory t = perp(*cat, mp, Side::right, 1);
  Subcategory v = perp(*cat, t, Side::right, 1);
  return Twin(pair(*cat, mp, t), pair(*cat, t, v));
}

Twin twin_lambda3() {
  auto cat = catalog("lambda3");
  return Twin(pair(*cat, subcategory(*cat, "lambda3_s.json"), subcategory(*cat, "lambda3_t.json")),
              pair(*cat, subcategory(*cat, "lambda3_u.json"), subcategory(*cat, "lambda3_v.json")));
}

}  // namespace fixtures

namespace oracle {

std::size_t rank(Rows rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      Rational f = rows[i][c] / rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    ++r;
  }
  return r;
}

std::size_t rank(const Matrix& m) {
  Rows rows(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
  return rank(std::move(rows));
}

std::size_t hom_dim(const Representation& m, const Representation& n) {
  const Algebra& alg = m.algebra();
  const int nv = alg.vertex_count();
  std::vector<std::size_t> offset(nv + 1, 0);
  for (int v = 0; v < nv; ++v) offset[v + 1] = offset[v] + static_cast<std::size_t>(n.dim(v) * m.dim(v));
  const std::size_t unknowns = offset[nv];
  // X_v is n.dim(v) x m.dim(v), entry (i, j) at offset[v] + i * m.dim(v) + j.
  Rows eqs;
  for (int a = 0; a < alg.arrow_count(); ++a) {
    const int s = alg.arrow(a).source, t = alg.arrow(a).target;
    const Matrix& ma = m.arrow_map(a);
    const Matrix& na = n.arrow_map(a);
    for (int i = 0; i < n.dim(t); ++i)
      for (int j = 0; j < m.dim(s); ++j) {
        std::vector<Rational> row(unknowns);
        // (N_a X_s)_{ij} - (X_t M_a)_{ij}
        for (int k = 0; k < n.dim(s); ++k) row[offset[s] + k * m.dim(s) + j] += na(i, k);
        for (int k = 0; k < m.dim(t); ++k) row[offset[t] + i * m.dim(t) + k] -= ma(k, j);
        eqs.push_back(std::move(row));
      }
  }
  return unknowns - rank(std::move(eqs));
}

std::size_t ext1_dim(const Representation& m, const Representation& n) {
  Syzygy s = syzygy(m);
  return oracle::hom_dim(s.module, n) - oracle::hom_dim(s.cover.map.source(), n) + oracle::hom_dim(m, n);
}

Representation interval(const AlgebraPtr& alg, int top, int length) {
  std::vector<int> vertex{top}, via;
  for (int k = 1; k < length; ++k) {
    auto out = alg->out_arrows(vertex.back());
    if (out.size() != 1) throw std::runtime_error("interval walks off the quiver");
    via.push_back(out[0]);
    vertex.push_back(alg->arrow(out[0]).target);
  }
  std::vector<int> dims(alg->vertex_count(), 0), index(length);
  for (int k = 0; k < length; ++k) index[k] = dims[vertex[k]]++;
  std::vector<Matrix> maps;
  for (int a = 0; a < alg->arrow_count(); ++a)
    maps.emplace_back(dims[alg->arrow(a).target], dims[alg->arrow(a).source]);
  for (int k = 0; k + 1 < length; ++k) maps[via[k]](index[k + 1], index[k]) = 1;
  return Representation(alg, dims, maps);
}

std::vector<int> multiplicities(const IndecCatalog& cat, const Representation& m) {
  const std::size_t n = cat.size();
  std::vector<std::size_t> target(n);
  for (std::size_t i = 0; i < n; ++i) target[i] = oracle::hom_dim(cat.module(static_cast<int>(i)), m);
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      table[i][j] = oracle::hom_dim(cat.module(static_cast<int>(i)), cat.module(static_cast<int>(j)));
  std::vector<int> current(n, 0), found;
  std::function<bool(std::size_t, int)> go = [&](std::size_t k, int left) {
    if (k == n) {
      if (left != 0) return false;
      for (std::size_t i = 0; i < n; ++i) {
        std::size_t s = 0;
        for (std::size_t j = 0; j < n; ++j) s += table[i][j] * current[j];
        if (s != target[i]) return false;
      }
      found = current;
      return true;
    }
    const int d = cat.module(static_cast<int>(k)).total_dim();
    for (int c = 0; c * d <= left; ++c) {
      current[k] = c;
      if (go(k + 1, left - c * d)) return true;
    }
    current[k] = 0;
    return false;
  };
  if (!go(0, m.total_dim())) throw std::runtime_error("no decomposition");
  return found;
}

std::vector<std::string> summands(const IndecCatalog& cat, const Representation& m) {
  std::vector<std::string> out;
  auto mult = multiplicities(cat, m);
  for (std::size_t i = 0; i < mult.size(); ++i)
    for (int k = 0; k < mult[i]; ++k) out.push_back(cat.label(static_cast<int>(i)));
  return out;
}

namespace {

// Multisets over ids with total dimension in [1, bound], realized.
std::vector<std::vector<int>> small_sums(const IndecCatalog& cat, const std::vector<int>& ids, int bound) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::function<void(std::size_t, int)> go = [&](std::size_t start, int left) {
    if (!current.empty()) out.push_back(current);
    for (std::size_t i = start; i < ids.size(); ++i) {
      int d = cat.module(ids[i]).total_dim();
      if (d > left) continue;
      current.push_back(ids[i]);
      go(i, left - d);
      current.pop_back();
    }
  };
  go(0, bound);
  return out;
}

bool grid_hit(std::size_t d, const std::function<bool(const std::vector<Rational>&)>& f) {
  std::vector<int> c(d, -1);
  while (true) {
    std::vector<Rational> q(c.begin(), c.end());
    if (f(q)) return true;
    std::size_t k = 0;
    while (k < d && c[k] == 1) c[k++] = -1;
    if (k == d) return false;
    ++c[k];
  }
}

bool witness(const IndecCatalog& cat, const Subcategory& ends, const Subcategory& w, int b, bool b_is_sub) {
  const Representation& m = cat.module(b);
  if (w.contains(b)) return true;  // zero end term
  for (auto& ids : small_sums(cat, ends.ids(), cat.max_dim())) {
    Representation x = cat.realize(ids).sum;
    ExtSpace e = b_is_sub ? ext1(x, m) : ext1(m, x);
    bool hit = grid_hit(e.dimension(), [&](const std::vector<Rational>& q) {
      auto seq = realize_extension(e, q);
      return w.contains_all(multiplicities(cat, seq.deflation.source()));
    });
    if (hit) return true;
  }
  return false;
}

}  // namespace

bool in_b_minus(const IndecCatalog& cat, const Twin& t, int b) { return witness(cat, t.S(), t.W(), b, true); }

bool in_b_plus(const IndecCatalog& cat, const Twin& t, int b) { return witness(cat, t.V(), t.W(), b, false); }

Morphism random_morphism(std::mt19937& gen, const Representation& m, const Representation& n) {
  std::uniform_int_distribution<int> d(-2, 2);
  Morphism f = Morphism::zero(m, n);
  for (auto& b : hom_basis(m, n)) f = f + Rational(d(gen)) * b;
  return f;
}

Representation random_module(std::mt19937& gen, const IndecCatalog& cat) {
  std::uniform_int_distribution<int> pick(0, static_cast<int>(cat.size()) - 1);
  std::uniform_int_distribution<int> count(1, 2);
  std::vector<int> ids;
  for (int k = count(gen); k > 0; --k) ids.push_back(pick(gen));
  return cat.realize(ids).sum;
}

Morphism random_inflation(std::mt19937& gen, const IndecCatalog& cat, const Representation& m) {
  Representation n = random_module(gen, cat);
  Cover env = injective_envelope(m);
  DirectSum s = direct_sum(cat.algebra(), {n, env.map.target()});
  return to_components(m, s, {random_morphism(gen, m, n), env.map});
}

Morphism random_deflation(std::mt19937& gen, const IndecCatalog& cat, const Representation& m) {
  Representation n = random_module(gen, cat);
  Cover cover = projective_cover(m);
  DirectSum s = direct_sum(cat.algebra(), {n, cover.map.source()});
  return from_components(s, m, {random_morphism(gen, n, m), cover.map});
}

Representation rebase(std::mt19937& gen, const Representation& m) {
  const Algebra& alg = m.algebra();
  std::uniform_int_distribution<int> d(-2, 2);
  std::vector<Matrix> g, g_inv;
  for (int v = 0; v < alg.vertex_count(); ++v) {
    const std::size_t n = static_cast<std::size_t>(m.dim(v));
    if (n == 0) {
      g.emplace_back(0, 0);
      g_inv.emplace_back(0, 0);
      continue;
    }
    while (true) {
      Matrix x(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) x(i, j) = d(gen);
      if (oracle::rank(x) != n) continue;
      g.push_back(x);
      g_inv.push_back(*inverse(x));
      break;
    }
  }
  std::vector<Matrix> maps;
  for (int a = 0; a < alg.arrow_count(); ++a)
    maps.push_back(g[alg.arrow(a).target] * m.arrow_map(a) * g_inv[alg.arrow(a).source]);
  return Representation(m.algebra_ptr(), m.dims(), maps);
}

}  // namespace oracle
