#include "heartlab/catalog.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "heartlab/error.hpp"
#include "heartlab/homology.hpp"
#include "heartlab/io.hpp"

namespace heartlab {

Subcategory Subcategory::of(std::size_t universe, const std::vector<int>& ids) {
  Subcategory s(universe);
  for (int id : ids) s.insert(id);
  return s;
}

Subcategory Subcategory::all(std::size_t universe) {
  Subcategory s(universe);
  for (std::size_t i = 0; i < universe; ++i) s.insert(static_cast<int>(i));
  return s;
}

std::size_t Subcategory::size() const { return static_cast<std::size_t>(std::count(mask_.begin(), mask_.end(), true)); }

std::vector<int> Subcategory::ids() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < mask_.size(); ++i)
    if (mask_[i]) out.push_back(static_cast<int>(i));
  return out;
}

bool Subcategory::subset_of(const Subcategory& other) const {
  for (std::size_t i = 0; i < mask_.size(); ++i)
    if (mask_[i] && !other.mask_[i]) return false;
  return true;
}

bool Subcategory::contains_all(const std::vector<int>& multiplicities) const {
  for (std::size_t i = 0; i < multiplicities.size(); ++i)
    if (multiplicities[i] > 0 && !mask_[i]) return false;
  return true;
}

Subcategory operator&(const Subcategory& a, const Subcategory& b) {
  Subcategory s(a.universe());
  for (std::size_t i = 0; i < a.mask_.size(); ++i) s.mask_[i] = a.mask_[i] && b.mask_[i];
  return s;
}

Subcategory operator|(const Subcategory& a, const Subcategory& b) {
  Subcategory s(a.universe());
  for (std::size_t i = 0; i < a.mask_.size(); ++i) s.mask_[i] = a.mask_[i] || b.mask_[i];
  return s;
}

Subcategory operator-(const Subcategory& a, const Subcategory& b) {
  Subcategory s(a.universe());
  for (std::size_t i = 0; i < a.mask_.size(); ++i) s.mask_[i] = a.mask_[i] && !b.mask_[i];
  return s;
}

bool operator<(const Subcategory& a, const Subcategory& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.ids() < b.ids();
}

std::string label_of(const std::vector<int>& vertices) {
  std::string out;
  for (std::size_t i = 0; i < vertices.size(); ++i) out += (i ? "/" : "") + std::to_string(vertices[i] + 1);
  return out;
}

namespace {

Rational trace(const Morphism& f) {
  Rational t = 0;
  for (auto& m : f.maps())
    for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

}  // namespace

bool has_local_endomorphism_ring(const Representation& m) {
  if (m.is_zero()) return false;
  auto end = hom_basis(m, m);
  // In characteristic zero the radical is the kernel of the trace form.
  Matrix gram(end.size(), end.size());
  for (std::size_t i = 0; i < end.size(); ++i)
    for (std::size_t j = 0; j < end.size(); ++j) gram(i, j) = trace(end[i] * end[j]);
  return rank(gram) == 1;
}

namespace {

// For indecomposables with local endomorphism rings.
bool isomorphic_indecomposables(const Representation& x, const Representation& y,
                                const std::vector<Morphism>& xy, const std::vector<Morphism>& yx) {
  if (x.dims() != y.dims()) return false;
  for (auto& f : xy)
    for (auto& g : yx)
      if (sgn(trace(g * f)) != 0) return true;
  return false;
}

// Longest-path recursion over the syzygy graph; nothing on a cycle.
std::optional<int> resolution_length(int id, const std::vector<std::vector<int>>& step) {
  const std::size_t n = step.size();
  std::vector<int> state(n, 0), value(n, 0);
  bool cyclic = false;
  std::function<int(int)> visit = [&](int v) -> int {
    if (state[v] == 2) return value[v];
    if (state[v] == 1) {
      cyclic = true;
      return 0;
    }
    state[v] = 1;
    int best = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (step[v][j] > 0) best = std::max(best, 1 + visit(static_cast<int>(j)));
    state[v] = 2;
    value[v] = best;
    return best;
  };
  int r = visit(id);
  if (cyclic) return std::nullopt;
  return r;
}

}  // namespace

CatalogPtr IndecCatalog::build(AlgebraPtr algebra, std::vector<CatalogEntry> entries, bool trusted, std::string source,
                              unsigned seed) {
  auto cat = std::make_shared<IndecCatalog>();
  cat->algebra_ = algebra;
  cat->trusted_ = trusted;
  cat->source_ = std::move(source);
  cat->seed_ = seed;
  const std::size_t n = entries.size();
  cat->uniserial_ = n > 0;
  for (auto& e : entries) {
    if (!e.module.algebra().same_as(*algebra)) throw Error(ErrorCode::BadInput, "entry over a different algebra");
    if (!has_local_endomorphism_ring(e.module))
      throw Error(ErrorCode::NotIndecomposable, "entry " + e.label + " is not indecomposable");
    if (e.top < 0) cat->uniserial_ = false;
    cat->max_dim_ = std::max(cat->max_dim_, e.module.total_dim());
  }
  cat->hom_.assign(n, std::vector<std::vector<Morphism>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cat->hom_[i][j] = hom_basis(entries[i].module, entries[j].module);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (isomorphic_indecomposables(entries[i].module, entries[j].module, cat->hom_[i][j], cat->hom_[j][i]))
        throw Error(ErrorCode::DuplicateEntry, "entries " + entries[j].label + " and " + entries[i].label +
                                                   " are isomorphic");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (entries[i].label == entries[j].label)
        throw Error(ErrorCode::DuplicateEntry, "label " + entries[i].label + " is used twice");
  cat->entries_ = std::move(entries);

  Matrix h(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h(i, j) = cat->hom_dim(static_cast<int>(i), static_cast<int>(j));
  cat->hom_inverse_ = inverse(h);

  cat->ext1_.assign(n, std::vector<int>(n, 0));
  cat->projectives_ = Subcategory(n);
  cat->injectives_ = Subcategory(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Representation& m = cat->entries_[i].module;
    Syzygy s = syzygy(m);
    Cosyzygy c = cosyzygy(m);
    if (s.module.is_zero()) cat->projectives_.insert(static_cast<int>(i));
    if (c.module.is_zero()) cat->injectives_.insert(static_cast<int>(i));
    cat->syzygy_.push_back(cat->locate(s.module));
    cat->cosyzygy_.push_back(cat->locate(c.module));
    for (std::size_t j = 0; j < n; ++j) cat->ext1_[i][j] = static_cast<int>(heartlab::ext1_dim(m, cat->entries_[j].module));
  }
  return cat;
}

int IndecCatalog::find_label(const std::string& label) const {
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i].label == label) return static_cast<int>(i);
  return -1;
}

int IndecCatalog::find_interval(int top, int length) const {
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i].top == top && entries_[i].length == length) return static_cast<int>(i);
  return -1;
}

int IndecCatalog::ext_dim(int i, int j, int n) const {
  if (n < 1) throw Error(ErrorCode::BadInput, "Ext degree must be positive");
  std::vector<int> v(size(), 0);
  v[i] = 1;
  for (int k = 1; k < n; ++k) {
    std::vector<int> next(size(), 0);
    for (std::size_t a = 0; a < size(); ++a)
      if (v[a])
        for (std::size_t b = 0; b < size(); ++b) next[b] += v[a] * syzygy_[a][b];
    v = std::move(next);
  }
  int total = 0;
  for (std::size_t a = 0; a < size(); ++a) total += v[a] * ext1_[a][j];
  return total;
}

bool IndecCatalog::ext_vanishes_all(int i, int j) const {
  std::vector<bool> seen(size(), false);
  std::vector<int> todo{i};
  seen[i] = true;
  while (!todo.empty()) {
    int a = todo.back();
    todo.pop_back();
    if (ext1_[a][j] != 0) return false;
    for (std::size_t b = 0; b < size(); ++b)
      if (syzygy_[a][b] > 0 && !seen[b]) {
        seen[b] = true;
        todo.push_back(static_cast<int>(b));
      }
  }
  return true;
}

std::optional<int> IndecCatalog::projective_dimension(int id) const { return resolution_length(id, syzygy_); }
std::optional<int> IndecCatalog::injective_dimension(int id) const { return resolution_length(id, cosyzygy_); }

std::optional<int> IndecCatalog::global_dimension() const {
  int best = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    auto d = projective_dimension(static_cast<int>(i));
    if (!d) return std::nullopt;
    best = std::max(best, *d);
  }
  return best;
}

Subcategory IndecCatalog::from_labels(const std::vector<std::string>& labels) const {
  Subcategory s(size());
  for (auto& l : labels) {
    int id = find_label(l);
    if (id < 0) throw Error(ErrorCode::BadInput, "unknown catalog label '" + l + "'");
    s.insert(id);
  }
  return s;
}

std::vector<std::string> IndecCatalog::labels(const Subcategory& s) const { return labels(s.ids()); }

std::vector<std::string> IndecCatalog::labels(const std::vector<int>& ids) const {
  std::vector<std::string> out;
  for (int id : ids) out.push_back(label(id));
  return out;
}

std::vector<int> IndecCatalog::locate(const Representation& m) const {
  const std::size_t n = size();
  if (m.is_zero()) return std::vector<int>(n, 0);
  if (!hom_inverse_) throw Error(ErrorCode::IncompleteCatalog, "hom-count matrix of the catalog is singular");
  Matrix h(n, 1);
  for (std::size_t i = 0; i < n; ++i) h(i, 0) = static_cast<long>(heartlab::hom_dim(entries_[i].module, m));
  Matrix x = *hom_inverse_ * h;
  std::vector<int> mult(n, 0);
  std::vector<int> dims(algebra_->vertex_count(), 0);
  for (std::size_t i = 0; i < n; ++i) {
    const Rational& q = x(i, 0);
    if (q.get_den() != 1 || sgn(q) < 0)
      throw Error(ErrorCode::IncompleteCatalog, "module is not a sum of catalog entries");
    mult[i] = static_cast<int>(q.get_num().get_si());
    for (int v = 0; v < algebra_->vertex_count(); ++v) dims[v] += mult[i] * entries_[i].module.dim(v);
  }
  if (dims != m.dims()) throw Error(ErrorCode::IncompleteCatalog, "multiplicities disagree with the dimension vector");
  return mult;
}

bool IndecCatalog::in_add(const Representation& m, const Subcategory& s) const { return s.contains_all(locate(m)); }

DirectSum IndecCatalog::realize(const std::vector<int>& summands) const {
  std::vector<Representation> parts;
  for (int id : summands) parts.push_back(entries_[id].module);
  return direct_sum(algebra_, parts);
}

Decomposition IndecCatalog::decompose(const Representation& m, unsigned seed) const {
  Decomposition out;
  out.multiplicities = locate(m);
  for (std::size_t i = 0; i < size(); ++i)
    for (int k = 0; k < out.multiplicities[i]; ++k) out.summands.push_back(static_cast<int>(i));
  DirectSum s = realize(out.summands);
  auto basis = hom_basis(s.sum, m);
  auto attempt = [&](const std::vector<long>& coeffs) -> bool {
    Morphism f = Morphism::zero(s.sum, m);
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (coeffs[k] != 0) f = f + Rational(coeffs[k]) * basis[k];
    if (!f.is_iso()) return false;
    out.iso = f;
    return true;
  };
  if (m.is_zero()) {
    out.iso = Morphism::zero(s.sum, m);
    return out;
  }
  std::mt19937 gen(seed);
  std::uniform_int_distribution<long> dist(-3, 3);
  std::vector<long> coeffs(basis.size());
  for (int tries = 0; tries < 64; ++tries) {
    for (auto& c : coeffs) c = dist(gen);
    if (attempt(coeffs)) return out;
  }
  if (basis.size() <= 8) {
    std::vector<long> c(basis.size(), -2);
    while (true) {
      if (attempt(c)) return out;
      std::size_t k = 0;
      while (k < c.size() && c[k] == 2) c[k++] = -2;
      if (k == c.size()) break;
      ++c[k];
    }
  }
  throw Error(ErrorCode::IncompleteCatalog, "no isomorphism found from the predicted sum");
}

CatalogPtr enumerate_indecomposables(const AlgebraPtr& algebra, unsigned seed) {
  const Algebra& alg = *algebra;
  if (!alg.is_nakayama()) throw Error(ErrorCode::Unsupported, "automatic enumeration needs a Nakayama algebra");
  std::vector<CatalogEntry> entries;
  for (int v = 0; v < alg.vertex_count(); ++v) {
    // The unique longest nonzero path out of v.
    std::vector<int> arrows;
    std::vector<int> vertices{v};
    while (true) {
      auto out = alg.out_arrows(vertices.back());
      if (out.empty()) break;
      arrows.push_back(out.front());
      if (!alg.is_nonzero(arrows)) {
        arrows.pop_back();
        break;
      }
      vertices.push_back(alg.arrow(out.front()).target);
    }
    for (int len = 1; len <= static_cast<int>(vertices.size()); ++len) {
      std::vector<int> dims(alg.vertex_count(), 0);
      std::vector<int> index(len);
      for (int k = 0; k < len; ++k) index[k] = dims[vertices[k]]++;
      std::vector<Matrix> maps;
      for (int a = 0; a < alg.arrow_count(); ++a) maps.emplace_back(dims[alg.arrow(a).target], dims[alg.arrow(a).source]);
      for (int k = 0; k + 1 < len; ++k) maps[arrows[k]](index[k + 1], index[k]) = 1;
      CatalogEntry e;
      e.label = label_of(std::vector<int>(vertices.begin(), vertices.begin() + len));
      e.module = Representation(algebra, dims, std::move(maps));
      e.top = v;
      e.length = len;
      entries.push_back(std::move(e));
    }
  }
  std::stable_sort(entries.begin(), entries.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    return a.length != b.length ? a.length < b.length : a.top < b.top;
  });
  return IndecCatalog::build(algebra, std::move(entries), true, "nakayama", seed);
}

CatalogPtr load_external_catalog(const AlgebraPtr& algebra, const std::string& text, unsigned seed) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::BadInput, std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_array()) throw Error(ErrorCode::BadInput, "catalog must be a JSON list");
  const Algebra& alg = *algebra;
  std::vector<CatalogEntry> entries;
  for (auto& item : j) {
    require_keys(item, {"label", "dims", "arrow_maps"}, "catalog entry");
    if (!item.contains("label") || !item["label"].is_string() || !item.contains("dims") || !item["dims"].is_array())
      throw Error(ErrorCode::BadInput, "catalog entry needs a label and dims");
    CatalogEntry e;
    e.label = item["label"].get<std::string>();
    std::vector<int> dims;
    for (auto& d : item["dims"]) {
      if (!d.is_number_integer()) throw Error(ErrorCode::BadInput, "dims must be integers");
      dims.push_back(d.get<int>());
    }
    if (static_cast<int>(dims.size()) != alg.vertex_count())
      throw Error(ErrorCode::BadInput, "entry " + e.label + " has the wrong number of dims");
    const Json maps_json = item.contains("arrow_maps") ? item["arrow_maps"] : Json::object();
    std::vector<std::string> names;
    for (int a = 0; a < alg.arrow_count(); ++a) names.push_back(alg.arrow(a).name);
    require_keys(maps_json, names, "arrow_maps");
    std::vector<Matrix> maps;
    for (int a = 0; a < alg.arrow_count(); ++a) {
      std::size_t rows = dims[alg.arrow(a).target], cols = dims[alg.arrow(a).source];
      if (maps_json.contains(alg.arrow(a).name))
        maps.push_back(matrix_from_json(maps_json[alg.arrow(a).name], rows, cols));
      else if (rows == 0 || cols == 0)
        maps.emplace_back(rows, cols);
      else
        throw Error(ErrorCode::BadInput, "entry " + e.label + " lacks a map for arrow " + alg.arrow(a).name);
    }
    e.module = Representation(algebra, std::move(dims), std::move(maps));
    entries.push_back(std::move(e));
  }
  return IndecCatalog::build(algebra, std::move(entries), false, "external", seed);
}

std::string save_catalog(const IndecCatalog& catalog) {
  const Algebra& alg = *catalog.algebra();
  Json out = Json::array();
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    const Representation& m = catalog.module(static_cast<int>(i));
    Json item;
    item["label"] = catalog.label(static_cast<int>(i));
    item["dims"] = m.dims();
    Json maps = Json::object();
    for (int a = 0; a < alg.arrow_count(); ++a) maps[alg.arrow(a).name] = matrix_to_json(m.arrow_map(a));
    item["arrow_maps"] = maps;
    out.push_back(item);
  }
  return out.dump(2) + "\n";
}

}  // namespace heartlab
