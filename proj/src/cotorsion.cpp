#include "heartlab/cotorsion.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "heartlab/error.hpp"
#include "heartlab/homology.hpp"

namespace heartlab {

Subcategory perp(const IndecCatalog& catalog, const Subcategory& c, Side side, std::optional<int> n) {
  Subcategory out(catalog.size());
  auto vanish = [&](int from, int to) {
    if (!n) return catalog.ext_vanishes_all(from, to);
    for (int k = 1; k <= *n; ++k)
      if (catalog.ext_dim(from, to, k) != 0) return false;
    return true;
  };
  for (int x = 0; x < static_cast<int>(catalog.size()); ++x) {
    bool ok = true;
    for (int y : c.ids()) {
      if (!(side == Side::right ? vanish(y, x) : vanish(x, y))) {
        ok = false;
        break;
      }
    }
    if (ok) out.insert(x);
  }
  return out;
}

PairVerdict is_cotorsion_pair(const IndecCatalog& catalog, const Subcategory& u, const Subcategory& v) {
  PairVerdict out;
  for (int a : u.ids())
    for (int b : v.ids())
      if (catalog.ext1_dim(a, b) != 0) {
        out.reason = "Ext^1(" + catalog.label(a) + ", " + catalog.label(b) + ") is nonzero";
        return out;
      }
  CotorsionPair pair{u, v, {}};
  for (int b = 0; b < static_cast<int>(catalog.size()); ++b) {
    const Representation& m = catalog.module(b);
    PairWitness w;
    w.right = approximation(catalog, u, m, Side::right);
    if (!w.right.map.is_surjective()) {
      out.reason = "minimal right approximation of " + catalog.label(b) + " is not surjective";
      return out;
    }
    w.right_kernel = kernel(w.right.map);
    auto km = catalog.locate(w.right_kernel.source());
    if (!v.contains_all(km)) {
      out.reason = "kernel of the right approximation of " + catalog.label(b) + " leaves the right half";
      return out;
    }
    for (std::size_t i = 0; i < km.size(); ++i)
      for (int k = 0; k < km[i]; ++k) w.right_kernel_summands.push_back(static_cast<int>(i));

    w.left = approximation(catalog, v, m, Side::left);
    if (!w.left.map.is_injective()) {
      out.reason = "minimal left approximation of " + catalog.label(b) + " is not injective";
      return out;
    }
    w.left_cokernel = cokernel(w.left.map);
    auto cm = catalog.locate(w.left_cokernel.target());
    if (!u.contains_all(cm)) {
      out.reason = "cokernel of the left approximation of " + catalog.label(b) + " leaves the left half";
      return out;
    }
    for (std::size_t i = 0; i < cm.size(); ++i)
      for (int k = 0; k < cm[i]; ++k) w.left_cokernel_summands.push_back(static_cast<int>(i));
    pair.witnesses.push_back(std::move(w));
  }
  out.valid = true;
  out.pair = std::move(pair);
  return out;
}

std::vector<CotorsionPair> enumerate_cotorsion_pairs(const IndecCatalog& catalog) {
  const std::size_t n = catalog.size();
  if (n > 24) throw Error(ErrorCode::Unsupported, "catalog too large for subset enumeration");
  std::set<Subcategory> seen;
  std::vector<std::pair<Subcategory, Subcategory>> candidates;
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    Subcategory c(n);
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1ul) c.insert(static_cast<int>(i));
    Subcategory v = perp(catalog, c, Side::right, 1);
    if (!seen.insert(v).second) continue;
    Subcategory u = perp(catalog, v, Side::left, 1);
    if (!(perp(catalog, u, Side::right, 1) == v)) continue;
    candidates.push_back({u, v});
  }
  std::sort(candidates.begin(), candidates.end());
  std::vector<CotorsionPair> out;
  for (auto& [u, v] : candidates) {
    PairVerdict verdict = is_cotorsion_pair(catalog, u, v);
    if (verdict.valid) out.push_back(std::move(*verdict.pair));
  }
  return out;
}

namespace {

// Calls f on every vector in {-1, 0, 1}^d until it returns true.
bool for_each_grid_point(std::size_t d, const std::function<bool(const std::vector<Rational>&)>& f) {
  std::vector<int> c(d, -1);
  std::vector<Rational> q(d);
  // Zero first: split sequences are the common witnesses.
  if (f(std::vector<Rational>(d, 0))) return true;
  while (true) {
    bool zero = std::all_of(c.begin(), c.end(), [](int x) { return x == 0; });
    if (!zero) {
      for (std::size_t i = 0; i < d; ++i) q[i] = c[i];
      if (f(q)) return true;
    }
    std::size_t k = 0;
    while (k < d && c[k] == 1) c[k++] = -1;
    if (k == d) return false;
    ++c[k];
  }
}

}  // namespace

bool is_extension_closed(const IndecCatalog& catalog, const Subcategory& c, std::string* failure) {
  for (int x : c.ids())
    for (int y : c.ids()) {
      if (catalog.ext1_dim(x, y) == 0) continue;
      ExtSpace e = ext1(catalog.module(x), catalog.module(y));
      bool bad = for_each_grid_point(e.dimension(), [&](const std::vector<Rational>& q) {
        auto seq = realize_extension(e, q);
        return !c.contains_all(catalog.locate(seq.deflation.source()));
      });
      if (bad) {
        if (failure) *failure = "an extension of " + catalog.label(x) + " by " + catalog.label(y) + " leaves the subcategory";
        return false;
      }
    }
  return true;
}

CotorsionPair cotorsion_from_subcategory(const IndecCatalog& catalog, const Subcategory& t) {
  if (!catalog.projectives().subset_of(t))
    throw Error(ErrorCode::MissingProjectives, "subcategory does not contain every projective");
  std::string why;
  if (!is_extension_closed(catalog, t, &why)) throw Error(ErrorCode::NotExtensionClosed, why);
  Subcategory v = perp(catalog, t, Side::right, 1);
  PairVerdict verdict = is_cotorsion_pair(catalog, t, v);
  if (!verdict.valid) throw Error(ErrorCode::BadInput, "not the left half of a cotorsion pair: " + verdict.reason);
  return std::move(*verdict.pair);
}

HereditaryVerdict is_hereditary(const IndecCatalog& catalog, const CotorsionPair& pair) {
  HereditaryVerdict out;
  out.hereditary = true;
  for (int a : pair.U.ids())
    for (int b : pair.V.ids())
      if (!catalog.ext_vanishes_all(a, b)) out.hereditary = false;
  out.syzygies_stay_in_u = true;
  for (int a : pair.U.ids())
    if (!pair.U.contains_all(catalog.syzygy_of(a))) out.syzygies_stay_in_u = false;
  return out;
}

bool is_cluster_tilting(const IndecCatalog& catalog, const Subcategory& m) {
  return is_cotorsion_pair(catalog, m, m).valid;
}

Twin::Twin(CotorsionPair first, CotorsionPair second) : first_(std::move(first)), second_(std::move(second)) {
  if (!first_.U.subset_of(second_.U)) throw Error(ErrorCode::NotTwin, "left half of the first pair is not inside the second");
  w_ = first_.V & second_.U;
}

std::vector<std::vector<int>> bounded_multisets(const IndecCatalog& catalog, const std::vector<int>& ids, int bound) {
  std::vector<std::vector<int>> out;
  std::vector<int> current(catalog.size(), 0);
  std::function<void(std::size_t, int)> go = [&](std::size_t k, int left) {
    if (k == ids.size()) {
      out.push_back(current);
      return;
    }
    const int d = catalog.module(ids[k]).total_dim();
    for (int m = 0; m * d <= left; ++m) {
      current[ids[k]] = m;
      go(k + 1, left - m * d);
    }
    current[ids[k]] = 0;
  };
  go(0, bound);
  return out;
}

SequenceSearch search_sequences(const IndecCatalog& catalog, const Representation& fixed, bool fixed_is_sub,
                                const Subcategory& ends, const Subcategory& middles, int max_end_dim) {
  SequenceSearch out;
  for (auto& mult : bounded_multisets(catalog, ends.ids(), max_end_dim)) {
    std::vector<int> summands;
    for (std::size_t i = 0; i < mult.size(); ++i)
      for (int k = 0; k < mult[i]; ++k) summands.push_back(static_cast<int>(i));
    Representation x = catalog.realize(summands).sum;
    ExtSpace e = fixed_is_sub ? ext1(x, fixed) : ext1(fixed, x);
    if (e.dimension() > 8) continue;
    bool hit = for_each_grid_point(e.dimension(), [&](const std::vector<Rational>& q) {
      ++out.candidates;
      auto seq = realize_extension(e, q);
      auto mid = catalog.locate(seq.deflation.source());
      if (!middles.contains_all(mid)) return false;
      out.middle = mid;
      return true;
    });
    if (hit) {
      out.found = true;
      out.end = mult;
      return out;
    }
  }
  return out;
}

StarVerdict star_membership(const IndecCatalog& catalog, int b, const Subcategory& c1, const Subcategory& c2) {
  StarVerdict out;
  const std::size_t n = catalog.size();
  if (catalog.uniserial()) {
    // Submodules of a uniserial module form a chain.
    out.exact = true;
    const CatalogEntry& e = catalog.entry(b);
    std::vector<int> vertices{e.top};
    for (int k = 1; k < e.length; ++k) {
      int v = vertices.back();
      const Representation& m = e.module;
      for (int a : m.algebra().out_arrows(v)) vertices.push_back(m.algebra().arrow(a).target);
    }
    for (int k = 0; k <= e.length; ++k) {
      std::vector<int> sub(n, 0), quot(n, 0);
      if (k > 0) {
        int id = catalog.find_interval(vertices[e.length - k], k);
        if (id < 0 || !c1.contains(id)) continue;
        sub[id] = 1;
      }
      if (k < e.length) {
        int id = catalog.find_interval(e.top, e.length - k);
        if (id < 0 || !c2.contains(id)) continue;
        quot[id] = 1;
      }
      out.member = true;
      out.sub = sub;
      out.quotient = quot;
      return out;
    }
    return out;
  }
  // Bounded search: X -> B -> Y over multisets with matching dimension.
  const Representation& m = catalog.module(b);
  for (auto& ym : bounded_multisets(catalog, c2.ids(), m.total_dim())) {
    std::vector<int> summands;
    for (std::size_t i = 0; i < n; ++i)
      for (int k = 0; k < ym[i]; ++k) summands.push_back(static_cast<int>(i));
    Representation y = catalog.realize(summands).sum;
    bool fits = true;
    for (int v = 0; v < catalog.algebra()->vertex_count(); ++v)
      if (y.dim(v) > m.dim(v)) fits = false;
    if (!fits) continue;
    for (auto& xm : bounded_multisets(catalog, c1.ids(), m.total_dim() - y.total_dim())) {
      std::vector<int> xs;
      std::vector<int> dims = y.dims();
      for (std::size_t i = 0; i < n; ++i)
        for (int k = 0; k < xm[i]; ++k) {
          xs.push_back(static_cast<int>(i));
          for (int v = 0; v < catalog.algebra()->vertex_count(); ++v) dims[v] += catalog.module(static_cast<int>(i)).dim(v);
        }
      if (dims != m.dims()) continue;
      ExtSpace e = ext1(y, catalog.realize(xs).sum);
      if (e.dimension() > 8) continue;
      bool hit = for_each_grid_point(e.dimension(), [&](const std::vector<Rational>& q) {
        auto seq = realize_extension(e, q);
        auto mid = catalog.locate(seq.deflation.source());
        return mid[b] == 1 && std::accumulate(mid.begin(), mid.end(), 0) == 1;
      });
      if (hit) {
        out.member = true;
        out.sub = xm;
        out.quotient = ym;
        return out;
      }
    }
  }
  return out;
}

}  // namespace heartlab
