#include "heartlab/heart.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>
#include <thread>

#include "heartlab/error.hpp"
#include "heartlab/homology.hpp"

namespace heartlab {

const char* property_name(Property p) {
  switch (p) {
    case Property::preabelian: return "preabelian";
    case Property::abelian: return "abelian";
    case Property::semi_abelian: return "semi_abelian";
    case Property::integral: return "integral";
    case Property::almost_abelian: return "almost_abelian";
  }
  return "";
}

std::optional<Property> parse_property(const std::string& name) {
  for (auto p : {Property::preabelian, Property::abelian, Property::semi_abelian, Property::integral,
                 Property::almost_abelian}) {
    std::string n = property_name(p);
    std::string dashed = n;
    std::replace(dashed.begin(), dashed.end(), '_', '-');
    if (name == n || name == dashed) return p;
  }
  return std::nullopt;
}

std::string join_labels(const IndecCatalog& catalog, const std::vector<int>& ids) {
  if (ids.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) out += (i ? " + " : "") + catalog.label(ids[i]);
  return out;
}

namespace {

Matrix flats(const std::vector<Morphism>& maps, std::size_t rows) {
  Matrix out(rows, maps.size());
  for (std::size_t k = 0; k < maps.size(); ++k) out.set_block(0, k, maps[k].flatten());
  return out;
}

std::vector<int> expand(const std::vector<int>& multiplicities) {
  std::vector<int> out;
  for (std::size_t i = 0; i < multiplicities.size(); ++i)
    for (int k = 0; k < multiplicities[i]; ++k) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<int> add_multiplicities(std::vector<int> a, const std::vector<int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

}  // namespace

QuotientHom::QuotientHom(const IndecCatalog& catalog, const Subcategory& w, const Representation& x,
                         const Representation& y)
    : x_(x), y_(y) {
  auto hom = hom_basis(x, y);
  const std::size_t rows = flat_size(x, y);
  Matrix ideal = ideal_subspace(catalog, w, x, y);
  ideal_dim_ = ideal.cols();
  Matrix both = Matrix::hstack({ideal, flats(hom, rows)}, rows);
  for (auto c : independent_columns(both))
    if (c >= ideal.cols()) basis_.push_back(hom[c - ideal.cols()]);
  full_ = CoordinateMap(Matrix::hstack({flats(basis_, rows), ideal}, rows));
}

Matrix QuotientHom::coordinates(const Morphism& f) const {
  Matrix all = full_.coordinates(f.flatten());
  return all.block(0, 0, basis_.size(), 1);
}

Morphism QuotientHom::lift(const Matrix& coords) const {
  Morphism out = Morphism::zero(x_, y_);
  for (std::size_t k = 0; k < basis_.size(); ++k)
    if (sgn(coords(k, 0)) != 0) out = out + coords(k, 0) * basis_[k];
  return out;
}

HeartContext::HeartContext(CatalogPtr catalog, Twin twin) : catalog_(std::move(catalog)), twin_(std::move(twin)) {
  const IndecCatalog& cat = *catalog_;
  const std::size_t n = cat.size();
  b_minus_ = Subcategory(n);
  b_plus_ = Subcategory(n);
  minus_.resize(n);
  plus_.resize(n);
  for (int id = 0; id < static_cast<int>(n); ++id) {
    const Representation& m = cat.module(id);
    Approximation left = approximation(cat, twin_.W(), m, Side::left);
    if (left.map.is_injective()) {
      Morphism c = cokernel(left.map);
      auto mult = cat.locate(c.target());
      if (twin_.S().contains_all(mult)) {
        b_minus_.insert(id);
        minus_[id] = MinusWitness{std::move(left), c, mult};
      }
    }
    Approximation right = approximation(cat, twin_.W(), m, Side::right);
    if (right.map.is_surjective()) {
      Morphism k = kernel(right.map);
      auto mult = cat.locate(k.source());
      if (twin_.V().contains_all(mult)) {
        b_plus_.insert(id);
        plus_[id] = PlusWitness{std::move(right), k, mult};
      }
    }
  }
  heart_ = b_minus_ & b_plus_;
  heart_indecs_ = (heart_ - twin_.W()).ids();
}

HeartObject HeartContext::object(const std::vector<int>& summands) const {
  return HeartObject{summands, catalog_->realize(summands)};
}

HeartMorphism HeartContext::identity(const HeartObject& x) const { return {x, x, Morphism::identity(x.module())}; }

HeartMorphism HeartContext::zero(const HeartObject& x, const HeartObject& y) const {
  return {x, y, Morphism::zero(x.module(), y.module())};
}

HeartMorphism HeartContext::compose(const HeartMorphism& g, const HeartMorphism& f) const {
  return {f.source, g.target, g.map * f.map};
}

HeartMorphism HeartContext::add(const HeartMorphism& a, const HeartMorphism& b, const Rational& s) const {
  return {a.source, a.target, a.map + s * b.map};
}

const QuotientHom& HeartContext::quotient_hom(const HeartObject& x, const HeartObject& y) const {
  auto k = std::make_pair(x.summands, y.summands);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = quotient_cache_.find(k);
    if (it != quotient_cache_.end()) return *it->second;
  }
  auto q = std::make_shared<QuotientHom>(*catalog_, twin_.W(), x.module(), y.module());
  std::lock_guard<std::mutex> lock(mutex_);
  return *quotient_cache_.emplace(k, q).first->second;
}

Matrix HeartContext::coordinates(const HeartMorphism& f) const {
  return quotient_hom(f.source, f.target).coordinates(f.map);
}

bool HeartContext::is_zero(const HeartMorphism& f) const { return coordinates(f).is_zero(); }

bool HeartContext::equal(const HeartMorphism& a, const HeartMorphism& b) const {
  return coordinates(a) == coordinates(b);
}

Matrix HeartContext::precompose_matrix(const HeartMorphism& f, const HeartObject& z) const {
  const QuotientHom& yz = quotient_hom(f.target, z);
  const QuotientHom& xz = quotient_hom(f.source, z);
  Matrix out(xz.dimension(), yz.dimension());
  for (std::size_t k = 0; k < yz.dimension(); ++k) out.set_block(0, k, xz.coordinates(yz.basis()[k] * f.map));
  return out;
}

Matrix HeartContext::postcompose_matrix(const HeartMorphism& f, const HeartObject& z) const {
  const QuotientHom& zx = quotient_hom(z, f.source);
  const QuotientHom& zy = quotient_hom(z, f.target);
  Matrix out(zy.dimension(), zx.dimension());
  for (std::size_t k = 0; k < zx.dimension(); ++k) out.set_block(0, k, zy.coordinates(f.map * zx.basis()[k]));
  return out;
}

Approximation HeartContext::assemble(const std::vector<const Approximation*>& parts, const HeartObject& x,
                                     Side side) const {
  const AlgebraPtr& alg = catalog_->algebra();
  Approximation out;
  out.side = side;
  out.minimal = true;
  std::vector<Representation> others;
  std::vector<Morphism> maps;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const Approximation& p = *parts[k];
    others.push_back(p.object());
    maps.push_back(p.map);
    for (std::size_t j = 0; j < p.summands.size(); ++j) {
      out.summands.push_back(p.summands[j]);
      out.components.push_back(side == Side::left ? p.components[j] * x.sum.projections[k]
                                                  : x.sum.injections[k] * p.components[j]);
    }
  }
  DirectSum other = direct_sum(alg, others);
  out.map = side == Side::left ? sum_of(x.sum, other, maps) : sum_of(other, x.sum, maps);
  return out;
}

MinusWitness HeartContext::minus_witness_of(const HeartObject& x) const {
  std::vector<const Approximation*> parts;
  std::vector<int> mult(catalog_->size(), 0);
  for (int id : x.summands) {
    if (!minus_[id]) throw Error(ErrorCode::NotInBMinus, catalog_->label(id) + " has no W-inflation with cokernel in S");
    parts.push_back(&minus_[id]->approx);
    mult = add_multiplicities(mult, minus_[id]->cokernel_multiplicities);
  }
  Approximation a = assemble(parts, x, Side::left);
  Morphism c = cokernel(a.map);
  return MinusWitness{std::move(a), c, mult};
}

PlusWitness HeartContext::plus_witness_of(const HeartObject& x) const {
  std::vector<const Approximation*> parts;
  std::vector<int> mult(catalog_->size(), 0);
  for (int id : x.summands) {
    if (!plus_[id]) throw Error(ErrorCode::NotInBPlus, catalog_->label(id) + " has no W-deflation with kernel in V");
    parts.push_back(&plus_[id]->approx);
    mult = add_multiplicities(mult, plus_[id]->kernel_multiplicities);
  }
  Approximation a = assemble(parts, x, Side::right);
  Morphism k = kernel(a.map);
  return PlusWitness{std::move(a), k, mult};
}

PlusData HeartContext::plus(const Representation& b) const {
  PlusData out;
  out.cover = approximation(*catalog_, twin_.U(), b, Side::right);
  HeartObject ub = object(out.cover.summands);
  std::vector<const Approximation*> parts;
  for (int id : ub.summands) parts.push_back(&twin_.first().witnesses[id].left);
  out.t_approx = assemble(parts, ub, Side::left);
  Square po = pushout(out.cover.map, out.t_approx.map);
  out.b_plus = po.first;
  out.from_t = po.second;
  out.cokernel = heartlab::cokernel(out.b_plus);
  return out;
}

MinusData HeartContext::minus(const Representation& b) const {
  MinusData out;
  out.envelope = approximation(*catalog_, twin_.T(), b, Side::left);
  HeartObject tb = object(out.envelope.summands);
  std::vector<const Approximation*> parts;
  for (int id : tb.summands) parts.push_back(&twin_.second().witnesses[id].right);
  out.t_cover = assemble(parts, tb, Side::right).map;
  Square pb = pullback(out.envelope.map, out.t_cover);
  out.b_minus = pb.first;
  out.to_u = pb.second;
  out.kernel = heartlab::kernel(out.b_minus);
  return out;
}

ConeData HeartContext::cone(const HeartMorphism& f) const {
  ConeData out;
  out.witness = minus_witness_of(f.source);
  Square po = pushout(f.map, out.witness.approx.map);
  out.c_f = po.first;
  out.from_w = po.second;
  return out;
}

FiberData HeartContext::fiber(const HeartMorphism& f) const {
  FiberData out;
  out.witness = plus_witness_of(f.target);
  Square pb = pullback(f.map, out.witness.approx.map);
  out.k_f = pb.first;
  out.to_w = pb.second;
  return out;
}

HeartMorphism HeartContext::normalize_target(const HeartObject& source, const Morphism& f) const {
  Decomposition d = catalog_->decompose(f.target());
  DirectSum all = catalog_->realize(d.summands);
  std::vector<int> kept;
  std::vector<Morphism> proj;
  for (std::size_t i = 0; i < d.summands.size(); ++i) {
    if (twin_.W().contains(d.summands[i])) continue;
    if (!heart_.contains(d.summands[i]))
      throw Error(ErrorCode::HypothesisNotMet, "construction left the heart at " + catalog_->label(d.summands[i]));
    kept.push_back(d.summands[i]);
    proj.push_back(all.projections[i]);
  }
  HeartObject y = object(kept);
  Morphism p = to_components(all.sum, y.sum, proj);
  return {source, y, p * (*d.iso.inverse()) * f};
}

HeartMorphism HeartContext::normalize_source(const HeartObject& target, const Morphism& f) const {
  Decomposition d = catalog_->decompose(f.source());
  DirectSum all = catalog_->realize(d.summands);
  std::vector<int> kept;
  std::vector<Morphism> inj;
  for (std::size_t i = 0; i < d.summands.size(); ++i) {
    if (twin_.W().contains(d.summands[i])) continue;
    if (!heart_.contains(d.summands[i]))
      throw Error(ErrorCode::HypothesisNotMet, "construction left the heart at " + catalog_->label(d.summands[i]));
    kept.push_back(d.summands[i]);
    inj.push_back(all.injections[i]);
  }
  HeartObject x = object(kept);
  Morphism i = from_components(x.sum, all.sum, inj);
  return {x, target, f * d.iso * i};
}

std::string HeartContext::key(const HeartMorphism& f) const {
  std::ostringstream os;
  for (int s : f.source.summands) os << s << ',';
  os << '>';
  for (int s : f.target.summands) os << s << ',';
  os << ':' << coordinates(f).str();
  return os.str();
}

HeartMorphism HeartContext::heart_cokernel(const HeartMorphism& f) const {
  std::string k = key(f);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cokernel_cache_.find(k);
    if (it != cokernel_cache_.end()) return it->second;
  }
  ConeData c = cone(f);
  PlusData p = plus(c.c_f.target());
  HeartMorphism q = normalize_target(f.target, p.b_plus * c.c_f);
  std::lock_guard<std::mutex> lock(mutex_);
  cokernel_cache_.emplace(k, q);
  return q;
}

HeartMorphism HeartContext::heart_kernel(const HeartMorphism& f) const {
  std::string k = key(f);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = kernel_cache_.find(k);
    if (it != kernel_cache_.end()) return it->second;
  }
  FiberData fb = fiber(f);
  MinusData m = minus(fb.k_f.source());
  HeartMorphism out = normalize_source(f.source, fb.k_f * m.b_minus);
  std::lock_guard<std::mutex> lock(mutex_);
  kernel_cache_.emplace(k, out);
  return out;
}

bool HeartContext::verify_cokernel(const HeartMorphism& f, const HeartMorphism& q) const {
  if (!is_zero(compose(q, f))) return false;
  for (int z : heart_indecs_) {
    HeartObject zo = object({z});
    Matrix pq = precompose_matrix(q, zo);
    Matrix pf = precompose_matrix(f, zo);
    std::size_t r = rank(pq);
    if (r != pq.cols() || r != pf.cols() - rank(pf)) return false;
  }
  return true;
}

bool HeartContext::verify_kernel(const HeartMorphism& f, const HeartMorphism& k) const {
  if (!is_zero(compose(f, k))) return false;
  for (int z : heart_indecs_) {
    HeartObject zo = object({z});
    Matrix mk = postcompose_matrix(k, zo);
    Matrix mf = postcompose_matrix(f, zo);
    std::size_t r = rank(mk);
    if (r != mk.cols() || r != mf.cols() - rank(mf)) return false;
  }
  return true;
}

std::optional<HeartMorphism> HeartContext::inverse(const HeartMorphism& f) const {
  const QuotientHom& yx = quotient_hom(f.target, f.source);
  Matrix m = postcompose_matrix(f, f.target);
  auto c = solve(m, coordinates(identity(f.target)));
  if (!c) return std::nullopt;
  HeartMorphism g{f.target, f.source, yx.lift(*c)};
  if (!equal(compose(g, f), identity(f.source))) return std::nullopt;
  return g;
}

bool HeartContext::epi_direct(const HeartMorphism& f) const {
  for (int z : heart_indecs_) {
    Matrix p = precompose_matrix(f, object({z}));
    if (rank(p) != p.cols()) return false;
  }
  return true;
}

bool HeartContext::mono_direct(const HeartMorphism& f) const {
  for (int z : heart_indecs_) {
    Matrix p = postcompose_matrix(f, object({z}));
    if (rank(p) != p.cols()) return false;
  }
  return true;
}

bool HeartContext::is_cokernel(const HeartMorphism& f) const {
  HeartMorphism k = heart_kernel(f);
  HeartMorphism q = heart_cokernel(k);
  const QuotientHom& qy = quotient_hom(q.target, f.target);
  auto c = solve(precompose_matrix(q, f.target), coordinates(f));
  if (!c) return false;
  return is_iso({q.target, f.target, qy.lift(*c)});
}

bool HeartContext::is_kernel(const HeartMorphism& f) const {
  HeartMorphism c = heart_cokernel(f);
  HeartMorphism k = heart_kernel(c);
  const QuotientHom& xk = quotient_hom(f.source, k.source);
  auto x = solve(postcompose_matrix(k, f.source), coordinates(f));
  if (!x) return false;
  return is_iso({f.source, k.source, xk.lift(*x)});
}

Classification HeartContext::classify(const HeartMorphism& f) const {
  Classification out;
  ConeData c = cone(f);
  out.epi = twin_.U().contains_all(catalog_->locate(c.c_f.target()));
  FiberData k = fiber(f);
  out.mono = twin_.T().contains_all(catalog_->locate(k.k_f.source()));
  out.epi_direct = epi_direct(f);
  out.mono_direct = mono_direct(f);
  out.regular = out.epi && out.mono;
  out.iso = is_iso(f);
  out.is_cokernel = is_cokernel(f);
  out.is_kernel = is_kernel(f);
  return out;
}

namespace {

struct Block {
  HeartObject both;
  Morphism to_first, to_second;      // projections
  Morphism from_first, from_second;  // injections
};

Block block_of(const HeartContext& ctx, const HeartObject& b, const HeartObject& c) {
  std::vector<int> ids = b.summands;
  ids.insert(ids.end(), c.summands.begin(), c.summands.end());
  Block out{ctx.object(ids), {}, {}, {}, {}};
  const DirectSum& s = out.both.sum;
  out.to_first = Morphism::zero(s.sum, b.module());
  out.from_first = Morphism::zero(b.module(), s.sum);
  out.to_second = Morphism::zero(s.sum, c.module());
  out.from_second = Morphism::zero(c.module(), s.sum);
  for (std::size_t k = 0; k < b.summands.size(); ++k) {
    out.to_first = out.to_first + b.sum.injections[k] * s.projections[k];
    out.from_first = out.from_first + s.injections[k] * b.sum.projections[k];
  }
  for (std::size_t k = 0; k < c.summands.size(); ++k) {
    std::size_t j = b.summands.size() + k;
    out.to_second = out.to_second + c.sum.injections[k] * s.projections[j];
    out.from_second = out.from_second + s.injections[j] * c.sum.projections[k];
  }
  return out;
}

}  // namespace

std::pair<HeartMorphism, HeartMorphism> HeartContext::heart_pullback(const HeartMorphism& g,
                                                                     const HeartMorphism& d) const {
  Block bc = block_of(*this, g.source, d.source);
  HeartMorphism h{bc.both, g.target, g.map * bc.to_first - d.map * bc.to_second};
  HeartMorphism k = heart_kernel(h);
  return {HeartMorphism{k.source, g.source, bc.to_first * k.map}, HeartMorphism{k.source, d.source, bc.to_second * k.map}};
}

std::pair<HeartMorphism, HeartMorphism> HeartContext::heart_pushout(const HeartMorphism& a,
                                                                    const HeartMorphism& b) const {
  Block bc = block_of(*this, a.target, b.target);
  HeartMorphism h{a.source, bc.both, bc.from_first * a.map - bc.from_second * b.map};
  HeartMorphism q = heart_cokernel(h);
  return {HeartMorphism{a.target, q.target, q.map * bc.from_first},
          HeartMorphism{b.target, q.target, q.map * bc.from_second}};
}

Morphism HeartContext::deflation_replacement(const HeartMorphism& f) const {
  PlusWitness w = plus_witness_of(f.target);
  DirectSum s = direct_sum(catalog_->algebra(), {f.source.module(), w.approx.object()});
  return from_components(s, f.target.module(), {f.map, -w.approx.map});
}

Morphism HeartContext::inflation_replacement(const HeartMorphism& f) const {
  MinusWitness w = minus_witness_of(f.source);
  DirectSum s = direct_sum(catalog_->algebra(), {f.target.module(), w.approx.object()});
  return to_components(f.source.module(), s, {f.map, -w.approx.map});
}

std::vector<HeartObject> HeartContext::test_objects(int bound) const {
  std::vector<HeartObject> out;
  std::vector<int> current;
  std::function<void(std::size_t)> go = [&](std::size_t start) {
    if (!current.empty()) out.push_back(object(current));
    if (static_cast<int>(current.size()) == bound) return;
    for (std::size_t i = start; i < heart_indecs_.size(); ++i) {
      current.push_back(heart_indecs_[i]);
      go(i);
      current.pop_back();
    }
  };
  go(0);
  return out;
}

std::vector<HeartMorphism> HeartContext::test_morphisms(const HeartObject& x, const HeartObject& y) const {
  const QuotientHom& q = quotient_hom(x, y);
  std::vector<HeartMorphism> out;
  const auto& b = q.basis();
  for (auto& f : b) out.push_back({x, y, f});
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      out.push_back({x, y, b[i] + b[j]});
      out.push_back({x, y, b[i] - b[j]});
    }
  out.push_back(zero(x, y));
  return out;
}

namespace {

// Runs fn(i) for i in [0, n) on `threads` workers; fn must be safe to call concurrently.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < n;) fn(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace

HarnessResult HeartContext::property_harness(Property p, int bound, unsigned threads) const {
  HarnessResult r;
  r.property = p;
  r.bound = bound;
  auto objects = test_objects(bound);
  r.objects = objects.size();
  std::vector<HeartMorphism> all;
  for (auto& x : objects)
    for (auto& y : objects)
      for (auto& f : test_morphisms(x, y)) all.push_back(f);
  r.morphisms = all.size();

  auto describe = [&](const HeartMorphism& f) {
    std::ostringstream os;
    os << label(f.source) << " -> " << label(f.target) << " class " << coordinates(f).transpose().str();
    return os.str();
  };

  std::mutex memo_mutex;
  std::map<std::string, bool> epi_memo, mono_memo, coker_memo, ker_memo;
  auto memo = [&](std::map<std::string, bool>& m, const HeartMorphism& f, auto fn) {
    std::string k = key(f);
    {
      std::lock_guard<std::mutex> lock(memo_mutex);
      auto it = m.find(k);
      if (it != m.end()) return it->second;
    }
    bool v = fn(f);
    std::lock_guard<std::mutex> lock(memo_mutex);
    m.emplace(k, v);
    return v;
  };
  auto is_epi = [&](const HeartMorphism& f) { return memo(epi_memo, f, [&](auto& g) { return epi_direct(g); }); };
  auto is_mono = [&](const HeartMorphism& f) { return memo(mono_memo, f, [&](auto& g) { return mono_direct(g); }); };
  auto is_coker = [&](const HeartMorphism& f) { return memo(coker_memo, f, [&](auto& g) { return is_cokernel(g); }); };
  auto is_ker = [&](const HeartMorphism& f) { return memo(ker_memo, f, [&](auto& g) { return is_kernel(g); }); };

  // One slot per outer index so the reported counterexample does not depend on scheduling.
  struct Slot {
    std::size_t checks = 0;
    std::size_t mismatches = 0;
    std::string failure;
  };
  const bool squares = p != Property::preabelian && p != Property::abelian;
  std::vector<Slot> slots(squares ? 2 * all.size() : all.size());

  parallel_for(slots.size(), threads, [&](std::size_t i) {
    Slot& s = slots[i];
    auto fail = [&](const std::string& what) {
      if (s.failure.empty()) s.failure = what;
    };
    if (!squares) {
      const HeartMorphism& f = all[i];
      ++s.checks;
      if (!verify_cokernel(f, heart_cokernel(f))) fail("cokernel of " + describe(f) + " fails its universal property");
      if (!verify_kernel(f, heart_kernel(f))) fail("kernel of " + describe(f) + " fails its universal property");
      if (p == Property::abelian) {
        Classification c = classify(f);
        if (c.epi != c.epi_direct || c.mono != c.mono_direct) ++s.mismatches;
        if (c.mono_direct && !c.is_kernel) fail("monomorphism " + describe(f) + " is not a kernel");
        if (c.epi_direct && !c.is_cokernel) fail("epimorphism " + describe(f) + " is not a cokernel");
      }
      return;
    }
    if (i < all.size()) {
      // Pullback squares over a common target.
      const HeartMorphism& d = all[i];
      bool need = p == Property::integral ? is_epi(d) : is_coker(d);
      if (!need) return;
      for (auto& g : all) {
        if (g.target.summands != d.target.summands) continue;
        ++s.checks;
        auto [alpha, beta] = heart_pullback(g, d);
        if (!equal(compose(g, alpha), compose(d, beta)))
          fail("pullback square of " + describe(g) + " and " + describe(d) + " does not commute");
        bool ok = p == Property::almost_abelian ? is_coker(alpha) : is_epi(alpha);
        if (!ok)
          fail(std::string("pullback of ") + (p == Property::integral ? "epimorphism " : "cokernel ") + describe(d) +
               " along " + describe(g) + " gives " + describe(alpha));
      }
      return;
    }
    // Pushout squares over a common source.
    const HeartMorphism& a = all[i - all.size()];
    bool need = p == Property::integral ? is_mono(a) : is_ker(a);
    if (!need) return;
    for (auto& b : all) {
      if (a.source.summands != b.source.summands) continue;
      ++s.checks;
      auto [gamma, delta] = heart_pushout(a, b);
      if (!equal(compose(gamma, a), compose(delta, b)))
        fail("pushout square of " + describe(a) + " and " + describe(b) + " does not commute");
      bool ok = p == Property::almost_abelian ? is_ker(delta) : is_mono(delta);
      if (!ok)
        fail(std::string("pushout of ") + (p == Property::integral ? "monomorphism " : "kernel ") + describe(a) +
             " along " + describe(b) + " gives " + describe(delta));
    }
  });

  for (auto& s : slots) {
    r.checks += s.checks;
    r.criterion_mismatches += s.mismatches;
    if (!s.failure.empty() && r.passed) {
      r.passed = false;
      r.counterexample = s.failure;
    }
  }
  return r;
}

SufficientConditions HeartContext::sufficient_conditions() const {
  const IndecCatalog& cat = *catalog_;
  SufficientConditions s;
  s.u_in_s_star_t = true;
  for (int u : twin_.U().ids())
    if (!star_membership(cat, u, twin_.S(), twin_.T()).member) s.u_in_s_star_t = false;
  s.t_in_u_star_v = true;
  for (int t : twin_.T().ids())
    if (!star_membership(cat, t, twin_.U(), twin_.V()).member) s.t_in_u_star_v = false;
  s.projectives_in_w = cat.projectives().subset_of(twin_.W());
  s.injectives_in_w = cat.injectives().subset_of(twin_.W());
  s.integral_condition = (s.u_in_s_star_t && s.projectives_in_w) || (s.t_in_u_star_v && s.injectives_in_w);
  s.u_in_t = twin_.U().subset_of(twin_.T());
  s.t_in_u = twin_.T().subset_of(twin_.U());
  s.almost_abelian_condition = s.u_in_t || s.t_in_u;
  s.first_hereditary = is_hereditary(cat, twin_.first()).hereditary;
  s.second_hereditary = is_hereditary(cat, twin_.second()).hereditary;
  s.zero_heart_condition = s.first_hereditary || s.second_hereditary;
  s.degenerate = twin_.degenerate();
  return s;
}

HeartMorphism HeartContext::projective_cover_map(int b) const {
  if (!minus_[b]) throw Error(ErrorCode::NotInBMinus, catalog_->label(b));
  const MinusWitness& w = *minus_[b];
  Syzygy s = syzygy(w.cokernel.target());
  auto lift = factor_through(w.cokernel, s.cover.map);
  if (!lift) throw Error(ErrorCode::HypothesisNotMet, "projective cover does not lift");
  Morphism into_b = lift_through_mono(w.approx.map, *lift * s.inclusion);
  return normalize_source(object({b}), into_b);
}

HeartMorphism HeartContext::injective_envelope_map(int b) const {
  if (!plus_[b]) throw Error(ErrorCode::NotInBPlus, catalog_->label(b));
  const PlusWitness& w = *plus_[b];
  Cosyzygy c = cosyzygy(w.kernel.source());
  auto ext = extend_along(w.kernel, c.envelope.map);
  if (!ext) throw Error(ErrorCode::HypothesisNotMet, "injective envelope does not extend");
  Morphism out_of_b = descend_through_epi(w.approx.map, c.projection * *ext);
  return normalize_target(object({b}), out_of_b);
}

namespace {

int max_member_dim(const IndecCatalog& cat, const Subcategory& s) {
  int m = 0;
  for (int id : s.ids()) m = std::max(m, cat.module(id).total_dim());
  return m;
}

}  // namespace

ProjectiveReport HeartContext::heart_projectives() const {
  const IndecCatalog& cat = *catalog_;
  if (!twin_.U().subset_of(twin_.T()))
    throw Error(ErrorCode::HypothesisNotMet, "heart projectives need U inside T");
  ProjectiveReport r;
  r.hypothesis = true;
  Subcategory omega(cat.size());
  for (int s : twin_.S().ids())
    for (int id : expand(cat.syzygy_of(s)))
      if (!twin_.W().contains(id)) omega.insert(id);
  r.omega = omega.ids();
  for (int id : r.omega)
    if (heart_.contains(id)) r.objects.push_back(id);
  for (int b : heart_indecs_) {
    HeartMorphism m = projective_cover_map(b);
    r.covers.push_back({b, m.source.summands, epi_direct(m), mono_direct(m)});
  }
  r.search_bound = 2 * max_member_dim(cat, twin_.S());
  r.enough = true;
  r.enough_alternative = true;
  for (int b : (heart_ - twin_.U()).ids()) {
    r.checked.push_back(b);
    if (!search_sequences(cat, cat.module(b), true, twin_.S(), twin_.S(), r.search_bound).found) {
      r.failed.push_back(b);
      r.enough = false;
    }
  }
  for (int b : (heart_ - twin_.W()).ids()) {
    r.checked_alternative.push_back(b);
    if (!search_sequences(cat, cat.module(b), true, twin_.S(), twin_.S(), r.search_bound).found)
      r.enough_alternative = false;
  }
  return r;
}

ProjectiveReport HeartContext::heart_injectives() const {
  const IndecCatalog& cat = *catalog_;
  if (!twin_.T().subset_of(twin_.U()))
    throw Error(ErrorCode::HypothesisNotMet, "heart injectives need T inside U");
  ProjectiveReport r;
  r.hypothesis = true;
  Subcategory omega(cat.size());
  for (int v : twin_.V().ids())
    for (int id : expand(cat.cosyzygy_of(v)))
      if (!twin_.W().contains(id)) omega.insert(id);
  r.omega = omega.ids();
  for (int id : r.omega)
    if (heart_.contains(id)) r.objects.push_back(id);
  for (int b : heart_indecs_) {
    HeartMorphism m = injective_envelope_map(b);
    r.covers.push_back({b, m.target.summands, epi_direct(m), mono_direct(m)});
  }
  r.search_bound = 2 * max_member_dim(cat, twin_.V());
  r.enough = true;
  r.enough_alternative = true;
  for (int b : (heart_ - twin_.T()).ids()) {
    r.checked.push_back(b);
    if (!search_sequences(cat, cat.module(b), false, twin_.V(), twin_.V(), r.search_bound).found) {
      r.failed.push_back(b);
      r.enough = false;
    }
  }
  for (int b : (heart_ - twin_.W()).ids()) {
    r.checked_alternative.push_back(b);
    if (!search_sequences(cat, cat.module(b), false, twin_.V(), twin_.V(), r.search_bound).found)
      r.enough_alternative = false;
  }
  return r;
}

std::string HeartContext::label(const HeartObject& x) const { return join_labels(*catalog_, x.summands); }

std::string HeartContext::to_dot() const {
  std::ostringstream os;
  os << "digraph heart {\n";
  for (int id : heart_indecs_) os << "  \"" << catalog_->label(id) << "\";\n";
  for (int a : heart_indecs_)
    for (int b : heart_indecs_) {
      if (a == b) continue;
      std::size_t k = quotient_hom(object({a}), object({b})).dimension();
      if (k == 0) continue;
      if (k > 3) {
        os << "  \"" << catalog_->label(a) << "\" -> \"" << catalog_->label(b) << "\" [label=\"×" << k << "\"];\n";
        continue;
      }
      for (std::size_t i = 0; i < k; ++i)
        os << "  \"" << catalog_->label(a) << "\" -> \"" << catalog_->label(b) << "\";\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace heartlab
