#include "heartlab/algebra.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "heartlab/error.hpp"

namespace heartlab {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonAdmissible: return "NonAdmissible";
    case ErrorCode::BadRelation: return "BadRelation";
    case ErrorCode::BadInput: return "BadInput";
    case ErrorCode::BadClass: return "BadClass";
    case ErrorCode::IncompleteCatalog: return "IncompleteCatalog";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::DuplicateEntry: return "DuplicateEntry";
    case ErrorCode::NotIndecomposable: return "NotIndecomposable";
    case ErrorCode::NotTwin: return "NotTwin";
    case ErrorCode::MissingProjectives: return "MissingProjectives";
    case ErrorCode::NotExtensionClosed: return "NotExtensionClosed";
    case ErrorCode::NotInBMinus: return "NotInBMinus";
    case ErrorCode::NotInBPlus: return "NotInBPlus";
    case ErrorCode::HypothesisNotMet: return "HypothesisNotMet";
  }
  return "Error";
}

bool AlgebraPresentation::operator==(const AlgebraPresentation& o) const {
  if (vertex_count != o.vertex_count || arrows.size() != o.arrows.size() || relations != o.relations)
    return false;
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].name != o.arrows[i].name || arrows[i].source != o.arrows[i].source ||
        arrows[i].target != o.arrows[i].target)
      return false;
  return true;
}

namespace {

bool has_relation_suffix(const std::vector<int>& tail, const std::vector<std::vector<int>>& relations) {
  for (auto& r : relations) {
    if (r.size() > tail.size()) continue;
    if (std::equal(r.begin(), r.end(), tail.end() - static_cast<long>(r.size()))) return true;
  }
  return false;
}

}  // namespace

AlgebraPtr Algebra::validate(const AlgebraPresentation& p) {
  if (p.vertex_count < 1) throw Error(ErrorCode::NonAdmissible, "algebra needs at least one vertex");
  std::set<std::string> names;
  for (auto& a : p.arrows) {
    if (a.name.empty()) throw Error(ErrorCode::BadInput, "arrow without a name");
    if (!names.insert(a.name).second) throw Error(ErrorCode::BadInput, "duplicate arrow name " + a.name);
    if (a.source < 0 || a.source >= p.vertex_count || a.target < 0 || a.target >= p.vertex_count)
      throw Error(ErrorCode::BadInput, "arrow " + a.name + " has an endpoint out of range");
  }

  auto alg = std::make_shared<Algebra>();
  alg->presentation_ = p;
  for (auto& rel : p.relations) {
    if (rel.size() < 2) throw Error(ErrorCode::BadRelation, "relations must have length at least 2");
    std::vector<int> ids;
    for (auto& name : rel) {
      int a = alg->arrow_index(name);
      if (a < 0) throw Error(ErrorCode::BadRelation, "unknown arrow " + name);
      if (!ids.empty() && p.arrows[ids.back()].target != p.arrows[a].source)
        throw Error(ErrorCode::BadRelation, "relation is not a path at arrow " + name);
      ids.push_back(a);
    }
    alg->relations_.push_back(std::move(ids));
  }

  // Infinite nonzero paths show up as a cycle among tail states.
  std::size_t window = 0;
  for (auto& r : alg->relations_) window = std::max(window, r.size() - 1);
  using State = std::pair<int, std::vector<int>>;
  std::map<State, int> colour;  // 1 on stack, 2 done
  std::vector<std::pair<State, std::size_t>> stack;
  for (int v = 0; v < p.vertex_count; ++v) {
    State start{v, {}};
    if (colour.count(start)) continue;
    colour[start] = 1;
    stack.push_back({start, 0});
    while (!stack.empty()) {
      auto& [state, next] = stack.back();
      if (next >= p.arrows.size()) {
        colour[state] = 2;
        stack.pop_back();
        continue;
      }
      int a = static_cast<int>(next++);
      if (p.arrows[a].source != state.first) continue;
      std::vector<int> tail = state.second;
      tail.push_back(a);
      if (has_relation_suffix(tail, alg->relations_)) continue;
      if (tail.size() > window) tail.erase(tail.begin(), tail.end() - static_cast<long>(window));
      State s{p.arrows[a].target, tail};
      auto it = colour.find(s);
      if (it == colour.end()) {
        colour[s] = 1;
        stack.push_back({s, 0});
      } else if (it->second == 1) {
        throw Error(ErrorCode::NonAdmissible, "relations leave infinitely many nonzero paths");
      }
    }
  }

  for (int v = 0; v < p.vertex_count; ++v) {
    std::vector<Path> layer{Path{v, v, {}}};
    while (!layer.empty()) {
      std::vector<Path> next;
      for (auto& path : layer) {
        alg->paths_.push_back(path);
        for (int a = 0; a < alg->arrow_count(); ++a) {
          if (p.arrows[a].source != path.end) continue;
          Path q = path;
          q.arrows.push_back(a);
          q.end = p.arrows[a].target;
          if (!has_relation_suffix(q.arrows, alg->relations_)) next.push_back(std::move(q));
        }
      }
      layer = std::move(next);
    }
  }
  return alg;
}

int Algebra::arrow_index(const std::string& name) const {
  for (int a = 0; a < arrow_count(); ++a)
    if (presentation_.arrows[a].name == name) return a;
  return -1;
}

std::vector<const Path*> Algebra::paths_from(int v) const {
  std::vector<const Path*> out;
  for (auto& p : paths_)
    if (p.start == v) out.push_back(&p);
  return out;
}

std::vector<const Path*> Algebra::paths_to(int v) const {
  std::vector<const Path*> out;
  for (auto& p : paths_)
    if (p.end == v) out.push_back(&p);
  return out;
}

bool Algebra::is_nonzero(const std::vector<int>& arrows) const {
  for (std::size_t i = 1; i < arrows.size(); ++i)
    if (arrow(arrows[i - 1]).target != arrow(arrows[i]).source) return false;
  for (auto& r : relations_) {
    if (r.size() > arrows.size()) continue;
    if (std::search(arrows.begin(), arrows.end(), r.begin(), r.end()) != arrows.end()) return false;
  }
  return true;
}

int Algebra::max_path_length() const {
  int m = 0;
  for (auto& p : paths_) m = std::max(m, p.length());
  return m;
}

std::vector<int> Algebra::out_arrows(int v) const {
  std::vector<int> out;
  for (int a = 0; a < arrow_count(); ++a)
    if (arrow(a).source == v) out.push_back(a);
  return out;
}

std::vector<int> Algebra::in_arrows(int v) const {
  std::vector<int> out;
  for (int a = 0; a < arrow_count(); ++a)
    if (arrow(a).target == v) out.push_back(a);
  return out;
}

bool Algebra::is_nakayama() const {
  for (int v = 0; v < vertex_count(); ++v)
    if (out_arrows(v).size() > 1 || in_arrows(v).size() > 1) return false;
  return true;
}

bool Algebra::is_linear_nakayama() const {
  if (!is_nakayama()) return false;
  for (int v = 0; v < vertex_count(); ++v)
    if (in_arrows(v).empty()) return true;
  return false;
}

AlgebraPtr Algebra::opposite() const {
  AlgebraPresentation op;
  op.vertex_count = presentation_.vertex_count;
  for (auto& a : presentation_.arrows) op.arrows.push_back({a.name, a.target, a.source});
  for (auto rel : presentation_.relations) {
    std::reverse(rel.begin(), rel.end());
    op.relations.push_back(std::move(rel));
  }
  return validate(op);
}

}  // namespace heartlab
