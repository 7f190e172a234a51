#pragma once

#include <memory>
#include <string>
#include <vector>

namespace heartlab {

struct ArrowSpec {
  std::string name;
  int source = 0;  // 0-based
  int target = 0;
};

// Raw presentation as read from disk. Relations list arrow names in
// traversal order.
struct AlgebraPresentation {
  int vertex_count = 0;
  std::vector<ArrowSpec> arrows;
  std::vector<std::vector<std::string>> relations;

  bool operator==(const AlgebraPresentation&) const;
};

struct Path {
  int start = 0;
  int end = 0;
  std::vector<int> arrows;  // traversal order
  int length() const { return static_cast<int>(arrows.size()); }
};

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

// Bounded quiver algebra with monomial relations.
class Algebra {
 public:
  // validate_algebra: throws NonAdmissible or BadRelation.
  static AlgebraPtr validate(const AlgebraPresentation& presentation);

  const AlgebraPresentation& presentation() const { return presentation_; }
  int vertex_count() const { return presentation_.vertex_count; }
  int arrow_count() const { return static_cast<int>(presentation_.arrows.size()); }
  const ArrowSpec& arrow(int a) const { return presentation_.arrows[a]; }
  const std::vector<std::vector<int>>& relations() const { return relations_; }
  int arrow_index(const std::string& name) const;

  // All nonzero paths, trivial ones included; grouped by start vertex then length.
  const std::vector<Path>& path_basis() const { return paths_; }
  std::vector<const Path*> paths_from(int v) const;
  std::vector<const Path*> paths_to(int v) const;
  bool is_nonzero(const std::vector<int>& arrows) const;
  int max_path_length() const;

  std::vector<int> out_arrows(int v) const;
  std::vector<int> in_arrows(int v) const;
  bool is_nakayama() const;
  bool is_linear_nakayama() const;

  AlgebraPtr opposite() const;
  bool same_as(const Algebra& other) const { return presentation_ == other.presentation_; }

 private:
  AlgebraPresentation presentation_;
  std::vector<std::vector<int>> relations_;
  std::vector<Path> paths_;
};

}  // namespace heartlab
