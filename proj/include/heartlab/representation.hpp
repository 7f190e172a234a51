#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "heartlab/algebra.hpp"
#include "heartlab/matrix.hpp"

namespace heartlab {

// Finite-dimensional representation: a space per vertex, a matrix per arrow
// (target dim x source dim). Immutable; copies share storage.
class Representation {
 public:
  Representation() = default;
  Representation(AlgebraPtr algebra, std::vector<int> dims, std::vector<Matrix> arrow_maps);
  static Representation zero(AlgebraPtr algebra);

  const Algebra& algebra() const { return *data_->algebra; }
  const AlgebraPtr& algebra_ptr() const { return data_->algebra; }
  const std::vector<int>& dims() const { return data_->dims; }
  int dim(int v) const { return data_->dims[v]; }
  int total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
  const Matrix& arrow_map(int a) const { return data_->maps[a]; }
  // Product of arrow maps along a path in traversal order.
  Matrix path_map(const std::vector<int>& arrows, int start) const;
  // Content address: equal keys mean equal data.
  std::string key() const;

 private:
  struct Data {
    AlgebraPtr algebra;
    std::vector<int> dims;
    std::vector<Matrix> maps;
  };
  std::shared_ptr<const Data> data_;
};

bool operator==(const Representation& a, const Representation& b);

class Morphism {
 public:
  Morphism() = default;
  // Throws BadInput if a square fails to commute.
  Morphism(Representation source, Representation target, std::vector<Matrix> maps);
  static Morphism zero(const Representation& source, const Representation& target);
  static Morphism identity(const Representation& m);
  // Rebuilds from the concatenated row-major vertex blocks (column `col` of `flat`).
  static Morphism from_flat(const Representation& source, const Representation& target, const Matrix& flat,
                            std::size_t col = 0);

  const Representation& source() const { return source_; }
  const Representation& target() const { return target_; }
  const Matrix& map(int v) const { return maps_[v]; }
  const std::vector<Matrix>& maps() const { return maps_; }
  Matrix flatten() const;

  bool is_zero() const;
  bool is_injective() const;
  bool is_surjective() const;
  bool is_iso() const;
  std::optional<Morphism> inverse() const;

  friend Morphism operator*(const Morphism& g, const Morphism& f);  // g after f
  friend Morphism operator+(const Morphism& a, const Morphism& b);
  friend Morphism operator-(const Morphism& a, const Morphism& b);
  friend Morphism operator-(const Morphism& a);
  friend Morphism operator*(const Rational& s, const Morphism& f);
  friend bool operator==(const Morphism& a, const Morphism& b);

 private:
  struct Unchecked {};
  Morphism(Representation source, Representation target, std::vector<Matrix> maps, Unchecked);
  Representation source_;
  Representation target_;
  std::vector<Matrix> maps_;
};

std::size_t flat_size(const Representation& source, const Representation& target);

struct ShortExactSequence {
  Morphism inflation;
  Morphism deflation;
  bool is_valid() const;
};

std::vector<Morphism> hom_basis(const Representation& source, const Representation& target);
std::size_t hom_dim(const Representation& source, const Representation& target);

// A hom space with coordinates relative to its basis.
class HomSpace {
 public:
  HomSpace() = default;
  HomSpace(Representation source, Representation target);
  const Representation& source() const { return source_; }
  const Representation& target() const { return target_; }
  const std::vector<Morphism>& basis() const { return basis_; }
  std::size_t dimension() const { return basis_.size(); }
  Matrix coordinates(const Morphism& f) const;
  Morphism element(const Matrix& coords, std::size_t col = 0) const;

 private:
  Representation source_, target_;
  std::vector<Morphism> basis_;
  CoordinateMap coords_;
};

struct Factorization {
  Morphism kernel;     // K -> M
  Morphism coimage;    // M -> Im
  Morphism image;      // Im -> N
  Morphism cokernel;   // N -> C
};

Morphism kernel(const Morphism& f);
Morphism cokernel(const Morphism& f);
Factorization factorization(const Morphism& f);

struct DirectSum {
  Representation sum;
  std::vector<Morphism> injections;
  std::vector<Morphism> projections;
};

DirectSum direct_sum(const AlgebraPtr& algebra, const std::vector<Representation>& parts);
// f_i : parts_i -> target assembled into sum -> target.
Morphism from_components(const DirectSum& source, const Representation& target, const std::vector<Morphism>& maps);
// f_i : source -> parts_i assembled into source -> sum.
Morphism to_components(const Representation& source, const DirectSum& target, const std::vector<Morphism>& maps);
// Block diagonal f_1 + ... + f_n between the two sums.
Morphism sum_of(const DirectSum& source, const DirectSum& target, const std::vector<Morphism>& maps);

// Pushout of (f : A -> B, g : A -> C): corner D with legs B -> D and C -> D.
// Pullback of (f : B -> D, g : C -> D): corner P with legs P -> B and P -> C.
struct Square {
  Representation corner;
  Morphism first;
  Morphism second;
};

Square pushout(const Morphism& f, const Morphism& g);
Square pullback(const Morphism& f, const Morphism& g);

// h with a * h == g (lift through a), or h with h * a == g (extend along a).
std::optional<Morphism> factor_through(const Morphism& a, const Morphism& g);
std::optional<Morphism> extend_along(const Morphism& a, const Morphism& g);
// Vertexwise solves for monic k (k * x == g) and epic c (x * c == g).
Morphism lift_through_mono(const Morphism& k, const Morphism& g);
Morphism descend_through_epi(const Morphism& c, const Morphism& g);

Representation projective_at(const AlgebraPtr& algebra, int v);
Representation injective_at(const AlgebraPtr& algebra, int v);
// Morphism P_v -> M sending the trivial path at v to the vector m in M_v.
Morphism morphism_from_projective(const Representation& m, int v, const Matrix& element);

struct Cover {
  Morphism map;              // P -> M (or M -> I)
  std::vector<int> vertices; // indecomposable summands P_v (or I_v) in order
};

Cover projective_cover(const Representation& m);
Cover injective_envelope(const Representation& m);
std::vector<int> top_dims(const Representation& m);
std::vector<int> socle_dims(const Representation& m);

struct Syzygy {
  Representation module;
  Morphism inclusion;  // Omega M -> P
  Cover cover;         // P -> M
};
struct Cosyzygy {
  Representation module;
  Morphism projection;  // I -> Omega^- M
  Cover envelope;       // M -> I
};

Syzygy syzygy(const Representation& m);
Cosyzygy cosyzygy(const Representation& m);

// D = Hom(-, Q): representation of the opposite algebra `target`.
Representation dual(const Representation& m, const AlgebraPtr& target);
Morphism dual(const Morphism& f, const AlgebraPtr& target);

}  // namespace heartlab
