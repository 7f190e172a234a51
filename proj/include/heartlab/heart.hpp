#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "heartlab/cotorsion.hpp"

namespace heartlab {

// Object of the heart: a direct sum of catalog entries in the listed order.
struct HeartObject {
  std::vector<int> summands;
  DirectSum sum;
  const Representation& module() const { return sum.sum; }
};

struct HeartMorphism {
  HeartObject source;
  HeartObject target;
  Morphism map;  // representative
};

// Hom(X, Y) modulo maps factoring through add W.
class QuotientHom {
 public:
  QuotientHom(const IndecCatalog& catalog, const Subcategory& w, const Representation& x, const Representation& y);
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<Morphism>& basis() const { return basis_; }
  std::size_t ideal_dimension() const { return ideal_dim_; }
  Matrix coordinates(const Morphism& f) const;  // dimension() x 1
  Morphism lift(const Matrix& coords) const;
  bool is_zero(const Morphism& f) const { return coordinates(f).is_zero(); }

 private:
  Representation x_, y_;
  std::vector<Morphism> basis_;
  std::size_t ideal_dim_ = 0;
  CoordinateMap full_;
};

// Sequences X -> W^X -> S^X (minus) and V_X -> W_X -> X (plus).
struct MinusWitness {
  Approximation approx;  // minimal left W-approximation
  Morphism cokernel;     // W^X -> S^X
  std::vector<int> cokernel_multiplicities;
};
struct PlusWitness {
  Approximation approx;  // minimal right W-approximation
  Morphism kernel;       // V_X -> W_X
  std::vector<int> kernel_multiplicities;
};

struct PlusData {
  Approximation cover;      // U_B -> B from the (U, V) pair
  Approximation t_approx;   // U_B -> T^U from the (S, T) pair
  Morphism b_plus;          // B -> B^+
  Morphism from_t;          // T^U -> B^+
  Morphism cokernel;        // B^+ -> coker b^+
};
struct MinusData {
  Approximation envelope;   // B -> T^B from the (S, T) pair
  Morphism t_cover;         // U_T -> T^B, minimal right U-approximation
  Morphism b_minus;         // B^- -> B
  Morphism to_u;            // B^- -> U_T
  Morphism kernel;          // ker b^- -> B^-
};
struct ConeData {
  Morphism c_f;       // B -> C_f
  Morphism from_w;    // W^A -> C_f
  MinusWitness witness;
};
struct FiberData {
  Morphism k_f;       // K_f -> A
  Morphism to_w;      // K_f -> W_B
  PlusWitness witness;
};

struct Classification {
  bool epi = false;            // C_f in U
  bool mono = false;           // K_f in T
  bool epi_direct = false;     // right cancellation against every heart indecomposable
  bool mono_direct = false;
  bool regular = false;
  bool iso = false;
  bool is_cokernel = false;
  bool is_kernel = false;
};

enum class Property { preabelian, abelian, semi_abelian, integral, almost_abelian };
const char* property_name(Property p);
std::optional<Property> parse_property(const std::string& name);

struct HarnessResult {
  Property property = Property::preabelian;
  int bound = 1;
  bool passed = true;
  std::size_t objects = 0;
  std::size_t morphisms = 0;
  std::size_t checks = 0;
  std::size_t criterion_mismatches = 0;  // epi/mono criteria disagreeing with cancellation
  std::string counterexample;
};

struct SufficientConditions {
  bool u_in_s_star_t = false;
  bool projectives_in_w = false;
  bool t_in_u_star_v = false;
  bool injectives_in_w = false;
  bool integral_condition = false;      // either half of the first criterion
  bool u_in_t = false;
  bool t_in_u = false;
  bool almost_abelian_condition = false;
  bool first_hereditary = false;
  bool second_hereditary = false;
  bool zero_heart_condition = false;
  bool degenerate = false;
};

struct ProjectiveReport {
  bool hypothesis = false;
  std::vector<int> omega;                // non-W summands of the syzygies (cosyzygies) of S (V)
  std::vector<int> objects;              // heart indecomposables among them
  struct Cover {
    int object;
    std::vector<int> source;             // summands of the covering object
    bool epi;
    bool mono;
  };
  std::vector<Cover> covers;
  std::vector<int> checked;              // indecomposables of the enough-objects condition
  std::vector<int> failed;
  bool enough = false;                   // within the search bound
  std::vector<int> checked_alternative;  // same test over H - W
  bool enough_alternative = false;
  int search_bound = 0;
};

class HeartContext {
 public:
  HeartContext(CatalogPtr catalog, Twin twin);

  const IndecCatalog& catalog() const { return *catalog_; }
  const CatalogPtr& catalog_ptr() const { return catalog_; }
  const Twin& twin() const { return twin_; }
  const Subcategory& b_minus() const { return b_minus_; }
  const Subcategory& b_plus() const { return b_plus_; }
  const Subcategory& heart() const { return heart_; }
  // H minus W: indecomposables that survive in the quotient.
  const std::vector<int>& heart_indecomposables() const { return heart_indecs_; }
  const MinusWitness& minus_witness(int id) const { return *minus_[id]; }
  const PlusWitness& plus_witness(int id) const { return *plus_[id]; }

  HeartObject object(const std::vector<int>& summands) const;
  HeartObject zero_object() const { return object({}); }
  HeartMorphism identity(const HeartObject& x) const;
  HeartMorphism zero(const HeartObject& x, const HeartObject& y) const;
  HeartMorphism compose(const HeartMorphism& g, const HeartMorphism& f) const;
  HeartMorphism add(const HeartMorphism& a, const HeartMorphism& b, const Rational& s = 1) const;

  const QuotientHom& quotient_hom(const HeartObject& x, const HeartObject& y) const;
  Matrix coordinates(const HeartMorphism& f) const;
  bool is_zero(const HeartMorphism& f) const;
  bool equal(const HeartMorphism& a, const HeartMorphism& b) const;
  // Columns: classes of b * f for b running over the quotient basis of Hom(Y, Z).
  Matrix precompose_matrix(const HeartMorphism& f, const HeartObject& z) const;
  // Columns: classes of f * b for b running over the quotient basis of Hom(Z, X).
  Matrix postcompose_matrix(const HeartMorphism& f, const HeartObject& z) const;

  // Witnesses for sums assembled from the cached per-entry data.
  MinusWitness minus_witness_of(const HeartObject& x) const;
  PlusWitness plus_witness_of(const HeartObject& x) const;

  PlusData plus(const Representation& b) const;
  MinusData minus(const Representation& b) const;
  ConeData cone(const HeartMorphism& f) const;    // source in B^-, else NotInBMinus
  FiberData fiber(const HeartMorphism& f) const;  // target in B^+, else NotInBPlus

  HeartMorphism heart_cokernel(const HeartMorphism& f) const;
  HeartMorphism heart_kernel(const HeartMorphism& f) const;
  // Strips W summands: f : Y -> M becomes Y -> M' with M' a heart object.
  HeartMorphism normalize_target(const HeartObject& source, const Morphism& f) const;
  HeartMorphism normalize_source(const HeartObject& target, const Morphism& f) const;

  bool verify_cokernel(const HeartMorphism& f, const HeartMorphism& q) const;
  bool verify_kernel(const HeartMorphism& f, const HeartMorphism& k) const;
  std::optional<HeartMorphism> inverse(const HeartMorphism& f) const;
  bool is_iso(const HeartMorphism& f) const { return inverse(f).has_value(); }
  bool epi_direct(const HeartMorphism& f) const;
  bool mono_direct(const HeartMorphism& f) const;
  bool is_cokernel(const HeartMorphism& f) const;
  bool is_kernel(const HeartMorphism& f) const;
  Classification classify(const HeartMorphism& f) const;

  // Pullback of (g : B -> D, d : C -> D): legs A -> B and A -> C.
  std::pair<HeartMorphism, HeartMorphism> heart_pullback(const HeartMorphism& g, const HeartMorphism& d) const;
  // Pushout of (a : A -> B, b : A -> C): legs B -> D and C -> D.
  std::pair<HeartMorphism, HeartMorphism> heart_pushout(const HeartMorphism& a, const HeartMorphism& b) const;

  // Replacements by genuine deflations / inflations of the exact category.
  Morphism deflation_replacement(const HeartMorphism& f) const;  // A + W_B -> B
  Morphism inflation_replacement(const HeartMorphism& f) const;  // A -> B + W^A

  // Test objects: multisets of heart indecomposables of size <= bound.
  std::vector<HeartObject> test_objects(int bound) const;
  // Quotient basis lifts, their pairwise sums and differences, and zero.
  std::vector<HeartMorphism> test_morphisms(const HeartObject& x, const HeartObject& y) const;
  HarnessResult property_harness(Property p, int bound = 1, unsigned threads = 1) const;

  SufficientConditions sufficient_conditions() const;
  ProjectiveReport heart_projectives() const;  // HypothesisNotMet unless U inside T
  ProjectiveReport heart_injectives() const;   // HypothesisNotMet unless T inside U
  // Epi from the syzygy object of B onto B (source normalized).
  HeartMorphism projective_cover_map(int b) const;
  HeartMorphism injective_envelope_map(int b) const;

  std::string label(const HeartObject& x) const;
  std::string to_dot() const;

 private:
  Approximation assemble(const std::vector<const Approximation*>& parts, const HeartObject& x, Side side) const;
  std::string key(const HeartMorphism& f) const;

  CatalogPtr catalog_;
  Twin twin_;
  Subcategory b_minus_, b_plus_, heart_;
  std::vector<int> heart_indecs_;
  std::vector<std::optional<MinusWitness>> minus_;
  std::vector<std::optional<PlusWitness>> plus_;

  mutable std::mutex mutex_;
  mutable std::map<std::pair<std::vector<int>, std::vector<int>>, std::shared_ptr<QuotientHom>> quotient_cache_;
  mutable std::map<std::string, HeartMorphism> cokernel_cache_, kernel_cache_;
};

std::string join_labels(const IndecCatalog& catalog, const std::vector<int>& ids);

}  // namespace heartlab
