#pragma once

#include <optional>
#include <string>
#include <vector>

#include "heartlab/heart.hpp"

namespace heartlab {

// End of G in B/T, where G is the sum of the non-projective syzygies of S.
struct GammaAlgebra {
  std::vector<int> generator;
  std::vector<Morphism> basis;
  std::vector<std::vector<Matrix>> product;  // product[i][j]: coordinates of basis[i] * basis[j]
  Matrix unit;
  std::vector<Matrix> idempotents;  // one per summand of G
  std::size_t dimension() const { return basis.size(); }
  Matrix multiply(const Matrix& a, const Matrix& b) const;
  Matrix left_matrix(const Matrix& a) const;  // x -> a * x
};

// Right Gamma-module Hom_{B/T}(G, B); action[k] sends x to x * basis[k].
struct FunctorModule {
  std::vector<int> object;
  std::size_t dimension = 0;
  std::vector<Matrix> action;
};

struct LocalisationReport {
  std::vector<int> generator;
  std::size_t gamma_dimension = 0;
  bool ideals_agree = false;  // through P and through T, on maps out of syzygies of S
  std::vector<std::vector<int>> regular_classes;
  struct Regular {
    int source;
    int target;
    Matrix coordinates;
    bool psi_iso;
  };
  std::vector<Regular> regular_morphisms;
  bool psi_regular_iso = true;
  struct Row {
    int object;
    std::size_t dimension;
    bool in_omega;
    bool projective;  // meaningful for syzygy objects only
    bool covered;     // receives a heart epi from a syzygy object
  };
  std::vector<Row> psi_table;
  bool omega_projective = true;
  bool covers_epi = true;
  std::string gamma_structure;  // zero, semisimple, local uniserial, radical square zero, not computed
  std::optional<std::size_t> gamma_module_count;
  bool counts_match = false;
  bool faithful = true;
  bool full = true;
  bool module_axioms = true;
};

class Localisation {
 public:
  // Throws HypothesisNotMet unless T = U. The context must outlive this object.
  explicit Localisation(const HeartContext& ctx);

  const HeartContext& context() const { return ctx_; }
  const GammaAlgebra& gamma() const { return gamma_; }
  const HeartObject& generator() const { return g_; }
  bool ideals_agree() const;

  FunctorModule psi(const HeartObject& b) const;
  Matrix psi_on_morphism(const HeartMorphism& f) const;
  bool module_axioms_hold(const FunctorModule& m) const;
  bool is_module_map(const FunctorModule& a, const FunctorModule& b, const Matrix& f) const;
  // Basis of Hom_Gamma(a, b) as flattened column-major matrices.
  std::vector<Matrix> module_homs(const FunctorModule& a, const FunctorModule& b) const;
  // Number of indecomposable Gamma-modules when the structure is recognised.
  std::optional<std::size_t> count_gamma_modules(std::string* structure = nullptr) const;

  LocalisationReport report() const;

 private:
  std::optional<std::size_t> radical_square_zero_count(const Matrix& radical) const;

  const HeartContext& ctx_;
  HeartObject g_;
  GammaAlgebra gamma_;
};

}  // namespace heartlab
