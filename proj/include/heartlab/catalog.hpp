#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "heartlab/representation.hpp"

namespace heartlab {

// A set of catalog ids (an additive subcategory, closed under summands).
class Subcategory {
 public:
  Subcategory() = default;
  explicit Subcategory(std::size_t universe) : mask_(universe, false) {}
  static Subcategory of(std::size_t universe, const std::vector<int>& ids);
  static Subcategory all(std::size_t universe);

  std::size_t universe() const { return mask_.size(); }
  std::size_t size() const;
  bool empty() const { return size() == 0; }
  bool contains(int id) const { return mask_[id]; }
  void insert(int id) { mask_[id] = true; }
  void erase(int id) { mask_[id] = false; }
  std::vector<int> ids() const;
  bool subset_of(const Subcategory& other) const;
  // Every id with nonzero multiplicity lies in the set.
  bool contains_all(const std::vector<int>& multiplicities) const;

  friend Subcategory operator&(const Subcategory& a, const Subcategory& b);
  friend Subcategory operator|(const Subcategory& a, const Subcategory& b);
  friend Subcategory operator-(const Subcategory& a, const Subcategory& b);
  friend bool operator==(const Subcategory& a, const Subcategory& b) { return a.mask_ == b.mask_; }
  friend bool operator<(const Subcategory& a, const Subcategory& b);

 private:
  std::vector<bool> mask_;
};

struct CatalogEntry {
  std::string label;
  Representation module;
  int top = -1;    // uniserial entries: top vertex and length
  int length = 0;
};

struct Decomposition {
  std::vector<int> multiplicities;  // per catalog id
  std::vector<int> summands;        // ids with repetition, ascending
  Morphism iso;                     // canonical sum of summands -> M
};

class IndecCatalog;
using CatalogPtr = std::shared_ptr<const IndecCatalog>;

// Complete list of indecomposables up to isomorphism, with the hom and Ext
// tables used by every later computation.
class IndecCatalog {
 public:
  // Verifies each entry is indecomposable (NotIndecomposable) and that no two
  // are isomorphic (DuplicateEntry).
  static CatalogPtr build(AlgebraPtr algebra, std::vector<CatalogEntry> entries, bool trusted, std::string source,
                          unsigned seed = 0x5eed);

  const AlgebraPtr& algebra() const { return algebra_; }
  std::size_t size() const { return entries_.size(); }
  const CatalogEntry& entry(int id) const { return entries_[id]; }
  const Representation& module(int id) const { return entries_[id].module; }
  const std::string& label(int id) const { return entries_[id].label; }
  int find_label(const std::string& label) const;
  int find_interval(int top, int length) const;
  bool trusted() const { return trusted_; }
  const std::string& source() const { return source_; }
  bool uniserial() const { return uniserial_; }
  int max_dim() const { return max_dim_; }

  const std::vector<Morphism>& hom(int i, int j) const { return hom_[i][j]; }
  int hom_dim(int i, int j) const { return static_cast<int>(hom_[i][j].size()); }
  int ext1_dim(int i, int j) const { return ext1_[i][j]; }
  // Multiplicity vectors of Omega and Omega^- of an entry.
  const std::vector<int>& syzygy_of(int id) const { return syzygy_[id]; }
  const std::vector<int>& cosyzygy_of(int id) const { return cosyzygy_[id]; }
  int ext_dim(int i, int j, int n) const;
  // Ext^n(i, j) = 0 for every n >= 1.
  bool ext_vanishes_all(int i, int j) const;
  // Nothing when infinite.
  std::optional<int> projective_dimension(int id) const;
  std::optional<int> injective_dimension(int id) const;
  std::optional<int> global_dimension() const;

  Subcategory all() const { return Subcategory::all(size()); }
  Subcategory none() const { return Subcategory(size()); }
  const Subcategory& projectives() const { return projectives_; }
  const Subcategory& injectives() const { return injectives_; }
  Subcategory from_labels(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels(const Subcategory& s) const;
  std::vector<std::string> labels(const std::vector<int>& ids) const;

  // Multiplicities via dim Hom(I_i, M) = sum_j m_j dim Hom(I_i, I_j).
  // Throws IncompleteCatalog when no nonnegative integer solution exists.
  std::vector<int> locate(const Representation& m) const;
  bool in_add(const Representation& m, const Subcategory& s) const;
  // Adds an explicit isomorphism; throws IncompleteCatalog if none is found.
  Decomposition decompose(const Representation& m) const { return decompose(m, seed_); }
  Decomposition decompose(const Representation& m, unsigned seed) const;
  unsigned seed() const { return seed_; }
  DirectSum realize(const std::vector<int>& summands) const;

 private:
  AlgebraPtr algebra_;
  std::vector<CatalogEntry> entries_;
  bool trusted_ = false;
  std::string source_;
  unsigned seed_ = 0x5eed;
  bool uniserial_ = false;
  int max_dim_ = 0;
  std::vector<std::vector<std::vector<Morphism>>> hom_;
  std::vector<std::vector<int>> ext1_;
  std::vector<std::vector<int>> syzygy_, cosyzygy_;
  std::optional<Matrix> hom_inverse_;
  Subcategory projectives_, injectives_;
};

// Nakayama algebras only (Unsupported otherwise). Entries ordered by length,
// then top vertex.
CatalogPtr enumerate_indecomposables(const AlgebraPtr& algebra, unsigned seed = 0x5eed);
// JSON list of {"label", "dims", "arrow_maps"}.
CatalogPtr load_external_catalog(const AlgebraPtr& algebra, const std::string& text, unsigned seed = 0x5eed);
std::string save_catalog(const IndecCatalog& catalog);

// End(M)/rad End(M) is one-dimensional.
bool has_local_endomorphism_ring(const Representation& m);
std::string label_of(const std::vector<int>& vertices);

}  // namespace heartlab
