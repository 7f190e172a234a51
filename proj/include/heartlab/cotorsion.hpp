#pragma once

#include <optional>
#include <string>
#include <vector>

#include "heartlab/approximation.hpp"
#include "heartlab/catalog.hpp"

namespace heartlab {

// Ext^i vanishing for 1 <= i <= n, or every i when n is empty.
Subcategory perp(const IndecCatalog& catalog, const Subcategory& c, Side side, std::optional<int> n = 1);

// Witness sequences V_B -> U_B -> B and B -> V^B -> U^B for one catalog entry.
struct PairWitness {
  Approximation right;    // minimal right U-approximation U_B -> B
  Morphism right_kernel;  // V_B -> U_B
  std::vector<int> right_kernel_summands;
  Approximation left;       // minimal left V-approximation B -> V^B
  Morphism left_cokernel;   // V^B -> U^B
  std::vector<int> left_cokernel_summands;
};

struct CotorsionPair {
  Subcategory U;
  Subcategory V;
  std::vector<PairWitness> witnesses;  // indexed by catalog id
};

struct PairVerdict {
  bool valid = false;
  std::string reason;
  std::optional<CotorsionPair> pair;
};

PairVerdict is_cotorsion_pair(const IndecCatalog& catalog, const Subcategory& u, const Subcategory& v);
// Every complete cotorsion pair, ordered by left half then right half.
std::vector<CotorsionPair> enumerate_cotorsion_pairs(const IndecCatalog& catalog);
// (T', T'^perp); throws MissingProjectives or NotExtensionClosed.
CotorsionPair cotorsion_from_subcategory(const IndecCatalog& catalog, const Subcategory& t);
bool is_extension_closed(const IndecCatalog& catalog, const Subcategory& c, std::string* failure = nullptr);

struct HereditaryVerdict {
  bool hereditary = false;         // Ext^i(U, V) = 0 for all i >= 1
  bool syzygies_stay_in_u = false; // Omega U lies in U
};
HereditaryVerdict is_hereditary(const IndecCatalog& catalog, const CotorsionPair& pair);
bool is_cluster_tilting(const IndecCatalog& catalog, const Subcategory& m);

// (S, T) and (U, V) with S inside U; W = T meet U.
class Twin {
 public:
  // Throws NotTwin.
  Twin(CotorsionPair first, CotorsionPair second);
  const CotorsionPair& first() const { return first_; }
  const CotorsionPair& second() const { return second_; }
  const Subcategory& S() const { return first_.U; }
  const Subcategory& T() const { return first_.V; }
  const Subcategory& U() const { return second_.U; }
  const Subcategory& V() const { return second_.V; }
  const Subcategory& W() const { return w_; }
  bool degenerate() const { return S() == U() && T() == V(); }

 private:
  CotorsionPair first_, second_;
  Subcategory w_;
};

struct StarVerdict {
  bool member = false;
  bool exact = false;  // false: bounded search only
  std::vector<int> sub;       // multiplicities of the C1 part
  std::vector<int> quotient;  // multiplicities of the C2 part
};
// B lies in C1 * C2: some sequence X -> B -> Y with X in add C1, Y in add C2.
StarVerdict star_membership(const IndecCatalog& catalog, int b, const Subcategory& c1, const Subcategory& c2);

// Sequences fixed -> E -> X (fixed_is_sub) or X -> E -> fixed with X in add
// `ends` of total dimension <= max_end_dim, E in add `middles`. Classes are
// sampled from {-1, 0, 1}^d.
struct SequenceSearch {
  bool found = false;
  std::vector<int> end;     // multiplicities of X
  std::vector<int> middle;  // multiplicities of E
  std::size_t candidates = 0;
};
SequenceSearch search_sequences(const IndecCatalog& catalog, const Representation& fixed, bool fixed_is_sub,
                                const Subcategory& ends, const Subcategory& middles, int max_end_dim);

// Multisets (multiplicity vectors) over `ids` with total dimension <= bound.
std::vector<std::vector<int>> bounded_multisets(const IndecCatalog& catalog, const std::vector<int>& ids, int bound);

}  // namespace heartlab
