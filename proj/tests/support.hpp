#pragma once

// Fixture loading and test-side oracles. The oracles avoid the library's
// linear algebra and approximation code so that agreement is meaningful.

#include <random>
#include <string>
#include <vector>

#include "heartlab/cotorsion.hpp"
#include "heartlab/heart.hpp"
#include "heartlab/homology.hpp"
#include "heartlab/io.hpp"

namespace fixtures {

std::string path(const std::string& name);
heartlab::AlgebraPtr algebra(const std::string& name);  // a2, lambda4, lambda3
heartlab::CatalogPtr catalog(const std::string& name);  // cached per name
heartlab::Subcategory subcategory(const heartlab::IndecCatalog& cat, const std::string& file);
heartlab::Subcategory labels(const heartlab::IndecCatalog& cat, const std::vector<std::string>& names);
std::vector<std::string> names(const heartlab::IndecCatalog& cat, const heartlab::Subcategory& s);
heartlab::CotorsionPair pair(const heartlab::IndecCatalog& cat, const heartlab::Subcategory& u,
                             const heartlab::Subcategory& v);

// (M, M) with M the projectives and injectives of lambda4.
heartlab::Twin twin_m_m();
// (M', M'^perp), (M'^perp, (M'^perp)^perp).
heartlab::Twin twin_m_prime();
// The twin of lambda3 from the S, T, U, V fixture files.
heartlab::Twin twin_lambda3();

}  // namespace fixtures

namespace oracle {

using Rows = std::vector<std::vector<heartlab::Rational>>;

std::size_t rank(Rows rows);
std::size_t rank(const heartlab::Matrix& m);
// Dimension of the commuting-square solution space, built from scratch.
std::size_t hom_dim(const heartlab::Representation& m, const heartlab::Representation& n);
// dim Ext^1 from 0 -> Hom(M,N) -> Hom(P0,N) -> Hom(Omega M,N) -> Ext^1 -> 0.
std::size_t ext1_dim(const heartlab::Representation& m, const heartlab::Representation& n);
// Uniserial module with the given top (0-based) and length, built by walking arrows.
heartlab::Representation interval(const heartlab::AlgebraPtr& alg, int top, int length);
// Multiplicities from the hom-count system, solved by brute force over small vectors.
std::vector<int> multiplicities(const heartlab::IndecCatalog& cat, const heartlab::Representation& m);
// Labels of the summands from `multiplicities`, with repetition, in catalog order.
std::vector<std::string> summands(const heartlab::IndecCatalog& cat, const heartlab::Representation& m);

// Brute-force witness search: B -> W0 -> S0 (minus) or V0 -> W0 -> B (plus) with
// the end term of total dimension at most the largest catalog dimension.
bool in_b_minus(const heartlab::IndecCatalog& cat, const heartlab::Twin& t, int b);
bool in_b_plus(const heartlab::IndecCatalog& cat, const heartlab::Twin& t, int b);

// Random morphism M -> N with coefficients in [-2, 2].
heartlab::Morphism random_morphism(std::mt19937& gen, const heartlab::Representation& m,
                                   const heartlab::Representation& n);
// Random catalog multiset of one or two entries, realized.
heartlab::Representation random_module(std::mt19937& gen, const heartlab::IndecCatalog& cat);
// Injective M -> N + I(M) built from a random morphism and the injective envelope.
heartlab::Morphism random_inflation(std::mt19937& gen, const heartlab::IndecCatalog& cat,
                                    const heartlab::Representation& m);
// Surjective P(M) + N -> M from the projective cover and a random morphism.
heartlab::Morphism random_deflation(std::mt19937& gen, const heartlab::IndecCatalog& cat,
                                    const heartlab::Representation& m);
// M with every vertex space rebased by a random invertible matrix.
heartlab::Representation rebase(std::mt19937& gen, const heartlab::Representation& m);

}  // namespace oracle
