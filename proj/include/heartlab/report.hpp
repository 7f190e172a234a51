#pragma once

#include <string>
#include <utility>
#include <vector>

#include "heartlab/heart.hpp"
#include "heartlab/io.hpp"
#include "heartlab/localisation.hpp"

namespace heartlab {

// Report skeleton: schema version, command, input hashes, catalog provenance.
// `inputs` holds (path, file contents) pairs.
Json report_header(const std::string& command, const std::vector<std::pair<std::string, std::string>>& inputs,
                   const IndecCatalog& catalog);

Json labels_json(const IndecCatalog& catalog, const Subcategory& s);
Json labels_json(const IndecCatalog& catalog, const std::vector<int>& ids);
Json catalog_json(const IndecCatalog& catalog);
Json pair_json(const IndecCatalog& catalog, const CotorsionPair& pair);
Json heart_json(const HeartContext& ctx);
Json harness_json(const HarnessResult& r);
Json sufficient_json(const SufficientConditions& s);
Json projective_json(const IndecCatalog& catalog, const ProjectiveReport& r);
Json localisation_json(const IndecCatalog& catalog, const LocalisationReport& r);

}  // namespace heartlab
