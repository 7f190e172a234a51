#include "heartlab/report.hpp"

namespace heartlab {

Json report_header(const std::string& command, const std::vector<std::pair<std::string, std::string>>& inputs,
                   const IndecCatalog& catalog) {
  Json j;
  j["schema"] = 1;
  j["command"] = command;
  Json in = Json::array();
  for (auto& [path, bytes] : inputs) in.push_back({{"path", path}, {"sha256", sha256_hex(bytes)}});
  j["inputs"] = in;
  j["catalog"] = {{"source", catalog.source()}, {"trusted", catalog.trusted()}};
  return j;
}

Json labels_json(const IndecCatalog& catalog, const Subcategory& s) { return catalog.labels(s); }

Json labels_json(const IndecCatalog& catalog, const std::vector<int>& ids) { return catalog.labels(ids); }

Json catalog_json(const IndecCatalog& catalog) {
  Json entries = Json::array();
  for (int id = 0; id < static_cast<int>(catalog.size()); ++id) {
    Json e;
    e["id"] = id;
    e["label"] = catalog.label(id);
    e["dims"] = catalog.module(id).dims();
    e["projective"] = catalog.projectives().contains(id);
    e["injective"] = catalog.injectives().contains(id);
    entries.push_back(e);
  }
  Json j;
  j["count"] = catalog.size();
  j["entries"] = entries;
  auto g = catalog.global_dimension();
  j["global_dimension"] = g ? Json(*g) : Json("infinite");
  return j;
}

Json pair_json(const IndecCatalog& catalog, const CotorsionPair& pair) {
  Json j;
  j["U"] = labels_json(catalog, pair.U);
  j["V"] = labels_json(catalog, pair.V);
  j["hereditary"] = is_hereditary(catalog, pair).hereditary;
  j["cluster_tilting"] = pair.U == pair.V;
  return j;
}

Json heart_json(const HeartContext& ctx) {
  const IndecCatalog& cat = ctx.catalog();
  const Twin& t = ctx.twin();
  Json j;
  j["S"] = labels_json(cat, t.S());
  j["T"] = labels_json(cat, t.T());
  j["U"] = labels_json(cat, t.U());
  j["V"] = labels_json(cat, t.V());
  j["W"] = labels_json(cat, t.W());
  j["degenerate"] = t.degenerate();
  j["b_minus"] = labels_json(cat, ctx.b_minus());
  j["b_plus"] = labels_json(cat, ctx.b_plus());
  j["b_minus_mod_w"] = labels_json(cat, ctx.b_minus() - t.W());
  j["b_plus_mod_w"] = labels_json(cat, ctx.b_plus() - t.W());
  j["heart"] = labels_json(cat, ctx.heart());
  j["heart_indecomposables"] = labels_json(cat, ctx.heart_indecomposables());
  Json homs = Json::array();
  for (int a : ctx.heart_indecomposables())
    for (int b : ctx.heart_indecomposables())
      homs.push_back({{"source", cat.label(a)},
                      {"target", cat.label(b)},
                      {"dimension", ctx.quotient_hom(ctx.object({a}), ctx.object({b})).dimension()}});
  j["quotient_hom"] = homs;
  return j;
}

Json harness_json(const HarnessResult& r) {
  Json j;
  j["property"] = property_name(r.property);
  j["bound"] = r.bound;
  j["passed"] = r.passed;
  j["objects"] = r.objects;
  j["morphisms"] = r.morphisms;
  j["checks"] = r.checks;
  j["criterion_mismatches"] = r.criterion_mismatches;
  j["counterexample"] = r.passed ? Json(nullptr) : Json(r.counterexample);
  return j;
}

Json sufficient_json(const SufficientConditions& s) {
  Json j;
  j["u_in_s_star_t"] = s.u_in_s_star_t;
  j["projectives_in_w"] = s.projectives_in_w;
  j["t_in_u_star_v"] = s.t_in_u_star_v;
  j["injectives_in_w"] = s.injectives_in_w;
  j["integral_expected"] = s.integral_condition;
  j["u_in_t"] = s.u_in_t;
  j["t_in_u"] = s.t_in_u;
  j["almost_abelian_expected"] = s.almost_abelian_condition;
  j["first_hereditary"] = s.first_hereditary;
  j["second_hereditary"] = s.second_hereditary;
  j["zero_heart_expected"] = s.zero_heart_condition;
  j["degenerate"] = s.degenerate;
  j["abelian_expected"] = s.degenerate;
  return j;
}

Json projective_json(const IndecCatalog& catalog, const ProjectiveReport& r) {
  Json j;
  j["hypothesis"] = r.hypothesis;
  j["omega"] = labels_json(catalog, r.omega);
  j["objects"] = labels_json(catalog, r.objects);
  Json covers = Json::array();
  for (auto& c : r.covers)
    covers.push_back({{"object", catalog.label(c.object)},
                      {"via", labels_json(catalog, c.source)},
                      {"epi", c.epi},
                      {"mono", c.mono}});
  j["maps"] = covers;
  j["checked"] = labels_json(catalog, r.checked);
  j["failed"] = labels_json(catalog, r.failed);
  j["enough"] = r.enough;
  j["verdict"] = r.enough ? "true-within-bound" : "false-within-bound";
  j["search_bound"] = r.search_bound;
  j["alternative_reading"] = {{"checked", labels_json(catalog, r.checked_alternative)},
                              {"enough", r.enough_alternative}};
  return j;
}

Json localisation_json(const IndecCatalog& catalog, const LocalisationReport& r) {
  Json j;
  j["generator"] = labels_json(catalog, r.generator);
  j["gamma_dimension"] = r.gamma_dimension;
  j["ideals_agree"] = r.ideals_agree;
  Json classes = Json::array();
  for (auto& c : r.regular_classes) classes.push_back(labels_json(catalog, c));
  j["regular_classes"] = classes;
  Json regs = Json::array();
  for (auto& m : r.regular_morphisms) {
    Json coords = Json::array();
    for (std::size_t i = 0; i < m.coordinates.rows(); ++i) coords.push_back(to_string(m.coordinates(i, 0)));
    regs.push_back({{"source", catalog.label(m.source)},
                    {"target", catalog.label(m.target)},
                    {"class", coords},
                    {"psi_iso", m.psi_iso}});
  }
  j["regular_morphisms"] = regs;
  j["psi_regular_iso"] = r.psi_regular_iso;
  Json table = Json::array();
  for (auto& row : r.psi_table)
    table.push_back({{"object", catalog.label(row.object)},
                     {"dimension", row.dimension},
                     {"syzygy_object", row.in_omega},
                     {"projective", row.in_omega ? Json(row.projective) : Json(nullptr)},
                     {"covered", row.covered}});
  j["psi"] = table;
  j["syzygy_objects_projective"] = r.omega_projective;
  j["covers_epi"] = r.covers_epi;
  j["gamma_structure"] = r.gamma_structure;
  j["gamma_module_count"] = r.gamma_module_count ? Json(*r.gamma_module_count) : Json("not computed");
  j["counts_match"] = r.counts_match;
  j["faithful"] = r.faithful;
  j["full"] = r.full;
  j["module_axioms"] = r.module_axioms;
  return j;
}

}  // namespace heartlab
