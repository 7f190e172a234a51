#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "heartlab/error.hpp"
#include "heartlab/localisation.hpp"
#include "heartlab/report.hpp"

using namespace heartlab;

namespace {

constexpr int kInputError = 1;
constexpr int kVerdictFailure = 2;

struct Options {
  std::string command;
  std::string algebra;
  std::string catalog;
  std::string output;
  std::string dot;
  std::string s, t, u, v;
  std::vector<std::string> pair;
  std::string property;
  int bound = 1;
  unsigned seed = 0x5eed;
};

// An error tied to the file it came from.
struct InputError {
  std::string message;
};
// A well-formed run whose verdict is negative.
struct VerdictFailure {
  std::string message;
};

bool is_input_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::NonAdmissible:
    case ErrorCode::BadRelation:
    case ErrorCode::BadInput:
    case ErrorCode::BadClass:
    case ErrorCode::IncompleteCatalog:
    case ErrorCode::Unsupported:
    case ErrorCode::DuplicateEntry:
    case ErrorCode::NotIndecomposable:
      return true;
    default:
      return false;
  }
}

unsigned thread_count() {
  const char* env = std::getenv("HEARTLAB_THREADS");
  if (!env || !*env) return std::max(1u, std::thread::hardware_concurrency());
  std::string s = env;
  if (s.find_first_not_of("0123456789") != std::string::npos || s.size() > 4 || std::stoi(s) < 1)
    throw InputError{"HEARTLAB_THREADS must be a positive integer, got '" + s + "'"};
  return static_cast<unsigned>(std::stoi(s));
}

class Run {
 public:
  explicit Run(const Options& o) : o_(o) {}

  int execute() {
    load();
    Json report;
    int code = 0;
    const std::string& c = o_.command;
    if (c == "indecs") code = indecs(report);
    else if (c == "enumerate") code = enumerate(report);
    else if (c == "check-pair") code = check_pair(report);
    else if (c == "twin-heart") code = twin_heart(report);
    else if (c == "harness") code = harness(report);
    else if (c == "sufficient") code = sufficient(report);
    else if (c == "projectives") code = projectives(report);
    else if (c == "localise") code = localise(report);
    emit(report);
    return code;
  }

 private:
  std::string read(const std::string& path) {
    try {
      std::string bytes = read_file(path);
      inputs_.push_back({path, bytes});
      return bytes;
    } catch (const std::exception& e) {
      throw InputError{path + ": " + e.what()};
    }
  }

  void load() {
    std::string text = read(o_.algebra);
    try {
      algebra_ = Algebra::validate(parse_algebra(text));
    } catch (const Error& e) {
      throw InputError{o_.algebra + ": " + e.what()};
    }
    if (!o_.catalog.empty()) {
      std::string ctext = read(o_.catalog);
      try {
        catalog_ = load_external_catalog(algebra_, ctext, o_.seed);
      } catch (const Error& e) {
        throw InputError{o_.catalog + ": " + e.what()};
      }
      return;
    }
    try {
      catalog_ = enumerate_indecomposables(algebra_, o_.seed);
    } catch (const Error& e) {
      throw InputError{o_.algebra + ": " + e.what() + " (supply --catalog)"};
    }
  }

  Subcategory subcategory(const std::string& path) {
    std::string text = read(path);
    try {
      return catalog_->from_labels(parse_id_list(text));
    } catch (const Error& e) {
      throw InputError{path + ": " + e.what()};
    }
  }

  CotorsionPair pair(const std::string& u_path, const std::string& v_path) {
    Subcategory u = subcategory(u_path), v = subcategory(v_path);
    PairVerdict verdict = is_cotorsion_pair(*catalog_, u, v);
    if (!verdict.valid)
      throw VerdictFailure{"(" + u_path + ", " + v_path + ") is not a cotorsion pair: " + verdict.reason};
    return std::move(*verdict.pair);
  }

  Twin twin() {
    if (!o_.pair.empty()) {
      CotorsionPair p = pair(o_.pair[0], o_.pair[1]);
      return Twin(p, p);
    }
    if (o_.s.empty() || o_.t.empty() || o_.u.empty() || o_.v.empty())
      throw InputError{o_.command + " needs --pair or all of --S --T --U --V"};
    CotorsionPair first = pair(o_.s, o_.t);
    CotorsionPair second = pair(o_.u, o_.v);
    try {
      return Twin(std::move(first), std::move(second));
    } catch (const Error& e) {
      throw VerdictFailure{e.what()};
    }
  }

  Json header() const { return report_header(o_.command, inputs_, *catalog_); }

  int indecs(Json& report) {
    report = header();
    report["algebra"] = {{"vertices", algebra_->vertex_count()}, {"nakayama", algebra_->is_nakayama()}};
    report["indecomposables"] = catalog_json(*catalog_);
    return 0;
  }

  int enumerate(Json& report) {
    auto pairs = enumerate_cotorsion_pairs(*catalog_);
    report = header();
    Json list = Json::array();
    for (auto& p : pairs) list.push_back(pair_json(*catalog_, p));
    report["count"] = pairs.size();
    report["pairs"] = list;
    return 0;
  }

  int check_pair(Json& report) {
    std::string u_path = o_.pair.empty() ? o_.u : o_.pair[0];
    std::string v_path = o_.pair.empty() ? o_.v : o_.pair[1];
    if (u_path.empty() || v_path.empty()) throw InputError{"check-pair needs --pair or --U and --V"};
    Subcategory u = subcategory(u_path), v = subcategory(v_path);
    PairVerdict verdict = is_cotorsion_pair(*catalog_, u, v);
    report = header();
    report["U"] = labels_json(*catalog_, u);
    report["V"] = labels_json(*catalog_, v);
    report["valid"] = verdict.valid;
    report["reason"] = verdict.valid ? Json(nullptr) : Json(verdict.reason);
    if (verdict.valid) {
      report["hereditary"] = is_hereditary(*catalog_, *verdict.pair).hereditary;
      report["cluster_tilting"] = u == v;
    }
    return verdict.valid ? 0 : kVerdictFailure;
  }

  int twin_heart(Json& report) {
    HeartContext ctx(catalog_, twin());
    report = header();
    report["heart"] = heart_json(ctx);
    if (!o_.dot.empty()) write_file(o_.dot, ctx.to_dot());
    return 0;
  }

  int harness(Json& report) {
    auto p = parse_property(o_.property);
    if (!p) throw InputError{"unknown property '" + o_.property + "'"};
    if (o_.bound < 1) throw InputError{"--bound must be positive"};
    HeartContext ctx(catalog_, twin());
    HarnessResult r = ctx.property_harness(*p, o_.bound, thread_count());
    SufficientConditions s = ctx.sufficient_conditions();
    bool expected = true;
    if (*p == Property::abelian) expected = s.degenerate;
    if (*p == Property::integral) expected = s.integral_condition;
    if (*p == Property::almost_abelian) expected = s.almost_abelian_condition;
    report = header();
    report["seed"] = o_.seed;
    report["heart_indecomposables"] = labels_json(*catalog_, ctx.heart_indecomposables());
    report["harness"] = harness_json(r);
    report["theorem_applies"] = expected;
    return r.passed ? 0 : kVerdictFailure;
  }

  int sufficient(Json& report) {
    HeartContext ctx(catalog_, twin());
    report = header();
    report["conditions"] = sufficient_json(ctx.sufficient_conditions());
    return 0;
  }

  int projectives(Json& report) {
    HeartContext ctx(catalog_, twin());
    report = header();
    auto side = [&](bool available, auto compute) -> Json {
      if (!available) return Json{{"hypothesis", false}};
      return projective_json(*catalog_, compute());
    };
    const Twin& t = ctx.twin();
    report["projectives"] = side(t.U().subset_of(t.T()), [&] { return ctx.heart_projectives(); });
    report["injectives"] = side(t.T().subset_of(t.U()), [&] { return ctx.heart_injectives(); });
    return 0;
  }

  int localise(Json& report) {
    HeartContext ctx(catalog_, twin());
    std::optional<Localisation> loc;
    try {
      loc.emplace(ctx);
    } catch (const Error& e) {
      throw VerdictFailure{e.what()};
    }
    report = header();
    report["localisation"] = localisation_json(*catalog_, loc->report());
    return 0;
  }

  void emit(const Json& report) const {
    std::string text = report.dump(2) + "\n";
    if (o_.output.empty()) {
      std::cout << text;
      return;
    }
    write_file(o_.output, text);
  }

  const Options& o_;
  std::vector<std::pair<std::string, std::string>> inputs_;
  AlgebraPtr algebra_;
  CatalogPtr catalog_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cotorsion pairs and their hearts over bounded quiver algebras"};
  app.require_subcommand(1);
  Options o;

  struct Spec {
    const char* name;
    const char* help;
    bool twin;
  };
  const std::vector<Spec> specs{
      {"indecs", "List the indecomposable modules", false},
      {"enumerate", "Enumerate all cotorsion pairs", false},
      {"check-pair", "Validate a cotorsion pair", true},
      {"twin-heart", "Compute the heart of a twin cotorsion pair", true},
      {"harness", "Test a structural property of the heart", true},
      {"sufficient", "Evaluate sufficient conditions for heart properties", true},
      {"projectives", "Projective and injective objects of the heart", true},
      {"localise", "Localisation report for twins with T = U", true},
  };
  for (const Spec& s : specs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("algebra", o.algebra, "Algebra file (JSON)")->required();
    sub->add_option("--catalog", o.catalog, "Explicit catalog file for non-Nakayama algebras");
    sub->add_option("--output", o.output, "Write the report here instead of stdout");
    sub->add_option("--seed", o.seed, "Seed for the isomorphism search");
    if (s.twin) {
      sub->add_option("--pair", o.pair, "Left and right halves of one pair (degenerate twin)")->expected(2);
      sub->add_option("--S", o.s, "Subcategory file");
      sub->add_option("--T", o.t, "Subcategory file");
      sub->add_option("--U", o.u, "Subcategory file");
      sub->add_option("--V", o.v, "Subcategory file");
    }
    if (std::string(s.name) == "twin-heart") sub->add_option("--dot", o.dot, "Write the heart quiver as DOT");
    if (std::string(s.name) == "harness") {
      sub->add_option("--property", o.property, "preabelian, abelian, semi_abelian, integral, almost_abelian")
          ->required();
      sub->add_option("--bound", o.bound, "Maximal number of summands of test objects");
    }
    sub->callback([&o, name = std::string(s.name)] { o.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    Run run(o);
    return run.execute();
  } catch (const InputError& e) {
    std::cerr << "heartlab: " << e.message << "\n";
    return kInputError;
  } catch (const VerdictFailure& e) {
    std::cerr << "heartlab: " << e.message << "\n";
    return kVerdictFailure;
  } catch (const Error& e) {
    std::cerr << "heartlab: " << e.what() << "\n";
    return is_input_code(e.code()) ? kInputError : kVerdictFailure;
  } catch (const std::exception& e) {
    std::cerr << "heartlab: " << e.what() << "\n";
    return kInputError;
  }
}
