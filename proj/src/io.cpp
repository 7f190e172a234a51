#include "heartlab/io.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "heartlab/error.hpp"

namespace heartlab {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::BadInput, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::BadInput, "cannot write " + path);
  out << text;
}

void require_keys(const Json& object, const std::vector<std::string>& allowed, const std::string& what) {
  if (!object.is_object()) throw Error(ErrorCode::BadInput, what + " must be a JSON object");
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (auto& [key, value] : object.items())
    if (!ok.count(key)) throw Error(ErrorCode::BadInput, "unknown field '" + key + "' in " + what);
}

namespace {

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::BadInput, std::string("malformed JSON: ") + e.what());
  }
}

int as_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) throw Error(ErrorCode::BadInput, what + " must be an integer");
  return j.get<int>();
}

std::string as_string(const Json& j, const std::string& what) {
  if (!j.is_string()) throw Error(ErrorCode::BadInput, what + " must be a string");
  return j.get<std::string>();
}

}  // namespace

AlgebraPresentation parse_algebra(const std::string& text) {
  Json j = parse_json(text);
  require_keys(j, {"vertices", "arrows", "relations"}, "algebra");
  if (!j.contains("vertices") || !j.contains("arrows"))
    throw Error(ErrorCode::BadInput, "algebra needs 'vertices' and 'arrows'");
  AlgebraPresentation p;
  p.vertex_count = as_int(j["vertices"], "vertices");
  if (!j["arrows"].is_array()) throw Error(ErrorCode::BadInput, "'arrows' must be a list");
  for (auto& a : j["arrows"]) {
    require_keys(a, {"name", "source", "target"}, "arrow");
    if (!a.contains("name") || !a.contains("source") || !a.contains("target"))
      throw Error(ErrorCode::BadInput, "arrow needs name, source and target");
    p.arrows.push_back({as_string(a["name"], "arrow name"), as_int(a["source"], "arrow source") - 1,
                        as_int(a["target"], "arrow target") - 1});
  }
  if (j.contains("relations")) {
    if (!j["relations"].is_array()) throw Error(ErrorCode::BadInput, "'relations' must be a list");
    for (auto& r : j["relations"]) {
      if (!r.is_array()) throw Error(ErrorCode::BadRelation, "relation must be a list of arrow names");
      std::vector<std::string> rel;
      for (auto& name : r) rel.push_back(as_string(name, "relation entry"));
      p.relations.push_back(std::move(rel));
    }
  }
  return p;
}

std::string save_algebra(const AlgebraPresentation& p) {
  Json j;
  j["vertices"] = p.vertex_count;
  j["arrows"] = Json::array();
  for (auto& a : p.arrows) {
    Json arrow;
    arrow["name"] = a.name;
    arrow["source"] = a.source + 1;
    arrow["target"] = a.target + 1;
    j["arrows"].push_back(arrow);
  }
  j["relations"] = Json::array();
  for (auto& r : p.relations) j["relations"].push_back(r);
  return j.dump(2) + "\n";
}

AlgebraPtr load_algebra_file(const std::string& path) { return Algebra::validate(parse_algebra(read_file(path))); }

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) {
      const Rational& x = m(i, k);
      if (x.get_den() == 1 && x.get_num().fits_slong_p())
        row.push_back(x.get_num().get_si());
      else
        row.push_back(x.get_str());
    }
    rows.push_back(row);
  }
  return rows;
}

Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) throw Error(ErrorCode::BadInput, "matrix has the wrong number of rows");
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw Error(ErrorCode::BadInput, "matrix row has the wrong length");
    for (std::size_t k = 0; k < cols; ++k) {
      const Json& x = j[i][k];
      if (x.is_number_integer())
        m(i, k) = Rational(x.get<long>());
      else if (x.is_string())
        try {
          m(i, k) = parse_rational(x.get<std::string>());
        } catch (const std::invalid_argument& e) {
          throw Error(ErrorCode::BadInput, e.what());
        }
      else
        throw Error(ErrorCode::BadInput, "matrix entries must be integers or rational strings");
    }
  }
  return m;
}

std::vector<std::string> parse_id_list(const std::string& text) {
  Json j = parse_json(text);
  require_keys(j, {"schema", "ids"}, "subcategory");
  if (j.contains("schema") && j["schema"] != 1) throw Error(ErrorCode::BadInput, "unsupported schema version");
  if (!j.contains("ids") || !j["ids"].is_array()) throw Error(ErrorCode::BadInput, "subcategory needs an 'ids' list");
  std::vector<std::string> out;
  for (auto& x : j["ids"]) out.push_back(as_string(x, "subcategory id"));
  return out;
}

std::string save_id_list(const std::vector<std::string>& labels) {
  Json j;
  j["ids"] = labels;
  return j.dump() + "\n";
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
  std::string out;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    out += buf;
  }
  return out;
}

}  // namespace heartlab
