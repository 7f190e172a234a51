#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "heartlab/algebra.hpp"
#include "heartlab/matrix.hpp"

namespace heartlab {

using Json = nlohmann::ordered_json;

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

// Throws BadInput on malformed input or unknown fields.
AlgebraPresentation parse_algebra(const std::string& text);
std::string save_algebra(const AlgebraPresentation& presentation);
AlgebraPtr load_algebra_file(const std::string& path);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols);

// {"ids": [label, ...]}
std::vector<std::string> parse_id_list(const std::string& text);
std::string save_id_list(const std::vector<std::string>& labels);

// Rejects keys outside `allowed`.
void require_keys(const Json& object, const std::vector<std::string>& allowed, const std::string& what);

std::string sha256_hex(const std::string& bytes);

}  // namespace heartlab
