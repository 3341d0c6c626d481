#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "hdc/complex.hpp"

namespace hdc::io {

/// {"n": int, "k": int, "facets": [[labels...], ...]}, 1-based labels, facets
/// sorted lexicographically.
nlohmann::json complex_to_json(const SimplicialComplex& x);

/// Inverse of complex_to_json. Throws InputError on a malformed document or
/// when "k" disagrees with the largest facet.
SimplicialComplex complex_from_json(const nlohmann::json& j);

/// Reads and parses a complex file; InputError when it is missing or invalid.
SimplicialComplex read_complex(const std::filesystem::path& path);

/// Writes content to a sibling temporary file and renames it into place.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace hdc::io
