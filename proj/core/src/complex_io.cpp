#include "hdc/complex_io.hpp"

#include <fstream>
#include <sstream>
#include <system_error>

#include "hdc/error.hpp"

namespace hdc::io {

nlohmann::json complex_to_json(const SimplicialComplex& x) {
  nlohmann::json facets = nlohmann::json::array();
  for (const Simplex& s : x.facets()) {
    nlohmann::json f = nlohmann::json::array();
    for (VertexId v : s.vertices()) f.push_back(v + 1);
    facets.push_back(std::move(f));
  }
  return {{"n", x.vertex_count()}, {"k", x.dimension()}, {"facets", std::move(facets)}};
}

SimplicialComplex complex_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("complex file: expected a JSON object");
  if (!j.contains("n") || !j["n"].is_number_integer()) throw InputError("complex file: missing integer \"n\"");
  if (!j.contains("facets") || !j["facets"].is_array()) throw InputError("complex file: missing array \"facets\"");
  const int n = j["n"].get<int>();
  std::vector<std::vector<VertexId>> facets;
  for (const auto& f : j["facets"]) {
    if (!f.is_array()) throw InputError("complex file: each facet must be an array");
    std::vector<VertexId> verts;
    for (const auto& v : f) {
      if (!v.is_number_integer()) throw InputError("complex file: vertex labels must be integers");
      verts.push_back(v.get<int>() - 1);
    }
    facets.push_back(std::move(verts));
  }
  SimplicialComplex x = from_facets(n, facets);
  if (j.contains("k")) {
    if (!j["k"].is_number_integer()) throw InputError("complex file: \"k\" must be an integer");
    if (j["k"].get<int>() != x.dimension()) {
      throw InputError("complex file: \"k\" = " + std::to_string(j["k"].get<int>()) +
                       " but the facets have dimension " + std::to_string(x.dimension()));
    }
  }
  return x;
}

SimplicialComplex read_complex(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path.string() + ": " + e.what());
  }
  return complex_from_json(j);
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write " + tmp.string());
    out << content;
    if (!out.flush()) throw InputError("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw InputError("cannot rename into " + path.string());
  }
}

}  // namespace hdc::io
