#include "hdc/report.hpp"

#include <cstdio>

namespace hdc::report {

nlohmann::json number(ExtendedReal v) {
  if (v.is_infinite()) return "inf";
  return v.value();
}

nlohmann::json face(const Simplex& s) {
  nlohmann::json f = nlohmann::json::array();
  for (VertexId v : s.vertices()) f.push_back(v + 1);
  return f;
}

nlohmann::json faces(const std::vector<Simplex>& s) {
  nlohmann::json out = nlohmann::json::array();
  for (const Simplex& f : s) out.push_back(face(f));
  return out;
}

nlohmann::json partition(const Partition& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& block : p.blocks()) {
    nlohmann::json b = nlohmann::json::array();
    for (VertexId v : block) b.push_back(v + 1);
    out.push_back(std::move(b));
  }
  return out;
}

nlohmann::json spectral(const SpectralResult& r, std::uint64_t orientation_seed) {
  return {{"lambda", number(r.lambda)},
          {"dim_Z", r.basis_dim},
          {"dim_B", r.dim_b},
          {"tolerance", r.rank_tolerance},
          {"orientation_seed", orientation_seed}};
}

nlohmann::json expansion(const std::string& quantity, const ExpansionValue& v) {
  nlohmann::json j{{"quantity", quantity},
                   {"value", number(v.value())},
                   {"num", v.numerator},
                   {"den", v.denominator},
                   {"scale", v.scale}};
  j["witness_partition"] = v.witness_partition ? partition(*v.witness_partition) : nlohmann::json(nullptr);
  j["witness_support"] = faces(v.witness_support);
  return j;
}

nlohmann::json c_value(const cheeger::CValue& c) {
  nlohmann::json d = nlohmann::json::array();
  for (const auto& [sigma, value] : c.d) d.push_back({{"face", face(sigma)}, {"d", value}});
  return {{"quantity", "C"},
          {"value", static_cast<double>(c.c)},
          {"num", c.c},
          {"den", 1},
          {"scale", 1},
          {"witness_partition", partition(c.partition)},
          {"witness_support", nlohmann::json::array()},
          {"empty_boundary", c.empty_boundary},
          {"boundary_faces", c.boundary_faces},
          {"d", std::move(d)}};
}

nlohmann::json cochain(const SimplicialComplex& x, const RealCochain& f) {
  nlohmann::json support = nlohmann::json::array();
  nlohmann::json values = nlohmann::json::array();
  const auto fs = x.faces(f.dim);
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    if (f.values[i] == 0.0) continue;
    support.push_back(face(fs[i]));
    values.push_back(f.values[i]);
  }
  return {{"dim", f.dim}, {"ring", "R"}, {"support", std::move(support)}, {"values", std::move(values)}};
}

nlohmann::json cochain(const SimplicialComplex& x, const Z2Cochain& f) {
  return {{"dim", f.dim}, {"ring", "Z2"}, {"support", faces(support(x, f))}};
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace hdc::report
