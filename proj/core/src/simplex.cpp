#include "hdc/simplex.hpp"

#include <algorithm>
#include <bit>

#include "hdc/error.hpp"

namespace hdc {

Simplex::Simplex(std::vector<VertexId> sorted_vertices) : vertices_(std::move(sorted_vertices)) {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const VertexId v = vertices_[i];
    if (v < 0 || v >= kMaxVertices) {
      throw InputError("vertex id " + std::to_string(v) + " out of range");
    }
    if (i > 0 && vertices_[i - 1] >= v) {
      throw InputError("simplex vertices must be strictly increasing");
    }
    mask_ |= std::uint64_t{1} << v;
  }
}

Simplex::Simplex(std::initializer_list<VertexId> sorted_vertices)
    : Simplex(std::vector<VertexId>(sorted_vertices)) {}

Simplex Simplex::from_unsorted(std::vector<VertexId> vertices) {
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end()) {
    throw InputError("repeated vertex in simplex");
  }
  return Simplex(std::move(vertices));
}

Simplex Simplex::from_mask(std::uint64_t mask) {
  std::vector<VertexId> vs;
  vs.reserve(static_cast<std::size_t>(std::popcount(mask)));
  while (mask != 0) {
    vs.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return Simplex(std::move(vs));
}

bool Simplex::contains(VertexId v) const noexcept {
  return v >= 0 && v < kMaxVertices && ((mask_ >> v) & 1U) != 0;
}

Simplex Simplex::without_position(std::size_t i) const {
  std::vector<VertexId> vs;
  vs.reserve(vertices_.size() - 1);
  for (std::size_t j = 0; j < vertices_.size(); ++j) {
    if (j != i) vs.push_back(vertices_[j]);
  }
  return Simplex(std::move(vs));
}

Simplex Simplex::with_vertex(VertexId v) const {
  if (contains(v)) throw InputError("vertex already in simplex");
  std::vector<VertexId> vs = vertices_;
  vs.insert(std::upper_bound(vs.begin(), vs.end(), v), v);
  return Simplex(std::move(vs));
}

std::string Simplex::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(vertices_[i] + 1);
  }
  s += '}';
  return s;
}

}  // namespace hdc
