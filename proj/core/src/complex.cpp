#include "hdc/complex.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

#include "hdc/error.hpp"

namespace hdc {

namespace {

std::uint64_t binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  std::uint64_t c = 1;
  for (int i = 1; i <= r; ++i) c = c * static_cast<std::uint64_t>(n - r + i) / static_cast<std::uint64_t>(i);
  return c;
}

}  // namespace

SimplicialComplex::SimplicialComplex(int vertex_count, std::vector<std::vector<Simplex>> faces_by_dim)
    : n_(vertex_count) {
  if (n_ < 0 || n_ > kMaxVertices) {
    throw InputError("vertex count must be in [0, " + std::to_string(kMaxVertices) + "]");
  }
  while (!faces_by_dim.empty() && faces_by_dim.back().empty()) faces_by_dim.pop_back();

  faces_.reserve(faces_by_dim.size() + 1);
  faces_.push_back({Simplex{}});
  for (auto& layer : faces_by_dim) {
    std::sort(layer.begin(), layer.end());
    layer.erase(std::unique(layer.begin(), layer.end()), layer.end());
    faces_.push_back(std::move(layer));
  }
  k_ = static_cast<int>(faces_.size()) - 2;

  index_.resize(faces_.size());
  for (std::size_t d = 0; d < faces_.size(); ++d) {
    for (std::size_t i = 0; i < faces_[d].size(); ++i) {
      const Simplex& s = faces_[d][i];
      if (static_cast<std::size_t>(s.dimension() + 1) != d) {
        throw InputError("face " + s.to_string() + " stored in wrong dimension");
      }
      if (!s.empty() && s.vertices().back() >= n_) {
        throw InputError("face " + s.to_string() + " uses a vertex beyond n");
      }
      index_[d].emplace(s.mask(), i);
    }
  }

  if (faces(0).size() != static_cast<std::size_t>(n_)) {
    throw InputError("every vertex 0..n-1 must be a 0-face");
  }
  for (int d = 1; d <= k_; ++d) {
    for (const Simplex& s : faces(d)) {
      for (std::size_t j = 0; j < s.size(); ++j) {
        if (!index_of(s.without_position(j))) {
          throw InputError("complex is not downward closed at " + s.to_string());
        }
      }
    }
  }
}

std::span<const Simplex> SimplicialComplex::faces(int dim) const noexcept {
  if (dim < -1 || dim > k_) return {};
  return faces_[static_cast<std::size_t>(dim + 1)];
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> fv;
  for (const auto& layer : faces_) fv.push_back(layer.size());
  return fv;
}

std::optional<std::size_t> SimplicialComplex::index_of_mask(int dim, std::uint64_t mask) const noexcept {
  if (dim < -1 || dim > k_) return std::nullopt;
  const auto& idx = index_[static_cast<std::size_t>(dim + 1)];
  if (auto it = idx.find(mask); it != idx.end()) return it->second;
  return std::nullopt;
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const noexcept {
  return index_of_mask(s.dimension(), s.mask());
}

std::vector<Simplex> SimplicialComplex::facets() const {
  std::vector<Simplex> out;
  for (int d = 0; d <= k_; ++d) {
    for (const Simplex& s : faces(d)) {
      bool maximal = true;
      for (VertexId v = 0; v < n_ && maximal; ++v) {
        if (!s.contains(v) && index_of_mask(d + 1, s.mask() | (std::uint64_t{1} << v))) maximal = false;
      }
      if (maximal) out.push_back(s);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool SimplicialComplex::has_complete_skeleton(int dim) const noexcept {
  for (int d = 0; d <= dim; ++d) {
    if (face_count(d) != binomial(n_, d + 1)) return false;
  }
  return true;
}

OrientationOrder::OrientationOrder(std::vector<VertexId> order) : order_(std::move(order)) {
  position_.assign(order_.size(), -1);
  for (std::size_t p = 0; p < order_.size(); ++p) {
    const VertexId v = order_[p];
    if (v < 0 || static_cast<std::size_t>(v) >= order_.size() || position_[static_cast<std::size_t>(v)] != -1) {
      throw InputError("orientation order must be a permutation of 0..n-1");
    }
    position_[static_cast<std::size_t>(v)] = static_cast<int>(p);
  }
}

OrientationOrder OrientationOrder::identity(int n) {
  std::vector<VertexId> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  return OrientationOrder(std::move(order));
}

bool OrientationOrder::is_identity() const noexcept {
  for (std::size_t p = 0; p < order_.size(); ++p) {
    if (order_[p] != static_cast<VertexId>(p)) return false;
  }
  return true;
}

SimplicialComplex from_facets(int vertex_count, const std::vector<std::vector<VertexId>>& facets) {
  if (vertex_count < 0 || vertex_count > kMaxVertices) {
    throw InputError("vertex count must be in [0, " + std::to_string(kMaxVertices) + "]");
  }
  std::vector<std::set<std::uint64_t>> masks(1);
  for (VertexId v = 0; v < vertex_count; ++v) masks[0].insert(std::uint64_t{1} << v);

  for (const auto& facet : facets) {
    std::uint64_t m = 0;
    for (VertexId v : facet) {
      if (v < 0 || v >= vertex_count) {
        throw InputError("facet vertex " + std::to_string(v + 1) + " out of range 1.." + std::to_string(vertex_count));
      }
      if ((m >> v) & 1U) throw InputError("facet repeats vertex " + std::to_string(v + 1));
      m |= std::uint64_t{1} << v;
    }
    if (m == 0) continue;
    const int dim = std::popcount(m) - 1;
    if (masks.size() <= static_cast<std::size_t>(dim)) masks.resize(static_cast<std::size_t>(dim) + 1);
    // Enumerate all nonempty submasks.
    for (std::uint64_t sub = m; sub != 0; sub = (sub - 1) & m) {
      masks[static_cast<std::size_t>(std::popcount(sub) - 1)].insert(sub);
    }
  }

  std::vector<std::vector<Simplex>> layers(masks.size());
  for (std::size_t d = 0; d < masks.size(); ++d) {
    layers[d].reserve(masks[d].size());
    for (std::uint64_t m : masks[d]) layers[d].push_back(Simplex::from_mask(m));
  }
  return SimplicialComplex(vertex_count, std::move(layers));
}

SimplicialComplex completion(const SimplicialComplex& x) {
  const int k = x.dimension();
  if (k < 1) throw InputError("completion requires dimension k >= 1");
  std::vector<std::vector<Simplex>> layers;
  for (int d = 0; d < k; ++d) {
    auto f = x.faces(d);
    layers.emplace_back(f.begin(), f.end());
  }
  // Each candidate tau is generated once, from sigma = tau minus its largest vertex.
  std::vector<Simplex> top;
  for (const Simplex& sigma : x.faces(k - 1)) {
    for (VertexId v = sigma.vertices().back() + 1; v < x.vertex_count(); ++v) {
      const std::uint64_t tau = sigma.mask() | (std::uint64_t{1} << v);
      bool all_facets = true;
      for (std::uint64_t rest = tau; rest != 0 && all_facets; rest &= rest - 1) {
        const std::uint64_t bit = rest & (~rest + 1);
        if (!x.index_of_mask(k - 1, tau & ~bit)) all_facets = false;
      }
      if (all_facets) top.push_back(Simplex::from_mask(tau));
    }
  }
  layers.push_back(std::move(top));
  return SimplicialComplex(x.vertex_count(), std::move(layers));
}

SimplicialComplex skeleton(const SimplicialComplex& x, int dim) {
  std::vector<std::vector<Simplex>> layers;
  for (int d = 0; d <= std::min(dim, x.dimension()); ++d) {
    auto f = x.faces(d);
    layers.emplace_back(f.begin(), f.end());
  }
  return SimplicialComplex(x.vertex_count(), std::move(layers));
}

int incidence_number(const Simplex& tau, const Simplex& sigma, const OrientationOrder& order) {
  if (tau.dimension() != sigma.dimension() + 1) {
    throw InputError("incidence_number needs dim(tau) = dim(sigma) + 1");
  }
  if (!sigma.is_subset_of(tau)) return 0;
  const VertexId removed = std::countr_zero(tau.mask() & ~sigma.mask());
  const int pos = order.position(removed);
  int j = 0;
  for (VertexId u : tau.vertices()) {
    if (order.position(u) < pos) ++j;
  }
  return (j % 2 == 0) ? 1 : -1;
}

int incidence_number(const Simplex& tau, const Simplex& sigma) {
  if (tau.dimension() != sigma.dimension() + 1) {
    throw InputError("incidence_number needs dim(tau) = dim(sigma) + 1");
  }
  if (!sigma.is_subset_of(tau)) return 0;
  const VertexId removed = std::countr_zero(tau.mask() & ~sigma.mask());
  const int j = std::popcount(tau.mask() & ((std::uint64_t{1} << removed) - 1));
  return (j % 2 == 0) ? 1 : -1;
}

std::size_t degree(const SimplicialComplex& x, const Simplex& sigma) {
  if (!x.contains(sigma)) throw InputError("degree: " + sigma.to_string() + " is not a face");
  std::size_t count = 0;
  for (VertexId v = 0; v < x.vertex_count(); ++v) {
    if (!sigma.contains(v) && x.index_of_mask(sigma.dimension() + 1, sigma.mask() | (std::uint64_t{1} << v))) {
      ++count;
    }
  }
  return count;
}

}  // namespace hdc
