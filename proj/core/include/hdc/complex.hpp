#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "hdc/simplex.hpp"

namespace hdc {

/// A finite abstract simplicial complex on vertices 0..n-1.
///
/// Faces are stored per dimension -1..k, sorted lexicographically; the empty
/// simplex is the single face of dimension -1. Every vertex is a 0-face even
/// when it lies in no edge. Instances are immutable after construction.
class SimplicialComplex {
 public:
  /// Builds the complex from explicit per-dimension face lists (index 0 holds
  /// the 0-faces). Validates downward closure and that every vertex is
  /// present; throws InputError otherwise.
  SimplicialComplex(int vertex_count, std::vector<std::vector<Simplex>> faces_by_dim);

  int vertex_count() const noexcept { return n_; }
  /// Dimension k of the complex (-1 for the void-only complex on 0 vertices).
  int dimension() const noexcept { return k_; }

  /// Faces of dimension dim, lexicographically sorted; empty outside -1..k.
  std::span<const Simplex> faces(int dim) const noexcept;
  std::size_t face_count(int dim) const noexcept { return faces(dim).size(); }
  /// f-vector (f_-1, f_0, ..., f_k).
  std::vector<std::size_t> f_vector() const;

  std::optional<std::size_t> index_of(const Simplex& s) const noexcept;
  std::optional<std::size_t> index_of_mask(int dim, std::uint64_t mask) const noexcept;
  bool contains(const Simplex& s) const noexcept { return index_of(s).has_value(); }

  /// Inclusion-maximal faces, lexicographically sorted.
  std::vector<Simplex> facets() const;

  /// True when every (k)-subset of V is a face of dimension k-1.
  bool has_complete_skeleton(int dim) const noexcept;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) noexcept {
    return a.n_ == b.n_ && a.faces_ == b.faces_;
  }

 private:
  int n_ = 0;
  int k_ = -1;
  std::vector<std::vector<Simplex>> faces_;  // faces_[d + 1]
  std::vector<std::unordered_map<std::uint64_t, std::size_t>> index_;
};

/// Linear order on V used for incidence signs. order()[p] is the vertex at
/// position p. Defaults to numeric order.
class OrientationOrder {
 public:
  OrientationOrder() = default;
  explicit OrientationOrder(std::vector<VertexId> order);
  static OrientationOrder identity(int n);

  int size() const noexcept { return static_cast<int>(order_.size()); }
  std::span<const VertexId> order() const noexcept { return order_; }
  int position(VertexId v) const { return position_.at(static_cast<std::size_t>(v)); }
  bool is_identity() const noexcept;

 private:
  std::vector<VertexId> order_;
  std::vector<int> position_;
};

/// Downward closure of the facets. Throws InputError on out-of-range or
/// repeated vertices.
SimplicialComplex from_facets(int vertex_count, const std::vector<std::vector<VertexId>>& facets);

/// The k-dimensional completion K(X): X plus every (k+1)-set of vertices
/// whose k-subsets are all (k-1)-faces of X. Requires k >= 1.
SimplicialComplex completion(const SimplicialComplex& x);

/// The subcomplex of faces of dimension <= dim.
SimplicialComplex skeleton(const SimplicialComplex& x, int dim);

/// [tau:sigma] under the given order: (-1)^j when sigma is tau minus its j-th
/// vertex (counting by order position), 0 when sigma is not a facet of tau.
/// Throws InputError unless dim(tau) = dim(sigma) + 1.
int incidence_number(const Simplex& tau, const Simplex& sigma, const OrientationOrder& order);
int incidence_number(const Simplex& tau, const Simplex& sigma);

/// Number of (dim(sigma)+1)-faces of x containing sigma. InputError if sigma
/// is not a face of x.
std::size_t degree(const SimplicialComplex& x, const Simplex& sigma);

}  // namespace hdc
