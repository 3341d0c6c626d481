#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace hdc {

/// 0-based vertex id. Reports print label = id + 1.
using VertexId = int;

/// Largest supported vertex count; faces are keyed by 64-bit vertex masks.
inline constexpr int kMaxVertices = 64;

/// A face given by its strictly increasing vertex ids. The empty simplex has
/// dimension -1.
class Simplex {
 public:
  Simplex() = default;
  /// Throws InputError unless the ids are strictly increasing and in [0, 64).
  explicit Simplex(std::vector<VertexId> sorted_vertices);
  Simplex(std::initializer_list<VertexId> sorted_vertices);

  /// Sorts and validates an arbitrary list (rejects duplicates).
  static Simplex from_unsorted(std::vector<VertexId> vertices);
  static Simplex from_mask(std::uint64_t mask);

  int dimension() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
  std::size_t size() const noexcept { return vertices_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }
  std::span<const VertexId> vertices() const noexcept { return vertices_; }
  VertexId operator[](std::size_t i) const { return vertices_[i]; }
  std::uint64_t mask() const noexcept { return mask_; }

  bool contains(VertexId v) const noexcept;
  bool is_subset_of(const Simplex& other) const noexcept {
    return (mask_ & ~other.mask_) == 0;
  }
  /// This simplex with its i-th (numeric position) vertex removed.
  Simplex without_position(std::size_t i) const;
  /// This simplex with v inserted; v must not already be present.
  Simplex with_vertex(VertexId v) const;

  /// 1-based labels, e.g. "{1,2,3}".
  std::string to_string() const;

  friend bool operator==(const Simplex& a, const Simplex& b) noexcept {
    return a.mask_ == b.mask_;
  }
  /// Lexicographic order on the sorted vertex lists.
  friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) noexcept {
    return a.vertices_ <=> b.vertices_;
  }

 private:
  std::vector<VertexId> vertices_;
  std::uint64_t mask_ = 0;
};

}  // namespace hdc
