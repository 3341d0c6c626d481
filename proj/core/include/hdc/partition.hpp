#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hdc/complex.hpp"

namespace hdc {

/// An ordered list of disjoint nonempty vertex blocks covering 0..n-1.
/// Block order matters to callers that attach signs to block indices.
class Partition {
 public:
  /// Vertices inside each block are sorted; block order is kept. Throws
  /// InputError unless the blocks are nonempty, disjoint and cover 0..n-1.
  Partition(int vertex_count, std::vector<std::vector<VertexId>> blocks);

  /// Block of vertex v is labels[v]; labels must use every value 0..m-1.
  static Partition from_labels(std::span<const int> labels);

  int vertex_count() const noexcept { return static_cast<int>(block_of_.size()); }
  int block_count() const noexcept { return static_cast<int>(blocks_.size()); }
  const std::vector<std::vector<VertexId>>& blocks() const noexcept { return blocks_; }
  std::span<const VertexId> block(int i) const { return blocks_.at(static_cast<std::size_t>(i)); }
  int block_of(VertexId v) const { return block_of_.at(static_cast<std::size_t>(v)); }
  std::span<const int> labels() const noexcept { return block_of_; }

  /// Blocks sorted by smallest element.
  Partition canonical() const;
  /// Vertices of block 0, then block 1, ...; each block ascending.
  OrientationOrder block_sorted_order() const;

  /// e.g. "{1,5}|{2,4}|{3}".
  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) noexcept {
    return a.blocks_ == b.blocks_;
  }

 private:
  std::vector<std::vector<VertexId>> blocks_;
  std::vector<int> block_of_;
};

/// Stirling number of the second kind S(n, m), saturating at UINT64_MAX.
std::uint64_t stirling2(int n, int m);

/// Visits every set partition of {0..n-1} into exactly m nonempty blocks as a
/// restricted growth string (labels[0] = 0, labels[i] <= 1 + max(labels[<i])),
/// in lexicographic order. Lexicographic RGS order is the canonical order
/// used for tie-breaking. The visitor returns false to stop early.
template <typename Visitor>
void for_each_rgs(int n, int m, Visitor&& visit) {
  if (m < 1 || m > n) return;
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  bool stop = false;
  // Depth-first in lexicographic order; prune when too few positions remain.
  auto recurse = [&](auto&& self, int i, int used) -> void {
    if (stop) return;
    if (i == n) {
      if (used == m && !visit(std::span<const int>(a))) stop = true;
      return;
    }
    const int remaining = n - i;
    const int hi = std::min(used, m - 1);
    for (int label = 0; label <= hi && !stop; ++label) {
      const int next_used = label == used ? used + 1 : used;
      if (m - next_used > remaining - 1) continue;
      a[static_cast<std::size_t>(i)] = label;
      self(self, i + 1, next_used);
    }
  };
  a[0] = 0;
  recurse(recurse, 1, 1);
}

}  // namespace hdc
