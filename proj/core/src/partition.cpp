#include "hdc/partition.hpp"

#include <algorithm>
#include <limits>

#include "hdc/error.hpp"

namespace hdc {

Partition::Partition(int vertex_count, std::vector<std::vector<VertexId>> blocks)
    : blocks_(std::move(blocks)) {
  if (vertex_count < 0) throw InputError("negative vertex count");
  block_of_.assign(static_cast<std::size_t>(vertex_count), -1);
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    auto& blk = blocks_[b];
    if (blk.empty()) throw InputError("partition blocks must be nonempty");
    std::sort(blk.begin(), blk.end());
    for (VertexId v : blk) {
      if (v < 0 || v >= vertex_count) throw InputError("partition vertex out of range");
      if (block_of_[static_cast<std::size_t>(v)] != -1) throw InputError("partition blocks must be disjoint");
      block_of_[static_cast<std::size_t>(v)] = static_cast<int>(b);
    }
  }
  for (int b : block_of_) {
    if (b == -1) throw InputError("partition blocks must cover every vertex");
  }
}

Partition Partition::from_labels(std::span<const int> labels) {
  int m = 0;
  for (int l : labels) {
    if (l < 0) throw InputError("negative block label");
    m = std::max(m, l + 1);
  }
  std::vector<std::vector<VertexId>> blocks(static_cast<std::size_t>(m));
  for (std::size_t v = 0; v < labels.size(); ++v) {
    blocks[static_cast<std::size_t>(labels[v])].push_back(static_cast<VertexId>(v));
  }
  return Partition(static_cast<int>(labels.size()), std::move(blocks));
}

Partition Partition::canonical() const {
  auto blocks = blocks_;
  std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return Partition(vertex_count(), std::move(blocks));
}

OrientationOrder Partition::block_sorted_order() const {
  std::vector<VertexId> order;
  order.reserve(block_of_.size());
  for (const auto& blk : blocks_) order.insert(order.end(), blk.begin(), blk.end());
  return OrientationOrder(std::move(order));
}

std::string Partition::to_string() const {
  std::string s;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (b > 0) s += '|';
    s += '{';
    for (std::size_t i = 0; i < blocks_[b].size(); ++i) {
      if (i > 0) s += ',';
      s += std::to_string(blocks_[b][i] + 1);
    }
    s += '}';
  }
  return s;
}

std::uint64_t stirling2(int n, int m) {
  if (n < 0 || m < 0) return 0;
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  // S(i, j) = j S(i-1, j) + S(i-1, j-1)
  std::vector<std::uint64_t> row(static_cast<std::size_t>(m) + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, m); j >= 1; --j) {
      const std::uint64_t a = row[static_cast<std::size_t>(j)];
      const std::uint64_t b = row[static_cast<std::size_t>(j - 1)];
      std::uint64_t t = 0;
      if (a != 0 && static_cast<std::uint64_t>(j) > kMax / a) {
        t = kMax;
      } else {
        t = a * static_cast<std::uint64_t>(j);
        t = (t > kMax - b) ? kMax : t + b;
      }
      row[static_cast<std::size_t>(j)] = t;
    }
    row[0] = 0;
  }
  return row[static_cast<std::size_t>(m)];
}

}  // namespace hdc
