#pragma once

#include <cstdint>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace hdc {

using BitVector = boost::dynamic_bitset<std::uint64_t>;

/// Fully reduced row-echelon basis of a subspace of GF(2)^width: each pivot
/// column is set in exactly one basis vector.
class Gf2Echelon {
 public:
  explicit Gf2Echelon(std::size_t width) : width_(width) {}

  /// Adds v to the spanning set; returns true when it increased the rank.
  bool insert(BitVector v);
  /// Canonical coset representative: v reduced so every pivot column is 0.
  BitVector reduce(BitVector v) const;
  bool in_span(const BitVector& v) const { return reduce(v).none(); }

  std::size_t width() const noexcept { return width_; }
  std::size_t rank() const noexcept { return basis_.size(); }
  const std::vector<BitVector>& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

 private:
  std::size_t width_;
  std::vector<BitVector> basis_;
  std::vector<std::size_t> pivots_;
};

/// Rank of the row set over GF(2).
std::size_t gf2_rank(const std::vector<BitVector>& rows, std::size_t width);

/// Basis of {x : row . x = 0 for every row} over GF(2).
std::vector<BitVector> gf2_nullspace(const std::vector<BitVector>& rows, std::size_t width);

/// Minimum Hamming weight of v + span(basis), by a Gray-code walk over all
/// 2^rank combinations. The caller bounds rank.
std::size_t min_weight_in_coset(const BitVector& v, const std::vector<BitVector>& basis);

}  // namespace hdc
