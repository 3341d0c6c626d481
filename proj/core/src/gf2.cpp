#include "hdc/gf2.hpp"

#include <bit>

#include "hdc/error.hpp"

namespace hdc {

bool Gf2Echelon::insert(BitVector v) {
  if (v.size() != width_) throw InputError("GF(2) vector width mismatch");
  v = reduce(std::move(v));
  const std::size_t pivot = v.find_first();
  if (pivot == BitVector::npos) return false;
  for (auto& b : basis_) {
    if (b.test(pivot)) b ^= v;
  }
  basis_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

BitVector Gf2Echelon::reduce(BitVector v) const {
  if (v.size() != width_) throw InputError("GF(2) vector width mismatch");
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (v.test(pivots_[i])) v ^= basis_[i];
  }
  return v;
}

std::size_t gf2_rank(const std::vector<BitVector>& rows, std::size_t width) {
  Gf2Echelon e(width);
  for (const auto& r : rows) e.insert(r);
  return e.rank();
}

std::vector<BitVector> gf2_nullspace(const std::vector<BitVector>& rows, std::size_t width) {
  Gf2Echelon e(width);
  for (const auto& r : rows) e.insert(r);
  std::vector<bool> is_pivot(width, false);
  for (std::size_t p : e.pivots()) is_pivot[p] = true;

  // For free column c, x = e_c + sum of e_{pivot(i)} over basis rows i with bit c set.
  std::vector<BitVector> kernel;
  for (std::size_t c = 0; c < width; ++c) {
    if (is_pivot[c]) continue;
    BitVector x(width);
    x.set(c);
    for (std::size_t i = 0; i < e.rank(); ++i) {
      if (e.basis()[i].test(c)) x.set(e.pivots()[i]);
    }
    kernel.push_back(std::move(x));
  }
  return kernel;
}

std::size_t min_weight_in_coset(const BitVector& v, const std::vector<BitVector>& basis) {
  const std::size_t r = basis.size();
  if (r >= 63) throw ResourceError("coset-cap", "coset span too large to enumerate");
  BitVector w = v;
  std::size_t best = w.count();
  const std::uint64_t total = std::uint64_t{1} << r;
  for (std::uint64_t i = 1; i < total && best > 0; ++i) {
    w ^= basis[static_cast<std::size_t>(std::countr_zero(i))];
    best = std::min(best, w.count());
  }
  return best;
}

}  // namespace hdc
