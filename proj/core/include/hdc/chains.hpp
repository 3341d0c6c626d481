#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "hdc/complex.hpp"
#include "hdc/gf2.hpp"
#include "hdc/partition.hpp"

namespace hdc {

/// Real cochain on the dim-faces of a complex, indexed like faces(dim).
struct RealCochain {
  int dim = 0;
  std::vector<double> values;

  static RealCochain zero(const SimplicialComplex& x, int dim) {
    return {dim, std::vector<double>(x.face_count(dim), 0.0)};
  }
  std::size_t size() const noexcept { return values.size(); }
};

/// GF(2) cochain on the dim-faces of a complex, indexed like faces(dim).
struct Z2Cochain {
  int dim = 0;
  BitVector bits;

  static Z2Cochain zero(const SimplicialComplex& x, int dim) {
    return {dim, BitVector(x.face_count(dim))};
  }
  std::size_t size() const noexcept { return bits.size(); }
  /// Hamming norm.
  std::size_t weight() const noexcept { return bits.count(); }
};

/// Sparse signed incidence matrix of delta_dim: rows are (dim+1)-faces,
/// columns are dim-faces, entry(tau, sigma) = [tau:sigma].
class OperatorMatrix {
 public:
  struct Entry {
    std::size_t col;
    int sign;
  };

  OperatorMatrix(std::size_t rows, std::size_t cols, std::vector<std::vector<Entry>> row_entries)
      : rows_(rows), cols_(cols), entries_(std::move(row_entries)) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  /// Entries of row r, ordered by the numeric position of the removed vertex.
  const std::vector<Entry>& row(std::size_t r) const { return entries_.at(r); }

  Eigen::MatrixXd dense() const;
  Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> dense_integer() const;
  /// Rows as GF(2) vectors (signs dropped).
  std::vector<BitVector> gf2_rows() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::vector<Entry>> entries_;
};

/// Matrix of delta_dim on x under the given orientation. dim may range over
/// -1..k; for dim = k the matrix has no rows.
OperatorMatrix coboundary_matrix(const SimplicialComplex& x, int dim, const OrientationOrder& order);
OperatorMatrix coboundary_matrix(const SimplicialComplex& x, int dim);

/// (delta f)(tau) = sum over facets sigma of tau of [tau:sigma] f(sigma). The
/// result lives on faces(f.dim + 1) of x, which may be a completion sharing
/// x's lower skeleton. Throws InputError unless -1 <= f.dim <= k and the
/// cochain length matches.
RealCochain coboundary(const SimplicialComplex& x, const RealCochain& f, const OrientationOrder& order);
RealCochain coboundary(const SimplicialComplex& x, const RealCochain& f);
Z2Cochain coboundary(const SimplicialComplex& x, const Z2Cochain& f);

/// Adjoint of delta_{dim-1}: (boundary f)(sigma) = sum_tau [tau:sigma] f(tau).
/// Requires 0 <= f.dim <= k.
RealCochain boundary(const SimplicialComplex& x, const RealCochain& f, const OrientationOrder& order);
RealCochain boundary(const SimplicialComplex& x, const RealCochain& f);

double inner(const RealCochain& a, const RealCochain& b);
double norm_squared(const RealCochain& a);

/// {0,1}-valued real cochain with the same support.
RealCochain to_real(const Z2Cochain& f);
/// Indicator cochain of the given faces (all must be dim-faces of x).
Z2Cochain indicator(const SimplicialComplex& x, int dim, const std::vector<Simplex>& support);
/// Faces in the support, in face order.
std::vector<Simplex> support(const SimplicialComplex& x, const Z2Cochain& f);

/// Default limit on the number of coset elements walked by coset_weight.
inline constexpr std::uint64_t kDefaultCosetCap = std::uint64_t{1} << 24;

/// Basis of B^dim(x; Z2) = im delta_{dim-1} in reduced echelon form.
Gf2Echelon coboundary_space(const SimplicialComplex& x, int dim);

/// |[f]| = min |f + delta g| over g in C^{dim-1}(x; Z2). Gaussian elimination
/// yields a basis of B^dim, then the whole coset is walked in Gray-code order.
/// Throws ResourceError when 2^rank(B) exceeds cap.
std::size_t coset_weight(const SimplicialComplex& x, const Z2Cochain& f,
                         std::uint64_t cap = kDefaultCosetCap);

/// The cochain f of a (k+1)-block partition together with the block-sorted
/// orientation it is defined under:
///   f(sigma) = (-1)^l |A_l| if A_l is the unique block missing sigma, else 0.
struct PartitionCochain {
  RealCochain f;
  OrientationOrder order;
};

/// Throws InputError unless the partition covers x's vertices with k+1 blocks.
PartitionCochain f_cochain(const SimplicialComplex& x, const Partition& partition);

/// delta_{k-1} f under the block-sorted orientation; every entry is 0 or |V|,
/// with support exactly the rainbow k-faces.
RealCochain delta_f_values(const SimplicialComplex& x, const Partition& partition);

}  // namespace hdc
