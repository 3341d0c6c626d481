#pragma once

#include <cstddef>

#include <Eigen/Dense>

namespace hdc {

/// Default relative rank tolerance for null spaces and projections.
inline constexpr double kRankTolerance = 1e-9;
/// Default limit on the order of matrices handed to the dense eigensolver.
inline constexpr std::size_t kDefaultDenseCap = 4096;

/// Dense real symmetric matrix; construction rejects any asymmetry.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(Eigen::MatrixXd m);
  /// (m + m^T) / 2 for matrices that are symmetric only up to rounding.
  static SymmetricMatrix symmetrized(const Eigen::MatrixXd& m);

  Eigen::Index order() const noexcept { return m_.rows(); }
  const Eigen::MatrixXd& matrix() const noexcept { return m_; }
  double operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }

 private:
  Eigen::MatrixXd m_;
};

struct EigenDecomposition {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXd vectors;  // column i belongs to values(i); orthonormal
  int sweeps = 0;
};

/// Cyclic Jacobi rotations with a fixed (p, q) sweep order until the
/// off-diagonal Frobenius norm is at most 1e-12 * max(1, ||M||_F).
/// Throws ResourceError when the order exceeds dense_cap.
EigenDecomposition eigendecompose(const SymmetricMatrix& m, std::size_t dense_cap = kDefaultDenseCap);

/// Orthonormal bases of im(A) and its orthogonal complement, from a
/// column-pivoted Householder QR. Pivots below tolerance times the largest
/// column norm count as zero.
struct RangeSplit {
  Eigen::MatrixXd range;       // n x rank
  Eigen::MatrixXd complement;  // n x (n - rank)
  Eigen::Index rank = 0;
};
RangeSplit range_split(const Eigen::MatrixXd& a, double tolerance = kRankTolerance);

/// Numerical rank with the same pivoting rule.
Eigen::Index numerical_rank(const Eigen::MatrixXd& a, double tolerance = kRankTolerance);

}  // namespace hdc
