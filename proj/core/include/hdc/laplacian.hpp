#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "hdc/chains.hpp"
#include "hdc/complex.hpp"
#include "hdc/extended.hpp"
#include "hdc/linalg.hpp"

namespace hdc {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

enum class LaplacianKind { kUp, kDown, kFull };

/// Laplacian in dimension i as an exact integer matrix indexed by faces(i):
/// up = B_i^T B_i, down = B_{i-1} B_{i-1}^T, full = up + down, with B_j the
/// matrix of delta_j. Requires 0 <= i <= k.
IntMatrix integer_laplacian(const SimplicialComplex& x, int i, LaplacianKind kind, const OrientationOrder& order);
IntMatrix integer_laplacian(const SimplicialComplex& x, int i, LaplacianKind kind);

SymmetricMatrix upper_laplacian(const SimplicialComplex& x, int i, const OrientationOrder& order);
SymmetricMatrix upper_laplacian(const SimplicialComplex& x, int i);
SymmetricMatrix lower_laplacian(const SimplicialComplex& x, int i, const OrientationOrder& order);
SymmetricMatrix lower_laplacian(const SimplicialComplex& x, int i);
SymmetricMatrix full_laplacian(const SimplicialComplex& x, int i, const OrientationOrder& order);
SymmetricMatrix full_laplacian(const SimplicialComplex& x, int i);

struct SpectralOptions {
  double tolerance = kRankTolerance;
  std::size_t dense_cap = kDefaultDenseCap;
};

/// Spectrum of L^up_{k-1} restricted to the cycle space Z_{k-1} = (B^{k-1})^perp.
struct SpectralResult {
  /// Smallest eigenvalue; the sentinel when Z_{k-1} = 0.
  ExtendedReal lambda;
  std::vector<double> eigenvalues;  // ascending
  std::size_t basis_dim = 0;        // dim Z_{k-1}
  std::size_t dim_b = 0;            // rank of delta_{k-2}
  double rank_tolerance = kRankTolerance;
  /// Orthonormal basis of Z_{k-1}, one column per basis vector.
  Eigen::MatrixXd basis;
  /// Eigenvectors in face coordinates, aligned with eigenvalues.
  Eigen::MatrixXd eigenvectors;
};

/// lambda(X). Throws InputError for k < 1.
SpectralResult spectral_gap(const SimplicialComplex& x, const OrientationOrder& order,
                            const SpectralOptions& options = {});
SpectralResult spectral_gap(const SimplicialComplex& x, const SpectralOptions& options = {});

/// Orthogonal split f = harmonic + up_part + down_part of a (k-1)-cochain,
/// with down_part in B^{k-1} = im delta_{k-2} and up_part in
/// B_{k-1} = im boundary_k.
struct HodgeSplit {
  RealCochain harmonic;
  RealCochain up_part;
  RealCochain down_part;

  /// z = f - b, the component in Z_{k-1}.
  RealCochain z() const;
  /// b in B^{k-1}.
  const RealCochain& b() const noexcept { return down_part; }
};

HodgeSplit hodge_split(const SimplicialComplex& x, const RealCochain& f, const OrientationOrder& order,
                       double tolerance = kRankTolerance);
HodgeSplit hodge_split(const SimplicialComplex& x, const RealCochain& f, double tolerance = kRankTolerance);

struct HodgeDimensions {
  std::size_t cochains = 0;   // |X_{k-1}|
  std::size_t harmonic = 0;   // nullity of the full Laplacian
  std::size_t down = 0;       // rank delta_{k-2}
  std::size_t up = 0;         // rank delta_{k-1}
};
/// Dimension count of the Hodge decomposition in degree k-1; the harmonic
/// dimension is read off the spectrum of the full Laplacian.
HodgeDimensions hodge_dimensions(const SimplicialComplex& x, double tolerance = kRankTolerance);

/// n <L^up(X) f, f> / <L^up(K(X)) f, f>, an upper bound on lambda(X) for any
/// f outside B^{k-1}. The sentinel when the denominator is <= 1e-12. Throws
/// InputError when f lies in B^{k-1} up to tolerance.
ExtendedReal rayleigh_bound(const SimplicialComplex& x, const RealCochain& f, const OrientationOrder& order,
                            double tolerance = kRankTolerance);
ExtendedReal rayleigh_bound(const SimplicialComplex& x, const RealCochain& f, double tolerance = kRankTolerance);

/// Betti number of degree dim over the reals, rank Z^dim - rank B^dim.
std::size_t real_betti(const SimplicialComplex& x, int dim, double tolerance = kRankTolerance);
/// The same over GF(2).
std::size_t z2_betti(const SimplicialComplex& x, int dim);

}  // namespace hdc
