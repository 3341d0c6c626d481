#include "hdc/laplacian.hpp"

#include <cmath>
#include <string>

#include "hdc/error.hpp"

namespace hdc {

namespace {

OrientationOrder default_order(const SimplicialComplex& x) { return OrientationOrder::identity(x.vertex_count()); }

Eigen::VectorXd as_vector(const RealCochain& f) {
  return Eigen::Map<const Eigen::VectorXd>(f.values.data(), static_cast<Eigen::Index>(f.values.size()));
}

RealCochain as_cochain(int dim, const Eigen::VectorXd& v) {
  return {dim, std::vector<double>(v.data(), v.data() + v.size())};
}

int top_dimension(const SimplicialComplex& x, const char* what) {
  const int k = x.dimension();
  if (k < 1) throw InputError(std::string(what) + ": complex dimension must be >= 1");
  return k;
}

}  // namespace

IntMatrix integer_laplacian(const SimplicialComplex& x, int i, LaplacianKind kind, const OrientationOrder& order) {
  if (i < 0 || i > x.dimension()) {
    throw InputError("laplacian: dimension " + std::to_string(i) + " out of range 0.." + std::to_string(x.dimension()));
  }
  const auto n = static_cast<Eigen::Index>(x.face_count(i));
  IntMatrix up = IntMatrix::Zero(n, n);
  IntMatrix down = IntMatrix::Zero(n, n);
  if (kind != LaplacianKind::kDown) {
    const IntMatrix b = coboundary_matrix(x, i, order).dense_integer();
    up = b.transpose() * b;
  }
  if (kind != LaplacianKind::kUp) {
    const IntMatrix b = coboundary_matrix(x, i - 1, order).dense_integer();
    down = b * b.transpose();
  }
  switch (kind) {
    case LaplacianKind::kUp:
      return up;
    case LaplacianKind::kDown:
      return down;
    case LaplacianKind::kFull:
      break;
  }
  return up + down;
}

IntMatrix integer_laplacian(const SimplicialComplex& x, int i, LaplacianKind kind) {
  return integer_laplacian(x, i, kind, default_order(x));
}

SymmetricMatrix upper_laplacian(const SimplicialComplex& x, int i, const OrientationOrder& order) {
  return SymmetricMatrix(integer_laplacian(x, i, LaplacianKind::kUp, order).cast<double>());
}
SymmetricMatrix upper_laplacian(const SimplicialComplex& x, int i) { return upper_laplacian(x, i, default_order(x)); }

SymmetricMatrix lower_laplacian(const SimplicialComplex& x, int i, const OrientationOrder& order) {
  return SymmetricMatrix(integer_laplacian(x, i, LaplacianKind::kDown, order).cast<double>());
}
SymmetricMatrix lower_laplacian(const SimplicialComplex& x, int i) { return lower_laplacian(x, i, default_order(x)); }

SymmetricMatrix full_laplacian(const SimplicialComplex& x, int i, const OrientationOrder& order) {
  return SymmetricMatrix(integer_laplacian(x, i, LaplacianKind::kFull, order).cast<double>());
}
SymmetricMatrix full_laplacian(const SimplicialComplex& x, int i) { return full_laplacian(x, i, default_order(x)); }

SpectralResult spectral_gap(const SimplicialComplex& x, const OrientationOrder& order, const SpectralOptions& options) {
  const int k = top_dimension(x, "spectral_gap");
  if (x.face_count(k - 1) == 0) throw InputError("spectral_gap: no (k-1)-faces");

  // Z_{k-1} = ker boundary_{k-1} = (im delta_{k-2})^perp.
  const RangeSplit split = range_split(coboundary_matrix(x, k - 2, order).dense(), options.tolerance);
  const SymmetricMatrix lup = upper_laplacian(x, k - 1, order);

  SpectralResult out;
  out.rank_tolerance = options.tolerance;
  out.dim_b = static_cast<std::size_t>(split.rank);
  out.basis_dim = static_cast<std::size_t>(split.complement.cols());
  out.basis = split.complement;
  if (out.basis_dim == 0) {
    out.lambda = ExtendedReal::infinity();
    out.eigenvectors.resize(lup.order(), 0);
    return out;
  }
  const Eigen::MatrixXd restricted = split.complement.transpose() * lup.matrix() * split.complement;
  const EigenDecomposition eig = eigendecompose(SymmetricMatrix::symmetrized(restricted), options.dense_cap);
  out.eigenvalues.assign(eig.values.data(), eig.values.data() + eig.values.size());
  out.eigenvectors = split.complement * eig.vectors;
  out.lambda = ExtendedReal(out.eigenvalues.front());
  return out;
}

SpectralResult spectral_gap(const SimplicialComplex& x, const SpectralOptions& options) {
  return spectral_gap(x, default_order(x), options);
}

RealCochain HodgeSplit::z() const {
  RealCochain out = harmonic;
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += up_part.values[i];
  return out;
}

HodgeSplit hodge_split(const SimplicialComplex& x, const RealCochain& f, const OrientationOrder& order,
                       double tolerance) {
  const int k = top_dimension(x, "hodge_split");
  if (f.dim != k - 1 || f.size() != x.face_count(k - 1)) {
    throw InputError("hodge_split: expects a (k-1)-cochain of the complex");
  }
  const Eigen::VectorXd v = as_vector(f);
  const RangeSplit down = range_split(coboundary_matrix(x, k - 2, order).dense(), tolerance);
  const RangeSplit up = range_split(coboundary_matrix(x, k - 1, order).dense().transpose(), tolerance);
  const Eigen::VectorXd b = down.range * (down.range.transpose() * v);
  const Eigen::VectorXd u = up.range * (up.range.transpose() * v);
  const Eigen::VectorXd h = v - b - u;
  return {as_cochain(k - 1, h), as_cochain(k - 1, u), as_cochain(k - 1, b)};
}

HodgeSplit hodge_split(const SimplicialComplex& x, const RealCochain& f, double tolerance) {
  return hodge_split(x, f, default_order(x), tolerance);
}

HodgeDimensions hodge_dimensions(const SimplicialComplex& x, double tolerance) {
  const int k = top_dimension(x, "hodge_dimensions");
  HodgeDimensions d;
  d.cochains = x.face_count(k - 1);
  d.down = static_cast<std::size_t>(numerical_rank(coboundary_matrix(x, k - 2).dense(), tolerance));
  d.up = static_cast<std::size_t>(numerical_rank(coboundary_matrix(x, k - 1).dense(), tolerance));
  const EigenDecomposition eig = eigendecompose(full_laplacian(x, k - 1));
  const double scale = std::max(1.0, eig.values.size() > 0 ? std::abs(eig.values(eig.values.size() - 1)) : 1.0);
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
    if (eig.values(i) <= 1e-8 * scale) ++d.harmonic;
  }
  return d;
}

ExtendedReal rayleigh_bound(const SimplicialComplex& x, const RealCochain& f, const OrientationOrder& order,
                            double tolerance) {
  const int k = top_dimension(x, "rayleigh_bound");
  if (f.dim != k - 1 || f.size() != x.face_count(k - 1)) {
    throw InputError("rayleigh_bound: expects a (k-1)-cochain of the complex");
  }
  const HodgeSplit split = hodge_split(x, f, order, tolerance);
  const double fnorm = std::sqrt(norm_squared(f));
  if (std::sqrt(norm_squared(split.z())) <= tolerance * std::max(1.0, fnorm)) {
    throw InputError("rayleigh_bound: cochain lies in B^{k-1}; the bound is undefined");
  }
  const SimplicialComplex kx = completion(x);
  const double num = norm_squared(coboundary(x, f, order));
  const double den = norm_squared(coboundary(kx, f, order));
  if (den <= 1e-12) return ExtendedReal::infinity();
  return ExtendedReal(static_cast<double>(x.vertex_count()) * num / den);
}

ExtendedReal rayleigh_bound(const SimplicialComplex& x, const RealCochain& f, double tolerance) {
  return rayleigh_bound(x, f, default_order(x), tolerance);
}

std::size_t real_betti(const SimplicialComplex& x, int dim, double tolerance) {
  if (dim < -1 || dim > x.dimension()) return 0;
  const std::size_t faces = x.face_count(dim);
  const auto rank_out = static_cast<std::size_t>(numerical_rank(coboundary_matrix(x, dim).dense(), tolerance));
  const std::size_t rank_in =
      dim >= 0 ? static_cast<std::size_t>(numerical_rank(coboundary_matrix(x, dim - 1).dense(), tolerance)) : 0;
  return faces - rank_out - rank_in;
}

std::size_t z2_betti(const SimplicialComplex& x, int dim) {
  if (dim < -1 || dim > x.dimension()) return 0;
  const std::size_t faces = x.face_count(dim);
  const std::size_t rank_out = gf2_rank(coboundary_matrix(x, dim).gf2_rows(), faces);
  std::size_t rank_in = 0;
  if (dim >= 0) {
    const OperatorMatrix m = coboundary_matrix(x, dim - 1);
    rank_in = gf2_rank(m.gf2_rows(), m.cols());
  }
  return faces - rank_out - rank_in;
}

}  // namespace hdc
