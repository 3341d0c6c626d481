#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "hdc/chains.hpp"
#include "hdc/error.hpp"
#include "hdc/generators.hpp"
#include "hdc/laplacian.hpp"
#include "hdc/linalg.hpp"
#include "hdc/random_complex.hpp"
#include "oracles.hpp"

using namespace hdc;

namespace {

std::vector<SimplicialComplex> suite() {
  return {generators::rp2(),          generators::y_complex(8),   generators::moebius_cyl(7),
          generators::complete(5, 2), generators::complete(6, 3), random_complex(7, 2, 0.5, 4),
          random_complex(7, 2, 0.3, 5, true), generators::graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}})};
}

Eigen::MatrixXd random_symmetric(int n, std::mt19937_64& rng) {
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) m(i, j) = m(j, i) = uniform(rng, -1.0, 1.0);
  }
  return m;
}

}  // namespace

TEST(Jacobi, AgreesWithEigenOnRandomMatrices) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 30; ++t) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const Eigen::MatrixXd m = random_symmetric(n, rng);
    const auto ours = eigendecompose(SymmetricMatrix(m));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ref(m);
    EXPECT_LT((ours.values - ref.eigenvalues()).cwiseAbs().maxCoeff(), 1e-10);
    const Eigen::MatrixXd v = ours.vectors;
    EXPECT_LT((v.transpose() * v - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_LT((v * ours.values.asDiagonal() * v.transpose() - m).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(Jacobi, DenseCap) {
  try {
    eigendecompose(SymmetricMatrix(Eigen::MatrixXd::Identity(10, 10)), 9);
    FAIL();
  } catch (const ResourceError& e) {
    EXPECT_EQ(e.cap(), "dense-cap");
  }
  Eigen::MatrixXd a(2, 2);
  a << 1, 2, 3, 4;
  EXPECT_THROW(SymmetricMatrix{a}, InputError);
}

TEST(RangeSplit, OrthonormalComplement) {
  std::mt19937_64 rng(3);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(6, 3);
  for (int i = 0; i < 6; ++i) {
    a(i, 0) = uniform(rng, -1, 1);
    a(i, 1) = uniform(rng, -1, 1);
    a(i, 2) = a(i, 0) + 2 * a(i, 1);
  }
  const RangeSplit s = range_split(a);
  EXPECT_EQ(s.rank, 2);
  EXPECT_EQ(numerical_rank(a), 2);
  EXPECT_LT((s.complement.transpose() * a).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LT((s.range.transpose() * s.complement).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Laplacian, IntegerMatricesMatchDegreeAdjacencyForm) {
  for (const auto& x : suite()) {
    for (int i = 0; i <= x.dimension(); ++i) {
      const IntMatrix up = integer_laplacian(x, i, LaplacianKind::kUp);
      const IntMatrix down = integer_laplacian(x, i, LaplacianKind::kDown);
      EXPECT_EQ((up.cast<double>() - oracle::laplacian_up(x, i)).cwiseAbs().maxCoeff(), 0.0);
      EXPECT_EQ((down.cast<double>() - oracle::laplacian_down(x, i)).cwiseAbs().maxCoeff(), 0.0);
      EXPECT_EQ(integer_laplacian(x, i, LaplacianKind::kFull), up + down);
      EXPECT_LT((upper_laplacian(x, i).matrix() - up.cast<double>()).cwiseAbs().maxCoeff(), 1e-15);
    }
  }
}

TEST(Laplacian, CompleteComplexSumsToNI) {
  for (auto [n, k] : {std::pair{5, 1}, {5, 2}, {6, 2}, {6, 3}}) {
    const auto x = generators::complete(n, k);
    const IntMatrix full = integer_laplacian(x, k - 1, LaplacianKind::kFull);
    EXPECT_EQ(full, IntMatrix::Identity(full.rows(), full.cols()) * n);
    EXPECT_NEAR(spectral_gap(x).lambda.value(), n, 1e-8);
  }
}

TEST(Laplacian, K4SpectrumViaCharacteristicPolynomial) {
  const IntMatrix l = integer_laplacian(generators::complete(4, 1), 0, LaplacianKind::kUp);
  const auto got = oracle::charpoly(l.cast<double>());
  const auto want = oracle::poly_from_roots({0, 4, 4, 4});
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], want[i], 1e-9) << i;
}

TEST(Spectral, MatchesSvdOracle) {
  for (const auto& x : suite()) {
    const SpectralResult r = spectral_gap(x);
    ASSERT_TRUE(r.lambda.is_finite());
    EXPECT_NEAR(r.lambda.value(), oracle::spectral_gap(x), 1e-9);
    EXPECT_EQ(r.basis_dim + r.dim_b, x.face_count(x.dimension() - 1));
  }
}

TEST(Spectral, Rp2IsThreeMinusRootFive) {
  const SpectralResult r = spectral_gap(generators::rp2());
  EXPECT_NEAR(r.lambda.value(), 3.0 - std::sqrt(5.0), 1e-10);
  EXPECT_EQ(r.basis_dim, 10u);
  EXPECT_EQ(r.dim_b, 5u);
}

TEST(Spectral, GraphIsFiedlerValue) {
  const auto g = generators::graph(4, {{0, 1}, {1, 2}, {2, 3}});
  // Path P4: 2 - 2 cos(pi / 4).
  EXPECT_NEAR(spectral_gap(g).lambda.value(), 2.0 - std::sqrt(2.0), 1e-10);
}

TEST(Spectral, BasisIsOrthonormalCycleSpace) {
  const auto x = generators::y_complex(8);
  const SpectralResult r = spectral_gap(x);
  const Eigen::MatrixXd q = r.basis;
  const Eigen::Index m = q.cols();
  EXPECT_LT((q.transpose() * q - Eigen::MatrixXd::Identity(m, m)).cwiseAbs().maxCoeff(), 1e-10);
  const Eigen::MatrixXd d = coboundary_matrix(x, 0).dense();
  EXPECT_LT((d.transpose() * q).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(Spectral, OrientationInvariance) {
  std::mt19937_64 rng(99);
  for (const auto& x : suite()) {
    const double base = spectral_gap(x).lambda.value();
    for (int t = 0; t < 5; ++t) {
      EXPECT_NEAR(spectral_gap(x, random_order(x.vertex_count(), rng)).lambda.value(), base, 1e-7);
    }
  }
}

TEST(Spectral, RejectsLowDimension) {
  EXPECT_THROW(spectral_gap(generators::complete(3, 0)), InputError);
  EXPECT_EQ(random_complex(5, 2, 0.0, 1).dimension(), 1);
}

TEST(Hodge, DimensionsAddUp) {
  for (const auto& x : suite()) {
    const HodgeDimensions d = hodge_dimensions(x);
    EXPECT_EQ(d.harmonic + d.down + d.up, d.cochains);
    EXPECT_EQ(d.harmonic, real_betti(x, x.dimension() - 1));
  }
  EXPECT_EQ(real_betti(generators::rp2(), 1), 0u);
  EXPECT_EQ(z2_betti(generators::rp2(), 1), 1u);
  EXPECT_EQ(z2_betti(generators::moebius_cyl(7), 1), 1u);
}

TEST(Hodge, SplitIsOrthogonalAndExact) {
  std::mt19937_64 rng(17);
  for (const auto& x : suite()) {
    RealCochain f = RealCochain::zero(x, x.dimension() - 1);
    for (auto& v : f.values) v = uniform(rng, -1, 1);
    const HodgeSplit s = hodge_split(x, f);
    for (std::size_t i = 0; i < f.size(); ++i) {
      EXPECT_NEAR(s.harmonic.values[i] + s.up_part.values[i] + s.down_part.values[i], f.values[i], 1e-10);
    }
    EXPECT_NEAR(inner(s.harmonic, s.up_part), 0.0, 1e-10);
    EXPECT_NEAR(inner(s.harmonic, s.down_part), 0.0, 1e-10);
    EXPECT_NEAR(inner(s.up_part, s.down_part), 0.0, 1e-10);
    // b is a coboundary, z is a cycle.
    for (double v : boundary(x, s.z()).values) EXPECT_NEAR(v, 0.0, 1e-10);
    for (double v : coboundary(x, s.harmonic).values) EXPECT_NEAR(v, 0.0, 1e-10);
  }
}

TEST(Rayleigh, BoundsLambdaAndIsTightOnCompleteSkeleta) {
  for (const auto& x : suite()) {
    const SpectralResult r = spectral_gap(x);
    const double lambda = r.lambda.value();
    double best = std::numeric_limits<double>::infinity();
    for (Eigen::Index c = 0; c < r.eigenvectors.cols(); ++c) {
      RealCochain f = RealCochain::zero(x, x.dimension() - 1);
      for (std::size_t i = 0; i < f.size(); ++i) f.values[i] = r.eigenvectors(static_cast<Eigen::Index>(i), c);
      const ExtendedReal b = rayleigh_bound(x, f);
      if (b.is_infinite()) continue;
      EXPECT_GE(b.value(), lambda - 1e-9);
      best = std::min(best, b.value());
    }
    if (x.has_complete_skeleton(x.dimension() - 1)) {
      EXPECT_NEAR(best, lambda, 1e-6 * std::max(1.0, lambda));
    }
  }
  const auto x = generators::complete(5, 2);
  RealCochain b = coboundary(x, RealCochain{0, {1, 0, 0, 0, 0}});
  EXPECT_THROW(rayleigh_bound(x, b), InputError);
}
