#include "hdc/chains.hpp"

#include <bit>
#include <string>

#include "hdc/error.hpp"

namespace hdc {

namespace {

void check_cochain(const SimplicialComplex& x, int dim, std::size_t size, const char* what) {
  if (dim < -1 || dim > x.dimension()) {
    throw InputError(std::string(what) + ": cochain dimension " + std::to_string(dim) + " out of range");
  }
  if (size != x.face_count(dim)) {
    throw InputError(std::string(what) + ": cochain length does not match the face count");
  }
}

// Sign of removing the vertex at numeric position i of tau under order.
int removal_sign(const Simplex& tau, std::size_t i, const OrientationOrder& order) {
  const int pos = order.position(tau[i]);
  int j = 0;
  for (VertexId u : tau.vertices()) {
    if (order.position(u) < pos) ++j;
  }
  return (j % 2 == 0) ? 1 : -1;
}

}  // namespace

Eigen::MatrixXd OperatorMatrix::dense() const {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(rows_), static_cast<Eigen::Index>(cols_));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const Entry& e : entries_[r]) m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(e.col)) = e.sign;
  }
  return m;
}

Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> OperatorMatrix::dense_integer() const {
  Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> m =
      Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>::Zero(static_cast<Eigen::Index>(rows_),
                                                                         static_cast<Eigen::Index>(cols_));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const Entry& e : entries_[r]) m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(e.col)) = e.sign;
  }
  return m;
}

std::vector<BitVector> OperatorMatrix::gf2_rows() const {
  std::vector<BitVector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    BitVector b(cols_);
    for (const Entry& e : entries_[r]) b.flip(e.col);
    out.push_back(std::move(b));
  }
  return out;
}

OperatorMatrix coboundary_matrix(const SimplicialComplex& x, int dim, const OrientationOrder& order) {
  if (dim < -1 || dim > x.dimension()) throw InputError("coboundary_matrix: dimension out of range");
  if (order.size() != x.vertex_count()) throw InputError("orientation order size does not match the complex");
  const auto rows = x.faces(dim + 1);
  std::vector<std::vector<OperatorMatrix::Entry>> entries(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const Simplex& tau = rows[r];
    entries[r].reserve(tau.size());
    for (std::size_t i = 0; i < tau.size(); ++i) {
      const std::uint64_t facet = tau.mask() & ~(std::uint64_t{1} << tau[i]);
      const auto col = x.index_of_mask(dim, facet);
      if (!col) throw InputError("complex is not downward closed");
      entries[r].push_back({*col, removal_sign(tau, i, order)});
    }
  }
  return OperatorMatrix(rows.size(), x.face_count(dim), std::move(entries));
}

OperatorMatrix coboundary_matrix(const SimplicialComplex& x, int dim) {
  return coboundary_matrix(x, dim, OrientationOrder::identity(x.vertex_count()));
}

RealCochain coboundary(const SimplicialComplex& x, const RealCochain& f, const OrientationOrder& order) {
  check_cochain(x, f.dim, f.size(), "coboundary");
  const OperatorMatrix m = coboundary_matrix(x, f.dim, order);
  RealCochain out{f.dim + 1, std::vector<double>(m.rows(), 0.0)};
  for (std::size_t r = 0; r < m.rows(); ++r) {
    double acc = 0.0;
    for (const auto& e : m.row(r)) acc += e.sign * f.values[e.col];
    out.values[r] = acc;
  }
  return out;
}

RealCochain coboundary(const SimplicialComplex& x, const RealCochain& f) {
  return coboundary(x, f, OrientationOrder::identity(x.vertex_count()));
}

Z2Cochain coboundary(const SimplicialComplex& x, const Z2Cochain& f) {
  check_cochain(x, f.dim, f.size(), "coboundary");
  const auto rows = x.faces(f.dim + 1);
  Z2Cochain out{f.dim + 1, BitVector(rows.size())};
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const Simplex& tau = rows[r];
    bool bit = false;
    for (std::size_t i = 0; i < tau.size(); ++i) {
      const auto col = x.index_of_mask(f.dim, tau.mask() & ~(std::uint64_t{1} << tau[i]));
      if (f.bits.test(*col)) bit = !bit;
    }
    out.bits[r] = bit;
  }
  return out;
}

RealCochain boundary(const SimplicialComplex& x, const RealCochain& f, const OrientationOrder& order) {
  check_cochain(x, f.dim, f.size(), "boundary");
  if (f.dim < 0) throw InputError("boundary: cochain dimension must be >= 0");
  const OperatorMatrix m = coboundary_matrix(x, f.dim - 1, order);
  RealCochain out{f.dim - 1, std::vector<double>(m.cols(), 0.0)};
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (const auto& e : m.row(r)) out.values[e.col] += e.sign * f.values[r];
  }
  return out;
}

RealCochain boundary(const SimplicialComplex& x, const RealCochain& f) {
  return boundary(x, f, OrientationOrder::identity(x.vertex_count()));
}

double inner(const RealCochain& a, const RealCochain& b) {
  if (a.dim != b.dim || a.size() != b.size()) throw InputError("inner: cochains live on different spaces");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a.values[i] * b.values[i];
  return s;
}

double norm_squared(const RealCochain& a) { return inner(a, a); }

RealCochain to_real(const Z2Cochain& f) {
  RealCochain out{f.dim, std::vector<double>(f.size(), 0.0)};
  for (std::size_t i = 0; i < f.size(); ++i) out.values[i] = f.bits.test(i) ? 1.0 : 0.0;
  return out;
}

Z2Cochain indicator(const SimplicialComplex& x, int dim, const std::vector<Simplex>& faces) {
  Z2Cochain out = Z2Cochain::zero(x, dim);
  for (const Simplex& s : faces) {
    if (s.dimension() != dim) throw InputError("indicator: face " + s.to_string() + " has the wrong dimension");
    const auto i = x.index_of(s);
    if (!i) throw InputError("indicator: " + s.to_string() + " is not a face");
    out.bits.set(*i);
  }
  return out;
}

std::vector<Simplex> support(const SimplicialComplex& x, const Z2Cochain& f) {
  std::vector<Simplex> out;
  const auto faces = x.faces(f.dim);
  for (std::size_t i = f.bits.find_first(); i != BitVector::npos; i = f.bits.find_next(i)) out.push_back(faces[i]);
  return out;
}

Gf2Echelon coboundary_space(const SimplicialComplex& x, int dim) {
  Gf2Echelon basis(x.face_count(dim));
  if (dim - 1 < -1 || dim > x.dimension()) return basis;
  // Columns of delta_{dim-1} are the coboundaries of elementary cochains.
  const OperatorMatrix m = coboundary_matrix(x, dim - 1);
  std::vector<BitVector> cols(m.cols(), BitVector(m.rows()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (const auto& e : m.row(r)) cols[e.col].flip(r);
  }
  for (auto& c : cols) basis.insert(std::move(c));
  return basis;
}

std::size_t coset_weight(const SimplicialComplex& x, const Z2Cochain& f, std::uint64_t cap) {
  check_cochain(x, f.dim, f.size(), "coset_weight");
  const Gf2Echelon b = coboundary_space(x, f.dim);
  if (b.rank() >= 63 || (std::uint64_t{1} << b.rank()) > cap) {
    throw ResourceError("coset-cap", "coset_weight: 2^" + std::to_string(b.rank()) +
                                         " coset elements exceed the coset cap " + std::to_string(cap));
  }
  return min_weight_in_coset(f.bits, b.basis());
}

PartitionCochain f_cochain(const SimplicialComplex& x, const Partition& partition) {
  const int k = x.dimension();
  if (k < 1) throw InputError("f_cochain: complex dimension must be >= 1");
  if (partition.vertex_count() != x.vertex_count()) throw InputError("f_cochain: partition vertex count mismatch");
  if (partition.block_count() != k + 1) {
    throw InputError("f_cochain: partition must have k+1 = " + std::to_string(k + 1) + " blocks");
  }
  PartitionCochain out{RealCochain::zero(x, k - 1), partition.block_sorted_order()};
  const auto faces = x.faces(k - 1);
  for (std::size_t i = 0; i < faces.size(); ++i) {
    std::uint64_t hit = 0;
    bool repeated = false;
    for (VertexId v : faces[i].vertices()) {
      const std::uint64_t bit = std::uint64_t{1} << partition.block_of(v);
      if (hit & bit) repeated = true;
      hit |= bit;
    }
    if (repeated) continue;
    // k vertices in k distinct blocks: exactly one of the k+1 blocks is missed.
    const int missing = std::countr_zero(~hit);
    const double size = static_cast<double>(partition.block(missing).size());
    out.f.values[i] = (missing % 2 == 0) ? size : -size;
  }
  return out;
}

RealCochain delta_f_values(const SimplicialComplex& x, const Partition& partition) {
  const PartitionCochain pc = f_cochain(x, partition);
  return coboundary(x, pc.f, pc.order);
}

}  // namespace hdc
