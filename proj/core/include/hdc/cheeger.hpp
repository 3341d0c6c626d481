#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hdc/complex.hpp"
#include "hdc/extended.hpp"
#include "hdc/partition.hpp"

namespace hdc {

/// Limits on the exhaustive searches. Each is a count of objects examined.
struct EnumerationCaps {
  /// Set partitions of V visited by h, h', phi' and C scans.
  std::uint64_t partition_cap = 10'000'000;
  /// Cochains supported on one rainbow set (h', phi').
  std::uint64_t subset_cap = std::uint64_t{1} << 20;
  /// Cochains of C^{k-1}(X; Z2) walked by h~ and phi.
  std::uint64_t cochain_cap = std::uint64_t{1} << 25;
  /// Elements of one coset f + B^{k-1}(X; Z2).
  std::uint64_t coset_cap = std::uint64_t{1} << 24;
};

/// An exact expansion ratio scale * numerator / denominator. A zero
/// denominator is the +infinity sentinel.
struct ExpansionValue {
  std::int64_t scale = 1;
  std::int64_t numerator = 0;
  std::int64_t denominator = 0;
  std::optional<Partition> witness_partition;
  /// Support of the witness cochain, for the cochain-based quantities.
  std::vector<Simplex> witness_support;
  /// Number of candidates whose ratio was actually evaluated.
  std::uint64_t evaluated = 0;

  bool is_infinite() const noexcept { return denominator == 0; }
  ExtendedReal value() const;
  /// scale * numerator / denominator == p / q exactly (q > 0).
  bool equals(std::int64_t p, std::int64_t q) const noexcept;
};

/// Three-way comparison of the exact values; the sentinel compares greatest.
int compare_values(const ExpansionValue& a, const ExpansionValue& b) noexcept;

namespace cheeger {

/// Faces of x of dimension dim with exactly one vertex in each block. The
/// partition must have dim+1 blocks. Passing completion(x) gives F^boundary.
std::vector<Simplex> rainbow_faces(const SimplicialComplex& x, const Partition& partition, int dim);

/// h(X) = min over (k+1)-block partitions of |V| |F| / |F^boundary|. The
/// witness is the first minimizer in lexicographic restricted-growth order.
ExpansionValue h(const SimplicialComplex& x, const EnumerationCaps& caps = {});

/// C(X) and the d(sigma) table for one (k+1)-block partition.
struct CValue {
  std::int64_t c = 0;
  /// Set when F^boundary is empty; c is then 0.
  bool empty_boundary = false;
  Partition partition;
  std::size_t boundary_faces = 0;  // |F^boundary|
  /// d(sigma) for every (k-1)-face with d > 0, in face order.
  std::vector<std::pair<Simplex, std::int64_t>> d;
};
CValue c_of_x(const SimplicialComplex& x, const Partition& partition);

/// Smallest C(X) over every partition that attains h(X); ties go to the
/// first such partition in canonical order.
CValue c_of_x_min_over_minimizers(const SimplicialComplex& x, const EnumerationCaps& caps = {});

/// max over (k-1)-faces of the number of k-faces of K(X) containing it.
std::int64_t max_completion_degree(const SimplicialComplex& x);

/// h'(X): minimum of |V| |delta_X f| / |delta_K(X) f| over k-block
/// partitions with nonempty blocks and nonzero Z2 cochains supported on the
/// rainbow (k-1)-faces.
ExpansionValue h_prime(const SimplicialComplex& x, const EnumerationCaps& caps = {});

/// h~(X): the same ratio minimized over every Z2 (k-1)-cochain.
ExpansionValue h_tilde(const SimplicialComplex& x, const EnumerationCaps& caps = {});

/// phi(X) = min |delta_X f| / |[f]| over Z2 (k-1)-cochains.
ExpansionValue phi(const SimplicialComplex& x, const EnumerationCaps& caps = {});

/// phi'(X): phi restricted to cochains supported on a k-block rainbow set.
ExpansionValue phi_prime(const SimplicialComplex& x, const EnumerationCaps& caps = {});

/// Graph Cheeger constant h(G) and edge expansion phi(G) by subset
/// enumeration; requires k = 1 and n <= 24.
struct GraphConstants {
  ExpansionValue h;
  ExpansionValue phi;
  /// phi(G) <= h(G) <= 2 phi(G), checked exactly.
  bool sandwich_holds = false;
};
GraphConstants graph_constants(const SimplicialComplex& g);

}  // namespace cheeger
}  // namespace hdc
