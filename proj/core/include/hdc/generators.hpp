#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hdc/complex.hpp"

namespace hdc::generators {

/// The full k-skeleton of the (n-1)-simplex, K_n^k. Requires 0 <= k < n.
SimplicialComplex complete(int n, int k);

/// Six-vertex real projective plane: 10 triangles, complete 1-skeleton.
/// Checks chi = 1, edge degree 2, H^1(Z2) != 0 and the spectral and
/// indicator values that pin the labeling; throws std::logic_error if any
/// check fails.
SimplicialComplex rp2();

/// Complete graph on [n] plus every triangle except {1,2,4}, {1,3,4} and
/// {1,2,i}, {2,3,i}, {3,4,i} for i >= 5. Requires n >= 8.
SimplicialComplex y_complex(int n);

/// Edges {i,i+1}, {i,i+2} and triangles {i,i+1,i+2}, indices mod n.
/// Requires n >= 5.
SimplicialComplex moebius_cyl(int n);

/// Graph on n vertices from 0-based edges.
SimplicialComplex graph(int n, const std::vector<std::pair<int, int>>& edges);

enum class Kind { kComplete, kRp2, kYComplex, kMoebiusCyl, kGraph };

struct Spec {
  Kind kind = Kind::kComplete;
  int n = 0;
  int k = 0;
  std::vector<std::pair<int, int>> edges;  // kGraph only, 0-based
};

/// "complete", "rp2", "y_complex", "moebius_cyl", "graph". InputError otherwise.
Kind parse_kind(const std::string& name);
std::string kind_name(Kind kind);

SimplicialComplex generate(const Spec& spec);

}  // namespace hdc::generators
