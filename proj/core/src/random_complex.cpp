#include "hdc/random_complex.hpp"

#include <bit>
#include <numeric>

#include "hdc/error.hpp"

namespace hdc {

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

namespace {

std::vector<std::uint64_t> subsets_of_size(int n, int size) {
  std::vector<std::uint64_t> out;
  std::vector<int> idx(static_cast<std::size_t>(size));
  std::iota(idx.begin(), idx.end(), 0);
  if (size > n) return out;
  while (true) {
    std::uint64_t m = 0;
    for (int v : idx) m |= std::uint64_t{1} << v;
    out.push_back(m);
    int i = size - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - size + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < size; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

std::vector<VertexId> vertices_of(std::uint64_t m) {
  std::vector<VertexId> out;
  for (; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

}  // namespace

SimplicialComplex random_complex(int n, int k, double p, std::uint64_t seed, bool thin) {
  if (n < 1 || n > kMaxVertices) throw InputError("random_complex: n must be in [1, 64]");
  if (k < 1 || k >= n) throw InputError("random_complex: need 1 <= k < n");
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("random_complex: p must be in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<VertexId>> facets;
  for (std::uint64_t m : subsets_of_size(n, k + 1)) {
    if (uniform01(rng) < p) {
      facets.push_back(vertices_of(m));
    }
  }
  // Thinning keeps only the (k-2)-skeleton complete; the closure of the kept
  // k-faces brings back exactly the covered (k-1)-faces.
  const int low = thin ? k - 1 : k;
  for (std::uint64_t m : subsets_of_size(n, low)) facets.push_back(vertices_of(m));
  return from_facets(n, facets);
}

SimplicialComplex random_connected_graph(int n, double p, std::mt19937_64& rng) {
  if (n < 1 || n > kMaxVertices) throw InputError("random_connected_graph: n must be in [1, 64]");
  if (!(p > 0.0 && p <= 1.0) && n > 1) throw InputError("random_connected_graph: p must be in (0, 1]");
  while (true) {
    std::vector<std::vector<VertexId>> edges;
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    for (VertexId a = 0; a < n; ++a) {
      for (VertexId b = a + 1; b < n; ++b) {
        if (uniform01(rng) < p) {
          edges.push_back({a, b});
          adj[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
          adj[static_cast<std::size_t>(b)] |= std::uint64_t{1} << a;
        }
      }
    }
    std::uint64_t seen = 1, frontier = 1;
    while (frontier != 0) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f != 0; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
      frontier = next & ~seen;
      seen |= next;
    }
    if (std::popcount(seen) == n) return from_facets(n, edges);
  }
}

OrientationOrder random_order(int n, std::mt19937_64& rng) {
  std::vector<VertexId> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    const auto j = static_cast<int>(uniform01(rng) * (i + 1));
    std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]);
  }
  return OrientationOrder(std::move(order));
}

}  // namespace hdc
