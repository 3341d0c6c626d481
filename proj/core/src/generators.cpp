#include "hdc/generators.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "hdc/chains.hpp"
#include "hdc/error.hpp"
#include "hdc/laplacian.hpp"

namespace hdc::generators {

namespace {

void combinations(int n, int size, int start, std::vector<VertexId>& cur, std::vector<std::vector<VertexId>>& out) {
  if (static_cast<int>(cur.size()) == size) {
    out.push_back(cur);
    return;
  }
  for (int v = start; v <= n - (size - static_cast<int>(cur.size())); ++v) {
    cur.push_back(v);
    combinations(n, size, v + 1, cur, out);
    cur.pop_back();
  }
}

void check(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("rp2 generator self-check failed: ") + what);
}

}  // namespace

SimplicialComplex complete(int n, int k) {
  if (n < 1 || n > kMaxVertices) throw InputError("complete: n must be in [1, 64]");
  if (k < 0 || k >= n) throw InputError("complete: need 0 <= k < n");
  std::vector<std::vector<VertexId>> facets;
  std::vector<VertexId> cur;
  combinations(n, k + 1, 0, cur, facets);
  return from_facets(n, facets);
}

SimplicialComplex rp2() {
  static const std::vector<std::vector<VertexId>> labels = {
      {1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {1, 4, 6}, {1, 5, 6},
      {2, 3, 6}, {2, 4, 5}, {2, 5, 6}, {3, 4, 5}, {3, 4, 6},
  };
  std::vector<std::vector<VertexId>> facets;
  for (const auto& t : labels) facets.push_back({t[0] - 1, t[1] - 1, t[2] - 1});
  SimplicialComplex x = from_facets(6, facets);

  const auto f = x.f_vector();
  check(static_cast<long>(f[1]) - static_cast<long>(f[2]) + static_cast<long>(f[3]) == 1, "Euler characteristic");
  for (const Simplex& e : x.faces(1)) check(degree(x, e) == 2, "edge degree");
  check(z2_betti(x, 1) > 0, "H^1(Z2)");

  const Z2Cochain a = indicator(x, 1, {Simplex{0, 1}, Simplex{1, 3}, Simplex{3, 4}});
  check(coboundary(x, a).weight() == 2, "|delta_X 1_A|");
  const SimplicialComplex kx = completion(x);
  check(coboundary(kx, a).weight() == 8, "|delta_K 1_A|");
  const double lambda = spectral_gap(x).lambda.value();
  check(std::abs(lambda - (3.0 - std::sqrt(5.0))) < 1e-8, "spectral gap");
  return x;
}

SimplicialComplex y_complex(int n) {
  if (n < 8 || n > kMaxVertices) throw InputError("y_complex: n must be in [8, 64]");
  // 0-based: 1,2,3,4 -> 0,1,2,3; W = {4..n-1}.
  auto excluded = [](VertexId a, VertexId b, VertexId c) {
    const std::uint64_t m = (std::uint64_t{1} << a) | (std::uint64_t{1} << b) | (std::uint64_t{1} << c);
    auto bits = [](std::initializer_list<int> vs) {
      std::uint64_t r = 0;
      for (int v : vs) r |= std::uint64_t{1} << v;
      return r;
    };
    if (m == bits({0, 1, 3}) || m == bits({0, 2, 3})) return true;
    if (c < 4) return false;
    const std::uint64_t low = m & 0xF;
    return low == bits({0, 1}) || low == bits({1, 2}) || low == bits({2, 3});
  };
  std::vector<std::vector<VertexId>> facets;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) {
      facets.push_back({a, b});
      for (VertexId c = b + 1; c < n; ++c) {
        if (!excluded(a, b, c)) facets.push_back({a, b, c});
      }
    }
  }
  return from_facets(n, facets);
}

SimplicialComplex moebius_cyl(int n) {
  if (n < 5 || n > kMaxVertices) throw InputError("moebius_cyl: n must be in [5, 64]");
  std::vector<std::vector<VertexId>> facets;
  for (VertexId i = 0; i < n; ++i) facets.push_back({i, (i + 1) % n, (i + 2) % n});
  return from_facets(n, facets);
}

SimplicialComplex graph(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 1 || n > kMaxVertices) throw InputError("graph: n must be in [1, 64]");
  std::vector<std::vector<VertexId>> facets;
  for (const auto& [a, b] : edges) {
    if (a == b) throw InputError("graph: self-loop at vertex " + std::to_string(a + 1));
    facets.push_back({a, b});
  }
  return from_facets(n, facets);
}

Kind parse_kind(const std::string& name) {
  if (name == "complete") return Kind::kComplete;
  if (name == "rp2") return Kind::kRp2;
  if (name == "y_complex") return Kind::kYComplex;
  if (name == "moebius_cyl") return Kind::kMoebiusCyl;
  if (name == "graph") return Kind::kGraph;
  throw InputError("unknown generator '" + name + "'");
}

std::string kind_name(Kind kind) {
  switch (kind) {
    case Kind::kComplete: return "complete";
    case Kind::kRp2: return "rp2";
    case Kind::kYComplex: return "y_complex";
    case Kind::kMoebiusCyl: return "moebius_cyl";
    case Kind::kGraph: return "graph";
  }
  return "?";
}

SimplicialComplex generate(const Spec& spec) {
  switch (spec.kind) {
    case Kind::kComplete: return complete(spec.n, spec.k);
    case Kind::kRp2: return rp2();
    case Kind::kYComplex: return y_complex(spec.n);
    case Kind::kMoebiusCyl: return moebius_cyl(spec.n);
    case Kind::kGraph: return graph(spec.n, spec.edges);
  }
  throw InputError("unknown generator");
}

}  // namespace hdc::generators
