#include "hdc/cheeger.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <string>

#include "hdc/chains.hpp"
#include "hdc/error.hpp"
#include "hdc/gf2.hpp"

namespace hdc {

// Exact cross-multiplication of count products.
__extension__ typedef __int128 Wide;

ExtendedReal ExpansionValue::value() const {
  if (is_infinite()) return ExtendedReal::infinity();
  return ExtendedReal(static_cast<double>(scale) * static_cast<double>(numerator) / static_cast<double>(denominator));
}

bool ExpansionValue::equals(std::int64_t p, std::int64_t q) const noexcept {
  if (is_infinite() || q <= 0) return false;
  return static_cast<Wide>(scale) * numerator * q == static_cast<Wide>(p) * denominator;
}

int compare_values(const ExpansionValue& a, const ExpansionValue& b) noexcept {
  if (a.is_infinite() || b.is_infinite()) {
    return static_cast<int>(a.is_infinite()) - static_cast<int>(b.is_infinite());
  }
  const Wide lhs = static_cast<Wide>(a.scale) * a.numerator * b.denominator;
  const Wide rhs = static_cast<Wide>(b.scale) * b.numerator * a.denominator;
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

namespace cheeger {

namespace {

// n1/d1 < n2/d2 for positive denominators.
bool ratio_less(std::int64_t n1, std::int64_t d1, std::int64_t n2, std::int64_t d2) {
  return static_cast<Wide>(n1) * d2 < static_cast<Wide>(n2) * d1;
}

// True when the finite ratio num/den beats the current best.
bool improves(const ExpansionValue& best, std::int64_t num, std::int64_t den) {
  return best.is_infinite() || ratio_less(num, den, best.numerator, best.denominator);
}

std::uint64_t label_bits(std::uint64_t mask, std::span<const int> labels) {
  std::uint64_t bits = 0;
  while (mask != 0) {
    bits |= std::uint64_t{1} << labels[static_cast<std::size_t>(std::countr_zero(mask))];
    mask &= mask - 1;
  }
  return bits;
}

bool is_rainbow(std::uint64_t mask, std::span<const int> labels, int blocks) {
  return std::popcount(mask) == blocks && std::popcount(label_bits(mask, labels)) == blocks;
}

void require_positive_dimension(const SimplicialComplex& x, const char* what) {
  if (x.dimension() < 1) throw InputError(std::string(what) + ": complex dimension must be >= 1");
}

void check_partition_cap(int n, int blocks, const EnumerationCaps& caps, const char* what) {
  const std::uint64_t count = stirling2(n, blocks);
  if (count > caps.partition_cap) {
    throw ResourceError("partition-cap", std::string(what) + ": " + std::to_string(count) + " partitions into " +
                                             std::to_string(blocks) + " blocks exceed partition-cap " +
                                             std::to_string(caps.partition_cap));
  }
}

bool exceeds(std::size_t bits, std::uint64_t cap) {
  return bits >= 63 || (std::uint64_t{1} << bits) > cap;
}

// The k-faces of K(X) with their facets located among X's (k-1)-faces.
struct TopFaces {
  std::vector<std::uint64_t> mask;
  std::vector<std::uint8_t> in_x;
  std::vector<std::vector<std::size_t>> facet;  // facet[t][i]: mask minus its i-th vertex
};

TopFaces top_faces(const SimplicialComplex& x, const SimplicialComplex& kx) {
  const int k = x.dimension();
  TopFaces t;
  for (const Simplex& tau : kx.faces(k)) {
    t.mask.push_back(tau.mask());
    t.in_x.push_back(x.contains(tau) ? 1 : 0);
    std::vector<std::size_t> f;
    for (VertexId v : tau.vertices()) f.push_back(*x.index_of_mask(k - 1, tau.mask() & ~(std::uint64_t{1} << v)));
    t.facet.push_back(std::move(f));
  }
  return t;
}

std::vector<Simplex> faces_at(const SimplicialComplex& x, int dim, const std::vector<std::size_t>& idx) {
  std::vector<Simplex> out;
  const auto faces = x.faces(dim);
  for (std::size_t i : idx) out.push_back(faces[i]);
  std::sort(out.begin(), out.end());
  return out;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Rainbow (k-1)-faces of a k-block partition and the K(X) k-faces meeting
// every block. Each such k-face has exactly two rainbow facets, so delta of a
// cochain supported on the rainbow set is a cut in this graph.
struct LinkGraph {
  std::vector<std::size_t> nodes;  // global (k-1)-face indices
  struct Link {
    std::size_t a, b;
    bool in_x;
  };
  std::vector<Link> links;
  // Components under all links; singletons without links are dropped.
  std::vector<std::vector<std::size_t>> components;
};

LinkGraph link_graph(const SimplicialComplex& x, const TopFaces& top, std::span<const int> labels) {
  const int k = x.dimension();
  LinkGraph g;
  const auto sigma = x.faces(k - 1);
  std::vector<std::size_t> local(sigma.size(), SIZE_MAX);
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (is_rainbow(sigma[i].mask(), labels, k)) {
      local[i] = g.nodes.size();
      g.nodes.push_back(i);
    }
  }
  for (std::size_t t = 0; t < top.mask.size(); ++t) {
    if (std::popcount(label_bits(top.mask[t], labels)) != k) continue;
    std::size_t ends[2];
    int found = 0;
    for (std::size_t f : top.facet[t]) {
      if (local[f] != SIZE_MAX && found < 2) ends[found++] = local[f];
    }
    g.links.push_back({ends[0], ends[1], top.in_x[t] != 0});
  }
  UnionFind uf(g.nodes.size());
  for (const auto& l : g.links) uf.unite(l.a, l.b);
  std::vector<std::size_t> degree(g.nodes.size(), 0);
  for (const auto& l : g.links) {
    ++degree[l.a];
    ++degree[l.b];
  }
  std::map<std::size_t, std::vector<std::size_t>> by_root;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    if (degree[i] > 0) by_root[uf.find(i)].push_back(i);
  }
  for (auto& [root, members] : by_root) g.components.push_back(std::move(members));
  return g;
}

}  // namespace

std::vector<Simplex> rainbow_faces(const SimplicialComplex& x, const Partition& partition, int dim) {
  if (partition.vertex_count() != x.vertex_count()) throw InputError("rainbow_faces: partition vertex count mismatch");
  if (partition.block_count() != dim + 1) throw InputError("rainbow_faces: partition must have dim+1 blocks");
  std::vector<Simplex> out;
  for (const Simplex& s : x.faces(dim)) {
    if (is_rainbow(s.mask(), partition.labels(), dim + 1)) out.push_back(s);
  }
  return out;
}

ExpansionValue h(const SimplicialComplex& x, const EnumerationCaps& caps) {
  require_positive_dimension(x, "h");
  const int n = x.vertex_count();
  const int k = x.dimension();
  check_partition_cap(n, k + 1, caps, "h");
  const SimplicialComplex kx = completion(x);
  const TopFaces top = top_faces(x, kx);

  ExpansionValue best;
  best.scale = n;
  std::vector<int> best_labels;
  for_each_rgs(n, k + 1, [&](std::span<const int> labels) {
    ++best.evaluated;
    std::int64_t f = 0, fb = 0;
    for (std::size_t t = 0; t < top.mask.size(); ++t) {
      if (std::popcount(label_bits(top.mask[t], labels)) == k + 1) {
        ++fb;
        f += top.in_x[t];
      }
    }
    if (fb > 0 && improves(best, f, fb)) {
      best.numerator = f;
      best.denominator = fb;
      best_labels.assign(labels.begin(), labels.end());
    }
    return true;
  });
  if (!best_labels.empty()) best.witness_partition = Partition::from_labels(best_labels);
  return best;
}

namespace {

CValue c_value(const SimplicialComplex& x, const SimplicialComplex& kx, const Partition& partition) {
  const int k = x.dimension();
  CValue out{0, false, partition, 0, {}};
  const std::vector<Simplex> fb = rainbow_faces(kx, partition, k);
  out.boundary_faces = fb.size();
  if (fb.empty()) {
    out.empty_boundary = true;
    return out;
  }
  std::vector<std::int64_t> d(x.face_count(k - 1), 0);
  std::vector<std::vector<std::size_t>> facets;
  for (const Simplex& tau : fb) {
    std::vector<std::size_t> idx;
    for (VertexId v : tau.vertices()) {
      const std::size_t i = *x.index_of_mask(k - 1, tau.mask() & ~(std::uint64_t{1} << v));
      ++d[i];
      idx.push_back(i);
    }
    facets.push_back(std::move(idx));
  }
  for (const auto& idx : facets) {
    std::int64_t sum = 0;
    for (std::size_t i : idx) sum += d[i];
    out.c = std::max(out.c, sum);
  }
  const auto sigma = x.faces(k - 1);
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] > 0) out.d.emplace_back(sigma[i], d[i]);
  }
  return out;
}

}  // namespace

CValue c_of_x(const SimplicialComplex& x, const Partition& partition) {
  require_positive_dimension(x, "c_of_x");
  if (partition.block_count() != x.dimension() + 1) throw InputError("c_of_x: partition must have k+1 blocks");
  return c_value(x, completion(x), partition);
}

CValue c_of_x_min_over_minimizers(const SimplicialComplex& x, const EnumerationCaps& caps) {
  const ExpansionValue hv = h(x, caps);
  const SimplicialComplex kx = completion(x);
  const int n = x.vertex_count();
  const int k = x.dimension();
  if (hv.is_infinite()) {
    std::vector<int> first;
    for_each_rgs(n, k + 1, [&](std::span<const int> labels) {
      first.assign(labels.begin(), labels.end());
      return false;
    });
    return c_value(x, kx, Partition::from_labels(first));
  }
  const TopFaces top = top_faces(x, kx);
  std::optional<CValue> best;
  for_each_rgs(n, k + 1, [&](std::span<const int> labels) {
    std::int64_t f = 0, fb = 0;
    for (std::size_t t = 0; t < top.mask.size(); ++t) {
      if (std::popcount(label_bits(top.mask[t], labels)) == k + 1) {
        ++fb;
        f += top.in_x[t];
      }
    }
    if (fb == 0 || f * hv.denominator != hv.numerator * fb) return true;
    CValue c = c_value(x, kx, Partition::from_labels(labels));
    if (!best || c.c < best->c) best = std::move(c);
    return true;
  });
  return *best;
}

std::int64_t max_completion_degree(const SimplicialComplex& x) {
  require_positive_dimension(x, "max_completion_degree");
  const SimplicialComplex kx = completion(x);
  const int k = x.dimension();
  std::vector<std::int64_t> d(x.face_count(k - 1), 0);
  for (const Simplex& tau : kx.faces(k)) {
    for (VertexId v : tau.vertices()) ++d[*x.index_of_mask(k - 1, tau.mask() & ~(std::uint64_t{1} << v))];
  }
  return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
}

ExpansionValue h_prime(const SimplicialComplex& x, const EnumerationCaps& caps) {
  require_positive_dimension(x, "h_prime");
  const int n = x.vertex_count();
  const int k = x.dimension();
  check_partition_cap(n, k, caps, "h_prime");
  const SimplicialComplex kx = completion(x);
  const TopFaces top = top_faces(x, kx);

  ExpansionValue best;
  best.scale = n;

  // A zero ratio needs a cochain with delta_X f = 0 and delta_K f != 0: some
  // K-component whose X-links alone do not connect it. Check every partition
  // for that before paying for any subset search.
  bool zero = false;
  for_each_rgs(n, k, [&](std::span<const int> labels) {
    const LinkGraph g = link_graph(x, top, labels);
    UnionFind ux(g.nodes.size());
    for (const auto& l : g.links) {
      if (l.in_x) ux.unite(l.a, l.b);
    }
    for (const auto& comp : g.components) {
      const std::size_t root = ux.find(comp.front());
      std::vector<char> in_s(g.nodes.size(), 0);
      bool split = false;
      for (std::size_t v : comp) {
        if (ux.find(v) == root) {
          in_s[v] = 1;
        } else {
          split = true;
        }
      }
      if (!split) continue;
      std::int64_t cut_k = 0;
      std::vector<std::size_t> support;
      for (const auto& l : g.links) cut_k += in_s[l.a] != in_s[l.b];
      for (std::size_t v : comp) {
        if (in_s[v]) support.push_back(g.nodes[v]);
      }
      best.numerator = 0;
      best.denominator = cut_k;
      best.witness_partition = Partition::from_labels(labels);
      best.witness_support = faces_at(x, k - 1, support);
      zero = true;
      return false;
    }
    return true;
  });
  if (zero) return best;

  std::vector<char> in_s;
  for_each_rgs(n, k, [&](std::span<const int> labels) {
    const LinkGraph g = link_graph(x, top, labels);
    std::vector<std::vector<std::pair<std::size_t, bool>>> adj(g.nodes.size());
    for (const auto& l : g.links) {
      adj[l.a].emplace_back(l.b, l.in_x);
      adj[l.b].emplace_back(l.a, l.in_x);
    }
    for (const auto& comp : g.components) {
      const bool all_x = std::all_of(comp.begin(), comp.end(), [&](std::size_t v) {
        return std::all_of(adj[v].begin(), adj[v].end(), [](const auto& e) { return e.second; });
      });
      if (all_x) {
        // Every cut is the same in X and K(X): ratio 1.
        ++best.evaluated;
        const auto deg = static_cast<std::int64_t>(adj[comp.front()].size());
        if (improves(best, deg, deg)) {
          best.numerator = deg;
          best.denominator = deg;
          best.witness_partition = Partition::from_labels(labels);
          best.witness_support = faces_at(x, k - 1, {g.nodes[comp.front()]});
        }
        continue;
      }
      // S and its complement in the component give the same cut, so the last
      // node stays outside.
      const std::size_t c = comp.size();
      if (exceeds(c - 1, caps.subset_cap)) {
        throw ResourceError("subset-cap", "h_prime: partition " + Partition::from_labels(labels).to_string() +
                                              " has a linked rainbow component of " + std::to_string(c) +
                                              " faces; 2^" + std::to_string(c - 1) + " subsets exceed subset-cap " +
                                              std::to_string(caps.subset_cap));
      }
      in_s.assign(g.nodes.size(), 0);
      std::int64_t cut_x = 0, cut_k = 0;
      const std::uint64_t total = std::uint64_t{1} << (c - 1);
      for (std::uint64_t i = 1; i < total; ++i) {
        const std::size_t v = comp[static_cast<std::size_t>(std::countr_zero(i))];
        for (const auto& [u, inx] : adj[v]) {
          const int delta = in_s[u] == in_s[v] ? 1 : -1;
          cut_k += delta;
          if (inx) cut_x += delta;
        }
        in_s[v] ^= 1;
        ++best.evaluated;
        if (improves(best, cut_x, cut_k)) {
          best.numerator = cut_x;
          best.denominator = cut_k;
          best.witness_partition = Partition::from_labels(labels);
          std::vector<std::size_t> support;
          for (std::size_t u : comp) {
            if (in_s[u]) support.push_back(g.nodes[u]);
          }
          best.witness_support = faces_at(x, k - 1, support);
        }
      }
    }
    return true;
  });
  return best;
}

ExpansionValue h_tilde(const SimplicialComplex& x, const EnumerationCaps& caps) {
  require_positive_dimension(x, "h_tilde");
  const int n = x.vertex_count();
  const int k = x.dimension();
  const SimplicialComplex kx = completion(x);
  const TopFaces top = top_faces(x, kx);
  const std::size_t nodes = x.face_count(k - 1);

  ExpansionValue best;
  best.scale = n;

  // Zero iff ker delta_X is not contained in ker delta_K.
  const OperatorMatrix bx = coboundary_matrix(x, k - 1);
  for (const BitVector& v : gf2_nullspace(bx.gf2_rows(), nodes)) {
    std::int64_t weight = 0;
    for (const auto& fac : top.facet) {
      bool parity = false;
      for (std::size_t i : fac) parity ^= v.test(i);
      weight += parity;
    }
    if (weight > 0) {
      best.numerator = 0;
      best.denominator = weight;
      std::vector<std::size_t> support;
      for (std::size_t i = v.find_first(); i != BitVector::npos; i = v.find_next(i)) support.push_back(i);
      best.witness_support = faces_at(x, k - 1, support);
      best.evaluated = 1;
      return best;
    }
  }

  // Otherwise the minimum splits over connected components of the K(X)
  // hypergraph; a mediant never beats its parts.
  UnionFind uf(nodes);
  std::vector<std::vector<std::size_t>> incident(nodes);
  for (std::size_t t = 0; t < top.facet.size(); ++t) {
    for (std::size_t i : top.facet[t]) {
      uf.unite(i, top.facet[t].front());
      incident[i].push_back(t);
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> by_root;
  for (std::size_t i = 0; i < nodes; ++i) {
    if (!incident[i].empty()) by_root[uf.find(i)].push_back(i);
  }
  std::vector<char> parity(top.mask.size(), 0);
  for (const auto& [root, comp] : by_root) {
    bool all_x = true;
    for (std::size_t v : comp) {
      for (std::size_t t : incident[v]) all_x = all_x && top.in_x[t];
    }
    if (all_x) {
      ++best.evaluated;
      const auto deg = static_cast<std::int64_t>(incident[comp.front()].size());
      if (improves(best, deg, deg)) {
        best.numerator = deg;
        best.denominator = deg;
        best.witness_support = faces_at(x, k - 1, {comp.front()});
      }
      continue;
    }
    const std::size_t c = comp.size();
    if (exceeds(c, caps.cochain_cap)) {
      throw ResourceError("cochain-cap", "h_tilde: a component of " + std::to_string(c) + " faces needs 2^" +
                                             std::to_string(c) + " cochains, over cochain-cap " +
                                             std::to_string(caps.cochain_cap));
    }
    std::fill(parity.begin(), parity.end(), 0);
    std::int64_t wx = 0, wk = 0;
    std::uint64_t code = 0;
    const std::uint64_t total = std::uint64_t{1} << c;
    for (std::uint64_t i = 1; i < total; ++i) {
      const auto bit = static_cast<std::size_t>(std::countr_zero(i));
      code ^= std::uint64_t{1} << bit;
      for (std::size_t t : incident[comp[bit]]) {
        const int delta = parity[t] ? -1 : 1;
        parity[t] ^= 1;
        wk += delta;
        if (top.in_x[t]) wx += delta;
      }
      ++best.evaluated;
      if (wk > 0 && improves(best, wx, wk)) {
        best.numerator = wx;
        best.denominator = wk;
        std::vector<std::size_t> support;
        for (std::size_t j = 0; j < c; ++j) {
          if (code >> j & 1) support.push_back(comp[j]);
        }
        best.witness_support = faces_at(x, k - 1, support);
      }
    }
  }
  return best;
}

namespace {

std::vector<std::size_t> bit_indices(const BitVector& v) {
  std::vector<std::size_t> out;
  for (std::size_t i = v.find_first(); i != BitVector::npos; i = v.find_next(i)) out.push_back(i);
  return out;
}

// Lightest element of v + span(basis) by a Gray-code walk.
BitVector lightest_in_coset(const BitVector& v, const std::vector<BitVector>& basis) {
  BitVector w = v, best = v;
  const std::uint64_t total = std::uint64_t{1} << basis.size();
  for (std::uint64_t i = 1; i < total && best.any(); ++i) {
    w ^= basis[static_cast<std::size_t>(std::countr_zero(i))];
    if (w.count() < best.count()) best = w;
  }
  return best;
}

void check_coset_cap(const Gf2Echelon& b, const EnumerationCaps& caps, const char* what) {
  if (exceeds(b.rank(), caps.coset_cap)) {
    throw ResourceError("coset-cap", std::string(what) + ": 2^" + std::to_string(b.rank()) +
                                         " coset elements exceed coset-cap " + std::to_string(caps.coset_cap));
  }
}

}  // namespace

ExpansionValue phi(const SimplicialComplex& x, const EnumerationCaps& caps) {
  require_positive_dimension(x, "phi");
  const int k = x.dimension();
  const std::size_t nodes = x.face_count(k - 1);
  const Gf2Echelon b = coboundary_space(x, k - 1);
  const OperatorMatrix bx = coboundary_matrix(x, k - 1);
  const std::vector<BitVector> rows = bx.gf2_rows();

  ExpansionValue best;
  best.scale = 1;

  // phi = 0 exactly when some cocycle is not a coboundary.
  for (const BitVector& v : gf2_nullspace(rows, nodes)) {
    if (b.in_span(v)) continue;
    check_coset_cap(b, caps, "phi");
    const BitVector w = lightest_in_coset(v, b.basis());
    best.numerator = 0;
    best.denominator = static_cast<std::int64_t>(w.count());
    best.witness_support = faces_at(x, k - 1, bit_indices(w));
    best.evaluated = 1;
    return best;
  }

  if (exceeds(nodes, caps.cochain_cap)) {
    throw ResourceError("cochain-cap", "phi: 2^" + std::to_string(nodes) + " cochains exceed cochain-cap " +
                                           std::to_string(caps.cochain_cap));
  }
  check_coset_cap(b, caps, "phi");

  // Cosets are indexed by their reduced representatives, which vanish on the
  // pivot columns; walk those with a Gray code over the free columns.
  std::vector<char> pivot(nodes, 0);
  for (std::size_t p : b.pivots()) pivot[p] = 1;
  std::vector<std::size_t> free_cols;
  for (std::size_t i = 0; i < nodes; ++i) {
    if (!pivot[i]) free_cols.push_back(i);
  }
  std::vector<std::uint64_t> basis;
  for (const BitVector& v : b.basis()) {
    std::uint64_t m = 0;
    for (std::size_t i : bit_indices(v)) m |= std::uint64_t{1} << i;
    basis.push_back(m);
  }
  std::vector<std::vector<std::size_t>> incident(nodes);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t i : bit_indices(rows[r])) incident[i].push_back(r);
  }
  std::vector<char> parity(rows.size(), 0);
  std::int64_t delta_weight = 0;
  std::uint64_t rep = 0, best_rep = 0;
  const std::uint64_t total = std::uint64_t{1} << free_cols.size();
  const std::uint64_t span = std::uint64_t{1} << basis.size();
  for (std::uint64_t i = 1; i < total; ++i) {
    const std::size_t col = free_cols[static_cast<std::size_t>(std::countr_zero(i))];
    rep ^= std::uint64_t{1} << col;
    for (std::size_t r : incident[col]) {
      delta_weight += parity[r] ? -1 : 1;
      parity[r] ^= 1;
    }
    std::uint64_t w = rep;
    int weight = std::popcount(w);
    for (std::uint64_t j = 1; j < span && weight > 0; ++j) {
      w ^= basis[static_cast<std::size_t>(std::countr_zero(j))];
      weight = std::min(weight, std::popcount(w));
    }
    ++best.evaluated;
    if (improves(best, delta_weight, weight)) {
      best.numerator = delta_weight;
      best.denominator = weight;
      best_rep = rep;
    }
  }
  if (!best.is_infinite()) {
    BitVector v(nodes);
    for (std::size_t i = 0; i < nodes; ++i) v[i] = (best_rep >> i) & 1;
    best.witness_support = faces_at(x, k - 1, bit_indices(lightest_in_coset(v, b.basis())));
  }
  return best;
}

ExpansionValue phi_prime(const SimplicialComplex& x, const EnumerationCaps& caps) {
  require_positive_dimension(x, "phi_prime");
  const int n = x.vertex_count();
  const int k = x.dimension();
  check_partition_cap(n, k, caps, "phi_prime");
  const SimplicialComplex kx = completion(x);
  const TopFaces top = top_faces(x, kx);
  const std::size_t nodes = x.face_count(k - 1);
  const Gf2Echelon b = coboundary_space(x, k - 1);
  check_coset_cap(b, caps, "phi_prime");
  std::map<BitVector, std::int64_t> weight_of;

  ExpansionValue best;
  best.scale = 1;
  for_each_rgs(n, k, [&](std::span<const int> labels) {
    const LinkGraph g = link_graph(x, top, labels);
    const std::size_t c = g.nodes.size();
    if (exceeds(c, caps.subset_cap)) {
      throw ResourceError("subset-cap", "phi_prime: partition " + Partition::from_labels(labels).to_string() +
                                            " has " + std::to_string(c) + " rainbow faces; 2^" + std::to_string(c) +
                                            " cochains exceed subset-cap " + std::to_string(caps.subset_cap));
    }
    std::vector<std::vector<std::size_t>> adj_x(c);
    for (const auto& l : g.links) {
      if (!l.in_x) continue;
      adj_x[l.a].push_back(l.b);
      adj_x[l.b].push_back(l.a);
    }
    std::vector<char> in_s(c, 0);
    BitVector f(nodes);
    std::int64_t cut_x = 0;
    const std::uint64_t total = std::uint64_t{1} << c;
    for (std::uint64_t i = 1; i < total; ++i) {
      const auto v = static_cast<std::size_t>(std::countr_zero(i));
      for (std::size_t u : adj_x[v]) cut_x += in_s[u] == in_s[v] ? 1 : -1;
      in_s[v] ^= 1;
      f.flip(g.nodes[v]);
      const BitVector rep = b.reduce(f);
      auto it = weight_of.find(rep);
      if (it == weight_of.end()) {
        it = weight_of.emplace(rep, static_cast<std::int64_t>(min_weight_in_coset(rep, b.basis()))).first;
      }
      ++best.evaluated;
      const std::int64_t w = it->second;
      if (w > 0 && improves(best, cut_x, w)) {
        best.numerator = cut_x;
        best.denominator = w;
        best.witness_partition = Partition::from_labels(labels);
        best.witness_support = faces_at(x, k - 1, bit_indices(f));
      }
    }
    return !(best.numerator == 0 && !best.is_infinite());
  });
  return best;
}

GraphConstants graph_constants(const SimplicialComplex& g) {
  if (g.dimension() > 1) throw InputError("graph_constants: complex dimension must be <= 1");
  const int n = g.vertex_count();
  if (n > 24) throw ResourceError("vertex-cap", "graph_constants: n = " + std::to_string(n) + " exceeds 24");
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
  for (const Simplex& e : g.faces(1)) {
    adj[static_cast<std::size_t>(e[0])] |= std::uint64_t{1} << e[1];
    adj[static_cast<std::size_t>(e[1])] |= std::uint64_t{1} << e[0];
  }
  GraphConstants out;
  out.h.scale = n;
  out.phi.scale = 1;
  std::uint64_t best_h = 0, best_phi = 0;
  std::uint64_t set = 0;
  std::int64_t cut = 0;
  const std::uint64_t total = n >= 1 ? std::uint64_t{1} << n : 1;
  // Vertex n-1 stays outside: A and its complement give the same h.
  for (std::uint64_t i = 1; i < total / 2; ++i) {
    const auto v = static_cast<std::size_t>(std::countr_zero(i));
    const std::uint64_t bit = std::uint64_t{1} << v;
    const std::int64_t inside = std::popcount(adj[v] & set), outside = std::popcount(adj[v] & ~set);
    cut += (set & bit) ? inside - outside : outside - inside;
    set ^= bit;
    const std::int64_t a = std::popcount(set);
    const std::int64_t rest = n - a;
    ++out.h.evaluated;
    if (improves(out.h, cut, a * rest)) {
      out.h.numerator = cut;
      out.h.denominator = a * rest;
      best_h = set;
    }
    // phi uses whichever side is not larger than n/2.
    const std::int64_t small = std::min(a, rest);
    ++out.phi.evaluated;
    if (improves(out.phi, cut, small)) {
      out.phi.numerator = cut;
      out.phi.denominator = small;
      best_phi = a <= rest ? set : (~set & (total - 1));
    }
  }
  auto as_partition = [n](std::uint64_t s) {
    std::vector<int> labels(static_cast<std::size_t>(n), 0);
    const int first = 0;
    const bool first_in = (s & 1) != 0;
    for (int v = first; v < n; ++v) labels[static_cast<std::size_t>(v)] = (((s >> v) & 1) != 0) == first_in ? 0 : 1;
    return Partition::from_labels(labels);
  };
  if (!out.h.is_infinite()) {
    out.h.witness_partition = as_partition(best_h);
    out.phi.witness_partition = as_partition(best_phi);
    for (int v = 0; v < n; ++v) {
      if ((best_phi >> v) & 1) out.phi.witness_support.push_back(Simplex{v});
    }
  }
  if (out.h.is_infinite()) {
    out.sandwich_holds = out.phi.is_infinite();
  } else {
    // phi <= h <= 2 phi, cross-multiplied.
    const Wide ph = static_cast<Wide>(out.phi.numerator) * out.h.denominator;
    const Wide hp = static_cast<Wide>(n) * out.h.numerator * out.phi.denominator;
    out.sandwich_holds = ph <= hp && hp <= 2 * ph;
  }
  return out;
}

}  // namespace cheeger
}  // namespace hdc
