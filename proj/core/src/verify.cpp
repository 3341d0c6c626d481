#include "hdc/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

#include "hdc/chains.hpp"
#include "hdc/complex_io.hpp"
#include "hdc/error.hpp"
#include "hdc/generators.hpp"
#include "hdc/random_complex.hpp"
#include "hdc/report.hpp"

namespace hdc::verify {

namespace {

struct ClaimName {
  ClaimId id;
  const char* name;
};

constexpr ClaimName kClaims[] = {
    {ClaimId::kThm1General, "THM1_GENERAL"}, {ClaimId::kThm2, "THM2"},   {ClaimId::kThm3, "THM3"},
    {ClaimId::kLem2, "LEM2"},                {ClaimId::kLem3, "LEM3"},   {ClaimId::kLem5, "LEM5"},
    {ClaimId::kLem6a, "LEM6A"},              {ClaimId::kLem6b, "LEM6B"}, {ClaimId::kLem7, "LEM7"},
    {ClaimId::kLem8, "LEM8"},                {ClaimId::kProp6, "PROP6"}, {ClaimId::kRelPhiHtilde, "REL_PHI_HTILDE"},
};

// Collects checks for one certificate. Inequalities lhs <= rhs get a
// relative tolerance, identities an absolute one; the slack is the smallest
// rhs - lhs seen, and -|a - b| for identities.
class Checker {
 public:
  void leq(const std::string& name, double lhs, ExtendedReal rhs) {
    bool ok = true;
    nlohmann::json c{{"check", name}, {"lhs", lhs}, {"rhs", report::number(rhs)}};
    if (rhs.is_finite()) {
      ok = lhs <= rhs.value() + kRelativeTolerance * std::max(1.0, std::abs(rhs.value()));
      margin(rhs.value() - lhs);
    }
    finish(std::move(c), ok);
  }
  // Both sides exact; margin is informational.
  void exact(const std::string& name, bool ok, double margin_value, nlohmann::json detail = {}) {
    nlohmann::json c{{"check", name}};
    if (!detail.is_null()) c["detail"] = std::move(detail);
    margin(margin_value);
    finish(std::move(c), ok);
  }
  void equal(const std::string& name, double a, double b) {
    const double dev = std::abs(a - b);
    margin(-dev);
    finish({{"check", name}, {"lhs", a}, {"rhs", b}}, dev <= kIntegerTolerance);
  }
  void close(const std::string& name, double a, double b) {
    const double dev = std::abs(a - b);
    margin(-dev);
    finish({{"check", name}, {"lhs", a}, {"rhs", b}}, dev <= kRelativeTolerance * std::max(1.0, std::abs(b)));
  }

  bool pass() const { return pass_; }
  ExtendedReal slack() const { return slack_; }
  nlohmann::json checks() const { return checks_; }

 private:
  void margin(double m) {
    if (slack_.is_infinite() || m < slack_.value()) slack_ = ExtendedReal(m);
  }
  void finish(nlohmann::json c, bool ok) {
    c["ok"] = ok;
    pass_ = pass_ && ok;
    checks_.push_back(std::move(c));
  }
  bool pass_ = true;
  ExtendedReal slack_ = ExtendedReal::infinity();
  nlohmann::json checks_ = nlohmann::json::array();
};

Certificate make(ClaimId id, nlohmann::json inputs, nlohmann::json quantities, const Checker& ch) {
  inputs["claim"] = claim_name(id);
  Certificate c;
  c.claim = id;
  c.digest = report::fnv1a_hex(inputs.dump());
  c.inputs = std::move(inputs);
  quantities["checks"] = ch.checks();
  c.quantities = std::move(quantities);
  c.pass = ch.pass();
  c.slack = ch.slack();
  return c;
}

nlohmann::json complex_inputs(const SimplicialComplex& x) { return {{"complex", io::complex_to_json(x)}}; }

ExtendedReal lambda_of(const SimplicialComplex& x, const Options& opt) { return spectral_gap(x, opt.spectral).lambda; }

ExtendedReal scaled(ExtendedReal v, double factor) {
  if (v.is_infinite()) return v;
  return ExtendedReal(v.value() * factor);
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Quadratic form <L f, f> from an exact integer Laplacian.
double quadratic(const IntMatrix& l, const std::vector<double>& f) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < l.rows(); ++i) {
    double row = 0.0;
    for (Eigen::Index j = 0; j < l.cols(); ++j) row += static_cast<double>(l(i, j)) * f[static_cast<std::size_t>(j)];
    s += row * f[static_cast<std::size_t>(i)];
  }
  return s;
}

Partition first_partition(int n, int blocks) {
  std::vector<int> labels;
  for_each_rgs(n, blocks, [&](std::span<const int> l) {
    labels.assign(l.begin(), l.end());
    return false;
  });
  return Partition::from_labels(labels);
}

Partition random_partition(int n, int blocks, std::mt19937_64& rng) {
  std::vector<int> labels(static_cast<std::size_t>(n));
  while (true) {
    std::uint64_t used = 0;
    for (int& l : labels) {
      l = static_cast<int>(uniform01(rng) * blocks);
      used |= std::uint64_t{1} << l;
    }
    if (std::popcount(used) == blocks) break;
  }
  // Relabel by first appearance so the partition is canonical.
  std::vector<int> remap(static_cast<std::size_t>(blocks), -1);
  int next = 0;
  for (int& l : labels) {
    if (remap[static_cast<std::size_t>(l)] < 0) remap[static_cast<std::size_t>(l)] = next++;
    l = remap[static_cast<std::size_t>(l)];
  }
  return Partition::from_labels(labels);
}

}  // namespace

std::string claim_name(ClaimId id) {
  for (const auto& c : kClaims) {
    if (c.id == id) return c.name;
  }
  return "?";
}

ClaimId parse_claim(const std::string& name) {
  for (const auto& c : kClaims) {
    if (name == c.name) return c.id;
  }
  throw InputError("unknown claim '" + name + "'");
}

const std::vector<ClaimId>& all_claims() {
  static const std::vector<ClaimId> ids = [] {
    std::vector<ClaimId> v;
    for (const auto& c : kClaims) v.push_back(c.id);
    return v;
  }();
  return ids;
}

nlohmann::json to_json(const Certificate& c) {
  return {{"claim_id", claim_name(c.claim)},
          {"digest", c.digest},
          {"inputs", c.inputs},
          {"quantities", c.quantities},
          {"verdict", c.pass ? "pass" : "fail"},
          {"slack", report::number(c.slack)}};
}

Certificate theorem1_general(const SimplicialComplex& x, const Options& opt) {
  const ExtendedReal lambda = lambda_of(x, opt);
  const ExpansionValue hv = cheeger::h(x, opt.caps);
  Checker ch;
  ch.leq("lambda <= h", lambda.value(), hv.value());
  return make(ClaimId::kThm1General, complex_inputs(x),
              {{"lambda", report::number(lambda)}, {"h", report::expansion("h", hv)}}, ch);
}

Certificate theorem2(const SimplicialComplex& x, const Options& opt) {
  const int n = x.vertex_count();
  const int k = x.dimension();
  const ExtendedReal lambda = lambda_of(x, opt);
  const ExpansionValue hv = cheeger::h(x, opt.caps);
  const std::int64_t cprime = cheeger::max_completion_degree(x);
  nlohmann::json q{{"lambda", report::number(lambda)}, {"h", report::expansion("h", hv)}, {"n", n},
                   {"max_completion_degree", cprime}};
  Checker ch;
  if (hv.is_infinite()) {
    ch.leq("lambda <= C/|V| h", lambda.value(), ExtendedReal::infinity());
  } else {
    const cheeger::CValue c =
        opt.c_scan_all ? cheeger::c_of_x_min_over_minimizers(x, opt.caps) : cheeger::c_of_x(x, *hv.witness_partition);
    q["C"] = report::c_value(c);
    const ExtendedReal bound = scaled(hv.value(), static_cast<double>(c.c) / n);
    const ExtendedReal corollary = scaled(hv.value(), static_cast<double>((k + 1) * cprime) / n);
    q["bound"] = report::number(bound);
    q["corollary_bound"] = report::number(corollary);
    ch.leq("lambda <= C/|V| h", lambda.value(), bound);
    ch.leq("lambda <= (k+1)C'/|V| h", lambda.value(), corollary);
    ch.exact("C <= |V|", c.c <= n, static_cast<double>(n - c.c));
    ch.exact("C <= (k+1)C'", c.c <= (k + 1) * cprime, static_cast<double>((k + 1) * cprime - c.c));
  }
  nlohmann::json inputs = complex_inputs(x);
  inputs["c_scan_all"] = opt.c_scan_all;
  return make(ClaimId::kThm2, std::move(inputs), std::move(q), ch);
}

Certificate theorem3(const SimplicialComplex& x, const Options& opt) {
  const ExtendedReal lambda = lambda_of(x, opt);
  const ExpansionValue hv = cheeger::h(x, opt.caps);
  const ExpansionValue hp = cheeger::h_prime(x, opt.caps);
  Checker ch;
  ch.leq("lambda <= h'", lambda.value(), hp.value());
  const int cmp = compare_values(hp, hv);
  ch.exact("h' <= h", cmp <= 0, 0.0);
  if (hv.equals(0, 1)) ch.exact("h = 0 implies h' = 0", hp.equals(0, 1), 0.0);
  return make(ClaimId::kThm3, complex_inputs(x),
              {{"lambda", report::number(lambda)},
               {"h", report::expansion("h", hv)},
               {"h_prime", report::expansion("h_prime", hp)}},
              ch);
}

std::vector<Certificate> lemmas(const SimplicialComplex& x, const std::optional<Partition>& partition,
                                const Options& opt) {
  const int n = x.vertex_count();
  const int k = x.dimension();
  if (k < 1) throw InputError("lemmas: complex dimension must be >= 1");
  Partition p = partition ? *partition : [&] {
    const ExpansionValue hv = cheeger::h(x, opt.caps);
    return hv.witness_partition ? *hv.witness_partition : first_partition(n, k + 1);
  }();
  const SimplicialComplex kx = completion(x);
  const PartitionCochain pc = f_cochain(x, p);
  const RealCochain& f = pc.f;
  const std::vector<Simplex> rainbow = cheeger::rainbow_faces(x, p, k);
  const std::vector<Simplex> rainbow_k = cheeger::rainbow_faces(kx, p, k);
  const double nn = static_cast<double>(n);
  const SpectralResult spec = spectral_gap(x, opt.spectral);
  const double lambda = spec.lambda.value();

  nlohmann::json inputs = complex_inputs(x);
  inputs["partition"] = report::partition(p);
  inputs["seed"] = opt.seed;
  inputs["trials"] = opt.trials;
  inputs["g_distribution"] = "uniform[-1,1] iid";
  const nlohmann::json base{{"n", n}, {"F", rainbow.size()}, {"F_boundary", rainbow_k.size()}};
  std::vector<Certificate> out;

  if (x.has_complete_skeleton(k - 1)) {
    Checker ch;
    const RealCochain bf = boundary(x, f, pc.order);
    double worst = 0.0;
    for (double v : bf.values) worst = std::max(worst, std::abs(v));
    ch.equal("max |boundary f|", worst, 0.0);
    const double ff = norm_squared(f);
    ch.equal("<f,f> = |V||F^boundary|", ff, nn * static_cast<double>(rainbow_k.size()));
    double prod = 1.0;
    for (const auto& b : p.blocks()) prod *= static_cast<double>(b.size());
    ch.equal("|F^boundary| = prod |A_i|", static_cast<double>(rainbow_k.size()), prod);
    nlohmann::json q = base;
    q["f_norm_squared"] = ff;
    out.push_back(make(ClaimId::kLem2, inputs, std::move(q), ch));
  }

  const RealCochain df = coboundary(x, f, pc.order);
  {
    Checker ch;
    const auto top = x.faces(k);
    bool values_ok = true;
    std::vector<Simplex> support;
    for (std::size_t i = 0; i < df.values.size(); ++i) {
      const double v = df.values[i];
      if (std::abs(v) > kIntegerTolerance) support.push_back(top[i]);
      if (std::abs(v) > kIntegerTolerance && std::abs(v - nn) > kIntegerTolerance) values_ok = false;
    }
    ch.exact("delta f in {0, |V|}", values_ok, 0.0);
    ch.exact("supp delta f = F", support == rainbow, 0.0);
    const double dd = norm_squared(df);
    ch.equal("<delta f, delta f> = |V|^2 |F|", dd, nn * nn * static_cast<double>(rainbow.size()));
    nlohmann::json q = base;
    q["delta_f_norm_squared"] = dd;
    out.push_back(make(ClaimId::kLem3, inputs, std::move(q), ch));
  }

  const HodgeSplit split = hodge_split(x, f, pc.order, opt.spectral.tolerance);
  const RealCochain z = split.z();
  {
    Checker ch;
    const double zz = norm_squared(z);
    const ExtendedReal bound = zz > 1e-12 ? ExtendedReal(nn * nn * static_cast<double>(rainbow.size()) / zz)
                                          : ExtendedReal::infinity();
    ch.leq("lambda <= |V|^2 |F| / <z,z>", lambda, bound);
    const RealCochain dz = coboundary(x, z, pc.order);
    ch.close("<L z, z> = <L f, f>", norm_squared(dz), norm_squared(df));
    const RealCochain bz = boundary(x, z, pc.order);
    double worst = 0.0;
    for (double v : bz.values) worst = std::max(worst, std::abs(v));
    ch.exact("z in Z_{k-1}", worst <= kIntegerTolerance * std::max(1.0, std::sqrt(norm_squared(f))), -worst);
    nlohmann::json q = base;
    q["lambda"] = lambda;
    q["z_norm_squared"] = zz;
    q["bound"] = report::number(bound);
    out.push_back(make(ClaimId::kLem5, inputs, std::move(q), ch));
  }

  {
    // d(sigma) over F^boundary, then q(tau, g) for the exact b and random g.
    std::vector<double> d(x.face_count(k - 1), 0.0);
    std::vector<std::vector<std::size_t>> facets;
    for (const Simplex& tau : rainbow_k) {
      std::vector<std::size_t> idx;
      for (VertexId v : tau.vertices()) {
        const std::size_t i = *x.index_of_mask(k - 1, tau.mask() & ~(std::uint64_t{1} << v));
        d[i] += 1.0;
        idx.push_back(i);
      }
      facets.push_back(std::move(idx));
    }
    std::vector<std::vector<double>> candidates{split.b().values};
    std::mt19937_64 rng(opt.seed);
    for (int t = 0; t < opt.trials; ++t) {
      RealCochain g = RealCochain::zero(x, k - 2);
      for (double& v : g.values) v = uniform(rng, -1.0, 1.0);
      candidates.push_back(coboundary(x, g, pc.order).values);
    }
    Checker a, b;
    double worst_a = INFINITY, worst_b = INFINITY;
    for (const auto& dg : candidates) {
      std::vector<double> diff(f.values.size());
      for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = f.values[i] - dg[i];
      const double lhs = dot(diff, diff);
      double sum_q = 0.0;
      double local = INFINITY;
      for (const auto& idx : facets) {
        double qv = 0.0, dsum = 0.0;
        for (std::size_t i : idx) {
          qv += diff[i] * diff[i] / d[i];
          dsum += d[i];
        }
        sum_q += qv;
        const double bound = nn * nn / dsum;
        local = std::min(local, qv - bound);
        if (qv < bound - kRelativeTolerance * std::max(1.0, bound)) {
          b.exact("q(tau,g) >= |V|^2 / sum d_j", false, qv - bound);
        }
      }
      worst_b = std::min(worst_b, local);
      worst_a = std::min(worst_a, lhs - sum_q);
      if (lhs < sum_q - kRelativeTolerance * std::max(1.0, sum_q)) {
        a.exact("||f - delta g||^2 >= sum q(tau,g)", false, lhs - sum_q);
      }
    }
    a.exact("||f - delta g||^2 >= sum q(tau,g), all candidates", a.pass(), std::isfinite(worst_a) ? worst_a : 0.0);
    b.exact("q(tau,g) >= |V|^2 / sum d_j, all candidates", b.pass(), std::isfinite(worst_b) ? worst_b : 0.0);
    nlohmann::json q = base;
    q["candidates"] = candidates.size();
    out.push_back(make(ClaimId::kLem6a, inputs, q, a));
    out.push_back(make(ClaimId::kLem6b, inputs, q, b));
  }

  {
    // Rainbow cochains of k-block partitions: the merged partition with f
    // its whole rainbow set, then random partitions and random supports.
    Checker ch;
    std::mt19937_64 rng(opt.seed ^ 0x9E3779B97F4A7C15ULL);
    std::vector<std::pair<Partition, std::vector<char>>> cases;
    {
      std::vector<int> labels(p.labels().begin(), p.labels().end());
      for (int& l : labels) l = std::min(l, k - 1);
      cases.emplace_back(Partition::from_labels(labels), std::vector<char>{});
    }
    for (int t = 0; t < opt.trials; ++t) cases.emplace_back(random_partition(n, k, rng), std::vector<char>{1});
    int checked = 0;
    for (auto& [q, random_support] : cases) {
      const OrientationOrder order = q.block_sorted_order();
      std::vector<Simplex> supp;
      for (const Simplex& s : cheeger::rainbow_faces(x, q, k - 1)) {
        if (random_support.empty() || uniform01(rng) < 0.5) supp.push_back(s);
      }
      const Z2Cochain fz = indicator(x, k - 1, supp);
      const RealCochain fr = to_real(fz);
      for (const SimplicialComplex* space : {&x, &kx}) {
        const double real_norm = norm_squared(coboundary(*space, fr, order));
        const double form = quadratic(integer_laplacian(*space, k - 1, LaplacianKind::kUp, order), fr.values);
        const auto hamming = static_cast<double>(coboundary(*space, fz).weight());
        if (std::abs(real_norm - hamming) > kIntegerTolerance || std::abs(form - hamming) > kIntegerTolerance) {
          ch.exact("||delta f||^2 = <L f,f> = |delta_Z2 f|", false, -std::abs(real_norm - hamming),
                   {{"partition", report::partition(q)}, {"space", space == &x ? "X" : "K(X)"}});
        }
        ++checked;
      }
    }
    ch.exact("||delta f||^2 = <L f,f> = |delta_Z2 f|, all cases", ch.pass(), 0.0);
    nlohmann::json q = base;
    q["cases"] = checked;
    out.push_back(make(ClaimId::kLem7, inputs, std::move(q), ch));
  }

  {
    Checker ch;
    std::mt19937_64 rng(opt.seed + 1);
    double best_eig = INFINITY;
    int used = 0;
    auto probe = [&](const RealCochain& g, const OrientationOrder* order) {
      try {
        const ExtendedReal rb =
            order ? rayleigh_bound(x, g, *order, opt.spectral.tolerance) : rayleigh_bound(x, g, opt.spectral.tolerance);
        ++used;
        if (!ExtendedReal::leq(spec.lambda, rb, kRelativeTolerance * std::max(1.0, lambda))) {
          ch.leq("lambda <= n<L f,f>/<L_K f,f>", lambda, rb);
        }
        return rb;
      } catch (const InputError&) {
        return ExtendedReal::infinity();  // g in B: the bound is undefined there
      }
    };
    probe(f, &pc.order);
    for (int t = 0; t < opt.trials; ++t) {
      RealCochain g = RealCochain::zero(x, k - 1);
      for (double& v : g.values) v = uniform(rng, -1.0, 1.0);
      probe(g, nullptr);
    }
    for (Eigen::Index c = 0; c < spec.eigenvectors.cols(); ++c) {
      RealCochain g = RealCochain::zero(x, k - 1);
      for (Eigen::Index i = 0; i < spec.eigenvectors.rows(); ++i) g.values[static_cast<std::size_t>(i)] = spec.eigenvectors(i, c);
      const ExtendedReal rb = probe(g, nullptr);
      if (rb.is_finite()) best_eig = std::min(best_eig, rb.value());
    }
    ch.exact("bound >= lambda on every probe", ch.pass(), 0.0);
    nlohmann::json q = base;
    q["lambda"] = lambda;
    q["probes"] = used;
    q["best_eigenvector_bound"] = std::isfinite(best_eig) ? nlohmann::json(best_eig) : nlohmann::json("inf");
    if (x.has_complete_skeleton(k - 1) && std::isfinite(best_eig)) {
      ch.close("equality on a complete skeleton", best_eig, lambda);
    }
    out.push_back(make(ClaimId::kLem8, inputs, std::move(q), ch));
  }
  return out;
}

Certificate proposition6(int n, int k, const Options& opt) {
  if (k < 1) throw InputError("proposition6: need k >= 1");
  const SimplicialComplex x = generators::complete(n, k);
  const std::size_t cols = x.face_count(k - 1);
  if (cols >= 63 || (std::uint64_t{1} << cols) > opt.caps.cochain_cap) {
    throw ResourceError("cochain-cap", "proposition6: 2^" + std::to_string(cols) + " cochains exceed cochain-cap " +
                                           std::to_string(opt.caps.cochain_cap));
  }
  const Gf2Echelon b = coboundary_space(x, k - 1);
  if (b.rank() >= 63 || (std::uint64_t{1} << b.rank()) > opt.caps.coset_cap) {
    throw ResourceError("coset-cap", "proposition6: coboundary space too large");
  }
  std::vector<std::uint64_t> basis;
  for (const BitVector& v : b.basis()) {
    std::uint64_t m = 0;
    for (std::size_t i = v.find_first(); i != BitVector::npos; i = v.find_next(i)) m |= std::uint64_t{1} << i;
    basis.push_back(m);
  }
  const OperatorMatrix dm = coboundary_matrix(x, k - 1);
  std::vector<std::vector<std::size_t>> incident(cols);
  for (std::size_t r = 0; r < dm.rows(); ++r) {
    for (const auto& e : dm.row(r)) incident[e.col].push_back(r);
  }
  std::vector<char> parity(dm.rows(), 0);
  std::int64_t dw = 0;
  std::uint64_t f = 0;
  std::uint64_t violations = 0, tight_lower = 0;
  double min_lower = INFINITY, min_upper = INFINITY;
  const std::uint64_t total = std::uint64_t{1} << cols;
  const std::uint64_t span = std::uint64_t{1} << basis.size();
  for (std::uint64_t i = 0; i < total; ++i) {
    if (i > 0) {
      const auto col = static_cast<std::size_t>(std::countr_zero(i));
      f ^= std::uint64_t{1} << col;
      for (std::size_t r : incident[col]) {
        dw += parity[r] ? -1 : 1;
        parity[r] ^= 1;
      }
    }
    std::uint64_t w = f;
    int weight = std::popcount(w);
    for (std::uint64_t j = 1; j < span && weight > 0; ++j) {
      w ^= basis[static_cast<std::size_t>(std::countr_zero(j))];
      weight = std::min(weight, std::popcount(w));
    }
    // n|[f]| <= (k+1)|delta f| and |delta f| <= n|[f]|, in integers.
    const std::int64_t lower = (k + 1) * dw - static_cast<std::int64_t>(n) * weight;
    const std::int64_t upper = static_cast<std::int64_t>(n) * weight - dw;
    if (lower < 0 || upper < 0) ++violations;
    if (lower == 0 && weight > 0) ++tight_lower;
    min_lower = std::min(min_lower, static_cast<double>(lower) / (k + 1));
    min_upper = std::min(min_upper, static_cast<double>(upper));
  }
  Checker ch;
  ch.exact("n|[f]|/(k+1) <= |delta f| for every f", min_lower >= 0, min_lower);
  ch.exact("|delta f| <= n|[f]| for every f", min_upper >= 0, min_upper);
  return make(ClaimId::kProp6, {{"n", n}, {"k", k}},
              {{"cochains", total}, {"violations", violations}, {"tight_lower", tight_lower}}, ch);
}

Certificate phi_htilde(const SimplicialComplex& x, const Options& opt) {
  const int k = x.dimension();
  const ExpansionValue ph = cheeger::phi(x, opt.caps);
  const ExpansionValue ht = cheeger::h_tilde(x, opt.caps);
  Checker ch;
  auto margin = [](const ExpansionValue& lo, const ExpansionValue& hi) {
    if (hi.is_infinite() || lo.is_infinite()) return 0.0;
    return hi.value().value() - lo.value().value();
  };
  ch.exact("phi <= h~", compare_values(ph, ht) <= 0, margin(ph, ht));
  if (x.has_complete_skeleton(k - 1)) {
    ExpansionValue bound = ph;
    bound.scale *= k + 1;
    ch.exact("h~ <= (k+1) phi", compare_values(ht, bound) <= 0, margin(ht, bound));
  }
  return make(ClaimId::kRelPhiHtilde, complex_inputs(x),
              {{"phi", report::expansion("phi", ph)}, {"h_tilde", report::expansion("h_tilde", ht)}}, ch);
}

std::vector<Certificate> run_claim(ClaimId id, const SimplicialComplex& x, const Options& opt) {
  switch (id) {
    case ClaimId::kThm1General: return {theorem1_general(x, opt)};
    case ClaimId::kThm2: return {theorem2(x, opt)};
    case ClaimId::kThm3: return {theorem3(x, opt)};
    case ClaimId::kProp6: return {proposition6(x.vertex_count(), x.dimension(), opt)};
    case ClaimId::kRelPhiHtilde: return {phi_htilde(x, opt)};
    default: break;
  }
  std::vector<Certificate> out;
  for (Certificate& c : lemmas(x, std::nullopt, opt)) {
    if (c.claim == id) out.push_back(std::move(c));
  }
  return out;
}

std::vector<Certificate> paper_examples(const Options& opt) {
  std::vector<SimplicialComplex> suite{generators::rp2()};
  for (int n : {8, 10, 12}) suite.push_back(generators::y_complex(n));
  for (int n : {6, 8, 10}) suite.push_back(generators::moebius_cyl(n));
  std::vector<Certificate> out;
  for (const SimplicialComplex& x : suite) {
    out.push_back(theorem1_general(x, opt));
    out.push_back(theorem2(x, opt));
    out.push_back(theorem3(x, opt));
    for (Certificate& c : lemmas(x, std::nullopt, opt)) out.push_back(std::move(c));
    out.push_back(phi_htilde(x, opt));
  }
  for (auto [n, k] : {std::pair{4, 1}, std::pair{5, 1}, std::pair{5, 2}}) out.push_back(proposition6(n, k, opt));
  return out;
}

std::string bundle(std::vector<Certificate> certs) {
  std::stable_sort(certs.begin(), certs.end(), [](const Certificate& a, const Certificate& b) {
    if (a.claim != b.claim) return static_cast<int>(a.claim) < static_cast<int>(b.claim);
    return a.digest < b.digest;
  });
  std::string out;
  for (const Certificate& c : certs) out += to_json(c).dump() + "\n";
  return out;
}

}  // namespace hdc::verify
