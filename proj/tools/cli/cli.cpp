#include "cli.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hdc/cheeger.hpp"
#include "hdc/complex_io.hpp"
#include "hdc/error.hpp"
#include "hdc/generators.hpp"
#include "hdc/laplacian.hpp"
#include "hdc/random_complex.hpp"
#include "hdc/report.hpp"
#include "hdc/verify.hpp"

namespace hdc::cli {

namespace {

struct RunConfig {
  std::string input;
  std::string gen;
  int n = 0;
  int k = 0;
  double p = 0.5;
  std::uint64_t seed = 0xC0FFEE;
  bool thin = false;
  std::string edges;
  std::vector<std::string> quantities;
  std::vector<std::string> claims;
  std::string suite;
  int trials = 100;
  EnumerationCaps caps;
  std::size_t dense_cap = kDefaultDenseCap;
  double tolerance = kRankTolerance;
  bool c_scan_all = false;
  std::uint64_t orientation_seed = 0;
  std::string output;
};

const std::vector<std::string> kQuantities = {"lambda", "h", "h_prime", "h_tilde", "phi", "phi_prime", "C"};

std::vector<std::pair<int, int>> parse_edges(const std::string& text) {
  std::vector<std::pair<int, int>> edges;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto dash = item.find('-');
    int a = 0, b = 0;
    try {
      if (dash == std::string::npos) throw std::invalid_argument(item);
      a = std::stoi(item.substr(0, dash));
      b = std::stoi(item.substr(dash + 1));
    } catch (const std::exception&) {
      throw InputError("--edges: expected pairs like 1-2,2-3, got '" + item + "'");
    }
    edges.emplace_back(a - 1, b - 1);
  }
  return edges;
}

SimplicialComplex build(const RunConfig& cfg, const std::string& gen, std::uint64_t seed) {
  if (gen == "random") return random_complex(cfg.n, cfg.k, cfg.p, seed, cfg.thin);
  generators::Spec spec;
  spec.kind = generators::parse_kind(gen);
  spec.n = cfg.n;
  spec.k = cfg.k;
  if (spec.kind == generators::Kind::kGraph) spec.edges = parse_edges(cfg.edges);
  return generators::generate(spec);
}

SimplicialComplex load(const RunConfig& cfg) {
  if (!cfg.input.empty() && !cfg.gen.empty()) throw InputError("give either --input or --gen, not both");
  if (!cfg.input.empty()) return io::read_complex(cfg.input);
  if (!cfg.gen.empty()) return build(cfg, cfg.gen, cfg.seed);
  throw InputError("no complex given: use --input FILE or --gen NAME");
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output.empty()) {
    out << text;
  } else {
    io::write_file_atomic(cfg.output, text);
  }
}

std::string fmt(ExtendedReal v) {
  if (v.is_infinite()) return "inf";
  std::ostringstream s;
  s.precision(6);
  s << v.value();
  return s.str();
}

std::string fmt(const ExpansionValue& v) {
  if (v.is_infinite()) return "inf";
  std::ostringstream s;
  s << fmt(v.value()) << " (" << v.scale << "*" << v.numerator << "/" << v.denominator << ")";
  return s.str();
}

void add_complex_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--input", cfg.input, "Complex JSON file");
  sub->add_option("--gen", cfg.gen, "Generator: complete, rp2, y_complex, moebius_cyl, graph, random");
  sub->add_option("--n", cfg.n, "Vertex count for generators");
  sub->add_option("--k", cfg.k, "Dimension for complete/random");
  sub->add_option("--p", cfg.p, "Face probability for random")->check(CLI::Range(0.0, 1.0));
  sub->add_option("--seed", cfg.seed, "Seed for random instances and trials");
  sub->add_flag("--thin", cfg.thin, "random: drop (k-1)-faces outside the kept k-faces");
  sub->add_option("--edges", cfg.edges, "graph: 1-based edges, e.g. 1-2,2-3");
}

void add_cap_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--partition-cap", cfg.caps.partition_cap, "Max set partitions enumerated")->check(CLI::PositiveNumber);
  sub->add_option("--subset-cap", cfg.caps.subset_cap, "Max cochains per rainbow set")->check(CLI::PositiveNumber);
  sub->add_option("--cochain-cap", cfg.caps.cochain_cap, "Max cochains for h_tilde/phi")->check(CLI::PositiveNumber);
  sub->add_option("--coset-cap", cfg.caps.coset_cap, "Max coset elements walked")->check(CLI::PositiveNumber);
  sub->add_option("--dense-cap", cfg.dense_cap, "Max order for the dense eigensolver")->check(CLI::PositiveNumber);
  sub->add_option("--tolerance", cfg.tolerance, "Relative rank tolerance")
      ->check([](const std::string& s) -> std::string {
        const double t = std::stod(s);
        return (t > 0.0 && t < 1e-2) ? "" : "tolerance must lie in (0, 1e-2)";
      });
  sub->add_flag("--c-scan-all", cfg.c_scan_all, "Minimize C over every h-minimizing partition");
}

int cmd_compute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const SimplicialComplex x = load(cfg);
  std::vector<std::string> wanted;
  for (const std::string& q : cfg.quantities.empty() ? std::vector<std::string>{"all"} : cfg.quantities) {
    if (q == "all") {
      wanted.insert(wanted.end(), kQuantities.begin(), kQuantities.end());
    } else if (std::find(kQuantities.begin(), kQuantities.end(), q) != kQuantities.end()) {
      wanted.push_back(q);
    } else {
      throw InputError("unknown quantity '" + q + "'");
    }
  }
  auto has = [&](const char* q) { return std::find(wanted.begin(), wanted.end(), q) != wanted.end(); };

  nlohmann::json j{{"n", x.vertex_count()}, {"k", x.dimension()}, {"f_vector", x.f_vector()}};
  const SpectralOptions sopt{cfg.tolerance, cfg.dense_cap};
  if (has("lambda")) {
    SpectralResult r;
    if (cfg.orientation_seed != 0) {
      std::mt19937_64 rng(cfg.orientation_seed);
      r = spectral_gap(x, random_order(x.vertex_count(), rng), sopt);
    } else {
      r = spectral_gap(x, sopt);
    }
    j.update(report::spectral(r, cfg.orientation_seed));
    err << "lambda     = " << fmt(r.lambda) << "  (dim Z = " << r.basis_dim << ", dim B = " << r.dim_b << ")\n";
  }
  std::optional<ExpansionValue> hv;
  if (has("h") || has("C")) hv = cheeger::h(x, cfg.caps);
  if (has("h")) {
    j["h"] = report::expansion("h", *hv);
    err << "h          = " << fmt(*hv) << "\n";
  }
  struct Named {
    const char* key;
    ExpansionValue (*fn)(const SimplicialComplex&, const EnumerationCaps&);
  };
  for (const Named& q : {Named{"h_prime", cheeger::h_prime}, Named{"h_tilde", cheeger::h_tilde},
                         Named{"phi", cheeger::phi}, Named{"phi_prime", cheeger::phi_prime}}) {
    if (!has(q.key)) continue;
    const ExpansionValue v = q.fn(x, cfg.caps);
    j[q.key] = report::expansion(q.key, v);
    err << std::string(q.key).append(11 - std::string(q.key).size(), ' ') << "= " << fmt(v) << "\n";
  }
  if (has("C")) {
    if (!hv->witness_partition) {
      j["C"] = {{"quantity", "C"}, {"value", "inf"}, {"empty_boundary", true}};
      err << "C          = undefined (every F^boundary is empty)\n";
    } else {
      const cheeger::CValue c =
          cfg.c_scan_all ? cheeger::c_of_x_min_over_minimizers(x, cfg.caps) : cheeger::c_of_x(x, *hv->witness_partition);
      j["C"] = report::c_value(c);
      err << "C          = " << c.c << "  at " << c.partition.to_string() << "\n";
    }
  }
  emit(cfg, j.dump(2) + "\n", out);
  return kOk;
}

int cmd_verify(RunConfig cfg, std::ostream& out, std::ostream& err) {
  verify::Options opt;
  opt.caps = cfg.caps;
  opt.spectral = {cfg.tolerance, cfg.dense_cap};
  opt.seed = cfg.seed;
  opt.trials = cfg.trials;
  opt.c_scan_all = cfg.c_scan_all;

  std::vector<verify::Certificate> certs;
  std::vector<verify::ClaimId> claims;
  for (const std::string& c : cfg.claims) claims.push_back(verify::parse_claim(c));

  if (!cfg.suite.empty()) {
    if (cfg.suite != "paper-examples") throw InputError("unknown suite '" + cfg.suite + "'");
    for (verify::Certificate& c : verify::paper_examples(opt)) {
      if (claims.empty() || std::find(claims.begin(), claims.end(), c.claim) != claims.end()) certs.push_back(std::move(c));
    }
  } else {
    if (claims.empty()) {
      for (verify::ClaimId id : verify::all_claims()) {
        if (id != verify::ClaimId::kProp6) claims.push_back(id);
      }
    }
    const bool only_prop6 = claims.size() == 1 && claims[0] == verify::ClaimId::kProp6;
    if (only_prop6 && cfg.input.empty() && cfg.gen.empty()) {
      certs.push_back(verify::proposition6(cfg.n, cfg.k, opt));
    } else {
      std::vector<SimplicialComplex> instances;
      if (cfg.gen == "random" && cfg.input.empty()) {
        // --trials counts instances here; each gets seed, seed+1, ...
        for (int t = 0; t < cfg.trials; ++t) instances.push_back(build(cfg, "random", cfg.seed + static_cast<std::uint64_t>(t)));
        opt.trials = verify::Options{}.trials;
      } else {
        instances.push_back(load(cfg));
      }
      for (const SimplicialComplex& x : instances) {
        for (verify::ClaimId id : claims) {
          for (verify::Certificate& c : verify::run_claim(id, x, opt)) certs.push_back(std::move(c));
        }
      }
    }
  }
  std::size_t failed = 0;
  for (const verify::Certificate& c : certs) {
    if (!c.pass) {
      ++failed;
      err << "FAIL " << verify::claim_name(c.claim) << " " << c.digest << "\n";
    }
  }
  err << certs.size() << " certificates, " << failed << " failed\n";
  emit(cfg, verify::bundle(std::move(certs)), out);
  return failed == 0 ? kOk : kVerificationFailed;
}

int cmd_generate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.gen.empty()) throw InputError("generate: missing generator name");
  const SimplicialComplex x = build(cfg, cfg.gen, cfg.seed);
  const nlohmann::json j = io::complex_to_json(x);
  err << cfg.gen << ": n = " << x.vertex_count() << ", k = " << x.dimension() << ", "
      << j["facets"].size() << " facets\n";
  emit(cfg, j.dump() + "\n", out);
  return kOk;
}

int cmd_info(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const SimplicialComplex x = load(cfg);
  const int k = x.dimension();
  nlohmann::json betti_r = nlohmann::json::array();
  nlohmann::json betti_z2 = nlohmann::json::array();
  for (int d = 0; d <= k; ++d) {
    betti_r.push_back(real_betti(x, d, cfg.tolerance));
    betti_z2.push_back(z2_betti(x, d));
  }
  nlohmann::json j{{"n", x.vertex_count()},
                   {"k", k},
                   {"f_vector", x.f_vector()},
                   {"reduced_betti_R", betti_r},
                   {"reduced_betti_Z2", betti_z2}};
  if (k >= 1) {
    const SimplicialComplex kx = completion(x);
    j["complete_skeleton"] = x.has_complete_skeleton(k - 1);
    j["completion_extra_faces"] = kx.face_count(k) - x.face_count(k);
    j["max_completion_degree"] = cheeger::max_completion_degree(x);
  }
  err << "n = " << x.vertex_count() << ", k = " << k << "\n";
  emit(cfg, j.dump(2) + "\n", out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral gaps and Cheeger constants of simplicial complexes", "hdcheeger"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* compute = app.add_subcommand("compute", "Compute lambda and expansion constants");
  add_complex_options(compute, cfg);
  add_cap_options(compute, cfg);
  compute->add_option("--quantity", cfg.quantities, "lambda, h, h_prime, h_tilde, phi, phi_prime, C or all")
      ->delimiter(',');
  compute->add_option("--orientation-seed", cfg.orientation_seed, "Compute lambda under a random vertex order");
  compute->add_option("-o,--output", cfg.output, "Write JSON here instead of stdout");

  auto* verify_cmd = app.add_subcommand("verify", "Emit certificates for the inequalities and lemmas");
  add_complex_options(verify_cmd, cfg);
  add_cap_options(verify_cmd, cfg);
  verify_cmd->add_option("--claim", cfg.claims, "Claim id, repeatable")->delimiter(',');
  verify_cmd->add_option("--suite", cfg.suite, "paper-examples");
  verify_cmd->add_option("--trials", cfg.trials, "Random probes per lemma, or instances with --gen random")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("-o,--output", cfg.output, "Write the JSON-lines bundle here");

  auto* generate = app.add_subcommand("generate", "Write a generated complex as JSON");
  generate->add_option("name", cfg.gen, "complete, rp2, y_complex, moebius_cyl, graph, random")->required();
  generate->add_option("--n", cfg.n, "Vertex count");
  generate->add_option("--k", cfg.k, "Dimension");
  generate->add_option("--p", cfg.p, "Face probability for random")->check(CLI::Range(0.0, 1.0));
  generate->add_option("--seed", cfg.seed, "Seed for random");
  generate->add_flag("--thin", cfg.thin, "random: thinned skeleton");
  generate->add_option("--edges", cfg.edges, "graph: 1-based edges, e.g. 1-2,2-3");
  generate->add_option("-o,--output", cfg.output, "Output file");

  auto* info = app.add_subcommand("info", "Face counts and Betti numbers");
  add_complex_options(info, cfg);
  info->add_option("--tolerance", cfg.tolerance, "Relative rank tolerance");
  info->add_option("-o,--output", cfg.output, "Output file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (compute->parsed()) return cmd_compute(cfg, out, err);
    if (verify_cmd->parsed()) return cmd_verify(cfg, out, err);
    if (generate->parsed()) return cmd_generate(cfg, out, err);
    if (info->parsed()) return cmd_info(cfg, out, err);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const ResourceError& e) {
    err << "cap exceeded (" << e.cap() << "): " << e.what() << "\n";
    return kResourceCap;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInputError;
}

}  // namespace hdc::cli
