#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hdc/cheeger.hpp"
#include "hdc/complex.hpp"
#include "hdc/laplacian.hpp"

namespace hdc::verify {

enum class ClaimId {
  kThm1General,
  kThm2,
  kThm3,
  kLem2,
  kLem3,
  kLem5,
  kLem6a,
  kLem6b,
  kLem7,
  kLem8,
  kProp6,
  kRelPhiHtilde,
};

/// "THM1_GENERAL", "THM2", ..., "REL_PHI_HTILDE".
std::string claim_name(ClaimId id);
ClaimId parse_claim(const std::string& name);
const std::vector<ClaimId>& all_claims();

/// Absolute tolerance for integer identities, relative for inequalities.
inline constexpr double kIntegerTolerance = 1e-8;
inline constexpr double kRelativeTolerance = 1e-6;

struct Certificate {
  ClaimId claim = ClaimId::kThm1General;
  std::string digest;           // of the canonical inputs
  nlohmann::json inputs;
  nlohmann::json quantities;
  bool pass = false;
  /// Smallest margin over the checks: rhs - lhs for inequalities, -|a - b|
  /// for identities; +inf when every right-hand side was infinite.
  ExtendedReal slack;
};

/// One JSON object; dump() of it is a certificate line.
nlohmann::json to_json(const Certificate& c);

struct Options {
  EnumerationCaps caps;
  SpectralOptions spectral;
  int trials = 100;
  std::uint64_t seed = 0xC0FFEE;
  /// THM2 uses the smallest C over all h-minimizers instead of the
  /// canonical one.
  bool c_scan_all = false;
};

/// lambda <= h.
Certificate theorem1_general(const SimplicialComplex& x, const Options& opt = {});
/// lambda <= C/|V| h, lambda <= (k+1) C'/|V| h with C' the largest
/// completion degree of a (k-1)-face, C <= |V| and C <= (k+1) C'.
Certificate theorem2(const SimplicialComplex& x, const Options& opt = {});
/// lambda <= h', h' <= h.
Certificate theorem3(const SimplicialComplex& x, const Options& opt = {});

/// The identities and bounds behind the two theorems, for a (k+1)-block
/// partition (default: the canonical h-minimizer). The norm identity for
/// complete skeleta is emitted only when the (k-1)-skeleton is complete.
std::vector<Certificate> lemmas(const SimplicialComplex& x, const std::optional<Partition>& partition,
                                const Options& opt = {});

/// Exhaustive n|[f]|/(k+1) <= |delta f| <= n|[f]| on K_n^k.
Certificate proposition6(int n, int k, const Options& opt = {});

/// phi <= h~, and h~ <= (k+1) phi when the (k-1)-skeleton is complete.
Certificate phi_htilde(const SimplicialComplex& x, const Options& opt = {});

/// The certificates of one claim on one complex (PROP6 uses x's n and k).
std::vector<Certificate> run_claim(ClaimId id, const SimplicialComplex& x, const Options& opt = {});

/// The worked examples: rp2, y_complex(8,10,12), moebius_cyl(6,8,10) and the
/// exhaustive complete-complex checks, in a fixed order.
std::vector<Certificate> paper_examples(const Options& opt = {});

/// Certificates sorted by claim id then digest, one JSON object per line.
std::string bundle(std::vector<Certificate> certs);

}  // namespace hdc::verify
