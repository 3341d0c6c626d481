#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hdc/chains.hpp"
#include "hdc/cheeger.hpp"
#include "hdc/extended.hpp"
#include "hdc/laplacian.hpp"

namespace hdc::report {

/// A double, or the string "inf" for the sentinel.
nlohmann::json number(ExtendedReal v);

/// [[1,2],[2,4]]: 1-based labels.
nlohmann::json faces(const std::vector<Simplex>& s);
nlohmann::json face(const Simplex& s);
nlohmann::json partition(const Partition& p);

/// {"lambda", "dim_Z", "dim_B", "tolerance", "orientation_seed"}.
nlohmann::json spectral(const SpectralResult& r, std::uint64_t orientation_seed);

/// {"quantity", "value", "num", "den", "scale", "witness_partition",
///  "witness_support"}; value = scale * num / den.
nlohmann::json expansion(const std::string& quantity, const ExpansionValue& v);

/// The C quantity in the expansion schema plus its d table.
nlohmann::json c_value(const cheeger::CValue& c);

/// {"dim", "ring", "support", "values"}; values only for real cochains.
nlohmann::json cochain(const SimplicialComplex& x, const RealCochain& f);
nlohmann::json cochain(const SimplicialComplex& x, const Z2Cochain& f);

/// 64-bit FNV-1a, as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace hdc::report
