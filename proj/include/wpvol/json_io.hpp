#ifndef WPVOL_JSON_IO_HPP
#define WPVOL_JSON_IO_HPP

#include <json.hpp>

#include "wpvol/asympt.hpp"
#include "wpvol/genexp.hpp"
#include "wpvol/kappa.hpp"
#include "wpvol/series.hpp"

namespace wpvol {

// Keys are emitted in insertion order so output is stable and matches the
// documented schemas field for field.
using Json = nlohmann::ordered_json;

/// {"order": N, "coeffs": ["p/q", ...]}
Json to_json(const Series& s);

/// {"g":g,"n":n,"dim":d,"V":"p/q","v":"p/q","pi_power":2d}
Json to_json(const VolumeRecord& rec);

/// {"check":name,"g":g,"n":n,"pass":bool,"first_mismatch":{"power":k,"lhs":"p/q","rhs":"p/q"}|null}
Json to_json(const CheckReport& report);

/// {"g":g,"C_est":s,"exponent_est":s,"predicted_C":s,"rel_dev":s,"n_range":[a,b], ...}
Json to_json(const GrowthComparison::Entry& entry, const Decimal& predicted);

/// Reads back the series schema. Throws std::invalid_argument.
Series series_from_json(const Json& j);

}  // namespace wpvol

#endif  // WPVOL_JSON_IO_HPP
