#pragma once

#include "boxcalc/identity.hpp"

#include <string>

namespace boxcalc {

/// Stable JSON serialization of a verification report. Schema (field names
/// are stable across patch versions):
///   { "kind", "dim", "X", "seed", "f", "g",
///     "points": [ { "point": ["p/q", ...], "lhs_discrete", "lhs_continuous",
///                   "difference", "rhs_total", "pass", "f",
///                   "terms": [ { "s_basis", "s_dim", "I", "J", "sign",
///                                "value" } ] } ],
///     "all_pass" }
/// Exact values are canonical "p/q" strings (cyclotomic values are printed in
/// the z = zeta_m basis). Serialization is deterministic.
std::string report_to_json(const VerificationReport& report);

}  // namespace boxcalc
