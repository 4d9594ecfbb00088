#pragma once

// JSON forms used by the command-line tool.
//
//   function:       {"n": 6, "support": [0, 31, ...]}  or  {"n": N, "truth_table_hex": "..."}
//   spectrum:       {"n": N, "den_log2": N, "coeffs": [{"alpha": a, "num": F(a)}, ...]}
//   decomposition:  {"classification": tag, "k": k, "pieces": [{"shift": s, "basis": [...]}],
//                    "verified": bool}
//   point set:      {"n": N, "points": [...]}

#include <stdexcept>

#include <json.hpp>

#include "boolspec/addcomb.hpp"
#include "boolspec/harness.hpp"
#include "boolspec/spectrum.hpp"
#include "boolspec/structure.hpp"

namespace boolspec {

using nlohmann::json;

class JsonInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

BooleanFunction function_from_json(const json& j);
json function_to_json(const BooleanFunction& f);

json spectrum_to_json(const Spectrum& s, bool nonzero_only);

json classification_to_json(const Classification& c);
json decomposition_to_json(const Decomposition& d);
json report_to_json(const VerificationReport& r);

/// Accepts {"n", "points"} and, for convenience, the function form {"n", "support"}.
PointSet point_set_from_json(const json& j);
json point_set_to_json(const PointSet& s);

}  // namespace boolspec
