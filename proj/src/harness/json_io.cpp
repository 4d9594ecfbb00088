#include "boolspec/json_io.hpp"

namespace boolspec {

namespace {

int read_dim(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) {
    throw JsonInputError("expected an object with integer field \"n\"");
  }
  const auto n = j["n"].get<std::int64_t>();
  if (n < 0 || n > kMaxDim) {
    throw JsonInputError("\"n\" must lie in 0.." + std::to_string(kMaxDim));
  }
  return static_cast<int>(n);
}

std::vector<Mask> read_points(const json& arr, int n, const char* field) {
  if (!arr.is_array()) throw JsonInputError(std::string("\"") + field + "\" must be an array");
  std::vector<Mask> out;
  out.reserve(arr.size());
  for (const auto& v : arr) {
    if (!v.is_number_integer()) {
      throw JsonInputError(std::string("\"") + field + "\" entries must be integers");
    }
    const auto x = v.get<std::int64_t>();
    if (x < 0 || x > static_cast<std::int64_t>(full_mask(n))) {
      throw JsonInputError("point " + std::to_string(x) + " outside F_2^" + std::to_string(n));
    }
    out.push_back(static_cast<Mask>(x));
  }
  return out;
}

}  // namespace

BooleanFunction function_from_json(const json& j) {
  const int n = read_dim(j);
  const bool has_support = j.contains("support");
  const bool has_hex = j.contains("truth_table_hex");
  if (has_support == has_hex) {
    throw JsonInputError("function JSON needs exactly one of \"support\" or \"truth_table_hex\"");
  }
  if (has_support) return BooleanFunction::from_support(n, read_points(j["support"], n, "support"));
  if (!j["truth_table_hex"].is_string()) throw JsonInputError("\"truth_table_hex\" must be a string");
  try {
    return from_truth_table_hex(n, j["truth_table_hex"].get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw JsonInputError(e.what());
  }
}

json function_to_json(const BooleanFunction& f) {
  return json{{"n", f.dim()}, {"support", f.support()}};
}

json spectrum_to_json(const Spectrum& s, bool nonzero_only) {
  json coeffs = json::array();
  for (std::size_t a = 0; a < s.size(); ++a) {
    const std::int64_t v = s[static_cast<Mask>(a)];
    if (nonzero_only && v == 0) continue;
    coeffs.push_back(json{{"alpha", a}, {"num", v}});
  }
  return json{{"n", s.dim()}, {"den_log2", s.den_log2()}, {"coeffs", std::move(coeffs)}};
}

json classification_to_json(const Classification& c) {
  json j{{"classification", to_string(c.tag)}, {"k", c.k}, {"m", c.m}};
  if (c.t) j["t"] = *c.t;
  if (c.core_k) j["core_k"] = *c.core_k;
  return j;
}

json decomposition_to_json(const Decomposition& d) {
  json pieces = json::array();
  for (const auto& p : d.pieces) {
    pieces.push_back(json{{"shift", p.shift()}, {"basis", std::vector<Mask>(p.direction().rows().begin(), p.direction().rows().end())}});
  }
  return json{{"classification", to_string(d.classification.tag)},
              {"k", d.classification.k},
              {"pieces", std::move(pieces)},
              {"verified", d.verified}};
}

json report_to_json(const VerificationReport& r) {
  json counts = json::object();
  for (const auto& [tag, c] : r.counts) counts[to_string(tag)] = c;
  json by_k = json::object();
  for (const auto& [k, c] : r.two_piece_by_k) by_k[std::to_string(k)] = c;
  json violations = json::array();
  for (const auto& v : r.violations) {
    violations.push_back(json{{"truth_table_hex", v.truth_table_hex}, {"check", v.check}});
  }
  return json{{"n", r.n},
              {"functions", r.functions},
              {"counts", std::move(counts)},
              {"two_piece_by_k", std::move(by_k)},
              {"four_piece", r.four_piece},
              {"violations", std::move(violations)},
              {"timing_ms", r.timing_ms}};
}

PointSet point_set_from_json(const json& j) {
  const int n = read_dim(j);
  const char* field = j.contains("points") ? "points" : "support";
  if (!j.contains(field)) throw JsonInputError("point set JSON needs \"points\"");
  return PointSet(n, read_points(j[field], n, field));
}

json point_set_to_json(const PointSet& s) {
  return json{{"n", s.dim()}, {"points", s.members()}};
}

}  // namespace boolspec
