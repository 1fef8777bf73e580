#pragma once

// JSON (de)serialization of configs and reports. Documents are versioned and
// self-contained: re-running with the echoed config reproduces verdicts and
// witnesses exactly; only the "timing" object differs between runs.

#include <string>

#include "json.hpp"

#include "slconvex/convexity.hpp"
#include "slconvex/isochoric.hpp"
#include "slconvex/version.hpp"

namespace slconvex {

using Json = nlohmann::ordered_json;

Json config_to_json(const Config& cfg);
Config config_from_json(const Json& j);

Json witness_to_json(const Witness& w);
Json criterion_to_json(const CriterionResult& c);

Json analyze_document(const ConvexityReport& report, const EnergySpec& energy,
                      const Config& cfg, double elapsed_ms);
Json counterexample_document(const CounterexampleReport& report, const Config& cfg,
                             double elapsed_ms);

// Serialized with a trailing newline, 2-space indent, stable key order.
std::string dump_document(const Json& doc);

} // namespace slconvex
