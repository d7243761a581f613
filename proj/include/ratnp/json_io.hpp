#pragma once

// JSON forms of surfaces, classes, verdicts and reports, and the
// {"op": ..., "args": {...}} evaluator behind the CLI.
//
// Surface:  {"kind": "P2" | "F" | "BlowUpP2" | "BlowUpF", "e": int, "l": int,
//            "config": {"on_smooth_anticanonical": bool, ...}}
//           ("e" only for F / BlowUpF, "l" and "config" only for blow-ups)
// Divisor:  the surface object plus "coeffs": [int, ...]
// Verdict:  {"status": "ExactMax" | "AtLeast" | "NotN0" | "NotApplicable",
//            "p": int, "reason": str, "justification": str, "assumed": [str]}

#include "ratnp/certificate.hpp"
#include "ratnp/criteria.hpp"
#include "ratnp/families.hpp"
#include "ratnp/fano.hpp"
#include "ratnp/oracle.hpp"
#include "ratnp/picard.hpp"
#include "ratnp/verdict.hpp"
#include "ratnp/verify.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace ratnp::io {

using json = nlohmann::json;

/// Throws std::invalid_argument if `j` is not an object or has a key outside
/// `allowed`.
void require_keys(const json& j, const std::vector<std::string>& allowed, const std::string& context);

json config_to_json(const PointConfig& c);
PointConfig config_from_json(const json& j);

json surface_to_json(const Surface& s);
Surface surface_from_json(const json& j);

json divisor_to_json(const DivisorClass& d);
DivisorClass divisor_from_json(const json& j);

json verdict_to_json(const NpVerdict& v);
NpVerdict verdict_from_json(const json& j);

json fano_to_json(const fano::FanoInput& f);
fano::FanoInput fano_from_json(const json& j);

json to_json(const examples::ExampleFamily& ex);
json to_json(const examples::AmpleCertificate& c);
json to_json(const examples::OracleResult& r);
json to_json(const examples::ExampleReport& r);
json to_json(const criteria::TerminationThreshold& t);

examples::Params params_from_json(const json& j);

/// Evaluate {"op": name, "args": {...}} and return
/// {"op": name, "verdict": result, "justification": tag}.
json evaluate(const json& request);

/// Names accepted by evaluate(), sorted.
std::vector<std::string> operation_names();

}  // namespace ratnp::io
