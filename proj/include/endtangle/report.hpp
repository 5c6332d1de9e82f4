#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "endtangle/closure.hpp"
#include "endtangle/deciders.hpp"
#include "endtangle/end_invariants.hpp"

namespace endtangle {

using Json = nlohmann::ordered_json;

// Report schema version; bump on any field change.
inline constexpr const char* kSchemaVersion = "1.0";

Json budgets_json(const Budgets& b);
Json family_json(const GraphFamily& g);
Json cohesion_json(const GraphFamily& g, const CohesionReport& r);
Json certificate_json(const GraphFamily& g, const DeciderCertificate& c);
Json verify_json(const VerifyResult& r);
Json separation_json(const OrientedSeparation& s);
Json closure_json(const GraphFamily& g, const ClosureVerdict& v);

// Entry point behind main(): parses argv, runs the requested analysis,
// prints the report to `out` and diagnostics to `err`. Returns the process
// exit code: 0 success, 2 inconclusive, 1 error.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace endtangle
