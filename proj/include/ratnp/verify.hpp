#pragma once

#include "ratnp/certificate.hpp"
#include "ratnp/families.hpp"
#include "ratnp/oracle.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ratnp::examples {

struct ClaimResult {
    std::string quantity;
    Int expected;
    Int actual;
    Source source;
    bool passed() const { return expected == actual; }
};

struct IdentityResult {
    std::string lhs;
    std::vector<Int> expected;
    std::vector<Int> actual;
    Source source;
    bool passed() const { return expected == actual; }
};

struct ExampleReport {
    ExampleFamily family;
    std::vector<ClaimResult> claims;
    std::vector<IdentityResult> identities;
    AmpleCertificate certificate;
    /// Absent when the surface has no curve model (certificate refused).
    std::optional<OracleResult> oracle;
    NpVerdict np;
    /// Hard failures, each naming the claim or check that failed.
    std::vector<std::string> failures;

    bool passed() const { return failures.empty(); }
    /// "certified", "attested" (refused certificate, ampleness by attestation).
    std::string ampleness_basis() const;
};

ExampleReport verify_family(ExampleFamily ex, const OracleBox& box, unsigned threads = 0);
ExampleReport verify_example(const std::string& id, const Params& params = {});
ExampleReport verify_example(const std::string& id, const Params& params, const OracleBox& box,
                             unsigned threads = 0);

}  // namespace ratnp::examples
