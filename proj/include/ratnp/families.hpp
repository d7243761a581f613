#pragma once

// Parameterized constructions of the polarized example surfaces, their
// printed numerical claims, and a small expression language for stating
// those claims ("A^2", "-K.(K+A)", "chi(-K-A)", ...).

#include "ratnp/criteria.hpp"
#include "ratnp/picard.hpp"
#include "ratnp/verdict.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ratnp::examples {

using Params = std::map<std::string, Int>;

/// Where an expected value comes from: printed with the construction
/// ("stated") or computed from it by hand ("derived").
enum class Source { Stated, Derived };

std::string to_string(Source s);
Source source_from_string(const std::string& s);

struct Claim {
    std::string quantity;  ///< expression, e.g. "-K.A"
    Int expected;
    Source source;
};

struct IdentityClaim {
    std::string lhs;  ///< class expression, e.g. "K+2A"
    std::vector<Int> expected;
    Source source;
};

/// Which constraint model describes the irreducible curves of the surface.
enum class CurveModel {
    Plane,          ///< P^2 with no points blown up
    RuledOnCurve,   ///< F_e, points on a smooth anticanonical curve
    DelPezzo,       ///< P^2, at most 8 points in general position
    CubicPencil,    ///< P^2, the 9 base points of a cubic pencil
    Unmodeled,      ///< no admissible-curve model available
};

std::string to_string(CurveModel m);

/// The model implied by the surface's base and point configuration.
CurveModel curve_model_for(const Surface& s);

struct ExampleFamily {
    std::string id;
    Params params;
    Surface surface;
    DivisorClass A;
    CurveModel model;
    std::vector<Claim> claims;
    std::vector<IdentityClaim> identities;
    /// Positivity facts supplied by the construction, not computed.
    criteria::NpFlags attested;
    /// N_p statement the surrounding text makes about A, if any.
    std::optional<NpVerdict> expected_np;
    /// Values the artifact records without computing (h^0, h^1, ...).
    std::vector<std::string> annotations;
    std::string description;
};

struct ParamSpec {
    std::string name;
    Int default_value;
    std::string range;  ///< human readable
};

struct FamilyInfo {
    std::string id;
    std::string summary;
    std::vector<ParamSpec> params;
};

/// All family ids in a fixed order.
const std::vector<FamilyInfo>& families();
const FamilyInfo& family_info(const std::string& id);

/// Throws std::invalid_argument for unknown ids, unknown parameter names or
/// out-of-range parameters. Missing parameters take their defaults.
ExampleFamily build_example(const std::string& id, const Params& params = {});

/// Every parameter tuple of the family's sweep range.
std::vector<Params> sweep_params(const std::string& id);

/// Evaluate a class expression such as "K+2A", "-K", "2H-E1-E2" or "C0+3f".
DivisorClass evaluate_class(const ExampleFamily& ex, std::string_view expr);

/// Evaluate an integer quantity: "X.Y", "X^2", "chi(X)", "g(X)" where X and
/// Y are class expressions (parenthesized when they contain + or -).
Int evaluate_quantity(const ExampleFamily& ex, std::string_view expr);

}  // namespace ratnp::examples
