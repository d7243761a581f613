#pragma once

// Nakai-Moishezon certificates: A^2 > 0, A.E_i > 0, and a finite list of
// curve-class inequalities covering every irreducible curve admitted by the
// surface's curve model.

#include "ratnp/families.hpp"
#include "ratnp/picard.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ratnp::examples {

enum class CheckKind {
    ProperIntersection,     ///< vertex of the cone of curves meeting C properly
    ProperIntersectionRay,  ///< recession direction of that cone
    FiberSpecial,           ///< strict transform of a fiber
    MinimalSection,         ///< strict transform of C0 (e >= 1)
    OtherRuling,            ///< strict transform of a line of the second ruling of F_0
    EqualsC,                ///< strict transform of the anticanonical curve C
    PlaneDegree,            ///< P^2: every curve is a positive multiple of H
    AnticanonicalMultiple,  ///< A = t(-K) on a Del Pezzo surface
    PencilDecomposition,    ///< A = beta F + sum r_i E_i with r_i >= 0
    PencilFiber,            ///< members of the cubic pencil
    HorizontalCurve,        ///< curves that are neither fibers nor exceptional
};

std::string to_string(CheckKind k);

/// One inequality worst_case_lhs < rhs (or <= when !strict). For the cone
/// checks, lhs is the largest possible weighted multiplicity sum and rhs the
/// pairing of A's base part with D ~ a C0 + b f (or a H).
struct CurveCaseCheck {
    CheckKind kind;
    Int a = 0;
    Int b = 0;
    Int worst_case_lhs = 0;
    Int rhs = 0;
    bool strict = true;
    bool passed = false;
    std::string note;
};

struct AmpleCertificate {
    /// A required configuration flag is missing, or the surface has no curve
    /// model. A refused certificate neither proves nor refutes ampleness.
    bool refused = false;
    std::string refusal;

    Int self_int = 0;
    std::vector<Int> exceptional_values;
    std::vector<CurveCaseCheck> curve_case_checks;
    std::vector<std::string> assumptions_used;
    /// An explicit curve class with A.T <= 0, when a failed check names one.
    std::optional<DivisorClass> counterexample;

    bool valid() const;
};

AmpleCertificate nakai_certificate(const ExampleFamily& ex);
AmpleCertificate nakai_certificate(const DivisorClass& a);

}  // namespace ratnp::examples
