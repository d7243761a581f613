#pragma once

// Bounded exhaustive search for the minimum of D.T over the irreducible curve
// classes T admitted by a surface's curve model. Independent of the
// certificate: it evaluates every class in the box instead of reasoning about
// cones.

#include "ratnp/families.hpp"
#include "ratnp/picard.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace ratnp::examples {

struct OracleBox {
    Int a_max = 12;
    Int b_max = 12;

    /// NP_ORACLE_BOX="N" or "A,B"; defaults when unset. Throws on garbage.
    static OracleBox from_env();
    static OracleBox parse(const std::string& spec);
};

/// T = pi^*(a C0 + b f) - sum m_i E_i (or a H on a plane base). The class E_i
/// itself is recorded as a = b = 0, m_i = -1, m_j = 0 otherwise.
struct CurveWitness {
    Int a = 0;
    Int b = 0;
    std::vector<Int> m;
    std::string kind;

    DivisorClass as_class(const Surface& s) const;
    /// Lexicographic on (a, b, m...).
    bool operator<(const CurveWitness& o) const;
    bool operator==(const CurveWitness& o) const;
};

struct OracleResult {
    Int min_value = 0;
    CurveWitness argmin;
    Int self_int = 0;
    std::size_t classes_examined = 0;

    /// min over the box >= 1 and positive self-intersection.
    bool ample() const { return min_value >= 1 && self_int > 0; }
};

/// Minimum of target.T over admissible classes in the box. `threads` = 0
/// picks the hardware concurrency; the result does not depend on it.
OracleResult brute_force_min(const DivisorClass& target, const OracleBox& box, unsigned threads = 0);

OracleResult brute_force_ample_oracle(const ExampleFamily& ex, const OracleBox& box, unsigned threads = 0);
OracleResult brute_force_ample_oracle(const ExampleFamily& ex);

}  // namespace ratnp::examples
