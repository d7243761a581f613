#pragma once

// N_p criteria for Fano n-folds given by numerical profiles. Nothing here
// models the variety itself; degree, h^0(H) and the type of the morphism
// defined by |H| are inputs.

#include "ratnp/verdict.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ratnp::fano {

enum class MorphismType { Unknown, TwoToOneOntoPn, OntoMinimalDegreeNotPn, NeitherOfThose };

std::string to_string(MorphismType m);
MorphismType morphism_from_string(const std::string& name);

/// -K_X = m H with H ample and base-point-free; Hn = H^n.
struct FanoInput {
    int n = 2;
    int m = 1;
    long long Hn = 1;
    std::optional<long long> h0H;
    MorphismType morphism = MorphismType::Unknown;

    /// Throws std::invalid_argument on an inconsistent profile.
    void validate() const;
};

/// Exact N_p for H when -K = (n-1) H: N_p iff H^n >= p + 3.
NpVerdict primitive_np(const FanoInput& f);

/// Max p for polarizations the engine does not derive, keyed by name
/// ("O_P3(2)", "O_P3(3)", "O_P4(2)"). Returns nothing for unknown keys.
std::optional<int> known_exact_np(const std::string& key);
std::vector<std::string> known_exact_np_keys();

/// l B satisfies N_p for l >= p, on a surface with -K.B >= 4 or (P^2, O(1)).
bool multiples_np_surface(long long minus_k_dot_b, bool is_p2_o1, long long l, int p);

/// l H satisfies N_p for l >= p, given m > n-1 or H^n >= 4.
bool multiples_np_fano(const FanoInput& f, long long l, int p);

enum class N0Status { N0, NotN0, ConditionalN0, Silent };

std::string to_string(N0Status s);

struct N0Decision {
    N0Status status;
    /// Facts that would settle a ConditionalN0.
    std::vector<std::string> needed;
    std::string justification;
};

/// Projective normality of L = k H on a Fano n-fold of index n - 3.
N0Decision index_nm3_n0(const FanoInput& f, long long k);

/// N_p for L = k H on a Fano n-fold of index n - 3, p >= 1.
bool index_nm3_np(const FanoInput& f, long long k, int p);

/// One verdict for L = k H, from whichever criterion the index selects.
/// NotApplicable when no criterion covers the profile.
NpVerdict classify(const FanoInput& f, long long k);

}  // namespace ratnp::fano
