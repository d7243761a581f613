#pragma once

// The fixture and property suite behind `ratnp selftest`. Each check is also
// callable on its own so that the acceptance binary and the unit tests can
// run them individually.

#include "ratnp/oracle.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ratnp::selftest {

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

/// Every family over its sweep range: claims, identities, certificate and
/// oracle agreement. Fails if the sweep takes 10 s or more.
Check example_sweep(const examples::OracleBox& box = {}, unsigned threads = 0);

/// fixtures/examples.json agrees with the constructions and the lattice, and
/// fixtures/obs14.json classifies as AtLeast(2n - 8).
Check example_fixtures(const std::string& fixture_dir);

/// fixtures/operations.json: pinned op inputs and outputs through the JSON
/// evaluator.
Check operation_fixtures(const std::string& fixture_dir);

/// Adjoint N_p table versus the reconstruction from per-summand -K.A bounds
/// and very-ampleness thresholds, on k2 in [-5, 9] and p in [0, 40].
Check adjoint_table_reconstruction();

/// The three polynomial inequalities on p in [1, 50], m in [2, 50],
/// k2 in [1, 8], plus the equality case p - m = -2.
Check inequality_grid();

/// Boundary fixtures: cubic surface -K, the self-intersection gate at
/// (p+4)(-K), L = 3A on the elliptic surface, and the termination bounds.
Check sharpness_fixtures();

/// O_P3(2) via H^3 = 8, the pinned O_P3(3) and O_P4(2) values, and n = 2
/// agreement with the surface classification for d in [1, 9].
Check fano_fixtures();

Check hodge_property(std::uint64_t seed = 0x5eed1e55u, int pairs_per_family = 10000);
Check monotonicity();
/// +-1 mutants of every coefficient of A: share rejected by the verifier
/// (must be >= 90%), and certificate validity implies oracle ampleness.
Check mutation_robustness(const examples::OracleBox& box = {});
/// Single-threaded and parallel oracle runs agree on the whole sweep.
Check oracle_determinism(const examples::OracleBox& box = {});

std::vector<Check> run_all(const std::string& fixture_dir, const examples::OracleBox& box = {});

/// Prints one PASS/FAIL line per check and a summary. Returns 0 iff every
/// check passed.
int run_selftest(const std::string& fixture_dir, std::ostream& out);

}  // namespace ratnp::selftest
