#include "ratnp/selftest.hpp"

#include <gtest/gtest.h>

using namespace ratnp::selftest;

namespace {
void expect_pass(const Check& c) { EXPECT_TRUE(c.passed) << c.name << ": " << c.detail; }
}  // namespace

TEST(Properties, AdjointTableReconstruction) { expect_pass(adjoint_table_reconstruction()); }
TEST(Properties, InequalityGrid) { expect_pass(inequality_grid()); }
TEST(Properties, Sharpness) { expect_pass(sharpness_fixtures()); }
TEST(Properties, FanoFixtures) { expect_pass(fano_fixtures()); }
TEST(Properties, HodgeIndex) { expect_pass(hodge_property()); }
TEST(Properties, HodgeIndexOtherSeed) { expect_pass(hodge_property(12345, 2000)); }
TEST(Properties, Monotonicity) { expect_pass(monotonicity()); }
TEST(Properties, MutationRobustness) { expect_pass(mutation_robustness()); }
TEST(Properties, OracleDeterminism) { expect_pass(oracle_determinism()); }
TEST(Properties, ExampleFixtures) { expect_pass(example_fixtures(RATNP_FIXTURE_DIR)); }
TEST(Properties, OperationFixtures) { expect_pass(operation_fixtures(RATNP_FIXTURE_DIR)); }
TEST(Properties, ExampleSweep) { expect_pass(example_sweep()); }
