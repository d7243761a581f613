#include "ratnp/certificate.hpp"
#include "ratnp/families.hpp"
#include "ratnp/oracle.hpp"
#include "ratnp/verify.hpp"

#include <gtest/gtest.h>

#include <cstdlib>

using namespace ratnp;
using namespace ratnp::examples;

TEST(Families, RegistryAndSweeps) {
    std::size_t total = 0;
    for (const auto& f : families()) {
        const auto sweep = sweep_params(f.id);
        EXPECT_FALSE(sweep.empty()) << f.id;
        total += sweep.size();
    }
    EXPECT_EQ(total, 92u);
    EXPECT_EQ(sweep_params("conic-bundle").size(), 30u);
    EXPECT_EQ(sweep_params("f1-cubic-section").size(), 11u);
    EXPECT_EQ(sweep_params("f0-even").front().at("n"), -20);
    EXPECT_EQ(sweep_params("f0-odd").front().at("n"), -19);
    EXPECT_THROW(build_example("nope"), std::invalid_argument);
    EXPECT_THROW(build_example("hirzebruch", {{"x", 1}}), std::invalid_argument);
    EXPECT_THROW(build_example("conic-bundle", {{"n", 9}}), std::invalid_argument);
    EXPECT_THROW(build_example("f0-odd", {{"n", -2}}), std::invalid_argument);
    EXPECT_THROW(build_example("f0-even", {{"n", -1}}), std::invalid_argument);
}

TEST(Families, ExpressionLanguage) {
    const auto ex = build_example("f0-even", {{"n", -4}});
    EXPECT_EQ(evaluate_quantity(ex, "A^2"), 2 * 12 - 15);
    EXPECT_EQ(evaluate_quantity(ex, "(K+A).(f-E1)"), 0);
    EXPECT_EQ(evaluate_quantity(ex, "A.E1"), 2);
    EXPECT_EQ(evaluate_class(ex, "2C0+3f-E2").coeffs()[0], 2);
    EXPECT_THROW(evaluate_quantity(ex, "A.."), std::invalid_argument);
    EXPECT_THROW(evaluate_class(ex, "H"), std::invalid_argument);
    EXPECT_THROW(evaluate_class(ex, "E13"), std::invalid_argument);
    const auto p = build_example("plane");
    EXPECT_EQ(evaluate_quantity(p, "chi(2H)"), 6);
    EXPECT_EQ(evaluate_quantity(p, "g(3H)"), 1);
}

TEST(Families, Spotchecks) {
    const auto dp2 = build_example("del-pezzo-2");
    EXPECT_EQ(evaluate_quantity(dp2, "g(-2K)"), 3);
    EXPECT_EQ(evaluate_quantity(dp2, "chi(-2K)"), 7);
    const auto nac = build_example("non-anticanonical", {{"n", 7}});
    EXPECT_EQ(evaluate_quantity(nac, "-K.A"), 9);
    EXPECT_EQ(evaluate_quantity(nac, "chi(-K-A)"), -4);
    EXPECT_FALSE(nac.attested.anticanonical);
    const auto ell = build_example("elliptic-fibration", {{"n", 4}});
    EXPECT_EQ(evaluate_quantity(ell, "A^2"), 7);
    EXPECT_EQ(ell.model, CurveModel::CubicPencil);
}

TEST(Certificate, AllSweepInstancesCertifiedOrAttested) {
    for (const auto& f : families())
        for (const auto& p : sweep_params(f.id)) {
            const auto ex = build_example(f.id, p);
            const auto c = nakai_certificate(ex);
            if (ex.id == "non-anticanonical") {
                EXPECT_TRUE(c.refused);
                EXPECT_FALSE(c.refusal.empty());
            } else {
                EXPECT_FALSE(c.refused) << ex.id;
                EXPECT_TRUE(c.valid()) << ex.id;
            }
        }
}

TEST(Certificate, RejectsNonAmple) {
    const auto ex = build_example("hirzebruch", {{"e", 1}});
    const auto k = canonical_class(ex.surface);
    const auto adj = k + 2 * ex.A;  // = e f, nef but not ample
    const auto c = nakai_certificate(adj);
    EXPECT_FALSE(c.refused);
    EXPECT_FALSE(c.valid());
    const auto f = build_example("conic-bundle", {{"e", 0}, {"n", 4}});
    const auto kf = canonical_class(f.surface) + f.A;
    EXPECT_FALSE(nakai_certificate(kf).valid());
    auto mutated = f.A.coeffs();
    mutated.back() = 1;  // A + 2 E_l meets E_l negatively
    const auto cm = nakai_certificate(DivisorClass(f.surface, mutated));
    EXPECT_FALSE(cm.valid());
    ASSERT_TRUE(cm.counterexample.has_value());
    EXPECT_LE(intersect(DivisorClass(f.surface, mutated), *cm.counterexample), 0);
}

TEST(Certificate, RefusesWithoutConfiguration) {
    auto s = blow_up(SurfaceModel::hirzebruch(0), 3, {});
    const auto c = nakai_certificate(pullback_minus(s, {2, 2}, {1, 1, 1}));
    EXPECT_TRUE(c.refused);
    EXPECT_THROW(brute_force_min(pullback_minus(s, {2, 2}, {1, 1, 1}), {}), std::invalid_argument);
}

TEST(Oracle, AdjointOfHirzebruchExampleHasMinimumZero) {
    const auto ex = build_example("hirzebruch", {{"e", 1}});
    const auto r = brute_force_min(canonical_class(ex.surface) + 2 * ex.A, {}, 1);
    EXPECT_EQ(r.min_value, 0);
    EXPECT_FALSE(r.ample());
}

TEST(Oracle, ExpectedMinima) {
    EXPECT_EQ(brute_force_ample_oracle(build_example("plane"), {}, 1).min_value, 1);
    EXPECT_EQ(brute_force_ample_oracle(build_example("hirzebruch", {{"e", 3}}), {}, 1).min_value, 1);
    // del Pezzo -K meets every line once.
    EXPECT_EQ(brute_force_ample_oracle(build_example("del-pezzo", {{"i", 6}}), {}, 1).min_value, 1);
    const auto f0 = brute_force_ample_oracle(build_example("f0-odd", {{"n", -19}}), {}, 1);
    EXPECT_GE(f0.min_value, 1);
}

TEST(Oracle, CertificateAgreementOnSweep) {
    for (const auto& f : families())
        for (const auto& p : sweep_params(f.id)) {
            const auto ex = build_example(f.id, p);
            const auto c = nakai_certificate(ex);
            if (c.refused) continue;
            EXPECT_EQ(c.valid(), brute_force_ample_oracle(ex, {}, 1).ample()) << ex.id;
        }
}

TEST(Oracle, Determinism) {
    for (const char* id : {"conic-bundle", "f1-cubic-section", "f0-even", "del-pezzo", "elliptic-fibration"})
        for (const auto& p : sweep_params(id)) {
            const auto ex = build_example(id, p);
            const auto a = brute_force_ample_oracle(ex, {}, 1);
            const auto b = brute_force_ample_oracle(ex, {}, 7);
            EXPECT_EQ(a.min_value, b.min_value);
            EXPECT_EQ(a.argmin, b.argmin);
            EXPECT_EQ(a.classes_examined, b.classes_examined);
        }
}

TEST(Oracle, BoxParsing) {
    EXPECT_EQ(OracleBox::parse("7").a_max, 7);
    const auto b = OracleBox::parse("5,9");
    EXPECT_EQ(b.a_max, 5);
    EXPECT_EQ(b.b_max, 9);
    EXPECT_THROW(OracleBox::parse("0"), std::invalid_argument);
    EXPECT_THROW(OracleBox::parse("201"), std::invalid_argument);
    EXPECT_THROW(OracleBox::parse("3,x"), std::invalid_argument);
    EXPECT_THROW(OracleBox::parse(""), std::invalid_argument);
    EXPECT_THROW(brute_force_ample_oracle(build_example("hirzebruch", {{"e", 4}}), OracleBox::parse("5")),
                 std::invalid_argument);
    ::setenv("NP_ORACLE_BOX", "6,8", 1);
    EXPECT_EQ(OracleBox::from_env().b_max, 8);
    ::setenv("NP_ORACLE_BOX", "garbage", 1);
    EXPECT_THROW(OracleBox::from_env(), std::invalid_argument);
    ::unsetenv("NP_ORACLE_BOX");
    EXPECT_EQ(OracleBox::from_env().a_max, 12);
}

TEST(Verify, SweepPassesAndNamesFailures) {
    for (const auto& f : families())
        for (const auto& p : sweep_params(f.id)) {
            const auto r = verify_example(f.id, p, {}, 1);
            EXPECT_TRUE(r.passed()) << (r.failures.empty() ? f.id : r.failures.front());
        }
    auto ex = build_example("f1-cubic-section", {{"l", 4}});
    ex.claims.push_back({"A^2", 12, Source::Stated});
    const auto r = verify_family(ex, {}, 1);
    ASSERT_FALSE(r.passed());
    EXPECT_NE(r.failures.front().find("A^2"), std::string::npos);
}

TEST(Verify, ObservationFamilyCrossCheck) {
    for (Int n = 4; n <= 12; ++n) {
        const auto r = verify_example("non-anticanonical", {{"n", n}}, {}, 1);
        EXPECT_TRUE(r.passed());
        EXPECT_EQ(r.ampleness_basis(), "attested");
        EXPECT_EQ(r.np.status, NpStatus{AtLeast{static_cast<int>(2 * n - 8)}});
    }
}

TEST(Verify, MutantSoundness) {
    int mutants = 0;
    for (const char* id : {"hirzebruch", "conic-bundle", "f1-cubic-section", "del-pezzo", "elliptic-fibration"})
        for (const auto& p : sweep_params(id)) {
            const auto ex = build_example(id, p);
            for (int j = 0; j < ex.A.rank(); ++j)
                for (Int d : {-1, 1}) {
                    auto c = ex.A.coeffs();
                    c[static_cast<std::size_t>(j)] += d;
                    const DivisorClass m(ex.surface, c);
                    const auto cert = nakai_certificate(m);
                    if (cert.refused || !cert.valid()) continue;
                    ++mutants;
                    EXPECT_TRUE(brute_force_min(m, {}, 1).ample()) << id << " " << m.to_string();
                }
        }
    EXPECT_GT(mutants, 0);
}
