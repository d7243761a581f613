#include "ratnp/criteria.hpp"
#include "ratnp/fano.hpp"

#include <gtest/gtest.h>

using namespace ratnp;
using namespace ratnp::fano;

namespace {
FanoInput profile(int n, int m, long long hn, std::optional<long long> h0 = std::nullopt,
                  MorphismType mt = MorphismType::Unknown) {
    return {n, m, hn, h0, mt};
}
}  // namespace

TEST(Fano, PrimitiveDegree) {
    EXPECT_EQ(primitive_np(profile(3, 2, 8)).status, NpStatus{ExactMax{5}});
    EXPECT_EQ(primitive_np(profile(4, 3, 3)).status, NpStatus{ExactMax{0}});
    EXPECT_EQ(primitive_np(profile(3, 2, 2)).status, NpStatus{NotN0{}});
    EXPECT_EQ(primitive_np(profile(5, 4, 1)).status, NpStatus{NotN0{}});
    EXPECT_EQ(primitive_np(profile(3, 2, 8)).justification, "fano-degree:iff");
    EXPECT_THROW(primitive_np(profile(3, 1, 8)), std::invalid_argument);
}

TEST(Fano, PinnedValues) {
    EXPECT_EQ(known_exact_np("O_P3(2)"), 5);
    EXPECT_EQ(known_exact_np("O_P3(3)"), 6);
    EXPECT_EQ(known_exact_np("O_P4(2)"), 5);
    EXPECT_FALSE(known_exact_np("O_P2(3)"));
    EXPECT_EQ(known_exact_np_keys().size(), 3u);
    // O_P3(2): the engine's value from H^3 = 8 matches the pin.
    EXPECT_EQ(primitive_np(profile(3, 2, 8)).guaranteed_p(), *known_exact_np("O_P3(2)"));
}

TEST(Fano, SurfaceCaseAgreesWithClassification) {
    for (int d = 1; d <= 9; ++d) {
        Surface s = d == 9 ? SurfaceModel::projective_plane() : [&] {
            PointConfig c;
            c.general_position = true;
            return blow_up(SurfaceModel::projective_plane(), 9 - d, c);
        }();
        const auto surf = criteria::np_classify(s, -canonical_class(s), {true, true, true});
        EXPECT_EQ(surf.status, primitive_np(profile(2, 1, d)).status) << d;
    }
}

TEST(Fano, Validation) {
    EXPECT_THROW(profile(1, 1, 1).validate(), std::invalid_argument);
    EXPECT_THROW(profile(3, 0, 1).validate(), std::invalid_argument);
    EXPECT_THROW(profile(3, 2, 0).validate(), std::invalid_argument);
    EXPECT_THROW(profile(4, 1, 6, 4, MorphismType::NeitherOfThose).validate(), std::invalid_argument);
    EXPECT_THROW(profile(4, 1, 6, 6, MorphismType::TwoToOneOntoPn).validate(), std::invalid_argument);
    EXPECT_NO_THROW(profile(4, 1, 6, 5, MorphismType::TwoToOneOntoPn).validate());
    EXPECT_EQ(morphism_from_string("onto-minimal-degree"), MorphismType::OntoMinimalDegreeNotPn);
    EXPECT_THROW(morphism_from_string("2:1"), std::invalid_argument);
}

TEST(Fano, Multiples) {
    EXPECT_TRUE(multiples_np_surface(4, false, 3, 3));
    EXPECT_FALSE(multiples_np_surface(4, false, 2, 3));
    EXPECT_FALSE(multiples_np_surface(3, false, 5, 3));
    EXPECT_TRUE(multiples_np_surface(3, true, 5, 3));
    EXPECT_THROW(multiples_np_surface(4, false, 1, 0), std::invalid_argument);
    EXPECT_TRUE(multiples_np_fano(profile(3, 3, 1), 2, 2));
    EXPECT_FALSE(multiples_np_fano(profile(3, 2, 3), 2, 2));
    EXPECT_TRUE(multiples_np_fano(profile(3, 2, 4), 2, 2));
    EXPECT_THROW(multiples_np_fano(profile(3, 1, 4), 2, 2), std::invalid_argument);
}

TEST(Fano, IndexNMinus3Normality) {
    const auto at = [](MorphismType mt, long long k) { return index_nm3_n0(profile(5, 2, 6, 6, mt), k); };
    EXPECT_EQ(at(MorphismType::Unknown, 4).status, N0Status::N0);
    EXPECT_EQ(at(MorphismType::TwoToOneOntoPn, 3).status, N0Status::NotN0);
    EXPECT_EQ(at(MorphismType::NeitherOfThose, 3).status, N0Status::N0);
    EXPECT_EQ(at(MorphismType::OntoMinimalDegreeNotPn, 3).status, N0Status::N0);
    const auto c = at(MorphismType::Unknown, 3);
    EXPECT_EQ(c.status, N0Status::ConditionalN0);
    EXPECT_EQ(c.needed.size(), 1u);
    EXPECT_EQ(at(MorphismType::NeitherOfThose, 2).status, N0Status::N0);
    EXPECT_EQ(at(MorphismType::OntoMinimalDegreeNotPn, 2).status, N0Status::Silent);
    EXPECT_EQ(at(MorphismType::Unknown, 2).needed.size(), 2u);
    EXPECT_EQ(at(MorphismType::Unknown, 1).status, N0Status::Silent);
    EXPECT_THROW(index_nm3_n0(profile(4, 2, 6), 3), std::invalid_argument);
    EXPECT_THROW(index_nm3_n0(profile(3, 0, 6), 3), std::invalid_argument);
}

TEST(Fano, IndexNMinus3Syzygies) {
    EXPECT_TRUE(index_nm3_np(profile(5, 2, 6, 7), 3, 1));
    EXPECT_FALSE(index_nm3_np(profile(5, 2, 6, 6), 3, 1));
    EXPECT_FALSE(index_nm3_np(profile(5, 2, 6, 7), 3, 2));
    EXPECT_TRUE(index_nm3_np(profile(5, 2, 6, 7), 6, 4));
    EXPECT_THROW(index_nm3_np(profile(5, 2, 6), 6, 4), std::invalid_argument);
}

TEST(Fano, ClassifyDispatch) {
    EXPECT_EQ(classify(profile(3, 2, 8), 1).status, NpStatus{ExactMax{5}});
    EXPECT_EQ(classify(profile(3, 2, 8), 3).status, NpStatus{AtLeast{3}});
    EXPECT_EQ(classify(profile(3, 4, 1), 2).status, NpStatus{AtLeast{2}});
    EXPECT_TRUE(std::holds_alternative<NotApplicable>(classify(profile(3, 2, 3), 2).status));
    EXPECT_EQ(classify(profile(5, 2, 6, 6, MorphismType::TwoToOneOntoPn), 3).status, NpStatus{NotN0{}});
    EXPECT_EQ(classify(profile(5, 2, 6, 7, MorphismType::NeitherOfThose), 3).status, NpStatus{AtLeast{1}});
    EXPECT_EQ(classify(profile(5, 2, 6, 6, MorphismType::NeitherOfThose), 5).status, NpStatus{AtLeast{0}});
    EXPECT_EQ(classify(profile(5, 2, 6, 7), 6).status, NpStatus{AtLeast{4}});
    const auto cond = classify(profile(5, 2, 6, 7), 3);
    ASSERT_TRUE(std::holds_alternative<NotApplicable>(cond.status));
    EXPECT_NE(std::get<NotApplicable>(cond.status).reason.find("2:1"), std::string::npos);
    EXPECT_TRUE(std::holds_alternative<NotApplicable>(classify(profile(4, 2, 6), 2).status));
    EXPECT_THROW(classify(profile(3, 2, 8), 0), std::invalid_argument);
    // The verdict agrees with the per-criterion predicates.
    for (long long k = 2; k <= 8; ++k)
        for (int p = 1; p <= 8; ++p) {
            const auto f = profile(5, 2, 6, 7, MorphismType::NeitherOfThose);
            EXPECT_EQ(classify(f, k).guarantees(p), index_nm3_np(f, k, p)) << k << " " << p;
            const auto g = profile(4, 3, 5);
            EXPECT_EQ(classify(g, k).guarantees(p), multiples_np_fano(g, k, p)) << k << " " << p;
        }
}
