#include "ratnp/picard.hpp"

#include <gtest/gtest.h>

using namespace ratnp;

TEST(Picard, PlaneBasics) {
    auto s = SurfaceModel::projective_plane();
    EXPECT_EQ(s->rank(), 1);
    EXPECT_EQ(k_squared(s), 9);
    EXPECT_EQ(canonical_class(s).coeffs(), std::vector<Int>{-3});
    const auto h = hyperplane(s);
    EXPECT_EQ(self_intersection(h), 1);
    EXPECT_EQ(euler_characteristic(2 * h), 6);
    EXPECT_EQ(euler_characteristic(3 * h), 10);
    EXPECT_EQ(sectional_genus(3 * h), 1);
    EXPECT_EQ(sectional_genus(4 * h), 3);
}

TEST(Picard, HirzebruchGram) {
    for (int e = 0; e <= 6; ++e) {
        auto s = SurfaceModel::hirzebruch(e);
        const auto c0 = min_section(s), f = fiber(s);
        EXPECT_EQ(self_intersection(c0), -e);
        EXPECT_EQ(intersect(c0, f), 1);
        EXPECT_EQ(self_intersection(f), 0);
        EXPECT_EQ(canonical_class(s).coeffs(), (std::vector<Int>{-2, -(e + 2)}));
        EXPECT_EQ(k_squared(s), 8);
        // adjunction: C0 and f are rational
        EXPECT_EQ(sectional_genus(c0), 0);
        EXPECT_EQ(sectional_genus(f), 0);
    }
    EXPECT_THROW(SurfaceModel::hirzebruch(-1), std::invalid_argument);
}

TEST(Picard, BlowUpExceptionalCurves) {
    auto s = blow_up(SurfaceModel::hirzebruch(1), 5, {});
    EXPECT_EQ(s->rank(), 7);
    EXPECT_EQ(k_squared(s), 3);
    const auto k = canonical_class(s);
    for (int i = 1; i <= 5; ++i) {
        const auto e = exceptional(s, i);
        EXPECT_EQ(self_intersection(e), -1);
        EXPECT_EQ(intersect(k, e), -1);
        EXPECT_EQ(sectional_genus(e), 0);
        for (int j = i + 1; j <= 5; ++j) EXPECT_EQ(intersect(e, exceptional(s, j)), 0);
    }
    EXPECT_THROW(exceptional(s, 0), std::out_of_range);
    EXPECT_THROW(exceptional(s, 6), std::out_of_range);
    EXPECT_THROW(blow_up(s, 1, {}), std::invalid_argument);
    EXPECT_THROW(blow_up(SurfaceModel::projective_plane(), -1, {}), std::invalid_argument);
}

TEST(Picard, StorageConvention) {
    auto s = blow_up(SurfaceModel::projective_plane(), 3, {});
    const auto d = pullback_minus(s, {4}, {1, 2, 0});
    EXPECT_EQ(d.coeffs(), (std::vector<Int>{4, -1, -2, 0}));
    EXPECT_EQ(intersect(d, exceptional(s, 2)), 2);
    EXPECT_EQ(self_intersection(d), 16 - 1 - 4);
}

TEST(Picard, SurfaceMismatchRejected) {
    auto a = hyperplane(SurfaceModel::projective_plane());
    auto b = fiber(SurfaceModel::hirzebruch(0));
    EXPECT_THROW(intersect(a, b), SurfaceMismatch);
    EXPECT_THROW(DivisorClass(SurfaceModel::hirzebruch(0), {1}), std::invalid_argument);
    auto p = blow_up(SurfaceModel::projective_plane(), 2, {});
    PointConfig c;
    c.general_position = true;
    auto q = blow_up(SurfaceModel::projective_plane(), 2, c);
    EXPECT_THROW(intersect(hyperplane(p), hyperplane(q)), SurfaceMismatch);
}

TEST(Picard, Signature) {
    EXPECT_EQ(signature(*SurfaceModel::projective_plane()), (Signature{1, 0, 0}));
    for (int e = 0; e <= 4; ++e)
        for (int l = 0; l <= 12; ++l) {
            auto s = l == 0 ? SurfaceModel::hirzebruch(e) : blow_up(SurfaceModel::hirzebruch(e), l, {});
            EXPECT_EQ(signature(*s), (Signature{1, s->rank() - 1, 0}));
        }
    EXPECT_EQ(signature({1, 0, 0, 0}, 2), (Signature{1, 0, 1}));
    EXPECT_THROW(signature({1, 2, 3, 4}, 2), std::invalid_argument);
}

TEST(Picard, HodgeIndex) {
    auto s = SurfaceModel::hirzebruch(0);
    EXPECT_TRUE(hodge_index_bound(DivisorClass(s, {1, 1}), DivisorClass(s, {1, -1})));
    EXPECT_THROW(hodge_index_bound(DivisorClass(s, {1, 0}), DivisorClass(s, {1, 1})), std::invalid_argument);
}

TEST(Picard, RiemannRochIntegrality) {
    auto s = blow_up(SurfaceModel::hirzebruch(2), 4, {});
    for (Int a = -3; a <= 3; ++a)
        for (Int b = -3; b <= 5; ++b)
            for (Int m = -2; m <= 2; ++m) {
                DivisorClass d(s, {a, b, m, 0, -m, 1});
                // Serre duality, and chi(D) + chi(-D) = 2 + D^2.
                EXPECT_EQ(euler_characteristic(d), euler_characteristic(canonical_class(s) - d));
                EXPECT_EQ(euler_characteristic(d) + euler_characteristic(-d), 2 + self_intersection(d));
            }
}
