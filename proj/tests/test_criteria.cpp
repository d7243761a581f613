#include "ratnp/criteria.hpp"

#include <gtest/gtest.h>

using namespace ratnp;
using namespace ratnp::criteria;

namespace {

Surface del_pezzo(int d) {
    PointConfig c;
    c.general_position = true;
    c.anticanonical_effective = true;
    return blow_up(SurfaceModel::projective_plane(), 9 - d, c);
}

const NpFlags kAnti{true, true, true};

}  // namespace

TEST(Division, ExactCeilFloor) {
    EXPECT_EQ(ceil_div(7, 3), 3);
    EXPECT_EQ(ceil_div(6, 3), 2);
    EXPECT_EQ(ceil_div(-7, 3), -2);
    EXPECT_EQ(floor_div(-7, 3), -3);
    EXPECT_EQ(floor_div(7, 3), 2);
    EXPECT_EQ(ceil_div(0, 5), 0);
}

TEST(NpClassify, CubicSurfaceAnticanonical) {
    auto s = del_pezzo(3);
    const auto v = np_classify(s, -canonical_class(s), kAnti);
    EXPECT_EQ(v.status, NpStatus{ExactMax{0}});
    EXPECT_EQ(v.justification, "anticanonical-degree:iff");
    EXPECT_TRUE(v.guarantees(0));
    EXPECT_TRUE(v.refutes(1));
}

TEST(NpClassify, DegreeTwoIsNotN0) {
    auto s = del_pezzo(2);
    const auto v = np_classify(s, -canonical_class(s), kAnti);
    EXPECT_EQ(v.status, NpStatus{NotN0{}});
    EXPECT_TRUE(v.refutes(0));
}

TEST(NpClassify, SufficientBranch) {
    EXPECT_EQ(np_classify_degree(7, {true, true, false}).status, NpStatus{AtLeast{4}});
    EXPECT_EQ(np_classify_degree(7, {true, true, false}).justification, "anticanonical-degree:sufficient");
    EXPECT_TRUE(std::holds_alternative<NotApplicable>(np_classify_degree(2, {true, true, false}).status));
    EXPECT_TRUE(std::holds_alternative<NotApplicable>(np_classify_degree(9, {true, false, false}).status));
    EXPECT_THROW(np_classify_degree(5, {false, true, true}), std::invalid_argument);
}

TEST(NpClassify, AgreesWithEquivalenceForDelPezzo) {
    for (int d = 3; d <= 7; ++d) {
        auto s = del_pezzo(d);
        EXPECT_EQ(np_classify(s, -canonical_class(s), kAnti).status, NpStatus{ExactMax{d - 3}});
        EXPECT_EQ(ampleness_np_equivalence(d, SummandTag::MinusK).verdict.status, NpStatus{ExactMax{d - 3}});
    }
}

TEST(Bpf, Thresholds) {
    auto s2 = del_pezzo(2);
    EXPECT_TRUE(bpf_check(s2, -canonical_class(s2), {true, true}));
    auto s1 = del_pezzo(1);
    EXPECT_FALSE(bpf_check(s1, -canonical_class(s1), {true, true}));
    auto f1 = SurfaceModel::hirzebruch(1);
    EXPECT_TRUE(bpf_check(f1, DivisorClass(f1, {1, 2}), {true, true}));
    EXPECT_THROW(bpf_check_degree(4, {true, false}), std::invalid_argument);
    EXPECT_THROW(bpf_check_degree(4, {false, true}), std::invalid_argument);
}

TEST(CurveNp, GreenAndEllipticNormal) {
    EXPECT_EQ(curve_np(1, 5).status, NpStatus{ExactMax{2}});
    EXPECT_EQ(curve_np(0, 2).status, NpStatus{AtLeast{1}});
    EXPECT_TRUE(std::holds_alternative<NotApplicable>(curve_np(3, 6).status));
    EXPECT_EQ(curve_np(2, 9).status, NpStatus{AtLeast{4}});
    EXPECT_TRUE(adjoint_curve_fails_np(2, 0));
    EXPECT_FALSE(adjoint_curve_fails_np(3, 0));
}

TEST(AdjointVeryAmple, Table) {
    using T = SummandTag;
    auto va = [](int k2, std::vector<T> s) { return adjoint_very_ample(k2, s); };
    EXPECT_EQ(va(9, {T::Other, T::Other, T::Other, T::Other}).status, VeryAmpleStatus::VeryAmple);
    EXPECT_EQ(va(9, {T::Other, T::Other, T::Other}).status, VeryAmpleStatus::NotGuaranteed);
    EXPECT_EQ(va(8, {T::Other, T::Other, T::Other}).status, VeryAmpleStatus::VeryAmple);
    EXPECT_EQ(va(5, {T::MinusK, T::MinusK}).status, VeryAmpleStatus::VeryAmple);
    const auto a4 = va(2, {T::MinusK, T::MinusK});
    EXPECT_EQ(a4.status, VeryAmpleStatus::ExceptionListed);
    EXPECT_EQ(a4.exception_case, "4");
    EXPECT_EQ(va(2, {T::MinusK, T::Other}).status, VeryAmpleStatus::VeryAmple);
    const auto a5 = va(1, {T::MinusK, T::MinusK});
    EXPECT_EQ(a5.exception_case, "5a");
    EXPECT_EQ(va(1, {T::MinusK, T::Minus2K}).exception_case, "5a");
    EXPECT_EQ(va(1, {T::MinusK, T::MinusK, T::MinusK}).exception_case, "5b");
    EXPECT_EQ(va(1, {T::MinusK, T::MinusK, T::Other}).status, VeryAmpleStatus::VeryAmple);
    EXPECT_EQ(va(0, {T::Other, T::Other}).status, VeryAmpleStatus::NotGuaranteed);
    EXPECT_EQ(va(0, {T::Other, T::Other, T::Other}).status, VeryAmpleStatus::VeryAmple);
    EXPECT_EQ(va(-3, {T::Other, T::Other}).status, VeryAmpleStatus::VeryAmple);
    EXPECT_THROW(va(3, {}), std::invalid_argument);
}

TEST(MinusKBound, Cases) {
    EXPECT_EQ(min_minus_k_degree(9, SummandTag::Other).bound, 3);
    EXPECT_EQ(min_minus_k_degree(8, SummandTag::Other, 3).bound, 7);
    EXPECT_EQ(min_minus_k_degree(SurfaceModel::hirzebruch(5), SummandTag::Other).bound, 9);
    const auto b = min_minus_k_degree(1, SummandTag::Minus2K);
    EXPECT_EQ(b.bound, 2);
    EXPECT_EQ(b.exception, BoundException::CaseB_Minus2K_Ksq1);
    EXPECT_TRUE(b.exact);
    EXPECT_EQ(min_minus_k_degree(4, SummandTag::MinusK).bound, 4);
    EXPECT_EQ(min_minus_k_degree(1, SummandTag::Minus3K).bound, 3);
    EXPECT_EQ(min_minus_k_degree(2, SummandTag::Minus2K).bound, 4);
    EXPECT_EQ(min_minus_k_degree(5, SummandTag::ConicFibration).bound, 7);
    EXPECT_EQ(min_minus_k_degree(5, SummandTag::Other).bound, 8);
    EXPECT_THROW(min_minus_k_degree(5, SummandTag::Other, 1), std::invalid_argument);
    EXPECT_THROW(min_minus_k_degree(-1, SummandTag::MinusK), std::invalid_argument);
    EXPECT_THROW(min_minus_k_degree(10, SummandTag::Other), std::invalid_argument);
}

TEST(AdjointTable, PinnedCells) {
    EXPECT_EQ(adjoint_np_min_n(9, 3).min_n, 5);
    EXPECT_EQ(adjoint_np_min_n(8, 1, {0, {}}).min_n, 3);
    EXPECT_EQ(adjoint_np_min_n(8, 1).min_n, 3);
    const auto k1 = adjoint_np_min_n(1, 0);
    EXPECT_EQ(k1.min_n, 4);
    EXPECT_EQ(k1.justification, "adjoint-np:positive-k2");
    EXPECT_EQ(adjoint_np_min_n(0, 5).min_n, 8);
    EXPECT_EQ(adjoint_np_min_n(-1, 5).min_n, 7);
    EXPECT_EQ(adjoint_np_min_n(-4, 0).min_n, 2);
    EXPECT_EQ(adjoint_np_min_n(-4, 10).min_n, 9);
    Exclusions not_k{true, true, false, false};
    EXPECT_EQ(adjoint_np_min_n(4, 11, {std::nullopt, not_k}).min_n, 3);
    Exclusions generic{true, true, false, true};
    EXPECT_EQ(adjoint_np_min_n(4, 0, {std::nullopt, generic}).min_n, 2);
    EXPECT_EQ(adjoint_np_min_n(4, 14, {std::nullopt, generic}).min_n, 3);
    EXPECT_THROW(adjoint_np_min_n(4, -1), std::invalid_argument);
    EXPECT_THROW(adjoint_np_min_n(4, 1, {2, {}}), std::invalid_argument);
}

TEST(Reider, Gates) {
    const ReiderFlags c1{true, false, false};
    EXPECT_TRUE(reider_np(1, 26, 5, 2, c1).holds);
    EXPECT_EQ(reider_np(1, 26, 5, 2, c1).gate, "self-intersection");
    EXPECT_TRUE(reider_np(1, 24, 5, 2, c1).holds);
    EXPECT_EQ(reider_np(1, 24, 5, 2, c1).gate, "self-intersection-weak");
    EXPECT_FALSE(reider_np(1, 24, 5, 2, {true, false, true}).holds);
    EXPECT_TRUE(reider_np(3, 24, 5, 2, {true, false, true}).holds);
    EXPECT_FALSE(reider_np(1, 23, 5, 2, c1).holds);
    EXPECT_TRUE(reider_np(0, 0, 5, 2, c1).holds);
    EXPECT_FALSE(reider_np(0, 1000, 4, 2, c1).holds);
    EXPECT_THROW(reider_np(1, 30, 5, 1, {}), std::invalid_argument);
}

TEST(AdjunctionTermination, Bound) {
    EXPECT_EQ(adjunction_termination_bound(1, 15, 1, false, true), std::optional<Int>(5));
    EXPECT_EQ(adjunction_termination_bound(1, 15, 1, true, true), std::nullopt);
    EXPECT_EQ(adjunction_termination_bound(5, 14, 1, false, true), std::nullopt);
    EXPECT_EQ(adjunction_termination_bound(8, 24, 2, false, true), std::optional<Int>(13));
    EXPECT_THROW(adjunction_termination_bound(8, 40, 1, false, true), std::invalid_argument);
    EXPECT_THROW(adjunction_termination_bound(3, 40, 1, false, false), std::invalid_argument);
    EXPECT_THROW(adjunction_termination_bound(9, 40, 1, false, true), std::invalid_argument);
}

TEST(InequalityChain, BoundaryEquality) {
    const auto c = verify_inequality_chain(1, 3, 1);
    EXPECT_EQ(c.degree_one, 0);
    EXPECT_TRUE(c.all());
    EXPECT_EQ(verify_inequality_chain(1, 4, 1).degree_one, 0);
    EXPECT_EQ(verify_inequality_chain(1, 2, 7).first_step, 0);
    EXPECT_THROW(verify_inequality_chain(1, 2, 8), std::invalid_argument);
    EXPECT_THROW(verify_inequality_chain(1, 1, 3), std::invalid_argument);
}

TEST(Termination, Thresholds) {
    const TerminationFlags attested{std::nullopt, false, true};
    const auto c = ampleness_termination(1, 0, attested);
    EXPECT_EQ(c.bound, Rational(2));
    EXPECT_EQ(c.first_m, 3);
    EXPECT_FALSE(c.contains(2));
    EXPECT_TRUE(c.contains(3));

    const auto b = ampleness_termination(8, 1, {1, false, true});
    EXPECT_EQ(b.bound, Rational(-1, 8));
    EXPECT_EQ(b.first_m, 0);
    EXPECT_TRUE(b.contains(1));
    EXPECT_FALSE(b.realizable);
    EXPECT_TRUE(ampleness_termination(8, 2, {1, false, true}).realizable);

    const auto e = ampleness_termination(-2, 1, attested);
    EXPECT_EQ(e.bound, Rational(-3, 2));
    EXPECT_FALSE(e.greater);
    EXPECT_EQ(e.first_m, -2);
    EXPECT_TRUE(e.contains(-2));
    EXPECT_FALSE(e.contains(-1));

    EXPECT_EQ(ampleness_termination(9, 3, attested).bound, Rational(1, 3));
    EXPECT_EQ(ampleness_termination(4, 3, {std::nullopt, true, true}).bound, Rational(0));
    EXPECT_THROW(ampleness_termination(0, 1, attested), std::invalid_argument);
    EXPECT_THROW(ampleness_termination(3, 1, {}), std::invalid_argument);
    EXPECT_THROW(ampleness_termination(8, 1, attested), std::invalid_argument);
}

TEST(Equivalence, Refinements) {
    const auto f2 = ampleness_np_equivalence(8, SummandTag::Other, 2);
    EXPECT_EQ(f2.np_iff_ample, 3);
    EXPECT_TRUE(f2.verdict.guarantees(3));
    const auto d2 = ampleness_np_equivalence(2, SummandTag::MinusK);
    EXPECT_FALSE(d2.verdict.guarantees(1));
    EXPECT_TRUE(ampleness_np_equivalence(2, SummandTag::Other).verdict.guarantees(1));
    EXPECT_EQ(ampleness_np_equivalence(5, SummandTag::Other).verdict.status, NpStatus{AtLeast{4}});
    EXPECT_EQ(ampleness_np_equivalence(9, SummandTag::Other).np_iff_ample, 0);
    EXPECT_THROW(ampleness_np_equivalence(1, SummandTag::Other), std::invalid_argument);
}

TEST(Verdicts, AlwaysJustified) {
    EXPECT_THROW(make_verdict(NotN0{}, ""), std::logic_error);
    for (Int t = -3; t <= 12; ++t)
        for (bool bpf : {false, true})
            for (bool anti : {false, true}) EXPECT_FALSE(np_classify_degree(t, {true, bpf, anti}).justification.empty());
}
