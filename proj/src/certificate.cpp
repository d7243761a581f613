#include "ratnp/certificate.hpp"

#include <algorithm>
#include <numeric>

namespace ratnp::examples {

std::string to_string(CheckKind k) {
    switch (k) {
        case CheckKind::ProperIntersection: return "ProperIntersection";
        case CheckKind::ProperIntersectionRay: return "ProperIntersectionRay";
        case CheckKind::FiberSpecial: return "FiberSpecial";
        case CheckKind::MinimalSection: return "MinimalSection";
        case CheckKind::OtherRuling: return "OtherRuling";
        case CheckKind::EqualsC: return "EqualsC";
        case CheckKind::PlaneDegree: return "PlaneDegree";
        case CheckKind::AnticanonicalMultiple: return "AnticanonicalMultiple";
        case CheckKind::PencilDecomposition: return "PencilDecomposition";
        case CheckKind::PencilFiber: return "PencilFiber";
        case CheckKind::HorizontalCurve: return "HorizontalCurve";
    }
    return "";
}

bool AmpleCertificate::valid() const {
    if (refused || self_int <= 0) return false;
    if (!std::all_of(exceptional_values.begin(), exceptional_values.end(), [](Int v) { return v > 0; }))
        return false;
    return std::all_of(curve_case_checks.begin(), curve_case_checks.end(),
                       [](const CurveCaseCheck& c) { return c.passed; });
}

namespace {

CurveCaseCheck make_check(CheckKind kind, Int a, Int b, Int lhs, Int rhs, bool strict, std::string note = {}) {
    CurveCaseCheck c{kind, a, b, lhs, rhs, strict, strict ? lhs < rhs : lhs <= rhs, std::move(note)};
    return c;
}

void use(AmpleCertificate& cert, const char* flag) {
    if (std::find(cert.assumptions_used.begin(), cert.assumptions_used.end(), flag) ==
        cert.assumptions_used.end())
        cert.assumptions_used.emplace_back(flag);
}

/// Indices of the `count` largest weights (ties: lower index first).
std::vector<int> heaviest(const std::vector<Int>& w, Int count) {
    std::vector<int> idx(w.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int x, int y) { return w[x] > w[y]; });
    idx.resize(static_cast<std::size_t>(std::min<Int>(count, static_cast<Int>(idx.size()))));
    return idx;
}

/// Largest sum of positive weights over at most `count` distinct points.
Int top_sum(const std::vector<Int>& w, Int count) {
    Int total = 0;
    for (int i : heaviest(w, count)) total += std::max<Int>(0, w[static_cast<std::size_t>(i)]);
    return total;
}

/// T = pi^*(base) - sum_{i in pts} E_i, for counterexamples.
DivisorClass strict_transform(const Surface& s, std::vector<Int> base, const std::vector<int>& pts,
                              const std::vector<Int>& w) {
    std::vector<Int> m(static_cast<std::size_t>(s->points()), 0);
    for (int i : pts)
        if (w[static_cast<std::size_t>(i)] > 0) m[static_cast<std::size_t>(i)] = 1;
    return pullback_minus(s, base, m);
}

void ruled_checks(AmpleCertificate& cert, const DivisorClass& A, const std::vector<Int>& w) {
    const auto& s = A.surface();
    const Int e = s->e();
    const Int l = s->points();
    const auto& cfg = s->config();
    const Int alpha = A[0], beta = A[1];
    auto pair = [&](Int a, Int b) { return -e * alpha * a + alpha * b + beta * a; };
    auto c_dot = [&](Int a, Int b) { return a * (2 - e) + 2 * b; };

    std::vector<Int> sorted = w;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    const Int w1 = l >= 1 ? std::max<Int>(0, sorted[0]) : 0;
    const Int w2 = l >= 2 ? std::max<Int>(0, sorted[1]) : 0;
    // Largest sum of w_i m_i with m_i <= a and sum m_i <= C.D, bounded by
    // putting a on the heaviest point and everything else at the second weight.
    auto worst = [&](Int a, Int b) -> Int {
        if (l == 0) return 0;
        if (l == 1) return w1 * a;
        return w1 * a + w2 * (c_dot(a, b) - a);
    };

    const Int va = 1, vb = e == 0 ? 1 : e;
    cert.curve_case_checks.push_back(make_check(CheckKind::ProperIntersection, va, vb, worst(va, vb),
                                                pair(va, vb), true, "cone vertex"));
    const std::vector<std::pair<Int, Int>> rays =
        e == 0 ? std::vector<std::pair<Int, Int>>{{1, 0}, {0, 1}} : std::vector<std::pair<Int, Int>>{{1, e}, {0, 1}};
    for (auto [ra, rb] : rays)
        cert.curve_case_checks.push_back(make_check(CheckKind::ProperIntersectionRay, ra, rb, worst(ra, rb),
                                                    pair(ra, rb), false, "cone direction"));

    // Fibers meet C twice; with distinct fibers at most one point lies on each.
    Int fiber_pts = std::min<Int>(l, 2);
    if (l > 0 && cfg.distinct_fibers) {
        fiber_pts = std::min<Int>(l, 1);
        use(cert, "distinct_fibers");
    }
    {
        auto chk = make_check(CheckKind::FiberSpecial, 0, 1, top_sum(w, fiber_pts), pair(0, 1), true);
        if (!chk.passed) cert.counterexample = strict_transform(s, {0, 1}, heaviest(w, fiber_pts), w);
        cert.curve_case_checks.push_back(chk);
    }

    if (e >= 1) {
        Int pts = std::min<Int>(l, std::max<Int>(0, 2 - e));
        if (l > 0 && cfg.away_from_min_section) {
            pts = 0;
            use(cert, "away_from_min_section");
        }
        auto chk = make_check(CheckKind::MinimalSection, 1, 0, top_sum(w, pts), pair(1, 0), true);
        if (!chk.passed && !cert.counterexample)
            cert.counterexample = strict_transform(s, {1, 0}, heaviest(w, pts), w);
        cert.curve_case_checks.push_back(chk);
    } else {
        Int pts = std::min<Int>(l, 2);
        if (l > 0 && cfg.distinct_fibers) pts = std::min<Int>(l, 1);
        auto chk = make_check(CheckKind::OtherRuling, 1, 0, top_sum(w, pts), pair(1, 0), true);
        if (!chk.passed && !cert.counterexample)
            cert.counterexample = strict_transform(s, {1, 0}, heaviest(w, pts), w);
        cert.curve_case_checks.push_back(chk);
    }

    const Int sum_w = std::accumulate(w.begin(), w.end(), Int{0});
    auto chk = make_check(CheckKind::EqualsC, 2, e + 2, sum_w, pair(2, e + 2), true,
                          "C is smooth, so every point has multiplicity 1");
    if (!chk.passed && !cert.counterexample) {
        std::vector<Int> m(static_cast<std::size_t>(l), 1);
        cert.counterexample = pullback_minus(s, {2, e + 2}, m);
    }
    cert.curve_case_checks.push_back(chk);
}

void del_pezzo_checks(AmpleCertificate& cert, const DivisorClass& A) {
    const auto& s = A.surface();
    use(cert, "general_position");
    const auto minus_k = -canonical_class(s);
    const Int t = A[0] % 3 == 0 ? A[0] / 3 : 0;
    const bool multiple = A[0] % 3 == 0 && A == t * minus_k;
    auto chk = make_check(CheckKind::AnticanonicalMultiple, A[0], 0, 0, multiple ? t : 0, true,
                          multiple ? "-K is ample on a Del Pezzo surface"
                                   : "not a positive multiple of -K; no certificate pattern");
    cert.curve_case_checks.push_back(chk);
}

void pencil_checks(AmpleCertificate& cert, const DivisorClass& A, const std::vector<Int>& w) {
    const auto& s = A.surface();
    use(cert, "complete_intersection_of_cubics");
    const Int d = A[0];
    const bool divisible = d % 3 == 0;
    const Int beta = divisible ? d / 3 : 0;
    Int min_r = 0;
    if (divisible) {
        min_r = beta - w[0];
        for (Int wi : w) min_r = std::min(min_r, beta - wi);
    }
    cert.curve_case_checks.push_back(make_check(
        CheckKind::PencilDecomposition, beta, 0, 0, divisible ? min_r : -1, false,
        divisible ? "A = beta F + sum (beta - w_i) E_i" : "degree not divisible by 3"));

    const Int af = intersect(A, -canonical_class(s));
    auto fiber = make_check(CheckKind::PencilFiber, 3, 0, 0, af, true, "fibers are irreducible");
    if (!fiber.passed) cert.counterexample = -canonical_class(s);
    cert.curve_case_checks.push_back(fiber);

    // A horizontal curve T has F.T >= 1, so A.T >= beta F.T >= beta.
    cert.curve_case_checks.push_back(
        make_check(CheckKind::HorizontalCurve, beta, 0, 0, divisible && min_r >= 0 ? beta : 0, true,
                   "F.T >= 1 and E_i.T >= 0"));
}

}  // namespace

AmpleCertificate nakai_certificate(const DivisorClass& A) {
    const auto& s = A.surface();
    AmpleCertificate cert;
    cert.self_int = self_intersection(A);
    std::vector<Int> w;
    for (int i = 1; i <= s->points(); ++i) {
        w.push_back(-A[s->base_rank() + i - 1]);
        cert.exceptional_values.push_back(intersect(A, exceptional(s, i)));
    }
    for (std::size_t i = 0; i < cert.exceptional_values.size() && !cert.counterexample; ++i)
        if (cert.exceptional_values[i] <= 0) cert.counterexample = exceptional(s, static_cast<int>(i) + 1);

    switch (curve_model_for(s)) {
        case CurveModel::Plane:
            cert.curve_case_checks.push_back(
                make_check(CheckKind::PlaneDegree, A[0], 0, 0, A[0], true, "every curve is a multiple of H"));
            break;
        case CurveModel::RuledOnCurve:
            if (s->points() > 0) use(cert, "on_smooth_anticanonical");
            ruled_checks(cert, A, w);
            break;
        case CurveModel::DelPezzo:
            del_pezzo_checks(cert, A);
            break;
        case CurveModel::CubicPencil:
            pencil_checks(cert, A, w);
            break;
        case CurveModel::Unmodeled:
            cert.refused = true;
            cert.refusal = s->base() == BaseSurface::Hirzebruch
                               ? "missing configuration flag: on_smooth_anticanonical"
                               : "missing configuration flag: general_position or complete_intersection_of_cubics";
            break;
    }
    return cert;
}

AmpleCertificate nakai_certificate(const ExampleFamily& ex) { return nakai_certificate(ex.A); }

}  // namespace ratnp::examples
