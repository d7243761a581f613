#include "ratnp/criteria.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ratnp::criteria {

Int ceil_div(Int num, Int den) {
    if (den <= 0) throw std::invalid_argument("ceil_div: denominator must be positive");
    Int q = num / den;
    if (num % den != 0 && num > 0) ++q;
    return q;
}

Int floor_div(Int num, Int den) {
    if (den <= 0) throw std::invalid_argument("floor_div: denominator must be positive");
    Int q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q;
}

namespace {

Int minus_k_dot(const Surface& s, const DivisorClass& l) {
    if (l.surface() != s && !(*l.surface() == *s))
        throw SurfaceMismatch("class does not live on the given surface");
    return -intersect(canonical_class(s), l);
}

void require_rational_k2(int k2) {
    if (k2 > 9) throw std::invalid_argument("K^2 > 9 is impossible on a rational surface");
}

}  // namespace

// ---------------------------------------------------------------------------

NpVerdict np_classify_degree(Int t, const NpFlags& flags) {
    if (!flags.ample) throw std::invalid_argument("np_classify: L must be attested ample");
    if (flags.anticanonical) {
        std::vector<std::string> assumed{"ample", "anticanonical"};
        if (t >= 3)
            return make_verdict(ExactMax{static_cast<int>(t - 3)}, "anticanonical-degree:iff",
                                std::move(assumed));
        // Very ample would force -K.L >= 3; below that K_C + N with deg N = t
        // already fails N_0.
        return make_verdict(NotN0{}, "anticanonical-degree:iff+green-lazarsfeld", std::move(assumed));
    }
    if (!flags.bpf)
        return make_verdict(NotApplicable{"base-point-freeness not attested"},
                            "anticanonical-degree:sufficient", {"ample"});
    if (t >= 3)
        return make_verdict(AtLeast{static_cast<int>(t - 3)}, "anticanonical-degree:sufficient",
                            {"ample", "bpf"});
    return make_verdict(NotApplicable{"-K.L < 3"}, "anticanonical-degree:sufficient", {"ample", "bpf"});
}

NpVerdict np_classify(const Surface& s, const DivisorClass& l, const NpFlags& flags) {
    return np_classify_degree(minus_k_dot(s, l), flags);
}

bool bpf_check_degree(Int t, const BpfFlags& flags) {
    if (!flags.nef || !flags.anticanonical)
        throw std::invalid_argument("bpf_check: needs nef and anticanonical attestations");
    return t >= 2;
}

bool bpf_check(const Surface& s, const DivisorClass& l, const BpfFlags& flags) {
    return bpf_check_degree(minus_k_dot(s, l), flags);
}

bool adjoint_curve_fails_np(Int effective_degree, int p) {
    if (effective_degree < 0) throw std::invalid_argument("effective degree must be nonnegative");
    return effective_degree <= p + 2;
}

NpVerdict curve_np(int genus, Int degree) {
    if (genus < 0 || degree < 0) throw std::invalid_argument("curve_np: genus and degree must be >= 0");
    if (genus == 1) {
        if (degree >= 3)
            return make_verdict(ExactMax{static_cast<int>(degree - 3)}, "elliptic-normal-curve:iff");
        return make_verdict(NotN0{}, "elliptic-normal-curve:iff");
    }
    const Int slack = degree - 2 * genus - 1;
    if (slack >= 0) return make_verdict(AtLeast{static_cast<int>(slack)}, "curve-degree:green");
    return make_verdict(NotApplicable{"degree below 2g + 1"}, "curve-degree:green");
}

// ---------------------------------------------------------------------------

std::string to_string(SummandTag tag) {
    switch (tag) {
        case SummandTag::Other: return "other";
        case SummandTag::MinusK: return "minusK";
        case SummandTag::Minus2K: return "minus2K";
        case SummandTag::Minus3K: return "minus3K";
        case SummandTag::ConicFibration: return "conic";
    }
    return "other";
}

SummandTag summand_tag_from_string(const std::string& name) {
    for (auto t : {SummandTag::Other, SummandTag::MinusK, SummandTag::Minus2K, SummandTag::Minus3K,
                   SummandTag::ConicFibration})
        if (to_string(t) == name) return t;
    throw std::invalid_argument("unknown summand tag '" + name + "'");
}

VeryAmpleDecision adjoint_very_ample(int k2, std::span<const SummandTag> summands) {
    if (summands.empty()) throw std::invalid_argument("adjoint_very_ample: no summands");
    require_rational_k2(k2);
    const auto n = static_cast<int>(summands.size());
    const auto count = [&](SummandTag t) {
        return static_cast<int>(std::count(summands.begin(), summands.end(), t));
    };
    const std::string tag = "adjoint-very-ample:K2=" + std::to_string(k2);
    auto result = [&](bool ok) {
        return VeryAmpleDecision{ok ? VeryAmpleStatus::VeryAmple : VeryAmpleStatus::NotGuaranteed, "", tag};
    };
    auto exception = [&](const char* which) {
        return VeryAmpleDecision{VeryAmpleStatus::ExceptionListed, which, tag};
    };

    if (k2 == 9) return result(n >= 4);
    if (k2 == 8) return result(n >= 3);
    if (k2 >= 3) return result(n >= 2);
    if (k2 == 2) {
        if (n >= 3) return result(true);
        if (n == 2) return count(SummandTag::MinusK) == 2 ? exception("4") : result(true);
        return result(false);
    }
    if (k2 == 1) {
        if (n >= 4) return result(true);
        if (n == 3) return count(SummandTag::MinusK) == 3 ? exception("5b") : result(true);
        if (n == 2) {
            const int mk = count(SummandTag::MinusK);
            const int m2k = count(SummandTag::Minus2K);
            if (mk == 2 || (mk == 1 && m2k == 1)) return exception("5a");
            return result(true);
        }
        return result(false);
    }
    if (k2 == 0) return result(n >= 3);
    return result(n >= 2);
}

std::string to_string(BoundException ex) {
    switch (ex) {
        case BoundException::None: return "None";
        case BoundException::CaseA_MinusK: return "CaseA_MinusK";
        case BoundException::CaseB_Minus2K_Ksq1: return "CaseB_Minus2K_Ksq1";
        case BoundException::CaseC_Minus3K_Ksq1: return "CaseC_Minus3K_Ksq1";
        case BoundException::CaseD_Minus2K_Ksq2: return "CaseD_Minus2K_Ksq2";
        case BoundException::CaseE_ConicFibration: return "CaseE_ConicFibration";
    }
    return "None";
}

MinusKBoundReport min_minus_k_degree(int k2, SummandTag tag, std::optional<int> e) {
    require_rational_k2(k2);
    if (e && k2 != 8) throw std::invalid_argument("min_minus_k_degree: twist e only applies when K^2 = 8");
    if (e && *e < 0) throw std::invalid_argument("min_minus_k_degree: negative twist");

    if (k2 == 9) return {3, BoundException::None, false, "minusK-bound:plane"};
    if (k2 == 8) {
        if (e) return {*e + 4, BoundException::None, false, "minusK-bound:ruled-twist"};
        return {4, BoundException::None, false, "minusK-bound:ruled"};
    }
    if (k2 >= 1) {
        const std::string tag_name = "minusK-bound:positive-k2";
        switch (tag) {
            case SummandTag::MinusK:
                return {k2, BoundException::CaseA_MinusK, true, tag_name};
            case SummandTag::Minus2K:
                if (k2 == 1) return {k2 + 1, BoundException::CaseB_Minus2K_Ksq1, true, tag_name};
                if (k2 == 2) return {k2 + 2, BoundException::CaseD_Minus2K_Ksq2, true, tag_name};
                break;
            case SummandTag::Minus3K:
                if (k2 == 1) return {k2 + 2, BoundException::CaseC_Minus3K_Ksq1, true, tag_name};
                break;
            case SummandTag::ConicFibration:
                return {k2 + 2, BoundException::CaseE_ConicFibration, false, tag_name};
            case SummandTag::Other:
                break;
        }
        return {k2 + 3, BoundException::None, false, tag_name};
    }
    if (tag == SummandTag::MinusK || tag == SummandTag::Minus2K || tag == SummandTag::Minus3K)
        throw std::invalid_argument("a multiple of -K cannot be ample when K^2 <= 0");
    return {1, BoundException::None, false, "minusK-bound:trivial"};
}

MinusKBoundReport min_minus_k_degree(const Surface& s, SummandTag tag) {
    const int k2 = static_cast<int>(k_squared(s));
    std::optional<int> e;
    if (k2 == 8) {
        // K^2 = 8 means F_e itself, or P^2 blown up once (= F_1).
        e = s->base() == BaseSurface::Hirzebruch ? s->e() : 1;
    }
    return min_minus_k_degree(k2, tag, e);
}

AdjointBound adjoint_np_min_n(int k2, int p, const AdjointRegime& regime) {
    if (p < 0) throw std::invalid_argument("adjoint_np_min_n: p must be >= 0");
    require_rational_k2(k2);
    if (regime.e && k2 != 8) throw std::invalid_argument("adjoint_np_min_n: twist e requires K^2 = 8");
    if (regime.e && *regime.e < 0) throw std::invalid_argument("adjoint_np_min_n: negative twist");

    std::optional<AdjointBound> best;
    auto offer = [&](Int n, const char* tag) {
        if (!best || n < best->min_n) best = AdjointBound{static_cast<int>(n), tag};
    };
    const auto& ex = regime.excludes;

    if (k2 == 9) {
        offer(ceil_div(p, 3) + 4, "adjoint-np:plane");
    } else if (k2 == 8) {
        offer(ceil_div(p + 3, 4) + 2, "adjoint-np:ruled");
        if (regime.e) offer(std::max<Int>(3, ceil_div(p + 11, *regime.e + 4)), "adjoint-np:ruled-twist");
    } else if (k2 >= 1) {
        offer(ceil_div(p + 3, k2) + 1, "adjoint-np:positive-k2");
        if (k2 == 1) offer(p + 3 + k2, "adjoint-np:small-k2");
        if (ex.minus_k && (k2 != 1 || ex.minus_2k))
            offer(ceil_div(p + k2 + 3, k2 + 2), "adjoint-np:positive-k2-not-minusK");
        if (k2 >= 2 && ex.minus_k && (k2 != 2 || ex.minus_2k) && ex.conic_fibration)
            offer(std::max<Int>(2, ceil_div(p + k2 + 3, k2 + 3)), "adjoint-np:positive-k2-generic");
    } else if (k2 >= -1) {
        offer(p + 3 + k2, "adjoint-np:small-k2");
    } else {
        offer(std::max<Int>(2, p + 3 + k2), "adjoint-np:negative-k2");
    }
    return *best;
}

// ---------------------------------------------------------------------------

ReiderDecision reider_np(int k2, Int l2, Int t, int p, const ReiderFlags& flags) {
    if (!flags.cond1_attested && !flags.adjoint_very_ample)
        throw std::invalid_argument("reider_np: needs the curve-degree condition or very ample K + L");
    if (p < 0) throw std::invalid_argument("reider_np: p must be >= 0");
    require_rational_k2(k2);

    if (k2 >= 1) {
        const Int q = static_cast<Int>(p + 3) * (p + 3);
        if (l2 >= q + 1) return {true, "self-intersection", "reider-np:self-intersection"};
        const bool weak_allowed = !(k2 == 1 && flags.multiple_of_minus_k);
        if (weak_allowed && l2 >= q - 1)
            return {true, "self-intersection-weak", "reider-np:self-intersection-weak"};
        return {false, "", "reider-np:self-intersection"};
    }
    if (t >= p + 3) return {true, "anticanonical-degree", "reider-np:anticanonical-degree"};
    return {false, "", "reider-np:anticanonical-degree"};
}

std::optional<Int> adjunction_termination_bound(int k2, Int l2, int p, bool multiple_of_minus_k,
                                                bool adjoint_effective) {
    if (k2 <= 0) throw std::invalid_argument("adjunction_termination_bound: requires K^2 > 0");
    if (k2 >= 9) throw std::invalid_argument("adjunction_termination_bound: P^2 is excluded");
    if (k2 <= 7 && p < 1) throw std::invalid_argument("adjunction_termination_bound: requires p >= 1");
    if (k2 == 8 && p < 2)
        throw std::invalid_argument("adjunction_termination_bound: requires p >= 2 when K^2 = 8");
    if (!adjoint_effective)
        throw std::invalid_argument("adjunction_termination_bound: K + L must be attested effective");
    const Int q = static_cast<Int>(p + 3) * (p + 3);
    if (l2 >= q - 1 && !(k2 == 1 && multiple_of_minus_k)) return p + 3 + k2;
    return std::nullopt;
}

InequalityChain verify_inequality_chain(int p, int m, int k2) {
    if (k2 < 1 || k2 > 8) throw std::invalid_argument("verify_inequality_chain: K^2 must lie in [1, 8]");
    if (p < 1 || (k2 == 8 && p < 2)) throw std::invalid_argument("verify_inequality_chain: p out of range");
    if (m < 2) throw std::invalid_argument("verify_inequality_chain: m must be >= 2");
    const Int P = p, M = m, d = P - M;
    InequalityChain c{};
    c.first_step = P * P + 3 * P + 3 - k2;
    c.degree_one = d * d + 5 * d + 6;
    c.higher_degree = P * P + (5 - 2 * M) * P + (2 * M * M - 6 * M + 4);
    c.first_step_ok = c.first_step >= 0;
    c.degree_one_ok = c.degree_one >= 0;
    c.higher_degree_ok = c.higher_degree > 0;
    return c;
}

std::string to_string(TerminationCase c) {
    switch (c) {
        case TerminationCase::Plane: return "plane";
        case TerminationCase::Hirzebruch: return "hirzebruch";
        case TerminationCase::DelPezzoRange: return "positive-k2";
        case TerminationCase::DelPezzoRangeNotMultiple: return "positive-k2-not-multiple";
        case TerminationCase::NegativeK2: return "negative-k2";
    }
    return "";
}

bool TerminationThreshold::contains(Int m) const {
    const Int num = bound.numerator();
    const Int den = bound.denominator();  // boost normalizes den > 0
    return greater ? m * den > num : m * den < num;
}

std::string TerminationThreshold::describe() const {
    std::ostringstream os;
    os << "every integer m " << (greater ? "> " : "< ") << bound.numerator();
    if (bound.denominator() != 1) os << '/' << bound.denominator();
    os << " (m " << (greater ? ">= " : "<= ") << first_m << ") gives non-ample mK + L";
    return os.str();
}

TerminationThreshold ampleness_termination(int k2, int p, const TerminationFlags& flags) {
    if (!flags.attested_exact_np)
        throw std::invalid_argument("ampleness_termination: L must be attested N_p but not N_{p+1}");
    if (p < 0) throw std::invalid_argument("ampleness_termination: p must be >= 0");
    require_rational_k2(k2);
    if (k2 == 0) throw std::invalid_argument("ampleness_termination: no statement for K^2 = 0");
    if (flags.e && k2 != 8) throw std::invalid_argument("ampleness_termination: twist e requires K^2 = 8");

    TerminationThreshold t{};
    t.greater = true;
    if (k2 == 9) {
        t.which = TerminationCase::Plane;
        t.bound = Rational(p, 9);
        t.realizable = p % 3 == 0;
    } else if (k2 == 8) {
        if (!flags.e) throw std::invalid_argument("ampleness_termination: K^2 = 8 needs the twist e");
        t.which = TerminationCase::Hirzebruch;
        t.bound = Rational(p - *flags.e - 1, 8);
        t.realizable = p >= *flags.e + 1;
    } else if (k2 >= 1) {
        if (flags.not_multiple_of_minus_k) {
            t.which = TerminationCase::DelPezzoRangeNotMultiple;
            t.bound = Rational(p + 1, k2) - 1;
            t.realizable = p + 3 >= k2 + 2;
        } else {
            t.which = TerminationCase::DelPezzoRange;
            t.bound = Rational(p + 3, k2) - 1;
            t.realizable = p + 3 >= k2;
        }
    } else {
        t.which = TerminationCase::NegativeK2;
        t.greater = false;
        t.bound = Rational(p + 2, k2);
        t.realizable = true;
    }
    const Int num = t.bound.numerator(), den = t.bound.denominator();
    t.first_m = t.greater ? floor_div(num, den) + 1 : ceil_div(num, den) - 1;
    t.justification = "ampleness-termination:" + to_string(t.which);
    return t;
}

// ---------------------------------------------------------------------------

EquivalenceReport ampleness_np_equivalence(int k2, SummandTag tag, std::optional<int> e) {
    require_rational_k2(k2);
    if (k2 < 2) throw std::invalid_argument("ampleness_np_equivalence: requires K^2 >= 2");
    if (e && k2 != 8) throw std::invalid_argument("ampleness_np_equivalence: twist e requires K^2 = 8");

    EquivalenceReport r{false, std::nullopt, std::nullopt, make_verdict(NotN0{}, "placeholder")};
    const std::vector<std::string> assumed{"ample"};
    if (k2 == 9) {
        r.ample_va_n0_equivalent = true;
        r.np_iff_ample = 0;
        r.verdict = make_verdict(AtLeast{0}, "ampleness-np-equivalence:plane", assumed);
    } else if (k2 == 8) {
        if (!e) throw std::invalid_argument("ampleness_np_equivalence: K^2 = 8 needs the twist e");
        r.ample_va_n0_equivalent = true;
        r.np_iff_ample = *e + 1;
        r.verdict = make_verdict(AtLeast{*e + 1}, "ampleness-np-equivalence:ruled", assumed);
    } else if (k2 >= 3) {
        r.ample_va_n0_equivalent = true;
        r.np_iff_ample = k2 - 3;
        r.np_iff_ample_not_minus_k = k2 - 1;
        r.verdict = tag == SummandTag::MinusK
                        ? make_verdict(ExactMax{k2 - 3}, "ampleness-np-equivalence:anticanonical", assumed)
                        : make_verdict(AtLeast{k2 - 1}, "ampleness-np-equivalence:not-anticanonical",
                                       assumed);
    } else {
        r.np_iff_ample_not_minus_k = 1;
        // -K with (-K)^2 = 2 has -K.(-K) < 3, so it is not even N_0.
        r.verdict = tag == SummandTag::MinusK
                        ? make_verdict(NotN0{}, "ampleness-np-equivalence:degree-two", assumed)
                        : make_verdict(AtLeast{1}, "ampleness-np-equivalence:degree-two", assumed);
    }
    return r;
}

}  // namespace ratnp::criteria
