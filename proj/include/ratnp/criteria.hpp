#pragma once

// Numerical N_p criteria on rational surfaces. Positivity of the inputs
// (ample, nef, base-point-free, anticanonical) is always an attested flag;
// nothing here tries to decide it.

#include "ratnp/picard.hpp"
#include "ratnp/verdict.hpp"

#include <boost/rational.hpp>

#include <optional>
#include <span>
#include <string>

namespace ratnp::criteria {

using Rational = boost::rational<Int>;

/// ceil(num / den) for den > 0.
Int ceil_div(Int num, Int den);
/// floor(num / den) for den > 0.
Int floor_div(Int num, Int den);

// ---------------------------------------------------------------------------
// N_p from the anticanonical degree

struct NpFlags {
    bool ample = false;
    bool bpf = false;
    bool anticanonical = false;
};

/// Classifies L from t = -K.L. On an anticanonical surface the answer is
/// exact: N_p iff t >= p + 3. Otherwise, with L base-point-free, t >= p + 3
/// is only sufficient.
NpVerdict np_classify(const Surface& s, const DivisorClass& l, const NpFlags& flags);
NpVerdict np_classify_degree(Int minus_k_dot_l, const NpFlags& flags);

struct BpfFlags {
    bool nef = false;
    bool anticanonical = false;
};

/// Harbourne's criterion: a nef class on an anticanonical surface with
/// -K.L >= 2 is base-point-free. False means "not guaranteed".
bool bpf_check(const Surface& s, const DivisorClass& l, const BpfFlags& flags);
bool bpf_check_degree(Int minus_k_dot_l, const BpfFlags& flags);

/// Green-Lazarsfeld: on a smooth curve, K_C + N with N effective of degree
/// `effective_degree` fails N_p as soon as effective_degree <= p + 2.
bool adjoint_curve_fails_np(Int effective_degree, int p);

/// Reference verdict for a line bundle of degree `deg` on a smooth genus-g
/// curve: Green's bound deg >= 2g + 1 + p, and the exact answer deg >= p + 3
/// for elliptic normal curves.
NpVerdict curve_np(int genus, Int degree);

// ---------------------------------------------------------------------------
// Adjunction bundles K + A_1 + ... + A_n

/// What is known about the identity of an ample summand.
enum class SummandTag { Other, MinusK, Minus2K, Minus3K, ConicFibration };

std::string to_string(SummandTag tag);
SummandTag summand_tag_from_string(const std::string& name);

enum class VeryAmpleStatus { VeryAmple, ExceptionListed, NotGuaranteed };

struct VeryAmpleDecision {
    VeryAmpleStatus status;
    /// Exceptional configuration hit ("4", "5a", "5b"), empty otherwise.
    std::string exception_case;
    std::string justification;
};

/// Very ampleness of K + A_1 + ... + A_n on an anticanonical surface with
/// K^2 = k2, from the number and identity of the ample summands.
VeryAmpleDecision adjoint_very_ample(int k2, std::span<const SummandTag> summands);

enum class BoundException {
    None,
    CaseA_MinusK,
    CaseB_Minus2K_Ksq1,
    CaseC_Minus3K_Ksq1,
    CaseD_Minus2K_Ksq2,
    CaseE_ConicFibration,
};

std::string to_string(BoundException ex);

struct MinusKBoundReport {
    Int bound;
    BoundException exception = BoundException::None;
    /// The exceptional cases a)-d) pin -K.A exactly; everything else is a
    /// lower bound.
    bool exact = false;
    std::string justification;
};

/// Lower bound on -K.A for an ample A on an anticanonical surface.
/// `e` is required when k2 = 8 for the sharp F_e bound e + 4.
MinusKBoundReport min_minus_k_degree(int k2, SummandTag tag, std::optional<int> e = std::nullopt);
MinusKBoundReport min_minus_k_degree(const Surface& s, SummandTag tag);

/// Identities every summand is attested to avoid.
struct Exclusions {
    bool minus_k = false;
    bool minus_2k = false;
    bool minus_3k = false;
    bool conic_fibration = false;
};

struct AdjointRegime {
    std::optional<int> e;
    Exclusions excludes;
};

struct AdjointBound {
    int min_n;
    std::string justification;
};

/// Smallest n such that K + A_1 + ... + A_n satisfies N_p for every choice
/// of ample summands compatible with the regime.
AdjointBound adjoint_np_min_n(int k2, int p, const AdjointRegime& regime = {});

// ---------------------------------------------------------------------------
// Reider-type gate and termination of adjunction

struct ReiderFlags {
    /// L.C >= 3 for every curve C and L^2 >= 10 (attested).
    bool cond1_attested = false;
    /// K + L very ample (attested).
    bool adjoint_very_ample = false;
    bool multiple_of_minus_k = false;
};

struct ReiderDecision {
    bool holds;
    /// Gate that fired: "self-intersection", "self-intersection-weak",
    /// "anticanonical-degree", or empty.
    std::string gate;
    std::string justification;
};

/// Does K + L satisfy N_p by the numeric gates on L^2 and -K.L?
ReiderDecision reider_np(int k2, Int l_squared, Int minus_k_dot_l, int p, const ReiderFlags& flags);

/// If K + L is effective on a surface with K^2 > 0 other than P^2 and
/// L^2 >= (p+3)^2 - 1, then -K.L >= p + 3 + K^2 (unless K^2 = 1 and L is a
/// multiple of -K). Returns the certified lower bound, or nothing.
std::optional<Int> adjunction_termination_bound(int k2, Int l_squared, int p, bool multiple_of_minus_k,
                                                bool adjoint_effective);

/// The three polynomial inequalities behind the bound above.
struct InequalityChain {
    Int first_step;    ///< p^2 + 3p + 3 - K^2            (>= 0)
    Int degree_one;    ///< (p-m)^2 + 5(p-m) + 6          (>= 0)
    Int higher_degree; ///< p^2 + (5-2m)p + 2m^2 - 6m + 4 (>  0)
    bool first_step_ok;
    bool degree_one_ok;
    bool higher_degree_ok;
    bool all() const { return first_step_ok && degree_one_ok && higher_degree_ok; }
};

InequalityChain verify_inequality_chain(int p, int m, int k2);

enum class TerminationCase { Plane, Hirzebruch, DelPezzoRange, DelPezzoRangeNotMultiple, NegativeK2 };

std::string to_string(TerminationCase c);

struct TerminationFlags {
    std::optional<int> e;
    bool not_multiple_of_minus_k = false;
    /// L satisfies N_p but not N_{p+1}.
    bool attested_exact_np = false;
};

/// m K + L is not ample for every integer m with m > bound (or m < bound
/// when K^2 < 0).
struct TerminationThreshold {
    TerminationCase which;
    Rational bound;
    bool greater;
    /// Smallest integer m > bound, or largest integer m < bound.
    Int first_m;
    /// -K.L = p + 3 is compatible with the lower bounds on -K.A.
    bool realizable;
    std::string justification;

    bool contains(Int m) const;
    std::string describe() const;
};

TerminationThreshold ampleness_termination(int k2, int p, const TerminationFlags& flags);

// ---------------------------------------------------------------------------
// Ampleness versus N_p for K^2 >= 2

struct EquivalenceReport {
    /// ample <=> very ample <=> N_0.
    bool ample_va_n0_equivalent = false;
    /// N_p iff ample, when such a p is stated.
    std::optional<int> np_iff_ample;
    /// N_p iff ample and different from -K.
    std::optional<int> np_iff_ample_not_minus_k;
    NpVerdict verdict;
};

EquivalenceReport ampleness_np_equivalence(int k2, SummandTag tag, std::optional<int> e = std::nullopt);

}  // namespace ratnp::criteria
