#include "ratnp/selftest.hpp"

#include "ratnp/certificate.hpp"
#include "ratnp/criteria.hpp"
#include "ratnp/families.hpp"
#include "ratnp/fano.hpp"
#include "ratnp/json_io.hpp"
#include "ratnp/verify.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

namespace ratnp::selftest {

using namespace ratnp::criteria;
using examples::OracleBox;
using io::json;

namespace {

/// Collects failures; keeps the first few for the detail line.
struct Tally {
    long long cases = 0;
    long long failures = 0;
    std::vector<std::string> first;

    void expect(bool ok, const std::string& what) {
        ++cases;
        if (ok) return;
        ++failures;
        if (first.size() < 5) first.push_back(what);
    }
    Check finish(std::string name, std::string summary) const {
        std::string detail = std::move(summary);
        for (const auto& f : first) detail += "; " + f;
        return {std::move(name), failures == 0, detail, 0};
    }
};

Check timed(const std::function<Check()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Check c;
    try {
        c = body();
    } catch (const std::exception& e) {
        c.passed = false;
        c.detail = std::string("exception: ") + e.what();
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return c;
}

std::string counted(long long cases, const std::string& noun) { return std::to_string(cases) + " " + noun; }

std::vector<examples::ExampleFamily> sweep_instances() {
    std::vector<examples::ExampleFamily> out;
    for (const auto& info : examples::families())
        for (const auto& p : examples::sweep_params(info.id)) out.push_back(examples::build_example(info.id, p));
    return out;
}

std::string label(const examples::ExampleFamily& ex) {
    std::string s = ex.id;
    for (const auto& [k, v] : ex.params) s += " " + k + "=" + std::to_string(v);
    return s;
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return json::parse(in);
}

bool subset_match(const json& expect, const json& actual) {
    if (expect.is_object()) {
        if (!actual.is_object()) return false;
        for (const auto& [k, v] : expect.items())
            if (!actual.contains(k) || !subset_match(v, actual.at(k))) return false;
        return true;
    }
    return expect == actual;
}

Surface del_pezzo_surface(int k2) {
    if (k2 == 9) return SurfaceModel::projective_plane();
    PointConfig c;
    c.general_position = true;
    c.anticanonical_effective = true;
    return blow_up(SurfaceModel::projective_plane(), 9 - k2, c);
}

bool certified_ample(const DivisorClass& d, const OracleBox& box) {
    const auto cert = examples::nakai_certificate(d);
    if (cert.refused) throw std::logic_error("certificate refused for " + d.to_string());
    const bool oracle = examples::brute_force_min(d, box, 1).ample();
    if (oracle != cert.valid()) throw std::logic_error("certificate and oracle disagree on " + d.to_string());
    return cert.valid();
}

}  // namespace

// ---------------------------------------------------------------------------

Check example_sweep(const OracleBox& box, unsigned threads) {
    Tally t;
    long long claims = 0;
    for (const auto& ex : sweep_instances()) {
        const auto r = examples::verify_family(ex, box, threads);
        claims += static_cast<long long>(r.claims.size() + r.identities.size());
        t.expect(r.passed(), r.failures.empty() ? label(ex) : r.failures.front());
    }
    return t.finish("example sweep", counted(t.cases, "instances, ") + counted(claims, "claims"));
}

Check example_fixtures(const std::string& fixture_dir) {
    Tally t;
    const json doc = load_json(fixture_dir + "/examples.json");
    std::size_t family_count = 0;
    for (const auto& info : examples::families()) {
        t.expect(doc.at("families").contains(info.id), "missing fixture family " + info.id);
        if (!doc.at("families").contains(info.id)) continue;
        ++family_count;
        const auto& entries = doc.at("families").at(info.id);
        t.expect(entries.size() == examples::sweep_params(info.id).size(), info.id + ": fixture count != sweep size");
        for (const auto& entry : entries) {
            const auto ex = examples::build_example(info.id, io::params_from_json(entry.at("params")));
            const auto& claims = entry.at("claims");
            t.expect(claims.size() == ex.claims.size(), label(ex) + ": claim count differs");
            for (std::size_t i = 0; i < claims.size() && i < ex.claims.size(); ++i) {
                const auto& c = claims[i];
                const auto q = c.at("quantity").get<std::string>();
                const auto v = c.at("expected").get<Int>();
                const auto src = c.at("source").get<std::string>();
                t.expect(ex.claims[i].quantity == q && ex.claims[i].expected == v &&
                             examples::to_string(ex.claims[i].source) == src,
                         label(ex) + ": claim " + q + " differs from construction");
                t.expect(examples::evaluate_quantity(ex, q) == v, label(ex) + ": lattice disagrees on " + q);
            }
            const auto& ids = entry.at("identities");
            t.expect(ids.size() == ex.identities.size(), label(ex) + ": identity count differs");
            for (std::size_t i = 0; i < ids.size() && i < ex.identities.size(); ++i) {
                const auto lhs = ids[i].at("class").get<std::string>();
                const auto v = ids[i].at("expected").get<std::vector<Int>>();
                t.expect(ex.identities[i].lhs == lhs && ex.identities[i].expected == v,
                         label(ex) + ": identity " + lhs + " differs from construction");
                t.expect(examples::evaluate_class(ex, lhs).coeffs() == v, label(ex) + ": lattice disagrees on " + lhs);
            }
        }
    }

    const json obs = load_json(fixture_dir + "/obs14.json");
    io::require_keys(obs, {"divisor", "flags"}, "obs14.json");
    const auto d = io::divisor_from_json(obs.at("divisor"));
    const auto& f = obs.at("flags");
    const NpFlags flags{f.at("ample").get<bool>(), f.at("bpf").get<bool>(), f.at("anticanonical").get<bool>()};
    const auto v = np_classify(d.surface(), d, flags);
    // -K.L = 2n - 5 identifies n.
    const Int n = (intersect(-canonical_class(d.surface()), d) + 5) / 2;
    const auto ref = examples::build_example("non-anticanonical", {{"n", n}});
    t.expect(ref.A == d, "obs14.json divisor is not the non-anticanonical class for n=" + std::to_string(n));
    t.expect(v.status == NpStatus{AtLeast{static_cast<int>(2 * n - 8)}},
             "obs14.json classifies as " + v.to_string());
    return t.finish("example fixtures", counted(static_cast<long long>(family_count), "families, ") +
                                            counted(t.cases, "pinned values"));
}

Check operation_fixtures(const std::string& fixture_dir) {
    Tally t;
    const json doc = load_json(fixture_dir + "/operations.json");
    for (const auto& c : doc.at("cases")) {
        const std::string name = c.at("op").get<std::string>() + " " + c.at("args").dump();
        json request{{"op", c.at("op")}, {"args", c.at("args")}};
        if (c.value("error", false)) {
            bool threw = false;
            try {
                io::evaluate(request);
            } catch (const std::invalid_argument&) {
                threw = true;
            }
            t.expect(threw, name + " should be rejected");
            continue;
        }
        const json out = io::evaluate(request);
        t.expect(subset_match(c.at("expect"), out), name + " gave " + out.dump());
    }
    // Every operation has at least one fixture.
    for (const auto& op : io::operation_names()) {
        bool seen = false;
        for (const auto& c : doc.at("cases")) seen = seen || c.at("op") == op;
        t.expect(seen, "no fixture for op " + op);
    }
    return t.finish("operation fixtures", counted(t.cases, "checks"));
}

// ---------------------------------------------------------------------------

namespace {

const SummandTag kAllTags[] = {SummandTag::Other, SummandTag::MinusK, SummandTag::Minus2K, SummandTag::Minus3K,
                               SummandTag::ConicFibration};

bool excluded(const Exclusions& ex, SummandTag tag) {
    switch (tag) {
        case SummandTag::MinusK: return ex.minus_k;
        case SummandTag::Minus2K: return ex.minus_2k;
        case SummandTag::Minus3K: return ex.minus_3k;
        case SummandTag::ConicFibration: return ex.conic_fibration;
        case SummandTag::Other: return false;
    }
    return false;
}

bool every_multiset_very_ample(int k2, const std::vector<SummandTag>& tags, int n) {
    std::vector<SummandTag> pick;
    std::function<bool(std::size_t)> rec = [&](std::size_t from) {
        if (static_cast<int>(pick.size()) == n)
            return adjoint_very_ample(k2, pick).status == VeryAmpleStatus::VeryAmple;
        for (std::size_t i = from; i < tags.size(); ++i) {
            pick.push_back(tags[i]);
            const bool ok = rec(i);
            pick.pop_back();
            if (!ok) return false;
        }
        return true;
    };
    return rec(0);
}

/// Smallest n for which every admissible choice of n summands gives a very
/// ample K + sum A_i with -K.(K + sum A_i) >= p + 3.
int reconstructed_min_n(int k2, int p, const AdjointRegime& regime) {
    std::vector<SummandTag> tags;
    for (auto tag : kAllTags) {
        if (excluded(regime.excludes, tag)) continue;
        if (k2 <= 0 && tag != SummandTag::Other && tag != SummandTag::ConicFibration) continue;
        tags.push_back(tag);
    }
    Int b = -1;
    for (auto tag : tags) {
        const Int v = min_minus_k_degree(k2, tag, regime.e).bound;
        if (b < 0 || v < b) b = v;
    }
    int n_deg = 1;
    while (n_deg * b - k2 < p + 3) ++n_deg;
    int n_va = 1;
    while (!every_multiset_very_ample(k2, tags, n_va)) ++n_va;
    return std::max(n_deg, n_va);
}

}  // namespace

Check adjoint_table_reconstruction() {
    Tally t;
    std::vector<std::pair<std::string, Exclusions>> regimes = {
        {"no exclusions", {}},
        {"not -K, -2K", {true, true, false, false}},
        {"not -K, -2K, conic", {true, true, false, true}},
    };
    for (int k2 = -5; k2 <= 9; ++k2) {
        std::vector<std::pair<std::string, AdjointRegime>> cells;
        for (const auto& [name, ex] : regimes) cells.push_back({name, AdjointRegime{std::nullopt, ex}});
        if (k2 == 8)
            for (int e = 0; e <= 4; ++e) cells.push_back({"e=" + std::to_string(e), AdjointRegime{e, {}}});
        for (const auto& [name, regime] : cells) {
            for (int p = 0; p <= 40; ++p) {
                const int table = adjoint_np_min_n(k2, p, regime).min_n;
                const int rebuilt = reconstructed_min_n(k2, p, regime);
                t.expect(table == rebuilt, "k2=" + std::to_string(k2) + " p=" + std::to_string(p) + " (" + name +
                                               "): table " + std::to_string(table) + ", reconstruction " +
                                               std::to_string(rebuilt));
            }
        }
    }
    return t.finish("adjoint table reconstruction", counted(t.cases, "cells"));
}

Check inequality_grid() {
    Tally t;
    for (int k2 = 1; k2 <= 8; ++k2)
        for (int p = (k2 == 8 ? 2 : 1); p <= 50; ++p)
            for (int m = 2; m <= 50; ++m) {
                const auto c = verify_inequality_chain(p, m, k2);
                t.expect(c.all(), "p=" + std::to_string(p) + " m=" + std::to_string(m) + " k2=" + std::to_string(k2));
            }
    long long equalities = 0;
    for (int p = 1; p + 2 <= 50; ++p) {
        const auto c = verify_inequality_chain(p, p + 2, 1);
        t.expect(c.degree_one == 0, "p - m = -2 is not an equality at p=" + std::to_string(p));
        ++equalities;
    }
    bool rejected = false;
    try {
        verify_inequality_chain(1, 2, 8);
    } catch (const std::invalid_argument&) {
        rejected = true;
    }
    t.expect(rejected, "k2=8, p=1 accepted");
    return t.finish("inequality grid", counted(t.cases - equalities - 1, "grid points, ") +
                                           counted(equalities, "equality cases"));
}

Check sharpness_fixtures() {
    Tally t;
    const OracleBox box{};
    const NpFlags anti{true, true, true};

    {
        const auto s = del_pezzo_surface(3);
        const auto v = np_classify(s, -canonical_class(s), anti);
        t.expect(v.status == NpStatus{ExactMax{0}}, "cubic surface -K gives " + v.to_string());
        const auto eq = ampleness_np_equivalence(3, SummandTag::MinusK);
        t.expect(eq.verdict.status == NpStatus{ExactMax{0}}, "equivalence at d=3 gives " + eq.verdict.to_string());
    }

    {
        const auto s = del_pezzo_surface(1);
        const auto mk = -canonical_class(s);
        const ReiderFlags flags{true, false, true};
        for (int p = 0; p <= 30; ++p) {
            const auto l = (p + 4) * mk;
            const Int l2 = self_intersection(l);
            const Int q = static_cast<Int>(p + 3) * (p + 3);
            t.expect(l2 == static_cast<Int>(p + 4) * (p + 4) && l2 >= q + 1, "L^2 of (p+4)(-K) at p=" + std::to_string(p));
            const auto d = reider_np(1, l2, intersect(mk, l), p, flags);
            t.expect(d.holds && d.gate == "self-intersection", "(p+4)(-K) misses the gate at p=" + std::to_string(p));
            const auto below = (p + 3) * mk;
            t.expect(!reider_np(1, self_intersection(below), intersect(mk, below), p, flags).holds,
                     "(p+3)(-K) passes at p=" + std::to_string(p));
        }
    }

    {
        const auto ex = examples::build_example("conic-bundle", {{"e", 0}, {"n", 2}});
        const auto mk = -canonical_class(ex.surface);
        const auto l = mk + ex.A;
        t.expect(self_intersection(l) == 16, "conic bundle -K + A has L^2 != 16");
        const auto v = np_classify(ex.surface, ex.A, anti);
        t.expect(v.status == NpStatus{ExactMax{1}}, "conic bundle K + L gives " + v.to_string());
        const ReiderFlags one_prime{false, true, false};
        t.expect(reider_np(2, 16, intersect(mk, l), 1, one_prime).holds, "weak gate misses p=1");
        t.expect(!reider_np(2, 16, intersect(mk, l), 2, one_prime).holds, "weak gate passes p=2");
    }

    {
        const auto ex = examples::build_example("elliptic-fibration", {{"n", 2}});
        const auto mk = -canonical_class(ex.surface);
        const auto l = 3 * ex.A;
        t.expect(self_intersection(l) == 27, "elliptic 3A has L^2 != 27");
        const auto v = np_classify(ex.surface, canonical_class(ex.surface) + l, anti);
        t.expect(v.status == NpStatus{ExactMax{0}}, "elliptic K + 3A gives " + v.to_string());
        for (int p = 1; p <= 2; ++p) {
            t.expect(27 >= (p + 3) * (p + 3) + 1, "27 below the self-intersection gate");
            t.expect(!reider_np(0, 27, intersect(mk, l), p, ReiderFlags{true, false, false}).holds,
                     "elliptic 3A passes at p=" + std::to_string(p));
        }
    }

    // Termination bounds: m = first_m - 1 keeps mK + L ample, m = first_m does not.
    auto boundary = [&](const std::string& what, const Surface& s, const DivisorClass& l, int k2, int p,
                        const TerminationFlags& f, const Rational& expected_bound) {
        const auto th = ampleness_termination(k2, p, f);
        t.expect(th.bound == expected_bound, what + ": bound differs");
        const auto k = canonical_class(s);
        t.expect(certified_ample((th.first_m - 1) * k + l, box), what + ": m = first_m - 1 not ample");
        t.expect(!certified_ample(th.first_m * k + l, box), what + ": m = first_m ample");
        t.expect(th.contains(th.first_m) && !th.contains(th.first_m - 1), what + ": range endpoints");
    };
    {
        const auto s = SurfaceModel::projective_plane();
        for (int d = 1; d <= 12; ++d)
            boundary("plane d=" + std::to_string(d), s, d * hyperplane(s), 9, 3 * d - 3, {std::nullopt, false, true},
                     Rational(3 * d - 3, 9));
    }
    for (int e = 0; e <= 6; ++e) {
        const auto s = SurfaceModel::hirzebruch(e);
        const DivisorClass l(s, {1, e + 1});
        const int p = static_cast<int>(intersect(-canonical_class(s), l)) - 3;
        t.expect(p == e + 1, "C0 + (e+1)f is not N_{e+1} exactly");
        boundary("F_" + std::to_string(e), s, l, 8, p, {e, false, true}, Rational(0));
    }
    for (int k2 = 1; k2 <= 7; ++k2) {
        const auto s = del_pezzo_surface(k2);
        for (int n = 1; n <= 6; ++n) {
            if (n * k2 < 3) continue;
            boundary("n(-K) k2=" + std::to_string(k2) + " n=" + std::to_string(n), s, n * (-canonical_class(s)), k2,
                     n * k2 - 3, {std::nullopt, false, true}, Rational(n - 1));
        }
    }
    for (int e = 0; e <= 2; ++e)
        for (int n = 1; n <= 7; ++n) {
            const auto ex = examples::build_example("conic-bundle", {{"e", e}, {"n", n}});
            boundary("conic bundle e=" + std::to_string(e) + " n=" + std::to_string(n), ex.surface, ex.A, n, n - 1,
                     {std::nullopt, true, true}, Rational(0));
        }
    return t.finish("sharpness fixtures", counted(t.cases, "checks"));
}

Check fano_fixtures() {
    Tally t;
    fano::FanoInput p3{3, 2, 8, std::nullopt, fano::MorphismType::Unknown};
    const auto v = fano::primitive_np(p3);
    t.expect(v.status == NpStatus{ExactMax{5}}, "O_P3(2) via H^3 = 8 gives " + v.to_string());
    t.expect(fano::known_exact_np("O_P3(2)") == 5, "O_P3(2) pin");
    t.expect(fano::known_exact_np("O_P3(3)") == 6, "O_P3(3) pin");
    t.expect(fano::known_exact_np("O_P4(2)") == 5, "O_P4(2) pin");
    t.expect(!fano::known_exact_np("O_P5(2)"), "unpinned key answered");
    for (int d = 1; d <= 9; ++d) {
        const auto s = del_pezzo_surface(d);
        const auto surf = np_classify(s, -canonical_class(s), {true, true, true});
        const auto f = fano::primitive_np({2, 1, d, std::nullopt, fano::MorphismType::Unknown});
        t.expect(surf.status == f.status, "d=" + std::to_string(d) + ": surface " + surf.to_string() + ", Fano " +
                                              f.to_string());
    }
    return t.finish("fano fixtures", counted(t.cases, "checks"));
}

// ---------------------------------------------------------------------------

Check hodge_property(std::uint64_t seed, int pairs_per_family) {
    Tally t;
    std::mt19937_64 rng(seed);
    auto uni = [&](Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng); };

    struct Family {
        std::string name;
        std::function<Surface()> make;
    };
    const std::vector<Family> fams = {
        {"P2", [] { return SurfaceModel::projective_plane(); }},
        {"F_e", [&] { return SurfaceModel::hirzebruch(static_cast<int>(uni(0, 8))); }},
        {"blown-up P2", [&] { return blow_up(SurfaceModel::projective_plane(), static_cast<int>(uni(1, 12)), {}); }},
        {"blown-up F_e",
         [&] { return blow_up(SurfaceModel::hirzebruch(static_cast<int>(uni(0, 4))), static_cast<int>(uni(1, 28)), {}); }},
    };
    std::string summary;
    for (const auto& fam : fams) {
        int pairs = 0;
        long long attempts = 0;
        while (pairs < pairs_per_family && attempts < 1000LL * pairs_per_family) {
            ++attempts;
            const auto s = fam.make();
            if (attempts <= 200)
                t.expect(signature(*s) == Signature{1, s->rank() - 1, 0}, fam.name + ": signature of " + s->describe());
            std::vector<Int> a, b;
            for (int i = 0; i < s->rank(); ++i) {
                const bool base = i < s->base_rank();
                a.push_back(base ? uni(0, 25) : uni(-3, 3));
                b.push_back(uni(-12, 12));
            }
            const DivisorClass A(s, a), B(s, b);
            if (self_intersection(A) <= 0) continue;
            ++pairs;
            t.expect(hodge_index_bound(A, B), fam.name + ": " + A.to_string() + " / " + B.to_string());
            const Int ab = intersect(A, B);
            t.expect(ab * ab >= self_intersection(A) * self_intersection(B), fam.name + ": direct inequality");
        }
        t.expect(pairs >= pairs_per_family, fam.name + ": only " + std::to_string(pairs) + " pairs with A^2 > 0");
        summary += (summary.empty() ? "" : ", ") + fam.name + " " + std::to_string(pairs);
    }
    return t.finish("hodge index property", "pairs: " + summary);
}

Check monotonicity() {
    Tally t;
    for (bool bpf : {false, true})
        for (bool anti : {false, true}) {
            int prev = -2;
            for (Int d = -5; d <= 60; ++d) {
                const int g = np_classify_degree(d, {true, bpf, anti}).guaranteed_p();
                t.expect(g >= prev, "np_classify not monotone at -K.L=" + std::to_string(d));
                prev = g;
            }
        }
    bool was = false;
    for (Int d = -5; d <= 20; ++d) {
        const bool now = bpf_check_degree(d, {true, true});
        t.expect(!was || now, "bpf_check not monotone");
        was = now;
    }
    for (int g = 0; g <= 6; ++g) {
        int prev = -2;
        for (Int d = 0; d <= 40; ++d) {
            const int gp = curve_np(g, d).guaranteed_p();
            t.expect(gp >= prev, "curve_np not monotone at g=" + std::to_string(g));
            prev = gp;
        }
    }
    const std::vector<Exclusions> chain = {{}, {true, false, false, false}, {true, true, false, false},
                                           {true, true, false, true}, {true, true, true, true}};
    for (int k2 = -5; k2 <= 9; ++k2) {
        std::vector<int> last_row;
        for (const auto& ex : chain) {
            std::vector<int> row;
            int prev = 0;
            for (int p = 0; p <= 40; ++p) {
                const int n = adjoint_np_min_n(k2, p, {std::nullopt, ex}).min_n;
                t.expect(n >= prev, "adjoint_np_min_n not monotone in p at k2=" + std::to_string(k2));
                prev = n;
                row.push_back(n);
            }
            if (!last_row.empty())
                for (std::size_t i = 0; i < row.size(); ++i)
                    t.expect(row[i] <= last_row[i], "more exclusions raised min n at k2=" + std::to_string(k2));
            last_row = row;
        }
    }
    for (int e = 0; e <= 6; ++e) {
        int prev = 0;
        for (int p = 0; p <= 40; ++p) {
            const int n = adjoint_np_min_n(8, p, {e, {}}).min_n;
            t.expect(n >= prev && n <= adjoint_np_min_n(8, p).min_n, "twisted table at e=" + std::to_string(e));
            prev = n;
        }
    }
    for (int k2 : {-3, 0, 1, 2, 5}) {
        for (bool mult : {false, true})
            for (int p = 0; p <= 10; ++p) {
                bool was = false;
                for (Int l2 = 0; l2 <= 250; ++l2) {
                    const bool now = reider_np(k2, l2, 30, p, {true, false, mult}).holds;
                    t.expect(!was || now, "reider_np not monotone in L^2");
                    was = now;
                }
                was = false;
                for (Int d = 0; d <= 30; ++d) {
                    const bool now = reider_np(k2, 200, d, p, {true, false, mult}).holds;
                    t.expect(!was || now, "reider_np not monotone in -K.L");
                    was = now;
                }
            }
    }
    for (int k2 = 1; k2 <= 8; ++k2)
        for (int p = (k2 == 8 ? 2 : 1); p <= 10; ++p) {
            bool was = false;
            for (Int l2 = 0; l2 <= 200; ++l2) {
                const bool now = adjunction_termination_bound(k2, l2, p, false, true).has_value();
                t.expect(!was || now, "adjunction_termination_bound not monotone");
                was = now;
            }
        }
    for (int p = 1; p <= 6; ++p) {
        bool was = false;
        for (long long l = 0; l <= 12; ++l) {
            const bool now = fano::multiples_np_surface(4, false, l, p);
            t.expect(!was || now, "multiples_np_surface not monotone in l");
            was = now;
        }
        was = false;
        for (long long b = 0; b <= 10; ++b) {
            const bool now = fano::multiples_np_surface(b, false, 8, p);
            t.expect(!was || now, "multiples_np_surface not monotone in -K.B");
            was = now;
        }
        for (int n = 2; n <= 5; ++n) {
            was = false;
            for (long long h = 1; h <= 10; ++h) {
                const bool now = fano::multiples_np_fano({n, n - 1, h, std::nullopt, fano::MorphismType::Unknown}, 8, p);
                t.expect(!was || now, "multiples_np_fano not monotone in H^n");
                was = now;
            }
        }
    }
    for (int n = 2; n <= 5; ++n) {
        int prev = -2;
        for (long long h = 1; h <= 20; ++h) {
            const int g = fano::primitive_np({n, n - 1, h, std::nullopt, fano::MorphismType::Unknown}).guaranteed_p();
            t.expect(g >= prev, "primitive_np not monotone in H^n");
            prev = g;
        }
    }
    for (auto mt : {fano::MorphismType::Unknown, fano::MorphismType::TwoToOneOntoPn,
                    fano::MorphismType::OntoMinimalDegreeNotPn, fano::MorphismType::NeitherOfThose})
        for (int n = 4; n <= 7; ++n) {
            const fano::FanoInput f{n, n - 3, 6, n + 1, mt};
            bool was = false;
            for (long long k = 1; k <= 8; ++k) {
                const bool now = fano::index_nm3_n0(f, k).status == fano::N0Status::N0;
                t.expect(!was || now, "index_nm3_n0 not monotone in k");
                was = now;
            }
        }
    for (int n = 4; n <= 7; ++n)
        for (int p = 1; p <= 4; ++p) {
            bool was = false;
            for (long long h = n + 1; h <= n + 6; ++h) {
                const bool now = fano::index_nm3_np({n, n - 3, 6, h, fano::MorphismType::Unknown}, p + 2, p);
                t.expect(!was || now, "index_nm3_np not monotone in h0(H)");
                was = now;
            }
            was = false;
            for (long long k = 1; k <= 10; ++k) {
                const bool now = fano::index_nm3_np({n, n - 3, 6, n + 2, fano::MorphismType::Unknown}, k, p);
                t.expect(!was || now, "index_nm3_np not monotone in k");
                was = now;
            }
        }
    return t.finish("monotonicity", counted(t.cases, "comparisons"));
}

Check mutation_robustness(const OracleBox& box) {
    Tally t;
    long long mutants = 0, rejected = 0, unsound = 0;
    for (const auto& ex : sweep_instances()) {
        for (int j = 0; j < ex.A.rank(); ++j)
            for (Int delta : {-1, 1}) {
                auto mutant = ex;
                auto c = mutant.A.coeffs();
                c[static_cast<std::size_t>(j)] += delta;
                mutant.A = DivisorClass(mutant.surface, c);
                const auto r = examples::verify_family(mutant, box, 1);
                ++mutants;
                if (!r.passed()) ++rejected;
                if (!r.certificate.refused && r.certificate.valid() && !(r.oracle && r.oracle->ample())) {
                    ++unsound;
                    t.expect(false, "certificate valid but oracle not ample: " + label(ex) + " " + mutant.A.to_string());
                }
            }
    }
    const double rate = mutants ? static_cast<double>(rejected) / static_cast<double>(mutants) : 0;
    t.expect(rejected * 10 >= mutants * 9, "rejection rate below 90%");
    std::ostringstream os;
    os << rejected << "/" << mutants << " mutants rejected (" << std::fixed << std::setprecision(1) << 100 * rate
       << "%), " << unsound << " unsound certificates";
    return t.finish("mutation robustness", os.str());
}

Check oracle_determinism(const OracleBox& box) {
    Tally t;
    for (const auto& ex : sweep_instances()) {
        if (examples::curve_model_for(ex.surface) == examples::CurveModel::Unmodeled) continue;
        const auto one = examples::brute_force_ample_oracle(ex, box, 1);
        for (unsigned threads : {2u, 5u, 16u}) {
            const auto many = examples::brute_force_ample_oracle(ex, box, threads);
            t.expect(one.min_value == many.min_value && one.argmin == many.argmin &&
                         one.classes_examined == many.classes_examined,
                     label(ex) + " differs at " + std::to_string(threads) + " threads");
        }
    }
    return t.finish("oracle determinism", counted(t.cases, "parallel runs compared"));
}

std::vector<Check> run_all(const std::string& fixture_dir, const OracleBox& box) {
    std::vector<Check> out;
    out.push_back(timed([&] { return example_sweep(box); }));
    if (out.back().seconds >= 10) {
        out.back().passed = false;
        out.back().detail += "; exceeded 10 s";
    }
    out.push_back(timed([&] { return example_fixtures(fixture_dir); }));
    out.push_back(timed([&] { return operation_fixtures(fixture_dir); }));
    out.push_back(timed([] { return adjoint_table_reconstruction(); }));
    out.push_back(timed([] { return inequality_grid(); }));
    out.push_back(timed([] { return sharpness_fixtures(); }));
    out.push_back(timed([] { return fano_fixtures(); }));
    out.push_back(timed([] { return hodge_property(); }));
    out.push_back(timed([] { return monotonicity(); }));
    out.push_back(timed([&] { return mutation_robustness(box); }));
    out.push_back(timed([&] { return oracle_determinism(box); }));
    return out;
}

int run_selftest(const std::string& fixture_dir, std::ostream& out) {
    const auto checks = run_all(fixture_dir, OracleBox::from_env());
    int failed = 0;
    double total = 0;
    for (const auto& c : checks) {
        out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << " [" << std::fixed
            << std::setprecision(2) << c.seconds << " s]\n";
        failed += c.passed ? 0 : 1;
        total += c.seconds;
    }
    out << (failed ? "FAIL" : "PASS") << " selftest: " << checks.size() - static_cast<std::size_t>(failed) << "/"
        << checks.size() << " checks passed in " << std::fixed << std::setprecision(2) << total << " s\n";
    return failed ? 1 : 0;
}

}  // namespace ratnp::selftest
