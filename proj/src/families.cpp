#include "ratnp/families.hpp"

#include <cctype>
#include <functional>
#include <stdexcept>

namespace ratnp::examples {

std::string to_string(Source s) { return s == Source::Stated ? "stated" : "derived"; }

Source source_from_string(const std::string& s) {
    if (s == "stated") return Source::Stated;
    if (s == "derived") return Source::Derived;
    throw std::invalid_argument("unknown claim source '" + s + "'");
}

std::string to_string(CurveModel m) {
    switch (m) {
        case CurveModel::Plane: return "plane";
        case CurveModel::RuledOnCurve: return "ruled-points-on-anticanonical-curve";
        case CurveModel::DelPezzo: return "plane-points-in-general-position";
        case CurveModel::CubicPencil: return "cubic-pencil-base-points";
        case CurveModel::Unmodeled: return "unmodeled";
    }
    return "unmodeled";
}

CurveModel curve_model_for(const Surface& s) {
    const auto& c = s->config();
    if (s->base() == BaseSurface::ProjectivePlane) {
        if (s->points() == 0) return CurveModel::Plane;
        if (c.complete_intersection_of_cubics && s->points() == 9) return CurveModel::CubicPencil;
        if (c.general_position && s->points() <= 8) return CurveModel::DelPezzo;
        return CurveModel::Unmodeled;
    }
    if (s->points() == 0 || c.on_smooth_anticanonical) return CurveModel::RuledOnCurve;
    return CurveModel::Unmodeled;
}

// ---------------------------------------------------------------------------
// Expression evaluation

namespace {

class ExprParser {
public:
    ExprParser(const ExampleFamily& ex, std::string_view text) : ex_(ex), s_(text) {}

    DivisorClass whole_class() {
        auto d = linear();
        expect_end();
        return d;
    }

    Int whole_quantity() {
        skip();
        Int v;
        if (accept_word("chi(")) {
            auto d = linear();
            expect(')');
            v = euler_characteristic(d);
        } else if (accept_word("g(")) {
            auto d = linear();
            expect(')');
            v = sectional_genus(d);
        } else {
            auto lhs = operand();
            skip();
            if (accept_word("^2")) {
                v = self_intersection(lhs);
            } else if (accept('.')) {
                v = intersect(lhs, operand());
            } else {
                fail("expected '.' or '^2'");
            }
        }
        expect_end();
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("expression '" + std::string(s_) + "': " + why + " at offset " +
                                    std::to_string(pos_));
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }
    bool accept_word(std::string_view w) {
        skip();
        if (s_.substr(pos_, w.size()) != w) return false;
        pos_ += w.size();
        return true;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    void expect_end() {
        skip();
        if (pos_ != s_.size()) fail("trailing input");
    }

    std::optional<Int> number() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) return std::nullopt;
        return std::stoll(std::string(s_.substr(start, pos_ - start)));
    }

    DivisorClass symbol() {
        skip();
        const auto& s = ex_.surface;
        if (accept('(')) {
            auto d = linear();
            expect(')');
            return d;
        }
        if (accept('K')) return canonical_class(s);
        if (accept('A')) return ex_.A;
        if (accept('H')) return hyperplane(s);
        if (accept_word("C0")) return min_section(s);
        if (accept('f')) return fiber(s);
        if (accept('E')) {
            auto i = number();
            if (!i) fail("exceptional index expected");
            if (*i < 1 || *i > s->points()) fail("exceptional index out of range");
            return exceptional(s, static_cast<int>(*i));
        }
        fail("unknown symbol");
    }

    DivisorClass term() {
        Int coeff = 1;
        if (auto n = number()) {
            coeff = *n;
            accept('*');
        }
        return coeff * symbol();
    }

    DivisorClass linear() {
        Int sign = 1;
        if (accept('-'))
            sign = -1;
        else
            accept('+');
        DivisorClass total = sign * term();
        while (true) {
            if (accept('+'))
                total += term();
            else if (accept('-'))
                total += -1 * term();
            else
                break;
        }
        return total;
    }

    /// A single signed term or a parenthesized linear expression.
    DivisorClass operand() {
        Int sign = 1;
        if (accept('-')) sign = -1;
        return sign * term();
    }

    const ExampleFamily& ex_;
    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

DivisorClass evaluate_class(const ExampleFamily& ex, std::string_view expr) {
    return ExprParser(ex, expr).whole_class();
}

Int evaluate_quantity(const ExampleFamily& ex, std::string_view expr) {
    return ExprParser(ex, expr).whole_quantity();
}

// ---------------------------------------------------------------------------
// Families

namespace {

constexpr auto S = Source::Stated;
constexpr auto D = Source::Derived;

Int param(const Params& p, const std::string& name) { return p.at(name); }

void require(bool ok, const std::string& id, const std::string& what) {
    if (!ok) throw std::invalid_argument("family " + id + ": " + what);
}

std::vector<Int> ones(Int l) { return std::vector<Int>(static_cast<std::size_t>(l), 1); }

PointConfig ruled_on_curve_config(bool away_from_min_section) {
    PointConfig c;
    c.on_smooth_anticanonical = true;
    c.distinct_fibers = !away_from_min_section;
    c.away_from_min_section = away_from_min_section;
    c.anticanonical_effective = true;
    return c;
}

PointConfig general_plane_config() {
    PointConfig c;
    c.general_position = true;
    c.anticanonical_effective = true;
    return c;
}

criteria::NpFlags anticanonical_ample() { return {true, true, true}; }

ExampleFamily make(std::string id, const Params& params, Surface s, DivisorClass a) {
    const CurveModel model = curve_model_for(s);
    ExampleFamily ex{std::move(id), params, std::move(s), std::move(a), model, {}, {}, {}, {}, {}, {}};
    ex.attested = anticanonical_ample();
    return ex;
}

ExampleFamily build_plane(const Params& p) {
    auto s = SurfaceModel::projective_plane();
    auto ex = make("plane", p, s, hyperplane(s));
    ex.description = "P^2 with A = O(1)";
    ex.claims = {{"K^2", 9, S}, {"-K.A", 3, S}, {"A^2", 1, D}};
    ex.identities = {{"K+3A", {0}, S}};
    return ex;
}

ExampleFamily build_hirzebruch(const Params& p) {
    const Int e = param(p, "e");
    require(e >= 0, "hirzebruch", "e must be >= 0");
    auto s = SurfaceModel::hirzebruch(static_cast<int>(e));
    auto ex = make("hirzebruch", p, s, DivisorClass(s, {1, e + 1}));
    ex.description = "F_e with A = C0 + (e+1) f";
    ex.claims = {{"K^2", 8, S}, {"-K.A", e + 4, S}, {"A^2", e + 2, D}, {"(K+2A).f", 0, D}};
    ex.identities = {{"K+2A", {0, e}, S}};
    ex.expected_np = make_verdict(ExactMax{static_cast<int>(e + 1)}, "ampleness-np-equivalence:ruled");
    return ex;
}

ExampleFamily build_del_pezzo(const Params& p) {
    const Int i = param(p, "i");
    require(i >= 2 && i <= 6, "del-pezzo", "i must lie in [2, 6]");
    auto s = blow_up(SurfaceModel::projective_plane(), static_cast<int>(i), general_plane_config());
    const Int d = 9 - i;
    auto ex = make("del-pezzo", p, s, -canonical_class(s));
    ex.description = "P^2 blown up at i general points, A = -K";
    ex.claims = {{"K^2", d, S}, {"A^2", d, S}, {"-K.A", d, S}};
    ex.identities = {{"K+A", std::vector<Int>(static_cast<std::size_t>(s->rank()), 0), S}};
    ex.expected_np = make_verdict(ExactMax{static_cast<int>(d - 3)}, "ampleness-np-equivalence:anticanonical");
    ex.annotations = {"-K very ample (attested from general position)"};
    return ex;
}

ExampleFamily build_del_pezzo_2(const Params& p) {
    auto s = blow_up(SurfaceModel::projective_plane(), 7, general_plane_config());
    auto k = canonical_class(s);
    auto ex = make("del-pezzo-2", p, s, -k);
    ex.description = "K^2 = 2 surface (P^2 blown up at 7 general points), A = -K";
    ex.claims = {{"K^2", 2, S}, {"-K.A", 2, S}, {"A^2", 2, S},
                 {"(-2K)^2", 8, S}, {"chi(-2K)", 7, D}, {"g(-2K)", 3, D}};
    ex.identities = {{"K+2A", (-1 * k).coeffs(), D}};
    ex.expected_np = make_verdict(NotN0{}, "anticanonical-degree:iff");
    ex.annotations = {"|-K| is a double cover of P^2 branched along a quartic",
                      "-2K very ample, embedding in P^6"};
    return ex;
}

ExampleFamily build_del_pezzo_1(const Params& p) {
    auto s = blow_up(SurfaceModel::projective_plane(), 8, general_plane_config());
    auto k = canonical_class(s);
    auto ex = make("del-pezzo-1", p, s, -k);
    ex.description = "K^2 = 1 surface (P^2 blown up at 8 general points), A = -K";
    ex.claims = {{"K^2", 1, S}, {"-K.A", 1, S}, {"A^2", 1, S},
                 {"(-3K)^2", 9, S}, {"g(-3K)", 4, S}, {"chi(-3K)", 7, D}};
    ex.identities = {{"K+3A", (-2 * k).coeffs(), D}};
    ex.expected_np = make_verdict(NotN0{}, "anticanonical-degree:iff");
    ex.annotations = {"-3K embeds X in P^6", "|-2K| is a double cover of a quadric cone"};
    return ex;
}

ExampleFamily build_elliptic(const Params& p) {
    const Int n = param(p, "n");
    require(n >= 2, "elliptic-fibration", "n must be >= 2");
    PointConfig c = general_plane_config();
    c.complete_intersection_of_cubics = true;
    auto s = blow_up(SurfaceModel::projective_plane(), 9, c);
    const auto minus_k = -canonical_class(s);
    const auto e9 = exceptional(s, 9);
    auto ex = make("elliptic-fibration", p, s, e9 + n * minus_k);
    ex.description = "P^2 blown up at the base points of a cubic pencil, A = E9 + n F with F = -K";
    const auto src = n == 2 ? S : D;
    ex.claims = {{"K^2", 0, S},          {"A^2", 2 * n - 1, src}, {"-K.A", 1, S},
                 {"(K+2A).(-K)", 2, S}, {"A.E9", n - 1, src},    {"A.E1", n, D}};
    ex.identities = {{"K+2A", ((2 * n - 1) * minus_k + 2 * e9).coeffs(), src}};
    ex.expected_np = make_verdict(NotN0{}, "anticanonical-degree:iff");
    ex.annotations = {"h^0(-K) = 2 and every member of |-K| is irreducible"};
    return ex;
}

ExampleFamily build_conic_bundle(const Params& p) {
    const Int e = param(p, "e"), n = param(p, "n");
    require(e >= 0 && e <= 2, "conic-bundle", "e must lie in [0, 2]");
    require(n >= -1 && n <= 8, "conic-bundle", "n must lie in [-1, 8]");
    const Int l = 8 - n, m = e + 3;
    auto s = blow_up(SurfaceModel::hirzebruch(static_cast<int>(e)), static_cast<int>(l),
                     ruled_on_curve_config(false));
    auto ex = make("conic-bundle", p, s, pullback_minus(s, {2, m}, ones(l)));
    ex.description = "F_e blown up at l = 8 - n points of C, A = pi^*(2C0 + (e+3) f) - sum E";
    ex.claims = {{"K^2", n, S}, {"-K.A", n + 2, S}, {"A^2", n + 4, D}, {"-K.(K+A)", 2, D}};
    for (Int i = 1; i <= l; ++i) ex.claims.push_back({"A.E" + std::to_string(i), 1, S});
    ex.identities = {{"K+A", pullback(s, {0, 1}).coeffs(), S}};
    return ex;
}

ExampleFamily build_f1_cubic(const Params& p) {
    const Int l = param(p, "l");
    require(l >= 0 && l <= 10, "f1-cubic-section", "l must lie in [0, 10]");
    auto s = blow_up(SurfaceModel::hirzebruch(1), static_cast<int>(l), ruled_on_curve_config(true));
    auto ex = make("f1-cubic-section", p, s, pullback_minus(s, {3, 4}, ones(l)));
    ex.description = "F_1 blown up at l points of C away from C0, A = pi^*(3C0 + 4f) - sum E";
    ex.claims = {{"K^2", 8 - l, D}, {"A^2", 15 - l, S}, {"-K.A", 11 - l, S}, {"-K.(K+A)", 3, S}};
    for (Int i = 1; i <= l; ++i) ex.claims.push_back({"A.E" + std::to_string(i), 1, S});
    ex.identities = {{"K+A", pullback(s, {1, 1}).coeffs(), S}};
    return ex;
}

ExampleFamily build_f0_odd(const Params& p) {
    const Int n = param(p, "n");
    require(n < 0 && n % 2 != 0, "f0-odd", "n must be odd and negative");
    const Int l = 8 - n, k = (l - 3) / 2;
    auto s = blow_up(SurfaceModel::hirzebruch(0), static_cast<int>(l), ruled_on_curve_config(false));
    auto ex = make("f0-odd", p, s, pullback_minus(s, {2, k}, ones(l)));
    ex.params["l"] = l;
    ex.params["k"] = k;
    ex.description = "F_0 blown up at l = 8 - n points of C, A = 2 f1 + k f2 - sum E, k = (l-3)/2";
    ex.claims = {{"K^2", n, S}, {"A^2", l - 6, S}, {"-K.A", 1, S}};
    for (Int i = 1; i <= l; ++i) ex.claims.push_back({"A.E" + std::to_string(i), 1, S});
    ex.identities = {{"K+A", pullback(s, {0, k - 2}).coeffs(), S}};
    return ex;
}

ExampleFamily build_f0_even(const Params& p) {
    const Int n = param(p, "n");
    require(n < 0 && n % 2 == 0, "f0-even", "n must be even and negative");
    const Int l = 8 - n, k = (l - 4) / 2;
    auto s = blow_up(SurfaceModel::hirzebruch(0), static_cast<int>(l), ruled_on_curve_config(false));
    std::vector<Int> w = ones(l);
    w[0] = 2;
    auto ex = make("f0-even", p, s, pullback_minus(s, {3, k}, w));
    ex.params["l"] = l;
    ex.params["k"] = k;
    ex.description = "F_0 blown up at l = 8 - n points of C, A = 3 f1 + k f2 - 2E1 - E2 - ... , k = (l-4)/2";
    ex.claims = {{"K^2", n, S}, {"A^2", 2 * l - 15, S}, {"-K.A", 1, S}, {"A.E1", 2, S},
                 {"(K+A).(f-E1)", 0, S}};
    for (Int i = 2; i <= l; ++i) ex.claims.push_back({"A.E" + std::to_string(i), 1, S});
    ex.identities = {{"K+A", pullback_minus(s, {1, k - 2}, {1}).coeffs(), S}};
    return ex;
}

ExampleFamily build_non_anticanonical(const Params& p) {
    const Int n = param(p, "n");
    require(n >= 4, "non-anticanonical", "n must be >= 4");
    auto s = blow_up(SurfaceModel::hirzebruch(0), 9, PointConfig{});
    auto ex = make("non-anticanonical", p, s, pullback_minus(s, {2, n}, ones(9)));
    ex.description = "F_0 blown up at 9 points with h^0(-K) = 0, L = pi^*(2C0 + n f) - sum E";
    ex.attested = {true, true, false};
    ex.claims = {{"K^2", -1, D}, {"-K.A", 2 * n - 5, S}, {"A^2", 4 * n - 9, D}, {"chi(-K-A)", 3 - n, S}};
    ex.identities = {{"K+A", pullback(s, {0, n - 2}).coeffs(), D}};
    ex.expected_np = make_verdict(AtLeast{static_cast<int>(2 * n - 8)}, "anticanonical-degree:sufficient");
    ex.annotations = {"h^0(-K) = 0 by the choice of points", "h^1(-K) = 1", "h^1(-K-L) = n - 3",
                      "ample and base-point-free by attestation", "fails N_{2n-7} (not derived here)"};
    return ex;
}

struct Registered {
    FamilyInfo info;
    std::function<ExampleFamily(const Params&)> build;
    std::function<std::vector<Params>()> sweep;
};

std::vector<Params> range1(const std::string& name, Int lo, Int hi, Int step = 1) {
    std::vector<Params> out;
    for (Int v = lo; v <= hi; v += step) out.push_back({{name, v}});
    return out;
}

const std::vector<Registered>& registry() {
    static const std::vector<Registered> reg = {
        {{"plane", "K^2 = 9: P^2 with O(1)", {}}, build_plane, [] { return std::vector<Params>{{}}; }},
        {{"hirzebruch", "K^2 = 8: F_e with C0 + (e+1) f", {{"e", 1, "e >= 0 (sweep 0..8)"}}},
         build_hirzebruch, [] { return range1("e", 0, 8); }},
        {{"del-pezzo", "3 <= K^2 <= 7: P^2 blown up at i general points, -K", {{"i", 6, "2 <= i <= 6"}}},
         build_del_pezzo, [] { return range1("i", 2, 6); }},
        {{"del-pezzo-2", "K^2 = 2 with -K", {}}, build_del_pezzo_2, [] { return std::vector<Params>{{}}; }},
        {{"del-pezzo-1", "K^2 = 1 with -K", {}}, build_del_pezzo_1, [] { return std::vector<Params>{{}}; }},
        {{"conic-bundle", "-1 <= K^2 <= 8: conic bundles over F_e",
          {{"e", 0, "0 <= e <= 2"}, {"n", -1, "-1 <= n <= 8 (n = K^2)"}}},
         build_conic_bundle,
         [] {
             std::vector<Params> out;
             for (Int e = 0; e <= 2; ++e)
                 for (Int n = -1; n <= 8; ++n) out.push_back({{"e", e}, {"n", n}});
             return out;
         }},
        {{"f1-cubic-section", "-2 <= K^2 <= 8: F_1 blown up on C away from C0", {{"l", 10, "0 <= l <= 10"}}},
         build_f1_cubic, [] { return range1("l", 0, 10); }},
        {{"elliptic-fibration", "K^2 = 0: E + nF on a rational elliptic surface", {{"n", 2, "n >= 2 (sweep 2..6)"}}},
         build_elliptic, [] { return range1("n", 2, 6); }},
        {{"f0-odd", "K^2 < 0 odd: F_0 blown up on C", {{"n", -1, "n odd, n < 0 (sweep down to -19)"}}},
         build_f0_odd, [] { return range1("n", -19, -1, 2); }},
        {{"f0-even", "K^2 < 0 even: F_0 blown up on C, one double weight", {{"n", -2, "n even, n < 0 (sweep down to -20)"}}},
         build_f0_even, [] { return range1("n", -20, -2, 2); }},
        {{"non-anticanonical", "non-anticanonical F_0 blown up at 9 points", {{"n", 4, "n >= 4 (sweep 4..12)"}}},
         build_non_anticanonical, [] { return range1("n", 4, 12); }},
    };
    return reg;
}

const Registered& lookup(const std::string& id) {
    for (const auto& r : registry())
        if (r.info.id == id) return r;
    throw std::invalid_argument("unknown example family '" + id + "'");
}

}  // namespace

const std::vector<FamilyInfo>& families() {
    static const std::vector<FamilyInfo> infos = [] {
        std::vector<FamilyInfo> v;
        for (const auto& r : registry()) v.push_back(r.info);
        return v;
    }();
    return infos;
}

const FamilyInfo& family_info(const std::string& id) { return lookup(id).info; }

ExampleFamily build_example(const std::string& id, const Params& params) {
    const auto& r = lookup(id);
    Params full;
    for (const auto& spec : r.info.params) full[spec.name] = spec.default_value;
    for (const auto& [k, v] : params) {
        if (!full.contains(k)) throw std::invalid_argument("family " + id + ": unknown parameter '" + k + "'");
        full[k] = v;
    }
    return r.build(full);
}

std::vector<Params> sweep_params(const std::string& id) { return lookup(id).sweep(); }

}  // namespace ratnp::examples
