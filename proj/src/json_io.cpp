#include "ratnp/json_io.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace ratnp::io {

namespace {

[[noreturn]] void bad(const std::string& context, const std::string& what) {
    throw std::invalid_argument(context + ": " + what);
}

const json& field(const json& j, const std::string& key, const std::string& ctx) {
    auto it = j.find(key);
    if (it == j.end()) bad(ctx, "missing field '" + key + "'");
    return *it;
}

Int get_int(const json& j, const std::string& key, const std::string& ctx) {
    const auto& v = field(j, key, ctx);
    if (!v.is_number_integer()) bad(ctx, "field '" + key + "' must be an integer");
    return v.get<Int>();
}

std::optional<Int> opt_int(const json& j, const std::string& key, const std::string& ctx) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return get_int(j, key, ctx);
}

bool get_bool(const json& j, const std::string& key, const std::string& ctx, bool fallback = false) {
    if (!j.contains(key)) return fallback;
    const auto& v = j.at(key);
    if (!v.is_boolean()) bad(ctx, "field '" + key + "' must be a boolean");
    return v.get<bool>();
}

std::string get_str(const json& j, const std::string& key, const std::string& ctx) {
    const auto& v = field(j, key, ctx);
    if (!v.is_string()) bad(ctx, "field '" + key + "' must be a string");
    return v.get<std::string>();
}

int narrow(Int v, const std::string& ctx) {
    if (v < -1'000'000 || v > 1'000'000) bad(ctx, "integer out of supported range");
    return static_cast<int>(v);
}

struct ConfigField {
    const char* name;
    bool PointConfig::*member;
};

constexpr ConfigField kConfigFields[] = {
    {"on_smooth_anticanonical", &PointConfig::on_smooth_anticanonical},
    {"distinct_fibers", &PointConfig::distinct_fibers},
    {"away_from_min_section", &PointConfig::away_from_min_section},
    {"anticanonical_effective", &PointConfig::anticanonical_effective},
    {"general_position", &PointConfig::general_position},
    {"complete_intersection_of_cubics", &PointConfig::complete_intersection_of_cubics},
};

}  // namespace

void require_keys(const json& j, const std::vector<std::string>& allowed, const std::string& context) {
    if (!j.is_object()) bad(context, "expected a JSON object");
    for (const auto& [k, v] : j.items())
        if (std::find(allowed.begin(), allowed.end(), k) == allowed.end()) bad(context, "unknown key '" + k + "'");
}

json config_to_json(const PointConfig& c) {
    json j = json::object();
    for (const auto& f : kConfigFields) j[f.name] = c.*(f.member);
    return j;
}

PointConfig config_from_json(const json& j) {
    std::vector<std::string> names;
    for (const auto& f : kConfigFields) names.emplace_back(f.name);
    require_keys(j, names, "config");
    PointConfig c;
    for (const auto& f : kConfigFields) c.*(f.member) = get_bool(j, f.name, "config");
    return c;
}

json surface_to_json(const Surface& s) {
    json j;
    const bool plane = s->base() == BaseSurface::ProjectivePlane;
    if (s->is_blow_up()) {
        j["kind"] = plane ? "BlowUpP2" : "BlowUpF";
        if (!plane) j["e"] = s->e();
        j["l"] = s->points();
        j["config"] = config_to_json(s->config());
    } else {
        j["kind"] = plane ? "P2" : "F";
        if (!plane) j["e"] = s->e();
    }
    return j;
}

namespace {
Surface surface_from_fields(const json& j, const std::string& ctx) {
    const auto kind = get_str(j, "kind", ctx);
    if (kind == "P2" || kind == "F") {
        if (j.contains("l") || j.contains("config")) bad(ctx, "'l' and 'config' only apply to blow-ups");
    }
    if ((kind == "P2" || kind == "BlowUpP2") && j.contains("e")) bad(ctx, "'e' does not apply to a plane base");
    if (kind == "P2") return SurfaceModel::projective_plane();
    if (kind == "F") return SurfaceModel::hirzebruch(narrow(get_int(j, "e", ctx), ctx));
    if (kind == "BlowUpP2" || kind == "BlowUpF") {
        Surface base = kind == "BlowUpP2" ? SurfaceModel::projective_plane()
                                          : SurfaceModel::hirzebruch(narrow(get_int(j, "e", ctx), ctx));
        const PointConfig cfg = j.contains("config") ? config_from_json(j.at("config")) : PointConfig{};
        const Int l = get_int(j, "l", ctx);
        if (l < 0 || l > 10'000) bad(ctx, "'l' out of range");
        return blow_up(base, static_cast<int>(l), cfg);
    }
    bad(ctx, "unknown surface kind '" + kind + "'");
}
}  // namespace

Surface surface_from_json(const json& j) {
    require_keys(j, {"kind", "e", "l", "config"}, "surface");
    return surface_from_fields(j, "surface");
}

json divisor_to_json(const DivisorClass& d) {
    json j = surface_to_json(d.surface());
    j["coeffs"] = d.coeffs();
    return j;
}

DivisorClass divisor_from_json(const json& j) {
    require_keys(j, {"kind", "e", "l", "config", "coeffs"}, "divisor");
    auto s = surface_from_fields(j, "divisor");
    const auto& c = field(j, "coeffs", "divisor");
    if (!c.is_array()) bad("divisor", "'coeffs' must be an array");
    std::vector<Int> coeffs;
    for (const auto& x : c) {
        if (!x.is_number_integer()) bad("divisor", "coefficients must be integers");
        coeffs.push_back(x.get<Int>());
    }
    return {s, std::move(coeffs)};
}

json verdict_to_json(const NpVerdict& v) {
    json j;
    j["status"] = v.status_name();
    if (const auto* e = std::get_if<ExactMax>(&v.status)) j["p"] = e->p;
    if (const auto* a = std::get_if<AtLeast>(&v.status)) j["p"] = a->p;
    if (const auto* n = std::get_if<NotApplicable>(&v.status)) j["reason"] = n->reason;
    j["justification"] = v.justification;
    j["assumed"] = v.assumed;
    return j;
}

NpVerdict verdict_from_json(const json& j) {
    require_keys(j, {"status", "p", "reason", "justification", "assumed"}, "verdict");
    const auto status = get_str(j, "status", "verdict");
    NpStatus st;
    if (status == "ExactMax")
        st = ExactMax{narrow(get_int(j, "p", "verdict"), "verdict")};
    else if (status == "AtLeast")
        st = AtLeast{narrow(get_int(j, "p", "verdict"), "verdict")};
    else if (status == "NotN0")
        st = NotN0{};
    else if (status == "NotApplicable")
        st = NotApplicable{get_str(j, "reason", "verdict")};
    else
        bad("verdict", "unknown status '" + status + "'");
    std::vector<std::string> assumed;
    if (j.contains("assumed")) assumed = j.at("assumed").get<std::vector<std::string>>();
    return make_verdict(std::move(st), get_str(j, "justification", "verdict"), std::move(assumed));
}

json fano_to_json(const fano::FanoInput& f) {
    json j{{"n", f.n}, {"m", f.m}, {"Hn", f.Hn}, {"morphism", fano::to_string(f.morphism)}};
    if (f.h0H) j["h0H"] = *f.h0H;
    return j;
}

fano::FanoInput fano_from_json(const json& j) {
    require_keys(j, {"n", "m", "Hn", "h0H", "morphism"}, "fano");
    fano::FanoInput f;
    f.n = narrow(get_int(j, "n", "fano"), "fano");
    f.m = narrow(get_int(j, "m", "fano"), "fano");
    f.Hn = get_int(j, "Hn", "fano");
    if (auto h = opt_int(j, "h0H", "fano")) f.h0H = *h;
    if (j.contains("morphism")) f.morphism = fano::morphism_from_string(get_str(j, "morphism", "fano"));
    f.validate();
    return f;
}

json to_json(const examples::ExampleFamily& ex) {
    json claims = json::array(), ids = json::array();
    for (const auto& c : ex.claims)
        claims.push_back({{"quantity", c.quantity}, {"expected", c.expected}, {"source", to_string(c.source)}});
    for (const auto& c : ex.identities)
        ids.push_back({{"class", c.lhs}, {"expected", c.expected}, {"source", to_string(c.source)}});
    json j{{"id", ex.id},
           {"params", ex.params},
           {"description", ex.description},
           {"surface", surface_to_json(ex.surface)},
           {"A", ex.A.coeffs()},
           {"curve_model", to_string(ex.model)},
           {"claims", claims},
           {"identities", ids},
           {"attested",
            {{"ample", ex.attested.ample}, {"bpf", ex.attested.bpf}, {"anticanonical", ex.attested.anticanonical}}},
           {"annotations", ex.annotations}};
    j["expected_np"] = ex.expected_np ? verdict_to_json(*ex.expected_np) : json(nullptr);
    return j;
}

json to_json(const examples::AmpleCertificate& c) {
    json checks = json::array();
    for (const auto& k : c.curve_case_checks)
        checks.push_back({{"case", examples::to_string(k.kind)},
                          {"a", k.a},
                          {"b", k.b},
                          {"worst_case_lhs", k.worst_case_lhs},
                          {"rhs", k.rhs},
                          {"strict", k.strict},
                          {"passed", k.passed},
                          {"note", k.note}});
    json j{{"valid", c.valid()},
           {"refused", c.refused},
           {"self_int", c.self_int},
           {"exceptional_values", c.exceptional_values},
           {"curve_case_checks", checks},
           {"assumptions_used", c.assumptions_used}};
    if (c.refused) j["refusal"] = c.refusal;
    j["counterexample"] = c.counterexample ? json(c.counterexample->coeffs()) : json(nullptr);
    return j;
}

json to_json(const examples::OracleResult& r) {
    return {{"min_value", r.min_value},
            {"ample", r.ample()},
            {"self_int", r.self_int},
            {"classes_examined", r.classes_examined},
            {"argmin", {{"kind", r.argmin.kind}, {"a", r.argmin.a}, {"b", r.argmin.b}, {"m", r.argmin.m}}}};
}

json to_json(const examples::ExampleReport& r) {
    json claims = json::array(), ids = json::array();
    for (const auto& c : r.claims)
        claims.push_back({{"quantity", c.quantity},
                          {"expected", c.expected},
                          {"actual", c.actual},
                          {"source", to_string(c.source)},
                          {"passed", c.passed()}});
    for (const auto& c : r.identities)
        ids.push_back({{"class", c.lhs},
                       {"expected", c.expected},
                       {"actual", c.actual},
                       {"source", to_string(c.source)},
                       {"passed", c.passed()}});
    json j{{"id", r.family.id},
           {"params", r.family.params},
           {"surface", r.family.surface->describe()},
           {"A", r.family.A.coeffs()},
           {"passed", r.passed()},
           {"ampleness", r.ampleness_basis()},
           {"claims", claims},
           {"identities", ids},
           {"certificate", to_json(r.certificate)},
           {"np", verdict_to_json(r.np)},
           {"failures", r.failures},
           {"annotations", r.family.annotations}};
    j["oracle"] = r.oracle ? to_json(*r.oracle) : json(nullptr);
    return j;
}

json to_json(const criteria::TerminationThreshold& t) {
    return {{"case", criteria::to_string(t.which)},
            {"bound", std::to_string(t.bound.numerator()) + "/" + std::to_string(t.bound.denominator())},
            {"relation", t.greater ? "m > bound" : "m < bound"},
            {"first_m", t.first_m},
            {"realizable", t.realizable},
            {"statement", t.describe()},
            {"justification", t.justification}};
}

examples::Params params_from_json(const json& j) {
    examples::Params p;
    if (j.is_null()) return p;
    if (!j.is_object()) bad("params", "expected an object of integers");
    for (const auto& [k, v] : j.items()) {
        if (!v.is_number_integer()) bad("params", "parameter '" + k + "' must be an integer");
        p[k] = v.get<Int>();
    }
    return p;
}

// ---------------------------------------------------------------------------
// Operation evaluator

namespace {

using Handler = std::function<json(const json&)>;

struct Op {
    std::vector<std::string> keys;
    Handler run;
};

json result(json verdict, std::string justification) {
    return {{"verdict", std::move(verdict)}, {"justification", std::move(justification)}};
}

json verdict_result(const NpVerdict& v) { return result(verdict_to_json(v), v.justification); }

criteria::SummandTag tag_arg(const json& a) {
    return a.contains("tag") ? criteria::summand_tag_from_string(get_str(a, "tag", "args")) : criteria::SummandTag::Other;
}

std::optional<int> e_arg(const json& a) {
    auto e = opt_int(a, "e", "args");
    if (!e) return std::nullopt;
    return narrow(*e, "args");
}

criteria::Exclusions exclusions_arg(const json& a) {
    criteria::Exclusions ex;
    if (!a.contains("excludes")) return ex;
    const auto& list = a.at("excludes");
    if (!list.is_array()) bad("args", "'excludes' must be an array of tags");
    for (const auto& t : list) {
        switch (criteria::summand_tag_from_string(t.get<std::string>())) {
            case criteria::SummandTag::MinusK: ex.minus_k = true; break;
            case criteria::SummandTag::Minus2K: ex.minus_2k = true; break;
            case criteria::SummandTag::Minus3K: ex.minus_3k = true; break;
            case criteria::SummandTag::ConicFibration: ex.conic_fibration = true; break;
            case criteria::SummandTag::Other: bad("args", "'other' cannot be excluded");
        }
    }
    return ex;
}

examples::ExampleFamily family_arg(const json& a) {
    return examples::build_example(get_str(a, "id", "args"),
                                   a.contains("params") ? params_from_json(a.at("params")) : examples::Params{});
}

examples::OracleBox box_arg(const json& a) {
    if (!a.contains("box")) return examples::OracleBox::from_env();
    const auto& b = a.at("box");
    require_keys(b, {"a_max", "b_max"}, "box");
    return examples::OracleBox::parse(std::to_string(get_int(b, "a_max", "box")) + "," +
                                      std::to_string(get_int(b, "b_max", "box")));
}

const std::map<std::string, Op>& ops() {
    using namespace criteria;
    static const std::map<std::string, Op> table = {
        {"intersect",
         {{"d1", "d2"},
          [](const json& a) {
              return result(intersect(divisor_from_json(field(a, "d1", "args")), divisor_from_json(field(a, "d2", "args"))),
                            "intersection-pairing");
          }}},
        {"canonical_class",
         {{"surface"},
          [](const json& a) {
              return result(divisor_to_json(canonical_class(surface_from_json(field(a, "surface", "args")))),
                            "canonical-class");
          }}},
        {"k_squared",
         {{"surface"},
          [](const json& a) { return result(k_squared(surface_from_json(field(a, "surface", "args"))), "canonical-class"); }}},
        {"euler_characteristic",
         {{"divisor"},
          [](const json& a) {
              return result(euler_characteristic(divisor_from_json(field(a, "divisor", "args"))), "riemann-roch");
          }}},
        {"sectional_genus",
         {{"divisor"},
          [](const json& a) {
              return result(sectional_genus(divisor_from_json(field(a, "divisor", "args"))), "adjunction");
          }}},
        {"hodge_index_bound",
         {{"a", "b"},
          [](const json& a) {
              return result(hodge_index_bound(divisor_from_json(field(a, "a", "args")),
                                              divisor_from_json(field(a, "b", "args"))),
                            "hodge-index");
          }}},
        {"signature",
         {{"surface"},
          [](const json& a) {
              auto sig = signature(*surface_from_json(field(a, "surface", "args")));
              return result({{"positive", sig.positive}, {"negative", sig.negative}, {"zero", sig.zero}},
                            "rational-diagonalization");
          }}},
        {"np_classify",
         {{"divisor", "flags"},
          [](const json& a) {
              const auto& f = a.contains("flags") ? a.at("flags") : json::object();
              require_keys(f, {"ample", "bpf", "anticanonical"}, "flags");
              auto d = divisor_from_json(field(a, "divisor", "args"));
              NpFlags flags{get_bool(f, "ample", "flags"), get_bool(f, "bpf", "flags"),
                            get_bool(f, "anticanonical", "flags")};
              return verdict_result(np_classify(d.surface(), d, flags));
          }}},
        {"bpf_check",
         {{"divisor", "flags"},
          [](const json& a) {
              const auto& f = a.contains("flags") ? a.at("flags") : json::object();
              require_keys(f, {"nef", "anticanonical"}, "flags");
              auto d = divisor_from_json(field(a, "divisor", "args"));
              BpfFlags flags{get_bool(f, "nef", "flags"), get_bool(f, "anticanonical", "flags")};
              return result(bpf_check(d.surface(), d, flags), "harbourne-bpf");
          }}},
        {"adjoint_very_ample",
         {{"k2", "summands"},
          [](const json& a) {
              std::vector<SummandTag> tags;
              for (const auto& t : field(a, "summands", "args")) tags.push_back(summand_tag_from_string(t.get<std::string>()));
              auto d = adjoint_very_ample(narrow(get_int(a, "k2", "args"), "args"), tags);
              const char* st = d.status == VeryAmpleStatus::VeryAmple       ? "VeryAmple"
                               : d.status == VeryAmpleStatus::ExceptionListed ? "ExceptionListed"
                                                                              : "NotGuaranteed";
              json v{{"status", st}};
              if (!d.exception_case.empty()) v["case"] = d.exception_case;
              return result(v, d.justification);
          }}},
        {"min_minus_k_degree",
         {{"k2", "tag", "e", "surface"},
          [](const json& a) {
              MinusKBoundReport r = a.contains("surface")
                                        ? min_minus_k_degree(surface_from_json(a.at("surface")), tag_arg(a))
                                        : min_minus_k_degree(narrow(get_int(a, "k2", "args"), "args"), tag_arg(a), e_arg(a));
              return result({{"bound", r.bound}, {"exception", to_string(r.exception)}, {"exact", r.exact}},
                            r.justification);
          }}},
        {"adjoint_np_min_n",
         {{"k2", "p", "e", "excludes"},
          [](const json& a) {
              auto r = adjoint_np_min_n(narrow(get_int(a, "k2", "args"), "args"), narrow(get_int(a, "p", "args"), "args"),
                                        AdjointRegime{e_arg(a), exclusions_arg(a)});
              return result({{"min_n", r.min_n}}, r.justification);
          }}},
        {"reider_np",
         {{"k2", "l2", "minus_k_dot_l", "p", "flags"},
          [](const json& a) {
              const auto& f = a.contains("flags") ? a.at("flags") : json::object();
              require_keys(f, {"cond1_attested", "adjoint_very_ample", "multiple_of_minus_k"}, "flags");
              ReiderFlags flags{get_bool(f, "cond1_attested", "flags"), get_bool(f, "adjoint_very_ample", "flags"),
                                get_bool(f, "multiple_of_minus_k", "flags")};
              auto d = reider_np(narrow(get_int(a, "k2", "args"), "args"), get_int(a, "l2", "args"),
                                 opt_int(a, "minus_k_dot_l", "args").value_or(0), narrow(get_int(a, "p", "args"), "args"),
                                 flags);
              return result({{"holds", d.holds}, {"gate", d.gate}}, d.justification);
          }}},
        {"adjunction_termination_bound",
         {{"k2", "l2", "p", "multiple_of_minus_k", "adjoint_effective"},
          [](const json& a) {
              auto r = adjunction_termination_bound(narrow(get_int(a, "k2", "args"), "args"), get_int(a, "l2", "args"),
                                                    narrow(get_int(a, "p", "args"), "args"),
                                                    get_bool(a, "multiple_of_minus_k", "args"),
                                                    get_bool(a, "adjoint_effective", "args"));
              return result(r ? json{{"minus_k_dot_l_at_least", *r}} : json{{"minus_k_dot_l_at_least", nullptr}},
                            "adjunction-termination");
          }}},
        {"verify_inequality_chain",
         {{"p", "m", "k2"},
          [](const json& a) {
              auto c = verify_inequality_chain(narrow(get_int(a, "p", "args"), "args"),
                                               narrow(get_int(a, "m", "args"), "args"),
                                               narrow(get_int(a, "k2", "args"), "args"));
              return result({{"first_step", {{"value", c.first_step}, {"holds", c.first_step_ok}}},
                             {"degree_one", {{"value", c.degree_one}, {"holds", c.degree_one_ok}}},
                             {"higher_degree", {{"value", c.higher_degree}, {"holds", c.higher_degree_ok}}},
                             {"all_hold", c.all()}},
                            "adjunction-termination:inequalities");
          }}},
        {"ampleness_termination",
         {{"k2", "p", "e", "not_multiple_of_minus_k", "attested_exact_np"},
          [](const json& a) {
              TerminationFlags f{e_arg(a), get_bool(a, "not_multiple_of_minus_k", "args"),
                                 get_bool(a, "attested_exact_np", "args")};
              auto t = ampleness_termination(narrow(get_int(a, "k2", "args"), "args"),
                                             narrow(get_int(a, "p", "args"), "args"), f);
              return result(to_json(t), t.justification);
          }}},
        {"ampleness_np_equivalence",
         {{"k2", "tag", "e"},
          [](const json& a) {
              auto r = ampleness_np_equivalence(narrow(get_int(a, "k2", "args"), "args"), tag_arg(a), e_arg(a));
              json v{{"ample_very_ample_n0_equivalent", r.ample_va_n0_equivalent}, {"np", verdict_to_json(r.verdict)}};
              v["np_iff_ample"] = r.np_iff_ample ? json(*r.np_iff_ample) : json(nullptr);
              v["np_iff_ample_not_minus_k"] = r.np_iff_ample_not_minus_k ? json(*r.np_iff_ample_not_minus_k) : json(nullptr);
              return result(v, r.verdict.justification);
          }}},
        {"curve_np",
         {{"genus", "degree"},
          [](const json& a) {
              return verdict_result(curve_np(narrow(get_int(a, "genus", "args"), "args"), get_int(a, "degree", "args")));
          }}},
        {"primitive_np",
         {{"fano"}, [](const json& a) { return verdict_result(fano::primitive_np(fano_from_json(field(a, "fano", "args")))); }}},
        {"known_exact_np",
         {{"key"},
          [](const json& a) {
              auto v = fano::known_exact_np(get_str(a, "key", "args"));
              if (!v) bad("args", "no pinned value for '" + get_str(a, "key", "args") + "'");
              return result({{"exact_max_p", *v}}, "pinned-polarization");
          }}},
        {"multiples_np_surface",
         {{"minus_k_dot_b", "is_p2_o1", "l", "p"},
          [](const json& a) {
              return result(fano::multiples_np_surface(opt_int(a, "minus_k_dot_b", "args").value_or(0),
                                                       get_bool(a, "is_p2_o1", "args"), get_int(a, "l", "args"),
                                                       narrow(get_int(a, "p", "args"), "args")),
                            "surface-multiples");
          }}},
        {"multiples_np_fano",
         {{"fano", "l", "p"},
          [](const json& a) {
              return result(fano::multiples_np_fano(fano_from_json(field(a, "fano", "args")), get_int(a, "l", "args"),
                                                    narrow(get_int(a, "p", "args"), "args")),
                            "fano-multiples");
          }}},
        {"index_nm3_n0",
         {{"fano", "k"},
          [](const json& a) {
              auto d = fano::index_nm3_n0(fano_from_json(field(a, "fano", "args")), get_int(a, "k", "args"));
              return result({{"status", fano::to_string(d.status)}, {"needed", d.needed}}, d.justification);
          }}},
        {"index_nm3_np",
         {{"fano", "k", "p"},
          [](const json& a) {
              return result(fano::index_nm3_np(fano_from_json(field(a, "fano", "args")), get_int(a, "k", "args"),
                                               narrow(get_int(a, "p", "args"), "args")),
                            "fano-index-n-3:syzygies");
          }}},
        {"build_example",
         {{"id", "params"}, [](const json& a) { return result(to_json(family_arg(a)), "construction"); }}},
        {"nakai_certificate",
         {{"id", "params"},
          [](const json& a) { return result(to_json(examples::nakai_certificate(family_arg(a))), "nakai-moishezon"); }}},
        {"brute_force_ample_oracle",
         {{"id", "params", "box"},
          [](const json& a) {
              return result(to_json(examples::brute_force_ample_oracle(family_arg(a), box_arg(a))), "bounded-search");
          }}},
        {"verify_example",
         {{"id", "params", "box"},
          [](const json& a) {
              return result(to_json(examples::verify_family(family_arg(a), box_arg(a))), "example-verification");
          }}},
    };
    return table;
}

}  // namespace

json evaluate(const json& request) {
    require_keys(request, {"op", "args"}, "request");
    const auto name = get_str(request, "op", "request");
    const auto it = ops().find(name);
    if (it == ops().end()) bad("request", "unknown op '" + name + "'");
    const json args = request.contains("args") ? request.at("args") : json::object();
    require_keys(args, it->second.keys, "args of " + name);
    json out = it->second.run(args);
    out["op"] = name;
    return out;
}

std::vector<std::string> operation_names() {
    std::vector<std::string> names;
    for (const auto& [k, v] : ops()) names.push_back(k);
    return names;
}

}  // namespace ratnp::io
