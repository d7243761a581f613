#include "cli.hpp"

#include "ratnp/json_io.hpp"
#include "ratnp/selftest.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#ifndef RATNP_FIXTURE_DIR
#define RATNP_FIXTURE_DIR "fixtures"
#endif

namespace ratnp::cli {

using io::json;

namespace {

bool is_verdict(const json& j) {
    return j.is_object() && j.contains("status") && j.contains("justification") && j.contains("assumed");
}

std::string scalar(const json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (is_verdict(j)) return io::verdict_from_json(j).to_string();
    return j.dump();
}

bool flat(const json& j) {
    if (is_verdict(j) || j.is_primitive()) return true;
    if (j.is_array()) {
        for (const auto& x : j)
            if (!x.is_primitive()) return false;
        return true;
    }
    return false;
}

void render(const json& j, int indent, std::ostringstream& os) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (j.is_object() && !is_verdict(j)) {
        for (const auto& [k, v] : j.items()) {
            if (flat(v)) {
                os << pad << k << ": " << scalar(v) << '\n';
            } else {
                os << pad << k << ":\n";
                render(v, indent + 2, os);
            }
        }
    } else if (j.is_array() && !flat(j)) {
        for (const auto& x : j) {
            if (flat(x)) {
                os << pad << "- " << scalar(x) << '\n';
            } else {
                os << pad << "-\n";
                render(x, indent + 2, os);
            }
        }
    } else {
        os << pad << scalar(j) << '\n';
    }
}

json read_json_arg(const std::string& arg) {
    if (arg == "-") return json::parse(std::cin);
    const auto first = arg.find_first_not_of(" \t\n");
    if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return json::parse(arg);
    std::ifstream in(arg);
    if (!in) throw std::invalid_argument("cannot open '" + arg + "'");
    return json::parse(in);
}

examples::Params parse_params(const std::vector<std::string>& kv) {
    examples::Params p;
    for (const auto& s : kv) {
        const auto eq = s.find('=');
        if (eq == std::string::npos || eq == 0) throw std::invalid_argument("--param expects k=v, got '" + s + "'");
        const std::string value = s.substr(eq + 1);
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(value, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != value.size()) throw std::invalid_argument("--param " + s + ": value must be an integer");
        p[s.substr(0, eq)] = v;
    }
    return p;
}

std::optional<int> parse_p(const std::string& s) {
    if (s == "auto") return std::nullopt;
    std::size_t used = 0;
    int v = -1;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size() || v < 0) throw std::invalid_argument("--p expects 'auto' or an integer >= 0");
    return v;
}

json with_p(json result, const NpVerdict& v, std::optional<int> p) {
    if (!p) return result;
    result["p"] = *p;
    result["np_holds"] = v.guarantees(*p) ? "yes" : v.refutes(*p) ? "no" : "unknown";
    return result;
}

struct Options {
    bool json_out = false;
    std::string fixtures = RATNP_FIXTURE_DIR;

    // classify
    std::string input;
    std::string example_id;
    std::vector<std::string> params;
    std::string p = "auto";

    // bounds / adjoint / reider / terminate
    int k2 = 0;
    int pi = 0;
    std::optional<int> e;
    std::vector<std::string> excludes;
    std::vector<std::string> summands;
    long long l2 = 0;
    long long kl = 0;
    bool cond1 = false;
    bool adjoint_va = false;
    bool multiple = false;
    bool not_multiple = false;

    // example / oracle
    std::string id;
    bool sweep = false;
    std::string box;
    unsigned threads = 0;

    // fano
    int n = 2;
    int m = 1;
    long long hn = 1;
    std::optional<long long> h0h;
    std::string morphism = "unknown";
    long long k = 1;
    long long l = 1;
    std::string key;
    long long minus_k_dot_b = 0;
    bool p2_o1 = false;

    // eval
    std::string request;
    bool list_ops = false;
};

fano::FanoInput fano_input(const Options& o) {
    fano::FanoInput f;
    f.n = o.n;
    f.m = o.m;
    f.Hn = o.hn;
    f.h0H = o.h0h;
    f.morphism = fano::morphism_from_string(o.morphism);
    f.validate();
    return f;
}

examples::OracleBox box_of(const Options& o) {
    return o.box.empty() ? examples::OracleBox::from_env() : examples::OracleBox::parse(o.box);
}

json cmd_classify(const Options& o) {
    if (o.input.empty() == o.example_id.empty())
        throw std::invalid_argument("classify: give exactly one of --surface or --example");
    const auto p = parse_p(o.p);
    if (!o.example_id.empty()) {
        const auto ex = examples::build_example(o.example_id, parse_params(o.params));
        const auto v = criteria::np_classify(ex.surface, ex.A, ex.attested);
        return with_p({{"example", ex.id},
                       {"params", ex.params},
                       {"divisor", io::divisor_to_json(ex.A)},
                       {"minus_k_dot_l", intersect(-canonical_class(ex.surface), ex.A)},
                       {"verdict", io::verdict_to_json(v)}},
                      v, p);
    }
    if (!o.params.empty()) throw std::invalid_argument("classify: --param needs --example");
    const json in = read_json_arg(o.input);
    io::require_keys(in, {"divisor", "flags"}, o.input);
    const auto d = io::divisor_from_json(in.at("divisor"));
    const json flags = in.contains("flags") ? in.at("flags") : json::object();
    io::require_keys(flags, {"ample", "bpf", "anticanonical"}, "flags");
    const criteria::NpFlags f{flags.value("ample", false), flags.value("bpf", false), flags.value("anticanonical", false)};
    const auto v = criteria::np_classify(d.surface(), d, f);
    return with_p({{"surface", d.surface()->describe()},
                   {"divisor", io::divisor_to_json(d)},
                   {"minus_k_dot_l", intersect(-canonical_class(d.surface()), d)},
                   {"verdict", io::verdict_to_json(v)}},
                  v, p);
}

json through_eval(const std::string& op, json args) {
    json out = io::evaluate({{"op", op}, {"args", std::move(args)}});
    return out;
}

json cmd_bounds(const Options& o) {
    json args{{"k2", o.k2}, {"p", o.pi}};
    if (o.e) args["e"] = *o.e;
    if (!o.excludes.empty()) args["excludes"] = o.excludes;
    json out = through_eval("adjoint_np_min_n", args);
    out["statement"] = "K + A_1 + ... + A_n satisfies N_" + std::to_string(o.pi) + " for n >= " +
                       std::to_string(out["verdict"]["min_n"].get<int>());
    return out;
}

json cmd_adjoint(const Options& o) {
    if (o.summands.empty()) throw std::invalid_argument("adjoint: at least one --summand is required");
    return through_eval("adjoint_very_ample", {{"k2", o.k2}, {"summands", o.summands}});
}

json cmd_reider(const Options& o) {
    return through_eval("reider_np", {{"k2", o.k2},
                                      {"l2", o.l2},
                                      {"minus_k_dot_l", o.kl},
                                      {"p", o.pi},
                                      {"flags",
                                       {{"cond1_attested", o.cond1},
                                        {"adjoint_very_ample", o.adjoint_va},
                                        {"multiple_of_minus_k", o.multiple}}}});
}

json cmd_terminate(const Options& o) {
    json args{{"k2", o.k2}, {"p", o.pi}, {"not_multiple_of_minus_k", o.not_multiple}, {"attested_exact_np", true}};
    if (o.e) args["e"] = *o.e;
    return through_eval("ampleness_termination", args);
}

json report_json(const examples::ExampleReport& r) { return io::to_json(r); }

json cmd_example_verify(const Options& o, bool& failed) {
    const auto box = box_of(o);
    std::vector<examples::Params> runs;
    if (o.sweep) {
        if (!o.params.empty()) throw std::invalid_argument("example verify: --sweep and --param are exclusive");
        runs = examples::sweep_params(o.id);
    } else {
        runs.push_back(parse_params(o.params));
    }
    json reports = json::array();
    std::size_t passed = 0;
    for (const auto& p : runs) {
        const auto r = examples::verify_example(o.id, p, box, o.threads);
        passed += r.passed() ? 1 : 0;
        reports.push_back(report_json(r));
    }
    failed = passed != runs.size();
    return {{"family", o.id},
            {"instances", runs.size()},
            {"passed", passed},
            {"all_passed", !failed},
            {"reports", reports}};
}

std::string text_example_verify(const json& r) {
    std::ostringstream os;
    for (const auto& rep : r.at("reports")) {
        std::string params;
        for (const auto& [k, v] : rep.at("params").items()) params += " " + k + "=" + v.dump();
        os << (rep.at("passed").get<bool>() ? "PASS " : "FAIL ") << rep.at("id").get<std::string>() << params << ": "
           << rep.at("claims").size() << " claims, " << rep.at("identities").size() << " identities, ampleness "
           << rep.at("ampleness").get<std::string>();
        if (!rep.at("oracle").is_null())
            os << " (oracle minimum " << rep.at("oracle").at("min_value").dump() << ")";
        os << ", N_p " << scalar(rep.at("np")) << '\n';
        for (const auto& f : rep.at("failures")) os << "  failed: " << f.get<std::string>() << '\n';
    }
    os << r.at("passed").dump() << "/" << r.at("instances").dump() << " instances passed\n";
    return os.str();
}

json cmd_example_list() {
    json out = json::array();
    for (const auto& f : examples::families()) {
        json params = json::array();
        for (const auto& p : f.params) params.push_back({{"name", p.name}, {"default", p.default_value}, {"range", p.range}});
        out.push_back({{"id", f.id}, {"summary", f.summary}, {"params", params},
                       {"sweep_size", examples::sweep_params(f.id).size()}});
    }
    return {{"families", out}};
}

std::string text_example_list(const json& r) {
    std::ostringstream os;
    for (const auto& f : r.at("families")) {
        os << f.at("id").get<std::string>() << ": " << f.at("summary").get<std::string>();
        for (const auto& p : f.at("params"))
            os << " [" << p.at("name").get<std::string>() << ": " << p.at("range").get<std::string>() << ", default "
               << p.at("default").dump() << "]";
        os << " (" << f.at("sweep_size").dump() << " sweep instances)\n";
    }
    return os.str();
}

json cmd_oracle(const Options& o, bool& failed) {
    const auto ex = examples::build_example(o.id, parse_params(o.params));
    const auto cert = examples::nakai_certificate(ex);
    const auto res = examples::brute_force_ample_oracle(ex, box_of(o), o.threads);
    failed = !cert.refused && cert.valid() != res.ample();
    json out{{"example", ex.id},
             {"params", ex.params},
             {"divisor", ex.A.to_string()},
             {"oracle", io::to_json(res)},
             {"witness", res.argmin.as_class(ex.surface).to_string()},
             {"certificate_valid", cert.valid()},
             {"certificate_refused", cert.refused},
             {"agree", cert.refused ? json("n/a (certificate refused)") : json(!failed)},
             {"justification", "bounded-search"}};
    return out;
}

json cmd_fano_primitive(const Options& o) {
    const auto v = fano::primitive_np(fano_input(o));
    return with_p({{"fano", io::fano_to_json(fano_input(o))}, {"verdict", io::verdict_to_json(v)}}, v, parse_p(o.p));
}

json cmd_fano_multiples(const Options& o) {
    return through_eval("multiples_np_fano", {{"fano", io::fano_to_json(fano_input(o))}, {"l", o.l}, {"p", o.pi}});
}

json cmd_fano_surface_multiples(const Options& o) {
    return through_eval("multiples_np_surface",
                        {{"minus_k_dot_b", o.minus_k_dot_b}, {"is_p2_o1", o.p2_o1}, {"l", o.l}, {"p", o.pi}});
}

json cmd_fano_index(const Options& o) {
    const auto f = io::fano_to_json(fano_input(o));
    json out = through_eval("index_nm3_n0", {{"fano", f}, {"k", o.k}});
    if (o.pi >= 1) {
        const json np = through_eval("index_nm3_np", {{"fano", f}, {"k", o.k}, {"p", o.pi}});
        out["np"] = {{"p", o.pi}, {"holds", np.at("verdict")}, {"justification", np.at("justification")}};
    }
    return out;
}

json cmd_fano_classify(const Options& o) {
    const auto f = fano_input(o);
    const auto v = fano::classify(f, o.k);
    return with_p({{"fano", io::fano_to_json(f)}, {"k", o.k}, {"verdict", io::verdict_to_json(v)}}, v, parse_p(o.p));
}

json cmd_fano_known(const Options& o) {
    if (o.key.empty()) {
        json all = json::object();
        for (const auto& k : fano::known_exact_np_keys()) all[k] = *fano::known_exact_np(k);
        return {{"known", all}, {"justification", "pinned-polarization"}};
    }
    return through_eval("known_exact_np", {{"key", o.key}});
}

json cmd_eval(const Options& o) {
    if (o.list_ops) return {{"ops", io::operation_names()}};
    if (o.request.empty()) throw std::invalid_argument("eval: a request (JSON, file or -) is required");
    const json req = read_json_arg(o.request);
    if (req.is_array()) {
        json out = json::array();
        for (const auto& r : req) out.push_back(io::evaluate(r));
        return out;
    }
    return io::evaluate(req);
}

void add_p_option(CLI::App* sub, Options& o) {
    sub->add_option("--p", o.pi, "syzygy index p")->required()->check(CLI::NonNegativeNumber);
}

}  // namespace

std::string render_text(const json& result) {
    std::ostringstream os;
    render(result, 0, os);
    return os.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"ratnp: deciding N_p for polarized rational surfaces and Fano n-folds"};
    app.require_subcommand(1);
    app.add_flag("--json", o.json_out, "print the JSON report");
    app.add_option("--fixtures", o.fixtures, "fixture directory for selftest");

    auto* classify = app.add_subcommand("classify", "N_p verdict for a polarized surface");
    classify->add_option("--surface", o.input, "JSON file (or inline JSON) with {\"divisor\", \"flags\"}");
    classify->add_option("--example", o.example_id, "example family id");
    classify->add_option("--param", o.params, "family parameter k=v");
    classify->add_option("--p", o.p, "auto, or a p to decide")->default_val("auto");

    auto* bounds = app.add_subcommand("bounds", "least n with K + A_1 + ... + A_n satisfying N_p");
    bounds->add_option("--k2", o.k2, "K^2")->required();
    add_p_option(bounds, o);
    bounds->add_option("--e", o.e, "twist of F_e (K^2 = 8)");
    bounds->add_option("--exclude", o.excludes, "summand identity excluded: minusK, minus2K, minus3K, conic");

    auto* adjoint = app.add_subcommand("adjoint", "very ampleness of K + A_1 + ... + A_n");
    adjoint->add_option("--k2", o.k2, "K^2")->required();
    adjoint->add_option("--summand", o.summands, "summand tag (other, minusK, minus2K, minus3K, conic), one per summand")->required();

    auto* reider = app.add_subcommand("reider", "numeric gates for N_p of K + L");
    reider->add_option("--k2", o.k2, "K^2")->required();
    reider->add_option("--l2", o.l2, "L^2")->required();
    reider->add_option("--minus-k-dot-l", o.kl, "-K.L");
    add_p_option(reider, o);
    reider->add_flag("--cond1", o.cond1, "attest L.C >= 3 for all curves and L^2 >= 10");
    reider->add_flag("--adjoint-very-ample", o.adjoint_va, "attest K + L very ample");
    reider->add_flag("--multiple-of-minus-k", o.multiple, "L is a multiple of -K");

    auto* terminate = app.add_subcommand("terminate", "range of m with mK + L not ample, for L exactly N_p");
    terminate->add_option("--k2", o.k2, "K^2")->required();
    add_p_option(terminate, o);
    terminate->add_option("--e", o.e, "twist of F_e (K^2 = 8)");
    terminate->add_flag("--not-multiple", o.not_multiple, "L is not a multiple of -K");

    auto* example = app.add_subcommand("example", "example families");
    example->require_subcommand(1);
    auto* ex_list = example->add_subcommand("list", "list families and parameters");
    auto* ex_verify = example->add_subcommand("verify", "verify claims, certificate and oracle");
    ex_verify->add_option("id", o.id, "family id")->required();
    ex_verify->add_option("--param", o.params, "family parameter k=v");
    ex_verify->add_flag("--sweep", o.sweep, "run the whole sweep range");
    ex_verify->add_option("--box", o.box, "oracle box N or A,B");
    ex_verify->add_option("--threads", o.threads, "oracle threads (0 = hardware)");

    auto* oracle = app.add_subcommand("oracle", "brute-force ampleness oracle for an example");
    oracle->add_option("id", o.id, "family id")->required();
    oracle->add_option("--param", o.params, "family parameter k=v");
    oracle->add_option("--box", o.box, "oracle box N or A,B");
    oracle->add_option("--threads", o.threads, "oracle threads (0 = hardware)");

    auto* fano_cmd = app.add_subcommand("fano", "criteria for Fano n-folds");
    fano_cmd->require_subcommand(1);
    auto add_profile = [&](CLI::App* sub) {
        sub->add_option("--n", o.n, "dimension")->required();
        sub->add_option("--m", o.m, "index: -K = m H")->required();
        sub->add_option("--Hn", o.hn, "H^n")->required();
        sub->add_option("--h0H", o.h0h, "h^0(H)");
        sub->add_option("--morphism", o.morphism, "unknown, double-cover-of-Pn, onto-minimal-degree, neither");
    };
    auto* f_prim = fano_cmd->add_subcommand("primitive", "N_p of H when -K = (n-1) H");
    add_profile(f_prim);
    f_prim->add_option("--p", o.p, "auto, or a p to decide")->default_val("auto");
    auto* f_mult = fano_cmd->add_subcommand("multiples", "N_p of l H");
    add_profile(f_mult);
    f_mult->add_option("--l", o.l, "multiple")->required();
    add_p_option(f_mult, o);
    auto* f_surf = fano_cmd->add_subcommand("surface-multiples", "N_p of l B on a surface");
    f_surf->add_option("--minus-k-dot-b", o.minus_k_dot_b, "-K.B");
    f_surf->add_flag("--p2-o1", o.p2_o1, "(P^2, O(1))");
    f_surf->add_option("--l", o.l, "multiple")->required();
    add_p_option(f_surf, o);
    auto* f_index = fano_cmd->add_subcommand("index-n-3", "normality and N_p of k H for index n - 3");
    add_profile(f_index);
    f_index->add_option("--k", o.k, "multiple")->required();
    f_index->add_option("--p", o.pi, "also decide N_p (p >= 1)");
    auto* f_known = fano_cmd->add_subcommand("known", "pinned maxima for projective-space polarizations");
    f_known->add_option("key", o.key, "O_P3(2), O_P3(3) or O_P4(2)");
    auto* f_classify = fano_cmd->add_subcommand("classify", "verdict for k H from whichever criterion the index selects");
    f_classify->add_option("--n", o.n, "dimension")->required();
    f_classify->add_option("--index", o.m, "index: -K = index H")->required();
    f_classify->add_option("--deg", o.hn, "H^n")->required();
    f_classify->add_option("--h0", o.h0h, "h^0(H)");
    f_classify->add_option("--morphism", o.morphism, "unknown, double-cover-of-Pn, onto-minimal-degree, neither");
    f_classify->add_option("--k", o.k, "multiple")->default_val(1);
    f_classify->add_option("--p", o.p, "auto, or a p to decide")->default_val("auto");

    app.add_subcommand("selftest", "run the fixture and property suite");

    auto* eval = app.add_subcommand("eval", "evaluate {\"op\", \"args\"} requests");
    eval->add_option("request", o.request, "inline JSON, file, or - for stdin");
    eval->add_flag("--list", o.list_ops, "list operation names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        json result;
        bool failed = false;
        std::string text;
        if (classify->parsed()) {
            result = cmd_classify(o);
        } else if (bounds->parsed()) {
            result = cmd_bounds(o);
        } else if (adjoint->parsed()) {
            result = cmd_adjoint(o);
        } else if (reider->parsed()) {
            result = cmd_reider(o);
        } else if (terminate->parsed()) {
            result = cmd_terminate(o);
        } else if (ex_list->parsed()) {
            result = cmd_example_list();
            text = text_example_list(result);
        } else if (ex_verify->parsed()) {
            result = cmd_example_verify(o, failed);
            text = text_example_verify(result);
        } else if (oracle->parsed()) {
            result = cmd_oracle(o, failed);
        } else if (f_prim->parsed()) {
            result = cmd_fano_primitive(o);
        } else if (f_mult->parsed()) {
            result = cmd_fano_multiples(o);
        } else if (f_surf->parsed()) {
            result = cmd_fano_surface_multiples(o);
        } else if (f_index->parsed()) {
            result = cmd_fano_index(o);
        } else if (f_known->parsed()) {
            result = cmd_fano_known(o);
        } else if (f_classify->parsed()) {
            result = cmd_fano_classify(o);
        } else if (eval->parsed()) {
            result = cmd_eval(o);
        } else {
            // selftest
            std::ostringstream report;
            const int code = selftest::run_selftest(o.fixtures, report);
            if (o.json_out) {
                json lines = json::array();
                std::istringstream in(report.str());
                for (std::string line; std::getline(in, line);) lines.push_back(line);
                out << json{{"passed", code == 0}, {"lines", lines}}.dump(2) << '\n';
            } else {
                out << report.str();
            }
            return code;
        }
        if (o.json_out)
            out << result.dump(2) << '\n';
        else
            out << (text.empty() ? render_text(result) : text);
        if (failed) {
            err << "verification failed";
            if (result.contains("reports"))
                for (const auto& r : result.at("reports"))
                    for (const auto& f : r.at("failures")) err << "\n  " << f.get<std::string>();
            err << '\n';
            return 1;
        }
        return 0;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const json::exception& e) {
        err << "error: bad JSON: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace ratnp::cli
