#include "cli.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "ratnp");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = ratnp::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

json invoke_json(std::vector<std::string> args) {
    args.insert(args.begin(), "--json");
    const auto r = invoke(std::move(args));
    EXPECT_EQ(r.code, 0) << r.err;
    return json::parse(r.out);
}

const std::string fixtures = RATNP_FIXTURE_DIR;

}  // namespace

TEST(Cli, BoundsPositiveK2) {
    const auto j = invoke_json({"bounds", "--k2", "1", "--p", "0"});
    EXPECT_EQ(j.at("verdict").at("min_n"), 4);
    EXPECT_EQ(j.at("justification"), "adjoint-np:positive-k2");
    const auto t = invoke({"bounds", "--k2", "1", "--p", "0"});
    EXPECT_EQ(t.code, 0);
    EXPECT_NE(t.out.find("adjoint-np:positive-k2"), std::string::npos);
}

TEST(Cli, BoundsWithExclusions) {
    const auto j = invoke_json({"bounds", "--k2", "4", "--p", "11", "--exclude", "minusK", "--exclude", "minus2K"});
    EXPECT_EQ(j.at("verdict").at("min_n"), 3);
}

TEST(Cli, ClassifyObservationFixture) {
    const auto j = invoke_json({"classify", "--surface", fixtures + "/obs14.json", "--p", "auto"});
    EXPECT_EQ(j.at("verdict").at("status"), "AtLeast");
    EXPECT_EQ(j.at("verdict").at("p"), 4);
    EXPECT_EQ(j.at("minus_k_dot_l"), 7);
    const auto t = invoke({"classify", "--surface", fixtures + "/obs14.json"});
    EXPECT_EQ(t.code, 0);
    EXPECT_NE(t.out.find("AtLeast(4)"), std::string::npos) << t.out;
}

TEST(Cli, ClassifyDecidesP) {
    const auto yes = invoke_json({"classify", "--example", "del-pezzo", "--param", "i=3", "--p", "3"});
    EXPECT_EQ(yes.at("np_holds"), "yes");
    const auto no = invoke_json({"classify", "--example", "del-pezzo", "--param", "i=3", "--p", "4"});
    EXPECT_EQ(no.at("np_holds"), "no");
    const auto unk = invoke_json({"classify", "--surface", fixtures + "/obs14.json", "--p", "5"});
    EXPECT_EQ(unk.at("np_holds"), "unknown");
}

TEST(Cli, TextAndJsonVerdictsAgree) {
    for (const std::string id : {"plane", "hirzebruch", "del-pezzo", "conic-bundle", "non-anticanonical"}) {
        const auto j = invoke_json({"classify", "--example", id});
        const auto t = invoke({"classify", "--example", id});
        const std::string status = j.at("verdict").at("status");
        EXPECT_NE(t.out.find(status), std::string::npos) << id << "\n" << t.out;
        if (j.at("verdict").contains("p")) {
            const std::string rendered = status + "(" + j.at("verdict").at("p").dump() + ")";
            EXPECT_NE(t.out.find(rendered), std::string::npos) << id << "\n" << t.out;
        }
    }
}

TEST(Cli, ExampleVerifySweep) {
    const auto r = invoke({"example", "verify", "f0-odd", "--sweep"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("10/10 instances passed"), std::string::npos) << r.out;
    const auto j = invoke_json({"example", "verify", "hirzebruch", "--param", "e=3"});
    EXPECT_TRUE(j.at("all_passed").get<bool>());
}

TEST(Cli, ExampleListAndOracle) {
    const auto list = invoke_json({"example", "list"});
    EXPECT_EQ(list.at("families").size(), 11u);
    const auto o = invoke_json({"oracle", "conic-bundle", "--param", "e=1", "--param", "n=3"});
    EXPECT_EQ(o.at("agree"), true);
    EXPECT_TRUE(o.at("oracle").at("ample").get<bool>());
}

TEST(Cli, Fano) {
    const auto p = invoke_json({"fano", "primitive", "--n", "3", "--m", "2", "--Hn", "8"});
    EXPECT_EQ(p.at("verdict").at("status"), "ExactMax");
    EXPECT_EQ(p.at("verdict").at("p"), 5);
    const auto k = invoke_json({"fano", "known", "O_P3(3)"});
    EXPECT_EQ(k.at("verdict").at("exact_max_p"), 6);
    const auto c = invoke_json({"fano", "index-n-3", "--n", "5", "--m", "2", "--Hn", "6", "--k", "3"});
    EXPECT_EQ(c.at("verdict").at("status"), "ConditionalN0");
    const auto v = invoke_json({"fano", "classify", "--n", "3", "--index", "2", "--deg", "8", "--p", "5"});
    EXPECT_EQ(v.at("verdict").at("status"), "ExactMax");
    EXPECT_EQ(v.at("np_holds"), "yes");
    const auto w = invoke_json({"fano", "classify", "--n", "5", "--index", "2", "--deg", "6", "--h0", "7", "--morphism",
                                "neither", "--k", "4"});
    EXPECT_EQ(w.at("verdict").at("status"), "AtLeast");
    EXPECT_EQ(w.at("verdict").at("p"), 2);
    const auto t = invoke({"fano", "classify", "--n", "5", "--index", "2", "--deg", "6", "--k", "4"});
    EXPECT_NE(t.out.find("AtLeast(0)"), std::string::npos) << t.out;
}

TEST(Cli, Eval) {
    const auto j = invoke_json({"eval", R"({"op": "k_squared", "args": {"surface": {"kind": "BlowUpP2", "l": 8}}})"});
    EXPECT_EQ(j.at("verdict"), 1);
    const auto ops = invoke_json({"eval", "--list"});
    EXPECT_EQ(ops.at("ops").size(), 28u);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(invoke({"--help"}).code, 0);
    EXPECT_EQ(invoke({}).code, 2);
    EXPECT_EQ(invoke({"bounds", "--p", "1"}).code, 2);
    EXPECT_EQ(invoke({"frobnicate"}).code, 2);
    EXPECT_EQ(invoke({"classify", "--example", "nope"}).code, 2);
    EXPECT_EQ(invoke({"classify", "--example", "plane", "--param", "x"}).code, 2);
    EXPECT_EQ(invoke({"classify", "--surface", "/nonexistent.json"}).code, 2);
    EXPECT_EQ(invoke({"example", "verify", "plane", "--box", "0"}).code, 2);
    EXPECT_EQ(invoke({"eval", "{not json"}).code, 2);
    EXPECT_EQ(invoke({"fano", "primitive", "--n", "3", "--m", "1", "--Hn", "8"}).code, 2);
    const auto nonample = invoke({"--json", "classify", "--surface",
                                 R"({"divisor": {"kind": "P2", "coeffs": [1]}, "flags": {"bpf": true}})"});
    EXPECT_EQ(nonample.code, 2);
}
