#include "ratnp/fano.hpp"

#include <map>
#include <stdexcept>

namespace ratnp::fano {

std::string to_string(MorphismType m) {
    switch (m) {
        case MorphismType::Unknown: return "unknown";
        case MorphismType::TwoToOneOntoPn: return "double-cover-of-Pn";
        case MorphismType::OntoMinimalDegreeNotPn: return "onto-minimal-degree";
        case MorphismType::NeitherOfThose: return "neither";
    }
    return "unknown";
}

MorphismType morphism_from_string(const std::string& name) {
    for (auto m : {MorphismType::Unknown, MorphismType::TwoToOneOntoPn, MorphismType::OntoMinimalDegreeNotPn,
                   MorphismType::NeitherOfThose})
        if (to_string(m) == name) return m;
    throw std::invalid_argument("unknown morphism type '" + name + "'");
}

void FanoInput::validate() const {
    if (n < 2) throw std::invalid_argument("Fano profile: dimension must be >= 2");
    if (m < 1) throw std::invalid_argument("Fano profile: index must be >= 1");
    if (Hn < 1) throw std::invalid_argument("Fano profile: H^n must be positive");
    if (h0H && *h0H < 0) throw std::invalid_argument("Fano profile: h0(H) must be nonnegative");
    if (h0H && morphism != MorphismType::Unknown && *h0H < n + 1)
        throw std::invalid_argument("Fano profile: a morphism onto an n-dimensional image needs h0(H) >= n + 1");
    if (h0H && morphism == MorphismType::TwoToOneOntoPn && *h0H != n + 1)
        throw std::invalid_argument("Fano profile: a double cover of P^n needs h0(H) = n + 1");
}

NpVerdict primitive_np(const FanoInput& f) {
    f.validate();
    if (f.m != f.n - 1) throw std::invalid_argument("primitive_np: requires -K = (n-1) H");
    std::vector<std::string> assumed{"ample", "bpf", "index n-1"};
    if (f.Hn >= 3)
        return make_verdict(ExactMax{static_cast<int>(f.Hn - 3)}, "fano-degree:iff", std::move(assumed));
    return make_verdict(NotN0{}, "fano-degree:iff", std::move(assumed));
}

namespace {
const std::map<std::string, int>& known_table() {
    static const std::map<std::string, int> table{{"O_P3(2)", 5}, {"O_P3(3)", 6}, {"O_P4(2)", 5}};
    return table;
}
}  // namespace

std::optional<int> known_exact_np(const std::string& key) {
    const auto& t = known_table();
    auto it = t.find(key);
    if (it == t.end()) return std::nullopt;
    return it->second;
}

std::vector<std::string> known_exact_np_keys() {
    std::vector<std::string> keys;
    for (const auto& [k, v] : known_table()) keys.push_back(k);
    return keys;
}

bool multiples_np_surface(long long minus_k_dot_b, bool is_p2_o1, long long l, int p) {
    if (p < 1) throw std::invalid_argument("multiples_np_surface: requires p >= 1");
    return (minus_k_dot_b >= 4 || is_p2_o1) && l >= p;
}

bool multiples_np_fano(const FanoInput& f, long long l, int p) {
    f.validate();
    if (f.m < f.n - 1) throw std::invalid_argument("multiples_np_fano: requires index >= n - 1");
    if (p < 1) throw std::invalid_argument("multiples_np_fano: requires p >= 1");
    return l >= p && (f.m > f.n - 1 || f.Hn >= 4);
}

std::string to_string(N0Status s) {
    switch (s) {
        case N0Status::N0: return "N0";
        case N0Status::NotN0: return "NotN0";
        case N0Status::ConditionalN0: return "ConditionalN0";
        case N0Status::Silent: return "Silent";
    }
    return "Silent";
}

N0Decision index_nm3_n0(const FanoInput& f, long long k) {
    f.validate();
    if (f.m != f.n - 3 || f.m < 1) throw std::invalid_argument("index_nm3_n0: requires index n - 3 >= 1");
    const std::string tag = "fano-index-n-3:normality";
    if (k >= 4) return {N0Status::N0, {}, tag};
    if (k == 3) {
        if (f.morphism == MorphismType::TwoToOneOntoPn) return {N0Status::NotN0, {}, tag + ":iff"};
        if (f.morphism == MorphismType::Unknown)
            return {N0Status::ConditionalN0, {"H does not map X 2:1 onto P^n"}, tag + ":iff"};
        return {N0Status::N0, {}, tag + ":iff"};
    }
    if (k == 2) {
        if (f.morphism == MorphismType::NeitherOfThose) return {N0Status::N0, {}, tag};
        if (f.morphism == MorphismType::Unknown)
            return {N0Status::ConditionalN0,
                    {"H does not map X 2:1 onto P^n", "image of H is not of minimal degree"},
                    tag};
        return {N0Status::Silent, {}, tag};
    }
    return {N0Status::Silent, {}, tag};
}

bool index_nm3_np(const FanoInput& f, long long k, int p) {
    f.validate();
    if (f.m != f.n - 3 || f.m < 1) throw std::invalid_argument("index_nm3_np: requires index n - 3 >= 1");
    if (!f.h0H) throw std::invalid_argument("index_nm3_np: requires h0(H)");
    return *f.h0H >= f.n + 2 && k >= p + 2 && p >= 1;
}

NpVerdict classify(const FanoInput& f, long long k) {
    f.validate();
    if (k < 1) throw std::invalid_argument("fano classify: k must be >= 1");
    if (f.m == f.n - 1 && k == 1) return primitive_np(f);
    if (f.m >= f.n - 1) {
        if (f.m > f.n - 1 || f.Hn >= 4)
            return make_verdict(AtLeast{static_cast<int>(k)}, "fano-multiples", {"ample", "bpf"});
        return make_verdict(NotApplicable{"H^n < 4 at index n - 1"}, "fano-multiples");
    }
    if (f.m == f.n - 3 && f.m >= 1) {
        const auto d = index_nm3_n0(f, k);
        if (d.status == N0Status::NotN0) return make_verdict(NotN0{}, d.justification);
        if (d.status != N0Status::N0) {
            std::string why = d.status == N0Status::Silent ? "criterion silent for this k" : "needs:";
            for (const auto& n : d.needed) why += " " + n + ";";
            return make_verdict(NotApplicable{why}, d.justification);
        }
        int p = 0;
        if (f.h0H && *f.h0H >= f.n + 2 && k >= 3) p = static_cast<int>(k - 2);
        return make_verdict(AtLeast{p}, p > 0 ? "fano-index-n-3:syzygies" : d.justification);
    }
    return make_verdict(NotApplicable{"no criterion for index " + std::to_string(f.m) + " in dimension " +
                                      std::to_string(f.n)},
                        "fano-classify");
}

}  // namespace ratnp::fano
