#include "ratnp/verify.hpp"

#include "ratnp/criteria.hpp"

namespace ratnp::examples {

std::string ExampleReport::ampleness_basis() const { return certificate.refused ? "attested" : "certified"; }

ExampleReport verify_family(ExampleFamily ex, const OracleBox& box, unsigned threads) {
    ExampleReport r{ex, {}, {}, nakai_certificate(ex), std::nullopt,
                    make_verdict(NotApplicable{"not evaluated"}, "none"), {}};
    const std::string where = ex.id + ": ";

    for (const auto& c : ex.claims) {
        r.claims.push_back({c.quantity, c.expected, evaluate_quantity(ex, c.quantity), c.source});
        if (!r.claims.back().passed())
            r.failures.push_back(where + "claim " + c.quantity + " expected " + std::to_string(c.expected) +
                                 ", lattice gives " + std::to_string(r.claims.back().actual));
    }
    for (const auto& id : ex.identities) {
        const auto actual = evaluate_class(ex, id.lhs);
        r.identities.push_back({id.lhs, id.expected, actual.coeffs(), id.source});
        if (!r.identities.back().passed())
            r.failures.push_back(where + "identity " + id.lhs + " expected " +
                                 DivisorClass(ex.surface, id.expected).to_string() + ", lattice gives " +
                                 actual.to_string());
    }

    if (r.certificate.refused) {
        if (!ex.attested.ample)
            r.failures.push_back(where + "certificate refused and ampleness not attested");
    } else {
        r.oracle = brute_force_ample_oracle(ex, box, threads);
        if (!r.certificate.valid()) r.failures.push_back(where + "Nakai-Moishezon certificate failed");
        if (r.certificate.valid() != r.oracle->ample())
            r.failures.push_back(where + "certificate and oracle disagree (oracle minimum " +
                                 std::to_string(r.oracle->min_value) + ")");
    }

    r.np = criteria::np_classify(ex.surface, ex.A, ex.attested);
    if (ex.expected_np && ex.expected_np->status != r.np.status)
        r.failures.push_back(where + "N_p verdict " + r.np.to_string() + " differs from expected " +
                             ex.expected_np->to_string());
    return r;
}

ExampleReport verify_example(const std::string& id, const Params& params, const OracleBox& box, unsigned threads) {
    return verify_family(build_example(id, params), box, threads);
}

ExampleReport verify_example(const std::string& id, const Params& params) {
    return verify_example(id, params, OracleBox::from_env());
}

}  // namespace ratnp::examples
