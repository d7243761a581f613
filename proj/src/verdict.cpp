#include "ratnp/verdict.hpp"

#include <stdexcept>

namespace ratnp {

namespace {
template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;
}  // namespace

int NpVerdict::guaranteed_p() const {
    return std::visit(overloaded{[](const ExactMax& s) { return s.p; },
                                 [](const AtLeast& s) { return s.p; },
                                 [](const NotN0&) { return -1; },
                                 [](const NotApplicable&) { return -1; }},
                      status);
}

bool NpVerdict::refutes(int p) const {
    if (const auto* e = std::get_if<ExactMax>(&status)) return p > e->p;
    if (std::holds_alternative<NotN0>(status)) return p >= 0;
    return false;
}

std::string NpVerdict::status_name() const {
    return std::visit(overloaded{[](const ExactMax&) { return std::string("ExactMax"); },
                                 [](const AtLeast&) { return std::string("AtLeast"); },
                                 [](const NotN0&) { return std::string("NotN0"); },
                                 [](const NotApplicable&) { return std::string("NotApplicable"); }},
                      status);
}

std::string NpVerdict::to_string() const {
    std::string body = std::visit(
        overloaded{[](const ExactMax& s) { return "ExactMax(" + std::to_string(s.p) + ")"; },
                   [](const AtLeast& s) { return "AtLeast(" + std::to_string(s.p) + ")"; },
                   [](const NotN0&) { return std::string("NotN0"); },
                   [](const NotApplicable& s) { return "NotApplicable(" + s.reason + ")"; }},
        status);
    return body + " [" + justification + "]";
}

NpVerdict make_verdict(NpStatus status, std::string justification, std::vector<std::string> assumed) {
    if (justification.empty()) throw std::logic_error("verdict without justification");
    return NpVerdict{std::move(status), std::move(justification), std::move(assumed)};
}

}  // namespace ratnp
