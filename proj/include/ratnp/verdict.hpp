#pragma once

#include <string>
#include <variant>
#include <vector>

namespace ratnp {

/// N_p holds exactly for 0 <= q <= p and fails for q = p + 1.
struct ExactMax {
    int p;
    bool operator==(const ExactMax&) const = default;
};
/// N_q holds for every 0 <= q <= p; nothing is claimed beyond p.
struct AtLeast {
    int p;
    bool operator==(const AtLeast&) const = default;
};
/// Not even projectively normal.
struct NotN0 {
    bool operator==(const NotN0&) const = default;
};
/// The criterion says nothing.
struct NotApplicable {
    std::string reason;
    bool operator==(const NotApplicable&) const = default;
};

using NpStatus = std::variant<ExactMax, AtLeast, NotN0, NotApplicable>;

struct NpVerdict {
    NpStatus status;
    std::string justification;
    std::vector<std::string> assumed;

    /// Largest p with N_p guaranteed, or -1.
    int guaranteed_p() const;
    bool guarantees(int p) const { return p <= guaranteed_p(); }
    /// True when the verdict proves N_p fails.
    bool refutes(int p) const;

    std::string status_name() const;
    std::string to_string() const;
};

NpVerdict make_verdict(NpStatus status, std::string justification,
                       std::vector<std::string> assumed = {});

}  // namespace ratnp
