#pragma once

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace ratnp::cli {

/// Exit codes: 0 success, 1 verification failure, 2 argument error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Text form of a command result. Verdict objects print as Status(p).
std::string render_text(const nlohmann::json& result);

}  // namespace ratnp::cli
