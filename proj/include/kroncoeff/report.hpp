#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"

namespace kroncoeff {

/// Machine-readable result envelope shared by the CLI subcommands:
/// {"input": ..., "result": "<decimal>", "method": "...", "millis": N}.
/// Results are decimal strings so consumers never face integer-width limits.
nlohmann::ordered_json make_report(nlohmann::ordered_json input, std::string result,
                                   std::string method, int64_t millis);

} // namespace kroncoeff
