#pragma once

#include <string>
#include <string_view>

#include "freediv/cli/request.hpp"
#include "json.hpp"

namespace freediv::cli {

struct RunOptions {
  /// Adds wall-clock milliseconds per check; off by default so reports stay byte-identical.
  bool timings = false;
};

/// Runs the requested checks in dependency order and returns the JSON report (schema 1).
/// Malformed or non-squarefree input throws the corresponding library error before any check runs.
nlohmann::json run(const AnalysisRequest& req, const RunOptions& opts = {});

/// One line per check.
std::string render_text(const nlohmann::json& report);

/// kind: koszul (symbols of the Saito basis), koszul_xi, spencer_theta, spencer_xi.
nlohmann::json export_complex(const AnalysisRequest& req, std::string_view kind);

}  // namespace freediv::cli
