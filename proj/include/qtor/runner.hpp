#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qtor/report.hpp"
#include "qtor/script.hpp"
#include "qtor/toroidal.hpp"

namespace qtor {

inline constexpr const char* kToolVersion = "qtor 0.1.0";

struct SemanticError : std::runtime_error {
    SemanticError(const std::string& msg, SourcePos p)
        : std::runtime_error(msg + " at line " + std::to_string(p.line) + ", col " +
                             std::to_string(p.col)),
          pos(p) {}
    SourcePos pos;
};

struct RunOptions {
    int jobs = 1;
    std::string format = "text";
    bool timing = true;
    unsigned long long seed = 1;
    // command-line defaults applied when a statement leaves them unset
    std::optional<int> window;
    std::optional<int> maxdeg;
    std::optional<int> modes;
    std::optional<PiConfig> convention;
};

struct RunReport {
    std::string version = kToolVersion;
    std::vector<Report> checks;
    bool pass = true;
    double total_millis = 0.0;
};

// Validates and executes every statement; throws SemanticError on unknown
// checks or out-of-range parameters. Checks may run concurrently with
// opts.jobs > 1; report order always follows script order.
RunReport run_script(const Script& script, const RunOptions& opts);

std::string report_to_json(const RunReport& r, bool timing);
std::string report_to_text(const RunReport& r, bool timing);

// All check names understood by the runner: relation ids plus named suites.
std::vector<std::pair<std::string, std::string>> check_catalogue();

}  // namespace qtor
