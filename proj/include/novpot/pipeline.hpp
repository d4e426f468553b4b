#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "novpot/config.hpp"

namespace novpot {

struct Report {
    nlohmann::ordered_json data;
    std::vector<std::string> lines;

    std::string text() const;
};

struct PipelineOptions {
    std::optional<FiberPoint> at;
    Rational precision = Rational(8);
};

// Fiber point used by solve-style commands: --at beats the configured
// fiber_point, which beats a uniquely balanced point.
FiberPoint resolve_fiber_point(const DocumentConfig& c, const std::optional<FiberPoint>& at);

Report polytope_report(const DocumentConfig& c);
Report potential_report(const DocumentConfig& c, const PipelineOptions& opt);
Report solve_command(const DocumentConfig& c, const PipelineOptions& opt);
Report classes_report(const DocumentConfig& c);
Report qh_command(const DocumentConfig& c, const PipelineOptions& opt);
Report full_report(const DocumentConfig& c, const PipelineOptions& opt);

struct ChecklistItem {
    std::string name;
    bool pass = false;
    std::string detail;
};

// The expected values of the bundled semi-toric configuration, asserted
// end to end.  Returns one line per check; all-pass means the document
// reproduces the published computation this tool packages.
std::vector<ChecklistItem> builtin_verification(const DocumentConfig& c,
                                                const Rational& precision);

Report checklist_report(const std::vector<ChecklistItem>& items);

}  // namespace novpot
