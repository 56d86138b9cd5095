// Acceptance checks shared by the acceptance binary and `trialis verify-all`,
// and the named text tables behind `trialis table`.
#pragma once

#include <string>
#include <vector>

namespace trialis {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::vector<std::string> failures;   // one line per failed clause
    std::vector<std::string> notes;      // flagged, non-failing observations
    double seconds = 0;
};

constexpr int criterion_count = 11;
std::string criterion_title(int id);
CriterionResult run_criterion(int id, const std::string& golden_dir);

// golden text with '#' comment lines removed
std::string read_golden(const std::string& path);

// vogel, round1, round2, stable, path, adjoint, freudenthal, geometric, magic-dims
std::vector<std::string> table_names();
// throws std::invalid_argument on an unknown name
std::string render_named_table(const std::string& name);

}  // namespace trialis
