#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace trapcong {

enum class Status { Pass, Fail, Note };

std::string to_string(Status s);

// One published claim compared against a computed value. FAIL always
// carries at least one witness or counterexample; NOTE marks convention
// differences and typos that are corrected on the computed side.
struct Report {
    std::string claim_id;
    std::string paper_value;
    std::string computed_value;
    Status status = Status::Pass;
    nlohmann::json witnesses = nlohmann::json::array();
    // A claim our own computation contradicts; such failures are the
    // finding, not a defect, and can be excused at exit-code level.
    bool expected_errata = false;
};

nlohmann::json to_json(const Report& r);
nlohmann::json to_json(const std::vector<Report>& rs);
std::string render_text(const std::vector<Report>& rs);

// 0 when nothing failed, or when every failure is a known erratum and
// allow_errata is set; 1 otherwise.
int exit_code(const std::vector<Report>& rs, bool allow_errata);

}  // namespace trapcong
