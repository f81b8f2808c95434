#include "trapcong/report.hpp"

#include <sstream>

namespace trapcong {

std::string to_string(Status s) {
    switch (s) {
        case Status::Pass: return "PASS";
        case Status::Fail: return "FAIL";
        case Status::Note: return "NOTE";
    }
    return "?";
}

nlohmann::json to_json(const Report& r) {
    return nlohmann::json{{"claim_id", r.claim_id},
                          {"paper_value", r.paper_value},
                          {"computed_value", r.computed_value},
                          {"status", to_string(r.status)},
                          {"expected_errata", r.expected_errata},
                          {"witnesses", r.witnesses}};
}

nlohmann::json to_json(const std::vector<Report>& rs) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rs) arr.push_back(to_json(r));
    return arr;
}

std::string render_text(const std::vector<Report>& rs) {
    std::ostringstream os;
    std::size_t pass = 0, fail = 0, note = 0;
    for (const auto& r : rs) {
        os << "[" << to_string(r.status) << "] " << r.claim_id;
        if (r.expected_errata) os << " (known erratum)";
        os << "\n    claimed:  " << r.paper_value << "\n    computed: " << r.computed_value
           << "\n";
        if (r.status == Status::Fail && !r.witnesses.empty())
            os << "    witnesses: " << r.witnesses.dump() << "\n";
        switch (r.status) {
            case Status::Pass: ++pass; break;
            case Status::Fail: ++fail; break;
            case Status::Note: ++note; break;
        }
    }
    os << "---\n" << pass << " pass, " << fail << " fail, " << note << " note\n";
    return os.str();
}

int exit_code(const std::vector<Report>& rs, bool allow_errata) {
    bool any_fail = false, unexpected = false;
    for (const auto& r : rs) {
        if (r.status == Status::Fail) {
            any_fail = true;
            if (!r.expected_errata) unexpected = true;
        }
    }
    if (unexpected) return 1;
    if (any_fail && !allow_errata) return 1;
    return 0;
}

}  // namespace trapcong
