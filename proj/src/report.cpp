#include "lpa/report.hpp"

namespace lpa {

nlohmann::json CheckReport::to_json(bool include_timing) const {
    nlohmann::json j;
    j["check"] = check;
    j["verdict"] = verdict;
    j["witnesses"] = nlohmann::json::array();
    for (const auto& w : witnesses) j["witnesses"].push_back(w.to_json());
    j["seed"] = seed;
    j["params"] = params;
    j["certificates"] = certificates;
    if (include_timing)
        j["elapsed_ms"] = elapsed_ms;
    else
        j["elapsed_ms"] = nullptr;
    return j;
}

std::string CheckReport::summary() const {
    std::string s = check + ": " + (verdict ? "PASS" : "FAIL");
    if (!verdict && !witnesses.empty()) s += "  [witness: " + witnesses.front().description + "]";
    return s;
}

} // namespace lpa
