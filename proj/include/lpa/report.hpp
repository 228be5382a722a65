#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace lpa {

struct CheckWitness {
    std::string description;
    nlohmann::json data = nlohmann::json::object();

    nlohmann::json to_json() const {
        nlohmann::json j = data;
        j["description"] = description;
        return j;
    }
};

// Result of one structural check. A false verdict always carries at least
// one witness; a passing one carries re-verified identities under
// `certificates`, so reports are self-certifying.
struct CheckReport {
    std::string check;
    bool verdict = true;
    std::vector<CheckWitness> witnesses;
    std::uint64_t seed = 0;
    nlohmann::json params = nlohmann::json::object();
    std::vector<std::string> certificates;
    long elapsed_ms = 0;

    void fail(const std::string& description, nlohmann::json data = nlohmann::json::object()) {
        verdict = false;
        witnesses.push_back(CheckWitness{description, std::move(data)});
    }
    void certify(const std::string& identity) { certificates.push_back(identity); }

    // Timing is variable; the deterministic artifact written with --json
    // carries elapsed_ms: null so reports stay byte-identical per seed.
    nlohmann::json to_json(bool include_timing = false) const;
    std::string summary() const;
};

} // namespace lpa
