#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace mva {

struct Check {
    std::string name;
    nlohmann::json params = nlohmann::json::object();
    bool pass = false;
    std::optional<std::string> witness;  // set on failure, describes the violation
};

/// Result of a verification suite: a flat list of named pass/fail checks.
struct Report {
    std::string suite;
    nlohmann::json params = nlohmann::json::object();
    std::vector<Check> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    size_t fail_count() const {
        size_t n = 0;
        for (const auto& c : checks)
            if (!c.pass) ++n;
        return n;
    }

    void add(std::string name, nlohmann::json params, bool pass,
             std::optional<std::string> witness = std::nullopt) {
        checks.push_back({std::move(name), std::move(params), pass, std::move(witness)});
    }

    nlohmann::json to_json() const;
    static Report from_json(const nlohmann::json& j);
    std::string to_text() const;
};

}  // namespace mva
