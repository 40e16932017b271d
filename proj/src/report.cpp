#include "mva/report.hpp"

#include <sstream>

namespace mva {

nlohmann::json Report::to_json() const {
    nlohmann::json j;
    j["suite"] = suite;
    j["params"] = params;
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks) {
        nlohmann::json cj;
        cj["name"] = c.name;
        cj["params"] = c.params;
        cj["status"] = c.pass ? "PASS" : "FAIL";
        if (c.witness) cj["witness"] = *c.witness;
        j["checks"].push_back(cj);
    }
    j["summary"] = {{"total", checks.size()},
                    {"failed", fail_count()},
                    {"status", all_pass() ? "PASS" : "FAIL"}};
    return j;
}

Report Report::from_json(const nlohmann::json& j) {
    Report r;
    r.suite = j.at("suite").get<std::string>();
    r.params = j.at("params");
    for (const auto& cj : j.at("checks")) {
        Check c;
        c.name = cj.at("name").get<std::string>();
        c.params = cj.at("params");
        c.pass = cj.at("status").get<std::string>() == "PASS";
        if (cj.contains("witness")) c.witness = cj.at("witness").get<std::string>();
        r.checks.push_back(std::move(c));
    }
    return r;
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << "suite " << suite << "  params " << params.dump() << "\n";
    for (const auto& c : checks) {
        os << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
        if (!c.params.empty()) os << "  " << c.params.dump();
        if (c.witness) os << "  witness: " << *c.witness;
        os << "\n";
    }
    os << (all_pass() ? "PASS" : "FAIL") << "  (" << checks.size() - fail_count() << "/"
       << checks.size() << " checks)\n";
    return os.str();
}

}  // namespace mva
