#include "midext/report.hpp"

#include <sstream>

#include <json.hpp>

namespace midext {

std::string Report::text() const {
    std::ostringstream os;
    os << "== " << command << " ==\n";
    for (const auto& [k, v] : inputs) os << k << ": " << v << "\n";
    for (const auto& c : results) {
        os << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
        if (!c.witness.empty()) os << "  [" << c.witness << "]";
        os << "\n";
    }
    os << (all_pass() ? "all checks passed" : "CHECKS FAILED") << "\n";
    return os.str();
}

std::string Report::json() const {
    nlohmann::json j;
    j["command"] = command;
    j["inputs"] = nlohmann::json::object();
    for (const auto& [k, v] : inputs) j["inputs"][k] = v;
    j["results"] = nlohmann::json::array();
    for (const auto& c : results) {
        nlohmann::json r;
        r["check"] = c.name;
        r["pass"] = c.pass;
        if (!c.witness.empty()) r["witness"] = c.witness;
        j["results"].push_back(r);
    }
    j["exit_code"] = exit_code();
    return j.dump(2);
}

} // namespace midext
