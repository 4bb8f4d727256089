#pragma once

#include <string>
#include <utility>
#include <vector>

namespace midext {

/// Machine-readable verification report: named checks with pass/fail and
/// witness data for every failure.  Exit code 0 iff all checks pass.
struct Report {
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs;
    struct Check {
        std::string name;
        bool pass;
        std::string witness;
    };
    std::vector<Check> results;

    void echo(const std::string& key, const std::string& value) { inputs.push_back({key, value}); }
    void check(const std::string& name, bool pass, const std::string& witness = "") {
        results.push_back({name, pass, witness});
    }
    bool all_pass() const {
        for (const auto& c : results)
            if (!c.pass) return false;
        return true;
    }
    int exit_code() const { return all_pass() ? 0 : 1; }

    std::string text() const;
    std::string json() const;
};

} // namespace midext
