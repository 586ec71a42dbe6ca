#pragma once

#include <map>
#include <string>
#include <vector>

namespace hoe {

struct Check {
    std::string name;
    bool pass = false;
    std::string witness;
};

/// Ordered list of named checks; the verdict passes iff every check passes.
struct Report {
    std::vector<Check> checks;
    std::vector<std::string> log;
    std::map<std::string, std::string> metadata;

    void add(std::string name, bool pass, std::string witness = {})
    {
        checks.push_back({std::move(name), pass, std::move(witness)});
    }

    bool verdict() const
    {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    const Check* find(const std::string& name) const
    {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }

    std::vector<const Check*> failures() const
    {
        std::vector<const Check*> out;
        for (const auto& c : checks)
            if (!c.pass) out.push_back(&c);
        return out;
    }

    void merge(const Report& other, const std::string& prefix = {})
    {
        for (const auto& c : other.checks) checks.push_back({prefix + c.name, c.pass, c.witness});
        log.insert(log.end(), other.log.begin(), other.log.end());
        for (const auto& [k, v] : other.metadata) metadata.emplace(k, v);
    }

    std::string to_text() const
    {
        std::string out;
        for (const auto& c : checks) {
            out += (c.pass ? "[pass] " : "[FAIL] ") + c.name;
            if (!c.witness.empty()) out += "  :: " + c.witness;
            out += '\n';
        }
        out += std::string("verdict: ") + (verdict() ? "pass" : "fail") + '\n';
        return out;
    }
};

} // namespace hoe
