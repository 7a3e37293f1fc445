/*
   Copyright 2026 The torusmod Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef TORUSMOD_REPORT_HPP
#define TORUSMOD_REPORT_HPP

// Check reports shared by the validators, the module verifier and the CLI.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace torusmod {

enum class Status { pass, fail, inconclusive };

inline const char* status_name(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::inconclusive: return "inconclusive";
    }
    return "?";
}

/// Ordered key/value text pairs describing the first offending instance.
using Witness = std::vector<std::pair<std::string, std::string>>;

struct Check {
    std::string name;
    Status status = Status::pass;
    std::string summary;
    std::size_t tested = 0;
    std::size_t failures = 0;
    Witness witness;
    std::optional<double> seconds;
};

/// Accumulates one named check: counts instances and keeps the first witness.
class CheckBuilder {
public:
    explicit CheckBuilder(std::string name) { c_.name = std::move(name); }

    void pass() { ++c_.tested; }
    void fail(Witness w) {
        ++c_.tested;
        if (c_.failures++ == 0) c_.witness = std::move(w);
    }
    void record(bool ok, const std::function<Witness()>& w) { ok ? pass() : fail(w()); }
    bool failed() const noexcept { return c_.failures != 0; }

    /// Summary is "<tested> instances, <failures> failed", plus "; note" if given.
    Check done(const std::string& note = {}) && {
        c_.status = c_.failures ? Status::fail : Status::pass;
        c_.summary = std::to_string(c_.tested) + " instances, " + std::to_string(c_.failures) + " failed";
        if (!note.empty()) c_.summary += "; " + note;
        return std::move(c_);
    }

private:
    Check c_;
};

class Report {
public:
    void add(Check c) { checks_.push_back(std::move(c)); }
    void merge(const Report& o) { checks_.insert(checks_.end(), o.checks_.begin(), o.checks_.end()); }

    const std::vector<Check>& checks() const noexcept { return checks_; }
    bool passed() const {
        return std::none_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.status == Status::fail; });
    }
    const Check* find(const std::string& name) const {
        for (const auto& c : checks_)
            if (c.name == name) return &c;
        return nullptr;
    }
    std::vector<const Check*> failures() const {
        std::vector<const Check*> out;
        for (const auto& c : checks_)
            if (c.status == Status::fail) out.push_back(&c);
        return out;
    }

    /// Checks in name order (stable for equal names).
    std::vector<Check> sorted() const {
        std::vector<Check> out = checks_;
        std::stable_sort(out.begin(), out.end(), [](const Check& a, const Check& b) { return a.name < b.name; });
        return out;
    }

    std::string to_text() const {
        std::string s;
        for (const auto& c : sorted()) {
            s += std::string(status_name(c.status)) + "  " + c.name + "  " + c.summary + "\n";
            for (const auto& [k, v] : c.witness) s += "      " + k + ": " + v + "\n";
        }
        return s;
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& c : sorted()) {
            nlohmann::ordered_json j;
            j["name"] = c.name;
            j["status"] = status_name(c.status);
            j["summary"] = c.summary;
            j["tested"] = c.tested;
            j["failures"] = c.failures;
            if (!c.witness.empty()) {
                nlohmann::ordered_json w = nlohmann::ordered_json::object();
                for (const auto& [k, v] : c.witness) w[k] = v;
                j["witness"] = w;
            }
            if (c.seconds) j["seconds"] = *c.seconds;
            arr.push_back(std::move(j));
        }
        return arr;
    }

private:
    std::vector<Check> checks_;
};

}  // namespace torusmod

#endif  // TORUSMOD_REPORT_HPP
