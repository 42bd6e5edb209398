#pragma once

#include <cstddef>
#include <deque>
#include <optional>
#include <string>
#include <vector>

namespace mhgc {

/// Outcome of one quantified identity. `failures` holds at most one witness per cell,
/// in cell order.
struct CheckResult {
    std::string name;
    bool passed = true;
    bool skipped = false;
    std::size_t cells = 0;
    std::vector<std::string> failures;
    std::string note;

    void fail(std::string witness) {
        passed = false;
        failures.push_back(std::move(witness));
    }
};

/// References returned by add() stay valid while further checks are added.
struct Report {
    std::string title;
    std::deque<CheckResult> checks;

    CheckResult& add(std::string name);
    void skip(std::string name, std::string reason);
    void merge(const Report& other, const std::string& prefix = {});

    bool passed() const;
    const CheckResult* find(const std::string& name) const;
    /// "check: witness" for the first failing check, if any.
    std::optional<std::string> first_failure() const;
    std::string to_text() const;
};

}  // namespace mhgc
