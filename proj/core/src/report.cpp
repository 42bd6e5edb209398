#include "mhgc/report.hpp"

#include <sstream>

namespace mhgc {

CheckResult& Report::add(std::string name) {
    CheckResult c;
    c.name = std::move(name);
    checks.push_back(std::move(c));
    return checks.back();
}

void Report::skip(std::string name, std::string reason) {
    auto& c = add(std::move(name));
    c.skipped = true;
    c.note = std::move(reason);
}

void Report::merge(const Report& other, const std::string& prefix) {
    for (const auto& c : other.checks) {
        checks.push_back(c);
        if (!prefix.empty()) checks.back().name = prefix + "." + c.name;
    }
}

bool Report::passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

const CheckResult* Report::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

std::optional<std::string> Report::first_failure() const {
    for (const auto& c : checks) {
        if (c.passed) continue;
        return c.name + ": " + (c.failures.empty() ? c.note : c.failures.front());
    }
    return std::nullopt;
}

std::string Report::to_text() const {
    std::ostringstream out;
    if (!title.empty()) out << title << "\n";
    for (const auto& c : checks) {
        out << "  " << (c.skipped ? "SKIP" : (c.passed ? "PASS" : "FAIL")) << "  " << c.name;
        if (c.cells) out << " [" << c.cells << (c.cells == 1 ? " cell]" : " cells]");
        if (!c.note.empty()) out << " (" << c.note << ")";
        out << "\n";
        for (const auto& f : c.failures) out << "        " << f << "\n";
    }
    return out.str();
}

}  // namespace mhgc
