#pragma once

// Canonical JSON text shared by documents and machine reports.

#include <json.hpp>

#include <algorithm>
#include <string>

namespace mhgc::detail {

// Two-space indentation; arrays of scalars stay on one line.
inline void write(const nlohmann::json& j, std::string& out, std::size_t depth) {
    const std::string pad(2 * (depth + 1), ' '), close(2 * depth, ' ');
    if (j.is_object()) {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        bool first = true;
        for (const auto& item : j.items()) {
            if (!first) out += ",\n";
            first = false;
            out += pad + nlohmann::json(item.key()).dump() + ": ";
            write(item.value(), out, depth + 1);
        }
        out += "\n" + close + "}";
    } else if (j.is_array()) {
        const bool flat = std::none_of(j.begin(), j.end(), [](const nlohmann::json& x) { return x.is_structured(); });
        if (flat) {
            out += j.dump(-1, ' ', false, nlohmann::json::error_handler_t::strict);
            return;
        }
        out += "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (i) out += ",\n";
            out += pad;
            write(j[i], out, depth + 1);
        }
        out += "\n" + close + "]";
    } else {
        out += j.dump();
    }
}

inline std::string dump(const nlohmann::json& j) {
    std::string out;
    write(j, out, 0);
    return out + "\n";
}

}  // namespace mhgc::detail
