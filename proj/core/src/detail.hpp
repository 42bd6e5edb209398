#pragma once

// Internal helpers shared by the engine sources.

#include "mhgc/algebra.hpp"

#include <string>

namespace mhgc::detail {

inline std::string cell_name(const FiniteGroup& g, std::size_t p, std::size_t q) {
    return "(" + g.label(p) + "," + g.label(q) + ")";
}

inline std::string e(std::size_t i) { return "e" + std::to_string(i); }

}  // namespace mhgc::detail
