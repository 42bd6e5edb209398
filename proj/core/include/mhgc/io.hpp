#pragma once

/// @file io.hpp
/// Canonical text documents for families, cograded algebras and module payloads.
///
/// Documents are JSON with sorted keys, sparse entries sorted by index and
/// exact rationals written as "num/den" strings, so save(load(text)) == text
/// for every saved document.

#include "mhgc/cograded.hpp"
#include "mhgc/modules.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace mhgc {

inline constexpr int kFormatVersion = 1;

/// A loaded document. Exactly one of `coalgebra` and `cograded` is set. A
/// module payload is only allowed next to a coalgebra; when it carries a
/// product, `module_algebra` is set and its module equals `module`.
struct Document {
    std::optional<PiCoalgebra> coalgebra;
    std::optional<CogradedMHA> cograded;
    std::optional<AModule> module;
    std::optional<AModuleAlgebra> module_algebra;
};

std::string save(const PiCoalgebra& pc);
std::string save(const CogradedMHA& cm);
std::string save(const Document& doc);

/// Throws Error(ParseError) with the offending field path (or line and column
/// for malformed JSON), Error(BadRational), Error(DimensionMismatch) naming
/// the cell, or Error(NotGraded) for a module algebra without a graded product.
Document load(std::string_view text);
Document load_file(const std::filesystem::path& path);

/// A bare group block: {"identity", "order", "table", optional "labels"}.
FiniteGroup load_group(std::string_view text);

/// Throws Error(ParseError) if the file cannot be written.
void write_file(const std::filesystem::path& path, const std::string& text);

}  // namespace mhgc
