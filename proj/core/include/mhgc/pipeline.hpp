#pragma once

/// @file pipeline.hpp
/// Staged verification with an explicit dependency graph, plus text and
/// machine-readable reports.

#include "mhgc/duality.hpp"
#include "mhgc/io.hpp"
#include "mhgc/modules.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mhgc {

enum class Stage {
    Nondegeneracy,
    Comultiplication,
    Bijectivity,
    Regularity,
    Counit,
    Antipode,
    HopfUnital,
    Cograde,
    Integrals,
    Modular,
    Dual,
    Bidual,
    Modules,
};

std::string_view to_string(Stage s) noexcept;
/// Throws Error(InvalidArgument) for an unknown name.
Stage stage_from_string(std::string_view name);
/// Every stage in execution order.
const std::vector<Stage>& all_stages();
/// Direct prerequisites.
const std::vector<Stage>& prerequisites(Stage s);
/// `requested` plus everything it depends on, in execution order.
std::vector<Stage> with_prerequisites(const std::vector<Stage>& requested);

enum class StageStatus { Passed, Failed, Skipped };

struct StageResult {
    Stage stage;
    StageStatus status = StageStatus::Skipped;
    Report report;
    /// Why the stage was skipped.
    std::string reason;
};

/// Derived structure collected along the way; each field is set once its stage produced it.
struct Artifacts {
    std::vector<std::size_t> support;
    std::optional<CanonicalInverses> inverses;
    std::optional<OppositeMaps> opposite;
    std::optional<Counit> counit;
    std::optional<AntipodeFamily> antipode;
    std::optional<InvariantFamily> phi;
    std::optional<InvariantFamily> psi;
    std::optional<ModularData> modular;
};

struct PipelineOptions {
    /// Empty means every stage.
    std::vector<Stage> stages;
    /// The hat dual is dense; it is only built up to this total dimension.
    std::size_t bidual_limit = 16;
};

struct PipelineResult {
    FiniteGroup group;
    std::vector<StageResult> stages;
    Artifacts artifacts;

    bool passed() const;
    std::optional<Stage> first_failure() const;
    const StageResult* find(Stage s) const;
    /// 0 when every executed stage passed, 1 otherwise.
    int exit_code() const;
};

/// Runs the requested stages and their prerequisites. A stage whose
/// prerequisite failed or was skipped is skipped. Engine errors raised inside
/// a stage become failed checks.
PipelineResult run_pipeline(const PiCoalgebra& pc, const Document* payload = nullptr,
                            const PipelineOptions& options = {});

std::string text_report(const PipelineResult& result);
/// Canonical JSON with sorted keys; a deterministic function of the input.
std::string machine_report(const PipelineResult& result);

/// Artifact renderings shared by the reports and the CLI.
std::string render_counit(const Counit& eps, bool machine);
std::string render_antipode(const FiniteGroup& g, const AntipodeFamily& s, bool machine);
std::string render_integrals(const FiniteGroup& g, const InvariantFamily& phi, const InvariantFamily& psi,
                             bool machine);
std::string render_modular(const FiniteGroup& g, const ModularData& md, bool machine);

}  // namespace mhgc
