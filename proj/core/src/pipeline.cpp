#include "mhgc/pipeline.hpp"

#include "mhgc/error.hpp"

#include "json_writer.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <sstream>

namespace mhgc {

using nlohmann::json;

namespace {

struct StageInfo {
    Stage stage;
    std::string_view name;
    std::vector<Stage> deps;
};

const std::vector<StageInfo>& stage_table() {
    using S = Stage;
    static const std::vector<StageInfo> table = {
        {S::Nondegeneracy, "nondegeneracy", {}},
        {S::Comultiplication, "comultiplication", {S::Nondegeneracy}},
        {S::Bijectivity, "bijectivity", {S::Nondegeneracy}},
        {S::Regularity, "regularity", {S::Comultiplication, S::Bijectivity}},
        {S::Counit, "counit", {S::Comultiplication, S::Bijectivity}},
        {S::Antipode, "antipode", {S::Counit}},
        {S::HopfUnital, "hopf-unital", {S::Antipode}},
        {S::Cograde, "cograde", {S::Antipode}},
        {S::Integrals, "integrals", {S::Antipode}},
        {S::Modular, "modular", {S::Integrals, S::Regularity}},
        {S::Dual, "dual", {S::Antipode}},
        {S::Bidual, "bidual", {S::Integrals, S::Dual, S::Regularity}},
        {S::Modules, "modules", {S::Antipode, S::Regularity}},
    };
    return table;
}

const StageInfo& info(Stage s) { return stage_table()[static_cast<std::size_t>(s)]; }

std::string_view status_name(StageStatus s) {
    switch (s) {
        case StageStatus::Passed: return "passed";
        case StageStatus::Failed: return "failed";
        case StageStatus::Skipped: return "skipped";
    }
    return "unknown";
}

// Engine errors inside a stage are reported as a failed check.
void guarded(Report& rep, const std::string& check, const std::function<void()>& body) {
    try {
        body();
    } catch (const Error& e) {
        rep.add(check).fail(e.what());
    }
}

bool is_identity_multiplier(const Multiplier& m) { return m.left.is_identity() && m.right.is_identity(); }

json scalars_json(const Vector& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(format_scalar(x));
    return out;
}

json matrix_json(const Matrix& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(scalars_json(m.row(i)));
    return out;
}

std::string scalars_text(const Vector& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + format_scalar(v[i]);
    return out;
}

std::string matrix_text(const Matrix& m, const std::string& indent) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) out += indent + "[" + scalars_text(m.row(i)) + "]\n";
    return out;
}

class Runner {
public:
    Runner(const PiCoalgebra& pc, const Document* payload, const PipelineOptions& opt)
        : pc_(pc), payload_(payload), opt_(opt) {}

    PipelineResult run() {
        PipelineResult out;
        out.group = pc_.group();
        const auto wanted = with_prerequisites(opt_.stages.empty() ? all_stages() : opt_.stages);
        for (Stage s : wanted) {
            StageResult r;
            r.stage = s;
            std::string blocked;
            for (Stage d : prerequisites(s)) {
                const auto* dr = out.find(d);
                if (dr && dr->status != StageStatus::Passed) {
                    blocked = std::string(to_string(d)) + " did not pass";
                    break;
                }
            }
            if (!blocked.empty()) {
                r.reason = blocked;
            } else {
                r.report.title = std::string(to_string(s));
                r.reason = execute(s, r.report);
                if (r.reason.empty()) r.status = r.report.passed() ? StageStatus::Passed : StageStatus::Failed;
            }
            out.stages.push_back(std::move(r));
        }
        out.artifacts = std::move(art_);
        return out;
    }

private:
    // Returns a skip reason, or empty after populating `rep`.
    std::string execute(Stage s, Report& rep) {
        switch (s) {
            case Stage::Nondegeneracy: rep.merge(verify_nondegeneracy(pc_)); break;
            case Stage::Comultiplication: rep.merge(verify_comultiplication(pc_)); break;
            case Stage::Bijectivity: bijectivity(rep); break;
            case Stage::Regularity: regularity(rep); break;
            case Stage::Counit: counit(rep); break;
            case Stage::Antipode: antipode(rep); break;
            case Stage::HopfUnital: rep.merge(check_hopf_unital(pc_, *art_.inverses, *art_.antipode)); break;
            case Stage::Cograde: cograde(rep); break;
            case Stage::Integrals: integrals(rep); break;
            case Stage::Modular: modular(rep); break;
            case Stage::Dual: dual(rep); break;
            case Stage::Bidual: return bidual(rep);
            case Stage::Modules: return modules(rep);
        }
        return {};
    }

    void bijectivity(Report& rep) {
        auto& sup = rep.add("support-subgroup");
        sup.cells = 1;
        try {
            art_.support = support_subgroup(pc_);
            std::string note;
            for (auto p : art_.support) note += (note.empty() ? "" : ",") + pc_.group().label(p);
            sup.note = "{" + note + "}";
        } catch (const Error& e) {
            sup.fail(e.what());
        }
        CanonicalInverses inv;
        rep.merge(verify_bijectivity(pc_, &inv));
        if (rep.passed()) art_.inverses = std::move(inv);
    }

    void regularity(Report& rep) {
        rep.merge(verify_regularity(pc_));
        if (rep.passed()) guarded(rep, "opposite-maps", [&] { art_.opposite = build_opposite(pc_); });
    }

    void counit(Report& rep) {
        guarded(rep, "derive", [&] { art_.counit = derive_counit(pc_, *art_.inverses); });
        if (!art_.counit) return;
        rep.merge(check_counit(pc_, *art_.counit));
        auto& uniq = rep.add("unique");
        uniq.cells = 1;
        const auto sol = solve_counit_identities(pc_);
        if (!sol)
            uniq.fail("counit identities are inconsistent");
        else if (sol->second != 0)
            uniq.fail("solution space has dimension " + std::to_string(sol->second));
    }

    void antipode(Report& rep) {
        guarded(rep, "derive", [&] { art_.antipode = derive_antipode(pc_, *art_.inverses, *art_.counit); });
        if (!art_.antipode) return;
        rep.merge(check_antipode(pc_, *art_.counit, *art_.antipode));
        if (!art_.opposite) {
            rep.skip("inverse", "regularity not established");
            rep.skip("antipode-coproduct-identity", "regularity not established");
            return;
        }
        guarded(rep, "inverse", [&] {
            derive_antipode_inverse(pc_, *art_.opposite, *art_.counit, *art_.antipode);
            rep.add("inverse").cells = pc_.order();
        });
        rep.merge(check_antipode_coproduct_identity(pc_, *art_.opposite, *art_.antipode));
    }

    void cograde(Report& rep) {
        guarded(rep, "construct", [&] {
            const CogradedMHA cm = to_cograded(pc_);
            rep.merge(verify_gamma(cm), "gamma");
            auto& rt = rep.add("round-trip");
            rt.cells = 1;
            const PiCoalgebra back = from_cograded(cm);
            if (!(back == pc_) || save(back) != save(pc_)) rt.fail("split of the direct sum differs from the input");
            rep.merge(componentwise_structure(cm, pc_, *art_.counit, *art_.antipode), "componentwise");
            rep.merge(verify_regularity_transfer(pc_, cm), "regularity");
        });
    }

    void integrals(Report& rep) {
        guarded(rep, "solve", [&] {
            const auto left = solve_invariant(pc_, Side::Left);
            const auto right = solve_invariant(pc_, Side::Right);
            rep.merge(check_uniqueness_faithfulness(pc_, left), "left");
            rep.merge(check_uniqueness_faithfulness(pc_, right), "right");
            if (left.size() != 1 || right.size() != 1) return;
            art_.phi = left.front();
            art_.psi = right.front();
            if (art_.antipode->element_valued())
                rep.merge(check_invariant_spans(pc_, *art_.phi, *art_.psi, *art_.antipode));
            else
                rep.skip("spans", "antipode is not element-valued");
        });
        if (!art_.phi) rep.skip("artifacts", "no unique invariant functional");
    }

    void modular(Report& rep) {
        if (!art_.phi || !art_.psi) {
            rep.add("functionals").fail("integrals produced no functionals");
            return;
        }
        guarded(rep, "derive", [&] {
            auto d = modular_element(pc_, *art_.phi);
            rep.merge(verify_modular_element(pc_, *art_.phi, d, *art_.counit, *art_.antipode), "element");
            art_.modular = modular_automorphisms(pc_, *art_.phi, *art_.psi, *art_.antipode, std::move(d));
            rep.merge(verify_modular_data(pc_, *art_.phi, *art_.psi, *art_.antipode, *art_.modular), "data");
        });
    }

    void dual(Report& rep) {
        guarded(rep, "construct", [&] {
            const DualAlgebra da = dual_algebra(pc_);
            rep.merge(verify_dual_algebra(da, *art_.counit), "algebra");
            if (art_.antipode->element_valued())
                rep.merge(verify_dual_antipode(da, dual_antipode(pc_, *art_.antipode)), "antipode");
            else
                rep.skip("antipode", "antipode is not element-valued");
        });
    }

    std::string bidual(Report& rep) {
        std::size_t total = 0;
        for (std::size_t p = 0; p < pc_.order(); ++p) total += pc_.dim(p);
        if (total > opt_.bidual_limit)
            return "total dimension " + std::to_string(total) + " exceeds the dense limit " +
                   std::to_string(opt_.bidual_limit);
        if (!art_.phi || !art_.psi) {
            rep.add("functionals").fail("integrals produced no functionals");
            return {};
        }
        guarded(rep, "construct", [&] {
            const HatDual h = hat_dual(pc_, *art_.phi, *art_.psi, *art_.counit);
            rep.merge(verify_hat_dual(h));
            rep.merge(bidual_isomorphism(pc_), "bidual");
        });
        return {};
    }

    std::string modules(Report& rep) {
        if (!payload_ || !payload_->module) return "no module payload";
        guarded(rep, "module", [&] {
            rep.merge(verify_module(pc_, *payload_->module), "module");
            if (!payload_->module_algebra) return;
            const auto& ma = *payload_->module_algebra;
            rep.merge(verify_module_algebra(pc_, ma), "algebra");
            rep.merge(check_action_antipode_identities(pc_, *art_.opposite, ma, *art_.antipode), "antipode");
        });
        return {};
    }

    const PiCoalgebra& pc_;
    const Document* payload_;
    const PipelineOptions& opt_;
    Artifacts art_;
};

json report_json(const Report& rep) {
    json checks = json::array();
    for (const auto& c : rep.checks) {
        json w = json::array();
        for (const auto& f : c.failures) w.push_back(f);
        checks.push_back({{"cells", c.cells},
                          {"name", c.name},
                          {"note", c.note},
                          {"status", c.skipped ? "skipped" : (c.passed ? "passed" : "failed")},
                          {"witnesses", w}});
    }
    return checks;
}

json counit_json(const Counit& eps) { return scalars_json(eps.eps); }

json antipode_json(const FiniteGroup& g, const AntipodeFamily& s) {
    json out = json::array();
    for (std::size_t p = 0; p < g.order(); ++p) {
        json e = {{"group-index", p}, {"label", g.label(p)}};
        if (s.elements[p])
            e["matrix"] = matrix_json(*s.elements[p]);
        else
            e["matrix"] = nullptr;
        out.push_back(std::move(e));
    }
    return out;
}

json family_json(const InvariantFamily& f) {
    json out = json::array();
    for (const auto& v : f.values) out.push_back(scalars_json(v));
    return out;
}

json modular_json(const FiniteGroup& g, const ModularData& md) {
    json d = json::array(), sig = json::array(), sigp = json::array();
    bool identity = true;
    for (std::size_t p = 0; p < g.order(); ++p) {
        identity = identity && is_identity_multiplier(md.d[p]);
        d.push_back({{"group-index", p}, {"left", matrix_json(md.d[p].left)}, {"right", matrix_json(md.d[p].right)}});
        sig.push_back(matrix_json(md.sigma_mod[p]));
        sigp.push_back(matrix_json(md.sigma_mod_prime[p]));
    }
    return {{"modular-element", d},
            {"modular-element-is-identity", identity},
            {"sigma", sig},
            {"sigma-prime", sigp},
            {"tau", format_scalar(md.tau)}};
}

}  // namespace

std::string_view to_string(Stage s) noexcept { return info(s).name; }

Stage stage_from_string(std::string_view name) {
    for (const auto& i : stage_table())
        if (i.name == name) return i.stage;
    throw Error(ErrorCode::InvalidArgument, "unknown stage '" + std::string(name) + "'");
}

const std::vector<Stage>& all_stages() {
    static const std::vector<Stage> all = [] {
        std::vector<Stage> v;
        for (const auto& i : stage_table()) v.push_back(i.stage);
        return v;
    }();
    return all;
}

const std::vector<Stage>& prerequisites(Stage s) { return info(s).deps; }

std::vector<Stage> with_prerequisites(const std::vector<Stage>& requested) {
    std::vector<bool> need(stage_table().size(), false);
    std::function<void(Stage)> mark = [&](Stage s) {
        if (need[static_cast<std::size_t>(s)]) return;
        need[static_cast<std::size_t>(s)] = true;
        for (Stage d : prerequisites(s)) mark(d);
    };
    for (Stage s : requested) mark(s);
    std::vector<Stage> out;
    for (Stage s : all_stages())
        if (need[static_cast<std::size_t>(s)]) out.push_back(s);
    return out;
}

bool PipelineResult::passed() const {
    return std::none_of(stages.begin(), stages.end(),
                        [](const StageResult& r) { return r.status == StageStatus::Failed; });
}

std::optional<Stage> PipelineResult::first_failure() const {
    for (const auto& r : stages)
        if (r.status == StageStatus::Failed) return r.stage;
    return std::nullopt;
}

const StageResult* PipelineResult::find(Stage s) const {
    for (const auto& r : stages)
        if (r.stage == s) return &r;
    return nullptr;
}

int PipelineResult::exit_code() const { return passed() ? 0 : 1; }

PipelineResult run_pipeline(const PiCoalgebra& pc, const Document* payload, const PipelineOptions& options) {
    return Runner(pc, payload, options).run();
}

std::string render_counit(const Counit& eps, bool machine) {
    if (machine) return detail::dump(json{{"counit", counit_json(eps)}});
    return "counit: " + scalars_text(eps.eps) + "\n";
}

std::string render_antipode(const FiniteGroup& g, const AntipodeFamily& s, bool machine) {
    if (machine) return detail::dump(json{{"antipode", antipode_json(g, s)}});
    std::string out;
    for (std::size_t p = 0; p < g.order(); ++p) {
        out += "S_" + g.label(p) + ":";
        if (!s.elements[p]) {
            out += " not element-valued\n";
            continue;
        }
        out += "\n" + matrix_text(*s.elements[p], "  ");
    }
    return out;
}

std::string render_integrals(const FiniteGroup& g, const InvariantFamily& phi, const InvariantFamily& psi,
                             bool machine) {
    if (machine) return detail::dump(json{{"phi", family_json(phi)}, {"psi", family_json(psi)}});
    std::string out;
    for (std::size_t p = 0; p < g.order(); ++p) out += "phi_" + g.label(p) + ": " + scalars_text(phi.values[p]) + "\n";
    for (std::size_t p = 0; p < g.order(); ++p) out += "psi_" + g.label(p) + ": " + scalars_text(psi.values[p]) + "\n";
    return out;
}

std::string render_modular(const FiniteGroup& g, const ModularData& md, bool machine) {
    if (machine) return detail::dump(modular_json(g, md));
    std::string out;
    bool identity = true;
    for (const auto& d : md.d) identity = identity && is_identity_multiplier(d);
    if (identity) {
        out += "D = identity\n";
    } else {
        for (std::size_t p = 0; p < g.order(); ++p) out += "D_" + g.label(p) + ":\n" + matrix_text(md.d[p].left, "  ");
    }
    for (std::size_t p = 0; p < g.order(); ++p) {
        out += "sigma_" + g.label(p) + (md.sigma_mod[p].is_identity() ? " = identity\n" : ":\n" + matrix_text(md.sigma_mod[p], "  "));
        out += "sigma'_" + g.label(p) +
               (md.sigma_mod_prime[p].is_identity() ? " = identity\n" : ":\n" + matrix_text(md.sigma_mod_prime[p], "  "));
    }
    out += "tau = " + format_scalar(md.tau) + "\n";
    return out;
}

std::string text_report(const PipelineResult& result) {
    std::ostringstream out;
    for (const auto& r : result.stages) {
        out << "stage " << to_string(r.stage) << ": ";
        switch (r.status) {
            case StageStatus::Passed: out << "PASS\n"; break;
            case StageStatus::Failed: out << "FAIL\n"; break;
            case StageStatus::Skipped: out << "SKIP (" << r.reason << ")\n"; break;
        }
        Report body = r.report;
        body.title.clear();
        out << body.to_text();
    }
    const auto& a = result.artifacts;
    const auto& g = result.group;
    out << "artifacts\n";
    if (a.counit) out << "  " << render_counit(*a.counit, false);
    if (a.modular) {
        std::istringstream lines(render_modular(g, *a.modular, false));
        for (std::string line; std::getline(lines, line);)
            if (line.rfind("D ", 0) == 0 || line.rfind("tau", 0) == 0) out << "  " << line << "\n";
    }
    if (const auto f = result.first_failure())
        out << "result: FAIL (first failing stage: " << to_string(*f) << ")\n";
    else
        out << "result: PASS\n";
    return out.str();
}

std::string machine_report(const PipelineResult& result) {
    const auto& g = result.group;
    json stages = json::array();
    for (const auto& r : result.stages)
        stages.push_back({{"checks", report_json(r.report)},
                          {"name", to_string(r.stage)},
                          {"reason", r.reason},
                          {"status", status_name(r.status)}});
    const auto& a = result.artifacts;
    json art = json::object();
    json sup = json::array();
    for (auto p : a.support) sup.push_back(g.label(p));
    art["support"] = sup;
    if (a.counit) art["counit"] = counit_json(*a.counit);
    if (a.antipode) art["antipode"] = antipode_json(g, *a.antipode);
    if (a.phi) art["phi"] = family_json(*a.phi);
    if (a.psi) art["psi"] = family_json(*a.psi);
    if (a.modular) art["modular"] = modular_json(g, *a.modular);
    const auto f = result.first_failure();
    const json j = {{"artifacts", art},
                    {"exit-code", result.exit_code()},
                    {"first-failure", f ? json(std::string(to_string(*f))) : json(nullptr)},
                    {"format-version", kFormatVersion},
                    {"group", {{"labels", g.labels()}, {"order", g.order()}}},
                    {"passed", result.passed()},
                    {"stages", stages}};
    return detail::dump(j);
}

}  // namespace mhgc
