// Command-line front end: verify, derive, convert and generate documents.

#include "mhgc/error.hpp"
#include "mhgc/examples.hpp"
#include "mhgc/io.hpp"
#include "mhgc/parallel.hpp"
#include "mhgc/pipeline.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace {

using namespace mhgc;

constexpr int kExitPass = 0;
constexpr int kExitAxiom = 1;
constexpr int kExitInput = 2;

// Input problems: the document or the flags are unusable.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

PiCoalgebra load_family(const std::string& path, Document* doc_out = nullptr) {
    Document doc;
    try {
        doc = load_file(path);
    } catch (const Error& e) {
        throw InputError(path + ": " + e.what());
    }
    PiCoalgebra pc = doc.coalgebra ? *doc.coalgebra : from_cograded(*doc.cograded);
    if (doc_out) *doc_out = std::move(doc);
    return pc;
}

FiniteGroup resolve_group(const std::string& name_or_path) {
    try {
        return FiniteGroup::by_name(name_or_path);
    } catch (const Error&) {
    }
    if (!std::filesystem::exists(name_or_path))
        throw InputError("'" + name_or_path + "' is neither a group name nor a readable file");
    try {
        std::ifstream in(name_or_path);
        std::stringstream buf;
        buf << in.rdbuf();
        return load_group(buf.str());
    } catch (const Error& e) {
        throw InputError(name_or_path + ": " + e.what());
    }
}

void emit(const std::string& text, const std::string& out) {
    if (out.empty() || out == "-") {
        std::cout << text;
        return;
    }
    try {
        write_file(out, text);
    } catch (const Error& e) {
        throw InputError(e.what());
    }
}

// Runs the pipeline up to `stage`; reports to stderr and returns false if it did not pass.
bool run_until(const PiCoalgebra& pc, Stage stage, PipelineResult& result) {
    PipelineOptions opt;
    opt.stages = {stage};
    result = run_pipeline(pc, nullptr, opt);
    const auto* r = result.find(stage);
    if (r && r->status == StageStatus::Passed) return true;
    std::cerr << text_report(result);
    return false;
}

int cmd_verify(const std::string& file, const std::vector<std::string>& stage_names, const std::string& format) {
    Document doc;
    const PiCoalgebra pc = load_family(file, &doc);
    PipelineOptions opt;
    try {
        for (const auto& s : stage_names) opt.stages.push_back(stage_from_string(s));
    } catch (const Error& e) {
        throw InputError(e.what());
    }
    const auto result = run_pipeline(pc, &doc, opt);
    std::cout << (format == "machine" ? machine_report(result) : text_report(result));
    return result.exit_code();
}

int cmd_derive(const std::string& what, const std::string& file, const std::string& format) {
    const PiCoalgebra pc = load_family(file);
    const bool machine = format == "machine";
    PipelineResult r;
    const auto& g = pc.group();
    if (what == "counit") {
        if (!run_until(pc, Stage::Counit, r)) return kExitAxiom;
        std::cout << render_counit(*r.artifacts.counit, machine);
    } else if (what == "antipode") {
        if (!run_until(pc, Stage::Antipode, r)) return kExitAxiom;
        std::cout << render_antipode(g, *r.artifacts.antipode, machine);
    } else if (what == "integrals") {
        if (!run_until(pc, Stage::Integrals, r) || !r.artifacts.phi) return kExitAxiom;
        std::cout << render_integrals(g, *r.artifacts.phi, *r.artifacts.psi, machine);
    } else {
        if (!run_until(pc, Stage::Modular, r)) return kExitAxiom;
        std::cout << render_modular(g, *r.artifacts.modular, machine);
    }
    return kExitPass;
}

int cmd_dual(const std::string& file, const std::string& out) {
    const PiCoalgebra pc = load_family(file);
    PipelineResult r;
    if (!run_until(pc, Stage::Integrals, r) || !r.artifacts.phi) return kExitAxiom;
    const auto& a = r.artifacts;
    emit(save(hat_dual(pc, *a.phi, *a.psi, *a.counit).coalgebra), out);
    return kExitPass;
}

int cmd_cograde(const std::string& file, const std::string& out) {
    emit(save(to_cograded(load_family(file))), out);
    return kExitPass;
}

int cmd_split(const std::string& file, const std::string& out) {
    Document doc;
    try {
        doc = load_file(file);
    } catch (const Error& e) {
        throw InputError(file + ": " + e.what());
    }
    if (!doc.cograded) throw InputError(file + ": expected a cograded document");
    emit(save(from_cograded(*doc.cograded)), out);
    return kExitPass;
}

HopfAlgebraData hopf_by_name(const std::string& name, const FiniteGroup& g) {
    if (name == "group-algebra") return group_algebra_hopf(g);
    if (name == "function-algebra") return function_algebra_hopf(g);
    if (name == "sweedler") return sweedler_hopf();
    throw InputError("unknown algebra '" + name + "'");
}

int cmd_example(const std::string& kind, const std::string& group, const std::string& algebra,
                const std::string& mutant, const std::string& out) {
    const FiniteGroup g = resolve_group(group);
    PiCoalgebra pc;
    if (kind == "function-algebra") {
        pc = function_algebra_example(g);
    } else if (kind == "trivial-group") {
        pc = trivial_group_example(hopf_by_name(algebra, g));
    } else {
        MutantKind mk;
        try {
            mk = mutant_kind_from_string(mutant);
        } catch (const Error& e) {
            throw InputError(e.what());
        }
        pc = mutant_example(function_algebra_example(g), mk);
    }
    emit(save(pc), out);
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of multiplier Hopf group coalgebras"};
    app.require_subcommand(1);
    unsigned threads = 0;
    app.add_option("--threads", threads, "Worker threads (0 = hardware concurrency)");

    std::string file, out = "-", format = "text", what, kind, group = "Z2", algebra = "group-algebra",
                                  mutant = "swap-t1-legs";
    std::vector<std::string> stages;
    const auto formats = CLI::IsMember({"text", "machine"});

    auto* verify = app.add_subcommand("verify", "Run the axiom pipeline on a document");
    verify->add_option("file", file, "Input document")->required();
    verify->add_option("--stages", stages, "Stages to run; prerequisites are added")->delimiter(',');
    verify->add_option("--report", format, "Report format")->check(formats);

    auto* derive = app.add_subcommand("derive", "Derive and print a structure map");
    derive->add_option("what", what, "counit, antipode, integrals or modular")
        ->required()
        ->check(CLI::IsMember({"counit", "antipode", "integrals", "modular"}));
    derive->add_option("file", file, "Input document")->required();
    derive->add_option("--report", format, "Output format")->check(formats);

    auto* dual = app.add_subcommand("dual", "Write the dual family built from the invariant functionals");
    auto* cograde = app.add_subcommand("cograde", "Write the direct-sum cograded algebra");
    auto* split = app.add_subcommand("split", "Split a cograded document into its family");
    for (auto* sub : {dual, cograde, split}) {
        sub->add_option("file", file, "Input document")->required();
        sub->add_option("-o,--output", out, "Output path, '-' for stdout");
    }

    auto* example = app.add_subcommand("example", "Generate an example document");
    example->add_option("kind", kind, "function-algebra, trivial-group or mutant")
        ->required()
        ->check(CLI::IsMember({"function-algebra", "trivial-group", "mutant"}));
    example->add_option("--group", group, "Group name (trivial, Zn, S3) or group table file");
    example->add_option("--algebra", algebra, "trivial-group: group-algebra, function-algebra or sweedler");
    example->add_option("--mutant", mutant, "mutant: swap-t1-legs, zero-row, non-subgroup-support, degenerate-product");
    example->add_option("-o,--output", out, "Output path, '-' for stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitPass : kExitInput;
    }

    set_thread_count(threads ? threads : std::max(1u, std::thread::hardware_concurrency()));
    try {
        if (*verify) return cmd_verify(file, stages, format);
        if (*derive) return cmd_derive(what, file, format);
        if (*dual) return cmd_dual(file, out);
        if (*cograde) return cmd_cograde(file, out);
        if (*split) return cmd_split(file, out);
        return cmd_example(kind, group, algebra, mutant, out);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitAxiom;
    }
}
