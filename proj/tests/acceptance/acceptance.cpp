// Acceptance run: one line per criterion. `--criterion N` runs a single one.
// Exit status is 0 only if every selected criterion passed.

#include "mhgc/cograded.hpp"
#include "mhgc/duality.hpp"
#include "mhgc/error.hpp"
#include "mhgc/examples.hpp"
#include "mhgc/io.hpp"
#include "mhgc/modules.hpp"
#include "mhgc/parallel.hpp"
#include "mhgc/pipeline.hpp"

#include "oracles.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace mhgc;

namespace {

const char* const kGroups[] = {"Z2", "Z3", "S3"};

// Collects the first few problems of a criterion.
class Verdict {
public:
    void require(bool ok, const std::string& what) {
        if (ok) return;
        ++failures_;
        if (failures_ <= 3) problems_.push_back(what);
    }
    void require(const Report& rep, const std::string& what) {
        if (rep.passed()) return;
        const auto first = rep.first_failure();
        require(false, what + (first ? ": " + *first : std::string()));
    }
    void note(const std::string& s) { notes_.push_back(s); }
    bool passed() const { return failures_ == 0; }

    std::string detail() const {
        std::ostringstream out;
        const auto& items = passed() ? notes_ : problems_;
        for (std::size_t i = 0; i < items.size(); ++i) out << (i ? "; " : "") << items[i];
        if (failures_ > problems_.size()) out << "; +" << failures_ - problems_.size() << " more";
        return out.str();
    }

private:
    std::size_t failures_ = 0;
    std::vector<std::string> problems_, notes_;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f s", s);
    return buf;
}

struct Derived {
    PiCoalgebra pc;
    CanonicalInverses inv;
    Counit eps;
    AntipodeFamily s;
};

Derived derive_all(PiCoalgebra pc) {
    Derived d{std::move(pc), {}, {}, {}};
    d.inv = invert_canonical_maps(d.pc);
    d.eps = derive_counit(d.pc, d.inv);
    d.s = derive_antipode(d.pc, d.inv, d.eps);
    return d;
}

Verdict closed_form_counit() {
    Verdict v;
    for (const char* name : kGroups) {
        const auto g = FiniteGroup::by_name(name);
        const auto pc = function_algebra_example(g);
        const auto t0 = std::chrono::steady_clock::now();
        const auto eps = derive_counit(pc);
        const double t = seconds_since(t0);
        v.require(eps.eps == oracle::counit(g), std::string(name) + ": counit differs from evaluation at e");
        v.require(t < 1.0, std::string(name) + ": took " + fmt_seconds(t));
        v.note(std::string(name) + " " + fmt_seconds(t));
    }
    return v;
}

Verdict closed_form_antipode() {
    Verdict v;
    std::size_t cells = 0;
    for (const char* name : kGroups) {
        const auto g = FiniteGroup::by_name(name);
        const auto d = derive_all(function_algebra_example(g));
        v.require(d.s.element_valued(), std::string(name) + ": antipode is not element-valued");
        if (!d.s.element_valued()) continue;
        for (std::size_t p = 0; p < g.order(); ++p) {
            const Matrix expected = oracle::antipode(g, p);
            for (std::size_t x = 0; x < g.order(); ++x, ++cells)
                v.require(d.s.element(p).column(x) == expected.column(x),
                          std::string(name) + ": S_" + g.label(p) + " on basis " + g.label(x));
        }
    }
    v.note(std::to_string(cells) + " (p, basis) cells");
    return v;
}

Verdict closed_form_inverses() {
    Verdict v;
    for (const char* name : kGroups) {
        const auto g = FiniteGroup::by_name(name);
        const auto pc = function_algebra_example(g);
        CanonicalInverses inv;
        v.require(verify_bijectivity(pc, &inv), std::string(name) + ": bijectivity");
        std::size_t r1_bad = 0, r2_bad = 0, true_bad = 0;
        for (std::size_t a = 0; a < g.order(); ++a)
            for (std::size_t b = 0; b < g.order(); ++b) {
                r1_bad += inv.t1(a, b) != oracle::r1(g, b);
                r2_bad += inv.t2(a, b) != oracle::r2_published(g, b);
                true_bad += !(inv.t2(a, b) * pc.t2(a, b)).is_identity();
            }
        const std::size_t blocks = g.order() * g.order();
        v.require(r1_bad == 0, std::string(name) + ": R1 differs on " + std::to_string(r1_bad) + "/" +
                                   std::to_string(blocks) + " blocks");
        v.require(r2_bad == 0, std::string(name) + ": R2(f)(s,t) = f(s, b s^-1 t b^-1) differs on " +
                                   std::to_string(r2_bad) + "/" + std::to_string(blocks) +
                                   " blocks; computed inverse of T2 is f(s, b^-1 s^-1 b t)");
        v.require(true_bad == 0, std::string(name) + ": computed R2 is not a left inverse of T2");
        v.note(std::string(name) + " " + std::to_string(blocks) + " blocks");
    }
    return v;
}

Verdict identity_suites() {
    Verdict v;
    for (const char* name : kGroups) {
        const std::string n = name;
        const auto d = derive_all(function_algebra_example(FiniteGroup::by_name(name)));
        v.require(check_counit(d.pc, d.eps), n + ": counit identities");
        v.require(check_antipode(d.pc, d.eps, d.s), n + ": antipode identities");
        v.require(check_antipode_coproduct_identity(d.pc, build_opposite(d.pc), d.s), n + ": antipode-coproduct");
        v.require(check_hopf_unital(d.pc, d.inv, d.s), n + ": unital inverse forms");
    }
    const std::pair<MutantKind, Stage> mutants[] = {
        {MutantKind::SwapT1Legs, Stage::Comultiplication},
        {MutantKind::ZeroRow, Stage::Bijectivity},
        {MutantKind::NonSubgroupSupport, Stage::Bijectivity},
        {MutantKind::DegenerateProduct, Stage::Nondegeneracy},
    };
    std::size_t runs = 0;
    for (const char* name : kGroups) {
        const auto base = function_algebra_example(FiniteGroup::by_name(name));
        for (const auto& [kind, stage] : mutants) {
            const auto res = run_pipeline(mutant_example(base, kind));
            const auto first = res.first_failure();
            const std::string what = std::string(name) + " " + to_string(kind);
            v.require(first && *first == stage,
                      what + ": first failure " + (first ? std::string(to_string(*first)) : "none") + ", expected " +
                          std::string(to_string(stage)));
            for (const auto& sr : res.stages) {
                if (sr.stage == stage) break;
                v.require(sr.status == StageStatus::Passed, what + ": stage " + std::string(to_string(sr.stage)) +
                                                                " did not pass");
            }
            ++runs;
        }
    }
    v.note("3 groups x 4 suites, " + std::to_string(runs) + " mutant runs");
    return v;
}

Verdict correspondence() {
    Verdict v;
    for (const char* name : {"trivial", "Z2", "Z3", "S3"}) {
        const std::string n = name;
        const auto d = derive_all(function_algebra_example(FiniteGroup::by_name(name)));
        const auto cm = to_cograded(d.pc);
        const auto back = from_cograded(cm);
        v.require(back == d.pc && save(back) == save(d.pc), n + ": round trip not byte-exact");
        v.require(save(*load(save(cm)).cograded) == save(cm), n + ": cograded text round trip");
        v.require(componentwise_structure(cm, d.pc, d.eps, d.s), n + ": componentwise counit/antipode");
        v.require(verify_regularity_transfer(d.pc, cm), n + ": regularity verdicts");
    }
    const auto broken = mutant_example(function_algebra_example(FiniteGroup::cyclic(2)), MutantKind::ZeroRow);
    v.require(verify_regularity_transfer(broken, to_cograded(broken)), "irregular family: verdicts disagree");
    v.note("trivial, Z2, Z3, S3 plus an irregular family");
    return v;
}

Verdict integrals() {
    Verdict v;
    for (const char* name : kGroups) {
        const std::string n = name;
        const auto t0 = std::chrono::steady_clock::now();
        const auto d = derive_all(function_algebra_example(FiniteGroup::by_name(name)));
        const auto left = solve_invariant(d.pc, Side::Left);
        const auto right = solve_invariant(d.pc, Side::Right);
        v.require(left.size() == 1 && right.size() == 1, n + ": invariant space is not one-dimensional");
        if (left.size() != 1 || right.size() != 1) continue;
        const auto counting = oracle::counting(d.pc.group().order());
        for (std::size_t p = 0; p < d.pc.order(); ++p)
            v.require(left[0].values[p] == counting && right[0].values[p] == counting,
                      n + ": not the counting functional at " + d.pc.group().label(p));
        v.require(check_uniqueness_faithfulness(d.pc, left), n + ": uniqueness/faithfulness");
        const auto dm = modular_element(d.pc, left[0]);
        const auto md = modular_automorphisms(d.pc, left[0], right[0], d.s, dm);
        for (std::size_t p = 0; p < d.pc.order(); ++p) {
            v.require(dm[p] == identity_multiplier(d.pc.dim(p)), n + ": D is not the identity");
            v.require(md.sigma_mod[p].is_identity() && md.sigma_mod_prime[p].is_identity(),
                      n + ": modular automorphisms are not the identity");
        }
        v.require(md.tau == 1, n + ": tau = " + md.tau.get_str());
        v.require(verify_modular_element(d.pc, left[0], dm, d.eps, d.s), n + ": modular element identities");
        v.require(verify_modular_data(d.pc, left[0], right[0], d.s, md), n + ": modular data identities");
        const double t = seconds_since(t0);
        if (n == "S3") {
            v.require(t < 30.0, "S3: took " + fmt_seconds(t));
            v.note("S3 " + fmt_seconds(t));
        }
    }
    return v;
}

Verdict duality() {
    Verdict v;
    for (const char* name : kGroups) {
        const std::string n = name;
        const auto d = derive_all(function_algebra_example(FiniteGroup::by_name(name)));
        const auto dual = dual_algebra(d.pc);
        v.require(verify_dual_algebra(dual, d.eps), n + ": dual algebra");
        v.require(verify_dual_antipode(dual, dual_antipode(d.pc, d.s)), n + ": dual antipode");
    }
    for (const char* name : {"Z2", "Z3"})
        v.require(bidual_isomorphism(function_algebra_example(FiniteGroup::by_name(name))),
                  std::string(name) + ": bidual");
    v.note("dual algebra and S* on Z2, Z3, S3; bidual on Z2, Z3");
    return v;
}

Verdict support_subgroup_fixture() {
    Verdict v;
    const auto g = FiniteGroup::symmetric3();
    const std::vector<std::size_t> h{g.identity(), g.index_of("(12)")};
    const auto sub = subgroup_supported_example(g, h);
    const auto res = run_pipeline(sub);
    v.require(res.passed(), "{e,(12)} fixture: " +
                                (res.first_failure() ? std::string(to_string(*res.first_failure())) : "") +
                                " failed");
    v.require(support_subgroup(sub) == h, "support_subgroup does not return {e,(12)}");
    const auto bad = mutant_example(function_algebra_example(g), MutantKind::NonSubgroupSupport);
    bool rejected = false;
    try {
        support_subgroup(bad);
    } catch (const Error& e) {
        rejected = e.code() == ErrorCode::NotASubgroup;
    }
    v.require(rejected, "non-subgroup support accepted by support_subgroup");
    const auto bad_res = run_pipeline(bad);
    v.require(!bad_res.passed(), "non-subgroup support passes the pipeline");
    v.note("{e,(12)} passes; non-subgroup support rejected");
    return v;
}

Verdict modules() {
    Verdict v;
    for (const char* name : kGroups) {
        const std::string n = name;
        const auto d = derive_all(function_algebra_example(FiniteGroup::by_name(name)));
        const auto triv = trivial_module_algebra(d.pc, d.eps);
        v.require(verify_module_algebra(d.pc, triv), n + ": trivial module algebra");
        v.require(check_action_antipode_identities(d.pc, build_opposite(d.pc), triv, d.s),
                  n + ": action identities");
    }
    const auto pc = function_algebra_example(FiniteGroup::cyclic(2));
    const auto rep = verify_module(pc, reversed_action_mutant(regular_module(pc), 0));
    const auto* assoc = rep.find("associativity");
    v.require(assoc && !assoc->passed && !assoc->failures.empty(), "mutant action: no associativity witness");
    const auto reg = regular_module(pc);
    const auto* unital = verify_module(pc, tensor_module(pc, reg, reg)).find("unital");
    v.require(unital && unital->passed, "Z2: tensor of unital modules is not unital");
    if (assoc && !assoc->failures.empty()) v.note("mutant witness " + assoc->failures.front());
    return v;
}

Verdict determinism() {
    Verdict v;
    const unsigned before = thread_count();
    const std::pair<const char*, std::vector<unsigned>> plan[] = {
        {"Z2", {1, 2, 3, 8}}, {"Z3", {1, 2, 3, 8}}, {"S3", {1, 4}}};
    for (const auto& [name, threads] : plan) {
        const auto pc = function_algebra_example(FiniteGroup::by_name(name));
        std::string reference;
        for (unsigned t : threads)
            for (int rep = 0; rep < 2; ++rep) {
                set_thread_count(t);
                const std::string report = machine_report(run_pipeline(pc));
                if (reference.empty())
                    reference = report;
                else
                    v.require(report == reference,
                              std::string(name) + ": report differs with " + std::to_string(t) + " threads");
            }
        const std::string text = save(pc);
        v.require(save(load(text)) == text, std::string(name) + ": save/load not byte-exact");
    }
    set_thread_count(before);
    const auto sw = trivial_group_example(sweedler_hopf());
    v.require(save(load(save(sw))) == save(sw), "Sweedler: save/load not byte-exact");
    v.note("thread counts 1-8, repeated runs");
    return v;
}

struct Criterion {
    int number;
    const char* title;
    std::function<Verdict()> run;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance criteria"};
    int only = 0;
    app.add_option("--criterion", only, "Run a single criterion")->check(CLI::Range(1, 10));
    CLI11_PARSE(app, argc, argv);

    const std::vector<Criterion> criteria = {
        {1, "closed-form counit", closed_form_counit},
        {2, "closed-form antipode", closed_form_antipode},
        {3, "closed-form inverses of T1, T2", closed_form_inverses},
        {4, "identity suites and mutants", identity_suites},
        {5, "cograded correspondence", correspondence},
        {6, "integrals and modular data", integrals},
        {7, "duality", duality},
        {8, "support subgroup", support_subgroup_fixture},
        {9, "module actions", modules},
        {10, "determinism and round trips", determinism},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        if (only && c.number != only) continue;
        Verdict v;
        try {
            v = c.run();
        } catch (const Error& e) {
            v.require(false, std::string("engine error ") + std::string(to_string(e.code())) + ": " + e.message());
        }
        failed += !v.passed();
        std::printf("criterion %d: %s  %s (%s)\n", c.number, v.passed() ? "PASS" : "FAIL", c.title,
                    v.detail().c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
