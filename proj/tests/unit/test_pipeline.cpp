#include "mhgc/error.hpp"
#include "mhgc/examples.hpp"
#include "mhgc/parallel.hpp"
#include "mhgc/pipeline.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>

using namespace mhgc;

TEST_SUITE("pipeline") {
    TEST_CASE("Z2 passes with trivial modular data") {
        const auto res = run_pipeline(function_algebra_example(FiniteGroup::cyclic(2)));
        CHECK(res.exit_code() == 0);
        CHECK_FALSE(res.first_failure());
        const std::string text = text_report(res);
        CHECK(text.find("tau = 1") != std::string::npos);
        CHECK(text.find("D = identity") != std::string::npos);
        CHECK(text.find("result: PASS") != std::string::npos);
    }

    TEST_CASE("coassociativity mutant") {
        const auto res = run_pipeline(mutant_example(function_algebra_example(FiniteGroup::cyclic(2)),
                                                     MutantKind::SwapT1Legs));
        CHECK(res.exit_code() == 1);
        REQUIRE(res.first_failure());
        CHECK(*res.first_failure() == Stage::Comultiplication);
        CHECK(text_report(res).find("first failing stage: comultiplication") != std::string::npos);
        // Everything downstream of the failure is skipped.
        const auto* counit = res.find(Stage::Counit);
        REQUIRE(counit);
        CHECK(counit->status == StageStatus::Skipped);
    }

    TEST_CASE("requested stages pull in their prerequisites") {
        const auto stages = with_prerequisites({Stage::Modular});
        for (Stage s : {Stage::Nondegeneracy, Stage::Comultiplication, Stage::Bijectivity, Stage::Regularity,
                        Stage::Counit, Stage::Antipode, Stage::Integrals, Stage::Modular})
            CHECK(std::find(stages.begin(), stages.end(), s) != stages.end());
        CHECK(std::find(stages.begin(), stages.end(), Stage::Dual) == stages.end());
        CHECK(std::is_sorted(stages.begin(), stages.end()));
        PipelineOptions opt;
        opt.stages = {Stage::Counit};
        const auto res = run_pipeline(function_algebra_example(FiniteGroup::cyclic(2)), nullptr, opt);
        CHECK(res.passed());
        CHECK(res.find(Stage::Bijectivity));
        CHECK_FALSE(res.find(Stage::Antipode));
    }

    TEST_CASE("stage names") {
        for (Stage s : all_stages()) CHECK(stage_from_string(to_string(s)) == s);
        CHECK_THROWS_AS(stage_from_string("everything"), Error);
    }

    TEST_CASE("machine report is deterministic across thread counts") {
        const auto pc = function_algebra_example(FiniteGroup::symmetric3());
        set_thread_count(1);
        const auto res = run_pipeline(pc);
        const std::string one = machine_report(res);
        set_thread_count(4);
        const std::string four = machine_report(run_pipeline(pc));
        set_thread_count(1);
        CHECK(one == four);
        CHECK(one.find("\"exit-code\": 0") != std::string::npos);
        // Total dimension 36 is over the dense limit.
        const auto* bd = res.find(Stage::Bidual);
        REQUIRE(bd);
        CHECK(bd->status == StageStatus::Skipped);
        CHECK(bd->reason.find("exceeds") != std::string::npos);
        CHECK(res.passed());
        const auto z2 = function_algebra_example(FiniteGroup::cyclic(2));
        CHECK(machine_report(run_pipeline(z2)) == machine_report(run_pipeline(z2)));
    }

    TEST_CASE("S3 antipode is six permutation matrices") {
        const auto g = FiniteGroup::symmetric3();
        PipelineOptions opt;
        opt.stages = {Stage::Antipode};
        const auto res = run_pipeline(function_algebra_example(g), nullptr, opt);
        REQUIRE(res.artifacts.antipode);
        const auto& s = *res.artifacts.antipode;
        REQUIRE(s.element_valued());
        for (std::size_t p = 0; p < 6; ++p) {
            CHECK(s.element(p).rows() == 6);
            CHECK(oracle::is_permutation_matrix(s.element(p)));
        }
        CHECK(render_antipode(g, s, false).find("(123)") != std::string::npos);
    }

    TEST_CASE("module payload is verified") {
        const auto pc = function_algebra_example(FiniteGroup::cyclic(2));
        Document doc;
        doc.coalgebra = pc;
        doc.module = reversed_action_mutant(regular_module(pc), 0);
        const auto res = run_pipeline(pc, &doc);
        REQUIRE(res.first_failure());
        CHECK(*res.first_failure() == Stage::Modules);
        doc.module = regular_module(pc);
        CHECK(run_pipeline(pc, &doc).passed());
    }
}
