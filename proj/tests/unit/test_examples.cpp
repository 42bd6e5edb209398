#include "mhgc/error.hpp"
#include "mhgc/examples.hpp"
#include "mhgc/pipeline.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace mhgc;

TEST_SUITE("examples") {
    TEST_CASE("Z2 canonical map on a basis tensor") {
        const auto pc = function_algebra_example(FiniteGroup::cyclic(2));
        // T¹(δ_e⊗δ_g) = δ_g⊗δ_g.
        const Vector in = kron(unit_vector(2, 0), unit_vector(2, 1));
        CHECK(pc.t1(0, 0) * in == kron(unit_vector(2, 1), unit_vector(2, 1)));
        CHECK(pc.t1(1, 1) * in == kron(unit_vector(2, 1), unit_vector(2, 1)));
    }

    TEST_CASE("every mutant fails exactly its target stage") {
        const std::pair<MutantKind, Stage> cases[] = {
            {MutantKind::SwapT1Legs, Stage::Comultiplication},
            {MutantKind::ZeroRow, Stage::Bijectivity},
            {MutantKind::NonSubgroupSupport, Stage::Bijectivity},
            {MutantKind::DegenerateProduct, Stage::Nondegeneracy},
        };
        for (const char* name : {"Z2", "Z3", "S3"}) {
            const auto base = function_algebra_example(FiniteGroup::by_name(name));
            for (const auto& [kind, stage] : cases) {
                CAPTURE(name);
                CAPTURE(to_string(kind));
                const auto res = run_pipeline(mutant_example(base, kind));
                CHECK(res.exit_code() == 1);
                REQUIRE(res.first_failure());
                CHECK(*res.first_failure() == stage);
                // Earlier stages pass, later ones are skipped or unaffected by the defect.
                for (const auto& sr : res.stages) {
                    if (sr.stage == stage) break;
                    CHECK(sr.status == StageStatus::Passed);
                }
            }
        }
    }

    TEST_CASE("mutant names round trip") {
        for (auto kind : {MutantKind::SwapT1Legs, MutantKind::ZeroRow, MutantKind::NonSubgroupSupport,
                          MutantKind::DegenerateProduct})
            CHECK(mutant_kind_from_string(to_string(kind)) == kind);
        CHECK_THROWS_AS(mutant_kind_from_string("nope"), Error);
    }

    TEST_CASE("group algebra of Z2") {
        const auto pc = trivial_group_example(group_algebra_hopf(FiniteGroup::cyclic(2)));
        const auto res = run_pipeline(pc);
        CHECK(res.passed());
        const Vector u = unit_vector(2, 1);
        REQUIRE(res.artifacts.counit);
        CHECK(dot(res.artifacts.counit->eps, u) == 1);
        REQUIRE(res.artifacts.antipode);
        CHECK(res.artifacts.antipode->element(0) * u == u);
    }

    TEST_CASE("function algebra on a point is the scalars") {
        const auto pc = function_algebra_example(FiniteGroup::trivial());
        CHECK(pc.order() == 1);
        CHECK(pc.dim(0) == 1);
        CHECK(pc.t1(0, 0) == Matrix::identity(1));
        CHECK(pc.t2(0, 0) == Matrix::identity(1));
        const auto res = run_pipeline(pc);
        CHECK(res.passed());
        CHECK(res.artifacts.counit->eps == Vector{Scalar(1)});
    }

    TEST_CASE("functions on Z3 pass every stage") {
        const auto res = run_pipeline(function_algebra_example(FiniteGroup::cyclic(3)));
        CHECK(res.passed());
        for (const auto& sr : res.stages) {
            CAPTURE(to_string(sr.stage));
            if (sr.stage == Stage::Modules)
                CHECK(sr.status == StageStatus::Skipped);
            else
                CHECK(sr.status == StageStatus::Passed);
        }
    }

    TEST_CASE("Sweedler algebra over the trivial group") {
        const auto res = run_pipeline(trivial_group_example(sweedler_hopf()));
        CHECK(res.passed());
        REQUIRE(res.artifacts.modular);
        CHECK(res.artifacts.modular->tau == -1);
    }

    TEST_CASE("subgroup-supported family") {
        const auto g = FiniteGroup::symmetric3();
        const auto pc = subgroup_supported_example(g, {0, g.index_of("(12)")});
        for (std::size_t p = 0; p < 6; ++p) CHECK(pc.dim(p) == (p == 0 || p == g.index_of("(12)") ? 6u : 0u));
        CHECK(run_pipeline(pc).passed());
        CHECK_THROWS_AS(subgroup_supported_example(g, {0, g.index_of("(123)")}), Error);
    }
}
