#include "mhgc/derived.hpp"
#include "mhgc/error.hpp"
#include "mhgc/examples.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace mhgc;

namespace {

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

}  // namespace

TEST_SUITE("derived-structure") {
    TEST_CASE("counit of the function-algebra family is evaluation at the identity") {
        for (const char* name : {"Z2", "Z3", "S3"}) {
            CAPTURE(name);
            const auto g = FiniteGroup::by_name(name);
            const auto d = derive_all(function_algebra_example(g));
            CHECK(d.eps.eps == oracle::counit(g));
            CHECK(check_counit(d.pc, d.eps).passed());
            const auto sol = solve_counit_identities(d.pc);
            REQUIRE(sol);
            CHECK(sol->first == oracle::counit(g));
            CHECK(sol->second == 0);
        }
        const auto d = derive_all(function_algebra_example(FiniteGroup::cyclic(2)));
        CHECK(d.eps.eps[1] == 0);
    }

    TEST_CASE("counit of a single Hopf algebra matches the known one") {
        const auto g = FiniteGroup::cyclic(2);
        const auto ga = derive_all(trivial_group_example(group_algebra_hopf(g)));
        CHECK(ga.eps.eps == Vector{Scalar(1), Scalar(1)});
        CHECK(ga.s.element(0) == Matrix::identity(2));
        const auto fa = derive_all(trivial_group_example(function_algebra_hopf(FiniteGroup::cyclic(3))));
        CHECK(fa.eps.eps == oracle::counit(FiniteGroup::cyclic(3)));
        // Inversion on functions: S(δ_x) = δ_{x⁻¹}.
        CHECK(fa.s.element(0) == oracle::antipode(FiniteGroup::cyclic(3), 0));
        const auto point = derive_all(trivial_group_example(function_algebra_hopf(FiniteGroup::trivial())));
        CHECK(point.pc.dim(0) == 1);
        CHECK(point.eps.eps == Vector{Scalar(1)});
    }

    TEST_CASE("antipode of the function-algebra family is conjugated inversion") {
        for (const char* name : {"Z2", "Z3", "S3"}) {
            CAPTURE(name);
            const auto g = FiniteGroup::by_name(name);
            const auto d = derive_all(function_algebra_example(g));
            REQUIRE(d.s.element_valued());
            for (std::size_t p = 0; p < g.order(); ++p) CHECK(d.s.element(p) == oracle::antipode(g, p));
            CHECK(check_antipode(d.pc, d.eps, d.s).passed());
        }
        const auto s3 = FiniteGroup::symmetric3();
        const auto d = derive_all(function_algebra_example(s3));
        const std::size_t p = s3.index_of("(12)"), c = s3.index_of("(123)");
        CHECK(d.s.element(p) * unit_vector(6, c) == unit_vector(6, c));
        const auto z2 = derive_all(function_algebra_example(FiniteGroup::cyclic(2)));
        for (std::size_t q = 0; q < 2; ++q) CHECK(z2.s.element(q).is_identity());
    }

    TEST_CASE("antipode inverse") {
        for (const char* name : {"Z2", "S3"}) {
            CAPTURE(name);
            const auto g = FiniteGroup::by_name(name);
            const auto d = derive_all(function_algebra_example(g));
            const auto op = build_opposite(d.pc);
            const auto sp = derive_antipode_inverse(d.pc, op, d.eps, d.s);
            REQUIRE(sp.element_valued());
            for (std::size_t p = 0; p < g.order(); ++p) {
                const std::size_t pi = g.inv(p);
                // S′ inverts S_p: A_p → A_{p⁻¹}, sending δ_x to δ_{p⁻¹x⁻¹p}.
                CHECK(sp.element(pi) * d.s.element(p) == Matrix::identity(g.order()));
                CHECK(d.s.element(p) * sp.element(pi) == Matrix::identity(g.order()));
                CHECK(sp.element(pi) == oracle::antipode(g, pi));
            }
        }
        // S∘S = id forces S′ = S.
        const auto z2 = derive_all(function_algebra_example(FiniteGroup::cyclic(2)));
        const auto sp = derive_antipode_inverse(z2.pc, build_opposite(z2.pc), z2.eps, z2.s);
        CHECK(sp.elements == z2.s.elements);
    }

    TEST_CASE("antipode and the opposite coproduct") {
        for (const char* name : {"Z2", "Z3", "S3"}) {
            CAPTURE(name);
            const auto d = derive_all(function_algebra_example(FiniteGroup::by_name(name)));
            const auto rep = check_antipode_coproduct_identity(d.pc, build_opposite(d.pc), d.s);
            CHECK(rep.passed());
        }
        const auto sub = derive_all(subgroup_supported_example(FiniteGroup::symmetric3(), {0, 1}));
        CHECK(check_antipode_coproduct_identity(sub.pc, build_opposite(sub.pc), sub.s).passed());
    }

    TEST_CASE("unital families have the closed-form inverses") {
        for (const char* name : {"Z2", "Z3", "S3"}) {
            CAPTURE(name);
            const auto d = derive_all(function_algebra_example(FiniteGroup::by_name(name)));
            const auto rep = check_hopf_unital(d.pc, d.inv, d.s);
            CHECK(rep.passed());
            const auto* u = rep.find("unital-components");
            REQUIRE(u);
            CHECK(u->note == "unital");
        }
        const auto zero = restrict_support(function_algebra_example(FiniteGroup::cyclic(2)), {});
        const auto inv = invert_canonical_maps(zero);
        AntipodeFamily empty;
        empty.values.resize(2);
        empty.elements.resize(2);
        const auto rep = check_hopf_unital(zero, inv, empty);
        CHECK(rep.passed());
    }

    TEST_CASE("Sweedler algebra: nonsymmetric antipode") {
        const auto d = derive_all(trivial_group_example(sweedler_hopf()));
        // Basis 1, g, x, gx.
        CHECK(d.eps.eps == Vector{Scalar(1), Scalar(1), Scalar(0), Scalar(0)});
        const Matrix expected = Matrix::from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}});
        CHECK(d.s.element(0) == expected);
        CHECK_FALSE((d.s.element(0) * d.s.element(0)).is_identity());
        CHECK(check_antipode(d.pc, d.eps, d.s).passed());
        CHECK(check_antipode_coproduct_identity(d.pc, build_opposite(d.pc), d.s).passed());
    }

    TEST_CASE("derivation fails loudly on broken input") {
        const auto broken = mutant_example(function_algebra_example(FiniteGroup::cyclic(2)), MutantKind::ZeroRow);
        CHECK_THROWS_AS(invert_canonical_maps(broken), Error);
    }
}
