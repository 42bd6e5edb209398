#include "mhgc/error.hpp"
#include "mhgc/examples.hpp"
#include "mhgc/modules.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace mhgc;

namespace {

struct Setup {
    PiCoalgebra pc;
    Counit eps;
    AntipodeFamily s;
    OppositeMaps op;
};

Setup setup(PiCoalgebra pc) {
    const auto inv = invert_canonical_maps(pc);
    auto eps = derive_counit(pc, inv);
    auto s = derive_antipode(pc, inv, eps);
    auto op = build_opposite(pc);
    return {std::move(pc), std::move(eps), std::move(s), std::move(op)};
}

std::vector<std::size_t> identity_weight(const FiniteGroup& g) {
    std::vector<std::size_t> w(g.order());
    for (std::size_t s = 0; s < g.order(); ++s) w[s] = s;
    return w;
}

// Adjoint action a·x = Σ a_(1) x S(a_(2)) of a single Hopf algebra on itself.
AModuleAlgebra adjoint(const HopfAlgebraData& data, const PiCoalgebra& pc, const Matrix& s) {
    const auto& alg = pc.component(0);
    const std::size_t d = alg.dim();
    Matrix mu(d, d * d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t x = 0; x < d; ++x) {
            Vector out(d);
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) {
                    const Scalar& c = data.coproduct(i * d + j, a);
                    if (is_zero(c)) continue;
                    axpy(out, c, alg.multiply(alg.multiply(unit_vector(d, i), unit_vector(d, x)), s.column(j)));
                }
            for (std::size_t k = 0; k < d; ++k) mu(k, a * d + x) = out[k];
        }
    AModule m{{d}, {mu}};
    return make_module_algebra(pc.group(), m, alg, std::vector<std::size_t>(d, 0));
}

}  // namespace

TEST_SUITE("module-actions") {
    TEST_CASE("regular and zero modules") {
        for (const char* name : {"Z2", "S3"}) {
            CAPTURE(name);
            const auto pc = function_algebra_example(FiniteGroup::by_name(name));
            const auto reg = verify_module(pc, regular_module(pc));
            CHECK(reg.passed());
            const auto* u = reg.find("unital");
            REQUIRE(u);
            CHECK(u->passed);
            CHECK(verify_module(pc, zero_module(pc)).passed());
        }
    }

    TEST_CASE("reversed action fails associativity with a witness") {
        const auto pc = function_algebra_example(FiniteGroup::cyclic(2));
        const auto rep = verify_module(pc, reversed_action_mutant(regular_module(pc), 0));
        const auto* assoc = rep.find("associativity");
        REQUIRE(assoc);
        CHECK_FALSE(assoc->passed);
        REQUIRE_FALSE(assoc->failures.empty());
        CHECK(assoc->failures.front().find("a=") != std::string::npos);
    }

    TEST_CASE("shapes are validated") {
        const auto pc = function_algebra_example(FiniteGroup::cyclic(2));
        AModule bad = regular_module(pc);
        bad.action[1] = Matrix(2, 3);
        CHECK_THROWS_AS(check_shape(pc, bad), Error);
    }

    TEST_CASE("trivial module algebra") {
        for (const char* name : {"Z2", "Z3", "S3"}) {
            CAPTURE(name);
            const auto st = setup(function_algebra_example(FiniteGroup::by_name(name)));
            const auto triv = trivial_module_algebra(st.pc, st.eps);
            CHECK(verify_module(st.pc, triv.module).passed());
            CHECK(verify_module_algebra(st.pc, triv).passed());
            CHECK(check_action_antipode_identities(st.pc, st.op, triv, st.s).passed());
        }
    }

    TEST_CASE("grading module algebra on Z2") {
        const auto st = setup(function_algebra_example(FiniteGroup::cyclic(2)));
        const auto sign = grading_module_algebra(st.pc, identity_weight(st.pc.group()));
        CHECK(sign.module.dims[0] == 2);
        // δ_e - δ_g acts by +1 on u_e and -1 on u_g.
        const Vector diff{Scalar(1), Scalar(-1)};
        CHECK(sign.module.action_of(0, diff) == Matrix::from_rows({{1, 0}, {0, -1}}));
        CHECK(verify_module_algebra(st.pc, sign).passed());
        CHECK(check_action_antipode_identities(st.pc, st.op, sign, st.s).passed());
        const auto shifted = grading_module_algebra(st.pc, {1, 0});
        const auto rep = verify_module_algebra(st.pc, shifted);
        const auto* law = rep.find("module-algebra-law");
        REQUIRE(law);
        CHECK_FALSE(law->passed);
        CHECK_FALSE(law->failures.empty());
    }

    TEST_CASE("grading module algebra on S3") {
        const auto st = setup(function_algebra_example(FiniteGroup::symmetric3()));
        const auto ga = grading_module_algebra(st.pc, identity_weight(st.pc.group()));
        CHECK(verify_module_algebra(st.pc, ga).passed());
        CHECK(check_action_antipode_identities(st.pc, st.op, ga, st.s).passed());
    }

    TEST_CASE("ungraded products are rejected") {
        const auto pc = function_algebra_example(FiniteGroup::cyclic(2));
        const auto reg = regular_module(pc);
        const auto sum = direct_sum(pc.components());
        try {
            make_module_algebra(pc.group(), reg, sum, {0, 0, 1, 1});
            FAIL("block-diagonal product accepted as graded");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::NotGraded);
        }
    }

    TEST_CASE("tensor modules") {
        const auto st = setup(function_algebra_example(FiniteGroup::cyclic(2)));
        const auto reg = regular_module(st.pc);
        const auto triv = trivial_module_algebra(st.pc, st.eps).module;
        CHECK(tensor_module(st.pc, triv, triv) == triv);
        const auto rt = tensor_module(st.pc, reg, triv);
        CHECK(rt == reg);
        const auto* unital = verify_module(st.pc, tensor_module(st.pc, reg, reg)).find("unital");
        REQUIRE(unital);
        CHECK(unital->passed);
        CHECK(verify_module(st.pc, tensor_module(st.pc, reg, reg)).passed());
        const auto zt = tensor_module(st.pc, zero_module(st.pc), reg);
        for (auto d : zt.dims) CHECK(d == 0);
        // The trivial module algebra tensored with itself is again a module algebra.
        const auto tt = trivial_module_algebra(st.pc, st.eps);
        const auto prod = make_module_algebra(st.pc.group(), tensor_module(st.pc, tt.module, tt.module), tt.algebra,
                                              tt.labels);
        CHECK(verify_module_algebra(st.pc, prod).passed());
    }

    TEST_CASE("damped pair action collapses on a trivial second factor") {
        const auto st = setup(function_algebra_example(FiniteGroup::cyclic(2)));
        const auto reg = regular_module(st.pc);
        const auto triv = trivial_module_algebra(st.pc, st.eps).module;
        const Vector one{Scalar(1)};
        for (std::size_t a = 0; a < 2; ++a)
            for (std::size_t x = 0; x < 2; ++x) {
                const Vector got =
                    damped_pair_action(st.pc, reg, triv, 0, 0, unit_vector(2, a), unit_vector(2, x), one);
                CHECK(got == oracle::pointwise(unit_vector(2, a), unit_vector(2, x)));
            }
    }

    TEST_CASE("comultiplication spans the tensor squares") {
        for (const char* name : {"Z2", "S3"}) {
            CAPTURE(name);
            CHECK(check_delta_span(function_algebra_example(FiniteGroup::by_name(name))).passed());
        }
    }

    TEST_CASE("action identities on the zero module are vacuous") {
        const auto st = setup(function_algebra_example(FiniteGroup::cyclic(2)));
        const auto z = make_module_algebra(st.pc.group(), zero_module(st.pc), ComponentAlgebra::zero_product(0), {});
        CHECK(verify_module_algebra(st.pc, z).passed());
        CHECK(check_action_antipode_identities(st.pc, st.op, z, st.s).passed());
    }

    TEST_CASE("Sweedler adjoint action: second identity needs an involutive antipode") {
        const auto data = sweedler_hopf();
        const auto st = setup(trivial_group_example(data));
        const auto ad = adjoint(data, st.pc, st.s.element(0));
        CHECK(verify_module(st.pc, ad.module).passed());
        CHECK(verify_module_algebra(st.pc, ad).passed());
        const auto rep = check_action_antipode_identities(st.pc, st.op, ad, st.s);
        const auto* first = rep.find("left-action-identity");
        const auto* second = rep.find("right-action-identity");
        REQUIRE(first);
        REQUIRE(second);
        CHECK(first->passed);
        CHECK_FALSE(second->passed);
        REQUIRE_FALSE(second->failures.empty());
        // a = x, x = g, x' = 1 in the basis 1, g, x, gx.
        CHECK(second->failures.front().find("a=e2") != std::string::npos);
    }
}
