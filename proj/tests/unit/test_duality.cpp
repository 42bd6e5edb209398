#include "mhgc/duality.hpp"
#include "mhgc/error.hpp"
#include "mhgc/examples.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace mhgc;

namespace {

struct Setup {
    PiCoalgebra pc;
    Counit eps;
    AntipodeFamily s;
    InvariantFamily phi, psi;
};

Setup setup(PiCoalgebra pc) {
    const auto inv = invert_canonical_maps(pc);
    Setup st{std::move(pc), {}, {}, {}, {}};
    st.eps = derive_counit(st.pc, inv);
    st.s = derive_antipode(st.pc, inv, st.eps);
    const auto left = solve_invariant(st.pc, Side::Left);
    const auto right = solve_invariant(st.pc, Side::Right);
    REQUIRE(left.size() == 1);
    REQUIRE(right.size() == 1);
    st.phi = left.front();
    st.psi = right.front();
    return st;
}

std::size_t block_offset(const std::vector<std::size_t>& labels, std::size_t p) {
    std::size_t i = 0;
    while (labels[i] != p) ++i;
    return i;
}

}  // namespace

TEST_SUITE("duality-integrals") {
    TEST_CASE("dual product is the pointwise evaluation of the comultiplication") {
        for (const char* name : {"Z2", "S3"}) {
            CAPTURE(name);
            const auto g = FiniteGroup::by_name(name);
            const auto pc = function_algebra_example(g);
            const auto dual = dual_algebra(pc);
            for (std::size_t p = 0; p < g.order(); ++p)
                for (std::size_t q = 0; q < g.order(); ++q) CHECK(dual.prod(p, q) == oracle::dual_product(g, q));
            const auto inv = invert_canonical_maps(pc);
            CHECK(verify_dual_algebra(dual, derive_counit(pc, inv)).passed());
        }
    }

    TEST_CASE("counit is the identity of the dual algebra") {
        const auto g = FiniteGroup::cyclic(3);
        const auto pc = function_algebra_example(g);
        const auto dual = dual_algebra(pc);
        const Vector eps = oracle::counit(g);
        const Vector f{Scalar(2), oracle::q(-1, 3), Scalar(5)};
        for (std::size_t q = 0; q < 3; ++q) {
            CHECK(dual.multiply(0, q, eps, f) == f);
            CHECK(dual.multiply(q, 0, f, eps) == f);
        }
    }

    TEST_CASE("zero component has a zero dual block") {
        const auto g = FiniteGroup::symmetric3();
        const auto pc = subgroup_supported_example(g, {0, g.index_of("(12)")});
        const auto dual = dual_algebra(pc);
        const std::size_t c = g.index_of("(123)");
        CHECK(dual.dims[c] == 0);
        CHECK(dual.prod(c, 0).rows() == 0);
    }

    TEST_CASE("dual antipode") {
        const auto z2 = setup(function_algebra_example(FiniteGroup::cyclic(2)));
        const auto sz = dual_antipode(z2.pc, z2.s);
        for (const auto& m : sz) CHECK(m.is_identity());
        CHECK(sz[0] * z2.eps.eps == z2.eps.eps);
        const auto g = FiniteGroup::symmetric3();
        const auto s3 = setup(function_algebra_example(g));
        const auto ss = dual_antipode(s3.pc, s3.s);
        for (std::size_t p = 0; p < 6; ++p) CHECK(ss[p] == transpose(oracle::antipode(g, g.inv(p))));
        CHECK(verify_dual_antipode(dual_algebra(s3.pc), ss).passed());
    }

    TEST_CASE("invariant functionals are the counting functionals") {
        for (const char* name : {"Z2", "Z3", "S3"}) {
            CAPTURE(name);
            const auto g = FiniteGroup::by_name(name);
            const auto pc = function_algebra_example(g);
            for (Side side : {Side::Left, Side::Right}) {
                const auto fams = solve_invariant(pc, side);
                REQUIRE(fams.size() == 1);
                for (const auto& v : fams[0].values) CHECK(v == oracle::counting(g.order()));
                CHECK(is_invariant(pc, fams[0]));
                CHECK(check_uniqueness_faithfulness(pc, fams).passed());
            }
        }
    }

    TEST_CASE("the counting functional has a permutation Gram matrix") {
        const auto k = ComponentAlgebra::functions_on_points(2);
        CHECK(gram_matrix(k, oracle::counting(2)) == Matrix::identity(2));
    }

    TEST_CASE("zero family and non-unique input") {
        const auto zero = restrict_support(function_algebra_example(FiniteGroup::cyclic(2)), {});
        const auto fams = solve_invariant(zero, Side::Left);
        CHECK(fams.empty());
        const auto rep = check_uniqueness_faithfulness(zero, fams);
        REQUIRE_FALSE(rep.checks.empty());
        CHECK(rep.checks.front().skipped);
        // A two-dimensional solution space is flagged.
        const auto pc = function_algebra_example(FiniteGroup::cyclic(2));
        auto phi = solve_invariant(pc, Side::Left);
        InvariantFamily other = phi.front();
        other.values[1] = zero_vector(2);
        phi.push_back(other);
        const auto two = check_uniqueness_faithfulness(pc, phi);
        CHECK_FALSE(two.passed());
    }

    TEST_CASE("modular element and automorphisms are trivial on function algebras") {
        for (const char* name : {"Z2", "S3"}) {
            CAPTURE(name);
            const auto st = setup(function_algebra_example(FiniteGroup::by_name(name)));
            const auto d = modular_element(st.pc, st.phi);
            for (std::size_t p = 0; p < st.pc.order(); ++p) CHECK(d[p] == identity_multiplier(st.pc.dim(p)));
            CHECK(verify_modular_element(st.pc, st.phi, d, st.eps, st.s).passed());
            CHECK(modular_element(st.pc, st.phi.scaled(Scalar(7))) == d);
            const auto md = modular_automorphisms(st.pc, st.phi, st.psi, st.s, d);
            CHECK(md.tau == 1);
            for (std::size_t p = 0; p < st.pc.order(); ++p) {
                CHECK(md.sigma_mod[p].is_identity());
                CHECK(md.sigma_mod_prime[p].is_identity());
            }
            CHECK(verify_modular_data(st.pc, st.phi, st.psi, st.s, md).passed());
            const auto scaled = modular_automorphisms(st.pc, st.phi.scaled(oracle::q(3, 2)), st.psi, st.s, d);
            CHECK(scaled.sigma_mod == md.sigma_mod);
            CHECK(scaled.tau == md.tau);
        }
    }

    TEST_CASE("Sweedler algebra: nontrivial modular data") {
        const auto st = setup(trivial_group_example(sweedler_hopf()));
        const auto d = modular_element(st.pc, st.phi);
        // D is the grouplike g.
        CHECK(d[0] == multiplier_from_element(st.pc.component(0), unit_vector(4, 1)));
        const auto md = modular_automorphisms(st.pc, st.phi, st.psi, st.s, d);
        CHECK(md.tau == -1);
        CHECK_FALSE(md.sigma_mod[0].is_identity());
        CHECK(verify_modular_element(st.pc, st.phi, d, st.eps, st.s).passed());
        CHECK(verify_modular_data(st.pc, st.phi, st.psi, st.s, md).passed());
        CHECK(check_invariant_spans(st.pc, st.phi, st.psi, st.s).passed());
    }

    TEST_CASE("spans of the invariant functionals") {
        const auto st = setup(function_algebra_example(FiniteGroup::symmetric3()));
        CHECK(check_invariant_spans(st.pc, st.phi, st.psi, st.s).passed());
        const auto composed = compose_with_antipode(st.pc, st.phi, st.s);
        CHECK(is_invariant(st.pc, composed));
    }

    TEST_CASE("hat dual and biduality") {
        const auto st = setup(function_algebra_example(FiniteGroup::cyclic(2)));
        const auto hat = hat_dual(st.pc, st.phi, st.psi, st.eps);
        CHECK(hat.coalgebra.order() == 1);
        CHECK(hat.coalgebra.dim(0) == 4);
        CHECK(verify_hat_dual(hat).passed());
        const std::size_t e = block_offset(hat.labels, 0);
        // ψ_e(1·) is the counting functional on the e block.
        Vector psi_one(4);
        for (std::size_t i = 0; i < 2; ++i) psi_one[e + i] = 1;
        CHECK(dot(hat.phi_hat.values[0], psi_one) == 1);
        // φ_e(·δ_e) is the dual basis functional at e.
        Vector phi_delta(4);
        phi_delta[e] = 1;
        CHECK(dot(hat.psi_hat.values[0], phi_delta) == 1);
        CHECK(bidual_isomorphism(st.pc).passed());
        CHECK(bidual_isomorphism(function_algebra_example(FiniteGroup::cyclic(3))).passed());
        CHECK(bidual_isomorphism(restrict_support(st.pc, {})).passed());
    }
}
