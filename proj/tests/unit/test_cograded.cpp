#include "mhgc/cograded.hpp"
#include "mhgc/error.hpp"
#include "mhgc/examples.hpp"
#include "mhgc/io.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace mhgc;

namespace {

struct Derived {
    Counit eps;
    AntipodeFamily s;
};

Derived derive(const PiCoalgebra& pc) {
    const auto inv = invert_canonical_maps(pc);
    auto eps = derive_counit(pc, inv);
    auto s = derive_antipode(pc, inv, eps);
    return {std::move(eps), std::move(s)};
}

// Direct sum over G of functions on G, assembled from the pointwise oracles only.
CogradedMHA hand_assembled(const FiniteGroup& g) {
    const std::size_t n = g.order(), big = n * n;
    CogradedMHA cm;
    cm.group = g;
    cm.algebra = ComponentAlgebra::functions_on_points(big);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t x = 0; x < n; ++x) cm.labels.push_back(p);
    Matrix t1(big * big, big * big), t2(big * big, big * big);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            const std::size_t r = g.mul(p, q);
            const Matrix o1 = oracle::t1(g, q), o2 = oracle::t2(g, q);
            for (std::size_t i = 0; i < n * n; ++i)
                for (std::size_t j = 0; j < n * n; ++j) {
                    const std::size_t row = (p * n + i / n) * big + q * n + i % n;
                    t1(row, (r * n + j / n) * big + q * n + j % n) = o1(i, j);
                    t2(row, (p * n + j / n) * big + r * n + j % n) = o2(i, j);
                }
        }
    cm.t1g = SparseMatrix::from_dense(t1);
    cm.t2g = SparseMatrix::from_dense(t2);
    for (std::size_t p = 0; p < n; ++p) {
        Vector proj(big);
        for (std::size_t x = 0; x < n; ++x) proj[p * n + x] = 1;
        cm.gamma.push_back(multiplier_from_element(cm.algebra, proj));
    }
    return cm;
}

}  // namespace

TEST_SUITE("correspondence") {
    TEST_CASE("direct sum of the Z2 family") {
        const auto g = FiniteGroup::cyclic(2);
        const auto cm = to_cograded(function_algebra_example(g));
        CHECK(cm.dim() == 4);
        CHECK(cm.labels == std::vector<std::size_t>{0, 0, 1, 1});
        CHECK(cm == hand_assembled(g));
        CHECK(verify_gamma(cm).passed());
        CHECK(cm.gamma_of(oracle::counting(2)) == identity_multiplier(4));
    }

    TEST_CASE("hand-assembled direct sum splits into the closed-form family") {
        for (const char* name : {"Z2", "S3"}) {
            CAPTURE(name);
            const auto g = FiniteGroup::by_name(name);
            const auto pc = from_cograded(hand_assembled(g));
            for (std::size_t p = 0; p < g.order(); ++p)
                for (std::size_t q = 0; q < g.order(); ++q) {
                    CHECK(pc.t1(p, q) == oracle::t1(g, q));
                    CHECK(pc.t2(p, q) == oracle::t2(g, q));
                }
        }
    }

    TEST_CASE("round trip is exact, including the canonical text") {
        for (const char* name : {"trivial", "Z2", "Z3", "S3"}) {
            CAPTURE(name);
            const auto pc = function_algebra_example(FiniteGroup::by_name(name));
            const auto back = from_cograded(to_cograded(pc));
            CHECK(back == pc);
            CHECK(save(back) == save(pc));
        }
    }

    TEST_CASE("single component at the identity") {
        const auto g = FiniteGroup::cyclic(3);
        const auto pc = restrict_support(function_algebra_example(g), {0});
        const auto cm = to_cograded(pc);
        CHECK(cm.dim() == 3);
        CHECK(cm.algebra == pc.component(0));
        CHECK(cm.t1g.to_dense() == pc.t1(0, 0));
        CHECK(from_cograded(cm) == pc);
        const auto hopf = trivial_group_example(group_algebra_hopf(g));
        CHECK(from_cograded(to_cograded(hopf)) == hopf);
    }

    TEST_CASE("grading map checks catch swapped blocks") {
        auto cm = to_cograded(function_algebra_example(FiniteGroup::cyclic(2)));
        CHECK(verify_gamma(cm).passed());
        std::swap(cm.gamma[0], cm.gamma[1]);
        const auto rep = verify_gamma(cm);
        CHECK_FALSE(rep.passed());
        const auto* c = rep.find("coproduct-compatible");
        REQUIRE(c);
        CHECK_FALSE(c->passed);
    }

    TEST_CASE("componentwise counit and antipode") {
        for (const char* name : {"Z2", "S3"}) {
            CAPTURE(name);
            const auto g = FiniteGroup::by_name(name);
            const auto pc = function_algebra_example(g);
            const auto d = derive(pc);
            const auto cm = to_cograded(pc);
            CHECK(componentwise_structure(cm, pc, d.eps, d.s).passed());
        }
        // Z2 on A_G: ε_G reads the e block only.
        const auto z2 = to_trivial_group(to_cograded(function_algebra_example(FiniteGroup::cyclic(2))));
        const auto dz = derive(z2);
        CHECK(dz.eps.eps == Vector{Scalar(1), Scalar(0), Scalar(0), Scalar(0)});
        CHECK(dz.s.element(0).is_identity());
        // Z3 on A_G: the block of p goes to the block of p⁻¹ through S_p.
        const auto g3 = FiniteGroup::cyclic(3);
        const auto z3 = to_trivial_group(to_cograded(function_algebra_example(g3)));
        const Matrix sg = derive(z3).s.element(0);
        for (std::size_t p = 0; p < 3; ++p) {
            const std::size_t pi = g3.inv(p);
            const Matrix expected = oracle::antipode(g3, p);
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j) CHECK(sg(pi * 3 + i, p * 3 + j) == expected(i, j));
        }
    }

    TEST_CASE("antipode on the direct sum of S3 moves (123) to (132)") {
        const auto g = FiniteGroup::symmetric3();
        const auto pc = function_algebra_example(g);
        const auto d = derive(pc);
        const std::size_t p = g.index_of("(123)");
        CHECK(g.inv(p) == g.index_of("(132)"));
        CHECK(d.s.element(p) == oracle::antipode(g, p));
        const auto rep = componentwise_structure(to_cograded(pc), pc, d.eps, d.s);
        const auto* blocks = rep.find("antipode-blocks");
        REQUIRE(blocks);
        CHECK(blocks->passed);
    }

    TEST_CASE("regularity verdicts agree") {
        const auto pc = function_algebra_example(FiniteGroup::cyclic(3));
        CHECK(verify_regularity_transfer(pc, to_cograded(pc)).passed());
        const auto zero = restrict_support(pc, {});
        CHECK(verify_regularity_transfer(zero, to_cograded(zero)).passed());
        const auto broken = mutant_example(function_algebra_example(FiniteGroup::cyclic(2)), MutantKind::ZeroRow);
        const auto rep = verify_regularity_transfer(broken, to_cograded(broken));
        const auto* agree = rep.find("verdicts-agree");
        REQUIRE(agree);
        CHECK(agree->passed);
        CHECK(agree->note == "componentwise irregular, direct sum irregular");
    }

    TEST_CASE("block leaks are rejected") {
        auto cm = to_cograded(function_algebra_example(FiniteGroup::cyclic(2)));
        Matrix t1 = cm.t1g.to_dense();
        // Couple e-block output to a g-block input outside every cell.
        t1(0, 15) = 1;
        cm.t1g = SparseMatrix::from_dense(t1);
        try {
            from_cograded(cm);
            FAIL("leak accepted");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::BlockLeak);
        }
    }
}
