#include "mhgc/cograded.hpp"
#include "mhgc/error.hpp"
#include "mhgc/examples.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace mhgc;

namespace {

// Functions on {0,1,2} vanishing at 2: basis δ_0, δ_1.
ComponentAlgebra vanishing_at_a_point() { return ComponentAlgebra::functions_on_points(2); }

Vector v2(int a, int b) { return {Scalar(a), Scalar(b)}; }

}  // namespace

TEST_SUITE("algebra-core") {
    TEST_CASE("groups validate their tables") {
        const auto s3 = FiniteGroup::symmetric3();
        CHECK(s3.order() == 6);
        for (std::size_t a = 0; a < 6; ++a) {
            CHECK(s3.mul(a, s3.inv(a)) == s3.identity());
            CHECK(s3.mul(s3.identity(), a) == a);
        }
        const auto t12 = s3.index_of("(12)"), t13 = s3.index_of("(13)");
        CHECK(s3.mul(t12, t13) != s3.mul(t13, t12));
        CHECK_THROWS_AS(FiniteGroup({{0, 1}, {0, 1}}, 0), Error);
        CHECK_THROWS_AS(FiniteGroup::by_name("Q8"), Error);
        CHECK(FiniteGroup::by_name("Z/3") == FiniteGroup::cyclic(3));
    }

    TEST_CASE("nondegeneracy") {
        CHECK(check_nondegenerate(ComponentAlgebra::functions_on_points(0)));
        CHECK_FALSE(check_nondegenerate(ComponentAlgebra::zero_product(2)));
        CHECK(check_nondegenerate(ComponentAlgebra::functions_on_points(2)));
        CHECK(check_nondegenerate(ComponentAlgebra::group_algebra(FiniteGroup::symmetric3())));
    }

    TEST_CASE("multipliers from elements") {
        const auto k = ComponentAlgebra::functions_on_points(2);
        CHECK(multiplier_from_element(k, v2(0, 0)) == zero_multiplier(2));
        CHECK(multiplier_from_element(k, v2(1, 1)) == identity_multiplier(2));
        const auto m = multiplier_from_element(k, v2(1, 0));
        const Matrix proj = Matrix::from_rows({{1, 0}, {0, 0}});
        CHECK(m.left == proj);
        CHECK(m.right == proj);
        CHECK_FALSE(multiplier_defect(k, m));
    }

    TEST_CASE("elements from multipliers") {
        const auto k = ComponentAlgebra::functions_on_points(2);
        CHECK(element_from_multiplier(k, zero_multiplier(2)) == v2(0, 0));
        const Vector a = v2(3, -1);
        CHECK(element_from_multiplier(k, multiplier_from_element(k, a)) == a);
        // Functions on three points vanishing at the last: the identity multiplier is δ_0 + δ_1.
        const auto ideal = vanishing_at_a_point();
        Multiplier one = identity_multiplier(2);
        CHECK(element_from_multiplier(ideal, one) == v2(1, 1));
        const auto zp = ComponentAlgebra::zero_product(2);
        CHECK_FALSE(element_from_multiplier(zp, one));
    }

    TEST_CASE("composition of multipliers") {
        const auto g = ComponentAlgebra::group_algebra(FiniteGroup::cyclic(3));
        const Vector a{Scalar(1), Scalar(2), Scalar(0)}, b{Scalar(0), Scalar(1), Scalar(-1)};
        const auto ma = multiplier_from_element(g, a), mb = multiplier_from_element(g, b);
        CHECK(compose_multipliers(ma, identity_multiplier(3)) == ma);
        CHECK(compose_multipliers(ma, mb) == multiplier_from_element(g, g.multiply(a, b)));
        const auto k = ComponentAlgebra::functions_on_points(2);
        CHECK(compose_multipliers(multiplier_from_element(k, v2(1, 0)), multiplier_from_element(k, v2(0, 1))) ==
              zero_multiplier(2));
    }

    TEST_CASE("non-multipliers are detected") {
        const auto g = ComponentAlgebra::group_algebra(FiniteGroup::symmetric3());
        Multiplier m = identity_multiplier(6);
        m.right = multiplier_from_element(g, unit_vector(6, 1)).right;
        CHECK(multiplier_defect(g, m));
    }

    TEST_CASE("extension of nondegenerate homomorphisms") {
        const auto g = ComponentAlgebra::group_algebra(FiniteGroup::cyclic(2));
        std::vector<Multiplier> id;
        for (std::size_t i = 0; i < 2; ++i) id.push_back(multiplier_from_element(g, unit_vector(2, i)));
        const Vector a = v2(2, 5);
        const auto ma = multiplier_from_element(g, a);
        CHECK(extend_nondegenerate_hom(g, g, id, ma) == ma);
        CHECK(extend_nondegenerate_hom(g, g, id, identity_multiplier(2)) == identity_multiplier(2));
    }

    TEST_CASE("grading map on the constant function is the identity") {
        const auto cm = to_cograded(function_algebra_example(FiniteGroup::cyclic(2)));
        const auto one = cm.gamma_of(oracle::counting(2));
        CHECK(one == identity_multiplier(cm.dim()));
        const auto k = ComponentAlgebra::functions_on_points(2);
        CHECK(extend_nondegenerate_hom(k, cm.algebra, cm.gamma, identity_multiplier(2)) ==
              identity_multiplier(cm.dim()));
        CHECK(cm.gamma[0] + cm.gamma[1] == identity_multiplier(cm.dim()));
    }

    TEST_CASE("tensor products and direct sums") {
        const auto a = ComponentAlgebra::functions_on_points(2);
        const auto b = ComponentAlgebra::group_algebra(FiniteGroup::cyclic(3));
        const auto t = tensor_product(a, b);
        CHECK(t.dim() == 6);
        CHECK_FALSE(t.associativity_witness());
        const auto s = direct_sum({a, b});
        CHECK(s.dim() == 5);
        CHECK(s.unit());
        CHECK_FALSE(ComponentAlgebra::zero_product(2).unit());
    }
}

TEST_SUITE("properties") {
    TEST_CASE("random elements: multiplier embedding is a homomorphism") {
        std::mt19937 rng(3);
        std::uniform_int_distribution<int> dist(-4, 4);
        const auto alg = ComponentAlgebra::group_algebra(FiniteGroup::symmetric3());
        for (int trial = 0; trial < 20; ++trial) {
            Vector a(6), b(6);
            for (std::size_t i = 0; i < 6; ++i) a[i] = dist(rng), b[i] = oracle::q(dist(rng), 3);
            const auto ma = multiplier_from_element(alg, a), mb = multiplier_from_element(alg, b);
            CHECK(compose_multipliers(ma, mb) == multiplier_from_element(alg, alg.multiply(a, b)));
            CHECK_FALSE(multiplier_defect(alg, ma));
            CHECK(element_from_multiplier(alg, ma) == a);
        }
    }
}
