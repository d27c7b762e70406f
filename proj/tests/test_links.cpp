#include <catch2/catch.hpp>

#include "linkinv/cyclotomic.hpp"
#include "linkinv/links.hpp"
#include "oracles.hpp"

using namespace linkinv;

namespace {
ExponentVector E(std::vector<Integer> a) { return ExponentVector(std::move(a)); }
} // namespace

TEST_CASE("exponent vector validation") {
    CHECK_THROWS_AS(E({2, 2}), domain_error);
    CHECK_THROWS_AS(E({1, 2, 2}), domain_error);
    CHECK_NOTHROW(E({2, 2, 2}));
}

TEST_CASE("link_from_exponents") {
    const LinkDescriptor l = link_from_exponents(E({5, 3, 2, 2, 2}));
    CHECK(l.degree == 30);
    CHECK(l.weights == std::vector<Integer>{6, 10, 15, 15, 15});
    CHECK(l.link_dim == 7);
    CHECK(l.nvars == 5);

    const LinkDescriptor l2 = link_from_exponents(E({3, 2, 2, 2, 2, 2}));
    CHECK(l2.degree == 6);
    CHECK(l2.weights == std::vector<Integer>{2, 3, 3, 3, 3, 3});

    const LinkDescriptor l3 = link_from_exponents(E({2, 2, 2}));
    CHECK(l3.degree == 2);
    CHECK(l3.weights == std::vector<Integer>{1, 1, 1});
    CHECK(l3.link_dim == 3);
}

TEST_CASE("link_from_weights ratio reduction") {
    const LinkDescriptor a =
        link_from_weights({97, 1531, 2201, 2775, 3253}, 9856);
    for (const auto& [u, v] : a.ratios) {
        (void)v;
        CHECK(u == 9856);
    }

    const LinkDescriptor b =
        link_from_weights({155, 1075, 3532, 5835, 7064}, 17660);
    std::vector<Integer> us;
    for (const auto& [u, v] : b.ratios) {
        (void)v;
        us.push_back(u);
    }
    CHECK(us == std::vector<Integer>{3532, 3532, 5, 3532, 5});

    const LinkDescriptor c = link_from_weights({49, 334, 525, 668, 763}, 2338);
    us.clear();
    for (const auto& [u, v] : c.ratios) {
        (void)v;
        us.push_back(u);
    }
    CHECK(us == std::vector<Integer>{334, 7, 334, 7, 334});

    CHECK_THROWS_AS(link_from_weights({2, 4, 6}, 12), domain_error);  // unreduced
    CHECK_THROWS_AS(link_from_weights({1, 1, 12}, 12), domain_error); // weight = degree
    CHECK_THROWS_AS(link_from_weights({1, 1, 13}, 12), domain_error); // weight > degree
}

TEST_CASE("round trip: BP link ratios are (a_i, 1)") {
    oracles::BpSampler sampler(314159);
    for (int t = 0; t < 50; ++t) {
        const ExponentVector a = sampler.next(3, 6, 100000);
        const LinkDescriptor l = link_from_exponents(a);
        REQUIRE(l.ratios.size() == a.a.size());
        for (std::size_t i = 0; i < a.a.size(); ++i) {
            CHECK(l.ratios[i].first == a.a[i]);
            CHECK(l.ratios[i].second == 1);
        }
        // and rebuilding from (weights, degree) preserves the ratios
        const LinkDescriptor l2 = link_from_weights(l.weights, l.degree);
        CHECK(l2.ratios == l.ratios);
    }
}

TEST_CASE("milnor_number") {
    CHECK(milnor_number(link_from_exponents(E({5, 3, 2, 2, 2}))) == 8);
    CHECK(milnor_number(link_from_exponents(E({3, 2, 2, 2, 2}))) == 2);
    for (long p : {3L, 7L, 11L}) {
        std::vector<Integer> a{Integer(p)};
        for (int i = 0; i < 5; ++i)
            a.emplace_back(2);
        CHECK(milnor_number(link_from_exponents(E(a))) == p - 1);
    }
    // table row: weights (101,...), degree 2296
    CHECK(milnor_number(link_from_weights({101, 439, 559, 579, 619}, 2296)) == 2295);
    // (2,3) with degree 4: product (2/2)(1/3) is not an integer
    CHECK_THROWS_AS(milnor_number(link_from_weights({2, 3}, 4)), domain_error);

    oracles::BpSampler sampler(112358);
    for (int t = 0; t < 60; ++t) {
        const ExponentVector a = sampler.next(3, 6, 100000);
        Integer expected = 1;
        for (const Integer& ai : a.a)
            expected *= ai - 1;
        CHECK(milnor_number(link_from_exponents(a)) == expected);
    }
}

TEST_CASE("connectivity") {
    CHECK(connectivity(link_from_exponents(E({5, 3, 2, 2, 2}))) == 3);
    CHECK(connectivity(link_from_exponents(E({2, 2, 2}))) == 1);
    CHECK(connectivity(link_from_exponents(E({3, 2, 2, 2, 2, 2}))) == 4);
}

TEST_CASE("integral homology sphere criterion") {
    auto v1 = integral_homology_sphere(E({5, 3, 2, 2, 2}));
    CHECK(v1.is_integral_homology_sphere);
    CHECK(v1.reason == ZhsReason::Condition1);

    auto v2 = integral_homology_sphere(E({3, 2, 2, 2, 2, 2}));
    CHECK(v2.is_integral_homology_sphere);
    CHECK(v2.reason == ZhsReason::Condition2);

    auto v3 = integral_homology_sphere(E({2, 2, 2}));
    CHECK_FALSE(v3.is_integral_homology_sphere);

    // single isolated even vertex: C_ev = {2}, not a homology sphere
    CHECK_FALSE(integral_homology_sphere(E({2, 3, 3, 3})).is_integral_homology_sphere);
    // C_ev with even cardinality fails
    CHECK_FALSE(integral_homology_sphere(E({3, 2, 2, 2, 2})).is_integral_homology_sphere);
    // gcd 4 inside C_ev fails
    CHECK_FALSE(integral_homology_sphere(E({5, 4, 4, 2})).is_integral_homology_sphere);
    // odd component attached elsewhere does not interfere
    CHECK(integral_homology_sphere(E({7, 9, 3, 2, 2, 2})).is_integral_homology_sphere);
}

TEST_CASE("criterion agrees with |Delta(1)| = 1 on random vectors") {
    oracles::BpSampler sampler(271828);
    for (int t = 0; t < 200; ++t) {
        const ExponentVector a = sampler.next(4, 6, 500);
        const CyclotomicExponents e = to_cyclotomic(link_divisor(link_from_exponents(a)));
        const bool zhs = e.exponent(1) == 0 && torsion_order(e) == 1;
        CHECK(integral_homology_sphere(a).is_integral_homology_sphere == zhs);
    }
}

TEST_CASE("signature of the (6k-1,3,2,2,2) family") {
    CHECK(signature(E({5, 3, 2, 2, 2}), 1000) == 8);
    CHECK(signature(E({11, 3, 2, 2, 2}), 1000) == 16);
    CHECK(signature(E({17, 3, 2, 2, 2}), 1000) == 24);
    CHECK(signature(E({173, 3, 2, 2, 2}), 1000) == 232); // k = 29
    CHECK(signature(E({3, 2, 2, 2, 2}), 1000) == 2);
}

TEST_CASE("signature in dimension 11") {
    // (5,3,2,2,2,2,2): dim 11, m = 3, tau = (-1)^3 * 8 = -8
    CHECK(signature(E({5, 3, 2, 2, 2, 2, 2}), 1000) == -8);
}

TEST_CASE("signature guards") {
    CHECK_THROWS_AS(signature(E({5, 3, 2, 2, 2}), 7), resource_error); // mu = 8 > 7
    CHECK_THROWS_AS(signature(E({2, 2, 2, 2}), 1000), domain_error);   // dim 5, not 3 mod 4
    // boundary hit: (4,4,4,4,4) has sum x_i/4 = 2 at x = (2,2,2,1,1)
    CHECK_THROWS_AS(signature(E({4, 4, 4, 4, 4}), 1000), domain_error);
}

TEST_CASE("parsing") {
    const ExponentVector a = parse_exponents("5,3,2,2,2");
    CHECK(a.a == std::vector<Integer>{5, 3, 2, 2, 2});
    CHECK(parse_weights(" 97, 1531,2201 ,2775,3253") ==
          std::vector<Integer>{97, 1531, 2201, 2775, 3253});
    CHECK_THROWS_AS(parse_exponents("5,,3"), domain_error);
    CHECK_THROWS_AS(parse_exponents("5,3,x"), domain_error);
    CHECK_THROWS_AS(parse_exponents("5,3,-2"), domain_error);
}
