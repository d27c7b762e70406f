#include <catch2/catch.hpp>

#include <random>

#include "linkinv/bernoulli.hpp"
#include "linkinv/integer.hpp"
#include "linkinv/rational.hpp"
#include "oracles.hpp"

using namespace linkinv;

TEST_CASE("gcd_many and lcm_many") {
    CHECK(gcd_many({6, 10, 15}) == 1); // pairwise non-coprime, jointly coprime
    CHECK(gcd_many({2296, 101}) == 1);
    CHECK(gcd_many({3532, 17660}) == 3532); // 17660 = 5 * 3532
    CHECK(gcd_many({0, 12, 18}) == 6);
    CHECK(gcd_many({7}) == 7);

    CHECK(lcm_many({2, 3, 2, 2}) == 6);
    CHECK(lcm_many({5, 3, 2, 2, 2}) == 30);
    CHECK(lcm_many({Integer("1000000007"), Integer("998244353")}) ==
          Integer("1000000007") * Integer("998244353"));

    CHECK_THROWS_AS(gcd_many({0, 0, 0}), domain_error);
    CHECK_THROWS_AS(gcd_many({}), domain_error);
    CHECK_THROWS_AS(lcm_many({3, 0}), domain_error);
}

TEST_CASE("factorization helpers") {
    CHECK(divisors(12) == std::vector<Integer>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(1) == std::vector<Integer>{1});
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(2296) == 960);
    CHECK(moebius(1) == 1);
    CHECK(moebius(6) == 1);
    CHECK(moebius(30) == -1);
    CHECK(moebius(12) == 0);
    CHECK(prime_power_base(8).value() == 2);
    CHECK(prime_power_base(49).value() == 7);
    CHECK_FALSE(prime_power_base(6).has_value());
    CHECK(is_prime(883));
    CHECK_FALSE(is_prime(2296));
}

TEST_CASE("rational normalization and arithmetic") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(-6, -4) == Rational(3, 2));
    CHECK(Rational(6, -4).den() == 2);
    CHECK(Rational(6, -4).num() == -3);
    CHECK(Rational(0, 17) == Rational(0));
    CHECK(Rational(0, -17).den() == 1);
    CHECK(Rational(10, 5).is_integer());
    CHECK(Rational(10, 5).as_integer() == 2);
    CHECK_THROWS_AS(Rational(1, 0), domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), domain_error);
    CHECK_THROWS_AS(Rational(3, 2).as_integer(), domain_error);
    CHECK(Rational(1, 3).str() == "1/3");
    CHECK(Rational(-7).str() == "-7");
    CHECK(Rational(1, 2) < Rational(2, 3));
}

TEST_CASE("rational field laws on random vectors") {
    std::mt19937_64 rng(20240811);
    std::uniform_int_distribution<long> d(-40, 40);
    auto rnd = [&] {
        long den = 0;
        while (den == 0)
            den = d(rng);
        return Rational(Integer(d(rng)), Integer(den));
    };
    for (int i = 0; i < 300; ++i) {
        const Rational a = rnd(), b = rnd(), c = rnd();
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        // reduction is idempotent: renormalizing a normalized value is a no-op
        CHECK(Rational(a.num(), a.den()) == a);
        if (!b.is_zero())
            CHECK(a / b * b == a);
    }
}

TEST_CASE("bernoulli numbers, Kervaire-Milnor indexing") {
    CHECK(bernoulli(1) == Rational(1, 6));
    CHECK(bernoulli(2) == Rational(1, 30));
    CHECK(bernoulli(3) == Rational(1, 42));
    CHECK(bernoulli(4) == Rational(1, 30));
    CHECK(bernoulli(5) == Rational(5, 66));
    CHECK(bernoulli(6) == Rational(691, 2730));
    CHECK(bernoulli(7) == Rational(7, 6));
    CHECK_THROWS_AS(bernoulli(0), domain_error);

    for (long m = 1; m <= 12; ++m)
        CHECK(bernoulli(m) == oracles::bernoulli_km(m));
}

TEST_CASE("von Staudt-Clausen denominators") {
    for (long m = 1; m <= 10; ++m) {
        Integer expected = 1;
        for (Integer p = 2; p <= 2 * m + 1; ++p)
            if (is_prime(p) && (2 * m) % (p - 1) == 0)
                expected *= p;
        CHECK(bernoulli(m).den() == expected);
    }
}

TEST_CASE("bP_{4m} orders") {
    CHECK(bp_order_4m(2) == 28);
    CHECK(bp_order_4m(3) == 992);
    CHECK(bp_order_4m(4) == 8128);
    CHECK(bp_order_4m(5) == 261632);
    CHECK_THROWS_AS(bp_order_4m(1), domain_error);

    for (long m = 2; m <= 8; ++m) {
        const Integer factor = pow2(2 * m - 2) * (pow2(2 * m - 1) - 1);
        CHECK(bp_order_4m(m) % factor == 0);
        const Rational q = Rational(4) * bernoulli(m) / Rational(Integer(m));
        CHECK(bp_order_4m(m) / factor == q.num());
    }
}

TEST_CASE("bP_{4m+2} status") {
    CHECK(bp_status_4m2(2) == Bp4m2Status::Z2);
    CHECK(bp_status_4m2(1) == Bp4m2Status::Trivial);
    CHECK(bp_status_4m2(3) == Bp4m2Status::Trivial);
    CHECK(bp_status_4m2(7) == Bp4m2Status::Trivial);
    CHECK(bp_status_4m2(15) == Bp4m2Status::Trivial);
    CHECK(bp_status_4m2(31) == Bp4m2Status::ZeroOrZ2Unknown); // 4*31+2 = 126 = 2^7 - 2
    CHECK(bp_status_4m2(63) == Bp4m2Status::ZeroOrZ2Unknown);
    CHECK(bp_status_4m2(4) == Bp4m2Status::Z2);
    CHECK_THROWS_AS(bp_status_4m2(0), domain_error);
}

TEST_CASE("bp_group dispatch") {
    CHECK(bp_group(8).tag == BPGroupStatus::Tag::Cyclic);
    CHECK(bp_group(8).order == 28);
    CHECK(bp_group(10).tag == BPGroupStatus::Tag::Z2);
    CHECK(bp_group(6).tag == BPGroupStatus::Tag::Trivial);
    CHECK(bp_group(126).tag == BPGroupStatus::Tag::ZeroOrZ2Unknown);
    CHECK_THROWS_AS(bp_group(7), domain_error);
    CHECK_THROWS_AS(bp_group(4), domain_error); // 4m with m = 1: outside the formula
}
