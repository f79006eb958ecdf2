#include <cmath>
#include <numeric>

#include "doctest.h"
#include "est/numerics.hpp"
#include "est/rationals.hpp"
#include "support.hpp"

using namespace est;
using testing_support::Gen;

TEST_CASE("cf_expand examples") {
    CHECK(cf_expand(ReducedFraction::make(1, 2)).quotients == std::vector<std::int64_t>{1});
    CHECK(cf_expand(ReducedFraction::make(1, 3)).quotients == std::vector<std::int64_t>{2});
    const CFExpansion cf = cf_expand(ReducedFraction::make(5, 7));
    CHECK(cf.quotients == std::vector<std::int64_t>{1, 2, 1});
    CHECK(cf.trailing_one);
    CHECK(cf_expand(ReducedFraction::make(5, 7), CFConvention::standard).quotients ==
          std::vector<std::int64_t>{1, 2, 2});
}

TEST_CASE("cf reconstruction is exact and quotient sizes are sane for q <= 5000") {
    long failures = 0;
    for (std::int64_t q = 2; q <= 5000; ++q) {
        for (std::int64_t a = 1; a < q; ++a) {
            if (std::gcd(a, q) != 1) continue;
            const CFExpansion cf = cf_expand({a, q});
            const auto back = cf_reconstruct(cf);
            std::int64_t sum = 1, prod = 1;
            for (auto b : cf.quotients) {
                sum += b;
                prod *= b;
                if (b < 1) ++failures;
            }
            if (back.first != a || back.second != q) ++failures;
            if (double(sum) < std::log2(double(q))) ++failures;
            if (prod > q) ++failures;
        }
    }
    CHECK(failures == 0);
}

TEST_CASE("standard convention reconstructs too") {
    for (std::int64_t q : {7, 97, 1000}) {
        for (std::int64_t a = 1; a < q; ++a) {
            if (std::gcd(a, q) != 1) continue;
            const auto back = cf_reconstruct(cf_expand({a, q}, CFConvention::standard));
            CHECK(back == std::make_pair(a, q));
        }
    }
}

TEST_CASE("f_moment examples") {
    CHECK(f_moment(ReducedFraction::make(1, 2), 1, 1) == doctest::Approx(1.0));
    CHECK(f_moment(ReducedFraction::make(1, 3), 2, 1) == doctest::Approx(2.0));
    CHECK(std::abs(f_moment(ReducedFraction::make(5, 7), 1, -1) - (std::sqrt(2.0) - 2.0)) < 1e-15);
    CHECK_THROWS_AS(f_moment(ReducedFraction::make(5, 7), 1, 0), std::invalid_argument);
}

TEST_CASE("dedekind sum examples") {
    CHECK(dedekind_sum(1, 2) == Rational(0));
    CHECK(dedekind_sum(1, 3) == Rational(1, 18));
    CHECK(dedekind_sum(1, 3).to_string() == "1/18");
    const Rational lhs = dedekind_sum(3, 7) + dedekind_sum(7, 3);
    const Rational rhs = Rational(-1, 4) + Rational(1, 12) * (Rational(3, 7) + Rational(7, 3) + Rational(1, 21));
    CHECK(lhs == rhs);
    CHECK_THROWS_AS(dedekind_sum(2, 4), std::invalid_argument);
}

TEST_CASE("dedekind sum oddness and reciprocity on random coprime pairs") {
    Gen gen(101);
    int checked = 0;
    while (checked < 500) {
        const std::int64_t a = gen.integer(1, 20000), q = gen.integer(2, 20000);
        if (std::gcd(a, q) != 1) continue;
        ++checked;
        CHECK(dedekind_sum(q - a % q, q) == -dedekind_sum(a, q));
        const Rational lhs = dedekind_sum(a, q) + dedekind_sum(q, a);
        const Rational rhs =
            Rational(-1, 4) + Rational(1, 12) * (Rational(a, q) + Rational(q, a) + Rational(1, a * q));
        CHECK(lhs == rhs);
        const Rational s = dedekind_sum(a, q);
        CHECK(std::abs(s.to_double()) <= double(q));
    }
}

TEST_CASE("cotangent sum c0") {
    CHECK(std::abs(cotangent_sum_c0(ReducedFraction::make(1, 2))) < 1e-15);
    CHECK(std::abs(cotangent_sum_c0(ReducedFraction::make(1, 3)) - 1.0 / 3.0 / std::tan(kPi / 3.0)) <
          1e-14);
    for (std::int64_t q : {5, 11, 97}) {
        for (std::int64_t a = 1; a < q; ++a)
            CHECK(std::abs(cotangent_sum_c0({q - a, q}) + cotangent_sum_c0({a, q})) < 1e-9);
    }
}

TEST_CASE("mod_inverse") {
    CHECK(mod_inverse(1, 13) == 1);
    CHECK(mod_inverse(2, 5) == 3);
    CHECK(mod_inverse(17, 101) == 6);
    CHECK(mod_inverse(-3, 7) == 2);
    CHECK_THROWS_AS(mod_inverse(4, 8), std::invalid_argument);
    Gen gen(3);
    for (int i = 0; i < 200; ++i) {
        const std::int64_t q = gen.integer(2, 1000000), a = gen.integer(1, q - 1);
        if (std::gcd(a, q) != 1) continue;
        CHECK(a * mod_inverse(a, q) % q == 1);
    }
}

TEST_CASE("reduced fraction validation and primality") {
    CHECK_THROWS_AS(ReducedFraction::make(2, 4), std::invalid_argument);
    CHECK_THROWS_AS(ReducedFraction::make(0, 5), std::invalid_argument);
    CHECK_THROWS_AS(ReducedFraction::make(5, 5), std::invalid_argument);
    CHECK(is_prime(100003));
    CHECK_FALSE(is_prime(100001));
    CHECK(mod_pow(3, 100002, 100003) == 1);
}
