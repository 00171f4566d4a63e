#include <doctest.h>

#include <atomic>
#include <thread>

#include "oracle.hpp"
#include "supercat/super_catalan.hpp"

using namespace supercat;

TEST_CASE("three routes to S agree with the factorial oracle") {
    for (long n = 0; n <= 30; ++n)
        for (long l = 0; l <= 30; ++l) {
            const std::string want = oracle::S(n, l).get_str();
            NLIndex idx(n, l);
            REQUIRE(super_catalan_ratio(idx).to_string() == want);
            REQUIRE(super_catalan_factorial(idx).to_string() == want);
            REQUIRE(super_catalan_von_szily(idx).to_string() == want);
            REQUIRE(super_catalan(n, l).to_string() == want);
        }
}

TEST_CASE("examples") {
    CHECK(super_catalan_ratio({0, 0}) == Integer(1));
    CHECK(super_catalan_ratio({3, 1}) == Integer(10));
    CHECK(super_catalan_ratio({2, 2}) == Integer(6));
    CHECK(super_catalan_factorial({1, 0}) == Integer(2));
    CHECK(super_catalan_factorial({4, 2}) == Integer(28));
    CHECK(super_catalan_factorial({6, 4}) == Integer(308));
    CHECK(super_catalan_von_szily({0, 0}) == Integer(1));
    CHECK(super_catalan_von_szily({1, 1}) == Integer(2));
    CHECK(super_catalan_von_szily({3, 0}) == Integer(20));
}

TEST_CASE("negative index is rejected") {
    CHECK_THROWS_AS(NLIndex(-1, 0), std::invalid_argument);
    CHECK_THROWS_AS(NLIndex(0, -3), std::invalid_argument);
    CHECK_THROWS_AS(super_catalan(-1, 2), std::invalid_argument);
}

TEST_CASE("structural properties") {
    for (long n = 0; n <= 30; ++n)
        for (long l = 0; l <= 30; ++l) {
            CHECK(super_catalan(n, l) == super_catalan(l, n));
            if (n != 0 || l != 0)
                CHECK(super_catalan(n, l).is_even());
        }
    for (long n = 0; n <= 30; ++n) {
        CHECK(super_catalan(n, 0) == central_binomial(n));
        CHECK(super_catalan(n, 1) == Integer(2) * catalan(n));
    }
}

TEST_CASE("Catalan numbers") {
    CHECK(catalan(0) == Integer(1));
    CHECK(catalan(3) == Integer(5));
    CHECK(catalan(5) == Integer(42));
    for (long n = 0; n <= 40; ++n)
        CHECK(catalan(n).to_string() == oracle::catalan(n).get_str());
    // Segner recurrence
    for (long n = 0; n < 25; ++n) {
        Integer s = 0;
        for (long i = 0; i <= n; ++i)
            s += catalan(i) * catalan(n - i);
        CHECK(s == catalan(n + 1));
    }
    CHECK_THROWS_AS(catalan(-1), std::invalid_argument);
}

TEST_CASE("memo is consistent under concurrent first access") {
    std::vector<std::thread> pool;
    std::atomic<int> bad{0};
    for (int w = 0; w < 4; ++w)
        pool.emplace_back([&] {
            for (long n = 40; n < 60; ++n)
                for (long l = 0; l < 20; ++l)
                    if (super_catalan(n, l) != super_catalan_ratio({n, l}))
                        ++bad;
        });
    for (auto& t : pool)
        t.join();
    CHECK(bad == 0);
}

TEST_CASE("phi") {
    CHECK(phi({1, 0, 0}) == Integer(4));
    CHECK(phi({1, 0, 1}) == Integer(-4));
    CHECK(phi({2, 0, 1}) == Integer(-8));
    for (long n = 0; n <= 15; ++n)
        for (long l = 0; l <= 8; ++l)
            for (long t = 0; t <= n; ++t)
                REQUIRE(phi({n, l, t}).to_string() == oracle::phi(n, l, t).get_str());
    CHECK_THROWS_AS(PhiParams(2, 0, 3), std::invalid_argument);
    CHECK_THROWS_AS(PhiParams(2, -1, 0), std::invalid_argument);
}
