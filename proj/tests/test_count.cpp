#include <bideal/count.hpp>

#include <catch_amalgamated.hpp>

#include "oracles.hpp"

using bideal::binomial;
using bideal::binomial_or_zero;
using bideal::catalan;
using bideal::Count;
using bideal::pow2;

TEST_CASE("binomial matches Pascal's triangle") {
    const auto tri = oracles::pascal(41);
    for (int a = 0; a <= 40; ++a)
        for (int b = 0; b <= a; ++b)
            REQUIRE(binomial(a, b) == tri[static_cast<size_t>(a)][static_cast<size_t>(b)]);
}

TEST_CASE("binomial spot values") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(20, 10) == 184756);
    CHECK(binomial(64, 32) == Count("1832624140942590534"));
}

TEST_CASE("binomial outside the triangle") {
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(5, 6) == 0);
    CHECK_THROWS_AS(binomial(-1, 0), std::domain_error);
    CHECK(binomial_or_zero(-1, 0) == 0);
    CHECK(binomial_or_zero(-3, -5) == 0);
    CHECK(binomial_or_zero(6, 2) == 15);
}

TEST_CASE("binomial beyond the memo table") {
    CHECK(binomial(257, 1) == 257);
    CHECK(binomial(300, 2) == 44850);
    CHECK(binomial(300, 7) == binomial(299, 6) + binomial(299, 7));
    CHECK(binomial(301, 150) == binomial(301, 151));
}

TEST_CASE("powers of two") {
    CHECK(pow2(0) == 1);
    CHECK(pow2(1) == 2);
    CHECK(pow2(10) == 1024);
    CHECK(pow2(100) == Count("1267650600228229401496703205376"));
}

TEST_CASE("Catalan numbers") {
    const Count expected[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862};
    for (int n = 0; n <= 9; ++n) REQUIRE(catalan(n) == expected[n]);
    for (int n = 1; n <= 30; ++n)
        REQUIRE(catalan(n) == binomial(2 * n, n) - binomial(2 * n, n - 1));
}
