#include <doctest.h>

#include "oracles.hpp"
#include "qprime/exactnum.hpp"
#include "qprime/linalg.hpp"

using namespace qprime;

TEST_CASE("bernoulli values")
{
    CHECK(bernoulli(0) == 1);
    CHECK(bernoulli(1) == Rational(-1, 2));
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(4) == Rational(-1, 30));
    CHECK(bernoulli(12) == Rational(-691, 2730));
    CHECK_THROWS_AS(bernoulli(3), DomainError);
    CHECK_THROWS_AS(bernoulli(-2), DomainError);
}

TEST_CASE("bernoulli agrees with the generating function")
{
    for (int k = 0; k <= 30; k += 2) {
        CAPTURE(k);
        CHECK(bernoulli(k) == oracle::bernoulli_by_series(k));
    }
}

TEST_CASE("bernoulli satisfies its recurrence for even m <= 40")
{
    std::vector<Rational> b(41);
    for (int j = 0; j <= 40; ++j) {
        b[j] = (j == 1 || j % 2 == 0) ? bernoulli(j) : Rational(0);
    }
    for (int m = 2; m <= 40; m += 2) {
        Rational acc = 0;
        Integer binom = 1;
        for (int j = 0; j <= m; ++j) {
            acc += binom * b[j];
            binom = binom * (m + 1 - j) / (j + 1);
        }
        CAPTURE(m);
        CHECK(acc == 0);
    }
}

TEST_CASE("sigma examples and errors")
{
    CHECK(sigma(0, 1) == 1);
    CHECK(sigma(1, 6) == 12);
    CHECK(sigma(3, 6) == 252);
    CHECK(sigma(11, 1) == 1);
    CHECK_THROWS_AS(sigma(1, 0), DomainError);
}

TEST_CASE("sigma tables match divisor enumeration")
{
    for (unsigned r = 0; r <= 11; ++r) {
        const auto table = sigma_table(r, 10000);
        for (std::uint64_t n = 1; n <= 10000; ++n) {
            CAPTURE(r);
            CAPTURE(n);
            REQUIRE(table[n] == oracle::sigma(r, n));
        }
        CHECK(sigma(r, 9973) == table[9973]);
        CHECK(sigma(r, 7560) == table[7560]);
    }
}

TEST_CASE("sigma point evaluation matches the table for all n <= 10^4")
{
    const auto table = sigma_table(5, 10000);
    for (std::uint64_t n = 1; n <= 10000; ++n) {
        REQUIRE(sigma(5, n) == table[n]);
    }
}

TEST_CASE("primes_up_to")
{
    CHECK(primes_up_to(1).empty());
    CHECK(primes_up_to(10).primes() == std::vector<std::uint64_t> {2, 3, 5, 7});
    CHECK(primes_up_to(100).size() == 25);

    const PrimeList list = primes_up_to(100000);
    std::size_t idx = 0;
    for (std::uint64_t n = 1; n <= 100000; ++n) {
        if (oracle::is_prime(n)) {
            REQUIRE(idx < list.size());
            REQUIRE(list[idx] == n);
            ++idx;
        }
    }
    CHECK(idx == list.size());
    CHECK(std::is_sorted(list.begin(), list.end()));
}

TEST_CASE("first_primes and is_prime")
{
    CHECK(first_primes(5) == std::vector<std::uint64_t> {2, 3, 5, 7, 11});
    CHECK(first_primes(1000).back() == 7919);
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(7919));
    CHECK_FALSE(is_prime(7917));
}

TEST_CASE("rational parsing and printing")
{
    CHECK(to_string(Rational(-1, 240)) == "-1/240");
    CHECK(to_string(Rational(6)) == "6");
    CHECK(parse_rational("4/6") == Rational(2, 3));
    CHECK(parse_rational("-12") == -12);
    CHECK(parse_rational("+3/9") == Rational(1, 3));
    CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
    CHECK_THROWS_AS(parse_rational("1.5"), DomainError);
    CHECK_THROWS_AS(parse_rational(""), DomainError);
    CHECK_THROWS_AS(parse_rational("1/-2"), DomainError);
}

TEST_CASE("exact solve and rank")
{
    RationalMatrix a(3, 2);
    a(0, 0) = 1;
    a(0, 1) = 2;
    a(1, 0) = 3;
    a(1, 1) = 4;
    a(2, 0) = 5;
    a(2, 1) = 6;
    CHECK(rank(a) == 2);
    auto x = solve(a, {5, 11, 17});
    REQUIRE(x);
    CHECK((*x)[0] == 1);
    CHECK((*x)[1] == 2);
    CHECK_FALSE(solve(a, {5, 11, 18}));
}
