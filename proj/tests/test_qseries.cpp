#include <doctest.h>

#include "oracles.hpp"
#include "qprime/forms.hpp"
#include "qprime/qseries.hpp"

using namespace qprime;

namespace {

QExpansion poly(std::initializer_list<long> cs, std::size_t precision)
{
    QExpansion out(precision);
    std::size_t n = 0;
    for (const long c : cs) {
        out[n++] = c;
    }
    return out;
}

} // namespace

TEST_CASE("series_add")
{
    const QExpansion g4 = eisenstein_G(4, 30);
    CHECK(g4 + QExpansion(30) == g4);
    CHECK((g4 + g4 * Rational(-1)).is_zero());
    CHECK(poly({1, 1}, 5) + poly({1, -1}, 5) == QExpansion::constant(2, 5));
}

TEST_CASE("mixed precision truncates to the minimum")
{
    const QExpansion a = eisenstein_G(4, 10);
    const QExpansion b = eisenstein_G(6, 7);
    CHECK((a + b).precision() == 7);
    CHECK((a * b).precision() == 7);
    CHECK(a == a.truncated(3));
}

TEST_CASE("series_mul examples")
{
    const QExpansion a = eisenstein_G(6, 40);
    CHECK(a * QExpansion::constant(1, 40) == a);

    QExpansion geometric(20);
    for (std::size_t n = 0; n <= 20; ++n) {
        geometric[n] = 1;
    }
    CHECK(poly({1, -1}, 20) * geometric == QExpansion::constant(1, 20));

    // q * prod_{n<=N} (1 - q^n)^24 has coefficient -24 at q^2.
    const std::size_t N = 12;
    QExpansion euler = QExpansion::constant(1, N);
    for (std::size_t n = 1; n <= N; ++n) {
        QExpansion factor = QExpansion::constant(1, N);
        factor[n] = -1;
        euler = euler * factor;
    }
    const QExpansion eta24 = series_pow(euler, 24);
    CHECK(eta24[1] == -24);
}

TEST_CASE("series_mul agrees with naive rational schoolbook")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const QExpansion a = oracle::random_expansion(rng, 40);
        const QExpansion b = oracle::random_expansion(rng, 35);
        REQUIRE(a * b == oracle::naive_mul(a, b));
    }
    // Large coefficients exercise the arbitrary-precision path.
    QExpansion big(30);
    for (std::size_t n = 0; n <= 30; ++n) {
        Rational value(Integer("123456789012345678901234567890") * (n + 1), 7);
        value.canonicalize();
        big[n] = value;
    }
    const QExpansion small = oracle::random_expansion(rng, 30);
    CHECK(big * small == oracle::naive_mul(big, small));
    CHECK(big * big == oracle::naive_mul(big, big));
}

TEST_CASE("ring axioms at precision 50")
{
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 10; ++trial) {
        const QExpansion a = oracle::random_expansion(rng, 50);
        const QExpansion b = oracle::random_expansion(rng, 50);
        const QExpansion c = oracle::random_expansion(rng, 50);
        REQUIRE(a * b == b * a);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a + b == b + a);
        REQUIRE((a + b) + c == a + (b + c));
    }
}

TEST_CASE("D operator")
{
    CHECK(series_D(QExpansion::constant(5, 10)).is_zero());
    CHECK(series_D(eisenstein_G(2, 10), 2)[3] == 36);
    CHECK(series_D(eisenstein_G(4, 10))[2] == 18);
    CHECK(series_D(eisenstein_G(4, 10), 0) == eisenstein_G(4, 10));
}

TEST_CASE("Leibniz rule and iterated D")
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        const QExpansion a = oracle::random_expansion(rng, 50);
        const QExpansion b = oracle::random_expansion(rng, 50);
        REQUIRE(series_D(a * b) == series_D(a) * b + a * series_D(b));
        for (unsigned l = 1; l <= 4; ++l) {
            QExpansion iterated = a;
            for (unsigned i = 0; i < l; ++i) {
                iterated = series_D(iterated);
            }
            REQUIRE(iterated == series_D(a, l));
        }
    }
}

TEST_CASE("series_pow")
{
    const QExpansion g = eisenstein_G(4, 25);
    CHECK(series_pow(g, 0) == QExpansion::constant(1, 25));
    CHECK(series_pow(g, 3) == g * g * g);
}
