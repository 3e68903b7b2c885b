#include <doctest.h>

#include "oracles.hpp"
#include "qprime/decompose.hpp"

using namespace qprime;

namespace {

QuasiForm random_form(std::mt19937_64& rng)
{
    QuasiForm f;
    std::uniform_int_distribution<int> pick(0, 5);
    for (int t = 0; t < 4; ++t) {
        const int l = pick(rng) % 3;
        switch (pick(rng)) {
        case 0: f.add_eis({2, l}, oracle::random_rational(rng)); break;
        case 1: f.add_eis({4 + 2 * (pick(rng) % 4), l}, oracle::random_rational(rng)); break;
        case 2: f.add_cusp({12, 0, l}, oracle::random_rational(rng)); break;
        case 3: f.add_cusp({24, pick(rng) % 2, l}, oracle::random_rational(rng)); break;
        case 4: f.add_constant(oracle::random_rational(rng)); break;
        default: f.add_cusp({16, 0, l}, oracle::random_rational(rng)); break;
        }
    }
    return f;
}

} // namespace

TEST_CASE("split_eis_cusp examples")
{
    const auto g12 = split_eis_cusp(QuasiForm::eisenstein(12));
    CHECK(g12.eis_part == QuasiForm::eisenstein(12));
    CHECK(g12.cusp_part.is_zero());
    CHECK(g12.certificate_precision == 60);

    const auto d = split_eis_cusp(QuasiForm::cusp_form(12, 0));
    CHECK(d.eis_part.is_zero());
    CHECK(d.cusp_part == QuasiForm::cusp_form(12, 0));
}

TEST_CASE("G_4^3 has a genuine cusp component")
{
    // Classical G_4^3 = x G_12 + y Delta. The constant fixes x, q^1 fixes y.
    const auto classical = EisensteinConvention::classical;
    const Rational g4_const(1, 240);
    const Rational g12_const(691, 65520);
    const Rational x = g4_const * g4_const * g4_const / g12_const;
    // [q^1] G_4^3 = 3 (1/240)^2.
    const Rational y = 3 * g4_const * g4_const - x;

    const QuasiForm f = from_monomials(GeneratorMonomialCombo::single({0, 3, 0}), 60, classical);
    const auto split = split_eis_cusp(f, 60, classical);
    CHECK(split.eis_part == QuasiForm::eisenstein(12, 0, x));
    CHECK(split.cusp_part == QuasiForm::cusp_form(12, 0, 0, y));

    const auto tau = oracle::delta_by_product(60);
    QExpansion g4(60);
    g4[0] = g4_const;
    for (std::uint64_t n = 1; n <= 60; ++n) {
        g4[n] = oracle::sigma(3, n);
    }
    const QExpansion direct = oracle::naive_mul(oracle::naive_mul(g4, g4), g4);
    for (std::uint64_t n = 0; n <= 60; ++n) {
        const Rational eis = n == 0 ? g12_const : Rational(oracle::sigma(11, n));
        REQUIRE(direct[n] == x * eis + y * tau[n]);
    }

    // Paper convention: same cusp part, the Eisenstein side also picks up
    // lower weights and a constant.
    const QuasiForm p = from_monomials(GeneratorMonomialCombo::single({0, 3, 0}), 60);
    const auto psplit = split_eis_cusp(p);
    CHECK(psplit.cusp_part == QuasiForm::cusp_form(12, 0, 0, y));
    CHECK(psplit.eis_part.constant() != 0);
}

TEST_CASE("split is idempotent")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const QuasiForm f = random_form(rng);
        const auto s = split_eis_cusp(f);
        const auto se = split_eis_cusp(s.eis_part);
        const auto sc = split_eis_cusp(s.cusp_part);
        REQUIRE(se.eis_part == s.eis_part);
        REQUIRE(se.cusp_part.is_zero());
        REQUIRE(sc.eis_part.is_zero());
        REQUIRE(sc.cusp_part == s.cusp_part);
        REQUIRE(s.eis_part + s.cusp_part == f);
    }
}

TEST_CASE("split is linear")
{
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 30; ++trial) {
        const QuasiForm f = random_form(rng);
        const QuasiForm g = random_form(rng);
        const Rational a = oracle::random_rational(rng);
        const Rational b = oracle::random_rational(rng);
        const auto lhs = split_eis_cusp(a * f + b * g);
        const auto sf = split_eis_cusp(f);
        const auto sg = split_eis_cusp(g);
        REQUIRE(lhs.eis_part == a * sf.eis_part + b * sg.eis_part);
        REQUIRE(lhs.cusp_part == a * sf.cusp_part + b * sg.cusp_part);
    }
}

TEST_CASE("reconstruction holds at precision 60 in both conventions")
{
    std::mt19937_64 rng(13);
    for (const auto conv : {EisensteinConvention::paper, EisensteinConvention::classical}) {
        for (int trial = 0; trial < 20; ++trial) {
            const QuasiForm f = random_form(rng);
            const auto s = split_eis_cusp(f, 60, conv);
            REQUIRE(quasiform_expand(s.eis_part, 60, conv) + quasiform_expand(s.cusp_part, 60, conv)
                == quasiform_expand(f, 60, conv));
        }
    }
}

TEST_CASE("split_realified")
{
    const QuasiForm g4 = QuasiForm::eisenstein(4);
    const QuasiForm d = QuasiForm::cusp_form(12, 0);
    const QuasiForm mixed = hk_form(8) + d * Rational(3);

    auto [re, im] = split_realified(ComplexQuasiForm::from_real(mixed));
    CHECK(re == mixed);
    CHECK(im.is_zero());

    std::tie(re, im) = split_realified(ComplexQuasiForm::from_real(g4, {0, 1}));
    CHECK(re.is_zero());
    CHECK(im == g4);

    std::tie(re, im) = split_realified(ComplexQuasiForm::from_real(d, {1, 1}));
    CHECK(re == d);
    CHECK(im == d);

    ComplexQuasiForm c;
    c.constant = {Rational(1, 2), -3};
    c.eis[{6, 1}] = {0, Rational(2, 7)};
    std::tie(re, im) = split_realified(c);
    CHECK(re == QuasiForm::constant_form(Rational(1, 2)));
    CHECK(im == QuasiForm::constant_form(-3) + QuasiForm::eisenstein(6, 1, Rational(2, 7)));
}
