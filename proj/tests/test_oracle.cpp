#include <doctest.h>

#include <random>

#include "dixit/oracle.hpp"

using namespace dixit;
using namespace dixit::oracle;

TEST_SUITE("oracle") {

TEST_CASE("schoolbook integer product") {
    CHECK(oracle_mul_int(2326, 214) == 497764);
    CHECK(oracle_mul_int(123456, 0) == 0);
    CHECK(oracle_mul_int(0, 7) == 0);
    // 12345 x 6789, checkable by hand
    CHECK(oracle_mul_int(12345, 6789) == 83810205);
    CHECK(oracle_mul_int(mpz_class("99999999999999999999"), mpz_class("99999999999999999999")) ==
          mpz_class("9999999999999999999800000000000000000001"));
    CHECK_THROWS_AS(oracle_mul_int(-1, 2), Error);
}

TEST_CASE("long division recovers constructed quotient and remainder") {
    const Polynomial n = parse_poly("6x^8+28x^7+6x^6-80x^5+38x^4+92x^3-200x^2+20x",
                                    Notation::Modern);
    const Polynomial d = parse_poly("2x^5+8x^4-20x^2", Notation::Modern);
    const PolyDivmod qr = oracle_poly_divmod(n, d);
    CHECK(render_poly(qr.quotient, Notation::Modern) == "3x^3 + 2x^2 - 5x + 10");
    CHECK(qr.quotient * d + qr.remainder == n);

    const Polynomial p = parse_poly("x^4-3x+2", Notation::Modern);
    const PolyDivmod trivial = oracle_poly_divmod(p, Polynomial::constant(Quantity::integer(1)));
    CHECK(trivial.quotient == p);
    CHECK(trivial.remainder.is_zero());

    CHECK_THROWS_AS(oracle_poly_divmod(p, Polynomial::zero()), DivisionByZeroPolynomial);

    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> deg(0, 6);
    std::uniform_int_distribution<long> coeff(-9, 9);
    for (int i = 0; i < 500; ++i) {
        Polynomial q, dd, r;
        for (int j = 0; j <= deg(rng); ++j)
            q.set_coeff(j, Quantity::from_signed(mpq_class(coeff(rng))));
        for (int j = 0; j <= deg(rng); ++j)
            dd.set_coeff(j, Quantity::from_signed(mpq_class(coeff(rng))));
        if (dd.is_zero())
            dd = Polynomial::term(2, Quantity::integer(3));
        for (int j = 0; j < *dd.degree(); ++j)
            r.set_coeff(j, Quantity::from_signed(mpq_class(coeff(rng))));
        const Polynomial nn = q * dd + r;
        const PolyDivmod got = oracle_poly_divmod(nn, dd);
        REQUIRE(got.quotient * dd + got.remainder == nn);
        REQUIRE((got.remainder.is_zero() || *got.remainder.degree() < *dd.degree()));
    }
}

TEST_CASE("the oracle modules share no algorithm state") {
    // purely behavioral: repeated calls are reproducible and independent
    CHECK(oracle_mul_int(314159, 271828) == oracle_mul_int(314159, 271828));
    const Quantity a = Quantity::fraction(-7, 3);
    const Quantity b = Quantity::fraction(5, 2);
    CHECK(oracle_mul(a, b) == Quantity::fraction(-35, 6));
    CHECK(oracle_div(a, b) == Quantity::fraction(-14, 15));
    CHECK(oracle_add(a, b) == Quantity::fraction(1, 6));
    CHECK(oracle_sub(a, b) == Quantity::fraction(-29, 6));
    CHECK_THROWS_AS(oracle_div(a, Quantity::nothing()), DivisionByNothing);
}

} // TEST_SUITE
