#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ggm/qpoly.hpp"

using ggm::QPoly;
using ggm::Rational;

TEST_CASE("zero polynomial and trimming") {
    QPoly z;
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
    QPoly also_zero({Rational(0), Rational(0)});
    CHECK(also_zero.is_zero());
    QPoly p({Rational(1), Rational(2), Rational(0)});
    CHECK(p.degree() == 1);
    CHECK(p.leading_coeff() == 2);
    CHECK(p.coeff(5) == 0);
}

TEST_CASE("ring operations") {
    QPoly p({Rational(1), Rational(1)});        // 1 + x
    QPoly q({Rational(-1), Rational(1)});       // -1 + x
    CHECK(p * q == QPoly({Rational(-1), Rational(0), Rational(1)}));
    CHECK(p + q == QPoly({Rational(0), Rational(2)}));
    CHECK(p - p == QPoly::zero());
    CHECK((p * Rational(3)).coeff(0) == 3);
    CHECK(-p == QPoly({Rational(-1), Rational(-1)}));

    // exact cancellation of leading terms must retrim
    QPoly a({Rational(0), Rational(0), Rational(1)});
    QPoly b({Rational(1), Rational(0), Rational(1)});
    CHECK((b - a).degree() == 0);
}

TEST_CASE("evaluation, exact and floating") {
    QPoly p({Rational(1, 2), Rational(0), Rational(-3)});  // 1/2 - 3x^2
    CHECK(p.eval_exact(Rational(1, 3)) == Rational(1, 6));
    CHECK(p.eval(0.5) == doctest::Approx(0.5 - 0.75));
    std::complex<double> v = p.eval(std::complex<double>(0.0, 1.0));
    CHECK(v.real() == doctest::Approx(3.5));
    CHECK(v.imag() == doctest::Approx(0.0));
}

TEST_CASE("derivative, monic, reflection") {
    QPoly p({Rational(5), Rational(-1), Rational(4)});
    CHECK(p.derivative() == QPoly({Rational(-1), Rational(8)}));
    CHECK(p.monic().leading_coeff() == 1);
    CHECK(p.reflected() == QPoly({Rational(5), Rational(1), Rational(4)}));
    CHECK(QPoly::zero().derivative().is_zero());
}

TEST_CASE("division with remainder") {
    QPoly p({Rational(-4), Rational(0), Rational(0), Rational(1)});  // x^3 - 4
    QPoly q({Rational(-1), Rational(1)});                            // x - 1
    auto dm = ggm::poly_divmod(p, q);
    CHECK(dm.quot * q + dm.rem == p);
    CHECK(dm.rem.degree() < q.degree());
    CHECK_THROWS_AS(ggm::poly_divmod(p, QPoly::zero()), std::invalid_argument);
}

TEST_CASE("exact division enforces divisibility") {
    QPoly p({Rational(-1), Rational(0), Rational(1)});
    QPoly q({Rational(1), Rational(1)});
    CHECK(ggm::poly_divexact(p, q) == QPoly({Rational(-1), Rational(1)}));
    CHECK_THROWS_AS(ggm::poly_divexact(q, p), std::logic_error);
}

TEST_CASE("gcd") {
    QPoly p({Rational(-1), Rational(0), Rational(1)});   // (x-1)(x+1)
    QPoly q({Rational(1), Rational(2), Rational(1)});    // (x+1)^2
    CHECK(ggm::poly_gcd(p, q) == QPoly({Rational(1), Rational(1)}));
    CHECK(ggm::poly_gcd(p, QPoly::zero()) == p.monic());
    CHECK_THROWS(ggm::poly_gcd(QPoly::zero(), QPoly::zero()));

    // coprime inputs give a constant gcd
    QPoly r({Rational(3), Rational(1)});
    CHECK(ggm::poly_gcd(q, r).degree() == 0);
}
