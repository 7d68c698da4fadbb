#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ggm/pn_family.hpp"
#include "ggm/roots.hpp"

#include <algorithm>
#include <cmath>

using ggm::QPoly;
using ggm::Rational;

TEST_CASE("quadratic with known roots") {
    QPoly p({Rational(-2), Rational(0), Rational(1)});  // x^2 - 2
    auto roots = ggm::poly_roots_numeric(p);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].real() == doctest::Approx(-std::sqrt(2.0)));
    CHECK(roots[1].real() == doctest::Approx(std::sqrt(2.0)));
    CHECK(std::abs(roots[0].imag()) < 1e-12);
}

TEST_CASE("complex conjugate pair") {
    QPoly p({Rational(1), Rational(0), Rational(1)});  // x^2 + 1
    auto roots = ggm::poly_roots_numeric(p);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].imag() == doctest::Approx(-1.0));
    CHECK(roots[1].imag() == doctest::Approx(1.0));
}

TEST_CASE("degenerate inputs") {
    CHECK_THROWS(ggm::poly_roots_numeric(QPoly::zero()));
    CHECK(ggm::poly_roots_numeric(QPoly({Rational(7)})).empty());
    auto linear = ggm::poly_roots_numeric(QPoly({Rational(3), Rational(2)}));
    REQUIRE(linear.size() == 1);
    CHECK(linear[0].real() == doctest::Approx(-1.5));
}

TEST_CASE("numeric roots of the tridiagonal determinants match the closed form") {
    ggm::PnTable t(14);
    for (int n = 2; n <= 14; ++n) {
        auto expected = ggm::cosine_roots(n);
        std::sort(expected.begin(), expected.end());
        auto got = ggm::poly_roots_numeric(t.poly(n));
        REQUIRE(got.size() == expected.size());
        for (size_t i = 0; i < got.size(); ++i) {
            CHECK(got[i].real() == doctest::Approx(expected[i]).epsilon(1e-8));
            CHECK(std::abs(got[i].imag()) < 1e-8);
        }
    }
}

TEST_CASE("clustering merges a multiple root") {
    // (x - 1)^3 (x + 2)
    QPoly cube({Rational(-1), Rational(1)});
    QPoly p = cube * cube * cube * QPoly({Rational(2), Rational(1)});
    auto clusters = ggm::poly_roots_clustered(p, 1e-6);
    REQUIRE(clusters.size() == 2);
    int total = 0;
    bool saw_triple = false;
    for (const auto& c : clusters) {
        total += c.multiplicity;
        if (c.multiplicity == 3) {
            saw_triple = true;
            CHECK(c.value.real() == doctest::Approx(1.0).epsilon(1e-4));
        }
    }
    CHECK(total == 4);
    CHECK(saw_triple);
}
