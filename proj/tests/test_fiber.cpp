#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ggm/cycle_fiber.hpp"
#include "ggm/roots.hpp"

#include <random>

using ggm::Complex;
using ggm::ComplexMatrix;
using ggm::FiberFamily;
using ggm::PnTable;
using ggm::QPoly;
using ggm::Rational;

TEST_CASE("matrix builders") {
    auto t = ggm::tridiagonal_matrix<double>(4, 0.5);
    CHECK(t(0, 0) == 1.0);
    CHECK(t(1, 2) == 0.5);
    CHECK(t(0, 3) == 0.0);
    auto p = ggm::cyclic_matrix_plus<double>(4, 0.5);
    CHECK(p(0, 3) == 0.5);
    auto m = ggm::cyclic_matrix_minus<double>(4, 0.5);
    CHECK(m(3, 0) == -0.5);
    auto cb = ggm::checkerboard_matrix<double>(4);
    CHECK(cb(0, 0) == 1.0);
    CHECK(cb(0, 1) == 0.0);
    CHECK(cb(1, 3) == 1.0);
    CHECK_THROWS(ggm::checkerboard_matrix<double>(5));
    auto conj = ggm::conjugate_by_signs<double>({1, -1, 1, 1}, t);
    CHECK(conj(0, 1) == -0.5);
    CHECK(conj(1, 2) == -0.5);
    CHECK(conj(1, 1) == 1.0);
}

TEST_CASE("defining polynomials for small cycles") {
    PnTable t(12);
    // n = 4: both families are constants (no generator parameters)
    CHECK(ggm::fiber_defining_polynomial(4, FiberFamily::Plus, t).degree() == 0);
    CHECK(ggm::fiber_defining_polynomial(4, FiberFamily::Minus, t).degree() == 0);
    // n = 5: 1 + x
    CHECK(ggm::fiber_defining_polynomial(5, FiberFamily::Plus, t) ==
          QPoly({Rational(1), Rational(1)}));
    // n = 6: 1 - 2x^2
    CHECK(ggm::fiber_defining_polynomial(6, FiberFamily::Plus, t) ==
          QPoly({Rational(1), Rational(0), Rational(-2)}));
    CHECK(ggm::fiber_defining_polynomial(6, FiberFamily::Minus, t).degree() == 0);
    CHECK_THROWS(ggm::fiber_defining_polynomial(5, FiberFamily::Minus, t));
}

TEST_CASE("generator parameters satisfy the cyclic determinant factorization") {
    // at a root x of the plus (resp. minus) polynomial the corresponding cyclic
    // matrix is singular-free but its inverse drops into the model: check det != 0
    PnTable t(20);
    for (int n = 5; n <= 10; ++n) {
        QPoly plus = ggm::fiber_defining_polynomial(n, FiberFamily::Plus, t);
        if (plus.degree() < 1) continue;
        for (const auto& r : ggm::poly_roots_clustered(plus)) {
            CHECK(std::abs(r.value.imag()) < 1e-9);  // all parameters are real
            auto m = ggm::cyclic_matrix_plus<Complex>(n, r.value);
            CHECK(std::abs(m.determinant()) > 1e-8);
        }
    }
}

TEST_CASE("fiber cardinality matches the closed formula") {
    PnTable t(24);
    for (int n = 4; n <= 10; ++n) {
        auto points = ggm::enumerate_fiber(n, t);
        auto expected = static_cast<size_t>(1 + (n - 3) * (1LL << (n - 2)));
        CHECK(points.size() == expected);
        CHECK(ggm::fiber_lower_bound(n, t) == static_cast<std::int64_t>(expected));
    }
}

TEST_CASE("expected counts for the first few cycles") {
    PnTable t(24);
    CHECK(ggm::enumerate_fiber(4, t).size() == 5);
    CHECK(ggm::enumerate_fiber(5, t).size() == 17);
    CHECK(ggm::enumerate_fiber(6, t).size() == 49);
    CHECK(ggm::enumerate_fiber(7, t).size() == 129);
    CHECK(ggm::enumerate_fiber(8, t).size() == 321);
}

TEST_CASE("every enumerated point passes the membership check") {
    PnTable t(16);
    for (int n : {5, 6, 7}) {
        for (const auto& p : ggm::enumerate_fiber(n, t)) {
            auto check = ggm::verify_fiber_point(p);
            CHECK(check.ok);
            CHECK(check.max_residual < 1e-9);
        }
    }
}

TEST_CASE("enumerated points are pairwise distinct") {
    PnTable t(16);
    for (int n : {5, 6}) {
        auto points = ggm::enumerate_fiber(n, t);
        for (size_t a = 0; a < points.size(); ++a)
            for (size_t b = a + 1; b < points.size(); ++b) {
                double diff = (points[a].matrix - points[b].matrix).cwiseAbs().maxCoeff();
                CHECK(diff > 1e-6);
            }
    }
}

TEST_CASE("sign conjugation preserves fiber membership") {
    PnTable t(16);
    std::mt19937_64 rng(99);
    for (const auto& p : ggm::enumerate_fiber(6, t)) {
        std::vector<int> signs(6);
        for (auto& s : signs) s = (rng() & 1) ? 1 : -1;
        ggm::FiberPoint q = p;
        q.matrix = ggm::conjugate_by_signs(signs, p.matrix);
        CHECK(ggm::verify_fiber_point(q).ok);
    }
}

TEST_CASE("membership minors reject a perturbed point") {
    PnTable t(16);
    auto points = ggm::enumerate_fiber(5, t);
    ComplexMatrix bad = points[1].matrix;
    bad(0, 2) += 0.05;
    bad(2, 0) += 0.05;
    CHECK(ggm::cycle_membership_minors(bad, 5) > 1e-3);
}

TEST_CASE("signed first minors against direct cofactors") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    ggm::DenseMatrix<double> m(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = u(rng);
    Eigen::MatrixXd adj = m.determinant() * m.inverse();  // adjugate
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(ggm::gamma_minor<double>(m, {i, j}) == doctest::Approx(adj(j, i)).epsilon(1e-9));
}

TEST_CASE("pair minors are derivatives of first minors") {
    // with the scaling where the diagonal coordinate of the quadratic form
    // carries a factor 2, the derivative of gamma_minor(K, e) in coordinate f is
    // gamma_pair(K, e, f); check by central differences.
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(-0.2, 0.2);
    int n = 5;
    ggm::DenseMatrix<double> k = ggm::DenseMatrix<double>::Identity(n, n) * 2.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) k(i, j) = k(j, i) = u(rng);

    double h = 1e-6;
    for (int i1 = 0; i1 < n; ++i1)
        for (int j1 = i1; j1 < n; ++j1)
            for (int i2 = 0; i2 < n; ++i2)
                for (int j2 = i2; j2 < n; ++j2) {
                    auto perturbed = [&](double delta) {
                        ggm::DenseMatrix<double> kp = k;
                        if (i2 == j2) {
                            kp(i2, i2) += 2.0 * delta;
                        } else {
                            kp(i2, j2) += delta;
                            kp(j2, i2) += delta;
                        }
                        return ggm::gamma_minor<double>(kp, {i1, j1});
                    };
                    double fd = (perturbed(h) - perturbed(-h)) / (2.0 * h);
                    double exact = ggm::gamma_pair<double>(k, {i1, j1}, {i2, j2});
                    CHECK(exact == doctest::Approx(fd).epsilon(1e-4));
                }
}

TEST_CASE("exact-rational pair minors agree with the double instantiation") {
    int n = 4;
    ggm::RationalMatrix k(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            k(i, j) = (i == j) ? Rational(3) : Rational(1, 1 + i + j);
    ggm::DenseMatrix<double> kd(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) kd(i, j) = ggm::to_double(k(i, j));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            double exact = ggm::to_double(ggm::gamma_pair<Rational>(k, {0, 1}, {i, j}));
            CHECK(ggm::gamma_pair<double>(kd, {0, 1}, {i, j}) ==
                  doctest::Approx(exact).epsilon(1e-12));
        }
}

TEST_CASE("parametrization is regular at the identity and at fiber points") {
    PnTable t(16);
    for (int n : {4, 5, 6}) {
        ggm::Graph g = ggm::cycle_graph(n);
        auto id = ggm::jacobian_regularity(Eigen::MatrixXd::Identity(n, n), g);
        CHECK(id.regular);
        for (const auto& p : ggm::enumerate_fiber(n, t)) {
            if (!p.regular) continue;
            auto kc = ggm::point_concentration(p);
            CHECK(kc.imag().cwiseAbs().maxCoeff() < 1e-9);  // concentrations are real
            auto rep = ggm::jacobian_regularity(kc.real(), g);
            CHECK(rep.regular);
            CHECK(std::abs(rep.det_value) > 1e-10);
        }
    }
}

TEST_CASE("singular points have no concentration matrix") {
    PnTable t(16);
    for (const auto& p : ggm::enumerate_fiber(6, t))
        if (!p.regular) CHECK_THROWS(ggm::point_concentration(p));
}
