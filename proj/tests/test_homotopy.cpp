#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ggm/homotopy.hpp"

#include <algorithm>
#include <cmath>

using ggm::MPoly;
using ggm::PathStatus;
using ggm::PolySystem;
using ggm::TrackerConfig;
using Complex = std::complex<double>;

namespace {

PolySystem univariate(const MPoly& p) {
    PolySystem sys;
    sys.num_vars = 1;
    sys.polys.push_back(p);
    return sys;
}

}  // namespace

TEST_CASE("univariate quadratic z^2 - 1") {
    MPoly z = MPoly::variable(0, 1);
    auto sys = univariate(z * z - MPoly::constant(1.0, 1));
    TrackerConfig cfg;
    cfg.seed = 11;
    auto results = ggm::solve_total_degree(sys, cfg);
    CHECK(results.size() == 2);
    auto sols = ggm::distinct_converged(results, cfg);
    REQUIRE(sols.size() == 2);
    std::vector<double> re = {sols[0](0).real(), sols[1](0).real()};
    std::sort(re.begin(), re.end());
    CHECK(re[0] == doctest::Approx(-1.0).epsilon(1e-9));
    CHECK(re[1] == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("linear 2x2 system") {
    // x + 2y = 5, 3x - y = 1  ->  x = 1, y = 2
    MPoly x = MPoly::variable(0, 2);
    MPoly y = MPoly::variable(1, 2);
    PolySystem sys;
    sys.num_vars = 2;
    sys.polys.push_back(x + y * Complex(2.0) - MPoly::constant(5.0, 2));
    sys.polys.push_back(x * Complex(3.0) - y - MPoly::constant(1.0, 2));
    TrackerConfig cfg;
    cfg.seed = 5;
    auto sols = ggm::distinct_converged(ggm::solve_total_degree(sys, cfg), cfg);
    REQUIRE(sols.size() == 1);
    CHECK(std::abs(sols[0](0) - Complex(1.0)) < 1e-9);
    CHECK(std::abs(sols[0](1) - Complex(2.0)) < 1e-9);
}

TEST_CASE("circle and line: two intersection points") {
    // x^2 + y^2 = 4, x + y = 1; x satisfies 2x^2 - 2x - 3 = 0
    MPoly x = MPoly::variable(0, 2);
    MPoly y = MPoly::variable(1, 2);
    PolySystem sys;
    sys.num_vars = 2;
    sys.polys.push_back(x * x + y * y - MPoly::constant(4.0, 2));
    sys.polys.push_back(x + y - MPoly::constant(1.0, 2));
    TrackerConfig cfg;
    cfg.seed = 7;
    auto results = ggm::solve_total_degree(sys, cfg);
    CHECK(results.size() == 2);  // Bezout number 2 * 1
    auto sols = ggm::distinct_converged(results, cfg);
    REQUIRE(sols.size() == 2);
    double expected_lo = (1.0 - std::sqrt(7.0)) / 2.0;
    double expected_hi = (1.0 + std::sqrt(7.0)) / 2.0;
    std::vector<double> got = {sols[0](0).real(), sols[1](0).real()};
    std::sort(got.begin(), got.end());
    CHECK(got[0] == doctest::Approx(expected_lo).epsilon(1e-9));
    CHECK(got[1] == doctest::Approx(expected_hi).epsilon(1e-9));
    for (const auto& s : sols) CHECK(std::abs(s(0) + s(1) - Complex(1.0)) < 1e-9);
}

TEST_CASE("paths to infinity are accounted for") {
    // x y = 1, x = 2: Bezout number 2 but only one affine solution
    MPoly x = MPoly::variable(0, 2);
    MPoly y = MPoly::variable(1, 2);
    PolySystem sys;
    sys.num_vars = 2;
    sys.polys.push_back(x * y - MPoly::constant(1.0, 2));
    sys.polys.push_back(x - MPoly::constant(2.0, 2));
    TrackerConfig cfg;
    cfg.seed = 3;
    auto results = ggm::solve_total_degree(sys, cfg);
    CHECK(results.size() == 2);
    int converged = 0, diverged = 0, other = 0;
    for (const auto& r : results) {
        if (r.status == PathStatus::Converged) ++converged;
        else if (r.status == PathStatus::DivergedToInfinity) ++diverged;
        else ++other;
    }
    CHECK(converged + diverged + other == 2);
    CHECK(converged == 1);
    CHECK(diverged == 1);
    auto sols = ggm::distinct_converged(results, cfg);
    REQUIRE(sols.size() == 1);
    CHECK(std::abs(sols[0](0) - Complex(2.0)) < 1e-9);
    CHECK(std::abs(sols[0](1) - Complex(0.5)) < 1e-9);
}

TEST_CASE("multiple roots dedup to one point") {
    MPoly z = MPoly::variable(0, 1);
    MPoly shifted = z - MPoly::constant(1.0, 1);
    auto sys = univariate(shifted * shifted);
    TrackerConfig cfg;
    cfg.seed = 9;
    // a double root is only locatable to ~sqrt(tol); widen the merge radius
    cfg.dedup_radius = 1e-3;
    auto results = ggm::solve_total_degree(sys, cfg);
    auto sols = ggm::distinct_converged(results, cfg);
    // both paths land on z = 1 (possibly flagged singular); at most one
    // distinct endpoint survives dedup
    CHECK(sols.size() <= 1);
    for (const auto& r : results)
        CHECK(std::abs(r.endpoint(0) - Complex(1.0)) < 1e-4);
}

TEST_CASE("fixed seed is reproducible, different seeds agree on solutions") {
    MPoly z = MPoly::variable(0, 1);
    auto sys = univariate(z * z * z - MPoly::constant(8.0, 1));
    TrackerConfig cfg;
    cfg.seed = 42;
    auto a = ggm::solve_total_degree(sys, cfg);
    auto b = ggm::solve_total_degree(sys, cfg);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].status == b[i].status);
        CHECK(a[i].endpoint == b[i].endpoint);
    }
    cfg.seed = 43;
    auto c = ggm::distinct_converged(ggm::solve_total_degree(sys, cfg), cfg);
    REQUIRE(c.size() == 3);
    for (const auto& s : c) CHECK(std::abs(s(0) * s(0) * s(0) - Complex(8.0)) < 1e-8);
}

TEST_CASE("threaded run returns the same endpoints") {
    MPoly x = MPoly::variable(0, 2);
    MPoly y = MPoly::variable(1, 2);
    PolySystem sys;
    sys.num_vars = 2;
    sys.polys.push_back(x * x - y - MPoly::constant(1.0, 2));
    sys.polys.push_back(y * y - x - MPoly::constant(1.0, 2));
    TrackerConfig cfg;
    cfg.seed = 17;
    auto serial = ggm::solve_total_degree(sys, cfg);
    cfg.threads = 4;
    auto parallel = ggm::solve_total_degree(sys, cfg);
    REQUIRE(serial.size() == parallel.size());
    for (size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].status == parallel[i].status);
        CHECK(serial[i].endpoint == parallel[i].endpoint);
    }
}
