#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ggm/cycle_fiber.hpp"
#include "ggm/systems.hpp"

#include <algorithm>

using ggm::Graph;
using ggm::TrackerConfig;
using Complex = std::complex<double>;

TEST_CASE("generic covariance is reproducible, integral, positive definite") {
    auto s1 = ggm::generic_covariance(5, 42);
    auto s2 = ggm::generic_covariance(5, 42);
    CHECK(s1 == s2);
    auto s3 = ggm::generic_covariance(5, 43);
    CHECK(s1 != s3);
    CHECK((s1 - s1.transpose()).cwiseAbs().maxCoeff() == 0.0);
    Eigen::LLT<Eigen::MatrixXd> llt(s1);
    CHECK(llt.info() == Eigen::Success);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) CHECK(s1(i, j) == std::round(s1(i, j)));
}

TEST_CASE("score system shape") {
    Graph g = ggm::cycle_graph(4);
    auto s = ggm::generic_covariance(4, 1);
    auto sys = ggm::score_system(g, s);
    CHECK(sys.num_vars == 2);  // the two non-edges of the square
    CHECK(sys.polys.size() == 2);
    for (const auto& p : sys.polys) CHECK(p.total_degree() == 3);  // n - 1

    auto empty = ggm::score_system(ggm::complete_graph(4), ggm::generic_covariance(4, 1));
    CHECK(empty.num_vars == 0);
    CHECK(empty.polys.empty());
}

TEST_CASE("decomposable graphs have a unique critical point") {
    TrackerConfig cfg;
    for (const Graph& g : {ggm::path_graph(4), ggm::star_graph(4), ggm::complete_graph(4),
                           ggm::cycle_graph(3)}) {
        auto r = ggm::count_ml_degree(g, {1, 2}, cfg);
        CHECK(r.count == 1);
        CHECK(r.residual_max < 1e-8);
    }
}

TEST_CASE("the square has five critical points") {
    TrackerConfig cfg;
    auto r = ggm::count_ml_degree(ggm::cycle_graph(4), {1, 2, 3}, cfg);
    CHECK(r.count == 5);
    CHECK(r.per_seed == std::vector<int>{5, 5, 5});
    CHECK(r.paths_tracked == 3 * 9);  // Bezout number 3^2 per seed
}

TEST_CASE("fiber equations solved by continuation match the direct enumeration") {
    TrackerConfig cfg;
    cfg.seed = 1;
    auto sols = ggm::fiber_bruteforce(4, cfg);
    CHECK(sols.size() == 5);

    ggm::PnTable t(8);
    auto points = ggm::enumerate_fiber(4, t);
    auto fs = ggm::fiber_system(4);
    // project each enumerated point onto the unknown coordinates and find it
    // among the continuation solutions
    for (const auto& p : points) {
        Eigen::VectorXcd z(static_cast<Eigen::Index>(fs.coords.size()));
        for (size_t k = 0; k < fs.coords.size(); ++k)
            z(static_cast<Eigen::Index>(k)) = p.matrix(fs.coords[k].first, fs.coords[k].second);
        bool found = false;
        for (const auto& s : sols)
            if ((s - z).lpNorm<Eigen::Infinity>() < 1e-6) found = true;
        CHECK(found);
    }
}

TEST_CASE("continuation count for the pentagon") {
    TrackerConfig cfg;
    cfg.seed = 2;
    auto sols = ggm::fiber_bruteforce(5, cfg);
    CHECK(sols.size() == 17);
}

TEST_CASE("bruteforce rejects out-of-range cycles") {
    TrackerConfig cfg;
    CHECK_THROWS(ggm::fiber_bruteforce(3, cfg));
    CHECK_THROWS(ggm::fiber_bruteforce(7, cfg));
}

TEST_CASE("deleting a vertex cannot increase the count") {
    TrackerConfig cfg;
    auto r = ggm::monotonicity_check(ggm::cycle_graph(4), 0, {1, 2}, cfg);
    CHECK(r.holds);
    CHECK(r.count_g == 5);
    CHECK(r.count_h == 1);  // the remaining path is decomposable
}
