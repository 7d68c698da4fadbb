#ifndef GGM_SYSTEMS_HPP
#define GGM_SYSTEMS_HPP

#include "ggm/graph.hpp"
#include "ggm/homotopy.hpp"
#include "ggm/mpoly.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

namespace ggm {

// Reproducible generic sample covariance: S = B B^T + n Id with integer B,
// entries uniform in [-10, 10] drawn from the seed.
Eigen::MatrixXd generic_covariance(int n, std::uint64_t seed);

// Critical equations of the likelihood for graph g at data s: unknowns are the
// non-edge entries of Sigma, one vanishing-cofactor equation per non-edge.
// The complete graph yields an empty system (its critical point count is 1).
PolySystem score_system(const Graph& g, const Eigen::MatrixXd& s);

// The 3x3-minor equations cutting out the fiber of the cycle model over the
// identity; overdetermined, solved via a randomized square subsystem.
struct FiberSystem {
    PolySystem full;           // all minor equations (num_polys >= num_vars)
    std::vector<VertexPair> coords;  // unknown positions, aligned with variables
};
FiberSystem fiber_system(int n);

struct MlDegreeResult {
    int count = 0;
    std::vector<int> per_seed;
    std::int64_t paths_tracked = 0;
    double residual_max = 0.0;
};

// Counts distinct finite nonsingular critical points for each seed; all seeds
// must agree or a std::runtime_error carries the per-seed data.
MlDegreeResult count_ml_degree(const Graph& g, const std::vector<std::uint64_t>& seeds,
                               const TrackerConfig& cfg);

// Solves the fiber equations by continuation on a random square subsystem and
// filters candidates through every minor equation; 4 <= n <= 6.
std::vector<Eigen::VectorXcd> fiber_bruteforce(int n, const TrackerConfig& cfg);

struct MonotonicityResult {
    bool holds = false;
    int count_g = 0;
    int count_h = 0;
};

// Critical-point count of g against g with vertex v removed.
MonotonicityResult monotonicity_check(const Graph& g, int v,
                                      const std::vector<std::uint64_t>& seeds,
                                      const TrackerConfig& cfg);

}  // namespace ggm

#endif
