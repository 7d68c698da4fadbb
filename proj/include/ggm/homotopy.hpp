#ifndef GGM_HOMOTOPY_HPP
#define GGM_HOMOTOPY_HPP

#include "ggm/mpoly.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ggm {

struct TrackerConfig {
    double initial_step = 0.05;
    double min_step = 1e-7;
    double newton_tol = 1e-11;
    int max_newton_iters = 4;
    int max_steps = 20000;
    double endpoint_tol = 1e-10;
    double dedup_radius = 1e-6;
    double blowup = 1e8;  // |z| beyond this counts as a path to infinity
    std::optional<std::complex<double>> gamma;  // drawn from the seed when unset
    std::uint64_t seed = 0;
    int threads = 1;
};

enum class PathStatus { Converged, DivergedToInfinity, Singular, StepFailure };
std::string path_status_name(PathStatus s);

struct PathResult {
    Eigen::VectorXcd endpoint;
    PathStatus status = PathStatus::StepFailure;
    double residual = 0.0;
    std::string notes;
};

// Total-degree homotopy: tracks prod(d_i) paths from the start system
// z_i^{d_i} = r_i to the target, with Euler prediction and Newton correction.
std::vector<PathResult> solve_total_degree(const PolySystem& sys, const TrackerConfig& cfg);

// Converged endpoints of results, deduplicated within cfg.dedup_radius (max
// norm after rescaling by the larger point magnitude).
std::vector<Eigen::VectorXcd> distinct_converged(const std::vector<PathResult>& results,
                                                 const TrackerConfig& cfg);

}  // namespace ggm

#endif
