#ifndef GGM_ROOTS_HPP
#define GGM_ROOTS_HPP

#include "ggm/qpoly.hpp"

#include <complex>
#include <vector>

namespace ggm {

struct RootCluster {
    std::complex<double> value;
    int multiplicity = 1;
};

// All complex roots of p (with multiplicity), via the companion matrix followed
// by Newton polishing against the exact coefficients. Throws on the zero
// polynomial. tol bounds |p(root)| relative to the coefficient scale.
std::vector<std::complex<double>> poly_roots_numeric(const QPoly& p, double tol = 1e-10);

// Distinct roots, clustering within radius 1e-8 scaled by the largest root
// magnitude.
std::vector<RootCluster> poly_roots_clustered(const QPoly& p, double tol = 1e-10);

}  // namespace ggm

#endif
