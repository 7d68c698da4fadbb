#ifndef GGM_MLE_HPP
#define GGM_MLE_HPP

#include "ggm/graph.hpp"
#include "ggm/rational.hpp"

#include <Eigen/Dense>

#include <string>

namespace ggm {

// log det K - tr(S K); K must be positive definite.
double log_likelihood(const Eigen::MatrixXd& k, const Eigen::MatrixXd& s);

// Closed-form concentration estimate for a chordal graph: clique-inverse sums
// minus separator-inverse sums, padded with zeros.
Eigen::MatrixXd chordal_mle(const Graph& g, const Eigen::MatrixXd& s);

// Exact-rational flavor of the same estimator; the witness that the estimate
// is a rational function of the data.
RationalMatrix chordal_mle_exact(const Graph& g, const RationalMatrix& s);

// Likelihood ascent over concentration matrices with the zero pattern of g,
// by damped Newton steps on the support coordinates. Stops when
// max_{e in support} |(K^{-1} - s)_e| <= tol.
Eigen::MatrixXd numeric_mle(const Graph& g, const Eigen::MatrixXd& s, double tol = 1e-10,
                            int max_sweeps = 2000);

// Exact inverse of a rational matrix (Gauss-Jordan); throws on singular input.
RationalMatrix rational_inverse(const RationalMatrix& m);

// n x n symmetric matrix from a CSV file with n rows of n decimals; symmetry
// is enforced by averaging with the transpose, positive definiteness checked.
Eigen::MatrixXd load_covariance_csv(const std::string& path);

}  // namespace ggm

#endif
