#ifndef GGM_CYCLE_FIBER_HPP
#define GGM_CYCLE_FIBER_HPP

#include "ggm/graph.hpp"
#include "ggm/pn_family.hpp"
#include "ggm/rational.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <vector>

namespace ggm {

using Complex = std::complex<double>;
using ComplexMatrix = DenseMatrix<Complex>;

// Tridiagonal matrix with unit diagonal and x on the off-diagonals.
template <typename Scalar>
DenseMatrix<Scalar> tridiagonal_matrix(int n, const Scalar& x) {
    DenseMatrix<Scalar> m = DenseMatrix<Scalar>::Identity(n, n);
    for (int i = 0; i + 1 < n; ++i) m(i, i + 1) = m(i + 1, i) = x;
    return m;
}

// Cyclic variants with corner entries +x / -x; n >= 3.
template <typename Scalar>
DenseMatrix<Scalar> cyclic_matrix_plus(int n, const Scalar& x) {
    if (n < 3) throw std::invalid_argument("cyclic_matrix_plus: n must be >= 3");
    DenseMatrix<Scalar> m = tridiagonal_matrix(n, x);
    m(0, n - 1) = m(n - 1, 0) = x;
    return m;
}

template <typename Scalar>
DenseMatrix<Scalar> cyclic_matrix_minus(int n, const Scalar& x) {
    if (n < 3) throw std::invalid_argument("cyclic_matrix_minus: n must be >= 3");
    DenseMatrix<Scalar> m = tridiagonal_matrix(n, x);
    m(0, n - 1) = m(n - 1, 0) = -x;
    return m;
}

// Rank-2 matrix with 1 where i+j is even and 0 where i+j is odd; n even.
template <typename Scalar>
DenseMatrix<Scalar> checkerboard_matrix(int n) {
    if (n % 2 != 0) throw std::invalid_argument("checkerboard_matrix: n must be even");
    DenseMatrix<Scalar> m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = Scalar(((i + j) % 2 == 0) ? 1 : 0);
    return m;
}

// D a D with D = diag(signs); entry (i,j) scaled by signs[i]*signs[j].
template <typename Scalar>
DenseMatrix<Scalar> conjugate_by_signs(const std::vector<int>& signs,
                                       const DenseMatrix<Scalar>& a) {
    if (static_cast<int>(signs.size()) != a.rows() || a.rows() != a.cols())
        throw std::invalid_argument("conjugate_by_signs: size mismatch");
    DenseMatrix<Scalar> out = a;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (signs[static_cast<size_t>(i)] * signs[static_cast<size_t>(j)] < 0)
                out(i, j) = -out(i, j);
    return out;
}

enum class FiberFamily { Identity, Plus, Minus, Checkerboard };
std::string fiber_family_name(FiberFamily f);

// The univariate condition cutting out the cyclic generator parameters:
//   odd n = 2m+1, plus:  P_{m-1} + x P_{m-2}
//   even n = 2m,  plus:  P_{m-1} - x^2 P_{m-3}
//   even n = 2m,  minus: P_{m-2}
// Odd minus is invalid (it reduces to the plus family).
QPoly fiber_defining_polynomial(int n, FiberFamily family, const PnTable& table);

struct FiberPoint {
    ComplexMatrix matrix;
    FiberFamily family = FiberFamily::Identity;
    Complex x{};                // generator parameter, 0 for identity/checkerboard
    std::vector<int> signs;     // conjugating sign vector (canonical orbit rep)
    bool regular = true;
    double residual = 0.0;
};

struct FiberCheck {
    bool ok = false;
    double max_residual = 0.0;
};

// Max |det| over the 3x3 submatrices with columns (i, i+1, i+2) and rows
// (i, i+2, j), j != i+1, indices cyclic; n >= 4.
double cycle_membership_minors(const ComplexMatrix& a, int n);

// Diagonal = 1, cycle-edge entries = 0, membership minors, and (for regular
// points) the zero pattern of the inverse, all within tol.
FiberCheck verify_fiber_point(const FiberPoint& p, double tol = 1e-9);

// All points of the fiber of the cycle model over the identity, one FiberPoint
// per orbit element of the sign-conjugation action. table must cover index n.
std::vector<FiberPoint> enumerate_fiber(int n, const PnTable& table, double tol = 1e-9);

// Concentration matrix of a regular fiber point; throws on singular input.
ComplexMatrix point_concentration(const FiberPoint& p);

// Signed minor (-1)^{i+j} det(m with row i and column j deleted).
template <typename Scalar>
Scalar gamma_minor(const DenseMatrix<Scalar>& m, VertexPair e);

// Second-order minor combination; equals the partial derivative of gamma_minor
// with respect to the coordinate of e2 (diagonal coordinates carry a factor 2
// in the parametrization).
template <typename Scalar>
Scalar gamma_pair(const DenseMatrix<Scalar>& m, VertexPair e1, VertexPair e2);

struct RegularityReport {
    bool regular = false;
    double det_value = 0.0;
};

// Invertibility of the matrix [gamma_pair(k, e, f)] over e, f in E(g) plus
// loops; k is the concentration matrix of the point under test.
RegularityReport jacobian_regularity(const Eigen::MatrixXd& k, const Graph& g);

// Fiber cardinality 1 + (n-3) 2^{n-2}, computed from the defining-polynomial
// root counts and cross-checked against the closed formula; n >= 4.
std::int64_t fiber_lower_bound(int n, const PnTable& table);

extern template double gamma_minor<double>(const DenseMatrix<double>&, VertexPair);
extern template Complex gamma_minor<Complex>(const DenseMatrix<Complex>&, VertexPair);
extern template double gamma_pair<double>(const DenseMatrix<double>&, VertexPair, VertexPair);
extern template Complex gamma_pair<Complex>(const DenseMatrix<Complex>&, VertexPair, VertexPair);

}  // namespace ggm

#endif
