#include "ggm/cycle_fiber.hpp"

#include <limits>

#include "ggm/roots.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ggm {

std::string fiber_family_name(FiberFamily f) {
    switch (f) {
        case FiberFamily::Identity: return "identity";
        case FiberFamily::Plus: return "plus";
        case FiberFamily::Minus: return "minus";
        case FiberFamily::Checkerboard: return "checkerboard";
    }
    throw std::logic_error("fiber_family_name: unreachable");
}

QPoly fiber_defining_polynomial(int n, FiberFamily family, const PnTable& table) {
    if (n < 3) throw std::invalid_argument("fiber_defining_polynomial: n must be >= 3");
    QPoly x = QPoly::monomial(1, 1);
    QPoly x2 = QPoly::monomial(1, 2);
    if (n % 2 == 1) {
        int m = (n - 1) / 2;
        if (family == FiberFamily::Minus)
            throw std::invalid_argument(
                "fiber_defining_polynomial: odd n has no separate minus family");
        if (family != FiberFamily::Plus)
            throw std::invalid_argument("fiber_defining_polynomial: need plus or minus");
        return table.poly(m - 1) + x * table.poly(m - 2);
    }
    int m = n / 2;
    if (family == FiberFamily::Plus) return table.poly(m - 1) - x2 * table.poly(m - 3);
    if (family == FiberFamily::Minus) return table.poly(m - 2);
    throw std::invalid_argument("fiber_defining_polynomial: need plus or minus");
}

double cycle_membership_minors(const ComplexMatrix& a, int n) {
    if (n < 4) throw std::invalid_argument("cycle_membership_minors: n must be >= 4");
    if (a.rows() != n || a.cols() != n)
        throw std::invalid_argument("cycle_membership_minors: size mismatch");
    double worst = 0.0;
    Eigen::Matrix3cd sub;
    for (int i = 0; i < n; ++i) {
        int cols[3] = {i, (i + 1) % n, (i + 2) % n};
        for (int j = 0; j < n; ++j) {
            if (j == (i + 1) % n) continue;
            int rows[3] = {i, (i + 2) % n, j};
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c) sub(r, c) = a(rows[r], cols[c]);
            worst = std::max(worst, std::abs(sub.determinant()));
        }
    }
    return worst;
}

FiberCheck verify_fiber_point(const FiberPoint& p, double tol) {
    const ComplexMatrix& a = p.matrix;
    int n = static_cast<int>(a.rows());
    double res = 0.0;
    for (int i = 0; i < n; ++i) {
        res = std::max(res, std::abs(a(i, i) - 1.0));
        res = std::max(res, std::abs(a(i, (i + 1) % n)));
    }
    if (n >= 4) res = std::max(res, cycle_membership_minors(a, n));
    if (p.regular) {
        // the concentration matrix must live in the cycle model space
        Eigen::FullPivLU<ComplexMatrix> lu(a);
        if (!lu.isInvertible()) return {false, std::numeric_limits<double>::infinity()};
        ComplexMatrix k = lu.inverse();
        for (int i = 0; i < n; ++i)
            for (int j = i + 2; j < n; ++j) {
                if (i == 0 && j == n - 1) continue;
                res = std::max(res, std::abs(k(i, j)));
            }
    }
    return {res <= tol, res};
}

namespace {

// Orbit reps of {+-1}^n modulo the stabilizer: fixed_prefix entries pinned to +1.
std::vector<std::vector<int>> sign_orbit_reps(int n, int fixed_prefix) {
    std::vector<std::vector<int>> out;
    int free_bits = n - fixed_prefix;
    out.reserve(static_cast<size_t>(1) << free_bits);
    for (std::int64_t mask = 0; mask < (static_cast<std::int64_t>(1) << free_bits); ++mask) {
        std::vector<int> s(static_cast<size_t>(n), 1);
        for (int b = 0; b < free_bits; ++b)
            if (mask & (static_cast<std::int64_t>(1) << b)) s[static_cast<size_t>(fixed_prefix + b)] = -1;
        out.push_back(std::move(s));
    }
    return out;
}

bool canonical_root(const Complex& z) {
    if (z.real() > 0) return true;
    if (z.real() < 0) return false;
    return z.imag() > 0;
}

}  // namespace

std::vector<FiberPoint> enumerate_fiber(int n, const PnTable& table, double tol) {
    if (n < 3) throw std::invalid_argument("enumerate_fiber: n must be >= 3");
    std::vector<FiberPoint> out;

    FiberPoint id;
    id.matrix = ComplexMatrix::Identity(n, n);
    id.family = FiberFamily::Identity;
    id.signs.assign(static_cast<size_t>(n), 1);
    out.push_back(std::move(id));

    const bool even = (n % 2 == 0);
    std::vector<FiberFamily> families = {FiberFamily::Plus};
    if (even) families.push_back(FiberFamily::Minus);

    // Regular generators: stabilizer is {+-Id}, so pin the first sign. For even
    // n the defining polynomials are even and M(x), M(-x) share an orbit; keep
    // the root with positive real part (tie broken by positive imaginary part).
    auto reps = sign_orbit_reps(n, 1);
    for (FiberFamily family : families) {
        QPoly defining = fiber_defining_polynomial(n, family, table);
        if (defining.degree() < 1) continue;
        for (const auto& cluster : poly_roots_clustered(defining)) {
            Complex x = cluster.value;
            if (even && !canonical_root(x)) continue;
            ComplexMatrix m = (family == FiberFamily::Plus) ? cyclic_matrix_plus(n, x)
                                                            : cyclic_matrix_minus(n, x);
            ComplexMatrix base = m.inverse();
            for (const auto& signs : reps) {
                FiberPoint p;
                p.matrix = conjugate_by_signs(signs, base);
                p.family = family;
                p.x = x;
                p.signs = signs;
                p.regular = true;
                out.push_back(std::move(p));
            }
        }
    }

    if (even) {
        // Checkerboard stabilizer has order 4 (+-Id and the +-alternating
        // diagonals), so pin the first two signs.
        ComplexMatrix cb = checkerboard_matrix<Complex>(n);
        for (const auto& signs : sign_orbit_reps(n, 2)) {
            FiberPoint p;
            p.matrix = conjugate_by_signs(signs, cb);
            p.family = FiberFamily::Checkerboard;
            p.signs = signs;
            p.regular = false;
            out.push_back(std::move(p));
        }
    }

    for (auto& p : out) {
        auto check = verify_fiber_point(p, tol);
        if (!check.ok)
            throw std::runtime_error("enumerate_fiber: point fails membership check, residual " +
                                     std::to_string(check.max_residual));
        p.residual = check.max_residual;
    }
    return out;
}

ComplexMatrix point_concentration(const FiberPoint& p) {
    Eigen::FullPivLU<ComplexMatrix> lu(p.matrix);
    if (!lu.isInvertible())
        throw std::invalid_argument("point_concentration: fiber point is singular");
    return lu.inverse();
}

namespace {

template <typename Scalar>
DenseMatrix<Scalar> drop_rows_cols(const DenseMatrix<Scalar>& m, std::vector<int> rows,
                                   std::vector<int> cols) {
    std::sort(rows.begin(), rows.end());
    std::sort(cols.begin(), cols.end());
    int n = static_cast<int>(m.rows());
    DenseMatrix<Scalar> out(n - static_cast<int>(rows.size()), n - static_cast<int>(cols.size()));
    int ro = 0;
    for (int i = 0; i < n; ++i) {
        if (std::binary_search(rows.begin(), rows.end(), i)) continue;
        int co = 0;
        for (int j = 0; j < n; ++j) {
            if (std::binary_search(cols.begin(), cols.end(), j)) continue;
            out(ro, co++) = m(i, j);
        }
        ++ro;
    }
    return out;
}

template <typename Scalar>
Scalar det_of(const DenseMatrix<Scalar>& m) {
    if (m.rows() == 0) return Scalar(1);
    return m.determinant();
}

}  // namespace

template <typename Scalar>
Scalar gamma_minor(const DenseMatrix<Scalar>& m, VertexPair e) {
    auto [i, j] = e;
    Scalar d = det_of(drop_rows_cols(m, {i}, {j}));
    return ((i + j) % 2 == 0) ? d : -d;
}

template <typename Scalar>
Scalar gamma_pair(const DenseMatrix<Scalar>& m, VertexPair e1, VertexPair e2) {
    // Derivative of gamma_minor(m, e1) in the coordinate of e2, where the
    // coordinate moves both entries (i2,j2) and (j2,i2) (twice the diagonal).
    // Each term is the cofactor of one of those entries inside the first minor,
    // so its parity carries the usual shift when the second deleted row/column
    // sits past the first.
    auto [i1, j1] = e1;
    auto [i2, j2] = e2;
    Scalar sum{};
    if (i2 != i1 && j2 != j1) {
        int parity = i1 + j1 + i2 + j2 + (i2 > i1 ? 1 : 0) + (j2 > j1 ? 1 : 0);
        Scalar t = det_of(drop_rows_cols(m, {i1, i2}, {j1, j2}));
        sum += (parity % 2 == 0) ? t : -t;
    }
    if (j2 != i1 && i2 != j1) {
        int parity = i1 + j1 + j2 + i2 + (j2 > i1 ? 1 : 0) + (i2 > j1 ? 1 : 0);
        Scalar t = det_of(drop_rows_cols(m, {i1, j2}, {j1, i2}));
        sum += (parity % 2 == 0) ? t : -t;
    }
    return sum;
}

template double gamma_minor<double>(const DenseMatrix<double>&, VertexPair);
template Complex gamma_minor<Complex>(const DenseMatrix<Complex>&, VertexPair);
template Rational gamma_minor<Rational>(const DenseMatrix<Rational>&, VertexPair);
template double gamma_pair<double>(const DenseMatrix<double>&, VertexPair, VertexPair);
template Complex gamma_pair<Complex>(const DenseMatrix<Complex>&, VertexPair, VertexPair);
template Rational gamma_pair<Rational>(const DenseMatrix<Rational>&, VertexPair, VertexPair);

RegularityReport jacobian_regularity(const Eigen::MatrixXd& k, const Graph& g) {
    int n = g.num_vertices();
    if (k.rows() != n || k.cols() != n)
        throw std::invalid_argument("jacobian_regularity: size mismatch");
    std::vector<VertexPair> coords;
    for (int i = 0; i < n; ++i) coords.push_back({i, i});
    for (auto e : g.edges()) coords.push_back(e);

    int d = static_cast<int>(coords.size());
    Eigen::MatrixXd jac(d, d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            jac(a, b) = gamma_pair(k, coords[static_cast<size_t>(a)], coords[static_cast<size_t>(b)]);

    Eigen::FullPivLU<Eigen::MatrixXd> lu(jac);
    return {lu.isInvertible(), jac.determinant()};
}

std::int64_t fiber_lower_bound(int n, const PnTable& table) {
    if (n < 4) throw std::invalid_argument("fiber_lower_bound: n must be >= 4");
    std::int64_t count = 1;
    if (n % 2 == 1) {
        auto plus = poly_roots_clustered(fiber_defining_polynomial(n, FiberFamily::Plus, table));
        count += (static_cast<std::int64_t>(1) << (n - 1)) * static_cast<std::int64_t>(plus.size());
    } else {
        std::int64_t roots = 0;
        for (FiberFamily f : {FiberFamily::Plus, FiberFamily::Minus}) {
            QPoly defining = fiber_defining_polynomial(n, f, table);
            if (defining.degree() >= 1)
                roots += static_cast<std::int64_t>(poly_roots_clustered(defining).size());
        }
        count += (static_cast<std::int64_t>(1) << (n - 2)) * roots;
        count += static_cast<std::int64_t>(1) << (n - 2);  // checkerboard orbit
    }
    std::int64_t formula = 1 + static_cast<std::int64_t>(n - 3) * (static_cast<std::int64_t>(1) << (n - 2));
    if (count != formula)
        throw std::logic_error("fiber_lower_bound: root-count path disagrees with closed formula");
    return count;
}

}  // namespace ggm
