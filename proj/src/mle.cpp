#include "ggm/mle.hpp"

#include <Eigen/Cholesky>
#include <Eigen/LU>

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ggm {

namespace {

bool is_pd(const Eigen::MatrixXd& m) {
    Eigen::LLT<Eigen::MatrixXd> llt(m);
    return llt.info() == Eigen::Success;
}

template <typename Mat>
Mat submatrix(const Mat& s, const std::vector<int>& idx) {
    Mat out(idx.size(), idx.size());
    for (size_t a = 0; a < idx.size(); ++a)
        for (size_t b = 0; b < idx.size(); ++b) out(a, b) = s(idx[a], idx[b]);
    return out;
}

template <typename Mat>
void add_padded(Mat& target, const Mat& block, const std::vector<int>& idx, int sign) {
    for (size_t a = 0; a < idx.size(); ++a)
        for (size_t b = 0; b < idx.size(); ++b) {
            if (sign > 0) target(idx[a], idx[b]) += block(a, b);
            else target(idx[a], idx[b]) -= block(a, b);
        }
}

}  // namespace

double log_likelihood(const Eigen::MatrixXd& k, const Eigen::MatrixXd& s) {
    Eigen::LLT<Eigen::MatrixXd> llt(k);
    if (llt.info() != Eigen::Success)
        throw std::invalid_argument("log_likelihood: K is not positive definite");
    double logdet = 0.0;
    for (int i = 0; i < k.rows(); ++i) logdet += 2.0 * std::log(llt.matrixL()(i, i));
    return logdet - (s * k).trace();
}

Eigen::MatrixXd chordal_mle(const Graph& g, const Eigen::MatrixXd& s) {
    CliqueTree tree = clique_decomposition(g);  // throws on non-chordal input
    int n = g.num_vertices();
    Eigen::MatrixXd k = Eigen::MatrixXd::Zero(n, n);
    for (const auto& clique : tree.cliques) {
        Eigen::MatrixXd block = submatrix(s, clique);
        Eigen::FullPivLU<Eigen::MatrixXd> lu(block);
        if (!lu.isInvertible())
            throw std::invalid_argument("chordal_mle: singular clique submatrix");
        add_padded(k, Eigen::MatrixXd(lu.inverse()), clique, +1);
    }
    for (const auto& sep : tree.separators) {
        if (sep.empty()) continue;
        Eigen::MatrixXd block = submatrix(s, sep);
        Eigen::FullPivLU<Eigen::MatrixXd> lu(block);
        if (!lu.isInvertible())
            throw std::invalid_argument("chordal_mle: singular separator submatrix");
        add_padded(k, Eigen::MatrixXd(lu.inverse()), sep, -1);
    }
    return k;
}

RationalMatrix rational_inverse(const RationalMatrix& m) {
    int n = static_cast<int>(m.rows());
    RationalMatrix a = m;
    RationalMatrix inv = RationalMatrix::Identity(n, n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (a(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw std::invalid_argument("rational_inverse: singular matrix");
        if (pivot != col) {
            a.row(pivot).swap(a.row(col));
            inv.row(pivot).swap(inv.row(col));
        }
        Rational p = a(col, col);
        for (int c = 0; c < n; ++c) {
            a(col, c) /= p;
            inv(col, c) /= p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a(r, col) == 0) continue;
            Rational f = a(r, col);
            for (int c = 0; c < n; ++c) {
                a(r, c) -= f * a(col, c);
                inv(r, c) -= f * inv(col, c);
            }
        }
    }
    return inv;
}

RationalMatrix chordal_mle_exact(const Graph& g, const RationalMatrix& s) {
    CliqueTree tree = clique_decomposition(g);
    int n = g.num_vertices();
    RationalMatrix k = RationalMatrix::Zero(n, n);
    for (const auto& clique : tree.cliques)
        add_padded(k, rational_inverse(submatrix(s, clique)), clique, +1);
    for (const auto& sep : tree.separators) {
        if (sep.empty()) continue;
        add_padded(k, rational_inverse(submatrix(s, sep)), sep, -1);
    }
    return k;
}

Eigen::MatrixXd numeric_mle(const Graph& g, const Eigen::MatrixXd& s, double tol,
                            int max_sweeps) {
    int n = g.num_vertices();
    if (s.rows() != n || s.cols() != n)
        throw std::invalid_argument("numeric_mle: size mismatch");
    if (!is_pd(s)) throw std::invalid_argument("numeric_mle: s is not positive definite");

    auto ms = model_space(g);
    int d = static_cast<int>(ms.support.size());
    // symmetric basis matrix of one support coordinate
    auto basis = [&](int a) {
        Eigen::MatrixXd e = Eigen::MatrixXd::Zero(n, n);
        auto [i, j] = ms.support[static_cast<size_t>(a)];
        e(i, j) = 1.0;
        e(j, i) = 1.0;
        if (i == j) e(i, i) = 1.0;
        return e;
    };

    Eigen::MatrixXd k = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) k(i, i) = 1.0 / s(i, i);

    // Newton ascent on l(K) = log det K - tr(SK) restricted to the model
    // coordinates: gradient tr((W - S) E_a), Hessian -tr(W E_a W E_b).
    double ll = log_likelihood(k, s);
    double residual = 0.0;
    for (int iter = 0; iter < max_sweeps; ++iter) {
        Eigen::MatrixXd w = k.inverse();
        Eigen::VectorXd grad(d);
        for (int a = 0; a < d; ++a) {
            auto [i, j] = ms.support[static_cast<size_t>(a)];
            grad(a) = (i == j) ? (w(i, i) - s(i, i)) : 2.0 * (w(i, j) - s(i, j));
        }
        residual = 0.0;
        for (auto [i, j] : ms.support) residual = std::max(residual, std::abs(w(i, j) - s(i, j)));
        if (residual <= tol) return k;

        std::vector<Eigen::MatrixXd> we(static_cast<size_t>(d));
        for (int a = 0; a < d; ++a) we[static_cast<size_t>(a)] = w * basis(a);
        Eigen::MatrixXd hess(d, d);
        for (int a = 0; a < d; ++a)
            for (int b = a; b < d; ++b) {
                double v = (we[static_cast<size_t>(a)] * we[static_cast<size_t>(b)]).trace();
                hess(a, b) = hess(b, a) = v;
            }
        Eigen::VectorXd step = hess.ldlt().solve(grad);
        if (!step.allFinite()) break;

        double damping = 1.0;
        bool moved = false;
        for (int bt = 0; bt < 60; ++bt) {
            Eigen::MatrixXd trial = k;
            for (int a = 0; a < d; ++a) {
                auto [i, j] = ms.support[static_cast<size_t>(a)];
                trial(i, j) += damping * step(a);
                if (i != j) trial(j, i) += damping * step(a);
            }
            if (is_pd(trial)) {
                double trial_ll = log_likelihood(trial, s);
                if (trial_ll >= ll - 1e-14) {
                    k = trial;
                    ll = trial_ll;
                    moved = true;
                    break;
                }
            }
            damping *= 0.5;
        }
        if (!moved) break;
    }

    Eigen::MatrixXd w = k.inverse();
    residual = 0.0;
    for (auto [i, j] : ms.support) residual = std::max(residual, std::abs(w(i, j) - s(i, j)));
    if (residual <= tol) return k;
    throw std::runtime_error("numeric_mle: no convergence, stationarity residual " +
                             std::to_string(residual));
}

Eigen::MatrixXd load_covariance_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("load_covariance_csv: cannot open " + path);
    std::vector<std::vector<double>> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            try {
                row.push_back(std::stod(cell));
            } catch (const std::exception&) {
                throw std::invalid_argument("load_covariance_csv: bad number at line " +
                                            std::to_string(lineno) + ": '" + cell + "'");
            }
        }
        rows.push_back(std::move(row));
    }
    size_t n = rows.size();
    if (n == 0) throw std::invalid_argument("load_covariance_csv: empty file");
    for (size_t i = 0; i < n; ++i)
        if (rows[i].size() != n)
            throw std::invalid_argument("load_covariance_csv: row " + std::to_string(i + 1) +
                                        " has " + std::to_string(rows[i].size()) +
                                        " entries, expected " + std::to_string(n));
    Eigen::MatrixXd s(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) s(i, j) = rows[i][j];
    s = ((s + s.transpose()) / 2.0).eval();
    if (!is_pd(s))
        throw std::invalid_argument("load_covariance_csv: matrix is not positive definite");
    return s;
}

}  // namespace ggm
