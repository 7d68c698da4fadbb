#include "ggm/systems.hpp"

#include <Eigen/LU>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

namespace ggm {

namespace {

using Complex = std::complex<double>;

std::string pair_name(VertexPair e) {
    return "s" + std::to_string(e.first) + "_" + std::to_string(e.second);
}

}  // namespace

Eigen::MatrixXd generic_covariance(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> entry(-10, 10);
    Eigen::MatrixXd b(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b(i, j) = static_cast<double>(entry(rng));
    return b * b.transpose() + static_cast<double>(n) * Eigen::MatrixXd::Identity(n, n);
}

PolySystem score_system(const Graph& g, const Eigen::MatrixXd& s) {
    int n = g.num_vertices();
    if (s.rows() != n || s.cols() != n)
        throw std::invalid_argument("score_system: covariance size mismatch");

    auto ms = model_space(g);
    int num_vars = static_cast<int>(ms.co_support.size());

    PolySystem sys;
    sys.num_vars = num_vars;
    if (num_vars == 0) return sys;
    for (auto e : ms.co_support) sys.var_names.push_back(pair_name(e));

    // Sigma with data on the support and unknowns on the co-support.
    std::vector<std::vector<MPoly>> sigma(static_cast<size_t>(n),
                                          std::vector<MPoly>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) sigma[i][j] = MPoly::constant(s(i, j), num_vars);
    for (int k = 0; k < num_vars; ++k) {
        auto [i, j] = ms.co_support[static_cast<size_t>(k)];
        sigma[i][j] = sigma[j][i] = MPoly::variable(k, num_vars);
    }

    // One vanishing cofactor per unknown entry.
    for (auto [i, j] : ms.co_support) {
        std::vector<std::vector<MPoly>> minor;
        minor.reserve(static_cast<size_t>(n - 1));
        for (int r = 0; r < n; ++r) {
            if (r == i) continue;
            std::vector<MPoly> row;
            row.reserve(static_cast<size_t>(n - 1));
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                row.push_back(sigma[r][c]);
            }
            minor.push_back(std::move(row));
        }
        MPoly cof = mpoly_determinant(minor);
        if ((i + j) % 2 != 0) cof = cof * Complex(-1.0);
        sys.polys.push_back(std::move(cof));
    }
    return sys;
}

FiberSystem fiber_system(int n) {
    if (n < 4) throw std::invalid_argument("fiber_system: n must be >= 4");
    Graph g = cycle_graph(n);
    auto ms = model_space(g);
    int num_vars = static_cast<int>(ms.co_support.size());

    FiberSystem fs;
    fs.coords = ms.co_support;
    fs.full.num_vars = num_vars;
    for (auto e : ms.co_support) fs.full.var_names.push_back("a" + std::to_string(e.first) +
                                                             "_" + std::to_string(e.second));

    std::vector<std::vector<MPoly>> a(static_cast<size_t>(n),
                                      std::vector<MPoly>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a[i][j] = MPoly::constant((i == j) ? 1.0 : 0.0, num_vars);
    for (int k = 0; k < num_vars; ++k) {
        auto [i, j] = ms.co_support[static_cast<size_t>(k)];
        a[i][j] = a[j][i] = MPoly::variable(k, num_vars);
    }

    // A 3x3 minor det A[R,C] vanishes on every inverse of a cycle-supported
    // matrix B exactly when the complementary submatrix B[C^c, R^c] is
    // identically singular (nullity theorem: rank A[R,C] = rank B[C^c, R^c]
    // + |R| + |C| - n). We test that symbolically: give B one variable per
    // diagonal entry and per cycle edge and ask whether the determinant of
    // the complementary block is the zero polynomial.
    auto cycle_block_is_singular = [n](const std::vector<int>& rows,
                                       const std::vector<int>& cols) {
        int nb = 2 * n;  // vars: n diagonal entries, then n cycle-edge entries
        std::vector<bool> in_rows(static_cast<size_t>(n), false);
        std::vector<bool> in_cols(static_cast<size_t>(n), false);
        for (int r : rows) in_rows[static_cast<size_t>(r)] = true;
        for (int c : cols) in_cols[static_cast<size_t>(c)] = true;
        std::vector<int> rc, cc;  // complements: rows of B block = C^c, cols = R^c
        for (int v = 0; v < n; ++v) {
            if (!in_cols[static_cast<size_t>(v)]) rc.push_back(v);
            if (!in_rows[static_cast<size_t>(v)]) cc.push_back(v);
        }
        std::vector<std::vector<MPoly>> b(rc.size(), std::vector<MPoly>(cc.size()));
        for (size_t r = 0; r < rc.size(); ++r)
            for (size_t c = 0; c < cc.size(); ++c) {
                int u = rc[r], v = cc[c];
                if (u == v) b[r][c] = MPoly::variable(u, nb);
                else if ((u + 1) % n == v) b[r][c] = MPoly::variable(n + u, nb);
                else if ((v + 1) % n == u) b[r][c] = MPoly::variable(n + v, nb);
                else b[r][c] = MPoly(nb);
            }
        return mpoly_determinant(b).is_zero();
    };

    std::vector<std::vector<int>> triples;
    for (int r0 = 0; r0 < n; ++r0)
        for (int r1 = r0 + 1; r1 < n; ++r1)
            for (int r2 = r1 + 1; r2 < n; ++r2) triples.push_back({r0, r1, r2});

    // Symmetry of A makes det A[R,C] and det A[C,R] equal, so only ordered
    // pairs of index triples are needed.
    for (size_t ri = 0; ri < triples.size(); ++ri)
        for (size_t ci = ri; ci < triples.size(); ++ci) {
            if (!cycle_block_is_singular(triples[ri], triples[ci])) continue;
            std::vector<std::vector<MPoly>> grid(3, std::vector<MPoly>(3));
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c) grid[r][c] = a[triples[ri][r]][triples[ci][c]];
            MPoly minor = mpoly_determinant(grid);
            if (!minor.is_zero()) fs.full.polys.push_back(std::move(minor));
        }
    return fs;
}

namespace {

// Distinct critical points for one seed; also reports paths and worst residual.
struct SeedCount {
    std::vector<Eigen::VectorXcd> points;
    std::int64_t paths = 0;
    double residual_max = 0.0;
    std::int64_t failures = 0;
};

SeedCount count_for_seed(const Graph& g, std::uint64_t seed, TrackerConfig cfg) {
    int n = g.num_vertices();
    Eigen::MatrixXd s = generic_covariance(n, seed);
    // The critical equations are homogeneous in (S, Sigma) jointly, so scaling
    // the data to unit size just rescales the solutions; the tracker then works
    // at O(1) magnitudes instead of the raw data scale.
    s /= s.cwiseAbs().maxCoeff();
    PolySystem sys = score_system(g, s);

    SeedCount out;
    if (sys.num_vars == 0) {
        out.points.emplace_back(Eigen::VectorXcd(0));
        return out;
    }

    cfg.seed = seed;
    auto results = solve_total_degree(sys, cfg);
    out.paths = static_cast<std::int64_t>(results.size());
    for (const auto& r : results)
        if (r.status == PathStatus::StepFailure) ++out.failures;

    auto ms = model_space(g);
    for (const auto& z : distinct_converged(results, cfg)) {
        // reconstruct Sigma and keep only invertible critical points
        Eigen::MatrixXcd sigma = s.cast<Complex>();
        for (size_t k = 0; k < ms.co_support.size(); ++k) {
            auto [i, j] = ms.co_support[k];
            sigma(i, j) = sigma(j, i) = z(static_cast<Eigen::Index>(k));
        }
        Eigen::FullPivLU<Eigen::MatrixXcd> lu(sigma);
        // The cofactor equations vanish identically on the rank <= n-2 locus,
        // so paths may legitimately converge onto singular Sigma; those are
        // not critical points of the likelihood. FullPivLU's own invertibility
        // heuristic accepts determinants as small as 1e-27 here, hence the
        // explicit scale-relative cutoff.
        double sigma_scale = std::max(1e-300, sigma.cwiseAbs().maxCoeff());
        double det_rel = std::abs(lu.determinant()) / std::pow(sigma_scale, n);
        if (det_rel < 1e-10) continue;
        Eigen::MatrixXcd k_mat = lu.inverse();
        double pattern_res = 0.0;
        double k_scale = std::max(1.0, k_mat.cwiseAbs().maxCoeff());
        for (auto [i, j] : ms.co_support)
            pattern_res = std::max(pattern_res, std::abs(k_mat(i, j)) / k_scale);
        out.residual_max = std::max(out.residual_max, pattern_res);
        if (pattern_res > 1e-8) continue;
        out.points.push_back(z);
    }
    return out;
}

}  // namespace

MlDegreeResult count_ml_degree(const Graph& g, const std::vector<std::uint64_t>& seeds,
                               const TrackerConfig& cfg) {
    if (seeds.empty()) throw std::invalid_argument("count_ml_degree: need at least one seed");
    MlDegreeResult out;
    std::int64_t failures = 0;
    for (std::uint64_t seed : seeds) {
        SeedCount sc = count_for_seed(g, seed, cfg);
        out.per_seed.push_back(static_cast<int>(sc.points.size()));
        out.paths_tracked += sc.paths;
        out.residual_max = std::max(out.residual_max, sc.residual_max);
        failures += sc.failures;
    }
    for (int c : out.per_seed)
        if (c != out.per_seed.front()) {
            std::ostringstream os;
            os << "count_ml_degree: seed disagreement, counts =";
            for (int v : out.per_seed) os << " " << v;
            throw std::runtime_error(os.str());
        }
    if (failures > 0)
        throw std::runtime_error("count_ml_degree: " + std::to_string(failures) +
                                 " path(s) failed to track");
    out.count = out.per_seed.front();
    return out;
}

std::vector<Eigen::VectorXcd> fiber_bruteforce(int n, const TrackerConfig& cfg) {
    if (n < 4 || n > 6) throw std::invalid_argument("fiber_bruteforce: 4 <= n <= 6");
    FiberSystem fs = fiber_system(n);
    int num_vars = fs.full.num_vars;
    size_t num_eqs = fs.full.polys.size();

    // Random complex square combination of the overdetermined minor system; no
    // solution of the true zero set is lost, extras are filtered below.
    std::mt19937_64 rng(cfg.seed ^ 0x51ed2701d4b1aa13ull);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    PolySystem square;
    square.num_vars = num_vars;
    square.var_names = fs.full.var_names;
    for (int i = 0; i < num_vars; ++i) {
        MPoly combo(num_vars);
        for (size_t e = 0; e < num_eqs; ++e)
            combo = combo + fs.full.polys[e] * std::polar(1.0, angle(rng));
        square.polys.push_back(std::move(combo));
    }

    auto results = solve_total_degree(square, cfg);
    for (const auto& r : results)
        if (r.status == PathStatus::StepFailure)
            throw std::runtime_error("fiber_bruteforce: path failed: " + r.notes);

    std::vector<Eigen::VectorXcd> accepted;
    for (const auto& z : distinct_converged(results, cfg)) {
        double worst = fs.full.eval(z).lpNorm<Eigen::Infinity>();
        if (worst <= std::max(cfg.endpoint_tol, 1e-8)) accepted.push_back(z);
    }
    return accepted;
}

MonotonicityResult monotonicity_check(const Graph& g, int v,
                                      const std::vector<std::uint64_t>& seeds,
                                      const TrackerConfig& cfg) {
    std::vector<int> keep;
    for (int u = 0; u < g.num_vertices(); ++u)
        if (u != v) keep.push_back(u);
    Graph h = induced_subgraph(g, keep);
    MonotonicityResult out;
    out.count_g = count_ml_degree(g, seeds, cfg).count;
    out.count_h = count_ml_degree(h, seeds, cfg).count;
    out.holds = out.count_g >= out.count_h;
    return out;
}

}  // namespace ggm
