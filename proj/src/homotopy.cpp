#include "ggm/homotopy.hpp"

#include <Eigen/LU>

#include <atomic>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>

namespace ggm {

std::string path_status_name(PathStatus s) {
    switch (s) {
        case PathStatus::Converged: return "converged";
        case PathStatus::DivergedToInfinity: return "diverged_to_infinity";
        case PathStatus::Singular: return "singular";
        case PathStatus::StepFailure: return "step_failure";
    }
    throw std::logic_error("path_status_name: unreachable");
}

namespace {

using Complex = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

// Evaluation of p with every coefficient and coordinate replaced by its
// absolute value; the natural scale for backward-error tests at z.
double abs_eval(const MPoly& p, const Vec& z) {
    double acc = 0.0;
    for (const auto& [exps, c] : p.terms()) {
        double term = std::abs(c);
        for (size_t j = 0; j < exps.size(); ++j)
            for (int k = 0; k < exps[j]; ++k) term *= std::abs(z(static_cast<Eigen::Index>(j)));
        acc += term;
    }
    return acc;
}

double abs_eval_max(const PolySystem& sys, const Vec& z) {
    double acc = 0.0;
    for (const auto& p : sys.polys) acc = std::max(acc, abs_eval(p, z));
    return acc;
}

struct Homotopy {
    const PolySystem& target;
    std::vector<std::vector<MPoly>> target_jac;  // cached partials
    std::vector<int> degrees;
    Vec start_rhs;  // r_i
    Complex gamma;

    Vec eval(const Vec& z, double t) const {
        Vec f = target.eval(z);
        Vec g(z.size());
        for (int i = 0; i < z.size(); ++i) {
            Complex p = 1.0;
            for (int k = 0; k < degrees[static_cast<size_t>(i)]; ++k) p *= z(i);
            g(i) = p - start_rhs(i);
        }
        return (1.0 - t) * gamma * g + t * f;
    }

    Mat jac_z(const Vec& z, double t) const {
        int n = static_cast<int>(z.size());
        Mat jf(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                jf(i, j) = target_jac[static_cast<size_t>(i)][static_cast<size_t>(j)].eval(z);
        Mat jg = Mat::Zero(n, n);
        for (int i = 0; i < n; ++i) {
            int d = degrees[static_cast<size_t>(i)];
            Complex p = 1.0;
            for (int k = 0; k < d - 1; ++k) p *= z(i);
            jg(i, i) = static_cast<double>(d) * p;
        }
        return (1.0 - t) * gamma * jg + t * jf;
    }

    // dH/dt = target - gamma * start
    Vec dt(const Vec& z) const {
        Vec f = target.eval(z);
        Vec g(z.size());
        for (int i = 0; i < z.size(); ++i) {
            Complex p = 1.0;
            for (int k = 0; k < degrees[static_cast<size_t>(i)]; ++k) p *= z(i);
            g(i) = p - start_rhs(i);
        }
        return f - gamma * g;
    }

    // backward-error scale of H(., t) at z
    double abs_scale(const Vec& z, double t) const {
        double f = abs_eval_max(target, z);
        double g = 0.0;
        for (int i = 0; i < z.size(); ++i) {
            double p = 1.0;
            for (int k = 0; k < degrees[static_cast<size_t>(i)]; ++k) p *= std::abs(z(i));
            g = std::max(g, p + 1.0);
        }
        return std::max(1.0, std::max(t * f, (1.0 - t) * g));
    }
};

// Newton iterations on H(., t); returns true when the residual drops below
// tol. max_move bounds the total correction so a near-singular Jacobian cannot
// jump the path into a neighboring basin.
bool newton_correct(const Homotopy& h, Vec& z, double t, double tol, int iters,
                    double max_move) {
    Vec z0 = z;
    for (int it = 0; it < iters; ++it) {
        Vec r = h.eval(z, t);
        if (r.lpNorm<Eigen::Infinity>() <= tol) return true;
        Eigen::PartialPivLU<Mat> lu(h.jac_z(z, t));
        Vec dz = lu.solve(-r);
        if (!dz.allFinite()) return false;
        z += dz;
        if ((z - z0).lpNorm<Eigen::Infinity>() > max_move) return false;
    }
    return h.eval(z, t).lpNorm<Eigen::Infinity>() <= tol;
}

PathResult track_one(const Homotopy& h, Vec z, const TrackerConfig& cfg) {
    PathResult result;
    double t = 0.0;
    double dt = cfg.initial_step;
    int steps = 0;
    // Correction tolerance along the path is loose relative to the endpoint;
    // the final polish tightens it.
    const double path_tol = 1e-8;

    while (t < 1.0) {
        if (++steps > cfg.max_steps) {
            result.status = PathStatus::StepFailure;
            result.notes = "step budget exhausted at t=" + std::to_string(t);
            result.endpoint = z;
            return result;
        }
        if (z.lpNorm<Eigen::Infinity>() > cfg.blowup) {
            result.status = PathStatus::DivergedToInfinity;
            result.endpoint = z;
            return result;
        }
        double step = std::min(dt, 1.0 - t);
        // Euler predictor
        Eigen::PartialPivLU<Mat> lu(h.jac_z(z, t));
        Vec dz = lu.solve(-h.dt(z) * step);
        Vec z_try = z + dz;
        double t_try = t + step;
        double scale = std::max(1.0, z_try.lpNorm<Eigen::Infinity>());
        double max_move = std::max(0.1 * scale, 2.0 * dz.lpNorm<Eigen::Infinity>());
        double tol = path_tol * h.abs_scale(z_try, t_try);
        if (dz.allFinite() &&
            newton_correct(h, z_try, t_try, tol, cfg.max_newton_iters, max_move)) {
            z = z_try;
            t = t_try;
            dt = std::min(dt * 1.5, cfg.initial_step * 4);
        } else {
            dt *= 0.5;
            if (dt < cfg.min_step) {
                // Endgame: near t = 1 the Jacobian degenerates at singular or
                // infinite endpoints; stop stepping and classify below.
                if (t > 0.9) {
                    result.notes = "endgame entered at t=" + std::to_string(t);
                    break;
                }
                result.status = PathStatus::StepFailure;
                result.notes = "minimum step reached at t=" + std::to_string(t);
                result.endpoint = z;
                return result;
            }
        }
    }

    if (z.lpNorm<Eigen::Infinity>() >= 1e4) {
        result.endpoint = z;
        result.residual = h.target.eval(z).lpNorm<Eigen::Infinity>();
        result.status = PathStatus::DivergedToInfinity;
        return result;
    }

    // Endpoint polish against the target system itself, kept local so it
    // cannot relocate the endpoint into a different basin.
    Vec before = z;
    double local = 0.5 * std::max(1.0, before.lpNorm<Eigen::Infinity>());
    for (int it = 0; it < 30; ++it) {
        Vec r = h.target.eval(z);
        if (r.lpNorm<Eigen::Infinity>() <=
            0.1 * cfg.endpoint_tol * std::max(1.0, abs_eval_max(h.target, z)))
            break;
        Eigen::PartialPivLU<Mat> lu(h.target.jacobian(z));
        Vec dz = lu.solve(-r);
        if (!dz.allFinite()) break;
        z += dz;
        if ((z - before).lpNorm<Eigen::Infinity>() > local) {
            z = before;  // polish wandered; report the tracked endpoint
            break;
        }
    }
    result.endpoint = z;
    result.residual = h.target.eval(z).lpNorm<Eigen::Infinity>();
    // classify by backward error so large solutions of high-degree systems are
    // judged at the precision double arithmetic can actually reach
    double scale = std::max(1.0, abs_eval_max(h.target, z));
    if (result.residual <= cfg.endpoint_tol * scale && z.lpNorm<Eigen::Infinity>() < 1e4)
        result.status = PathStatus::Converged;
    else if (z.lpNorm<Eigen::Infinity>() >= 1e4)
        result.status = PathStatus::DivergedToInfinity;
    else
        result.status = PathStatus::Singular;
    return result;
}

}  // namespace

std::vector<PathResult> solve_total_degree(const PolySystem& sys, const TrackerConfig& cfg) {
    if (static_cast<int>(sys.polys.size()) != sys.num_vars)
        throw std::invalid_argument("solve_total_degree: system is not square");
    int n = sys.num_vars;
    if (n == 0) return {};

    std::mt19937_64 rng(cfg.seed ^ 0x9e3779b97f4a7c15ull);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);

    // Normalize each equation to unit max coefficient so the start and target
    // systems live on comparable scales.
    PolySystem scaled;
    scaled.num_vars = sys.num_vars;
    scaled.var_names = sys.var_names;
    for (const auto& p : sys.polys) {
        double m = 0.0;
        for (const auto& [exps, c] : p.terms()) m = std::max(m, std::abs(c));
        if (m == 0.0)
            throw std::invalid_argument("solve_total_degree: identically zero equation");
        scaled.polys.push_back(p * Complex(1.0 / m));
    }

    Homotopy h{scaled, {}, scaled.degrees(), Vec(n), Complex(0, 0)};
    h.target_jac.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        h.target_jac[static_cast<size_t>(i)].reserve(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j)
            h.target_jac[static_cast<size_t>(i)].push_back(scaled.polys[static_cast<size_t>(i)].derivative(j));
    }
    for (int i = 0; i < n; ++i) h.start_rhs(i) = std::polar(1.0, angle(rng));
    if (cfg.gamma) {
        h.gamma = *cfg.gamma;
    } else {
        // unit-circle constant away from the real axis
        double theta = 0.3 + angle(rng) * (std::numbers::pi - 0.6) / (2.0 * std::numbers::pi);
        if (rng() & 1) theta = -theta;
        h.gamma = std::polar(1.0, theta);
    }

    std::int64_t total = 1;
    for (int d : h.degrees) total *= d;

    std::vector<Vec> starts;
    starts.reserve(static_cast<size_t>(total));
    std::vector<int> idx(static_cast<size_t>(n), 0);
    for (std::int64_t path = 0; path < total; ++path) {
        Vec z(n);
        for (int i = 0; i < n; ++i) {
            int d = h.degrees[static_cast<size_t>(i)];
            double base_arg = std::arg(h.start_rhs(i));
            z(i) = std::polar(1.0, (base_arg + 2.0 * std::numbers::pi * idx[static_cast<size_t>(i)]) / d);
        }
        starts.push_back(std::move(z));
        for (int i = 0; i < n; ++i) {
            if (++idx[static_cast<size_t>(i)] < h.degrees[static_cast<size_t>(i)]) break;
            idx[static_cast<size_t>(i)] = 0;
        }
    }

    std::vector<PathResult> results(starts.size());
    int threads = std::max(1, cfg.threads);
    if (threads == 1 || starts.size() < 2) {
        for (size_t p = 0; p < starts.size(); ++p) results[p] = track_one(h, starts[p], cfg);
    } else {
        std::vector<std::thread> pool;
        std::atomic<size_t> next{0};
        for (int w = 0; w < threads; ++w)
            pool.emplace_back([&]() {
                size_t p;
                while ((p = next.fetch_add(1)) < starts.size())
                    results[p] = track_one(h, starts[p], cfg);
            });
        for (auto& th : pool) th.join();
    }
    return results;
}

std::vector<Eigen::VectorXcd> distinct_converged(const std::vector<PathResult>& results,
                                                 const TrackerConfig& cfg) {
    std::vector<Eigen::VectorXcd> out;
    for (const auto& r : results) {
        if (r.status != PathStatus::Converged) continue;
        bool dup = false;
        for (const auto& seen : out) {
            double scale = std::max({1.0, seen.lpNorm<Eigen::Infinity>(),
                                     r.endpoint.lpNorm<Eigen::Infinity>()});
            if ((seen - r.endpoint).lpNorm<Eigen::Infinity>() <= cfg.dedup_radius * scale) {
                dup = true;
                break;
            }
        }
        if (!dup) out.push_back(r.endpoint);
    }
    return out;
}

}  // namespace ggm
