#include "ggm/roots.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ggm {

namespace {

using Complex = std::complex<double>;

Complex horner(const std::vector<double>& c, Complex x) {
    Complex acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

int sign_at(const QPoly& p, const Rational& x) {
    Rational v = p.eval_exact(x);
    if (v > 0) return 1;
    if (v < 0) return -1;
    return 0;
}

// Companion-matrix eigenvalues refined by Aberth-Ehrlich simultaneous
// iteration; the repulsion terms keep the estimates on distinct roots, which
// independent Newton polishing cannot guarantee when neighboring eigenvalue
// estimates land in the same basin.
std::vector<Complex> aberth_estimates(const std::vector<double>& c) {
    int deg = static_cast<int>(c.size()) - 1;
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(deg, deg);
    for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < deg; ++i)
        companion(i, deg - 1) = -c[static_cast<size_t>(i)] / c[static_cast<size_t>(deg)];

    Eigen::EigenSolver<Eigen::MatrixXd> es(companion, /*computeEigenvectors=*/false);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("poly_roots_numeric: eigenvalue iteration failed");

    std::vector<double> dc(static_cast<size_t>(deg));
    for (int k = 1; k <= deg; ++k) dc[static_cast<size_t>(k - 1)] = k * c[static_cast<size_t>(k)];

    std::vector<Complex> z(static_cast<size_t>(deg));
    for (int i = 0; i < deg; ++i) z[static_cast<size_t>(i)] = es.eigenvalues()(i);
    for (int sweep = 0; sweep < 100; ++sweep) {
        double worst = 0.0;
        for (int i = 0; i < deg; ++i) {
            Complex zi = z[static_cast<size_t>(i)];
            Complex f = horner(c, zi);
            Complex df = horner(dc, zi);
            if (std::abs(df) < 1e-300) continue;
            Complex w = f / df;
            Complex repulse = 0.0;
            for (int j = 0; j < deg; ++j) {
                if (j == i) continue;
                Complex d = zi - z[static_cast<size_t>(j)];
                if (std::abs(d) > 1e-300) repulse += 1.0 / d;
            }
            Complex denom = 1.0 - w * repulse;
            Complex step = (std::abs(denom) > 1e-300) ? w / denom : w;
            z[static_cast<size_t>(i)] = zi - step;
            worst = std::max(worst, std::abs(step) / (1.0 + std::abs(zi)));
        }
        if (worst < 1e-15) break;
    }
    return z;
}

// Exact bisection on a sign change; the coefficients are rational, so the sign
// of p at any rational point is computed without rounding error.
double bisect_root(const QPoly& p, Rational lo, Rational hi, int sign_lo) {
    for (int it = 0; it < 120; ++it) {
        Rational mid = (lo + hi) / 2;
        double w = to_double(hi) - to_double(lo);
        if (w <= 1e-14 * (1.0 + std::abs(to_double(mid)))) break;
        int sm = sign_at(p, mid);
        if (sm == 0) return to_double(mid);
        if (sm == sign_lo) lo = mid;
        else hi = mid;
    }
    return to_double((lo + hi) / 2);
}

// One isolation pass: probe each interval of the grid at `probes` interior
// points with exact signs and bisect every sign change found.
std::vector<double> isolate_on_grid(const QPoly& p, const std::vector<Rational>& ts,
                                    int probes) {
    std::vector<double> roots;
    for (size_t i = 0; i + 1 < ts.size(); ++i) {
        Rational width = ts[i + 1] - ts[i];
        Rational prev = ts[i];
        int sprev = sign_at(p, prev);
        if (sprev == 0) roots.push_back(to_double(prev));
        for (int k = 1; k <= probes; ++k) {
            Rational x = (k == probes) ? ts[i + 1] : ts[i] + width * k / probes;
            int sx = sign_at(p, x);
            if (sx == 0) {
                roots.push_back(to_double(x));
            } else if (sprev != 0 && sx != sprev) {
                roots.push_back(bisect_root(p, prev, x, sprev));
            }
            prev = x;
            sprev = sx;
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end(),
                            [](double a, double b) {
                                return std::abs(a - b) <= 1e-13 * (1.0 + std::abs(a));
                            }),
                roots.end());
    return roots;
}

// Locate every real root of the square-free polynomial p, starting from
// approximate locations. Floating-point evaluation cannot separate clustered
// real roots of ill-conditioned polynomials; exact sign tests at rational
// points can. The estimates only shape the probing grid; when the count found
// disagrees with the number of estimates, probing escalates to a finer grid
// over the full root bound, and finally the mismatch is reported.
std::vector<double> refine_real_roots(const QPoly& p, std::vector<double> approx) {
    if (approx.empty()) return {};
    std::sort(approx.begin(), approx.end());

    // Cauchy bound: all roots lie strictly inside [-B, B].
    Rational bound(1);
    Rational lead = p.leading_coeff();
    if (lead < 0) lead = -lead;
    for (const Rational& ck : p.coeffs()) {
        Rational a = ck < 0 ? -ck : ck;
        if (a / lead > bound) bound = a / lead;
    }
    bound += 1;

    // Grid anchored at midpoints between neighboring estimates. The first
    // pass clips the outer intervals near the extreme estimates; if roots are
    // missing it widens to the full Cauchy bound with denser probing.
    double spread = std::max(1.0, 0.1 * std::max(std::abs(approx.front()),
                                                 std::abs(approx.back())));
    Rational lo_tight(approx.front() - spread);
    Rational hi_tight(approx.back() + spread);
    if (lo_tight < -bound) lo_tight = -bound;
    if (hi_tight > bound) hi_tight = bound;

    std::vector<Rational> mids;
    for (size_t i = 0; i + 1 < approx.size(); ++i)
        mids.push_back(Rational(0.5 * (approx[i] + approx[i + 1])));

    for (int level = 0; level < 3; ++level) {
        std::vector<Rational> ts;
        ts.push_back(level == 0 ? lo_tight : -bound);
        for (const Rational& m : mids) ts.push_back(m);
        ts.push_back(level == 0 ? hi_tight : bound);
        int probes = level == 0 ? 32 : (level == 1 ? 128 : 1024);
        std::vector<double> roots = isolate_on_grid(p, ts, probes);
        if (roots.size() == approx.size()) return roots;
        if (level == 2)
            throw std::runtime_error("poly_roots_numeric: real-root reconciliation failed (" +
                                     std::to_string(roots.size()) + " refined vs " +
                                     std::to_string(approx.size()) + " estimated)");
    }
    throw std::logic_error("refine_real_roots: unreachable");
}

}  // namespace

std::vector<Complex> poly_roots_numeric(const QPoly& p, double tol) {
    if (p.is_zero()) throw std::invalid_argument("poly_roots_numeric: zero polynomial");
    int deg = p.degree();
    if (deg == 0) return {};

    std::vector<double> c(static_cast<size_t>(deg) + 1);
    for (int k = 0; k <= deg; ++k) c[static_cast<size_t>(k)] = to_double(p.coeff(k));
    double scale = 0.0;
    for (double v : c) scale = std::max(scale, std::abs(v));

    QPoly g = poly_gcd(p, p.derivative());
    std::vector<Complex> roots;
    if (g.degree() > 0) {
        // Multiple roots: refine the square-free part (all roots simple) and
        // snap each raw estimate of p to its nearest refined root.
        std::vector<Complex> precise = poly_roots_numeric(poly_divexact(p, g), tol);
        roots = aberth_estimates(c);
        for (Complex& z : roots) {
            Complex best = precise.front();
            for (const Complex& w : precise)
                if (std::abs(z - w) < std::abs(z - best)) best = w;
            if (std::abs(z - best) <= 0.1 * (1.0 + std::abs(best))) z = best;
        }
    } else {
        roots = aberth_estimates(c);
        // Split estimates into near-real and complex; the near-real ones are
        // recomputed by exact bisection, which the double-precision pass cannot
        // match on clustered roots.
        std::vector<double> near_real;
        std::vector<Complex> rest;
        for (const Complex& z : roots) {
            if (std::abs(z.imag()) <= 0.05 * (1.0 + std::abs(z.real())))
                near_real.push_back(z.real());
            else
                rest.push_back(z);
        }
        std::vector<double> refined = refine_real_roots(p, near_real);
        roots = std::move(rest);
        for (double r : refined) roots.emplace_back(r, 0.0);
    }

    // Backward-error check: |p(z)| against the evaluation scale at z.
    for (const Complex& z : roots) {
        double eval_scale = 0.0, zk = 1.0;
        double az = std::abs(z);
        for (int k = 0; k <= deg; ++k) {
            eval_scale += std::abs(c[static_cast<size_t>(k)]) * zk;
            zk *= az;
        }
        double res = std::abs(horner(c, z));
        if (res > tol * std::max(eval_scale, scale))
            throw std::runtime_error("poly_roots_numeric: residual " + std::to_string(res) +
                                     " exceeds tolerance for " + p.to_string());
    }

    std::sort(roots.begin(), roots.end(), [](const Complex& a, const Complex& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return roots;
}

std::vector<RootCluster> poly_roots_clustered(const QPoly& p, double tol) {
    if (p.is_zero()) throw std::invalid_argument("poly_roots_clustered: zero polynomial");
    if (p.degree() == 0) return {};

    // The square-free part has only simple roots, so the companion/Newton pass
    // locates them to full accuracy; multiplicities come from assigning each
    // root of p to its nearest square-free root (exact gcd, so no thresholds).
    QPoly g = poly_gcd(p, p.derivative());
    QPoly squarefree = (g.degree() > 0) ? poly_divexact(p, g) : p;
    auto distinct = poly_roots_numeric(squarefree, tol);
    auto all = poly_roots_numeric(p, tol);

    std::vector<RootCluster> clusters;
    clusters.reserve(distinct.size());
    for (const auto& z : distinct) clusters.push_back({z, 0});
    for (const auto& z : all) {
        size_t best = 0;
        double best_dist = std::abs(z - clusters[0].value);
        for (size_t i = 1; i < clusters.size(); ++i) {
            double d = std::abs(z - clusters[i].value);
            if (d < best_dist) {
                best_dist = d;
                best = i;
            }
        }
        ++clusters[best].multiplicity;
    }
    return clusters;
}

}  // namespace ggm
