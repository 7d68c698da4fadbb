#include "ggm/cycle_fiber.hpp"
#include "ggm/graph.hpp"
#include "ggm/mle.hpp"
#include "ggm/pn_family.hpp"
#include "ggm/roots.hpp"
#include "ggm/systems.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;

// All floats go out with 17 significant digits so values round-trip.
ordered_json json_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return ordered_json::parse(buf);
}

ordered_json json_complex(const std::complex<double>& z) {
    return ordered_json::array({json_double(z.real()), json_double(z.imag())});
}

void emit(const ordered_json& j, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(output_path);
        out << j.dump(2) << "\n";
    }
}

int tracker_threads() {
    if (const char* env = std::getenv("GGM_THREADS")) {
        int t = std::atoi(env);
        if (t > 0) return t;
    }
    return 1;
}

ggm::TrackerConfig make_tracker(double tol) {
    ggm::TrackerConfig cfg;
    cfg.endpoint_tol = tol;
    cfg.threads = tracker_threads();
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Likelihood geometry of Gaussian cycle models"};
    app.require_subcommand(1);

    std::string format = "json";
    std::string output_path;
    app.add_option("--format", format, "Output format: json or text")->capture_default_str();
    app.add_option("--output", output_path, "Write output to a file instead of stdout");

    // verify-identities
    auto* cmd_verify = app.add_subcommand("verify-identities",
                                          "Exactly verify the determinant-family identities");
    int max_n = 100;
    cmd_verify->add_option("--max-n", max_n, "Largest index to check")->capture_default_str();

    // roots
    auto* cmd_roots = app.add_subcommand("roots", "Roots of P_n by closed form and numerically");
    int roots_n = 10;
    double roots_tol = 1e-10;
    cmd_roots->add_option("n", roots_n, "Index of the polynomial")->required();
    cmd_roots->add_option("--tol", roots_tol, "Residual tolerance")->capture_default_str();

    // fiber
    auto* cmd_fiber = app.add_subcommand("fiber", "Enumerate the fiber of a cycle model over Id");
    int fiber_n = 5;
    double fiber_tol = 1e-9;
    cmd_fiber->add_option("n", fiber_n, "Cycle length")->required();
    cmd_fiber->add_option("--tol", fiber_tol, "Membership tolerance")->capture_default_str();

    // lower-bound
    auto* cmd_lb = app.add_subcommand("lower-bound", "Critical-point lower bound for a cycle");
    int lb_n = 8;
    cmd_lb->add_option("n", lb_n, "Cycle length")->required();

    // chordal
    auto* cmd_chordal = app.add_subcommand("chordal", "Chordality test with certificate");
    std::string chordal_graph;
    cmd_chordal->add_option("graph", chordal_graph, "Graph file or family literal")->required();

    // mldeg
    auto* cmd_mldeg = app.add_subcommand("mldeg", "Count likelihood critical points by homotopy");
    std::string mldeg_graph;
    std::vector<std::uint64_t> mldeg_seeds = {1, 2, 3};
    double mldeg_tol = 1e-10;
    bool mldeg_timing = false;
    cmd_mldeg->add_option("graph", mldeg_graph, "Graph file or family literal")->required();
    cmd_mldeg->add_option("--seed", mldeg_seeds, "Seeds (all must agree)")->capture_default_str();
    cmd_mldeg->add_option("--tol", mldeg_tol, "Endpoint tolerance")->capture_default_str();
    cmd_mldeg->add_flag("--timing", mldeg_timing, "Include runtime_ms in the report");

    // fiber-bruteforce
    auto* cmd_bf = app.add_subcommand("fiber-bruteforce",
                                      "Solve the fiber equations by continuation");
    int bf_n = 4;
    std::uint64_t bf_seed = 1;
    double bf_tol = 1e-10;
    cmd_bf->add_option("n", bf_n, "Cycle length (4..6)")->required();
    cmd_bf->add_option("--seed", bf_seed, "Seed")->capture_default_str();
    cmd_bf->add_option("--tol", bf_tol, "Endpoint tolerance")->capture_default_str();

    // mle
    auto* cmd_mle = app.add_subcommand("mle", "Maximum likelihood concentration estimate");
    std::string mle_graph, mle_cov;
    double mle_tol = 1e-10;
    cmd_mle->add_option("graph", mle_graph, "Graph file or family literal")->required();
    cmd_mle->add_option("cov", mle_cov, "Covariance CSV file")->required();
    cmd_mle->add_option("--tol", mle_tol, "Stationarity tolerance")->capture_default_str();

    // monotonicity
    auto* cmd_mono = app.add_subcommand("monotonicity",
                                        "Critical-point count against a vertex-deleted subgraph");
    std::string mono_graph;
    int mono_vertex = 0;
    std::vector<std::uint64_t> mono_seeds = {1, 2, 3};
    cmd_mono->add_option("graph", mono_graph, "Graph file or family literal")->required();
    cmd_mono->add_option("vertex", mono_vertex, "Vertex to delete")->required();
    cmd_mono->add_option("--seed", mono_seeds, "Seeds")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*cmd_verify) {
            ggm::PnTable table(2 * max_n + 2);
            auto report = ggm::verify_all_identities(table, max_n);
            ordered_json j;
            j["max_n"] = max_n;
            j["holds"] = report.holds;
            if (!report.holds) j["counterexample"] = report.detail;
            emit(j, output_path);
            return report.holds ? kExitOk : kExitVerification;
        }

        if (*cmd_roots) {
            ggm::PnTable table(roots_n);
            auto closed = ggm::cosine_roots(roots_n);
            auto numeric = ggm::poly_roots_numeric(table.poly(roots_n), roots_tol);
            if (format == "csv") {
                std::ostringstream os;
                os << "closed_form,numeric_re,numeric_im\n";
                std::sort(closed.begin(), closed.end());
                for (size_t i = 0; i < numeric.size(); ++i) {
                    char buf[128];
                    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n",
                                  i < closed.size() ? closed[i] : 0.0, numeric[i].real(),
                                  numeric[i].imag());
                    os << buf;
                }
                if (output_path.empty()) std::cout << os.str();
                else std::ofstream(output_path) << os.str();
                return kExitOk;
            }
            ordered_json j;
            j["n"] = roots_n;
            j["closed_form"] = ordered_json::array();
            std::sort(closed.begin(), closed.end());
            for (double r : closed) j["closed_form"].push_back(json_double(r));
            j["numeric"] = ordered_json::array();
            for (const auto& z : numeric) j["numeric"].push_back(json_complex(z));
            emit(j, output_path);
            return kExitOk;
        }

        if (*cmd_fiber) {
            ggm::PnTable table(fiber_n);
            auto points = ggm::enumerate_fiber(fiber_n, table, fiber_tol);
            ordered_json j;
            j["n"] = fiber_n;
            j["count"] = points.size();
            j["points"] = ordered_json::array();
            for (const auto& p : points) {
                ordered_json pj;
                pj["family"] = ggm::fiber_family_name(p.family);
                pj["x"] = json_complex(p.x);
                pj["signs"] = p.signs;
                pj["residual"] = json_double(p.residual);
                j["points"].push_back(std::move(pj));
            }
            emit(j, output_path);
            return kExitOk;
        }

        if (*cmd_lb) {
            ggm::PnTable table(lb_n);
            auto bound = ggm::fiber_lower_bound(lb_n, table);
            ordered_json j;
            j["n"] = lb_n;
            j["lower_bound"] = bound;
            emit(j, output_path);
            return kExitOk;
        }

        if (*cmd_chordal) {
            ggm::Graph g = ggm::parse_graph_spec(chordal_graph);
            auto r = ggm::is_chordal(g);
            ordered_json j;
            j["graph"] = ordered_json::parse(ggm::graph_to_json(g));
            j["chordal"] = r.chordal;
            if (r.ordering) j["elimination_ordering"] = *r.ordering;
            emit(j, output_path);
            return kExitOk;
        }

        if (*cmd_mldeg) {
            ggm::Graph g = ggm::parse_graph_spec(mldeg_graph);
            auto cfg = make_tracker(mldeg_tol);
            auto start = std::chrono::steady_clock::now();
            auto result = ggm::count_ml_degree(g, mldeg_seeds, cfg);
            auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - start)
                               .count();
            ordered_json j;
            j["graph"] = ordered_json::parse(ggm::graph_to_json(g));
            j["seeds"] = mldeg_seeds;
            j["count"] = result.count;
            j["paths_tracked"] = result.paths_tracked;
            j["residual_max"] = json_double(result.residual_max);
            if (mldeg_timing) j["runtime_ms"] = elapsed;
            emit(j, output_path);
            return kExitOk;
        }

        if (*cmd_bf) {
            auto cfg = make_tracker(bf_tol);
            cfg.seed = bf_seed;
            auto sols = ggm::fiber_bruteforce(bf_n, cfg);
            auto fs = ggm::fiber_system(bf_n);
            ordered_json j;
            j["n"] = bf_n;
            j["count"] = sols.size();
            j["coordinates"] = ordered_json::array();
            for (auto e : fs.coords) j["coordinates"].push_back({e.first, e.second});
            j["solutions"] = ordered_json::array();
            for (const auto& z : sols) {
                ordered_json zz = ordered_json::array();
                for (Eigen::Index i = 0; i < z.size(); ++i) zz.push_back(json_complex(z(i)));
                j["solutions"].push_back(std::move(zz));
            }
            emit(j, output_path);
            return kExitOk;
        }

        if (*cmd_mle) {
            ggm::Graph g = ggm::parse_graph_spec(mle_graph);
            Eigen::MatrixXd s = ggm::load_covariance_csv(mle_cov);
            if (s.rows() != g.num_vertices())
                throw std::invalid_argument("covariance size does not match the graph");
            Eigen::MatrixXd k = ggm::numeric_mle(g, s, mle_tol);
            Eigen::MatrixXd w = k.inverse();
            double residual = 0.0;
            auto ms = ggm::model_space(g);
            for (auto [i, jx] : ms.support)
                residual = std::max(residual, std::abs(w(i, jx) - s(i, jx)));
            ordered_json j;
            j["graph"] = ordered_json::parse(ggm::graph_to_json(g));
            j["method"] = ggm::is_chordal(g).chordal ? "coordinate-ascent (chordal cross-check applies)"
                                                     : "coordinate-ascent";
            j["concentration"] = ordered_json::array();
            for (int i = 0; i < k.rows(); ++i) {
                ordered_json row = ordered_json::array();
                for (int c = 0; c < k.cols(); ++c) row.push_back(json_double(k(i, c)));
                j["concentration"].push_back(std::move(row));
            }
            j["log_likelihood"] = json_double(ggm::log_likelihood(k, s));
            j["stationarity_residual"] = json_double(residual);
            emit(j, output_path);
            return kExitOk;
        }

        if (*cmd_mono) {
            ggm::Graph g = ggm::parse_graph_spec(mono_graph);
            auto cfg = make_tracker(1e-10);
            auto r = ggm::monotonicity_check(g, mono_vertex, mono_seeds, cfg);
            ordered_json j;
            j["graph"] = ordered_json::parse(ggm::graph_to_json(g));
            j["deleted_vertex"] = mono_vertex;
            j["count_graph"] = r.count_g;
            j["count_subgraph"] = r.count_h;
            j["holds"] = r.holds;
            emit(j, output_path);
            return r.holds ? kExitOk : kExitVerification;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerification;
    }
    return kExitUsage;
}
