// Command-line front end: eigen-decompositions, hierarchical backward
// solutions, boundary extensions, stationary solutions, Monte Carlo checks,
// and finite-difference residual probes, emitted as CSV or JSON.

#include "wf/montecarlo.hpp"
#include "wf/probes.hpp"
#include "wf/serialization.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using nlohmann::json;

struct OutputSink {
    std::string path = "-";

    void write(const std::string& content) const {
        if (path == "-") {
            std::cout << content;
            return;
        }
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
        out << content;
    }
};

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--final", "cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw CLI::ValidationError("--final", "invalid JSON in '" + path + "': " + e.what());
    }
    return j;
}

wf::StratifiedFinalCondition load_final_condition(const std::string& path, int ambient_n) {
    try {
        return wf::final_condition_from_json(load_json_file(path), ambient_n);
    } catch (const CLI::ValidationError&) {
        throw;
    } catch (const std::exception& e) {
        throw CLI::ValidationError("--final", e.what());
    }
}

wf::MultiPoly parse_user_poly(const wf::Chart& chart, const std::string& text) {
    try {
        return wf::MultiPoly::parse(chart, text);
    } catch (const std::exception& e) {
        throw CLI::ValidationError("--poly", e.what());
    }
}

std::vector<int> parse_labels(const std::string& text) {
    std::vector<int> labels;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) labels.push_back(std::stoi(item));
    return labels;
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> items;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) items.push_back(item);
    return items;
}

int alleles_to_n(int alleles) {
    if (alleles < 2) throw CLI::ValidationError("--alleles", "need at least 2 alleles (n >= 1)");
    if (alleles > wf::kMaxAlleleLabel + 1)
        throw CLI::ValidationError("--alleles", "at most " + std::to_string(wf::kMaxAlleleLabel + 1) +
                                                    " alleles are supported");
    return alleles - 1;
}

wf::SimplexPoint point_from_flag(const std::string& text, int ambient_n) {
    auto parts = split_list(text);
    std::vector<double> coords;
    coords.reserve(parts.size());
    for (const auto& p : parts) coords.push_back(std::stod(p));
    if (static_cast<int>(coords.size()) != ambient_n + 1)
        throw CLI::ValidationError("--p0", "expected " + std::to_string(ambient_n + 1) + " coordinates");
    std::vector<int> labels;
    std::vector<double> kept;
    for (int i = 0; i <= ambient_n; ++i) {
        if (coords[static_cast<std::size_t>(i)] > wf::kFaceTolerance) {
            labels.push_back(i);
            kept.push_back(coords[static_cast<std::size_t>(i)]);
        }
    }
    return wf::SimplexPoint(wf::Face(std::move(labels), ambient_n), std::move(kept));
}

std::string csv_quote(const std::string& s) { return '"' + s + '"'; }

std::string point_csv(const wf::SimplexPoint& p) {
    std::string out = "(";
    for (std::size_t i = 0; i < p.coords().size(); ++i) {
        if (i) out += ' ';
        out += wf::format_double(p.coords()[i]);
    }
    return out + ")";
}

// ---------------------------------------------------------------------------
// subcommands

wf::Face face_from_flag(const std::string& flag_name, const std::string& text, int ambient_n) {
    try {
        return wf::Face(parse_labels(text), ambient_n);
    } catch (const std::exception& e) {
        throw CLI::ValidationError(flag_name, e.what());
    }
}

int run_eigen(int alleles, int degree, const std::string& face_flag, const OutputSink& sink) {
    int n = alleles_to_n(alleles);
    std::vector<wf::Face> faces;
    if (face_flag.empty()) {
        faces.push_back(wf::Face::full(n));
    } else {
        faces.push_back(face_from_flag("--face", face_flag, n));
    }
    std::ostringstream out;
    out << "face,degree,eigenvalue,eigenfunction\n";
    for (const auto& face : faces) {
        for (const auto& pair : wf::proper_basis(face, degree)) {
            out << csv_quote(face.to_string()) << ',' << pair.eigenfunction.degree() << ','
                << wf::to_string(pair.kappa) << ',' << csv_quote(pair.eigenfunction.to_string()) << '\n';
        }
    }
    sink.write(out.str());
    return 0;
}

int run_solve(int alleles, int degree, const std::string& final_path, int eval_points,
              const std::string& times_flag, std::uint64_t seed, const OutputSink& sink,
              const std::string& table_path) {
    int n = alleles_to_n(alleles);
    wf::StratifiedFinalCondition f = load_final_condition(final_path, n);
    wf::GlobalSolution solution = wf::solve_extended_kbe(f, degree);
    json doc = wf::global_solution_to_json(solution);
    doc["degree"] = degree;
    sink.write(doc.dump(2) + "\n");

    if (!table_path.empty()) {
        std::vector<double> times;
        for (const auto& t : split_list(times_flag.empty() ? "-1,-0.5,-0.1,0" : times_flag)) {
            times.push_back(std::stod(t));
            if (times.back() > 0)
                throw CLI::ValidationError("--times", "backward solutions are defined for t <= 0");
        }
        std::ostringstream table;
        table << "face,point,t,value\n";
        wf::Rng rng(seed);
        for (const auto& face : wf::all_faces(n)) {
            int count = face.dim() == 0 ? 1 : eval_points;
            for (int k = 0; k < count; ++k) {
                wf::SimplexPoint p = wf::sample_interior(face, rng);
                for (double t : times)
                    table << csv_quote(face.to_string()) << ',' << csv_quote(point_csv(p)) << ','
                          << wf::format_double(t) << ',' << wf::format_double(solution.eval(p, t)) << '\n';
            }
        }
        OutputSink table_sink{table_path};
        table_sink.write(table.str());
    }
    return 0;
}

int run_extend(int alleles, const std::string& base_flag, int anchor, const std::string& path_flag,
               bool global_ext, const std::string& poly_flag, int degree, const OutputSink& sink) {
    int n = alleles_to_n(alleles);
    wf::Face base = face_from_flag("--base", base_flag, n);
    if (global_ext && n > 7)
        std::cerr << "warning: global extension enumerates (n-k)! orderings per face; n = " << n
                  << " will be slow\n";

    wf::ProperSolution u = [&] {
        if (base.dim() == 0) {
            wf::Rational value = poly_flag.empty() ? wf::Rational(1) : wf::rational_from_string(poly_flag);
            return wf::vertex_solution(base, value);
        }
        wf::MultiPoly f = parse_user_poly(wf::Chart(base), poly_flag.empty() ? "1" : poly_flag);
        return wf::proper_solution(f, base, degree);
    }();

    wf::PiecewiseSolution extended;
    if (global_ext) {
        extended = wf::global_extension(u);
    } else {
        wf::PathSpec path(base, anchor, parse_labels(path_flag));
        extended = wf::pathwise_extension(u, path);
    }
    json doc;
    doc["base"] = wf::face_to_json(base);
    doc["mode"] = global_ext ? "global" : "path";
    doc["pieces"] = wf::piecewise_to_json(extended);
    sink.write(doc.dump(2) + "\n");
    return 0;
}

int run_stationary(int alleles, const std::string& values_flag, const OutputSink& sink) {
    int n = alleles_to_n(alleles);
    auto parts = split_list(values_flag);
    if (static_cast<int>(parts.size()) != n + 1)
        throw CLI::ValidationError("--vertex-values", "expected " + std::to_string(n + 1) + " values");
    std::map<int, wf::Rational> values;
    for (int i = 0; i <= n; ++i) values[i] = wf::rational_from_string(parts[static_cast<std::size_t>(i)]);

    wf::GlobalSolution solution = wf::stationary_solution(values, n);
    wf::StemReport report = wf::stem_check(solution);

    json doc;
    doc["alleles"] = alleles;
    json pieces = nlohmann::json::array();
    for (const auto& face : wf::all_faces(n))
        pieces.push_back({{"face", wf::face_to_json(face)},
                          {"value", solution.snapshot(face).to_string()}});
    doc["solution"] = pieces;
    json stem = nlohmann::json::array();
    for (const auto& [face, pass] : report.results)
        stem.push_back({{"face", wf::face_to_json(face)}, {"pass", pass}});
    doc["stem_check"] = stem;
    doc["stem_all_pass"] = report.all_pass;
    sink.write(doc.dump(2) + "\n");
    return 0;
}

int run_mc_check(int alleles, int degree, const std::string& final_path, const std::string& p0_flag,
                 int pop_size, double horizon, int reps, std::uint64_t seed, int threads,
                 const OutputSink& sink) {
    int n = alleles_to_n(alleles);
    wf::StratifiedFinalCondition f = load_final_condition(final_path, n);
    wf::GlobalSolution solution = wf::solve_extended_kbe(f, degree);
    wf::SimplexPoint p0 = point_from_flag(p0_flag, n);

    wf::MCConfig cfg{pop_size, p0, horizon, reps, seed};
    wf::MCEstimate estimate = wf::mc_backward_estimate(solution, cfg, threads);
    double analytic = solution.eval(p0, -horizon);
    double z = estimate.standard_error > 0 ? (estimate.mean - analytic) / estimate.standard_error : 0.0;

    std::ostringstream out;
    out << "estimate,stderr,analytic,z\n";
    out << wf::format_double(estimate.mean) << ',' << wf::format_double(estimate.standard_error) << ','
        << wf::format_double(analytic) << ',' << wf::format_double(z) << '\n';
    sink.write(out.str());
    return 0;
}

int run_residual(int alleles, int degree, const std::string& final_path, int points, double h, double t,
                 std::uint64_t seed, const OutputSink& sink) {
    int n = alleles_to_n(alleles);
    wf::StratifiedFinalCondition f = load_final_condition(final_path, n);
    wf::GlobalSolution solution = wf::solve_extended_kbe(f, degree);

    std::ostringstream out;
    out << "face,point,t,residual\n";
    wf::Rng rng(seed);
    for (const auto& face : wf::all_faces(n, 1)) {
        for (int k = 0; k < points; ++k) {
            wf::SimplexPoint p = wf::sample_interior(face, rng);
            double r = wf::pde_residual(solution, p, t, h);
            out << csv_quote(face.to_string()) << ',' << csv_quote(point_csv(p)) << ','
                << wf::format_double(t) << ',' << wf::format_double(r) << '\n';
        }
    }
    sink.write(out.str());
    return 0;
}

// ---------------------------------------------------------------------------
// config-file / environment merging: flags win over both, and a warning is
// emitted when a config value is shadowed by an explicit flag.

std::vector<std::string> merge_config(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);

    std::string config_path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size())
            config_path = args[i + 1];
        else if (args[i].rfind("--config=", 0) == 0)
            config_path = args[i].substr(9);
    }

    auto has_flag = [&](const std::string& name) {
        for (const auto& a : args)
            if (a == "--" + name || a.rfind("--" + name + "=", 0) == 0) return true;
        return false;
    };
    // Global options must precede the subcommand token; everything else is a
    // subcommand option and goes at the end.
    auto is_global = [](const std::string& name) {
        return name == "seed" || name == "threads" || name == "output" || name == "config";
    };
    auto append_kv = [&](const std::string& name, const std::string& value) {
        if (is_global(name))
            args.insert(args.begin(), "--" + name + "=" + value);
        else
            args.push_back("--" + name + "=" + value);
    };

    // Environment defaults for seed and thread count.
    for (const auto& [env, flag] : {std::pair{"WFKBE_SEED", "seed"}, std::pair{"WFKBE_THREADS", "threads"}}) {
        if (const char* v = std::getenv(env); v && *v && !has_flag(flag)) append_kv(flag, v);
    }

    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw CLI::ValidationError("--config", "cannot open '" + config_path + "'");
        json cfg;
        try {
            in >> cfg;
        } catch (const std::exception& e) {
            throw CLI::ValidationError("--config", std::string("invalid JSON: ") + e.what());
        }
        for (const auto& [key, value] : cfg.items()) {
            if (has_flag(key)) {
                std::cerr << "warning: flag --" << key << " overrides the config file value\n";
                continue;
            }
            if (value.is_boolean()) {
                if (value.get<bool>()) args.insert(is_global(key) ? args.begin() : args.end(), "--" + key);
            } else if (value.is_string()) {
                append_kv(key, value.get<std::string>());
            } else {
                append_kv(key, value.dump());
            }
        }
    }
    return args;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hierarchical backward solutions of the Wright-Fisher diffusion on the simplex"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may also follow the subcommand

    OutputSink sink;
    std::uint64_t seed = 12345;
    int threads = 0;
    std::string config_path;
    app.add_option("--output", sink.path, "output path, '-' for stdout")->capture_default_str();
    app.add_option("--seed", seed, "random seed")->capture_default_str();
    app.add_option("--threads", threads, "worker threads (0 = hardware)")->capture_default_str();
    app.add_option("--config", config_path, "JSON config file; explicit flags win");

    int alleles = 0, degree = 6;

    auto* eigen = app.add_subcommand("eigen", "proper eigenpairs of the backward operator");
    std::string eigen_face;
    eigen->add_option("--alleles", alleles, "number of alleles (n+1)")->required();
    eigen->add_option("--degree", degree, "maximum eigenfunction degree")->required()->check(CLI::Range(1, 16));
    eigen->add_option("--face", eigen_face, "comma-separated face labels (default: full simplex)");

    auto* solve = app.add_subcommand("solve", "hierarchical solution of the extended backward equation");
    std::string final_path, times_flag, table_path;
    int eval_points = 3;
    solve->add_option("--alleles", alleles)->required();
    solve->add_option("--degree", degree)->required()->check(CLI::Range(1, 16));
    solve->add_option("--final", final_path, "final-condition JSON file")->required();
    solve->add_option("--table", table_path, "also write a CSV evaluation table to this path");
    solve->add_option("--eval-points", eval_points, "sample points per face in the table");
    solve->add_option("--times", times_flag, "comma-separated times for the table");

    auto* extend = app.add_subcommand("extend", "pathwise or global extension from a base face");
    std::string base_flag, path_flag, poly_flag;
    int anchor = 0;
    bool global_ext = false;
    extend->add_option("--alleles", alleles)->required();
    extend->add_option("--base", base_flag, "comma-separated base face labels")->required();
    extend->add_option("--anchor", anchor, "anchor label in the base face");
    extend->add_option("--path", path_flag, "comma-separated added labels, in loss order");
    extend->add_flag("--global", global_ext, "average over all anchors and orderings");
    extend->add_option("--poly", poly_flag, "final condition on the base face (default 1)");
    extend->add_option("--degree", degree, "truncation degree for base faces of dim >= 1")->check(CLI::Range(1, 16));

    auto* stationary = app.add_subcommand("stationary", "stationary solution from vertex values");
    std::string values_flag;
    stationary->add_option("--alleles", alleles)->required();
    stationary->add_option("--vertex-values", values_flag, "comma-separated vertex values")->required();

    auto* mc = app.add_subcommand("mc-check", "Monte Carlo agreement against the discrete model");
    std::string p0_flag;
    int pop_size = 500, reps = 100000;
    double horizon = 1.0;
    mc->add_option("--alleles", alleles)->required();
    mc->add_option("--degree", degree)->required()->check(CLI::Range(1, 16));
    mc->add_option("--final,--final-condition", final_path, "final-condition JSON file")->required();
    mc->add_option("--p0", p0_flag, "start point, n+1 comma-separated frequencies")->required();
    mc->add_option("--pop-size", pop_size)->capture_default_str();
    mc->add_option("--horizon", horizon, "diffusion time tau = |t|")->capture_default_str();
    mc->add_option("--reps", reps)->capture_default_str();

    auto* residual = app.add_subcommand("residual", "finite-difference residual of the solved equation");
    int points = 10;
    double h = 1e-4, t_probe = -0.5;
    residual->add_option("--alleles", alleles)->required();
    residual->add_option("--degree", degree)->required()->check(CLI::Range(1, 16));
    residual->add_option("--final", final_path)->required();
    residual->add_option("--points", points, "probe points per face")->capture_default_str();
    residual->add_option("--step", h, "stencil step")->capture_default_str();
    residual->add_option("--time", t_probe, "probe time (negative)")->capture_default_str();

    try {
        auto args = merge_config(argc, argv);
        std::reverse(args.begin(), args.end());  // CLI11 consumes right to left
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (*eigen) return run_eigen(alleles, degree, eigen_face, sink);
        if (*solve) return run_solve(alleles, degree, final_path, eval_points, times_flag, seed, sink, table_path);
        if (*extend) return run_extend(alleles, base_flag, anchor, path_flag, global_ext, poly_flag, degree, sink);
        if (*stationary) return run_stationary(alleles, values_flag, sink);
        if (*mc) return run_mc_check(alleles, degree, final_path, p0_flag, pop_size, horizon, reps, seed, threads, sink);
        if (*residual) return run_residual(alleles, degree, final_path, points, h, t_probe, seed, sink);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "computation error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
