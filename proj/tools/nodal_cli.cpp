#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <string>

#include "nodal/chessboard.hpp"
#include "nodal/classify.hpp"
#include "nodal/nodal.hpp"
#include "nodal/render.hpp"
#include "nodal/serialize.hpp"
#include "nodal/spectrum.hpp"
#include "nodal/theta.hpp"
#include "nodal/verify.hpp"

#ifndef NODAL_DATA_DIR
#define NODAL_DATA_DIR "tests/data"
#endif

namespace {

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file " + path);
    out << text;
}

nodal::Theta theta_arg(const std::string& text) {
    auto th = nodal::parse_theta(text);
    if (!th) throw CLI::ValidationError("--theta", "cannot parse angle '" + text + "'");
    return *th;
}

std::string sweep_csv(const nodal::SweepResult& s) {
    std::string out = "theta,count,certified,at_critical\n";
    char buf[40];
    for (const auto& pt : s.points) {
        std::snprintf(buf, sizeof buf, "%.17g", pt.theta.value);
        out += std::string(buf) + ',' + std::to_string(pt.count) + ',' +
               (pt.certified ? "1" : "0") + ',' + (pt.at_critical ? "1" : "0") + '\n';
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nodal domain toolkit for the square with natural boundary conditions"};
    app.require_subcommand(1);

    int p = 1, q = 0, resolution = 0, samples = 16, width = 640;
    long long n = 1, n_max = 208, lambda_max = 245;
    std::string theta_text = "0", format = "json", out_path, kind = "nodal";
    std::string data_dir = NODAL_DATA_DIR;

    auto* spectrum = app.add_subcommand("spectrum", "list eigenvalues with lattice pairs");
    spectrum->add_option("--lambda-max", lambda_max, "largest eigenvalue to list");
    spectrum->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    spectrum->add_option("-o,--output", out_path);

    auto* classify_cmd = app.add_subcommand("classify", "decide one eigenvalue index");
    classify_cmd->add_option("--n", n, "1-based index in the eigenvalue sequence")->required();
    classify_cmd->add_option("-o,--output", out_path);

    auto* table = app.add_subcommand("table", "full classification table");
    table->add_option("--n-max", n_max, "last index to classify");
    table->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    table->add_option("-o,--output", out_path);

    auto* count = app.add_subcommand("count", "certified nodal-domain count");
    count->add_option("--p", p)->required();
    count->add_option("--q", q)->required();
    count->add_option("--theta", theta_text, "mixing angle, float or symbolic like pi/4");
    count->add_option("--resolution", resolution, "grid resolution, 0 = automatic");
    count->add_option("-o,--output", out_path);

    auto* sweep = app.add_subcommand("sweep", "count across the mixing angle");
    sweep->add_option("--p", p)->required();
    sweep->add_option("--q", q)->required();
    sweep->add_option("--samples", samples, "extra uniform sample angles");
    sweep->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    sweep->add_option("-o,--output", out_path);

    auto* chessboard = app.add_subcommand("chessboard", "sign-cell localization data");
    chessboard->add_option("--p", p)->required();
    chessboard->add_option("--q", q)->required();
    chessboard->add_option("-o,--output", out_path);

    auto* render = app.add_subcommand("render", "svg or pgm pictures");
    render->add_option("--kind", kind)
        ->check(CLI::IsMember({"nodal", "fgraph", "chessboard", "sweep"}));
    render->add_option("--p", p);
    render->add_option("--q", q);
    render->add_option("--theta", theta_text);
    render->add_option("--resolution", resolution);
    render->add_option("--width", width);
    render->add_option("--samples", samples);
    render->add_option("--format", format)->check(CLI::IsMember({"svg", "pgm"}));
    render->add_option("-o,--output", out_path);

    auto* verify = app.add_subcommand("verify", "run the acceptance checks");
    verify->add_option("--data-dir", data_dir, "directory with the reference csv fixtures");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (spectrum->parsed()) {
            auto es = nodal::enumerate_spectrum(lambda_max);
            emit(format == "csv" ? nodal::spectrum_csv(es) : nodal::to_json(es), out_path);
        } else if (classify_cmd->parsed()) {
            emit(nodal::to_json(nodal::classify(n)) + "\n", out_path);
        } else if (table->parsed()) {
            auto t = nodal::generate_table(n_max);
            emit(format == "csv" ? nodal::table_csv(t) : nodal::to_json(t), out_path);
        } else if (count->parsed()) {
            auto r = nodal::count_nodal_domains(p, q, theta_arg(theta_text), resolution);
            emit(nodal::to_json(r) + "\n", out_path);
        } else if (sweep->parsed()) {
            auto s = nodal::sweep_theta(p, q, samples);
            emit(format == "csv" ? sweep_csv(s) : nodal::to_json(s, p, q) + "\n", out_path);
        } else if (chessboard->parsed()) {
            auto b = nodal::build_chessboard(p, q);
            emit(nodal::chessboard_json(b, nodal::blue_recolor(b)) + "\n", out_path);
        } else if (render->parsed()) {
            nodal::RenderSpec spec;
            spec.kind = kind == "fgraph"       ? nodal::RenderKind::FGRAPH
                        : kind == "chessboard" ? nodal::RenderKind::CHESSBOARD
                        : kind == "sweep"      ? nodal::RenderKind::SWEEP_PROFILE
                                               : nodal::RenderKind::NODAL;
            spec.p = p;
            spec.q = q;
            spec.theta = theta_arg(theta_text);
            spec.resolution = resolution;
            spec.width = width;
            spec.samples = samples;
            emit(format == "pgm" ? nodal::render_pgm(spec) : nodal::render_svg(spec), out_path);
        } else if (verify->parsed()) {
            return nodal::run_acceptance(std::cout, data_dir) ? 0 : 1;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
