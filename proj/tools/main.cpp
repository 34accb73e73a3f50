#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "aflab/checks.hpp"
#include "aflab/errors.hpp"
#include "aflab/measures.hpp"
#include "aflab/oracle.hpp"
#include "aflab/report.hpp"
#include "aflab/shapespec.hpp"

namespace {

using namespace aflab;

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        const std::size_t comma = s.find(',', start);
        if (comma == std::string::npos) {
            out.push_back(s.substr(start));
            break;
        }
        out.push_back(s.substr(start, comma - start));
        start = comma + 1;
    }
    return out;
}

void write_out(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream f(path);
    if (!f) throw UsageError("cannot write output file '" + path + "'");
    f << content;
}

Eigen::Vector3d origin_shift(const std::string& origin, const Shape& shape, const SphereGrid& grid) {
    if (origin == "as-given") return Eigen::Vector3d::Zero();
    const SampleSet samples = sample_shape(shape, grid);
    if (origin == "circumcenter") return -circumball(samples).center;
    return -steiner_point_samples(samples);  // "steiner"
}

int cmd_run(const std::string& shape_file, const std::string& checks, const std::string& grid_text,
            const std::string& out, const std::string& format, const std::string& origin) {
    const ShapeSpecFile spec = load_shape_spec(shape_file);
    const Shape shape = build_shape(spec);
    const int dim = shape_dim(shape);
    const SphereGrid grid =
        grid_text.empty() ? (dim == 1 ? grid_s1(128) : grid_s2(48, 96)) : parse_grid(grid_text, dim);

    const Eigen::Vector3d shift = origin_shift(origin, shape, grid);
    const std::vector<CheckResult> results = run_suite(shape, grid, split_commas(checks), shift);

    if (format == "csv")
        write_out(out, report_csv(results));
    else
        write_out(out, report_json(results, shape_file, grid.describe()));

    for (const CheckResult& r : results)
        if (r.verdict == "fail") return 1;
    return 0;
}

int cmd_convergence(const std::string& shape_file, const std::string& check,
                    const std::string& grids, const std::string& out, const std::string& format) {
    const Shape shape = build_shape(load_shape_spec(shape_file));
    const std::vector<ConvergenceRow> rows = convergence_study(shape, check, split_commas(grids));
    if (format == "csv")
        write_out(out, convergence_csv(rows));
    else
        write_out(out, convergence_json(rows, check));
    return 0;
}

int cmd_oracle(const std::string& out, const std::string& format) {
    const std::vector<OracleReport> reports = oracle_reference_suite();
    if (format == "csv")
        write_out(out, oracle_csv(reports));
    else
        write_out(out, oracle_json(reports));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Curvature-integral identities and sharp inequalities for closed hypersurfaces"};
    app.require_subcommand(1);

    std::string shape_file, checks = "all", grid_text, out, format = "json", origin = "as-given";
    std::string check_id, grids;

    CLI::App* run = app.add_subcommand("run", "evaluate a check suite on a shape");
    run->add_option("--shape", shape_file, "shape spec JSON file")->required();
    run->add_option("--checks", checks, "comma-separated check ids or 'all'");
    run->add_option("--grid", grid_text, "N (S^1) or NlatxNlon (S^2)");
    run->add_option("--out", out, "output file (default stdout)");
    run->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    run->add_option("--origin", origin, "pre-translation applied to the shape")
        ->check(CLI::IsMember({"as-given", "circumcenter", "steiner"}));

    CLI::App* conv = app.add_subcommand("convergence", "residual across a list of grids");
    conv->add_option("--shape", shape_file, "shape spec JSON file")->required();
    conv->add_option("--check", check_id, "check id")->required();
    conv->add_option("--grids", grids, "comma-separated grid sizes")->required();
    conv->add_option("--out", out, "output file (default stdout)");
    conv->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));

    CLI::App* oracle = app.add_subcommand("oracle", "closed-form reference comparisons");
    oracle->add_option("--out", out, "output file (default stdout)");
    oracle->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (run->parsed()) return cmd_run(shape_file, checks, grid_text, out, format, origin);
        if (conv->parsed()) return cmd_convergence(shape_file, check_id, grids, out, format);
        return cmd_oracle(out, format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
