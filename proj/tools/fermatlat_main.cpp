#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"

#include "fermatlat/matrix_io.hpp"
#include "fermatlat/pipeline.hpp"

namespace {

using namespace fermat;

void add_common_options(CLI::App* cmd, RunConfig& cfg, std::string& cache_dir) {
    cmd->add_option("--n", cfg.n, "even dimension of the Fermat variety")->required();
    cmd->add_option("--d", cfg.d, "degree of the Fermat variety")->required();
    cmd->add_option("--cache", cache_dir, "cache directory for matrices and reductions");
    cmd->add_option("--jobs", cfg.jobs, "parallel workers for matrix assembly");
    cmd->add_option("--max-cycles", cfg.max_cycles, "refuse above this many linear cycles");
    cmd->add_option("--max-mu", cfg.max_mu, "refuse above this many vanishing cycles");
    cmd->add_option("--memory-mb", cfg.memory_budget_mb, "advisory memory budget in MB");
    cmd->add_flag("--quiet", cfg.quiet, "suppress stage progress on stderr");
}

void resolve_cache(RunConfig& cfg, const std::string& cache_dir) {
    if (!cache_dir.empty()) {
        cfg.cache_dir = cache_dir;
    } else if (const char* env = std::getenv("FERMATLAT_CACHE")) {
        cfg.cache_dir = env;
    }
}

int run_compute(const RunConfig& cfg, OutputFormat format) {
    LatticeReport report = cfg.target == Target::primitive_hodge ? run_hodge_branch(cfg)
                                                                 : run_linear_branch(cfg);
    switch (format) {
        case OutputFormat::json:
            std::cout << report_to_json(report).dump(2) << "\n";
            break;
        case OutputFormat::csv:
            std::cout << report_to_csv(report, true);
            break;
        case OutputFormat::table:
            std::cout << report_to_table(report);
            break;
    }
    return 0;
}

int run_verify(const RunConfig& cfg, OutputFormat format) {
    VerificationResult v = verify(cfg);
    switch (format) {
        case OutputFormat::json:
            std::cout << verification_to_json(v).dump(2) << "\n";
            break;
        case OutputFormat::csv:
            std::cout << report_to_csv(v.linear_report, true)
                      << report_to_csv(v.hodge_report, false);
            break;
        case OutputFormat::table:
            std::cout << verification_to_table(v);
            break;
    }
    return v.lists_equal ? 0 : 1;
}

int run_export(const RunConfig& cfg, const std::string& what, const std::string& out,
               bool as_json) {
    const FermatParams p = cfg.params();
    std::ofstream os(out, as_json ? std::ios::out : std::ios::binary);
    if (!os) {
        std::cerr << "error: cannot open " << out << " for writing\n";
        return 1;
    }
    auto emit = [&](const IntMatrix& m) {
        if (as_json)
            os << matrix_to_json(m).dump() << "\n";
        else
            write_matrix(os, m);
    };
    if (what == "cycles") {
        os << cycles_to_json(enumerate_linear_cycles(p, cfg.max_cycles)).dump() << "\n";
    } else if (what == "index-sets") {
        os << index_sets_to_json(build_index_sets(p)).dump() << "\n";
    } else if (what == "full") {
        emit(full_intersection_matrix(p, enumerate_linear_cycles(p, cfg.max_cycles),
                                      cfg.jobs));
    } else if (what == "A1") {
        emit(primitive_intersection_matrix(full_intersection_matrix(
            p, enumerate_linear_cycles(p, cfg.max_cycles), cfg.jobs)));
    } else if (what == "psi") {
        emit(pham_intersection_matrix(p));
    } else if (what == "A2") {
        emit(build_hodge_branch(p).a2);
    } else if (what == "X") {
        emit(build_hodge_branch(p).kernel);
    } else if (what == "A3") {
        emit(build_hodge_branch(p).a3);
    } else {
        std::cerr << "error: unknown export target '" << what << "'\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lattice invariants of linear algebraic and Hodge cycles on Fermat varieties"};
    app.require_subcommand(1);

    const std::map<std::string, Target> target_names{
        {"full-linear", Target::full_linear},
        {"primitive-linear", Target::primitive_linear},
        {"primitive-hodge", Target::primitive_hodge}};
    const std::map<std::string, OutputFormat> format_names{{"json", OutputFormat::json},
                                                           {"csv", OutputFormat::csv},
                                                           {"table", OutputFormat::table}};

    RunConfig cfg;
    std::string cache_dir;
    OutputFormat format = OutputFormat::table;

    auto* compute = app.add_subcommand("compute", "compute one lattice report");
    add_common_options(compute, cfg, cache_dir);
    compute->add_option("--target", cfg.target, "which lattice to compute")
        ->required()
        ->transform(CLI::CheckedTransformer(target_names, CLI::ignore_case));
    compute->add_option("--format", format, "output format")
        ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case));

    auto* verify_cmd =
        app.add_subcommand("verify", "compare linear and Hodge divisor lists");
    add_common_options(verify_cmd, cfg, cache_dir);
    verify_cmd->add_option("--format", format, "output format")
        ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case));

    auto* export_cmd = app.add_subcommand("export", "write matrices or cycle data to a file");
    std::string what, out_path;
    bool export_json = false;
    add_common_options(export_cmd, cfg, cache_dir);
    export_cmd->add_option("--what", what, "cycles|index-sets|full|A1|A2|A3|psi|X")
        ->required();
    export_cmd->add_option("--out", out_path, "output file")->required();
    export_cmd->add_flag("--json", export_json, "write JSON instead of binary");

    CLI11_PARSE(app, argc, argv);
    resolve_cache(cfg, cache_dir);

    try {
        if (compute->parsed()) return run_compute(cfg, format);
        if (verify_cmd->parsed()) return run_verify(cfg, format);
        if (export_cmd->parsed()) return run_export(cfg, what, out_path, export_json);
    } catch (const ResourceCapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
