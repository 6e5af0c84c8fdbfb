// Command-line front end for the experiment suites. Talks to the shared
// library exclusively through the C API.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "edtn/edtn.h"

namespace {

struct CommonArgs {
    std::string config_path;
    std::string out_dir;
    std::uint64_t seed = 12345;
    int threads = 1;
    std::string orientation = "";
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--config", args.config_path, "JSON configuration file (defaults built in)");
    cmd->add_option("--out", args.out_dir, "output directory for CSV tables and summary.json");
    cmd->add_option("--seed", args.seed, "random seed for the sampled checks");
    cmd->add_option("--threads", args.threads, "worker threads for grid sweeps");
    cmd->add_option("--orientation", args.orientation, "normal convention: inward | outward")
        ->check(CLI::IsMember({"inward", "outward"}));
}

int run_subcommand(const std::string& experiment, const CommonArgs& args) {
    std::string config;
    if (!args.config_path.empty()) {
        std::ifstream is(args.config_path);
        if (!is) {
            std::cerr << "error: cannot open config " << args.config_path << "\n";
            return 3;
        }
        std::stringstream ss;
        ss << is.rdbuf();
        config = ss.str();
    } else {
        char* def = nullptr;
        if (edtn_default_config(experiment.c_str(), &def) != EDTN_OK) {
            std::cerr << "error: " << edtn_last_error() << "\n";
            return 3;
        }
        config = def;
        edtn_string_free(def);
    }

    int orientation_override = -1;
    if (args.orientation == "inward") orientation_override = EDTN_ORIENT_INWARD;
    if (args.orientation == "outward") orientation_override = EDTN_ORIENT_OUTWARD;

    char* summary = nullptr;
    int pass = 0;
    const edtn_status st = edtn_run_experiment(
        config.c_str(), args.out_dir.empty() ? nullptr : args.out_dir.c_str(), args.seed,
        args.threads, orientation_override, &summary, &pass);
    if (st != EDTN_OK) {
        std::cerr << "error: " << edtn_last_error() << "\n";
        return 3;
    }
    std::cout << summary << "\n";
    edtn_string_free(summary);
    if (!pass) {
        std::cerr << experiment << ": FAILED checks (see summary above)\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"elastic Dirichlet-to-Neumann symbol toolbox"};
    app.set_version_flag("--version", std::string(edtn_version()));
    app.require_subcommand(1);

    const char* names[] = {"verify-algebra", "oracle-halfspace", "converge-disk",
                           "eikonal-residual", "symbol-dump"};
    const char* descriptions[] = {
        "algebraic identity suite on seeded random instances",
        "compare the symbol against the exact half-space solver",
        "disk convergence study: fitted rates in h and theta",
        "eikonal Taylor residual orders and phase lower bounds",
        "write a symbol table (rho, m, q) over a cotangent grid"};

    CommonArgs args[5];
    for (int i = 0; i < 5; ++i) {
        CLI::App* cmd = app.add_subcommand(names[i], descriptions[i]);
        add_common(cmd, args[i]);
    }

    CLI11_PARSE(app, argc, argv);

    for (int i = 0; i < 5; ++i)
        if (app.get_subcommand(names[i])->parsed()) return run_subcommand(names[i], args[i]);
    return 2;
}
