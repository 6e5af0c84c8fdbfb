#pragma once

// Experiment orchestration: JSON-configured runs, seeded and deterministic,
// with CSV tables plus a machine-readable summary. Exit-status semantics
// live in the CLI; here a report carries one pass/fail entry per check.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "core/boundary_symbol.hpp"

namespace edtn {

struct RunOptions {
    std::string out_dir;  // empty: no files written
    std::uint64_t seed = 12345;
    int threads = 1;
    std::optional<Orientation> orientation;  // overrides the config when set
};

struct CheckResult {
    std::string name;
    bool pass = false;
    double value = 0;      // measured quantity
    double threshold = 0;  // gate it was compared against
    std::string note;
};

struct ExperimentReport {
    std::string experiment;
    bool pass = true;
    std::vector<CheckResult> checks;
    nlohmann::json summary;
};

// Built-in default configuration for each CLI experiment; the committed
// files under configs/ mirror these.
nlohmann::json default_config(const std::string& experiment);

// Dispatch on config["experiment"]. Throws std::invalid_argument for an
// unknown experiment and std::runtime_error for config/schema problems.
ExperimentReport run_experiment(const nlohmann::json& config, const RunOptions& opts);

ExperimentReport run_verify_algebra(const nlohmann::json& config, const RunOptions& opts);
ExperimentReport run_oracle_halfspace(const nlohmann::json& config, const RunOptions& opts);
ExperimentReport run_converge_disk(const nlohmann::json& config, const RunOptions& opts);
ExperimentReport run_eikonal_residual(const nlohmann::json& config, const RunOptions& opts);
ExperimentReport run_symbol_dump(const nlohmann::json& config, const RunOptions& opts);

// Shared config helpers.
ElasticMedium medium_from_json(const nlohmann::json& spec);
Orientation orientation_from_json(const nlohmann::json& config, const RunOptions& opts);

}  // namespace edtn
