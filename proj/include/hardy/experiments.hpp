#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hardy/report.hpp"
#include "hardy/spectral_core.hpp"
#include "hardy/yano.hpp"

namespace hardy {

/// Shared knob set for every experiment; each runner validates the subset it
/// reads. Identical configs (including seed) produce identical reports.
struct ExperimentConfig {
    std::string experiment;
    std::string operator_name = "square_function";
    std::optional<double> model_c0;  // overrides the operator default
    std::string family_text;         // e.g. "geometric:rho=0.9,deg=256"
    std::string coeffs_path;

    std::vector<double> p_grid;
    std::vector<int> n_range;
    std::vector<std::int64_t> m_range;
    std::vector<double> q_grid;
    std::vector<std::int64_t> freq_scales;

    double r = 1.0;
    std::size_t trials = 200;
    std::size_t lambda_count = 16;
    std::size_t oversample = 8;
    std::uint64_t seed = 1;
    double luxemburg_tol = 1e-10;

    nlohmann::json to_json() const;
};

/// Operator-norm growth along p -> 1+: builds the family member tied to each
/// p, measures ||T f||_p / ||f||_p, and fits the log-log slope against p - 1.
ExperimentReport run_growth(const ExperimentConfig& config);

/// ||S f||_1 against 1 + int |f| log^r(1+|f|) along a family ladder.
ExperimentReport run_zygmund(const ExperimentConfig& config);

/// The beta_N family against the lacunary projection: Orlicz norms, L1/L2 of
/// T_Lambda beta_N, the exact sqrt(N+1) lower bound, and growth exponents.
ExperimentReport run_sharpness(const ExperimentConfig& config);

/// Random lacunary polynomials: max ||h||_q / (q ||h||_2) per q and
/// max ||h||_2 / ||h||_1, at several frequency scales.
ExperimentReport run_bonami(const ExperimentConfig& config);

/// Per-piece diagnostics of the analytic decomposition of one input.
ExperimentReport run_decompose(const ExperimentConfig& config);

/// Full inequality-chain trace of one input under one operator.
ExperimentReport run_trace(const ExperimentConfig& config);

/// Luxemburg norm and Zygmund functional of one input.
ExperimentReport run_orlicz_norm(const ExperimentConfig& config);

/// Dispatch by config.experiment.
ExperimentReport run_experiment(const ExperimentConfig& config);

}  // namespace hardy
