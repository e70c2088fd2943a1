// Command-line runner: one subcommand per verifiable claim, each emitting a
// JSON or CSV report. Exit codes: 0 success, 1 bad usage/validation,
// 2 domain error (e.g. non-analytic input), 3 I/O failure.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hardy/errors.hpp"
#include "hardy/experiments.hpp"

namespace {

struct CliState {
    hardy::ExperimentConfig config;
    std::string out = "-";
    std::string format = "json";
};

void add_common_options(CLI::App* sub, CliState& state) {
    sub->add_option("--out", state.out, "output path, or - for stdout");
    sub->add_option("--format", state.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--grid-oversample", state.config.oversample,
                    "grid oversampling factor relative to 2*degree+1")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", state.config.seed, "seed for randomized families");
    sub->add_option("--r", state.config.r, "Orlicz / norm-model exponent r")
        ->check(CLI::PositiveNumber);
}

void add_input_options(CLI::App* sub, CliState& state) {
    sub->add_option("--family", state.config.family_text,
                    "family spec, e.g. geometric:rho=0.9,deg=256");
    sub->add_option("--coeffs", state.config.coeffs_path, "coefficient file (n,re,im lines)");
}

void add_operator_options(CLI::App* sub, CliState& state) {
    sub->add_option("--operator", state.config.operator_name,
                    "square_function | lacunary_projection | riesz_projection | hilbert");
    sub->add_option("--c0", state.config.model_c0, "norm-model constant C0");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hardy: numerical experiments on analytic Hardy spaces over the torus"};
    app.require_subcommand(1);

    CliState state;

    CLI::App* growth = app.add_subcommand(
        "growth", "operator norm ratio along p -> 1+ with a log-log slope fit");
    add_common_options(growth, state);
    add_operator_options(growth, state);
    growth->add_option("--family", state.config.family_text, "geometric (default) or beta");
    growth->add_option("--p-grid", state.config.p_grid, "comma-separated p values in (1,2]")
        ->delimiter(',');
    growth->add_option("--n-range", state.config.n_range,
                       "beta family: candidate N values (comma-separated)")
        ->delimiter(',');

    CLI::App* zygmund = app.add_subcommand(
        "zygmund", "||S f||_1 against 1 + the Zygmund functional along a family ladder");
    add_common_options(zygmund, state);
    zygmund->add_option("--family", state.config.family_text, "dirichlet (default) or geometric");
    zygmund->add_option("--m-range", state.config.m_range,
                        "comma-separated family sizes (>= 3 of them)")
        ->delimiter(',');

    CLI::App* sharpness = app.add_subcommand(
        "sharpness", "beta_N family under the lacunary projection: norms and exponents");
    add_common_options(sharpness, state);
    sharpness->add_option("--n-range", state.config.n_range, "comma-separated N values in [1,9]")
        ->delimiter(',');

    CLI::App* bonami = app.add_subcommand(
        "bonami", "random lacunary polynomials: L^q/L^2 and L^2/L^1 constants");
    add_common_options(bonami, state);
    bonami->add_option("--q-grid", state.config.q_grid, "comma-separated q values in (2,16]")
        ->delimiter(',');
    bonami->add_option("--max-freq", state.config.freq_scales,
                       "comma-separated frequency scales")
        ->delimiter(',');
    bonami->add_option("--trials", state.config.trials, "random polynomials per scale (>= 100)");
    bonami->add_option("--count", state.config.lambda_count, "frequencies per polynomial");

    CLI::App* decompose = app.add_subcommand(
        "decompose", "per-piece diagnostics of the analytic decomposition");
    add_common_options(decompose, state);
    add_input_options(decompose, state);

    CLI::App* trace = app.add_subcommand(
        "trace", "full inequality-chain trace for one input and operator");
    add_common_options(trace, state);
    add_input_options(trace, state);
    add_operator_options(trace, state);

    CLI::App* orlicz = app.add_subcommand(
        "orlicz-norm", "Luxemburg norm and Zygmund functional of one input");
    add_common_options(orlicz, state);
    add_input_options(orlicz, state);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (growth->parsed()) state.config.experiment = "growth";
    if (zygmund->parsed()) state.config.experiment = "zygmund";
    if (sharpness->parsed()) state.config.experiment = "sharpness";
    if (bonami->parsed()) state.config.experiment = "bonami";
    if (decompose->parsed()) state.config.experiment = "decompose";
    if (trace->parsed()) state.config.experiment = "trace";
    if (orlicz->parsed()) state.config.experiment = "orlicz-norm";

    try {
        const hardy::ExperimentReport report = hardy::run_experiment(state.config);
        hardy::emit_report(report, state.out, hardy::parse_format(state.format));
        return 0;
    } catch (const hardy::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
