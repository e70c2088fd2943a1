#include "hardy/experiments.hpp"

#include <algorithm>
#include <cmath>

#include "hardy/errors.hpp"
#include "hardy/families.hpp"
#include "hardy/kislyakov.hpp"
#include "hardy/multipliers.hpp"
#include "hardy/orlicz.hpp"
#include "hardy/parallel.hpp"

namespace hardy {

namespace {

nlohmann::json environment_block(const ExperimentConfig& config) {
    nlohmann::json env;
    env["library"] = "hardy";
    env["grid_oversample"] = config.oversample;
    env["luxemburg_tol"] = config.luxemburg_tol;
    return env;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

TrigPoly single_input(const ExperimentConfig& config) {
    const bool has_family = !config.family_text.empty();
    const bool has_coeffs = !config.coeffs_path.empty();
    if (has_family == has_coeffs) {
        throw ParameterError("provide exactly one of --family and --coeffs");
    }
    if (has_coeffs) return load_coefficients(config.coeffs_path);
    return make_family(parse_family_spec(config.family_text, config.seed));
}

OperatorHandle configured_operator(const ExperimentConfig& config) {
    OperatorHandle op = make_operator(config.operator_name);
    NormModel model = *op.norm_model;
    model.r = config.r;
    if (config.model_c0) model.c0 = *config.model_c0;
    op.norm_model = model;
    return op;
}

std::int64_t geometric_degree(double rho) {
    // rho^deg < 1e-12 keeps the truncation below quadrature noise.
    const double deg = std::log(1e-12) / std::log(rho);
    return std::clamp<std::int64_t>(static_cast<std::int64_t>(std::ceil(deg)), 8, 200000);
}

}  // namespace

nlohmann::json ExperimentConfig::to_json() const {
    nlohmann::json out;
    out["experiment"] = experiment;
    out["operator"] = operator_name;
    if (model_c0) out["model_c0"] = *model_c0;
    out["family"] = family_text;
    out["coeffs"] = coeffs_path;
    out["p_grid"] = p_grid;
    out["n_range"] = n_range;
    out["m_range"] = m_range;
    out["q_grid"] = q_grid;
    out["freq_scales"] = freq_scales;
    out["r"] = r;
    out["trials"] = trials;
    out["lambda_count"] = lambda_count;
    out["oversample"] = oversample;
    out["seed"] = seed;
    out["luxemburg_tol"] = luxemburg_tol;
    return out;
}

ExperimentReport run_growth(const ExperimentConfig& config) {
    if (config.p_grid.size() < 5) throw ParameterError("growth needs a p grid with >= 5 points");
    for (double p : config.p_grid) {
        if (!(p > 1.0 && p <= 2.0)) throw ParameterError("growth p grid must lie in (1, 2]");
    }
    const std::string family = config.family_text.empty() ? "geometric" : config.family_text;
    const std::string kind = family.substr(0, family.find(':'));
    if (kind != "geometric" && kind != "beta") {
        throw ParameterError("growth supports the geometric and beta families");
    }
    std::vector<int> n_candidates = config.n_range;
    if (n_candidates.empty()) n_candidates = {1, 2, 3, 4, 5, 6, 7, 8};

    const OperatorHandle op = configured_operator(config);

    ExperimentReport report;
    report.config = config.to_json();
    report.environment = environment_block(config);
    report.columns = {"p", "p_minus_1", "family_param", "degree",
                      "grid", "f_norm_p", "tf_norm_p", "ratio"};

    std::vector<std::pair<double, double>> points;
    for (double p : config.p_grid) {
        TrigPoly f;
        double family_param = 0.0;
        if (kind == "geometric") {
            const double rho = 1.0 - (p - 1.0);
            f = geometric(rho, geometric_degree(rho));
            family_param = rho;
        } else {
            // beta: pick the member with the largest ratio at this p.
            double best = -1.0;
            int best_n = n_candidates.front();
            for (int n : n_candidates) {
                const TrigPoly candidate = beta(n);
                const std::size_t m = default_grid_size(candidate.degree(), config.oversample);
                const double denom = lp_norm(synthesize(candidate, m), p);
                const double ratio = lp_norm(op.apply(candidate, m), p) / denom;
                if (ratio > best) {
                    best = ratio;
                    best_n = n;
                }
            }
            f = beta(best_n);
            family_param = best_n;
        }

        const std::size_t m = default_grid_size(f.degree(), config.oversample);
        const double f_norm = lp_norm(synthesize(f, m), p);
        const double tf_norm = lp_norm(op.apply(f, m), p);
        const double ratio = tf_norm / f_norm;
        points.emplace_back(p - 1.0, ratio);

        nlohmann::json row;
        row["p"] = p;
        row["p_minus_1"] = p - 1.0;
        row["family_param"] = family_param;
        row["degree"] = f.degree();
        row["grid"] = m;
        row["f_norm_p"] = f_norm;
        row["tf_norm_p"] = tf_norm;
        row["ratio"] = ratio;
        report.rows.push_back(std::move(row));
    }

    std::vector<std::pair<double, double>> usable;
    for (const auto& pt : points) {
        if (pt.first > 0.0 && pt.second > 0.0) usable.push_back(pt);
    }
    if (usable.size() < 3) throw FitError("growth fit has fewer than 3 usable points");
    const PowerLawFit fit = fit_power_law(usable);
    report.fits["slope"] = fit.slope;
    report.fits["intercept"] = fit.intercept;
    report.fits["residual"] = fit.residual;
    report.fits["points_used"] = usable.size();
    return report;
}

ExperimentReport run_zygmund(const ExperimentConfig& config) {
    std::vector<std::int64_t> ladder = config.m_range;
    if (ladder.empty()) ladder = {64, 128, 256, 512, 1024, 2048, 4096};
    if (ladder.size() < 3) throw ParameterError("zygmund needs at least 3 family sizes");
    const std::string family = config.family_text.empty() ? "dirichlet" : config.family_text;
    const std::string kind = family.substr(0, family.find(':'));
    if (kind != "dirichlet" && kind != "geometric") {
        throw ParameterError("zygmund supports the dirichlet and geometric families");
    }

    ExperimentReport report;
    report.config = config.to_json();
    report.environment = environment_block(config);
    report.columns = {"param", "degree", "grid", "sf_l1",
                      "f_l1", "one_plus_zygmund", "ratio_orlicz", "ratio_l1"};

    double first_orlicz = 0.0;
    double last_orlicz = 0.0;
    double first_l1 = 0.0;
    double last_l1 = 0.0;
    double max_orlicz = 0.0;
    for (std::size_t i = 0; i < ladder.size(); ++i) {
        TrigPoly f;
        double param = 0.0;
        if (kind == "dirichlet") {
            f = dirichlet_analytic(ladder[i]);
            param = static_cast<double>(ladder[i]);
        } else {
            const double rho = 1.0 - 1.0 / static_cast<double>(ladder[i]);
            f = geometric(rho, geometric_degree(rho));
            param = rho;
        }
        const std::size_t m = default_grid_size(f.degree(), config.oversample);
        const GridFunction samples = synthesize(f, m);
        const double sf_l1 = lp_norm(square_function(f, m), 1.0);
        const double f_l1 = lp_norm(samples, 1.0);
        const double denom = 1.0 + zygmund_functional(samples, config.r);
        const double ratio_orlicz = sf_l1 / denom;
        const double ratio_l1 = sf_l1 / f_l1;

        if (i == 0) {
            first_orlicz = ratio_orlicz;
            first_l1 = ratio_l1;
        }
        last_orlicz = ratio_orlicz;
        last_l1 = ratio_l1;
        max_orlicz = std::max(max_orlicz, ratio_orlicz);

        nlohmann::json row;
        row["param"] = param;
        row["degree"] = f.degree();
        row["grid"] = m;
        row["sf_l1"] = sf_l1;
        row["f_l1"] = f_l1;
        row["one_plus_zygmund"] = denom;
        row["ratio_orlicz"] = ratio_orlicz;
        row["ratio_l1"] = ratio_l1;
        report.rows.push_back(std::move(row));
    }

    report.fits["max_ratio_orlicz"] = max_orlicz;
    report.fits["orlicz_last_over_first"] = last_orlicz / first_orlicz;
    report.fits["l1_growth_factor"] = last_l1 / first_l1;
    return report;
}

ExperimentReport run_sharpness(const ExperimentConfig& config) {
    std::vector<int> n_range = config.n_range;
    if (n_range.empty()) n_range = {1, 2, 3, 4, 5, 6, 7, 8};
    for (int n : n_range) {
        if (n < 1 || n > 9) throw ParameterError("sharpness N range must lie in [1, 9]");
    }

    ExperimentReport report;
    report.config = config.to_json();
    report.environment = environment_block(config);
    report.columns = {"N",           "degree",          "grid",        "lux_quarter",
                      "lux_half",    "lux_one",         "tlambda_l1",  "tlambda_l2_exact",
                      "lower_bound", "l2_ok"};

    report.rows.resize(n_range.size());
    parallel_for(n_range.size(), [&](std::size_t i) {
        const int n = n_range[i];
        const TrigPoly b = beta(n);
        const std::size_t m = default_grid_size(b.degree(), config.oversample);
        const GridFunction samples = synthesize(b, m);
        const TrigPoly projected = lacunary_projection(b);

        // Exact by coefficient counting: no grid involved.
        const double l2_exact = projected.coeff_l2();
        const double lower = std::sqrt(static_cast<double>(n) + 1.0);

        nlohmann::json row;
        row["N"] = n;
        row["degree"] = b.degree();
        row["grid"] = m;
        row["lux_quarter"] = luxemburg_norm(samples, OrliczParams{0.25, config.luxemburg_tol});
        row["lux_half"] = luxemburg_norm(samples, OrliczParams{0.5, config.luxemburg_tol});
        row["lux_one"] = luxemburg_norm(samples, OrliczParams{1.0, config.luxemburg_tol});
        row["tlambda_l1"] = lp_norm(synthesize(projected, m), 1.0);
        row["tlambda_l2_exact"] = l2_exact;
        row["lower_bound"] = lower;
        row["l2_ok"] = l2_exact >= lower;
        report.rows[i] = std::move(row);
    });

    std::vector<std::pair<double, double>> l2_points;
    std::vector<std::pair<double, double>> lux_points;
    for (const auto& row : report.rows) {
        const int n = row["N"].get<int>();
        if (n < 3) continue;  // exclude small-N transients from the fits
        l2_points.emplace_back(n, row["tlambda_l2_exact"].get<double>());
        lux_points.emplace_back(n, row["lux_one"].get<double>());
    }
    if (l2_points.size() >= 3) {
        report.fits["l2_exponent"] = fit_power_law(l2_points).slope;
        report.fits["lux_one_exponent"] = fit_power_law(lux_points).slope;
    }
    return report;
}

ExperimentReport run_bonami(const ExperimentConfig& config) {
    std::vector<double> q_grid = config.q_grid;
    if (q_grid.empty()) q_grid = {4.0, 6.0, 8.0};
    for (double q : q_grid) {
        if (!(q > 2.0 && q <= 16.0)) throw ParameterError("bonami q grid must lie in (2, 16]");
    }
    if (config.trials < 100) throw ParameterError("bonami needs at least 100 trials");
    std::vector<std::int64_t> scales = config.freq_scales;
    if (scales.empty()) scales = {729, 19683};

    ExperimentReport report;
    report.config = config.to_json();
    report.environment = environment_block(config);
    report.columns = {"max_freq", "q", "c_max", "equiv_max"};

    for (std::int64_t scale : scales) {
        const std::size_t lambda_size = lambda_set(scale).size();
        const std::size_t count = std::min(config.lambda_count, lambda_size);

        struct TrialResult {
            std::vector<double> q_norms;
            double l2 = 0.0;
            double l1 = 0.0;
        };
        std::vector<TrialResult> results(config.trials);
        parallel_for(config.trials, [&](std::size_t t) {
            const TrigPoly h = random_lambda(
                count, scale, mix_seed(config.seed, static_cast<std::uint64_t>(scale) * 1000003 + t));
            const std::size_t m = default_grid_size(h.degree(), config.oversample);
            const GridFunction samples = synthesize(h, m);
            TrialResult res;
            res.q_norms.reserve(q_grid.size());
            for (double q : q_grid) res.q_norms.push_back(lp_norm(samples, q));
            res.l2 = lp_norm(samples, 2.0);
            res.l1 = lp_norm(samples, 1.0);
            results[t] = std::move(res);
        });

        double equiv_max = 0.0;
        for (const auto& res : results) equiv_max = std::max(equiv_max, res.l2 / res.l1);
        for (std::size_t qi = 0; qi < q_grid.size(); ++qi) {
            double c_max = 0.0;
            for (const auto& res : results) {
                c_max = std::max(c_max, res.q_norms[qi] / (q_grid[qi] * res.l2));
            }
            nlohmann::json row;
            row["max_freq"] = scale;
            row["q"] = q_grid[qi];
            row["c_max"] = c_max;
            row["equiv_max"] = equiv_max;
            report.rows.push_back(std::move(row));
        }
    }

    // Stability of each constant between the first and last frequency scale.
    for (std::size_t qi = 0; qi < q_grid.size(); ++qi) {
        const double first = report.rows[qi]["c_max"].get<double>();
        const double last = report.rows[(scales.size() - 1) * q_grid.size() + qi]["c_max"].get<double>();
        report.fits["c_stability_q" + std::to_string(static_cast<int>(q_grid[qi]))] = last / first;
    }
    const double equiv_first = report.rows.front()["equiv_max"].get<double>();
    const double equiv_last = report.rows.back()["equiv_max"].get<double>();
    report.fits["equiv_stability"] = equiv_last / equiv_first;
    return report;
}

ExperimentReport run_decompose(const ExperimentConfig& config) {
    const TrigPoly f = single_input(config);
    const std::size_t m = default_grid_size(f.degree(), config.oversample);
    const Decomposition d = decompose(f, m);

    ExperimentReport report;
    report.config = config.to_json();
    report.environment = environment_block(config);
    report.columns = {"n", "p_n", "sup", "envelope_bound", "sup_ok", "l1", "pn_norm", "leakage"};

    const auto norms = piecewise_pn_norms(d);
    const auto rows = envelope_report(d);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        nlohmann::json row;
        row["n"] = rows[i].n;
        row["p_n"] = norms[i].p_n;
        row["sup"] = rows[i].measured_sup;
        row["envelope_bound"] = rows[i].bound;
        row["sup_ok"] = rows[i].ok;
        row["l1"] = lp_norm(d.pieces[i].values, 1.0);
        row["pn_norm"] = norms[i].norm;
        row["leakage"] = rows[i].leakage;
        report.rows.push_back(std::move(row));
    }

    report.fits["telescoping_residual"] = telescoping_residual(d);
    report.fits["cutoff"] = d.cutoff;
    report.fits["grid"] = m;
    report.fits["degree"] = f.degree();
    report.fits["sup_norm"] = max_abs(synthesize(f, m));
    return report;
}

ExperimentReport run_trace(const ExperimentConfig& config) {
    const TrigPoly f = single_input(config);
    const OperatorHandle op = configured_operator(config);
    const std::size_t m = default_grid_size(f.degree(), config.oversample);
    const ProofTrace trace = trace_proof(f, op, m);

    ExperimentReport report;
    report.config = config.to_json();
    report.environment = environment_block(config);
    report.columns = {"n",        "p_n",      "piece_sup", "piece_l1", "piece_pn_norm",
                      "interp_rhs", "est2_rhs", "i1",        "i2",       "i1_alpha",
                      "i1_beta",  "bound14",  "bound15",   "op_piece_pn", "model_rhs",
                      "row_ok"};
    for (const auto& row : trace.rows) {
        nlohmann::json r;
        r["n"] = row.n;
        r["p_n"] = row.p_n;
        r["piece_sup"] = row.piece_sup;
        r["piece_l1"] = row.piece_l1;
        r["piece_pn_norm"] = row.piece_pn_norm;
        r["interp_rhs"] = row.interp_rhs;
        r["est2_rhs"] = row.est2_rhs;
        r["i1"] = row.i1;
        r["i2"] = row.i2;
        r["i1_alpha"] = row.i1_alpha;
        r["i1_beta"] = row.i1_beta;
        r["bound14"] = row.bound14;
        r["bound15"] = row.bound15;
        r["op_piece_pn"] = row.op_piece_pn;
        r["model_rhs"] = row.model_rhs;
        r["row_ok"] = row.envelope_ok && row.interp_ok && row.est2_ok && row.split_ok &&
                      row.eq14_ok && row.eq15_ok && row.combine_ok;
        report.rows.push_back(std::move(r));
    }

    report.fits["op_l1"] = trace.op_l1;
    report.fits["step1_rhs"] = trace.step1_rhs;
    report.fits["step1_ok"] = trace.step1_ok;
    report.fits["holder_rhs"] = trace.holder_rhs;
    report.fits["holder_ok"] = trace.holder_ok;
    report.fits["f0_l1"] = trace.f0_l1;
    report.fits["f0_ok"] = trace.f0_ok;
    report.fits["main_lhs"] = trace.main_lhs;
    report.fits["zygmund"] = trace.zygmund;
    report.fits["c12_measured"] = trace.c12_measured;
    report.fits["c12_budget"] = trace.c12_budget;
    report.fits["c12_ok"] = trace.c12_ok;
    report.fits["i1_sum_constant"] = trace.i1_sum_constant;
    report.fits["i2_sum_constant"] = trace.i2_sum_constant;
    report.fits["c0_estimate"] = trace.c0_estimate;
    report.fits["all_rows_ok"] = trace.all_rows_ok();
    report.fits["cutoff"] = trace.cutoff;
    report.fits["grid"] = trace.grid_size;
    return report;
}

ExperimentReport run_orlicz_norm(const ExperimentConfig& config) {
    const TrigPoly f = single_input(config);
    const std::size_t m = default_grid_size(f.degree(), config.oversample);
    const GridFunction samples = synthesize(f, m);

    ExperimentReport report;
    report.config = config.to_json();
    report.environment = environment_block(config);
    report.columns = {"r", "luxemburg_norm", "zygmund_functional", "degree", "grid"};
    nlohmann::json row;
    row["r"] = config.r;
    row["luxemburg_norm"] = luxemburg_norm(samples, OrliczParams{config.r, config.luxemburg_tol});
    row["zygmund_functional"] = zygmund_functional(samples, config.r);
    row["degree"] = f.degree();
    row["grid"] = m;
    report.rows.push_back(std::move(row));
    report.fits = nlohmann::json::object();
    return report;
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
    if (config.experiment == "growth") return run_growth(config);
    if (config.experiment == "zygmund") return run_zygmund(config);
    if (config.experiment == "sharpness") return run_sharpness(config);
    if (config.experiment == "bonami" || config.experiment == "equivalence") {
        return run_bonami(config);
    }
    if (config.experiment == "decompose") return run_decompose(config);
    if (config.experiment == "trace") return run_trace(config);
    if (config.experiment == "orlicz-norm") return run_orlicz_norm(config);
    throw ParameterError("unknown experiment '" + config.experiment + "'");
}

}  // namespace hardy
