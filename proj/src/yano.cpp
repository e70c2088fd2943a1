#include "hardy/yano.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hardy/errors.hpp"
#include "hardy/multipliers.hpp"
#include "hardy/orlicz.hpp"

namespace hardy {

namespace {

constexpr double kRelSlack = 1e-9;   // covers FFT rounding in measured inequalities
constexpr double kAbsSlack = 1e-12;

bool leq(double lhs, double rhs) { return lhs <= rhs * (1.0 + kRelSlack) + kAbsSlack; }

}  // namespace

double NormModel::bound(double p) const {
    if (!(p > 1.0)) throw ParameterError("norm model needs p > 1");
    return c0 * std::pow(p - 1.0, -r);
}

double OperatorHandle::r() const {
    if (!norm_model) throw MissingModel("operator '" + name + "' carries no norm model");
    return norm_model->r;
}

bool elementary_inequality_check(double t, int n, double r) {
    if (!(t > 0.0)) throw ParameterError("elementary inequality needs t > 0");
    if (n < 0) throw ParameterError("elementary inequality needs n >= 0");
    if (!(r > 0.0)) throw ParameterError("elementary inequality needs r > 0");
    const double alpha = (n + 1.0) / (n + 2.0);
    return std::pow(t, alpha) <= std::exp(r + 2.0) * t + std::pow(n + 1.0, -(r + 2.0));
}

std::vector<PieceNorm> piecewise_pn_norms(const Decomposition& d) {
    std::vector<PieceNorm> out;
    out.reserve(d.pieces.size());
    for (const auto& piece : d.pieces) {
        const double p_n = 1.0 + 1.0 / (piece.index + 1.0);
        out.push_back({piece.index, p_n, lp_norm(piece.values, p_n)});
    }
    return out;
}

double dyadic_sum_constant(double r, DyadicSumKind which, const std::vector<double>& x_grid) {
    if (!(r > 0.0)) throw ParameterError("dyadic_sum_constant needs r > 0");
    if (x_grid.empty()) throw ParameterError("dyadic_sum_constant needs a nonempty grid");
    double best = 0.0;
    for (double x : x_grid) {
        if (!(x > 0.0)) throw ParameterError("dyadic_sum_constant grid must be positive");
        const int limit = (which == DyadicSumKind::i2 ? 2 : 1) +
                          static_cast<int>(std::floor(std::log2(x + 1.0)));
        double sum = 0.0;
        for (int n = 1; n <= limit; ++n) {
            const double weight = which == DyadicSumKind::i2 ? std::exp2(n) : std::exp2(n / 3.0);
            sum += weight * std::pow(n + 1.0, r);
        }
        if (which == DyadicSumKind::i1) sum *= std::pow(x, 2.0 / 3.0);
        best = std::max(best, sum / (1.0 + x * std::pow(std::log1p(x), r)));
    }
    return best;
}

bool ProofTrace::all_rows_ok() const {
    for (const auto& row : rows) {
        if (!(row.envelope_ok && row.interp_ok && row.est2_ok && row.split_ok && row.eq14_ok &&
              row.eq15_ok && row.combine_ok)) {
            return false;
        }
    }
    return true;
}

ProofTrace trace_proof(const TrigPoly& f, const OperatorHandle& op, std::size_t grid_size) {
    if (!op.norm_model) throw MissingModel("trace_proof needs an operator norm model");
    const NormModel model = *op.norm_model;
    const double r = model.r;

    const Decomposition d = decompose(f, grid_size);
    const GridFunction g = synthesize(f, grid_size);
    const std::size_t size = g.grid_size();

    std::vector<double> abs_f(size);
    for (std::size_t j = 0; j < size; ++j) abs_f[j] = std::abs(g[j]);

    // F_{2^n} samples for every cutoff level, reused by the alpha/beta split.
    std::vector<std::vector<Complex>> big_f(d.pieces.size());
    for (std::size_t n = 0; n < d.pieces.size(); ++n) {
        big_f[n] = detail::cutoff_samples(g, std::exp2(static_cast<int>(n))).big_f;
    }

    ProofTrace trace;
    trace.cutoff = d.cutoff;
    trace.grid_size = size;
    trace.model_c0 = model.c0;
    trace.model_r = r;

    const double inv_m = 1.0 / static_cast<double>(size);
    for (const auto& piece : d.pieces) {
        const int n = piece.index;
        ProofTraceRow row;
        row.n = n;
        row.p_n = 1.0 + 1.0 / (n + 1.0);
        row.piece_sup = piece.sup_bound;
        row.piece_l1 = lp_norm(piece.values, 1.0);
        row.piece_pn_norm = lp_norm(piece.values, row.p_n);

        const double envelope = kPieceEnvelope * std::exp2(n);
        row.envelope_ok = leq(row.piece_sup, envelope);
        row.interp_rhs = std::pow(envelope, 1.0 / (n + 2.0)) *
                         std::pow(row.piece_l1, (n + 1.0) / (n + 2.0));
        row.interp_ok = leq(row.piece_pn_norm, row.interp_rhs);
        row.est2_rhs = kPieceEnvelope * std::exp(r + 2.0) *
                       (row.piece_l1 + std::pow(n + 1.0, -(r + 2.0)));
        row.est2_ok = leq(row.piece_pn_norm, row.est2_rhs);

        if (n == 0) {
            // The small/large split starts at n = 1; the n = 0 row has no
            // threshold and its flags hold vacuously.
            row.split_ok = row.eq14_ok = row.eq15_ok = row.combine_ok = true;
        } else {
            const double threshold = std::exp2(n - 1);
            const double level = std::exp2(n);
            double i1 = 0.0;
            double i2 = 0.0;
            double alpha = 0.0;
            double beta = 0.0;
            double q_n = 0.0;
            double q_nm1 = 0.0;
            for (std::size_t j = 0; j < size; ++j) {
                const double mag = std::abs(piece.values[j]);
                if (abs_f[j] < threshold) {
                    i1 += mag;
                    alpha += std::norm(1.0 - big_f[static_cast<std::size_t>(n)][j]);
                    beta += std::norm(1.0 - big_f[static_cast<std::size_t>(n) - 1][j]);
                } else {
                    i2 += mag;
                    q_nm1 += std::cbrt(abs_f[j] * abs_f[j]);
                    if (abs_f[j] >= level) q_n += std::cbrt(abs_f[j] * abs_f[j]);
                }
            }
            row.i1 = i1 * inv_m;
            row.i2 = i2 * inv_m;
            row.i1_alpha = threshold * alpha * inv_m;
            row.i1_beta = threshold * beta * inv_m;
            row.bound14 = 0.5 * std::exp2(n / 3.0) * q_n * inv_m;
            row.bound15 = 0.5 * std::exp2((n - 1) / 3.0) * q_nm1 * inv_m;
            row.split_ok = std::abs(row.i1 + row.i2 - row.piece_l1) <=
                           1e-12 * (1.0 + row.piece_l1);
            row.eq14_ok = leq(row.i1_alpha, row.bound14);
            row.eq15_ok = leq(row.i1_beta, row.bound15);
            row.combine_ok = leq(row.i1, 64.0 * (row.i1_alpha + row.i1_beta));
        }

        const GridFunction mapped = op.apply(to_poly(piece.values), size);
        row.op_piece_pn = lp_norm(mapped, row.p_n);
        row.model_rhs = model.c0 * std::pow(n + 1.0, r) * row.piece_pn_norm;
        trace.rows.push_back(row);
    }

    trace.op_l1 = lp_norm(op.apply(f, size), 1.0);
    trace.f0_l1 = trace.rows.front().piece_l1;
    trace.f0_ok = leq(trace.f0_l1, kPieceEnvelope);

    double step1 = 0.0;
    double holder = 0.0;
    double main_lhs = 0.0;
    double i1_sum = 0.0;
    double i2_sum = 0.0;
    double c0_estimate = 0.0;
    for (const auto& row : trace.rows) {
        const double weight = std::pow(row.n + 1.0, r);
        step1 += weight * row.piece_pn_norm;
        holder += row.op_piece_pn;
        main_lhs += weight * row.piece_l1;
        i1_sum += weight * row.i1;
        i2_sum += weight * row.i2;
        if (row.piece_pn_norm > 0.0) {
            c0_estimate = std::max(c0_estimate, row.op_piece_pn / (weight * row.piece_pn_norm));
        }
    }
    trace.step1_rhs = model.c0 * step1;
    trace.holder_rhs = holder;
    trace.main_lhs = main_lhs;
    trace.c0_estimate = c0_estimate;
    trace.step1_ok = leq(trace.op_l1, trace.step1_rhs);
    // S is sublinear rather than linear, so the Holder step carries the wider
    // slack used everywhere for sample-level sublinearity.
    trace.holder_ok = trace.op_l1 <= trace.holder_rhs * (1.0 + 1e-6) + kAbsSlack;

    trace.zygmund = zygmund_functional(g, r);
    const double denom = 1.0 + trace.zygmund;
    trace.c12_measured = main_lhs / denom;
    trace.i1_sum_constant = i1_sum / denom;
    trace.i2_sum_constant = i2_sum / denom;

    std::vector<double> positive;
    positive.reserve(size);
    for (double a : abs_f) {
        if (a > 0.0) positive.push_back(a);
    }
    if (positive.empty()) {
        trace.r_i1_samples = 0.0;
        trace.r_i2_samples = 0.0;
    } else {
        trace.r_i1_samples = dyadic_sum_constant(r, DyadicSumKind::i1, positive);
        trace.r_i2_samples = dyadic_sum_constant(r, DyadicSumKind::i2, positive);
    }
    trace.c12_budget = 15.0 + kPieceEnvelope * trace.r_i2_samples +
                       32.0 * (1.0 + std::pow(2.0, r)) * trace.r_i1_samples +
                       32.0 * std::pow(2.0 / std::numbers::ln2, r);
    trace.c12_ok = leq(trace.c12_measured, trace.c12_budget);
    return trace;
}

double extrapolation_ratio(const TrigPoly& f, const OperatorHandle& op, std::size_t grid_size) {
    if (f.is_zero()) throw ZeroFunction("extrapolation_ratio of the zero polynomial");
    const double lux = luxemburg_norm(synthesize(f, grid_size), OrliczParams{op.r()});
    return lp_norm(op.apply(f, grid_size), 1.0) / lux;
}

OperatorHandle compose_with_riesz(const OperatorHandle& op) {
    if (!op.norm_model) throw MissingModel("compose_with_riesz needs a norm model");
    OperatorHandle out;
    out.name = op.name + "_after_riesz";
    auto inner = op.apply;
    out.apply = [inner](const TrigPoly& f, std::size_t grid_size) {
        return inner(riesz_projection(f), grid_size);
    };
    out.norm_model = NormModel{op.norm_model->c0, op.norm_model->r + 1.0};
    return out;
}

OperatorHandle make_operator(const std::string& name, std::optional<NormModel> model) {
    OperatorHandle op;
    op.name = name;
    if (name == "square_function") {
        op.apply = [](const TrigPoly& f, std::size_t m) { return square_function(f, m); };
        op.norm_model = model ? *model : NormModel{4.0, 1.0};
        return op;
    }
    if (name == "lacunary_projection") {
        op.apply = [](const TrigPoly& f, std::size_t m) {
            return synthesize(lacunary_projection(f), m);
        };
        op.norm_model = model ? *model : NormModel{2.0, 0.5};
        return op;
    }
    if (name == "riesz_projection") {
        op.apply = [](const TrigPoly& f, std::size_t m) {
            return synthesize(riesz_projection(f), m);
        };
        op.norm_model = model ? *model : NormModel{2.0, 1.0};
        return op;
    }
    if (name == "hilbert") {
        op.apply = [](const TrigPoly& f, std::size_t m) { return synthesize(hilbert(f), m); };
        op.norm_model = model ? *model : NormModel{2.0, 1.0};
        return op;
    }
    throw ParameterError("unknown operator '" + name + "'");
}

}  // namespace hardy
