#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hardy/kislyakov.hpp"
#include "hardy/spectral_core.hpp"

namespace hardy {

/// Assumed operator-norm profile C0 (p-1)^{-r} on (1, 2].
struct NormModel {
    double c0 = 1.0;
    double r = 1.0;

    double bound(double p) const;
};

/// A sublinear operator under test: how to apply it, plus the norm model the
/// extrapolation chain treats as its hypothesis.
struct OperatorHandle {
    std::string name;
    std::function<GridFunction(const TrigPoly&, std::size_t grid_size)> apply;
    std::optional<NormModel> norm_model;

    double r() const;  // throws MissingModel when absent
};

/// t^{(n+1)/(n+2)} <= e^{r+2} t + (n+1)^{-(r+2)}, valid for t > 0, n >= 0.
bool elementary_inequality_check(double t, int n, double r);

struct PieceNorm {
    int n = 0;
    double p_n = 0.0;  // 1 + 1/(n+1)
    double norm = 0.0;
};

std::vector<PieceNorm> piecewise_pn_norms(const Decomposition& d);

enum class DyadicSumKind { i1, i2 };

/// Empirical implied constant of the dyadic-sum lemmas: the max over x_grid of
///   i2:  sum_{n=1}^{2+floor(log2(x+1))} 2^n (n+1)^r
///   i1:  x^{2/3} sum_{n=1}^{1+floor(log2(x+1))} 2^{n/3} (n+1)^r
/// divided by 1 + x log^r(1+x).
double dyadic_sum_constant(double r, DyadicSumKind which, const std::vector<double>& x_grid);

/// Per-piece record of every inequality in the chain. The alpha/beta terms are
/// the two halves of the small-set integral I_n^{(1)}:
///   alpha uses the cutoff at 2^n and is controlled on {|f| >= 2^n};
///   beta uses the cutoff at 2^{n-1} and is controlled on {|f| >= 2^{n-1}}.
struct ProofTraceRow {
    int n = 0;
    double p_n = 0.0;
    double piece_sup = 0.0;
    double piece_l1 = 0.0;
    double piece_pn_norm = 0.0;

    double interp_rhs = 0.0;  // (22.5 2^n)^{1/(n+2)} ||f~_n||_1^{(n+1)/(n+2)}
    double est2_rhs = 0.0;    // 22.5 e^{r+2} (||f~_n||_1 + (n+1)^{-(r+2)})

    double i1 = 0.0;        // integral of |f~_n| over {|f| < 2^{n-1}}   (n >= 1)
    double i2 = 0.0;        // integral of |f~_n| over {|f| >= 2^{n-1}}  (n >= 1)
    double i1_alpha = 0.0;  // 2^{n-1} int_{|f| < 2^{n-1}} |1 - F_{2^n}|^2
    double i1_beta = 0.0;   // 2^{n-1} int_{|f| < 2^{n-1}} |1 - F_{2^{n-1}}|^2
    double bound14 = 0.0;   // 0.5 2^{n/3}     int_{|f| >= 2^n}     |f|^{2/3}
    double bound15 = 0.0;   // 0.5 2^{(n-1)/3} int_{|f| >= 2^{n-1}} |f|^{2/3}

    double op_piece_pn = 0.0;  // ||T f~_n||_{p_n}
    double model_rhs = 0.0;    // C0 (n+1)^r ||f~_n||_{p_n}

    bool envelope_ok = false;  // ||f~_n||_inf <= 22.5 2^n
    bool interp_ok = false;
    bool est2_ok = false;
    bool split_ok = false;  // i1 + i2 == ||f~_n||_1
    bool eq14_ok = false;   // i1_alpha <= bound14
    bool eq15_ok = false;   // i1_beta  <= bound15
    bool combine_ok = false;  // i1 <= 64 (i1_alpha + i1_beta)
};

struct ProofTrace {
    std::vector<ProofTraceRow> rows;
    int cutoff = 0;
    std::size_t grid_size = 0;
    double model_c0 = 0.0;
    double model_r = 0.0;

    double op_l1 = 0.0;       // ||T f||_1
    double step1_rhs = 0.0;   // C0 sum (n+1)^r ||f~_n||_{p_n}
    double holder_rhs = 0.0;  // sum ||T f~_n||_{p_n}
    double f0_l1 = 0.0;

    double main_lhs = 0.0;       // sum (n+1)^r ||f~_n||_1
    double zygmund = 0.0;        // int |f| log^r(1+|f|)
    double c12_measured = 0.0;   // main_lhs / (1 + zygmund)
    double c12_budget = 0.0;     // 15 + 22.5 R2 + 32 (1+2^r) R1 + 32 (2/log 2)^r
    double r_i1_samples = 0.0;   // dyadic i1 constant evaluated at the |f| samples
    double r_i2_samples = 0.0;   // dyadic i2 constant evaluated at the |f| samples
    double i1_sum_constant = 0.0;  // sum (n+1)^r I_n^{(1)} / (1 + zygmund)
    double i2_sum_constant = 0.0;  // sum (n+1)^r I_n^{(2)} / (1 + zygmund)

    double c0_estimate = 0.0;  // max_n ||T f~_n||_{p_n} / ((n+1)^r ||f~_n||_{p_n})

    bool step1_ok = false;   // op_l1 <= step1_rhs
    bool holder_ok = false;  // op_l1 <= holder_rhs (sublinearity + Holder)
    bool f0_ok = false;      // f0_l1 <= 22.5
    bool c12_ok = false;     // c12_measured <= c12_budget

    bool all_rows_ok() const;
};

/// Runs the full chain for one analytic polynomial and one operator with a
/// norm model; measures both sides of every inequality.
ProofTrace trace_proof(const TrigPoly& f, const OperatorHandle& op, std::size_t grid_size);

/// ||T f||_1 / ||f||_{L log^r L}: the empirical endpoint constant.
double extrapolation_ratio(const TrigPoly& f, const OperatorHandle& op, std::size_t grid_size);

/// Precompose with the Riesz projection; the model exponent rises to r + 1.
OperatorHandle compose_with_riesz(const OperatorHandle& op);

/// Operators known to the CLI: square_function, lacunary_projection,
/// riesz_projection, hilbert. Default models carry measured-safe constants.
OperatorHandle make_operator(const std::string& name, std::optional<NormModel> model = {});

}  // namespace hardy
