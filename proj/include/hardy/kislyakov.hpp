#pragma once

#include <cstddef>
#include <vector>

#include "hardy/spectral_core.hpp"

namespace hardy {

/// Envelope constant of the cutoff: |G_lambda| <= 15 min{1, lambda/|f|}.
/// From G = w sum_{i<4} (1-w)^i with w = F^4, |F| <= 1.
inline constexpr double kCutoffEnvelope = 15.0;

/// Envelope constant of the pieces: |f~_n| <= 22.5 * 2^n
/// (= 15 * 2^n + 15 * 2^{n-1} from the two cutoffs).
inline constexpr double kPieceEnvelope = 22.5;

/// a_lambda = max{1, (|f|/lambda)^{1/3}} from samples of |f|. Input must be
/// real and nonnegative.
GridFunction a_lambda(const GridFunction& abs_f, double lambda);

/// F_lambda = 1 / (a_lambda + i H(a_lambda)), computed on an M-point grid.
/// |F_lambda| <= 1 everywhere since Re of the denominator is a_lambda >= 1.
GridFunction f_lambda(const TrigPoly& f, double lambda, std::size_t grid_size);

/// G_lambda = 1 - (1 - F_lambda^4)^4.
GridFunction g_lambda(const TrigPoly& f, double lambda, std::size_t grid_size);

struct DecompositionPiece {
    int index = 0;
    GridFunction values;
    double sup_bound = 0.0;  // measured max |f~_n|
    double leakage = 0.0;    // negative_energy_ratio of the piece (0 if piece is 0)
};

/// f~_0 = G_1 f, f~_n = (G_{2^n} - G_{2^{n-1}}) f for n = 1..N, where N is
/// minimal with 2^N >= max |f| on the grid; their sum telescopes back to f.
struct Decomposition {
    std::vector<DecompositionPiece> pieces;
    int cutoff = 0;
    std::size_t grid_size = 0;
    TrigPoly source;
};

/// Requires an analytic f. Grid must satisfy the synthesize constraints.
Decomposition decompose(const TrigPoly& f, std::size_t grid_size);

/// Pointwise sum of all pieces (for telescoping checks).
GridFunction sum_pieces(const Decomposition& d);

/// Largest |sum of pieces - f| over the grid.
double telescoping_residual(const Decomposition& d);

struct EnvelopeRow {
    int n = 0;
    double measured_sup = 0.0;
    double bound = 0.0;  // 22.5 * 2^n
    double leakage = 0.0;
    bool ok = false;
};

std::vector<EnvelopeRow> envelope_report(const Decomposition& d);

namespace detail {

/// Cutoff built directly from samples of f (shared by f_lambda/g_lambda and
/// decompose, so all consumers see the same spectral route).
struct CutoffSamples {
    std::vector<double> a;       // a_lambda
    std::vector<double> h;       // H(a_lambda), real part of the spectral route
    std::vector<Complex> big_f;  // F_lambda
    std::vector<Complex> big_g;  // G_lambda
};

CutoffSamples cutoff_samples(const GridFunction& f_samples, double lambda);

}  // namespace detail

}  // namespace hardy
