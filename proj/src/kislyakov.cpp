#include "hardy/kislyakov.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "hardy/errors.hpp"
#include "hardy/multipliers.hpp"

namespace hardy {

GridFunction a_lambda(const GridFunction& abs_f, double lambda) {
    if (!(lambda > 0.0)) throw ParameterError("a_lambda requires lambda > 0");
    std::vector<Complex> out(abs_f.grid_size());
    for (std::size_t j = 0; j < out.size(); ++j) {
        const Complex z = abs_f[j];
        if (z.imag() != 0.0 || z.real() < 0.0) {
            throw InvalidInput("a_lambda input must be real and nonnegative");
        }
        out[j] = Complex(std::max(1.0, std::cbrt(z.real() / lambda)), 0.0);
    }
    return GridFunction(std::move(out));
}

namespace detail {

CutoffSamples cutoff_samples(const GridFunction& f_samples, double lambda) {
    if (!(lambda > 0.0)) throw ParameterError("cutoff requires lambda > 0");
    const std::size_t size = f_samples.grid_size();

    CutoffSamples cs;
    cs.a.resize(size);
    for (std::size_t j = 0; j < size; ++j) {
        cs.a[j] = std::max(1.0, std::cbrt(std::abs(f_samples[j]) / lambda));
    }

    std::vector<Complex> a_complex(size);
    for (std::size_t j = 0; j < size; ++j) a_complex[j] = Complex(cs.a[j], 0.0);
    const GridFunction ha = hilbert(GridFunction(std::move(a_complex)));
    cs.h.resize(size);
    // H of a real function is real; the imaginary remnant is FFT rounding.
    for (std::size_t j = 0; j < size; ++j) cs.h[j] = ha[j].real();

    cs.big_f.resize(size);
    cs.big_g.resize(size);
    for (std::size_t j = 0; j < size; ++j) {
        const Complex den(cs.a[j], cs.h[j]);
        if (std::abs(den) < 1.0 - 1e-12) {
            throw NumericalConsistencyError(
                "cutoff denominator fell below 1 (|den| = " + std::to_string(std::abs(den)) +
                "); the grid is inconsistent");
        }
        const Complex f_val = 1.0 / den;
        const Complex w = f_val * f_val * f_val * f_val;
        const Complex one_minus_w = 1.0 - w;
        const Complex p2 = one_minus_w * one_minus_w;
        cs.big_f[j] = f_val;
        cs.big_g[j] = 1.0 - p2 * p2;
    }
    return cs;
}

}  // namespace detail

GridFunction f_lambda(const TrigPoly& f, double lambda, std::size_t grid_size) {
    const auto cs = detail::cutoff_samples(synthesize(f, grid_size), lambda);
    return GridFunction(std::vector<Complex>(cs.big_f));
}

GridFunction g_lambda(const TrigPoly& f, double lambda, std::size_t grid_size) {
    const auto cs = detail::cutoff_samples(synthesize(f, grid_size), lambda);
    return GridFunction(std::vector<Complex>(cs.big_g));
}

Decomposition decompose(const TrigPoly& f, std::size_t grid_size) {
    if (!f.is_analytic()) {
        throw NotAnalytic("decompose requires an analytic polynomial; found frequency " +
                          std::to_string(f.min_freq()));
    }
    const GridFunction g = synthesize(f, grid_size);
    const double sup = max_abs(g);

    int cutoff = 0;
    while (std::exp2(cutoff) < sup) ++cutoff;  // minimal N with 2^N >= sup

    Decomposition d;
    d.cutoff = cutoff;
    d.grid_size = grid_size;
    d.source = f;
    d.pieces.reserve(static_cast<std::size_t>(cutoff) + 1);

    std::vector<Complex> prev_g;  // G_{2^{n-1}} samples
    for (int n = 0; n <= cutoff; ++n) {
        const auto cs = detail::cutoff_samples(g, std::exp2(n));
        std::vector<Complex> piece(grid_size, Complex(0.0, 0.0));
        for (std::size_t j = 0; j < grid_size; ++j) {
            const Complex factor = n == 0 ? cs.big_g[j] : cs.big_g[j] - prev_g[j];
            piece[j] = factor * g[j];
        }
        prev_g = cs.big_g;

        DecompositionPiece p{n, GridFunction(std::move(piece)), 0.0, 0.0};
        p.sup_bound = max_abs(p.values);
        p.leakage = p.sup_bound == 0.0 ? 0.0 : negative_energy_ratio(p.values);
        d.pieces.push_back(std::move(p));
    }
    return d;
}

GridFunction sum_pieces(const Decomposition& d) {
    std::vector<Complex> acc(d.grid_size, Complex(0.0, 0.0));
    for (const auto& piece : d.pieces) {
        for (std::size_t j = 0; j < d.grid_size; ++j) acc[j] += piece.values[j];
    }
    return GridFunction(std::move(acc));
}

double telescoping_residual(const Decomposition& d) {
    const GridFunction reference = synthesize(d.source, d.grid_size);
    const GridFunction total = sum_pieces(d);
    double worst = 0.0;
    for (std::size_t j = 0; j < d.grid_size; ++j) {
        worst = std::max(worst, std::abs(total[j] - reference[j]));
    }
    return worst;
}

std::vector<EnvelopeRow> envelope_report(const Decomposition& d) {
    std::vector<EnvelopeRow> rows;
    rows.reserve(d.pieces.size());
    for (const auto& piece : d.pieces) {
        EnvelopeRow row;
        row.n = piece.index;
        row.measured_sup = piece.sup_bound;
        row.bound = kPieceEnvelope * std::exp2(piece.index);
        row.leakage = piece.leakage;
        row.ok = row.measured_sup <= row.bound;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace hardy
