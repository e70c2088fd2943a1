#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "hardy/spectral_core.hpp"

namespace hardy {

/// A Fourier multiplier: coefficientwise scaling by rule(n). The rule must be
/// pure and bounded on the window in use.
struct MultiplierSymbol {
    std::string name;
    std::function<Complex(std::int64_t)> rule;
};

/// (m f)_hat(n) = rule(n) f_hat(n).
TrigPoly apply_multiplier(const TrigPoly& f, const MultiplierSymbol& m);

/// Spectral route on a grid: full-band analyze, scale, resynthesize.
/// The Nyquist bin -M/2 is always zeroed.
GridFunction apply_multiplier(const GridFunction& g, const MultiplierSymbol& m);

/// Periodic Hilbert transform, symbol -i sgn(n) with sgn(0) = 0.
TrigPoly hilbert(const TrigPoly& f);
GridFunction hilbert(const GridFunction& g);

/// Projection onto non-negative frequencies (symbol chi_{n >= 0}).
TrigPoly riesz_projection(const TrigPoly& f);

/// Frequency window of the k-th dyadic block: {0} for k = 0,
/// [2^{k-1}, 2^k - 1] for k > 0, mirrored for k < 0.
std::pair<std::int64_t, std::int64_t> dyadic_window(int k);

/// Index k of the block containing frequency n.
int dyadic_index(std::int64_t n);

/// Restriction of f to the k-th dyadic block.
TrigPoly dyadic_block(const TrigPoly& f, int k);

/// Littlewood-Paley square function (sum_k |Delta_k f|^2)^{1/2}, sampled on an
/// M-point grid. Real and nonnegative.
GridFunction square_function(const TrigPoly& f, std::size_t grid_size);

/// The lacunary frequency set {3^k - 3^m : k > m >= 0} up to max_freq, sorted.
std::vector<std::int64_t> lambda_set(std::int64_t max_freq);

/// Projection onto the lacunary set (computed up to deg f).
TrigPoly lacunary_projection(const TrigPoly& f);

}  // namespace hardy
