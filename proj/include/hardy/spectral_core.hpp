#pragma once

#include <complex>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hardy {

using Complex = std::complex<double>;

/// Sentinel exponent for the sup norm in lp_norm.
inline constexpr double kSupNorm = std::numeric_limits<double>::infinity();

/// Finite table of Fourier coefficients n -> f_hat(n) on Z; zero outside the
/// stored support. Immutable after construction.
class TrigPoly {
public:
    TrigPoly() = default;  // zero polynomial

    /// Builds from (frequency, amplitude) pairs; duplicates are summed,
    /// exact zeros pruned. Non-finite amplitudes are rejected.
    static TrigPoly from_entries(const std::vector<std::pair<std::int64_t, Complex>>& entries);

    Complex coeff(std::int64_t n) const;
    const std::map<std::int64_t, Complex>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    std::int64_t min_freq() const;  // 0 for the zero polynomial
    std::int64_t max_freq() const;
    std::int64_t degree() const;    // max(|min_freq|, |max_freq|)

    /// True when no negative frequency carries a nonzero coefficient.
    bool is_analytic() const;

    /// sqrt(sum |f_hat(n)|^2): the Parseval value of the L2 norm.
    double coeff_l2() const;

private:
    explicit TrigPoly(std::map<std::int64_t, Complex> coeffs) : coeffs_(std::move(coeffs)) {}
    friend TrigPoly poly_add(const TrigPoly&, const TrigPoly&);
    friend TrigPoly poly_scale(const TrigPoly&, Complex);
    friend TrigPoly poly_shift(const TrigPoly&, std::int64_t);
    friend TrigPoly poly_map(const TrigPoly&, const std::map<std::int64_t, Complex>&);

    std::map<std::int64_t, Complex> coeffs_;
};

TrigPoly poly_from_coeffs(const std::vector<std::pair<std::int64_t, Complex>>& entries);
TrigPoly poly_add(const TrigPoly& f, const TrigPoly& g);
TrigPoly poly_scale(const TrigPoly& f, Complex c);
/// Multiplies by e^{i 2 pi shift theta}, i.e. translates every frequency.
TrigPoly poly_shift(const TrigPoly& f, std::int64_t shift);

/// Complex samples on the uniform grid theta_j = j/M, M a power of two >= 2.
/// Samples are validated finite on construction. Immutable.
class GridFunction {
public:
    explicit GridFunction(std::vector<Complex> samples);

    std::size_t grid_size() const { return samples_.size(); }
    const std::vector<Complex>& samples() const { return samples_; }
    const Complex& operator[](std::size_t j) const { return samples_[j]; }

private:
    std::vector<Complex> samples_;
};

/// Inclusive frequency window for analysis.
struct BandSpec {
    std::int64_t n_min;
    std::int64_t n_max;
};

/// Smallest power of two >= oversample * (2 deg + 1), never below 8.
std::size_t default_grid_size(std::int64_t degree, std::size_t oversample = 8);

/// samples[j] = sum_n f_hat(n) e^{i 2 pi n j / M}. Requires M > 2 deg(f).
GridFunction synthesize(const TrigPoly& f, std::size_t grid_size);

/// f_hat(n) = (1/M) sum_j g[j] e^{-i 2 pi n j / M} for n in the band, which
/// must fit inside (-M/2, M/2).
TrigPoly analyze(const GridFunction& g, BandSpec band);

/// analyze over the full usable window [-M/2 + 1, M/2 - 1].
TrigPoly to_poly(const GridFunction& g);

/// ((1/M) sum |g|^p)^{1/p}; p = kSupNorm gives max |g|. Torus mass 1.
double lp_norm(const GridFunction& g, double p);

/// l2 fraction of energy at negative frequencies: how far g is from analytic.
double negative_energy_ratio(const GridFunction& g);

GridFunction grid_add(const GridFunction& g, const GridFunction& h);
GridFunction grid_sub(const GridFunction& g, const GridFunction& h);
GridFunction grid_mul(const GridFunction& g, const GridFunction& h);
GridFunction grid_abs(const GridFunction& g);
GridFunction grid_scale(const GridFunction& g, Complex c);
double max_abs(const GridFunction& g);

/// Reads a coefficient file: one `n,re,im` line per coefficient, `#` starts a
/// comment, blank lines ignored, duplicate frequencies summed.
TrigPoly load_coefficients(const std::string& path);

}  // namespace hardy
